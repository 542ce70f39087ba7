#include "common.hpp"

using namespace testing;

TEST_CASE("tau values") {
    const Ordering cmv(1, 1);
    for (int l = 0; l <= 5; ++l) CHECK(rel_err(tau(Measure::lebesgue(), cmv, {}, l), std::pow(2 * pi, l)) < 1e-14);
    CHECK(std::abs(tau(Measure::trig_poly(0.5), cmv, {}, 2) - 4 * pi * pi * (1 - 1.0 / 16)) < 1e-12);
    DeformationTimes t;
    t.t1 = {0.05};
    t.t2 = {cplx(0.02, 0.01)};
    for (int l = 1; l <= 6; ++l) {
        const cplx a = tau(Measure::exp_cos(), cmv, {}, l);
        const cplx b = tau(Measure::exp_cos(), cmv, t, l);
        CHECK(std::abs(a - oracle::expcos_tau[l - 1]) / std::abs(oracle::expcos_tau[l - 1]) < 1e-12);
        CHECK(std::abs(b - oracle::expcos_tau_t[l - 1]) / std::abs(oracle::expcos_tau_t[l - 1]) < 1e-12);
    }
}

TEST_CASE("pivots and translations") {
    DeformationTimes t, s;
    t.t1 = {0.05};
    s.t1 = {0.02};
    s.t2 = {cplx(0.01, 0.01)};
    for (const Ordering& ord : orderings) {
        CHECK(pivot_residual(Measure::exp_cos(), ord, t, 8) < 1e-9);
        CHECK(pivot_residual(complex_test_measure(), ord, s, 8) < 1e-9);
        CHECK(translation_residual(Measure::exp_cos(), ord, t, s, 8) < 1e-9);
    }
}

TEST_CASE("associated minors") {
    const Ordering cmv(1, 1);
    const Mat g = build_moments(Measure::lebesgue(), cmv, 8);
    // l = 3: deleting column l_{-2} = 3 leaves a diagonal minor, l = 4 leaves a zero column
    CHECK(std::abs(tau_assoc_from(g, cmv, 3, 1, AssocSign::minus, 2) - std::pow(2 * pi, 3)) < 1e-10);
    CHECK(std::abs(tau_assoc_from(g, cmv, 4, 1, AssocSign::minus, 2)) < 1e-10);
    CHECK(std::abs(tau_assoc_from(g, cmv, 4, 1, AssocSign::minus, 1) - std::pow(2 * pi, 4)) < 1e-9);
    const Mat gt = build_moments(Measure::trig_poly(0.5), cmv, 8);
    // rows {0, 1}, last column replaced by index 1_{+1} = 2
    CHECK(std::abs(minor_det(gt, {0, 1}, {0, 2}) - (2 * pi * 0.0 - pi / 2 * pi / 2)) < 1e-12);
}

TEST_CASE("Miwa shifts") {
    const Measure leb = Measure::lebesgue();
    const Measure a = apply_miwa(leb, MiwaShift::minus_z_1, 0.5);
    CHECK(std::abs(a.coeff(1) + 0.5) < 1e-15);
    CHECK(std::abs(a.coeff(0) - 1.0) < 1e-15);
    const Measure b = apply_miwa(apply_miwa(Measure::exp_cos(), MiwaShift::plus_zinv_1, 2.5), MiwaShift::minus_zinv_1,
                                 2.5);
    for (int n = -6; n <= 6; ++n) CHECK(std::abs(b.coeff(n) - Measure::exp_cos().coeff(n)) < 1e-13);
}

TEST_CASE("tau representation of the polynomials") {
    const Ordering cmv(1, 1);
    CHECK(tau_poly_residual(Measure::lebesgue(), cmv, {}, 2, 2.0) < 1e-10);
    CHECK(tau_poly_residual(Measure::trig_poly(0.5), cmv, {}, 2, 3.0) < 1e-8);
    DeformationTimes t;
    t.t1 = {0.05};
    CHECK(tau_poly_residual(Measure::exp_cos(), cmv, t, 4, 0.4) < 1e-8);
    PointSampler ps(19);
    const auto zs = tau_points(ps, 6);
    for (const Ordering& ord : orderings)
        for (int l = ord.period(); l <= 8; ++l)
            for (cplx z : zs) CHECK(tau_poly_residual(complex_test_measure(), ord, t, l, z) < 1e-8);
}

TEST_CASE("tau representation of second-kind functions") {
    const Ordering cmv(1, 1);
    CHECK(tau_second_kind_residual(Measure::lebesgue(), cmv, {}, 2, 2.0) < 1e-9);
    CHECK(tau_second_kind_residual(Measure::exp_cos(), cmv, {}, 2, 1.5) < 1e-6);
    CHECK(tau_second_kind_residual(Measure::exp_cos(), cmv, {}, 2, 0.8) < 1e-6);
}

TEST_CASE("bilinear identities") {
    CHECK(bilinear_residual(Measure::lebesgue(), Ordering(1, 1), {}, {}, 0, 0, 0.5, 2.0, 1024) < 1e-10);
    DeformationTimes t, tp;
    t.t1 = {0.05};
    tp.t2 = {0.03};
    for (const Ordering& ord : orderings) {
        CHECK(bilinear_residual(Measure::exp_cos(), ord, {}, {}, 2, 1) < 1e-6);
        CHECK(bilinear_residual(Measure::exp_cos(), ord, t, tp, 2, 2) < 1e-6);
        CHECK(wave_bilinear_report(Measure::exp_cos(), ord, t, tp, 2, 2).residual < 1e-6);
    }
}

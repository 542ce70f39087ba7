#include "common.hpp"

using namespace testing;

TEST_CASE("Lebesgue kernel values") {
    const Ordering cmv(1, 1);
    const Measure m = Measure::lebesgue();
    const GaussBorelFactors gb = factorize(m, cmv, 8);
    CHECK(std::abs(kernel_sum(gb, cmv, 1, cplx(0.3, 0.2), cplx(1.4, -0.1)) - 1 / (2 * pi)) < 1e-15);
    CHECK(std::abs(kernel_sum(gb, cmv, 3, 1.0, 1.0) - 3 / (2 * pi)) < 1e-15);
    const cplx z(1.2, 0.4), zp(0.5, 0.1);
    const cplx want = (1.0 + 1.0 / (std::conj(z) * zp)) / (2 * pi);
    CHECK(std::abs(kernel_abc(build_moments(m, cmv, 8), cmv, 2, z, zp) - want) < 1e-15);
    const AssociatedPolys as = associated(build_moments(m, cmv, 8), cmv, 2, AssocMethod::linear_solve);
    CHECK(std::abs(cd_formula(as, 2.0, cplx(0.5, 0.1)) - kernel_abc(build_moments(m, cmv, 8), cmv, 2, 2.0,
                                                                      cplx(0.5, 0.1))) < 1e-14);
}

TEST_CASE("trig_poly 2x2 kernel by hand") {
    const Ordering cmv(1, 1);
    const Mat g = build_moments(Measure::trig_poly(0.5), cmv, 4);
    const cplx z = 2.0, zp = 0.5;
    // chi = (1, 1/z); inverse of [[2pi, pi/2], [pi/2, 2pi]]
    const double d = 4 * pi * pi - pi * pi / 4;
    const cplx a = 1.0, b = 1.0 / std::conj(z), c = 1.0, dd = 1.0 / zp;
    const cplx want = (a * (2 * pi) * c - a * (pi / 2) * dd - b * (pi / 2) * c + b * (2 * pi) * dd) / d;
    CHECK(std::abs(kernel_abc(g, cmv, 2, z, zp) - want) < 1e-15);
}

TEST_CASE("oracle kernel value") {
    const Ordering cmv(1, 1);
    const Measure m = Measure::exp_cos();
    const Mat g = build_moments(m, cmv, 10);
    const GaussBorelFactors gb = gauss_borel(g);
    const cplx z(0.7, 0.1), zp(1.3, -0.2);
    const cplx o = oracle::expcos_cd_l6[0];
    CHECK(std::abs(kernel_abc(g, cmv, 6, z, zp) - o) / std::abs(o) < 1e-12);
    CHECK(std::abs(kernel_sum(gb, cmv, 6, z, zp) - o) / std::abs(o) < 1e-10);
    CHECK(std::abs(cd_formula(associated(g, cmv, 6, AssocMethod::linear_solve), z, zp) - o) / std::abs(o) < 1e-10);
}

TEST_CASE("triple equality") {
    PointSampler ps(3);
    const auto pairs = cd_pairs(ps, 30);
    for (const Ordering& ord : orderings) {
        for (const Measure& m : {Measure::exp_cos(), complex_test_measure()}) {
            const Mat g = build_moments(m, ord, 16);
            const CDTriple r = cd_triple_residual(g, gauss_borel(g), ord, 10, pairs);
            CHECK(r.abc < 1e-9);
            CHECK(r.cd < 1e-9);
        }
    }
}

TEST_CASE("diagonal is degenerate") {
    const Ordering cmv(1, 1);
    const AssociatedPolys as = associated(build_moments(Measure::exp_cos(), cmv, 8), cmv, 4, AssocMethod::linear_solve);
    CHECK_THROWS_AS(cd_formula(as, std::polar(1.0, 0.4), std::polar(1.0, 0.4)), Error);
}

TEST_CASE("associated polynomial forms") {
    const Ordering cmv(1, 1);
    const Mat gl = build_moments(Measure::lebesgue(), cmv, 8);
    // Lebesgue, l even: phi_{1,-2}^{(l-1)} = z^{J(l-1)} / (2 pi)
    const LaurentPoly p = associated_poly(gl, cmv, 3, 1, AssocSign::minus, 2, AssocMethod::linear_solve);
    CHECK(max_coeff_diff(p, LaurentPoly::monomial(cmv.exponent(3), 1 / (2 * pi))) < 1e-15);
    for (const Ordering& ord : orderings) {
        const Mat g = build_moments(complex_test_measure(), ord, 16);
        CHECK(associated_forms_residual(g, gauss_borel(g), ord, 10) < 1e-9);
    }
}

TEST_CASE("reproducing property") {
    PointSampler ps(5);
    const auto pairs = cd_pairs(ps, 5);
    for (const Ordering& ord : orderings) {
        const Measure m = Measure::trig_poly(0.5);
        CHECK(reproducing_residual(m, factorize(m, ord, 14), ord, 10, pairs, 4096) < 1e-8);
    }
}

TEST_CASE("projection") {
    const Ordering cmv(1, 1);
    const Measure leb = Measure::lebesgue();
    const LaurentPoly z2 = LaurentPoly::monomial(2);
    CHECK(project(leb, factorize(leb, cmv, 8), cmv, 3, z2).max_abs() < 1e-15);

    const Ordering o31(3, 1);
    CHECK(window(o31, 3) == std::pair<int, int>(0, 2));
    const LaurentPoly f({{2, 1.0}, {3, 1.0}});
    const LaurentPoly pf = project(leb, factorize(leb, o31, 8), o31, 3, f);
    CHECK(max_coeff_diff(pf, z2) < 1e-15);

    const Measure m = Measure::exp_cos();
    const GaussBorelFactors gb = factorize(m, cmv, 10);
    const LaurentPoly inside({{-1, cplx(0.5, 1.0)}, {0, 2.0}, {1, -1.0}});
    CHECK(max_coeff_diff(project(m, gb, cmv, 3, inside), inside) < 1e-10);

    for (const Ordering& ord : orderings) {
        const GaussBorelFactors g = factorize(m, ord, 16);
        const ProjectionReport r = projection_report(m, g, ord, 2 * ord.period(), f * LaurentPoly::monomial(-4));
        CHECK(r.outside < 1e-12);
        CHECK(r.idempotence < 1e-9);
    }
}

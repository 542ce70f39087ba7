#include "common.hpp"

using namespace testing;

TEST_CASE("Lebesgue C2 at l = 0") {
    const Ordering cmv(1, 1);
    const Measure m = Measure::lebesgue();
    const GaussBorelFactors gb = factorize(m, cmv, 8);
    CHECK(std::abs(second_kind(m, gb, cmv, 0, SecondKind::C2, 2.0) - pi) < 1e-15);
}

TEST_CASE("C1 closed form for exp_cos") {
    const Ordering cmv(1, 1);
    const Measure m = Measure::exp_cos();
    const GaussBorelFactors gb = factorize(m, cmv, 10);
    for (int l = 0; l < 5; ++l) {
        const cplx a = second_kind(m, gb, cmv, l, SecondKind::C1, 1.5);
        const cplx b = second_kind(m, gb, cmv, l, SecondKind::C1, 0.6);
        CHECK(std::abs(a - oracle::expcos_C1_z15[l]) / std::abs(oracle::expcos_C1_z15[l]) < 1e-10);
        CHECK(std::abs(b - oracle::expcos_C1_z06[l]) / std::abs(oracle::expcos_C1_z06[l]) < 1e-10);
    }
}

TEST_CASE("series and Cauchy forms") {
    const Ordering cmv(1, 1);
    const Measure m = Measure::exp_cos();
    const GaussBorelFactors gb = factorize(m, cmv, 10);
    const cplx s = second_kind(m, gb, cmv, 2, SecondKind::C21, 1.5);
    const cplx c = second_kind(m, gb, cmv, 2, SecondKind::C21, 1.5, SKMethod::cauchy, 4096);
    CHECK(std::abs(s - c) < 1e-8);
    CHECK_THROWS_AS(second_kind(m, gb, cmv, 2, SecondKind::C21, 1.01, SKMethod::cauchy, 4096), Error);
}

TEST_CASE("Gamma at level 0") {
    const Measure m = Measure::exp_cos();
    for (const Ordering& ord : orderings) {
        const cplx z(0.7, 0.4);
        for (int j = 0; j < 4; ++j) {
            const cplx want = 2 * pi * std::pow(z, -ord.exponent(j) - 1) * eval_fseries(m, 1.0 / z);
            CHECK(rel_err(gamma_eval(m, ord, 0, j, 1, z), want) < 1e-13);
        }
    }
}

TEST_CASE("region of convergence") {
    CHECK(second_kind_region(Measure::exp_cos(), SecondKind::C1).r_minus == 0.0);
    const Measure miwa = miwa_shift(Measure::exp_cos(), 2.0, MiwaWhich::plus1);
    CHECK(second_kind_region(miwa, SecondKind::C2).r_minus == doctest::Approx(0.5));
    const Ordering cmv(1, 1);
    const GaussBorelFactors gb = factorize(miwa, cmv, 8);
    CHECK_THROWS_AS(second_kind(miwa, gb, cmv, 1, SecondKind::C2, 0.3), Error);
}

TEST_CASE("method agreement and additivity") {
    for (const Ordering& ord : orderings) {
        for (const Measure& m : {Measure::exp_cos(), complex_test_measure()}) {
            PointSampler ps(11);
            const GaussBorelFactors gb = factorize(m, ord, 14);
            CHECK(second_kind_method_residual(m, gb, ord, 6, ps, 6, 4096) < 1e-7);
            CHECK(second_kind_additivity_residual(m, gb, ord, 6, ps, 6) < 1e-8);
            CHECK(geronimus_residual(m, gb, ord, 6, ps, 6, 4096) < 1e-8);
        }
    }
}

TEST_CASE("summation rule") {
    const cplx z(2.5, 0.3), zp(0.15, -0.05);
    CHECK(std::abs(summation_limit(1, 1, z, zp) - 1.0 / (z - zp)) < 1e-15);
    CHECK(summation_limit(1, 2, z, zp) == cplx(0.0));
    for (const Ordering& ord : orderings) {
        const Measure m = Measure::exp_cos();
        PointSampler ps(13);
        const SummationReport r = summation_report(m, factorize(m, ord, 16), ord, 12, ps, 4);
        CHECK(r.direct < 1e-4);
        CHECK(r.cross < 1e-4);
        CHECK(r.monotone);
    }
}

#include "common.hpp"

using namespace testing;

TEST_CASE("Lebesgue operator is the shift") {
    for (const Ordering& ord : orderings) {
        const GaussBorelFactors gb = factorize(Measure::lebesgue(), ord, 12);
        const Mat ups = build_upsilon(ord, 12);
        CHECK((jacobi_dressed(gb, ups, 1) - ups).cwiseAbs().maxCoeff() < 1e-15);
        CHECK(recursion_residual(gb, ord, cplx(0.8, 0.3), 3) < 1e-15);
    }
    const Ordering cmv(1, 1);
    const VerblunskyData v = verblunsky(factorize(Measure::lebesgue(), cmv, 12), cmv);
    const Mat je = jacobi_explicit_cmv(v, 12);
    const int t = trusted_size(cmv, 12);
    CHECK((je - build_upsilon(cmv, 12)).topLeftCorner(t, t).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("both dressings agree") {
    const Ordering cmv(1, 1);
    const GaussBorelFactors gb = factorize(Measure::exp_cos(), cmv, 16);
    const Mat ups = build_upsilon(cmv, 16);
    const int t = trusted_size(cmv, 16);
    const Mat d = jacobi_dressed(gb, ups, 1) - jacobi_dressed(gb, ups, 2);
    CHECK(d.topLeftCorner(t, t).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("band widths") {
    for (const Ordering& ord : orderings) {
        const GaussBorelFactors gb = factorize(Measure::trig_poly(0.5), ord, 18);
        const BandReport b = band_check(jacobi_dressed(gb, build_upsilon(ord, 18), 1), ord);
        CHECK(b.lower == ord.n_plus + 1);
        CHECK(b.upper == ord.n_minus + 1);
        CHECK(b.diagonals() == ord.period() + 3);
        CHECK(b.outside < 1e-11);
        CHECK(band_residual(factorize(complex_test_measure(), ord, 18), ord) < 1e-11);
    }
}

TEST_CASE("explicit CMV entries") {
    const Ordering cmv(1, 1);
    for (const Measure& m : {Measure::trig_poly(0.5), Measure::exp_cos()}) {
        const GaussBorelFactors gb = factorize(m, cmv, 16);
        const VerblunskyData v = verblunsky(gb, cmv);
        const Mat jd = jacobi_dressed(gb, build_upsilon(cmv, 16), 1);
        const Mat je = jacobi_explicit_cmv(v, 16);
        const int t = trusted_size(cmv, 16);
        CHECK((jd - je).topLeftCorner(t, t).cwiseAbs().maxCoeff() < 1e-9);
        CHECK(std::abs(je(0, 1) + v.alpha1[2]) < 1e-15);
        CHECK(std::abs(je(0, 2) - 1.0) < 1e-15);
        const Mat jdi = jacobi_inverse_dressed(gb, build_upsilon(cmv, 16));
        CHECK((jdi - jacobi_inverse_explicit_cmv(v, 16)).topLeftCorner(t, t).cwiseAbs().maxCoeff() < 1e-9);
    }
    CHECK_THROWS_AS(jacobi_explicit_cmv(VerblunskyData{}, 8, Ordering(2, 1)), Error);
}

TEST_CASE("eigenvalue relation") {
    PointSampler ps(7);
    const auto zs = ps.annulus(0.5, 2.0, 20);
    for (const Ordering& ord : orderings) {
        CHECK(eigen_relation_residual(factorize(Measure::exp_cos(), ord, 16), ord, zs) < 1e-9);
        CHECK(eigen_relation_residual(factorize(complex_test_measure(), ord, 16), ord, zs) < 1e-9);
    }
    const Ordering cmv(1, 1);
    const GaussBorelFactors gt = factorize(Measure::trig_poly(0.5), cmv, 12);
    const VerblunskyData vt = verblunsky(gt, cmv);
    CHECK(explicit_recursion_residual(gt, vt, std::polar(0.8, 0.3), 0) < 1e-10);
    const GaussBorelFactors ge = factorize(Measure::exp_cos(), cmv, 16);
    for (int l = 0; l < trusted_size(cmv, 16); ++l) CHECK(recursion_residual(ge, cmv, std::polar(0.8, 0.3), l) < 1e-9);
}

#include "common.hpp"

using namespace testing;

TEST_CASE("Lebesgue operators") {
    const Ordering cmv(1, 1);
    const GaussBorelFactors gb = factorize(Measure::lebesgue(), cmv, 10);
    const Mat ups = build_upsilon(cmv, 10);
    const LaxZS lz = lax_and_zs(gb, ups, 2);
    CHECK((lz.lax.L1 - ups).cwiseAbs().maxCoeff() == 0.0);
    CHECK((lz.B1[0] - upper_part(ups)).cwiseAbs().maxCoeff() == 0.0);
    const Mat b12 = lax_and_zs(factorize(Measure::trig_poly(0.5), cmv, 10), ups, 2).B1[1];
    CHECK(strictly_lower_part(b12).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("lattice right-hand side") {
    VerblunskyData zero;
    zero.alpha1.assign(8, 0.0);
    zero.alpha2.assign(8, 0.0);
    zero.alpha1[0] = zero.alpha2[0] = 1.0;
    // alpha_0 = 1 feeds only the first beta along t11 and the first alpha along t21
    const TodaRhs r0 = toeplitz_rhs(zero, 1.0, 0.0);
    const TodaRhs r2 = toeplitz_rhs(zero, 0.0, 1.0);
    for (std::size_t k = 0; k < r0.d_alpha1.size(); ++k) {
        CHECK(std::abs(r0.d_alpha1[k]) == 0.0);
        CHECK(r0.d_beta[k] == cplx(k == 1 ? -1.0 : 0.0));
        CHECK(r2.d_alpha1[k] == cplx(k == 1 ? 1.0 : 0.0));
        CHECK(std::abs(r2.d_beta[k]) == 0.0);
    }
    // d alpha_1 / d t11 = alpha_2 (1 - |alpha_1|^2)
    const Ordering cmv(1, 1);
    const VerblunskyData v = verblunsky(factorize(Measure::trig_poly(0.5), cmv, 16), cmv);
    const TodaRhs r = toeplitz_rhs(v, 1.0, 0.0);
    CHECK(std::abs(r.d_alpha1[1] - v.alpha1[2] * (1.0 - std::norm(v.alpha1[1]))) < 1e-14);
}

TEST_CASE("flow against refactorization") {
    CHECK(toda_ode_residual(Measure::lebesgue(), 0.1, 0.0, 100, 8, 24) < 1e-12);
    CHECK(toda_ode_residual(Measure::trig_poly(0.5), 0.1, 0.0, 100, 8, 24) < 1e-6);
    CHECK(toda_ode_residual(Measure::exp_cos(), 0.1, 0.0, 100, 8, 24) < 1e-6);
    CHECK(toda_ode_residual(Measure::exp_cos(), cplx(0.05, 0.02), cplx(-0.03, 0.01), 100, 8, 24) < 1e-6);
    CHECK(schur_residual(Measure::trig_poly(0.5), 0.05, 100, 8, 24) < 1e-8);
    CHECK(schur_residual(Measure::exp_cos(), 0.1, 100, 8, 24) < 1e-8);
    const VerblunskyData v0 = refactorize_at_time(Measure::exp_cos(), Ordering(1, 1), {}, 24);
    const auto traj = integrate_flow_trajectory(v0, 0.1, 0.0, 20, 5);
    CHECK(traj.size() == 5);
    CHECK(traj.back().s == doctest::Approx(1.0));
}

TEST_CASE("deformed Lebesgue") {
    DeformationTimes t;
    t.t1 = {0.1};
    const VerblunskyData v = refactorize_at_time(Measure::lebesgue(), Ordering(1, 1), t, 12);
    // the weight stays analytic in the disk: one family frozen, the other moves
    for (int k = 1; k < 8; ++k) CHECK(std::abs(v.alpha1[k]) < 1e-15);
    CHECK(std::abs(v.alpha2[1]) > 1e-3);
    DeformationTimes s;
    s.t1 = {0.3};
    const Measure m = Measure::lebesgue();
    const GaussBorelFactors gb = factorize_at_time(m, Ordering(1, 1), s, 12);
    const cplx z(0.6, 0.5);
    CHECK(rel_err(wave_eval(m, gb, s, Ordering(1, 1), 0, z, Wave::psi1), std::exp(0.3 * z)) < 1e-14);
}

TEST_CASE("wave functions") {
    const Measure m = Measure::exp_cos();
    const Ordering cmv(1, 1);
    DeformationTimes t;
    t.t1 = {0.1};
    const GaussBorelFactors gb = factorize_at_time(m, cmv, t, 12);
    const cplx z = 1.4;
    CHECK(rel_err(wave_eval(m, gb, t, cmv, 2, z, Wave::psi1), phi(gb, cmv, 1, 2)(z) * std::exp(0.1 * z)) < 1e-14);
    const GaussBorelFactors g0 = factorize(m, cmv, 12);
    CHECK(rel_err(wave_eval(m, g0, {}, cmv, 3, z, Wave::psi1), phi(g0, cmv, 1, 3)(z)) < 1e-15);
    for (Wave w : {Wave::psi1, Wave::psi2_star, Wave::psi1_star, Wave::psi2})
        CHECK(rel_err(wave_eval(m, gb, t, cmv, 3, cplx(0.7, 0.2), w),
                      wave_eval_undeformed(m, gb, t, cmv, 3, cplx(0.7, 0.2), w)) < 1e-10);
    PointSampler ps(17);
    for (const Ordering& ord : orderings) CHECK(wave_eigen_max(m, ord, t, 16, ps.annulus(0.5, 2.0, 5)) < 1e-9);
}

TEST_CASE("Lax and Zakharov-Shabat") {
    DeformationTimes t;
    t.t1 = {0.05};
    for (const Ordering& ord : orderings) {
        const LaxResiduals r = lax_fd_residuals(Measure::exp_cos(), ord, t, std::max(12, 2 * ord.margin() + 4));
        CHECK(r.lax_t11 < 1e-4);
        CHECK(r.lax_t21 < 1e-4);
        CHECK(r.lax2_t11 < 1e-4);
        CHECK(r.zs < 1e-4);
    }
}

TEST_CASE("discrete steps") {
    const Measure leb = Measure::lebesgue();
    const Ordering cmv(1, 1);
    // z dtheta has c_0 = 0, so the shifted measure cannot be refactorized
    CHECK_THROWS_AS(discrete_step(leb, factorize(leb, cmv, 16), cmv, 0.0, StepDirection::T1, StepKind::D1), Error);

    for (const Ordering& ord : orderings) {
        for (const Measure& m : {Measure::trig_poly(0.5), complex_test_measure()}) {
            const GaussBorelFactors gb = factorize(m, ord, 32);
            for (StepDirection d : {StepDirection::T1, StepDirection::T2}) {
                const StepKind k = d == StepDirection::T1 ? StepKind::D1 : StepKind::D2;
                const DiscreteResult r = discrete_step(m, gb, ord, cplx(0.3, 0.1), d, k);
                CHECK(r.two_path_minus < 1e-8);
                CHECK(r.two_path_plus < 1e-8);
                CHECK(r.darboux < 1e-8);
                const DiscreteResult p = discrete_step(m, gb, ord, 0.3, d, StepKind::conj_pair);
                CHECK(p.two_path_minus < 1e-8);
                CHECK(p.darboux < 1e-8);
            }
        }
        const Measure m = Measure::trig_poly(0.5);
        const DiscreteResult p = discrete_step(m, factorize(m, ord, 32), ord, 0.3, StepDirection::T1, StepKind::conj_pair);
        CHECK(p.min_h_real > 0.0);
        CHECK(p.max_h_imag < 1e-10 * p.min_h_real);
        CHECK(p.measure.is_hermitian());
    }
    CHECK_THROWS_AS(discrete_step(leb, factorize(leb, cmv, 8), cmv, 1.0, StepDirection::T1, StepKind::D1), Error);
}

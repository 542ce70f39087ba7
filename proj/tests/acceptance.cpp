// Acceptance run: one line per criterion, nonzero exit if any fails.
#include "olpuc/checks.hpp"
#include "olpuc/cmv_operator.hpp"
#include "olpuc/error.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace olpuc;

namespace {

// pinned tolerances
constexpr double tol_biorth = 1e-9;
constexpr double tol_determinantal = 1e-9;
constexpr double tol_szego = 1e-9;
constexpr double tol_rho = 1e-10;
constexpr double tol_cd = 1e-9;
constexpr double tol_reproducing = 1e-8;
constexpr double tol_window = 1e-12;
constexpr double tol_idempotent = 1e-9;
constexpr double tol_sk_methods = 1e-7;
constexpr double tol_sk_additive = 1e-8;
constexpr double tol_summation = 1e-4;
constexpr double tol_ode = 1e-6;
constexpr double tol_fixed_point = 1e-12;
constexpr double tol_schur = 1e-8;
constexpr double tol_lax = 1e-4;
constexpr double tol_two_path = 1e-8;
constexpr double tol_darboux = 1e-8;
constexpr double tol_tau_pivot = 1e-9;
constexpr double tol_tau_rep = 1e-8;
constexpr double tol_tau_sk = 1e-6;
constexpr double tol_bilinear = 1e-6;
constexpr double tol_band = 1e-11;

constexpr int quad_n = 4096;
constexpr unsigned seed = 42;

const Ordering orderings[] = {Ordering(1, 1), Ordering(2, 1), Ordering(3, 2)};

std::vector<Measure> weights() { return {Measure::lebesgue(), Measure::trig_poly(0.5), Measure::exp_cos()}; }

// the detail shows the worst ratio seen, or the first failure
struct Line {
    bool pass = true;
    double worst = -1.0;
    std::string detail;
    void need(const std::string& what, double r, double tol) {
        const bool ok = std::isfinite(r) && r < tol;
        const double ratio = ok ? r / tol : INFINITY;
        if (pass && ratio >= worst) {
            char buf[160];
            std::snprintf(buf, sizeof buf, "%s %.2e (tol %.0e)", what.c_str(), r, tol);
            detail = buf;
            worst = ratio;
        }
        pass = pass && ok;
    }
    void need(const std::string& what, bool ok) {
        if (!ok && pass) detail = what + " failed";
        pass = pass && ok;
    }
};

std::string os(const Ordering& o) { return std::to_string(o.n_plus) + "," + std::to_string(o.n_minus); }

Line c1_biorthogonality() {
    Line r;
    for (const Measure& m : weights())
        for (const Ordering& o : orderings)
            r.need("biorth (" + os(o) + ")", biorthogonality_residual(m, factorize(m, o, 16), o, 16, quad_n), tol_biorth);
    return r;
}

Line c2_determinantal() {
    Line r;
    for (const Measure& m : weights())
        for (const Ordering& o : orderings) {
            const Mat g = build_moments(m, o, 12);
            r.need("det (" + os(o) + ")", determinantal_residual(g, gauss_borel(g), o, 8), tol_determinantal);
        }
    return r;
}

Line c3_szego() {
    Line r;
    for (const Measure& m : weights())
        for (const Ordering& o : orderings)
            r.need("szego (" + os(o) + ")", szego_oracle_residual(m, factorize(m, o, 16), o, 12), tol_szego);
    return r;
}

Line c4_rho() {
    Line r;
    for (const Measure& m : weights()) {
        const Ordering o(1, 1);
        r.need("rho", rho_residual(verblunsky(factorize(m, o, 16), o), 12), tol_rho);
    }
    return r;
}

Line c5_cd() {
    Line r;
    PointSampler ps(seed);
    const auto pairs = cd_pairs(ps, 100);
    const std::vector<PointPair> few(pairs.begin(), pairs.begin() + 10);
    for (const Measure& m : weights())
        for (const Ordering& o : orderings) {
            // large enough that l = 12 stays inside the trusted block for every ordering
            const Mat g = build_moments(m, o, 24);
            const GaussBorelFactors gb = gauss_borel(g);
            const int lmax = 12;
            if (trusted_size(o, 24) <= lmax) throw Error(ErrorKind::IndexOutOfRange, "block too small", lmax);
            const CDTriple t = cd_triple_residual(g, gb, o, lmax, pairs);
            r.need("abc (" + os(o) + ")", t.abc, tol_cd);
            r.need("cd (" + os(o) + ")", t.cd, tol_cd);
            r.need("reproducing (" + os(o) + ")", reproducing_residual(m, gb, o, lmax, few, quad_n), tol_reproducing);
        }
    return r;
}

Line c6_projection() {
    Line r;
    // (q+1, p) targets the window [-p, q]
    for (auto [p, q] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 3}, std::pair{1, 0}}) {
        const Ordering o(q + 1, p);
        const int l = p + q + 1;
        r.need("window", window(o, l) == std::pair<int, int>(-p, q));
        LaurentPoly f;
        for (int k = -p - 3; k <= q + 3; ++k) f.set(k, cplx(1.0 / (1 + std::abs(k)), 0.1 * k));
        for (const Measure& m : weights()) {
            const ProjectionReport pr = projection_report(m, factorize(m, o, 16), o, l, f);
            r.need("outside", pr.outside, tol_window);
            r.need("idempotence", pr.idempotence, tol_idempotent);
        }
    }
    return r;
}

Line c7_second_kind() {
    Line r;
    const Measure m = Measure::exp_cos();
    for (const Ordering& o : orderings) {
        PointSampler ps(seed);
        const GaussBorelFactors gb = factorize(m, o, 16);
        r.need("methods (" + os(o) + ")", second_kind_method_residual(m, gb, o, 6, ps, 20, quad_n), tol_sk_methods);
        r.need("additivity (" + os(o) + ")", second_kind_additivity_residual(m, gb, o, 6, ps, 20), tol_sk_additive);
        const SummationReport s = summation_report(m, gb, o, 12, ps, 5);
        r.need("summation (" + os(o) + ")", s.direct, tol_summation);
        r.need("monotone tail", s.monotone);
    }
    return r;
}

Line c8_toeplitz_lattice() {
    Line r;
    r.need("trig ode", toda_ode_residual(Measure::trig_poly(0.5), 0.1, 0.0, 100, 8, 24), tol_ode);
    r.need("exp_cos ode", toda_ode_residual(Measure::exp_cos(), 0.1, 0.0, 100, 8, 24), tol_ode);
    r.need("lebesgue fixed point", toda_ode_residual(Measure::lebesgue(), 0.1, 0.0, 100, 8, 24), tol_fixed_point);
    r.need("schur trig", schur_residual(Measure::trig_poly(0.5), 0.1, 100, 8, 24), tol_schur);
    r.need("schur exp_cos", schur_residual(Measure::exp_cos(), 0.1, 100, 8, 24), tol_schur);
    return r;
}

Line c9_lax() {
    Line r;
    DeformationTimes t;
    t.t1 = {0.05};
    for (const Ordering& o : orderings) {
        const LaxResiduals lr = lax_fd_residuals(Measure::exp_cos(), o, t, std::max(12, 2 * o.margin() + 4), 1e-3);
        r.need("lax (" + os(o) + ")", std::max({lr.lax_t11, lr.lax_t21, lr.lax2_t11}), tol_lax);
        r.need("zs (" + os(o) + ")", lr.zs, tol_lax);
    }
    return r;
}

Line c10_discrete() {
    Line r;
    for (const Measure& m : {Measure::trig_poly(0.5), Measure::exp_cos()})
        for (const Ordering& o : orderings) {
            const GaussBorelFactors gb = factorize(m, o, 32);
            for (StepDirection d : {StepDirection::T1, StepDirection::T2}) {
                for (StepKind k : {d == StepDirection::T1 ? StepKind::D1 : StepKind::D2, StepKind::conj_pair}) {
                    const DiscreteResult s = discrete_step(m, gb, o, cplx(0.3, 0.1), d, k);
                    r.need("two-path (" + os(o) + ")", std::max(s.two_path_minus, s.two_path_plus), tol_two_path);
                    r.need("darboux (" + os(o) + ")", s.darboux, tol_darboux);
                    if (k == StepKind::conj_pair) {
                        bool pos = s.min_h_real > 0.0 && s.max_h_imag < 1e-10 * s.min_h_real;
                        r.need("positivity", pos && s.measure.is_hermitian());
                    }
                }
            }
        }
    return r;
}

Line c11_tau() {
    Line r;
    DeformationTimes t;
    t.t1 = {0.05};
    t.t2 = {cplx(0.02, 0.01)};
    for (const Measure& m : weights())
        for (const Ordering& o : orderings) {
            r.need("pivots", pivot_residual(m, o, t, 8), tol_tau_pivot);
            PointSampler ps(seed);
            const auto zs = tau_points(ps, 20);
            double e = 0.0, s = 0.0;
            for (int l = o.period(); l <= 8; ++l)
                for (cplx z : zs) {
                    e = std::max(e, tau_poly_residual(m, o, t, l, z));
                    if (l <= 6) s = std::max(s, tau_second_kind_residual(m, o, {}, l, z));
                }
            r.need("representation (" + os(o) + ")", e, tol_tau_rep);
            r.need("second kind (" + os(o) + ")", s, tol_tau_sk);
        }
    DeformationTimes a, b;
    a.t1 = {0.05};
    b.t2 = {0.03};
    const DeformationTimes c = DeformationTimes::schur({cplx(0.1, 0.0)});
    const DeformationTimes z0;
    struct Case {
        DeformationTimes t, tp;
        int k, l;
    };
    for (const Ordering& o : orderings)
        for (const Case& bc : {Case{z0, z0, 2, 1}, Case{a, b, 2, 2}, Case{c, a, 3, 2}, Case{b, c, 1, 3}})
            r.need("bilinear (" + os(o) + ")", bilinear_residual(Measure::exp_cos(), o, bc.t, bc.tp, bc.k, bc.l),
                   tol_bilinear);
    return r;
}

Line c12_band() {
    Line r;
    for (const Measure& m : weights())
        for (const Ordering& o : orderings) r.need("band (" + os(o) + ")", band_residual(factorize(m, o, 20), o), tol_band);
    return r;
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Line()> run;
    };
    const std::vector<Criterion> all{{"1 biorthogonality", c1_biorthogonality},
                                     {"2 determinantal-LU", c2_determinantal},
                                     {"3 szego identification", c3_szego},
                                     {"4 rho identity", c4_rho},
                                     {"5 CD triple", c5_cd},
                                     {"6 projection window", c6_projection},
                                     {"7 second kind", c7_second_kind},
                                     {"8 toeplitz lattice", c8_toeplitz_lattice},
                                     {"9 lax/zs", c9_lax},
                                     {"10 discrete flows", c10_discrete},
                                     {"11 tau suite", c11_tau},
                                     {"12 band structure", c12_band}};
    int failed = 0;
    for (const Criterion& c : all) {
        const auto t0 = std::chrono::steady_clock::now();
        Line l;
        try {
            l = c.run();
        } catch (const std::exception& ex) {
            l.pass = false;
            l.detail = std::string("exception: ") + ex.what();
        }
        const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s  %-24s %6.1fs  %s\n", l.pass ? "PASS" : "FAIL", c.name, sec, l.detail.c_str());
        std::fflush(stdout);
        failed += !l.pass;
    }
    return failed == 0 ? 0 : 1;
}

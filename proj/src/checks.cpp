#include "olpuc/checks.hpp"

#include "olpuc/cmv_operator.hpp"
#include "olpuc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

namespace olpuc {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

double rel_poly(const LaurentPoly& a, const LaurentPoly& b) {
    return max_coeff_diff(a, b) / std::max(1.0, b.max_abs());
}

std::string num(cplx z) {
    std::ostringstream os;
    os.precision(15);
    os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    return os.str();
}

std::string ord_str(const Ordering& o) { return std::to_string(o.n_plus) + "," + std::to_string(o.n_minus); }

// values of phi_1^{(k)} and conj(phi_2^{(k)}) for k < n
void phi_values(const GaussBorelFactors& gb, const Ordering& ord, int n, cplx z, Vec& p1, Vec& p2c) {
    p1 = gb.S1.topLeftCorner(n, n) * chi(ord, n, z);
    p2c = gb.S2inv.topLeftCorner(n, n).transpose() * chi(ord, n, z).conjugate();
}

std::vector<cplx> reciprocal(const std::vector<cplx>& p) {
    std::vector<cplx> r(p.rbegin(), p.rend());
    for (auto& c : r) c = std::conj(c);
    return r;
}

double vec_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double e = 0.0;
    const size_t n = std::max(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        const cplx x = i < a.size() ? a[i] : 0.0;
        const cplx y = i < b.size() ? b[i] : 0.0;
        e = std::max(e, std::abs(x - y));
    }
    return e;
}

} // namespace

cplx PointSampler::annulus(double r0, double r1) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double r = r0 + (r1 - r0) * u(rng_);
    return std::polar(r, two_pi * u(rng_));
}

std::vector<cplx> PointSampler::annulus(double r0, double r1, int n) {
    std::vector<cplx> out(n);
    for (auto& z : out) z = annulus(r0, r1);
    return out;
}

bool is_positive(const Measure& m, const GaussBorelFactors& gb) {
    if (!m.is_hermitian()) return false;
    for (int k = 0; k < gb.h.size(); ++k)
        if (gb.h(k).real() <= 0.0 || std::abs(gb.h(k).imag()) > 1e-10 * std::abs(gb.h(k))) return false;
    return true;
}

bool is_entire_type(const Measure& m) {
    const Annulus a = m.annulus();
    return a.r_minus == 0.0 && std::isinf(a.r_plus);
}

double hermitian_residual(const Mat& g) { return (g - g.adjoint()).cwiseAbs().maxCoeff(); }

double moment_quadrature_residual(const Measure& m, const Ordering& ord, int n, int N) {
    const QuadGrid q = quad_grid(m, N);
    double e = 0.0;
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            const int ej = ord.exponent(j), ek = ord.exponent(k);
            cplx s = 0.0;
            for (size_t i = 0; i < q.z.size(); ++i) s += q.w[i] * std::pow(q.z[i], ej) * std::conj(std::pow(q.z[i], ek));
            e = std::max(e, std::abs(s - moment_entry(m, ord, j, k)));
        }
    return e;
}

double toeplitz_minor_residual(const Measure& m, const Ordering& ord, int kmax) {
    const Mat g = build_moments(m, ord, kmax);
    double e = 0.0;
    for (int k = 1; k <= kmax; ++k) {
        Mat T(k, k);
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) T(a, b) = two_pi * m.coeff(b - a);
        const cplx dt = det(T), dg = det(g.topLeftCorner(k, k));
        const double s = std::max(std::abs(dt), 1e-300);
        e = std::max(e, std::min(std::abs(dg - dt), std::abs(dg + dt)) / s);
    }
    return e;
}

double parallel_serial_residual(const Measure& m, const Ordering& ord, int n) {
    return (build_moments(m, ord, n) - build_moments_serial(m, ord, n)).cwiseAbs().maxCoeff();
}

double biorthogonality_residual(const Measure& m, const GaussBorelFactors& gb, const Ordering& ord, int n, int N) {
    const QuadGrid q = quad_grid(m, N);
    Mat G = Mat::Zero(n, n);
    Vec p1, p2c;
    for (size_t i = 0; i < q.z.size(); ++i) {
        phi_values(gb, ord, n, q.z[i], p1, p2c);
        G += q.w[i] * p1 * p2c.transpose();
    }
    return (G - Mat::Identity(n, n)).cwiseAbs().maxCoeff();
}

double determinantal_residual(const Mat& g, const GaussBorelFactors& gb, const Ordering& ord, int lmax) {
    double e = 0.0;
    for (int l = 0; l <= lmax; ++l)
        for (int fam = 1; fam <= 2; ++fam)
            e = std::max(e, rel_poly(phi(gb, ord, fam, l), phi_determinantal(g, ord, fam, l)));
    return e;
}

double rho_residual(const VerblunskyData& v, int kmax) {
    double e = 0.0;
    const int n = std::min<int>(kmax, static_cast<int>(v.rho2.size()) - 1);
    for (int k = 1; k <= n; ++k)
        e = std::max(e, std::abs(v.rho2[k] - (1.0 - v.alpha1[k] * std::conj(v.alpha2[k]))));
    return e;
}

double proportionality_residual(const GaussBorelFactors& gb, const Ordering& ord, int n) {
    double e = 0.0;
    for (int l = 0; l < n; ++l) {
        const LaurentPoly p1 = phi(gb, ord, 1, l);
        e = std::max(e, rel_poly(phi(gb, ord, 2, l), p1.scaled(1.0 / gb.h(l))));
    }
    return e;
}

double szego_oracle_residual(const Measure& m, const GaussBorelFactors& gb, const Ordering& ord, int lmax) {
    double e = 0.0;
    for (int l = 0; l <= lmax; ++l) {
        const SzegoPoly s = szego_from_olp(phi(gb, ord, 1, l), ord, l);
        const std::vector<cplx> P = szego_oracle(m, l);
        e = std::max(e, vec_diff(s.coeffs, ord.cls(l) == 1 ? P : reciprocal(P)));
    }
    return e;
}

double szego_recursion_residual(const Measure& m, const VerblunskyData& v, int lmax) {
    double e = 0.0;
    for (int l = 0; l <= lmax; ++l) {
        const auto [P, Ps] = szego_recursion(v.alpha1, l);
        const std::vector<cplx> O = szego_oracle(m, l);
        e = std::max({e, vec_diff(P, O), vec_diff(Ps, reciprocal(O))});
    }
    return e;
}

double ordering_independence_residual(const Measure& m, int size, int kmax) {
    const Ordering ref(1, 1);
    const VerblunskyData v0 = verblunsky(factorize(m, ref, size), ref);
    double e = 0.0;
    for (const Ordering o : {Ordering(2, 1), Ordering(3, 2)}) {
        const VerblunskyData v = verblunsky(factorize(m, o, size), o);
        const int n = std::min<int>({kmax, static_cast<int>(v.alpha1.size()) - 1,
                                     static_cast<int>(v0.alpha1.size()) - 1});
        for (int k = 0; k <= n; ++k)
            e = std::max({e, std::abs(v.alpha1[k] - v0.alpha1[k]), std::abs(v.alpha2[k] - v0.alpha2[k])});
    }
    return e;
}

double band_residual(const GaussBorelFactors& gb, const Ordering& ord) {
    const Mat ups = build_upsilon(ord, gb.size());
    double e = 0.0;
    for (int side = 1; side <= 2; ++side) e = std::max(e, band_check(jacobi_dressed(gb, ups, side), ord).outside);
    return e;
}

double eigen_relation_residual(const GaussBorelFactors& gb, const Ordering& ord, const std::vector<cplx>& zs) {
    const int n = trusted_size(ord, gb.size());
    double e = 0.0;
    for (cplx z : zs) {
        const double s = std::max(1.0, chi(ord, gb.size(), z).cwiseAbs().maxCoeff());
        for (int l = 0; l < n; ++l) e = std::max(e, recursion_residual(gb, ord, z, l) / s);
    }
    return e;
}

double explicit_cmv_residual(const GaussBorelFactors& gb, const VerblunskyData& v, const std::vector<cplx>& zs) {
    const Ordering ord(1, 1);
    const int n = trusted_size(ord, gb.size());
    double e = 0.0;
    for (cplx z : zs) {
        const double s = std::max(1.0, chi(ord, gb.size(), z).cwiseAbs().maxCoeff());
        for (int l = 0; l < n; ++l) e = std::max(e, explicit_recursion_residual(gb, v, z, l) / s);
    }
    return e;
}

std::vector<PointPair> cd_pairs(PointSampler& ps, int n) {
    std::vector<PointPair> out;
    while (static_cast<int>(out.size()) < n) {
        const cplx z = ps.annulus(0.5, 2.0), zp = ps.annulus(0.5, 2.0);
        if (std::abs(1.0 - zp * std::conj(z)) > 0.05) out.push_back({z, zp});
    }
    return out;
}

CDTriple cd_triple_residual(const Mat& g, const GaussBorelFactors& gb, const Ordering& ord, int lmax,
                            const std::vector<PointPair>& pts) {
    CDTriple r;
    for (int l = 1; l <= lmax; ++l) {
        const AssociatedPolys as = associated(g, ord, l, AssocMethod::linear_solve);
        for (const auto& p : pts) {
            const cplx ks = kernel_sum(gb, ord, l, p.z, p.zp);
            r.abc = std::max(r.abc, rel(kernel_abc(g, ord, l, p.z, p.zp), ks));
            r.cd = std::max(r.cd, rel(cd_formula(as, p.z, p.zp), ks));
        }
    }
    return r;
}

double reproducing_residual(const Measure& m, const GaussBorelFactors& gb, const Ordering& ord, int l,
                            const std::vector<PointPair>& pts, int N) {
    const QuadGrid q = quad_grid(m, N);
    double e = 0.0;
    for (const auto& p : pts) {
        Vec a1, a2c, b1, b2c;
        phi_values(gb, ord, l, p.z, a1, a2c);
        phi_values(gb, ord, l, p.zp, b1, b2c);
        cplx s = 0.0;
        Vec u1, u2c;
        for (size_t i = 0; i < q.z.size(); ++i) {
            phi_values(gb, ord, l, q.z[i], u1, u2c);
            // K(z,u) K(u,z')
            s += q.w[i] * (u1.array() * a2c.array()).sum() * (b1.array() * u2c.array()).sum();
        }
        e = std::max(e, rel(s, kernel_sum(gb, ord, l, p.z, p.zp)));
    }
    return e;
}

ProjectionReport projection_report(const Measure& m, const GaussBorelFactors& gb, const Ordering& ord, int l,
                                   const LaurentPoly& f) {
    const auto [lo, hi] = window(ord, l);
    const LaurentPoly p = project(m, gb, ord, l, f);
    const LaurentPoly pp = project(m, gb, ord, l, p);
    return {p.max_abs_outside(lo, hi), rel_poly(pp, p)};
}

double associated_forms_residual(const Mat& g, const GaussBorelFactors& gb, const Ordering& ord, int lmax) {
    double e = 0.0;
    for (int l = 1; l <= lmax; ++l) {
        const AssociatedPolys d = associated(g, ord, l, AssocMethod::determinantal);
        for (const AssociatedPolys& o :
             {associated(g, ord, l, AssocMethod::linear_solve), associated(g, ord, l, AssocMethod::lincomb, &gb)})
            for (int a = 0; a < 2; ++a)
                e = std::max({e, rel_poly(o.phi1_plus[a], d.phi1_plus[a]), rel_poly(o.phi1_minus[a], d.phi1_minus[a]),
                              rel_poly(o.phi2_plus[a], d.phi2_plus[a]), rel_poly(o.phi2_minus[a], d.phi2_minus[a])});
    }
    return e;
}

double second_kind_method_residual(const Measure& m, const GaussBorelFactors& gb, const Ordering& ord, int lmax,
                                   PointSampler& ps, int points, int N) {
    double e = 0.0;
    auto run = [&](SecondKind w, double r0, double r1) {
        const Annulus reg = second_kind_region(m, w);
        for (cplx z : ps.annulus(r0, r1, points)) {
            if (!reg.contains(z)) continue;
            for (int l = 0; l <= lmax; ++l) {
                const cplx a = second_kind(m, gb, ord, l, w, z);
                e = std::max({e, rel(second_kind(m, gb, ord, l, w, z, SKMethod::cauchy, N), a),
                              rel(second_kind(m, gb, ord, l, w, z, SKMethod::gamma_det), a)});
            }
        }
    };
    run(SecondKind::C11, 1.2, 2.5);
    run(SecondKind::C21, 1.2, 2.5);
    run(SecondKind::C12, 0.3, 0.85);
    run(SecondKind::C22, 0.3, 0.85);
    return e;
}

double second_kind_additivity_residual(const Measure& m, const GaussBorelFactors& gb, const Ordering& ord,
                                       int lmax, PointSampler& ps, int points) {
    double e = 0.0;
    const Annulus a1 = second_kind_region(m, SecondKind::C1), a2 = second_kind_region(m, SecondKind::C2);
    for (cplx z : ps.annulus(0.5, 2.0, points))
        for (int l = 0; l <= lmax; ++l) {
            if (a1.contains(z)) {
                const cplx c1 = second_kind(m, gb, ord, l, SecondKind::C1, z);
                e = std::max(e, rel(second_kind(m, gb, ord, l, SecondKind::C11, z) +
                                        second_kind(m, gb, ord, l, SecondKind::C12, z), c1));
            }
            if (a2.contains(z)) {
                const cplx c2 = second_kind(m, gb, ord, l, SecondKind::C2, z);
                e = std::max(e, rel(second_kind(m, gb, ord, l, SecondKind::C21, z) +
                                        second_kind(m, gb, ord, l, SecondKind::C22, z), c2));
            }
        }
    return e;
}

double geronimus_residual(const Measure& m, const GaussBorelFactors& gb, const Ordering& ord, int lmax,
                          PointSampler& ps, int points, int N) {
    double e = 0.0;
    auto run = [&](SecondKind w, double r0, double r1) {
        const Annulus reg = second_kind_region(m, w);
        for (cplx z : ps.annulus(r0, r1, points)) {
            if (!reg.contains(z)) continue;
            for (int l = 1; l <= lmax; ++l)
                e = std::max(e, rel(second_kind(m, gb, ord, l, w, z, SKMethod::geronimus, N),
                                    second_kind(m, gb, ord, l, w, z)));
        }
    };
    run(SecondKind::C11, 1.2, 2.5);
    run(SecondKind::C21, 1.2, 2.5);
    run(SecondKind::C12, 0.3, 0.85);
    run(SecondKind::C22, 0.3, 0.85);
    return e;
}

SummationReport summation_report(const Measure& m, const GaussBorelFactors& gb, const Ordering& ord, int L,
                                 PointSampler& ps, int points) {
    SummationReport r;
    std::vector<std::pair<cplx, cplx>> pts(points);
    for (auto& [big, small] : pts) {
        big = ps.annulus(2.0, 3.0);
        small = ps.annulus(0.1, 0.2);
    }
    // single points can cancel a term and bump the error, so the tail is the worst case over the
    // sample, compared period by period
    const int p = ord.period();
    for (int a = 1; a <= 2; ++a) {
        for (int b = 1; b <= 2; ++b) {
            double prev = std::numeric_limits<double>::infinity();
            for (int k = std::max(1, L - 2 * p); k <= L; k += p) {
                double worst = 0.0;
                for (const auto& [big, small] : pts) {
                    const cplx z = b == 1 ? big : small, zp = b == 1 ? small : big;
                    worst = std::max(worst, std::abs(summation_sum(m, gb, ord, k, a, b, b, z, zp) -
                                                     summation_limit(b, b, z, zp)));
                }
                if (worst > prev + 1e-13) r.monotone = false;
                prev = worst;
            }
            r.direct = std::max(r.direct, prev);
        }
        for (const auto& [big, small] : pts)
            r.cross = std::max(r.cross, std::abs(summation_sum(m, gb, ord, L, a, 1, 2, big, small) -
                                                 summation_limit(1, 2, big, small)));
    }
    return r;
}

double toda_ode_residual(const Measure& m, cplx t11, cplx t21, int steps, int kmax, int size) {
    const Ordering o(1, 1);
    const VerblunskyData v0 = refactorize_at_time(m, o, {}, size);
    const FlowState st = integrate_flow(v0, t11, t21, steps);
    DeformationTimes t;
    t.t1 = {t11};
    t.t2 = {t21};
    const VerblunskyData vr = refactorize_at_time(m, o, t, size);
    const int n = std::min(kmax, st.trusted_len - 1);
    double e = 0.0;
    for (int k = 0; k <= n; ++k)
        e = std::max({e, std::abs(st.v.alpha1[k] - vr.alpha1[k]), std::abs(st.v.alpha2[k] - vr.alpha2[k])});
    return e;
}

double schur_residual(const Measure& m, double t11, int steps, int kmax, int size) {
    const Ordering o(1, 1);
    const DeformationTimes s = DeformationTimes::schur({t11});
    const FlowState st = integrate_flow(refactorize_at_time(m, o, {}, size), s.t1[0], s.t2[0], steps);
    const VerblunskyData vr = refactorize_at_time(m, o, s, size);
    const int n = std::min(kmax, st.trusted_len - 1);
    double e = 0.0;
    for (int k = 0; k <= n; ++k)
        e = std::max({e, std::abs(st.v.alpha1[k].imag()), std::abs(st.v.alpha1[k] - st.v.alpha2[k]),
                      std::abs(vr.alpha1[k].imag()), std::abs(vr.alpha1[k] - vr.alpha2[k])});
    return e;
}

double wave_eigen_max(const Measure& m, const Ordering& ord, const DeformationTimes& t, int size,
                      const std::vector<cplx>& zs) {
    double e = 0.0;
    for (cplx z : zs) e = std::max(e, wave_eigen_residual(m, ord, t, size, z));
    return e;
}

double pivot_residual(const Measure& m, const Ordering& ord, const DeformationTimes& t, int lmax) {
    const GaussBorelFactors gb = factorize_at_time(m, ord, t, lmax);
    double e = 0.0;
    cplx p = 1.0;
    for (int l = 1; l <= lmax; ++l) {
        p *= gb.h(l - 1);
        e = std::max(e, std::abs(tau(m, ord, t, l) - p) / std::abs(p));
    }
    return e;
}

double translation_residual(const Measure& m, const Ordering& ord, const DeformationTimes& t,
                            const DeformationTimes& s, int lmax) {
    double e = 0.0;
    const Measure ms = deform(m, s);
    for (int l = 1; l <= lmax; ++l) {
        const cplx a = tau(m, ord, t + s, l);
        e = std::max(e, std::abs(a - tau(ms, ord, t, l)) / std::abs(a));
    }
    return e;
}

std::vector<cplx> tau_points(PointSampler& ps, int n) {
    std::vector<cplx> out(n);
    for (int i = 0; i < n; ++i) out[i] = i % 2 == 0 ? ps.annulus(0.3, 0.8) : ps.annulus(1.3, 2.5);
    return out;
}

bool all_pass(const std::vector<CheckResult>& r) {
    return std::all_of(r.begin(), r.end(), [](const CheckResult& c) { return c.pass; });
}

std::vector<CheckResult> verify_all(const Measure& m, const Ordering& ord, const SuiteOptions& opt) {
    std::vector<CheckResult> out;
    PointSampler ps(opt.seed);
    const int n = opt.size;
    const int N = opt.quad_n > 0 ? opt.quad_n : default_quad_n();
    const std::string os = ord_str(ord);

    using Params = std::map<std::string, std::string>;
    auto run = [&](const std::string& name, Params p, double tol, const std::function<double()>& f) {
        CheckResult c{name, std::move(p), 0.0, tol, false};
        try {
            c.residual = f();
            c.pass = std::isfinite(c.residual) && c.residual < tol;
        } catch (const std::exception& ex) {
            c.residual = std::numeric_limits<double>::infinity();
            c.params["error"] = ex.what();
        }
        out.push_back(std::move(c));
    };
    auto flag = [](bool b) { return b ? 0.0 : 1.0; };

    const Mat g = build_moments(m, ord, n);
    const GaussBorelFactors gb = gauss_borel(g);
    const VerblunskyData v = verblunsky(gb, ord);
    const bool positive = is_positive(m, gb);
    const bool entire = is_entire_type(m);
    const int trusted = trusted_size(ord, n);
    const Params base{{"ordering", os}, {"size", std::to_string(n)}};
    auto with = [&](Params extra) {
        Params p = base;
        p.insert(extra.begin(), extra.end());
        return p;
    };

    // ordering
    run("ordering.nu_sum", base, 0.5, [&] {
        int bad = 0;
        for (int l = 0; l < 4 * n; ++l) bad += ord.nu_plus(l) + ord.nu_minus(l) != l + 1;
        return double(bad);
    });
    run("ordering.upsilon_rows", base, 1e-15, [&] {
        const Mat ups = build_upsilon(ord, n);
        double e = 0.0;
        for (cplx z : ps.annulus(0.5, 2.0, 4)) {
            const Vec c = chi(ord, n, z);
            const Vec u = ups * c, d = ups.transpose() * c;
            for (int j = 0; j < n; ++j) {
                if (upsilon_row_interior(ord, j, n))
                    e = std::max(e, std::abs(u(j) - std::pow(z, ord.exponent(j) + 1)) / std::abs(u(j)));
                const int k = ord.index_of(ord.exponent(j) - 1);
                if (k < n) e = std::max(e, std::abs(d(j) - std::pow(z, ord.exponent(j) - 1)) / std::abs(d(j)));
            }
        }
        return e;
    });

    // measure
    if (m.is_hermitian()) {
        run("measure.toda_reality", {{"t11", "0.1+0.05i"}}, 1e-13, [&] {
            const Measure d = deform(m, DeformationTimes::schur({cplx(0.1, 0.05)}));
            double e = 0.0;
            for (int k = 0; k <= 20; ++k) e = std::max(e, std::abs(d.coeff(-k) - std::conj(d.coeff(k))));
            return e;
        });
    }
    run("measure.factor_composition", {{"lambda", "0.3+0.2i"}}, 1e-12, [&] {
        const cplx lam(0.3, 0.2);
        const Measure d = m.decorated({FactorKind::linear_z, {}, 0.0, lam})
                              .decorated({FactorKind::inverse_linear_z, {}, 0.0, lam});
        double e = 0.0;
        for (int k = -20; k <= 20; ++k) e = std::max(e, std::abs(d.coeff(k) - m.coeff(k)));
        return e;
    });

    // moments
    if (m.is_hermitian()) run("moments.hermitian", base, 1e-13, [&] { return hermitian_residual(g); });
    run("moments.quadrature", with({{"N", std::to_string(N)}}), 1e-10,
        [&] { return moment_quadrature_residual(m, ord, std::min(n, 12), N); });
    run("moments.toeplitz_minors", with({{"kmax", "6"}}), 1e-10,
        [&] { return toeplitz_minor_residual(m, ord, std::min(n, 6)); });
    run("moments.string_equation", base, 1e-12,
        [&] { return string_residual(g, build_upsilon(ord, n), ord) / std::max(1.0, g.cwiseAbs().maxCoeff()); });
    run("moments.parallel_serial", base, 1e-15, [&] { return parallel_serial_residual(m, ord, n); });
    run("moments.quasidefinite", base, 0.5, [&] { return flag(check_quasidefinite(g).ok); });

    // factorization
    run("factorization.reconstruction", base, 1e-12, [&] {
        const Mat r = gb.S1.triangularView<Eigen::UnitLower>().solve(gb.S2);
        return (r - g).cwiseAbs().maxCoeff() / g.cwiseAbs().maxCoeff();
    });
    run("factorization.biorthogonality", with({{"N", std::to_string(N)}}), 1e-9,
        [&] { return biorthogonality_residual(m, gb, ord, n, N); });
    run("factorization.determinantal", with({{"lmax", "8"}}), 1e-9,
        [&] { return determinantal_residual(g, gb, ord, std::min(8, n - 1)); });
    run("factorization.rho_identity", base, 1e-10, [&] { return rho_residual(v, n - 3); });
    if (positive) {
        run("factorization.proportionality", base, 1e-10, [&] { return proportionality_residual(gb, ord, n); });
        const int ls = std::min(12, n - 1);
        run("factorization.szego_oracle", with({{"lmax", std::to_string(ls)}}), 1e-9,
            [&] { return szego_oracle_residual(m, gb, ord, ls); });
        run("factorization.szego_recursion", with({{"lmax", std::to_string(ls)}}), 1e-9, [&] {
            const Ordering c(1, 1);
            const VerblunskyData vc = verblunsky(factorize(m, c, n), c);
            return szego_recursion_residual(m, vc, std::min<int>(ls, vc.alpha1.size() - 1));
        });
        run("factorization.ordering_independence", with({{"kmax", std::to_string(trusted_size(Ordering(3, 2), n) - 1)}}),
            1e-9, [&] { return ordering_independence_residual(m, n, trusted_size(Ordering(3, 2), n) - 1); });
    }

    // cmv_operator
    run("cmv.band", base, 1e-11, [&] { return band_residual(gb, ord); });
    {
        const auto zs = ps.annulus(0.5, 2.0, 50);
        run("cmv.eigen_relation", with({{"points", "50"}}), 1e-9, [&] { return eigen_relation_residual(gb, ord, zs); });
        if (positive && ord.is_cmv())
            run("cmv.explicit_recursion", with({{"points", "50"}}), 1e-9,
                [&] { return explicit_cmv_residual(gb, v, zs); });
    }

    // cd_kernel
    {
        const int pts = std::max(opt.points, 100);
        const auto pairs = cd_pairs(ps, pts);
        const int lmax = std::min(12, trusted - 1);
        CDTriple tr;
        bool ok = true;
        try {
            tr = cd_triple_residual(g, gb, ord, lmax, pairs);
        } catch (const std::exception&) {
            ok = false;
        }
        const Params p = with({{"lmax", std::to_string(lmax)}, {"points", std::to_string(pts)}});
        run("cd.kernel_abc", p, 1e-9, [&] { return ok ? tr.abc : std::numeric_limits<double>::infinity(); });
        run("cd.cd_formula", p, 1e-9, [&] { return ok ? tr.cd : std::numeric_limits<double>::infinity(); });
        const std::vector<PointPair> few(pairs.begin(), pairs.begin() + 10);
        run("cd.reproducing", with({{"l", std::to_string(lmax)}, {"N", std::to_string(N)}}), 1e-8,
            [&] { return reproducing_residual(m, gb, ord, lmax, few, N); });
        LaurentPoly f;
        f.set(-ord.nu_minus(n) - 2, cplx(0.3, -0.1));
        f.set(1, 1.0);
        f.set(ord.nu_plus(n) + 2, cplx(0.2, 0.4));
        const int lp = std::min(ord.period() * 2, trusted);
        const ProjectionReport pr = projection_report(m, gb, ord, lp, f);
        run("cd.projection_window", with({{"l", std::to_string(lp)}}), 1e-12, [&] { return pr.outside; });
        run("cd.projection_idempotence", with({{"l", std::to_string(lp)}}), 1e-9, [&] { return pr.idempotence; });
        run("cd.associated_forms", with({{"lmax", std::to_string(lmax)}}), 1e-9,
            [&] { return associated_forms_residual(g, gb, ord, lmax); });
    }

    // second_kind
    {
        const int lmax = std::min(6, n - 1);
        const Params p = with({{"lmax", std::to_string(lmax)}, {"points", std::to_string(opt.points)}});
        run("second_kind.method_agreement", p, 1e-7,
            [&] { return second_kind_method_residual(m, gb, ord, lmax, ps, opt.points, N); });
        run("second_kind.additivity", p, 1e-8,
            [&] { return second_kind_additivity_residual(m, gb, ord, lmax, ps, opt.points); });
        run("second_kind.geronimus", p, 1e-8,
            [&] { return geronimus_residual(m, gb, ord, lmax, ps, opt.points, N); });
        if (entire) {
            const int L = n - 4;
            SummationReport sr;
            bool ok = true;
            try {
                sr = summation_report(m, gb, ord, L, ps, 5);
            } catch (const std::exception&) {
                ok = false;
            }
            const Params q = with({{"L", std::to_string(L)}});
            const double inf = std::numeric_limits<double>::infinity();
            run("second_kind.summation", q, 1e-4, [&] { return ok ? sr.direct : inf; });
            run("second_kind.summation_cross", q, 1e-4, [&] { return ok ? sr.cross : inf; });
            run("second_kind.summation_monotone", q, 0.5, [&] { return ok ? flag(sr.monotone) : inf; });
        }
    }

    // toda
    {
        const int ts = std::max(n, 24);
        const Params p{{"ordering", "1,1"}, {"size", std::to_string(ts)}, {"t11", "0.1"}, {"steps", "100"}};
        if (m.is_hermitian()) {
            run("toda.ode_vs_refactorization", p, 1e-6, [&] { return toda_ode_residual(m, 0.1, 0.0, 100, 8, ts); });
            if (positive) run("toda.schur_reality", p, 1e-8, [&] { return schur_residual(m, 0.1, 100, 8, ts); });
        }
        DeformationTimes t;
        t.t1 = {0.05};
        const int ls = std::max(n, 2 * ord.margin() + 4);
        LaxResiduals lr;
        bool ok = true;
        try {
            lr = lax_fd_residuals(m, ord, t, ls);
        } catch (const std::exception&) {
            ok = false;
        }
        const double inf = std::numeric_limits<double>::infinity();
        const Params q{{"ordering", os}, {"size", std::to_string(ls)}, {"h", "0.001"}};
        run("toda.lax", q, 1e-4, [&] { return ok ? std::max({lr.lax_t11, lr.lax_t21, lr.lax2_t11}) : inf; });
        run("toda.zakharov_shabat", q, 1e-4, [&] { return ok ? lr.zs : inf; });
        run("toda.wave_eigen", with({{"points", "10"}}), 1e-9,
            [&] { return wave_eigen_max(m, ord, t, n, ps.annulus(0.5, 2.0, 10)); });

        const int ds = std::max(n, 32);
        const GaussBorelFactors gd = factorize(m, ord, ds);
        const cplx lam(0.3, 0.1);
        struct Case {
            const char* name;
            StepDirection d;
            StepKind k;
        };
        for (const Case c : {Case{"D1", StepDirection::T1, StepKind::D1}, Case{"D2", StepDirection::T2, StepKind::D2},
                             Case{"pair_T1", StepDirection::T1, StepKind::conj_pair},
                             Case{"pair_T2", StepDirection::T2, StepKind::conj_pair}}) {
            DiscreteResult r{m, gb, {}};
            bool okd = true;
            try {
                r = discrete_step(m, gd, ord, lam, c.d, c.k);
            } catch (const std::exception&) {
                okd = false;
            }
            const Params q2{{"ordering", os}, {"size", std::to_string(ds)}, {"step", c.name}, {"lambda", num(lam)}};
            run(std::string("toda.discrete_two_path.") + c.name, q2, 1e-8,
                [&] { return okd ? std::max(r.two_path_minus, r.two_path_plus) : inf; });
            run(std::string("toda.discrete_darboux.") + c.name, q2, 1e-8, [&] { return okd ? r.darboux : inf; });
            if (c.k == StepKind::conj_pair && positive)
                run(std::string("toda.discrete_positivity.") + c.name, q2, 1e-10, [&] {
                    if (!okd) return inf;
                    return r.min_h_real > 0.0 ? r.max_h_imag / std::max(1.0, r.min_h_real) : inf;
                });
        }
    }

    // tau
    {
        DeformationTimes t;
        t.t1 = {0.05};
        t.t2 = {cplx(0.02, 0.01)};
        const int lmax = std::min(8, n);
        run("tau.pivot", with({{"lmax", std::to_string(lmax)}}), 1e-9, [&] { return pivot_residual(m, ord, t, lmax); });
        DeformationTimes s;
        s.t1 = {cplx(0.02, 0.0)};
        s.t2 = {cplx(0.01, 0.01)};
        run("tau.translation", with({{"lmax", std::to_string(lmax)}}), 1e-9,
            [&] { return translation_residual(m, ord, t, s, lmax); });
        const auto zs = tau_points(ps, opt.points);
        run("tau.representation", with({{"lmax", std::to_string(lmax)}, {"points", std::to_string(opt.points)}}), 1e-8,
            [&] {
                double e = 0.0;
                for (int l = ord.period(); l <= lmax; ++l)
                    for (cplx z : zs) e = std::max(e, tau_poly_residual(m, ord, t, l, z));
                return e;
            });
        if (positive) {
            const int lsk = std::min(6, n);
            run("tau.second_kind", with({{"lmax", std::to_string(lsk)}, {"points", std::to_string(opt.points)}}), 1e-6,
                [&] {
                    double e = 0.0;
                    for (int l = ord.period(); l <= lsk; ++l)
                        for (cplx z : zs) e = std::max(e, tau_second_kind_residual(m, ord, {}, l, z));
                    return e;
                });
        }
        if (entire) {
            DeformationTimes z0, a, b;
            a.t1 = {0.05};
            b.t2 = {0.03};
            DeformationTimes c = DeformationTimes::schur({cplx(0.1, 0.0)});
            struct BCase {
                DeformationTimes t, tp;
                int k, l;
            };
            const std::vector<BCase> cases{{z0, z0, 2, 1}, {a, b, 2, 2}, {c, a, 3, 2}, {b, c, 1, 3}};
            run("tau.bilinear", with({{"cases", std::to_string(cases.size())}}), 1e-6, [&] {
                double e = 0.0;
                for (const auto& bc : cases) e = std::max(e, bilinear_residual(m, ord, bc.t, bc.tp, bc.k, bc.l));
                return e;
            });
            run("tau.wave_bilinear", with({{"cases", std::to_string(cases.size())}}), 1e-6, [&] {
                double e = 0.0;
                for (const auto& bc : cases)
                    e = std::max(e, wave_bilinear_report(m, ord, bc.t, bc.tp, bc.k, bc.l).residual);
                return e;
            });
        }
    }
    return out;
}

} // namespace olpuc

#include "olpuc/tau.hpp"

#include "olpuc/error.hpp"
#include "olpuc/quadrature.hpp"
#include "olpuc/second_kind.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace olpuc {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

std::vector<int> range(int n) {
    std::vector<int> v(std::max(n, 0));
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
}

std::vector<int> range_without(int n, int skip) {
    std::vector<int> v;
    for (int i = 0; i < n; ++i)
        if (i != skip) v.push_back(i);
    return v;
}

double rel(cplx a, cplx b) {
    const double s = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) / s;
}

cplx zpow(cplx z, int e) { return std::pow(z, e); }

Measure at_times(const Measure& m, const DeformationTimes& t) { return t.is_zero() ? m : deform(m, t); }

// largest index any tau at level <= l + 1 can touch
int needed_size(const Ordering& ord, int l) { return l + 2 + ord.period(); }

} // namespace

cplx minor_det(const Mat& g, const std::vector<int>& rows, const std::vector<int>& cols) {
    if (rows.size() != cols.size()) throw Error(ErrorKind::SizeMismatch, "minor needs as many rows as columns");
    const int n = static_cast<int>(rows.size());
    Mat a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = g(rows[i], cols[j]);
    return det(a);
}

cplx tau(const Measure& m, const Ordering& ord, const DeformationTimes& t, int l) {
    if (l == 0) return 1.0;
    return det(build_moments(at_times(m, t), ord, l));
}

cplx tau_assoc_from(const Mat& g, const Ordering& ord, int l, int family, AssocSign sign, int a) {
    if (sign == AssocSign::minus) {
        const int q = ord.l_minus(l, a);
        if (g.rows() < l + 1) throw Error(ErrorKind::SizeMismatch, "moment block too small for the minus minor", l);
        const double s = (l + q) % 2 == 0 ? 1.0 : -1.0;
        // the second family keeps l columns so that the minor is square
        if (family == 1) return s * minor_det(g, range(l), range_without(l + 1, q));
        return s * minor_det(g, range_without(l + 1, q), range(l));
    }
    const int p = ord.l_plus(l - 1, a);
    if (g.rows() <= p) throw Error(ErrorKind::SizeMismatch, "moment block too small for the plus minor", p);
    std::vector<int> base = range(l - 1);
    std::vector<int> ext = base;
    ext.push_back(p);
    if (family == 1) return minor_det(g, ext, range(l));
    return minor_det(g, range(l), ext);
}

cplx tau_assoc(const Measure& m, const Ordering& ord, const DeformationTimes& t, int l, int family, AssocSign sign,
               int a) {
    return tau_assoc_from(build_moments(at_times(m, t), ord, needed_size(ord, l)), ord, l, family, sign, a);
}

Measure apply_miwa(const Measure& m, MiwaShift s, cplx z) {
    switch (s) {
    case MiwaShift::minus_zinv_1: return miwa_shift(m, z, MiwaWhich::minus1);
    case MiwaShift::plus_zinv_1: return miwa_shift(m, z, MiwaWhich::plus1);
    case MiwaShift::plus_z_1: return miwa_shift(m, 1.0 / z, MiwaWhich::plus1);
    case MiwaShift::minus_z_1: return miwa_shift(m, 1.0 / z, MiwaWhich::minus1);
    case MiwaShift::plus_z_2: return miwa_shift(m, z, MiwaWhich::plus2);
    case MiwaShift::minus_z_2: return miwa_shift(m, z, MiwaWhich::minus2);
    case MiwaShift::plus_zinv_2: return miwa_shift(m, 1.0 / z, MiwaWhich::plus2);
    case MiwaShift::minus_zinv_2: return miwa_shift(m, 1.0 / z, MiwaWhich::minus2);
    }
    return m;
}

namespace {

// moment blocks of the evolved measure and of its Miwa shifts, built on demand
struct TauContext {
    const Measure& m;
    const Ordering& ord;
    Measure mt;
    int size;
    Mat g;

    TauContext(const Measure& m_, const Ordering& ord_, const DeformationTimes& t, int l)
        : m(m_), ord(ord_), mt(at_times(m_, t)), size(needed_size(ord_, l)), g(build_moments(mt, ord_, size)) {}

    Mat shifted(MiwaShift s, cplx z) const { return build_moments(apply_miwa(mt, s, z), ord, size); }
    cplx tau_main(int l) const { return det(g.topLeftCorner(l, l)); }
};

cplx tau_l(const Mat& g, int l) { return det(g.topLeftCorner(l, l)); }

} // namespace

std::vector<NamedResidual> tau_poly_residuals(const Measure& m, const Ordering& ord, const DeformationTimes& t, int l,
                                              cplx z) {
    if (l < ord.period()) throw Error(ErrorKind::IndexOutOfRange, "tau representations need l >= n_+ + n_-", l);
    TauContext c(m, ord, t, l);
    const Mat gl = c.g.topLeftCorner(l + 1 + ord.period(), l + 1 + ord.period());
    const GaussBorelFactors gb = gauss_borel(c.g.topLeftCorner(l + 1, l + 1));
    const cplx tl = c.tau_main(l), tl1 = c.tau_main(l + 1);
    const cplx zb = std::conj(z);
    const int np = ord.nu_plus(l), nm = ord.nu_minus(l);
    std::vector<NamedResidual> out;
    auto assoc = [&](int family, AssocSign s, int a) {
        return associated_poly(gl, ord, l, family, s, a, AssocMethod::linear_solve);
    };

    const cplx p1 = phi(gb, ord, 1, l)(z);
    const cplx p2c = std::conj(phi(gb, ord, 2, l)(z));
    if (ord.cls(l) == 1) {
        const Mat gs = c.shifted(MiwaShift::minus_zinv_1, z);
        out.push_back({"phi1", rel(p1, zpow(z, np - 1) * tau_l(gs, l) / tl)});
        out.push_back({"phi1_minus1", rel(p1, gb.S2(l, l) * assoc(1, AssocSign::minus, 1)(z))});
        const Mat gp = c.shifted(MiwaShift::plus_z_2, z);
        const int e = ord.nu_minus(ord.l_plus(l, 2));
        out.push_back({"phi1_plus2", rel(assoc(1, AssocSign::plus, 2)(z), zpow(z, -e) * tau_l(gp, l) / tl)});
        out.push_back({"phi1_minus2", rel(assoc(1, AssocSign::minus, 2)(z),
                                          zpow(z, np - 1) * tau_assoc_from(gs, ord, l, 1, AssocSign::minus, 2) / tl1)});
        const Mat gd = c.shifted(MiwaShift::plus_zinv_2, zb);
        out.push_back({"phi2", rel(p2c, zpow(zb, np - 1) * tau_l(gd, l) / tl1)});
        out.push_back({"phi2_plus1", rel(p2c, std::conj(assoc(2, AssocSign::plus, 1)(z)) / gb.S2(l, l))});
        const Mat gm = c.shifted(MiwaShift::minus_z_1, zb);
        out.push_back({"phi2_plus2", rel(std::conj(assoc(2, AssocSign::plus, 2)(z)), zpow(zb, -e) * tau_l(gm, l) / tl)});
        out.push_back({"phi2_minus2", rel(std::conj(assoc(2, AssocSign::minus, 2)(z)),
                                          zpow(zb, np - 1) * tau_assoc_from(gd, ord, l, 2, AssocSign::minus, 2) / tl1)});
    } else {
        const Mat gs = c.shifted(MiwaShift::plus_z_2, z);
        out.push_back({"phi1", rel(p1, zpow(z, -nm) * tau_l(gs, l) / tl)});
        out.push_back({"phi1_minus2", rel(p1, gb.S2(l, l) * assoc(1, AssocSign::minus, 2)(z))});
        const Mat gp = c.shifted(MiwaShift::minus_zinv_1, z);
        const int e = ord.nu_plus(ord.l_plus(l, 1));
        out.push_back({"phi1_plus1", rel(assoc(1, AssocSign::plus, 1)(z), zpow(z, e - 1) * tau_l(gp, l) / tl)});
        out.push_back({"phi1_minus1", rel(assoc(1, AssocSign::minus, 1)(z),
                                          zpow(z, -nm) * tau_assoc_from(gs, ord, l, 1, AssocSign::minus, 1) / tl1)});
        const Mat gd = c.shifted(MiwaShift::minus_z_1, zb);
        out.push_back({"phi2", rel(p2c, zpow(zb, -nm) * tau_l(gd, l) / tl1)});
        out.push_back({"phi2_plus2", rel(p2c, std::conj(assoc(2, AssocSign::plus, 2)(z)) / gb.S2(l, l))});
        const Mat gm = c.shifted(MiwaShift::plus_zinv_2, zb);
        out.push_back({"phi2_plus1", rel(std::conj(assoc(2, AssocSign::plus, 1)(z)), zpow(zb, e - 1) * tau_l(gm, l) / tl)});
        out.push_back({"phi2_minus1", rel(std::conj(assoc(2, AssocSign::minus, 1)(z)),
                                          zpow(zb, -nm) * tau_assoc_from(gd, ord, l, 2, AssocSign::minus, 1) / tl1)});
    }
    return out;
}

double tau_poly_residual(const Measure& m, const Ordering& ord, const DeformationTimes& t, int l, cplx z) {
    double r = 0.0;
    for (const auto& n : tau_poly_residuals(m, ord, t, l, z)) r = std::max(r, n.residual);
    return r;
}

std::vector<NamedResidual> tau_second_kind_residuals(const Measure& m, const Ordering& ord, const DeformationTimes& t,
                                                     int l, cplx z) {
    if (l < ord.period()) throw Error(ErrorKind::IndexOutOfRange, "tau representations need l >= n_+ + n_-", l);
    TauContext c(m, ord, t, l);
    const GaussBorelFactors gb = gauss_borel(c.g.topLeftCorner(l + 1, l + 1));
    const cplx tl = c.tau_main(l), tl1 = c.tau_main(l + 1);
    const cplx zb = std::conj(z);
    const int p1 = ord.l_plus(l, 1), p2 = ord.l_plus(l, 2);
    const int e1 = ord.nu_plus(p1), e2 = ord.nu_minus(p2);
    std::vector<NamedResidual> out;
    auto region_has = [&](SecondKind w) { return second_kind_region(c.mt, w).contains(z); };
    auto sk = [&](SecondKind w) { return second_kind(c.mt, gb, ord, l, w, z); };

    cplx c11 = 0.0, c12 = 0.0, c21 = 0.0, c22 = 0.0;
    cplx r11 = 0.0, r12 = 0.0, r21 = 0.0, r22 = 0.0;
    if (region_has(SecondKind::C11)) {
        c11 = std::conj(sk(SecondKind::C11));
        r11 = zpow(zb, -e1) * tau_assoc_from(c.shifted(MiwaShift::plus_zinv_1, zb), ord, l + 1, 1, AssocSign::plus, 1) / tl1;
        out.push_back({"C11", rel(c11, r11)});
    }
    if (region_has(SecondKind::C12)) {
        c12 = std::conj(sk(SecondKind::C12));
        r12 = zpow(zb, e2 - 1) * tau_assoc_from(c.shifted(MiwaShift::minus_z_2, zb), ord, l + 1, 1, AssocSign::plus, 2) / tl1;
        out.push_back({"C12", rel(c12, r12)});
    }
    if (region_has(SecondKind::C11) && region_has(SecondKind::C12))
        out.push_back({"C1", rel(std::conj(sk(SecondKind::C1)), r11 + r12)});
    if (region_has(SecondKind::C21)) {
        c21 = sk(SecondKind::C21);
        r21 = zpow(z, -e1) * tau_assoc_from(c.shifted(MiwaShift::minus_zinv_2, z), ord, l + 1, 2, AssocSign::plus, 1) / tl;
        out.push_back({"C21", rel(c21, r21)});
    }
    if (region_has(SecondKind::C22)) {
        c22 = sk(SecondKind::C22);
        r22 = zpow(z, e2 - 1) * tau_assoc_from(c.shifted(MiwaShift::plus_z_1, z), ord, l + 1, 2, AssocSign::plus, 2) / tl;
        out.push_back({"C22", rel(c22, r22)});
    }
    if (region_has(SecondKind::C21) && region_has(SecondKind::C22))
        out.push_back({"C2", rel(sk(SecondKind::C2), r21 + r22)});

    if (c.mt.annulus().contains(z)) {
        const cplx F = eval_fseries(c.mt, z);
        const int s = e1 + e2 - 1;
        auto ta = [&](MiwaShift sh, cplx w, int family, int a) {
            return tau_assoc_from(c.shifted(sh, w), ord, l + 1, family, AssocSign::plus, a);
        };
        const cplx a21 = ta(MiwaShift::minus_z_2, z, 2, 1), a22 = ta(MiwaShift::plus_zinv_1, z, 2, 2);
        const cplx a11 = ta(MiwaShift::plus_zinv_1, z, 1, 1), a12 = ta(MiwaShift::minus_z_2, z, 1, 2);
        const cplx d_minus = tau_l(c.shifted(MiwaShift::minus_zinv_1, z), l);
        const cplx d_plus = tau_l(c.shifted(MiwaShift::plus_z_2, z), l);
        if (ord.cls(l) == 1) {
            out.push_back({"F_family2", rel(F, (a21 + zpow(z, -s) * a22) / (two_pi * d_minus))});
            out.push_back({"F_family1", rel(F, (a11 + zpow(z, s) * a12) / (two_pi * d_plus))});
        } else {
            out.push_back({"F_family2", rel(F, (zpow(z, s) * a21 + a22) / (two_pi * d_plus))});
            out.push_back({"F_family1", rel(F, (zpow(z, -s) * a11 + a12) / (two_pi * d_minus))});
        }
    }
    return out;
}

double tau_second_kind_residual(const Measure& m, const Ordering& ord, const DeformationTimes& t, int l, cplx z) {
    double r = 0.0;
    for (const auto& n : tau_second_kind_residuals(m, ord, t, l, z)) r = std::max(r, n.residual);
    return r;
}

namespace {

cplx exp_times(const std::vector<cplx>& c, cplx z) {
    cplx s = 0.0, zp = 1.0;
    for (const cplx& cj : c) {
        zp *= z;
        s += cj * zp;
    }
    return std::exp(s);
}

} // namespace

BilinearReport bilinear_report(const Measure& m, const Ordering& ord, const DeformationTimes& t,
                               const DeformationTimes& tp, int k, int l, double r0, double r_inf, int N) {
    const Annulus an = m.annulus();
    if (an.r_minus > 0.0 || std::isfinite(an.r_plus))
        throw Error(ErrorKind::OutsideRegion, "bilinear contours need an entire-type weight");
    if (!(r0 < 1.0 && r_inf > 1.0)) throw Error(ErrorKind::OutsideRegion, "need r0 < 1 < rInf");
    const int size = std::max(k, l) + 1;
    const GaussBorelFactors gt = factorize_at_time(m, ord, t, size);
    const GaussBorelFactors gtp = factorize_at_time(m, ord, tp, size);
    const LaurentPoly p1 = phi(gt, ord, 1, k);
    const LaurentPoly p2 = phi(gtp, ord, 2, l).conj_coeffs();
    std::vector<cplx> mt2(tp.t2.size());
    for (size_t j = 0; j < mt2.size(); ++j) mt2[j] = -tp.t2[j];
    const ZFunc f = [&](cplx z) {
        const cplx zi = 1.0 / z;
        return p1(z) * p2(zi) * zi * eval_fseries(m, z) * exp_times(t.t1, z) * exp_times(mt2, zi);
    };
    BilinearReport r;
    r.i0 = circle_integral(f, r0, N);
    r.i_inf = circle_integral(f, r_inf, N);
    // |f||dz| on the inner circle
    double s = 0.0;
    for (int j = 0; j < N; ++j) s += std::abs(f(std::polar(r0, two_pi * j / N))) * r0 * two_pi / N;
    r.scale = s;
    r.residual = std::abs(r.i0 - r.i_inf) / std::max({std::abs(r.i0), s, 1e-30});
    return r;
}

double bilinear_residual(const Measure& m, const Ordering& ord, const DeformationTimes& t, const DeformationTimes& tp,
                         int k, int l, double r0, double r_inf, int N) {
    return bilinear_report(m, ord, t, tp, k, l, r0, r_inf, N).residual;
}

BilinearReport wave_bilinear_report(const Measure& m, const Ordering& ord, const DeformationTimes& t,
                                    const DeformationTimes& tp, int n, int k, double r0, int N) {
    const int size = std::max(n, k) + 1;
    const GaussBorelFactors gt = factorize_at_time(m, ord, t, size);
    const GaussBorelFactors gtp = factorize_at_time(m, ord, tp, size);
    const ZFunc f1 = [&](cplx z) {
        return wave_eval(m, gt, t, ord, n, z, Wave::psi1) *
               std::conj(wave_eval(m, gtp, tp, ord, k, std::conj(z), Wave::psi1_star));
    };
    const ZFunc f2 = [&](cplx z) {
        return wave_eval(m, gt, t, ord, n, z, Wave::psi2) *
               std::conj(wave_eval(m, gtp, tp, ord, k, std::conj(z), Wave::psi2_star));
    };
    BilinearReport r;
    r.i0 = circle_integral(f1, r0, N);
    r.i_inf = circle_integral(f2, r0, N);
    double s = 0.0;
    for (int j = 0; j < N; ++j) s += std::abs(f1(std::polar(r0, two_pi * j / N))) * r0 * two_pi / N;
    r.scale = s;
    r.residual = std::abs(r.i0 - r.i_inf) / std::max({std::abs(r.i0), s, 1e-30});
    return r;
}

} // namespace olpuc

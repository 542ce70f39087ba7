#include "olpuc/second_kind.hpp"

#include "olpuc/cd_kernel.hpp"
#include "olpuc/error.hpp"
#include "olpuc/quadrature.hpp"

#include <numbers>

namespace olpuc {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double inv(double r) {
    if (r == 0.0) return std::numeric_limits<double>::infinity();
    if (std::isinf(r)) return 0.0;
    return 1.0 / r;
}

bool is_first_family(SecondKind w) { return w == SecondKind::C11 || w == SecondKind::C12 || w == SecondKind::C1; }

void require(const Annulus& a, cplx z) {
    if (!a.contains(z)) throw Error(ErrorKind::OutsideRegion, "z outside the convergence region");
}

cplx series_form(const Measure& m, const LaurentPoly& p, SecondKind which, cplx z, int N) {
    cplx s = 0.0;
    const cplx zi = 1.0 / z;
    switch (which) {
    case SecondKind::C21:
        for (const auto& [k, a] : p.terms()) s += a * std::pow(z, -k - 1) * eval_fseries(m, zi, SeriesMode::plus_k, k, N);
        break;
    case SecondKind::C22:
        for (const auto& [k, a] : p.terms()) s += a * std::pow(z, -k - 1) * eval_fseries(m, zi, SeriesMode::minus_k, k, N);
        break;
    case SecondKind::C11:
        for (const auto& [k, a] : p.terms())
            s += a * std::pow(z, -k - 1) * eval_fseries_conj(m, z, SeriesMode::minus_k, -k - 1, N);
        break;
    case SecondKind::C12:
        for (const auto& [k, a] : p.terms())
            s += a * std::pow(z, -k - 1) * eval_fseries_conj(m, z, SeriesMode::plus_k, -k - 1, N);
        break;
    case SecondKind::C1: return two_pi * p(zi) * zi * eval_fseries_conj(m, z, SeriesMode::full, 0, N);
    case SecondKind::C2: return two_pi * p(zi) * zi * eval_fseries(m, zi, SeriesMode::full, 0, N);
    }
    return two_pi * s;
}

cplx cauchy_form(const Measure& m, const LaurentPoly& p, SecondKind which, cplx z, int N, bool geronimus) {
    const double r = std::abs(z);
    if (r > 0.95 && r < 1.05) throw Error(ErrorKind::QuadratureNearCircle, "|z| too close to 1 for the Cauchy form");
    const bool outer = which == SecondKind::C11 || which == SecondKind::C21;
    if (which == SecondKind::C1 || which == SecondKind::C2 || outer != (r > 1.0))
        throw Error(ErrorKind::OutsideRegion, "Cauchy form needs |z| > 1 for C_{a,1} and |z| < 1 for C_{a,2}");
    const cplx zi = 1.0 / z;
    ZFunc f;
    if (geronimus) f = [&](cplx u) { return (u + zi) / (u - zi) * p(u) / (2.0 * z); };
    else f = [&](cplx u) { return zi * u * p(u) / (u - zi); };
    cplx v = is_first_family(which) ? integrate_conj(m, f, N) : integrate(m, f, N);
    return outer ? v : -v;
}

// Gamma pieces evaluated for every j <= l
Vec gamma_column(const Measure& m, const Ordering& ord, int l, int side, cplx z, int N, GammaPart part) {
    Vec c(l + 1);
    for (int j = 0; j <= l; ++j) c(j) = gamma_eval(m, ord, l, j, side, z, N, part);
    return c;
}

GammaPart part_of(SecondKind w) {
    switch (w) {
    case SecondKind::C11:
    case SecondKind::C21: return GammaPart::class1;
    case SecondKind::C12:
    case SecondKind::C22: return GammaPart::class2;
    default: return GammaPart::both;
    }
}

cplx gamma_form(const Measure& m, const Ordering& ord, int l, SecondKind which, cplx z, int N) {
    const Mat g = build_moments(m, ord, l + 1);
    const GammaPart part = part_of(which);
    if (!is_first_family(which)) {
        // rows 0..l of columns 0..l-1, bordered by the Gamma_1 column
        const cplx d = det(g.topLeftCorner(l, l));
        if (std::abs(d) == 0.0) throw Error(ErrorKind::SingularMinor, "vanishing minor", l);
        const Vec cof = bordered_row_cofactors(g.topLeftCorner(l + 1, l).transpose());
        return (cof.transpose() * gamma_column(m, ord, l, 1, z, N, part))(0) / d;
    }
    // conj(C_1) = det[g rows 0..l-1 ; conj(Gamma_2)] / det g^{[l+1]}
    const cplx d = det(g);
    if (std::abs(d) == 0.0) throw Error(ErrorKind::SingularMinor, "vanishing minor", l + 1);
    const Vec cof = bordered_row_cofactors(g.topRows(l));
    const Vec gam = gamma_column(m, ord, l, 2, z, N, part);
    return (cof.conjugate().transpose() * gam)(0) / std::conj(d);
}

} // namespace

Annulus second_kind_region(const Measure& m, SecondKind which) {
    const Annulus a = m.annulus();
    Annulus r;
    switch (which) {
    case SecondKind::C11: r.r_minus = a.r_minus; break;
    case SecondKind::C12: r.r_plus = a.r_plus; break;
    case SecondKind::C21: r.r_minus = inv(a.r_plus); break;
    case SecondKind::C22: r.r_plus = inv(a.r_minus); break;
    case SecondKind::C1: r = a; break;
    case SecondKind::C2:
        r.r_minus = inv(a.r_plus);
        r.r_plus = inv(a.r_minus);
        break;
    }
    return r;
}

cplx second_kind(const Measure& m, const GaussBorelFactors& gb, const Ordering& ord, int l, SecondKind which,
                 cplx z, SKMethod method, int N) {
    if (l < 0 || l >= gb.size()) throw Error(ErrorKind::IndexOutOfRange, "level outside the factorization", l);
    if (z == cplx(0.0)) throw Error(ErrorKind::OutsideRegion, "z = 0");
    const LaurentPoly p = phi(gb, ord, is_first_family(which) ? 2 : 1, l);
    switch (method) {
    case SKMethod::series: require(second_kind_region(m, which), z); return series_form(m, p, which, z, N);
    case SKMethod::cauchy: return cauchy_form(m, p, which, z, N, false);
    case SKMethod::geronimus: return cauchy_form(m, p, which, z, N, true);
    case SKMethod::gamma_det: require(second_kind_region(m, which), z); return gamma_form(m, ord, l, which, z, N);
    }
    return 0.0;
}

cplx gamma_eval(const Measure& m, const Ordering& ord, int l, int j, int side, cplx z, int N, GammaPart part) {
    if (z == cplx(0.0)) throw Error(ErrorKind::OutsideRegion, "z = 0");
    const int J = ord.exponent(j);
    // exponents J(k), k >= l, are those >= nu_+(l-1) and those < -nu_-(l-1)
    const int np = ord.nu_plus(l - 1);
    const int nm = ord.nu_minus(l - 1);
    const cplx pre = two_pi * std::pow(z, -J - 1);
    const cplx zi = 1.0 / z;
    cplx s = 0.0;
    if (side == 1) {
        require(second_kind_region(m, part == GammaPart::class1 ? SecondKind::C21
                                      : part == GammaPart::class2 ? SecondKind::C22 : SecondKind::C2), z);
        if (part != GammaPart::class2) s += eval_fseries(m, zi, SeriesMode::plus_k, J - np, N);
        if (part != GammaPart::class1) s += eval_fseries(m, zi, SeriesMode::minus_k, J + nm, N);
    } else {
        require(second_kind_region(m, part == GammaPart::class1 ? SecondKind::C11
                                      : part == GammaPart::class2 ? SecondKind::C12 : SecondKind::C1), z);
        if (part != GammaPart::class2) s += eval_fseries_conj(m, z, SeriesMode::minus_k, np - J - 1, N);
        if (part != GammaPart::class1) s += eval_fseries_conj(m, z, SeriesMode::plus_k, -J - nm - 1, N);
    }
    return pre * s;
}

cplx phi_part(const GaussBorelFactors& gb, const Ordering& ord, int a, int b, int l, cplx z) {
    cplx s = 0.0;
    for (int k = 0; k <= l; ++k) {
        if (ord.cls(k) != b) continue;
        const cplx c = a == 1 ? gb.S1(l, k) : std::conj(gb.S2inv(k, l));
        s += c * std::pow(z, ord.exponent(k));
    }
    return s;
}

cplx summation_sum(const Measure& m, const GaussBorelFactors& gb, const Ordering& ord, int L, int a, int bc,
                   int bp, cplx z, cplx zp, int N) {
    SecondKind w;
    if (a == 1) w = bc == 1 ? SecondKind::C11 : SecondKind::C12;
    else w = bc == 1 ? SecondKind::C21 : SecondKind::C22;
    cplx s = 0.0;
    for (int l = 0; l < L; ++l)
        s += std::conj(second_kind(m, gb, ord, l, w, std::conj(z), SKMethod::series, N)) * phi_part(gb, ord, a, bp, l, zp);
    return s;
}

cplx summation_limit(int bc, int bp, cplx z, cplx zp) {
    if (bc != bp) return 0.0;
    return bc == 1 ? 1.0 / (z - zp) : 1.0 / (zp - z);
}

} // namespace olpuc

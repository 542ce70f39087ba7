#include "olpuc/cd_kernel.hpp"

#include "olpuc/error.hpp"

#include <numbers>

namespace olpuc {

cplx kernel_sum(const GaussBorelFactors& gb, const Ordering& ord, int l, cplx z, cplx zp) {
    if (l > gb.size()) throw Error(ErrorKind::IndexOutOfRange, "kernel level exceeds the factorization", l);
    if (l <= 0) return 0.0;
    const Vec p1 = gb.S1.topLeftCorner(l, l) * chi(ord, l, zp);
    // conj(phi_2^{(k)}(z)) = sum_j S2inv_{jk} conj(z^{J(j)})
    const Vec p2c = gb.S2inv.topLeftCorner(l, l).transpose() * chi(ord, l, z).conjugate();
    return (p1.array() * p2c.array()).sum();
}

cplx kernel_abc(const Mat& g, const Ordering& ord, int l, cplx z, cplx zp) {
    if (l > g.rows()) throw Error(ErrorKind::IndexOutOfRange, "kernel level exceeds the moment matrix", l);
    if (l <= 0) return 0.0;
    const Mat G = g.topLeftCorner(l, l);
    auto lu = G.partialPivLu();
    if (std::abs(lu.determinant()) == 0.0) throw Error(ErrorKind::SingularMinor, "singular truncation", l);
    const Vec x = lu.solve(chi(ord, l, zp));
    return chi(ord, l, z).dot(x);
}

Vec bordered_row_cofactors(const Mat& B) {
    const int n = static_cast<int>(B.cols());
    const int r = static_cast<int>(B.rows());
    Vec c(n);
    for (int k = 0; k < n; ++k) {
        Mat minor(r, n - 1);
        for (int j = 0, col = 0; j < n; ++j)
            if (j != k) minor.col(col++) = B.col(j);
        c(k) = (((r + k) % 2) ? -1.0 : 1.0) * det(minor);
    }
    return c;
}

namespace {

Mat rows_of(const Mat& g, const std::vector<int>& rows, const std::vector<int>& cols) {
    Mat out(rows.size(), cols.size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) out(i, j) = g(rows[i], cols[j]);
    return out;
}

std::vector<int> range_upto(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
}

// coefficients on chi^{(0..l-1)} followed by chi^{(p)}
LaurentPoly poly_with_extra(const Ordering& ord, const Vec& head, int p, cplx top) {
    LaurentPoly q = from_coeffs(ord, head);
    q.add(ord.exponent(p), top);
    return q;
}

// index carrying exponent -nu_-(l) (a = 2) or nu_+(l) - 1 (a = 1); before the first
// class-2 index the former is exponent 0, i.e. index 0
int minus_index(const Ordering& ord, int l, int a) {
    try {
        return ord.l_minus(l, a);
    } catch (const Error&) {
        return 0;
    }
}

LaurentPoly plus_poly(const Mat& g, const Ordering& ord, int l, int family, int a, AssocMethod method,
                      const GaussBorelFactors* gb) {
    const int p = ord.l_plus(l, a);
    if (p >= g.rows()) throw Error(ErrorKind::IndexOutOfRange, "moment matrix too small for l_{+a}", p);
    if (method == AssocMethod::lincomb) {
        if (!gb || p >= gb->size()) throw Error(ErrorKind::IndexOutOfRange, "factors too small for l_{+a}", p);
        Mat s1inv = gb->S1.triangularView<Eigen::UnitLower>().solve(Mat::Identity(gb->size(), gb->size()));
        LaurentPoly out;
        for (int j = l; j <= p; ++j) {
            if (family == 1) out = out + phi(*gb, ord, 1, j).scaled(s1inv(p, j));
            else out = out + phi(*gb, ord, 2, j).scaled(std::conj(gb->S2(j, p)));
        }
        return out;
    }
    const Mat G = g.topLeftCorner(l, l);
    if (method == AssocMethod::linear_solve) {
        if (l == 0) return LaurentPoly::monomial(ord.exponent(p));
        Vec c;
        if (family == 1) c = -G.transpose().partialPivLu().solve(g.row(p).head(l).transpose());
        else c = -(G.partialPivLu().solve(g.col(p).head(l))).conjugate();
        return poly_with_extra(ord, c, p, 1.0);
    }
    // determinantal
    const cplx d = det(G);
    if (std::abs(d) == 0.0) throw Error(ErrorKind::SingularMinor, "vanishing minor", l);
    std::vector<int> idx = range_upto(l);
    std::vector<int> ext = idx;
    ext.push_back(p);
    Vec cof;
    if (family == 1) cof = bordered_row_cofactors(rows_of(g, ext, idx).transpose()) / d;
    else cof = (bordered_row_cofactors(rows_of(g, idx, ext)) / d).conjugate();
    return poly_with_extra(ord, cof.head(l), p, cof(l));
}

LaurentPoly minus_poly(const Mat& g, const Ordering& ord, int l, int family, int a, AssocMethod method,
                       const GaussBorelFactors* gb) {
    const int q = minus_index(ord, l, a);
    if (l + 1 > g.rows()) throw Error(ErrorKind::IndexOutOfRange, "moment matrix too small", l);
    if (method == AssocMethod::lincomb) {
        if (!gb || l >= gb->size()) throw Error(ErrorKind::IndexOutOfRange, "factors too small", l);
        LaurentPoly out;
        for (int j = q; j <= l; ++j) {
            if (family == 1) out = out + phi(*gb, ord, 1, j).scaled(gb->S2inv(q, j));
            else out = out + phi(*gb, ord, 2, j).scaled(std::conj(gb->S1(j, q)));
        }
        return out;
    }
    const Mat G = g.topLeftCorner(l + 1, l + 1);
    if (method == AssocMethod::linear_solve) {
        Vec e = Vec::Zero(l + 1);
        e(q) = 1.0;
        // row q of G^{-1}, or conj of column q
        Vec c = family == 1 ? Vec(G.transpose().partialPivLu().solve(e)) : Vec(G.partialPivLu().solve(e).conjugate());
        return from_coeffs(ord, c);
    }
    const cplx d = det(G);
    if (std::abs(d) == 0.0) throw Error(ErrorKind::SingularMinor, "vanishing minor", l + 1);
    const double sign = ((l + q) % 2) ? -1.0 : 1.0;
    std::vector<int> all = range_upto(l + 1);
    std::vector<int> cut;
    for (int i = 0; i <= l; ++i)
        if (i != q) cut.push_back(i);
    Vec cof;
    if (family == 1) cof = sign * bordered_row_cofactors(rows_of(g, all, cut).transpose()) / d;
    else cof = (sign * bordered_row_cofactors(rows_of(g, cut, all)) / d).conjugate();
    return from_coeffs(ord, cof);
}

} // namespace

LaurentPoly associated_poly(const Mat& g, const Ordering& ord, int l, int family, AssocSign sign, int a,
                            AssocMethod method, const GaussBorelFactors* gb) {
    if (l < 0) throw Error(ErrorKind::IndexOutOfRange, "negative level", l);
    if (sign == AssocSign::plus) return plus_poly(g, ord, l, family, a, method, gb);
    return minus_poly(g, ord, l, family, a, method, gb);
}

AssociatedPolys associated(const Mat& g, const Ordering& ord, int l, AssocMethod method,
                           const GaussBorelFactors* gb) {
    if (l < 1) throw Error(ErrorKind::IndexOutOfRange, "associated polynomials need l >= 1", l);
    AssociatedPolys as;
    as.l = l;
    for (int a = 1; a <= 2; ++a) {
        as.phi1_plus[a - 1] = associated_poly(g, ord, l, 1, AssocSign::plus, a, method, gb);
        as.phi2_plus[a - 1] = associated_poly(g, ord, l, 2, AssocSign::plus, a, method, gb);
        as.phi1_minus[a - 1] = associated_poly(g, ord, l - 1, 1, AssocSign::minus, a, method, gb);
        as.phi2_minus[a - 1] = associated_poly(g, ord, l - 1, 2, AssocSign::minus, a, method, gb);
    }
    return as;
}

cplx cd_formula(const AssociatedPolys& as, cplx z, cplx zp) {
    const cplx den = 1.0 - zp * std::conj(z);
    if (std::abs(den) < 1e-8) throw Error(ErrorKind::DegenerateDiagonal, "z' conj(z) too close to 1");
    const cplx zb = std::conj(z);
    const cplx num = zb * std::conj(as.phi2_plus[1](z)) * as.phi1_minus[1](zp) -
                     as.phi1_plus[0](zp) * zb * std::conj(as.phi2_minus[0](z));
    return num / den;
}

LaurentPoly project(const Measure& m, const GaussBorelFactors& gb, const Ordering& ord, int l, const LaurentPoly& f) {
    if (l > gb.size()) throw Error(ErrorKind::IndexOutOfRange, "projection level exceeds the factorization", l);
    const double tp = 2.0 * std::numbers::pi;
    LaurentPoly out;
    for (int k = 0; k < l; ++k) {
        const LaurentPoly p2 = phi(gb, ord, 2, k);
        // <f, phi_2^{(k)}> = sum f_m conj(b_j) 2 pi c_{J(j) - m}
        cplx s = 0.0;
        for (const auto& [em, fm] : f.terms())
            for (const auto& [ej, bj] : p2.terms()) s += fm * std::conj(bj) * tp * m.coeff(ej - em);
        out = out + phi(gb, ord, 1, k).scaled(s);
    }
    return out;
}

} // namespace olpuc

#include "olpuc/factorization.hpp"

#include "olpuc/error.hpp"

#include <iomanip>
#include <numbers>
#include <ostream>

namespace olpuc {

cplx det(const Mat& a) {
    if (a.rows() == 0) return 1.0;
    return a.partialPivLu().determinant();
}

LaurentPoly from_coeffs(const Ordering& ord, const Vec& v) {
    LaurentPoly p;
    for (int k = 0; k < v.size(); ++k) p.set(ord.exponent(k), v(k));
    return p;
}

GaussBorelFactors gauss_borel(const Mat& g, double tol) {
    if (g.rows() != g.cols()) throw Error(ErrorKind::SizeMismatch, "moment matrix must be square");
    const int n = static_cast<int>(g.rows());
    const double scale = n ? g.cwiseAbs().maxCoeff() : 1.0;
    Mat L = Mat::Identity(n, n);
    Mat U = g;
    for (int k = 0; k < n; ++k) {
        if (std::abs(U(k, k)) < tol * scale)
            throw Error(ErrorKind::SingularMinor, "leading minor " + std::to_string(k + 1) + " vanishes", k + 1);
        for (int i = k + 1; i < n; ++i) {
            cplx f = U(i, k) / U(k, k);
            L(i, k) = f;
            U.row(i).tail(n - k) -= f * U.row(k).tail(n - k);
            U(i, k) = 0.0;
        }
    }
    GaussBorelFactors gb;
    gb.S1 = L.triangularView<Eigen::UnitLower>().solve(Mat::Identity(n, n));
    gb.S2 = U;
    gb.S2inv = U.triangularView<Eigen::Upper>().solve(Mat::Identity(n, n));
    gb.h = U.diagonal();
    return gb;
}

GaussBorelFactors factorize(const Measure& m, const Ordering& ord, int size) {
    return gauss_borel(build_moments(m, ord, size));
}

LaurentPoly phi(const GaussBorelFactors& gb, const Ordering& ord, int family, int l) {
    if (l < 0 || l >= gb.size()) throw Error(ErrorKind::IndexOutOfRange, "phi index outside the factorization", l);
    if (family == 1) return from_coeffs(ord, gb.S1.row(l).head(l + 1).transpose());
    return from_coeffs(ord, gb.S2inv.col(l).head(l + 1).conjugate());
}

LaurentPoly phi_determinantal(const Mat& g, const Ordering& ord, int family, int l) {
    if (l < 0 || l >= g.rows()) throw Error(ErrorKind::IndexOutOfRange, "phi index outside the moment matrix", l);
    Vec c(l + 1);
    if (family == 1) {
        // bordered by the first l columns of g, expanded along the chi row
        const cplx d = det(g.topLeftCorner(l, l));
        if (std::abs(d) == 0.0) throw Error(ErrorKind::SingularMinor, "vanishing minor", l);
        for (int k = 0; k <= l; ++k) {
            Mat minor(l, l);
            for (int j = 0, col = 0; j <= l; ++j) {
                if (j == k) continue;
                minor.col(col++) = g.block(j, 0, 1, l).transpose();
            }
            const double sign = ((l + k) % 2) ? -1.0 : 1.0;
            c(k) = sign * det(minor) / d;
        }
    } else {
        const Mat G = g.topLeftCorner(l + 1, l + 1);
        const cplx d = det(G);
        if (std::abs(d) == 0.0) throw Error(ErrorKind::SingularMinor, "vanishing minor", l + 1);
        for (int k = 0; k <= l; ++k) {
            Mat b = G;
            b.row(l).setZero();
            b(l, k) = 1.0;
            c(k) = std::conj(det(b) / d);
        }
    }
    return from_coeffs(ord, c);
}

VerblunskyData verblunsky(const GaussBorelFactors& gb, const Ordering& ord) {
    VerblunskyData v;
    const int n = gb.size();
    for (int l = 0; l < n; ++l) {
        const cplx h = gb.h(l);
        v.h.push_back(h);
        if (l == 0) {
            v.alpha1.push_back(1.0);
            v.alpha2.push_back(1.0);
            v.rho2.push_back(0.0);
            continue;
        }
        v.rho2.push_back(h / gb.h(l - 1));
        const LaurentPoly p1 = phi(gb, ord, 1, l);
        const LaurentPoly p2 = phi(gb, ord, 2, l);
        if (ord.cls(l) == 1) {
            const int e = -ord.nu_minus(l);
            v.alpha1.push_back(p1.coeff(e));
            v.alpha2.push_back(std::conj(h) * p2.coeff(e));
        } else {
            const int e = ord.nu_plus(l) - 1;
            v.alpha2.push_back(std::conj(p1.coeff(e)));
            v.alpha1.push_back(h * std::conj(p2.coeff(e)));
        }
    }
    return v;
}

SzegoPoly szego_from_olp(const LaurentPoly& p, const Ordering& ord, int l, bool positive) {
    SzegoPoly s;
    s.positive = positive;
    const int shift = ord.nu_minus(l);
    s.coeffs.assign(l + 1, 0.0);
    for (const auto& [e, a] : p.terms()) {
        const int k = e + shift;
        if (k < 0 || k > l) throw Error(ErrorKind::IndexOutOfRange, "Laurent polynomial outside its degree window", e);
        s.coeffs[k] = a;
    }
    return s;
}

std::vector<cplx> szego_oracle(const Measure& m, int l) {
    std::vector<cplx> p(l + 1, 0.0);
    p[l] = 1.0;
    if (l == 0) return p;
    const double tp = 2.0 * std::numbers::pi;
    Mat T(l, l);
    Vec rhs(l);
    for (int k = 0; k < l; ++k) {
        for (int j = 0; j < l; ++j) T(k, j) = tp * m.coeff(k - j);
        rhs(k) = -tp * m.coeff(k - l);
    }
    auto lu = T.partialPivLu();
    const double scale = T.cwiseAbs().maxCoeff();
    if (std::abs(lu.determinant()) <= 1e-14 * std::pow(scale, l))
        throw Error(ErrorKind::SingularMinor, "Toeplitz system is singular", l);
    Vec x = lu.solve(rhs);
    for (int j = 0; j < l; ++j) p[j] = x(j);
    return p;
}

std::pair<std::vector<cplx>, std::vector<cplx>> szego_recursion(const std::vector<cplx>& alpha, int l) {
    std::vector<cplx> P{1.0}, Q{1.0};
    for (int k = 1; k <= l; ++k) {
        const cplx a = alpha.at(k);
        std::vector<cplx> nP(k + 1, 0.0), nQ(k + 1, 0.0);
        for (int j = 0; j < k; ++j) {
            nP[j + 1] += P[j];
            nP[j] += a * Q[j];
            nQ[j + 1] += std::conj(a) * P[j];
            nQ[j] += Q[j];
        }
        P = std::move(nP);
        Q = std::move(nQ);
    }
    return {P, Q};
}

void write_verblunsky_csv(std::ostream& os, const VerblunskyData& v) {
    os << "l,re_alpha1,im_alpha1,re_alpha2,im_alpha2,re_rho2,im_rho2,re_h,im_h\n";
    os << std::setprecision(15);
    for (size_t l = 0; l < v.alpha1.size(); ++l) {
        const cplx h = l < v.h.size() ? v.h[l] : cplx(std::nan(""), std::nan(""));
        os << l << ',' << v.alpha1[l].real() << ',' << v.alpha1[l].imag() << ',' << v.alpha2[l].real() << ','
           << v.alpha2[l].imag() << ',' << v.rho2[l].real() << ',' << v.rho2[l].imag() << ',' << h.real() << ','
           << h.imag() << '\n';
    }
}

} // namespace olpuc

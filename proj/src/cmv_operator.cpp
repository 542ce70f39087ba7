#include "olpuc/cmv_operator.hpp"

#include "olpuc/error.hpp"

namespace olpuc {

Mat jacobi_dressed(const GaussBorelFactors& gb, const Mat& ups, int side) {
    if (ups.rows() != gb.size() || ups.cols() != gb.size())
        throw Error(ErrorKind::SizeMismatch, "shift and factors differ in size");
    if (side == 1) {
        Mat s1inv = gb.S1.triangularView<Eigen::UnitLower>().solve(Mat::Identity(gb.size(), gb.size()));
        return gb.S1 * ups * s1inv;
    }
    return gb.S2 * ups * gb.S2inv;
}

Mat jacobi_inverse_dressed(const GaussBorelFactors& gb, const Mat& ups) {
    if (ups.rows() != gb.size() || ups.cols() != gb.size())
        throw Error(ErrorKind::SizeMismatch, "shift and factors differ in size");
    Mat s1inv = gb.S1.triangularView<Eigen::UnitLower>().solve(Mat::Identity(gb.size(), gb.size()));
    return gb.S1 * ups.transpose() * s1inv;
}

namespace {

void require_cmv(const Ordering& ord) {
    if (!ord.is_cmv()) throw Error(ErrorKind::OrderingNotCMV, "closed-form coefficients exist for (1,1) only");
}

struct Coef {
    const VerblunskyData& v;
    bool ok(int k) const { return k >= 0 && k < static_cast<int>(v.alpha1.size()); }
    cplx a1(int k) const { return v.alpha1.at(k); }
    cplx a2b(int k) const { return std::conj(v.alpha2.at(k)); }
    cplx r2(int k) const { return v.rho2.at(k); }
};

void put(Mat& J, int i, int j, const std::function<cplx()>& f) {
    if (i < 0 || j < 0 || i >= J.rows() || j >= J.cols()) return;
    try {
        J(i, j) = f();
    } catch (const std::out_of_range&) {
        // coefficient beyond the available data: leave the truncation edge empty
    }
}

} // namespace

Mat jacobi_explicit_cmv(const VerblunskyData& v, int size, const Ordering& ord) {
    require_cmv(ord);
    Coef c{v};
    Mat J = Mat::Zero(size, size);
    for (int k = 0; 2 * k < size; ++k) {
        const int e = 2 * k, o = 2 * k + 1;
        put(J, e, e - 1, [&] { return -c.r2(e) * c.a1(e + 1); });
        put(J, e, e, [&] { return -c.a2b(e) * c.a1(e + 1); });
        put(J, e, e + 1, [&] { return -c.a1(e + 2); });
        put(J, e, e + 2, [&] { return cplx(1.0); });
        put(J, o, o - 2, [&] { return c.r2(o) * c.r2(e); });
        put(J, o, e, [&] { return c.r2(o) * c.a2b(e); });
        put(J, o, o, [&] { return -c.a2b(o) * c.a1(o + 1); });
        put(J, o, o + 1, [&] { return c.a2b(o); });
    }
    return J;
}

Mat jacobi_inverse_explicit_cmv(const VerblunskyData& v, int size, const Ordering& ord) {
    require_cmv(ord);
    Coef c{v};
    Mat J = Mat::Zero(size, size);
    for (int k = 0; 2 * k < size; ++k) {
        const int e = 2 * k, o = 2 * k + 1;
        put(J, e, e + 1, [&] { return c.a1(e); });
        put(J, e, e, [&] { return -c.a1(e) * c.a2b(e + 1); });
        put(J, e, e - 1, [&] { return c.r2(e) * c.a1(e - 1); });
        put(J, e, e - 2, [&] { return c.r2(e - 1) * c.r2(e); });
        put(J, o, o + 2, [&] { return cplx(1.0); });
        put(J, o, o + 1, [&] { return -c.a2b(o + 2); });
        put(J, o, o, [&] { return -c.a1(o) * c.a2b(o + 1); });
        put(J, o, e, [&] { return -c.r2(o) * c.a2b(o + 1); });
    }
    return J;
}

BandReport band_check(const Mat& J, const Ordering& ord) {
    BandReport b;
    b.lower = ord.n_plus + 1;
    b.upper = ord.n_minus + 1;
    const int t = trusted_size(ord, static_cast<int>(J.rows()));
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j)
            if (j - i > b.upper || i - j > b.lower) b.outside = std::max(b.outside, std::abs(J(i, j)));
    return b;
}

namespace {

Vec phi1_values(const GaussBorelFactors& gb, const Ordering& ord, cplx z) {
    return gb.S1 * chi(ord, gb.size(), z);
}


} // namespace

double recursion_residual(const GaussBorelFactors& gb, const Ordering& ord, cplx z, int l) {
    const int n = gb.size();
    if (l < 0 || l >= trusted_size(ord, n)) throw Error(ErrorKind::IndexOutOfRange, "row outside the trusted block", l);
    const Mat ups = build_upsilon(ord, n);
    const Vec phi = phi1_values(gb, ord, z);
    const Mat J = jacobi_dressed(gb, ups, 1);
    const Mat Ji = jacobi_inverse_dressed(gb, ups);
    // Vec::dot conjugates its first argument, so use plain products
    const double fwd = std::abs((J.row(l) * phi)(0) - z * phi(l));
    const double inv = std::abs((Ji.row(l) * phi)(0) - phi(l) / z);
    return std::max(fwd, inv);
}

double explicit_recursion_residual(const GaussBorelFactors& gb, const VerblunskyData& v, cplx z, int l) {
    const Ordering ord(1, 1);
    const int n = gb.size();
    if (l < 0 || l >= trusted_size(ord, n)) throw Error(ErrorKind::IndexOutOfRange, "row outside the trusted block", l);
    const Vec phi = phi1_values(gb, ord, z);
    const Mat J = jacobi_explicit_cmv(v, n);
    const Mat Ji = jacobi_inverse_explicit_cmv(v, n);
    const double fwd = std::abs((J.row(l) * phi)(0) - z * phi(l));
    const double inv = std::abs((Ji.row(l) * phi)(0) - phi(l) / z);
    return std::max(fwd, inv);
}

} // namespace olpuc

#include "olpuc/moments.hpp"

#include "olpuc/error.hpp"

#include <cmath>
#include <numbers>

namespace olpuc {

cplx moment_entry(const Measure& m, const Ordering& ord, int j, int k) {
    return 2.0 * std::numbers::pi * m.coeff(ord.exponent(k) - ord.exponent(j));
}

Mat build_moments(const Measure& m, const Ordering& ord, int l) {
    if (l < 1) throw Error(ErrorKind::IndexOutOfRange, "moment truncation needs l >= 1", l);
    // touch the extreme coefficient first so that range errors leave the parallel region clean
    const int span = ord.nu_plus(l - 1) + ord.nu_minus(l - 1);
    m.coeff(span - 1);
    m.coeff(-(span - 1));
    Mat g(l, l);
#pragma omp parallel for collapse(2) schedule(static)
    for (int j = 0; j < l; ++j)
        for (int k = 0; k < l; ++k) g(j, k) = moment_entry(m, ord, j, k);
    return g;
}

Mat build_moments_serial(const Measure& m, const Ordering& ord, int l) {
    if (l < 1) throw Error(ErrorKind::IndexOutOfRange, "moment truncation needs l >= 1", l);
    Mat g(l, l);
    for (int j = 0; j < l; ++j)
        for (int k = 0; k < l; ++k) g(j, k) = moment_entry(m, ord, j, k);
    return g;
}

Quasidefiniteness check_quasidefinite(const Mat& g, double tol) {
    Quasidefiniteness q;
    const double scale = g.cwiseAbs().maxCoeff();
    for (int k = 1; k <= g.rows(); ++k) {
        double d = std::abs(g.topLeftCorner(k, k).partialPivLu().determinant());
        q.minors.push_back(d);
        if (!(d > tol * std::pow(scale, k))) q.ok = false;
    }
    return q;
}

double string_residual(const Mat& g, const Mat& ups, const Ordering& ord) {
    if (g.rows() != ups.rows() || g.cols() != ups.cols() || g.rows() != g.cols())
        throw Error(ErrorKind::SizeMismatch, "string residual needs square matrices of equal size");
    const int n = static_cast<int>(g.rows());
    Mat r = ups * g - g * ups;
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        if (ord.index_of(ord.exponent(i) + 1) >= n) continue;
        for (int j = 0; j < n; ++j) {
            const int e = ord.exponent(j) - 1;
            if (ord.index_of(e) >= n) continue;
            worst = std::max(worst, std::abs(r(i, j)));
        }
    }
    return worst;
}

} // namespace olpuc

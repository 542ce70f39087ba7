#include "olpuc/ordering.hpp"

#include "olpuc/error.hpp"

namespace olpuc {

Ordering::Ordering(int np, int nm) : n_plus(np), n_minus(nm) {
    if (np < 1 || nm < 1) throw Error(ErrorKind::ParseError, "ordering needs n+ >= 1 and n- >= 1");
}

int Ordering::exponent(int j) const {
    const int p = period();
    const int b = j / p;
    const int r = j % p;
    if (r < n_plus) return b * n_plus + r;
    return -(b * n_minus + (r - n_plus) + 1);
}

int Ordering::index_of(int e) const {
    if (e >= 0) return (e / n_plus) * period() + e % n_plus;
    const int m = -e - 1;
    return (m / n_minus) * period() + n_plus + m % n_minus;
}

int Ordering::cls(int l) const { return exponent(l) >= 0 ? 1 : 2; }

int Ordering::nu_plus(int l) const {
    const int p = period();
    const int b = (l + 1) / p;
    const int r = (l + 1) % p;
    return b * n_plus + std::min(r, n_plus);
}

int Ordering::nu_minus(int l) const { return l + 1 - nu_plus(l); }

int Ordering::l_plus(int l, int a) const {
    int k = l;
    while (cls(k) != a) ++k;
    return k;
}

int Ordering::l_minus(int l, int a) const {
    for (int k = l; k >= 0; --k)
        if (cls(k) == a) return k;
    throw Error(ErrorKind::NoSuchIndex, "no index of the requested class at or below l", l);
}

Vec chi(const Ordering& ord, int n, cplx z) {
    Vec v(n);
    for (int j = 0; j < n; ++j) v(j) = std::pow(z, ord.exponent(j));
    return v;
}

Vec chi_star(const Ordering& ord, int n, cplx z) {
    Vec v(n);
    for (int j = 0; j < n; ++j) v(j) = std::pow(z, -ord.exponent(j) - 1);
    return v;
}

Mat build_upsilon(const Ordering& ord, int size) {
    Mat u = Mat::Zero(size, size);
    for (int j = 0; j < size; ++j) {
        int k = ord.index_of(ord.exponent(j) + 1);
        if (k < size) u(j, k) = 1.0;
    }
    return u;
}

bool upsilon_row_interior(const Ordering& ord, int j, int size) {
    return ord.index_of(ord.exponent(j) + 1) < size;
}

int trusted_size(const Ordering& ord, int size) { return std::max(0, size - ord.margin()); }

std::pair<int, int> window(const Ordering& ord, int l) {
    if (l <= 0) return {0, -1};
    return {-ord.nu_minus(l - 1), ord.nu_plus(l - 1) - 1};
}

} // namespace olpuc

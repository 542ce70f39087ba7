#include "olpuc/laurent.hpp"

#include <algorithm>
#include <cmath>

namespace olpuc {

LaurentPoly LaurentPoly::monomial(int e, cplx a) {
    LaurentPoly p;
    p.c_[e] = a;
    return p;
}

cplx LaurentPoly::operator()(cplx z) const {
    if (c_.empty()) return 0.0;
    // Horner from the top exponent down to the lowest, then scale
    const int lo = c_.begin()->first;
    const int hi = c_.rbegin()->first;
    cplx acc = 0.0;
    auto it = c_.rbegin();
    for (int e = hi; e >= lo; --e) {
        acc *= z;
        if (it != c_.rend() && it->first == e) {
            acc += it->second;
            ++it;
        }
    }
    return lo == 0 ? acc : acc * std::pow(z, lo);
}

cplx LaurentPoly::coeff(int e) const {
    auto it = c_.find(e);
    return it == c_.end() ? cplx(0.0) : it->second;
}

int LaurentPoly::min_exp() const { return c_.empty() ? 0 : c_.begin()->first; }
int LaurentPoly::max_exp() const { return c_.empty() ? 0 : c_.rbegin()->first; }

LaurentPoly LaurentPoly::conj_coeffs() const {
    LaurentPoly r;
    for (auto& [e, a] : c_) r.c_[e] = std::conj(a);
    return r;
}

LaurentPoly LaurentPoly::inverted() const {
    LaurentPoly r;
    for (auto& [e, a] : c_) r.c_[-e] = a;
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r;
    for (auto& [e, a] : c_) r.c_[e + k] = a;
    return r;
}

LaurentPoly LaurentPoly::scaled(cplx s) const {
    LaurentPoly r;
    for (auto& [e, a] : c_) r.c_[e] = s * a;
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (auto& [e, a] : o.c_) r.c_[e] += a;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (auto& [e, a] : o.c_) r.c_[e] -= a;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (auto& [e1, a1] : c_)
        for (auto& [e2, a2] : o.c_) r.c_[e1 + e2] += a1 * a2;
    return r;
}

double LaurentPoly::max_abs() const {
    double m = 0.0;
    for (auto& [e, a] : c_) m = std::max(m, std::abs(a));
    return m;
}

double LaurentPoly::max_abs_outside(int lo, int hi) const {
    double m = 0.0;
    for (auto& [e, a] : c_)
        if (e < lo || e > hi) m = std::max(m, std::abs(a));
    return m;
}

double max_coeff_diff(const LaurentPoly& a, const LaurentPoly& b) {
    return (a - b).max_abs();
}

cplx horner(const std::vector<cplx>& p, cplx z) {
    cplx acc = 0.0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + *it;
    return acc;
}

} // namespace olpuc

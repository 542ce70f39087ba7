#pragma once

#include <complex>
#include <map>
#include <vector>

namespace olpuc {

using cplx = std::complex<double>;

// Finite Laurent polynomial, exponent -> coefficient.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(std::map<int, cplx> c) : c_(std::move(c)) {}
    static LaurentPoly monomial(int e, cplx a = 1.0);

    cplx operator()(cplx z) const;
    cplx coeff(int e) const;
    void set(int e, cplx a) { c_[e] = a; }
    void add(int e, cplx a) { c_[e] += a; }
    const std::map<int, cplx>& terms() const { return c_; }

    int min_exp() const;
    int max_exp() const;
    bool empty() const { return c_.empty(); }

    // coefficients conjugated, same exponents: conj(p(conj z))
    LaurentPoly conj_coeffs() const;
    // q(z) = p(1/z)
    LaurentPoly inverted() const;
    LaurentPoly shifted(int k) const;  // z^k p(z)
    LaurentPoly scaled(cplx a) const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;

    double max_abs() const;
    // max |coefficient| outside [lo, hi]
    double max_abs_outside(int lo, int hi) const;

private:
    std::map<int, cplx> c_;
};

double max_coeff_diff(const LaurentPoly& a, const LaurentPoly& b);

// ascending coefficient vector of an ordinary polynomial, evaluated by Horner
cplx horner(const std::vector<cplx>& p, cplx z);

} // namespace olpuc

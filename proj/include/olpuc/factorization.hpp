#pragma once

#include "olpuc/moments.hpp"

#include <iosfwd>

namespace olpuc {

// g = S1^{-1} S2 with S1 unit lower triangular and S2 upper triangular
struct GaussBorelFactors {
    Mat S1;
    Mat S2;
    Mat S2inv;
    Vec h;
    int size() const { return static_cast<int>(S1.rows()); }
};

// unpivoted Doolittle; SingularMinor(k) when pivot k (1-based) falls below tol * max|g|
GaussBorelFactors gauss_borel(const Mat& g, double tol = 1e-12);

GaussBorelFactors factorize(const Measure& m, const Ordering& ord, int size);

// phi_1^{(l)} = (S1 chi)_l, phi_2^{(l)} = ((S2^{-1})^dagger chi)_l
LaurentPoly phi(const GaussBorelFactors& gb, const Ordering& ord, int family, int l);
// bordered determinant expressions built from g alone
LaurentPoly phi_determinantal(const Mat& g, const Ordering& ord, int family, int l);

struct VerblunskyData {
    std::vector<cplx> alpha1;
    std::vector<cplx> alpha2;
    std::vector<cplx> rho2;
    std::vector<cplx> h;
};

VerblunskyData verblunsky(const GaussBorelFactors& gb, const Ordering& ord);

struct SzegoPoly {
    std::vector<cplx> coeffs;  // ascending
    bool positive = true;      // false when h had non-real entries
};
// z^{nu_-(l)} phi_1^{(l)}: P_l when a(l) = 1, P_l^* when a(l) = 2
SzegoPoly szego_from_olp(const LaurentPoly& p, const Ordering& ord, int l, bool positive = true);
// monic P_l from the Toeplitz orthogonality system
std::vector<cplx> szego_oracle(const Measure& m, int l);
// (P_l, P_l^*) by the two-term recursion from alpha_1..alpha_l
std::pair<std::vector<cplx>, std::vector<cplx>> szego_recursion(const std::vector<cplx>& alpha, int l);

// l, Re a1, Im a1, Re a2, Im a2, Re rho2, Im rho2, Re h, Im h
void write_verblunsky_csv(std::ostream& os, const VerblunskyData& v);

// Laurent polynomial sum_k v_k z^{J(k)}
LaurentPoly from_coeffs(const Ordering& ord, const Vec& v);
// determinant through partial pivoting; 1 for the empty matrix
cplx det(const Mat& a);

} // namespace olpuc

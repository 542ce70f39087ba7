#pragma once

#include "olpuc/factorization.hpp"

namespace olpuc {

// sum_{k<l} phi_1^{(k)}(z') conj(phi_2^{(k)}(z))
cplx kernel_sum(const GaussBorelFactors& gb, const Ordering& ord, int l, cplx z, cplx zp);
// chi(z)^dagger (g^{[l]})^{-1} chi(z')
cplx kernel_abc(const Mat& g, const Ordering& ord, int l, cplx z, cplx zp);

enum class AssocMethod { linear_solve, determinantal, lincomb };
enum class AssocSign { plus, minus };

// one associated Laurent polynomial phi_{family, +-a}^{(l)}; g must reach index l_{+a}.
// A missing l_{-2} falls back to index 0.  lincomb needs gb as well.
LaurentPoly associated_poly(const Mat& g, const Ordering& ord, int l, int family, AssocSign sign, int a,
                            AssocMethod method, const GaussBorelFactors* gb = nullptr);

// polynomials entering the CD formula at level l: plus at l, minus at l - 1
struct AssociatedPolys {
    int l = 0;
    LaurentPoly phi1_plus[2];
    LaurentPoly phi1_minus[2];
    LaurentPoly phi2_plus[2];
    LaurentPoly phi2_minus[2];
};
AssociatedPolys associated(const Mat& g, const Ordering& ord, int l, AssocMethod method,
                           const GaussBorelFactors* gb = nullptr);

// DegenerateDiagonal when |1 - z' conj(z)| < 1e-8
cplx cd_formula(const AssociatedPolys& as, cplx z, cplx zp);

// orthogonal projection onto span{chi^{(0..l-1)}} through exact biorthogonal coefficients
LaurentPoly project(const Measure& m, const GaussBorelFactors& gb, const Ordering& ord, int l, const LaurentPoly& f);

// det of [B; x^T] expanded along the appended row: returns the cofactor weights of x
Vec bordered_row_cofactors(const Mat& B);

} // namespace olpuc

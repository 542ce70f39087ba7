#pragma once

#include "olpuc/factorization.hpp"

namespace olpuc {

// J = S1 Ups S1^{-1} (side 1) or S2 Ups S2^{-1} (side 2), truncated
Mat jacobi_dressed(const GaussBorelFactors& gb, const Mat& ups, int side);
// S1 Ups^T S1^{-1}: multiplication by z^{-1}
Mat jacobi_inverse_dressed(const GaussBorelFactors& gb, const Mat& ups);

// pentadiagonal CMV matrix from Verblunsky data; OrderingNotCMV otherwise
Mat jacobi_explicit_cmv(const VerblunskyData& v, int size, const Ordering& ord = Ordering(1, 1));
Mat jacobi_inverse_explicit_cmv(const VerblunskyData& v, int size, const Ordering& ord = Ordering(1, 1));

struct BandReport {
    int lower = 0;         // declared subdiagonals
    int upper = 0;         // declared superdiagonals
    double outside = 0.0;  // max |entry| outside the band on the trusted block
    int diagonals() const { return lower + upper + 1; }
};
// band of n_+ + 1 subdiagonals and n_- + 1 superdiagonals
BandReport band_check(const Mat& J, const Ordering& ord);

// row l of J Phi_1 = z Phi_1 and of J^{-1} Phi_1 = z^{-1} Phi_1
double recursion_residual(const GaussBorelFactors& gb, const Ordering& ord, cplx z, int l);
// same relations with the closed-form CMV coefficients
double explicit_recursion_residual(const GaussBorelFactors& gb, const VerblunskyData& v, cplx z, int l);

} // namespace olpuc

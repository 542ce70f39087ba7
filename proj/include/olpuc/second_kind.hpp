#pragma once

#include "olpuc/factorization.hpp"

namespace olpuc {

enum class SecondKind { C11, C12, C21, C22, C1, C2 };
enum class SKMethod { series, cauchy, gamma_det, geronimus };

// truncated Fourier-series form of the second kind functions
// series:    partial sums with N coefficients (N < 0: whole table)
// cauchy:    trapezoid Cauchy integral with N nodes; QuadratureNearCircle for 0.95 < |z| < 1.05
// gamma_det: bordered determinant with Gamma entries
// geronimus: Cauchy integral of the Geronimus kernel (u + 1/z)/(u - 1/z)
// OutsideRegion when z is outside the method's annulus
cplx second_kind(const Measure& m, const GaussBorelFactors& gb, const Ordering& ord, int l, SecondKind which,
                 cplx z, SKMethod method = SKMethod::series, int N = -1);

// annulus where the series of `which` converges
Annulus second_kind_region(const Measure& m, SecondKind which);

enum class GammaPart { both, class1, class2 };
// Gamma^{(l)}_{side,j}(z) from windowed Fourier series
cplx gamma_eval(const Measure& m, const Ordering& ord, int l, int j, int side, cplx z, int N = -1,
                GammaPart part = GammaPart::both);

// restriction of phi_a^{(l)} to the class-b monomials
cplx phi_part(const GaussBorelFactors& gb, const Ordering& ord, int a, int b, int l, cplx z);

// sum_{l<L} conj(C_{a,bc}^{(l)}(conj z)) phi_{a,bp}^{(l)}(z')
cplx summation_sum(const Measure& m, const GaussBorelFactors& gb, const Ordering& ord, int L, int a, int bc,
                   int bp, cplx z, cplx zp, int N = -1);
// limit of summation_sum: 1/(z - z') for (1,1) when |z'| < |z|, 1/(z' - z) for (2,2) when
// |z| < |z'|, 0 for the cross sums
cplx summation_limit(int bc, int bp, cplx z, cplx zp);

} // namespace olpuc

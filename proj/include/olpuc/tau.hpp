#pragma once

#include "olpuc/cd_kernel.hpp"
#include "olpuc/toda.hpp"

#include <string>
#include <vector>

namespace olpuc {

// tau^{(l)}(t) = det g^{[l]}(t), tau^{(0)} = 1
cplx tau(const Measure& m, const Ordering& ord, const DeformationTimes& t, int l);

// signed minors of g: rows/columns l_{-a} deleted (minus), last row/column replaced by (l-1)_{+a} (plus).
// g must reach index l (minus) or (l-1)_{+a} (plus)
cplx tau_assoc_from(const Mat& g, const Ordering& ord, int l, int family, AssocSign sign, int a);
cplx tau_assoc(const Measure& m, const Ordering& ord, const DeformationTimes& t, int l, int family, AssocSign sign,
               int a);

// minor of g on the listed rows and columns
cplx minor_det(const Mat& g, const std::vector<int>& rows, const std::vector<int>& cols);

// coherent shifts of the times, realized on the measure
enum class MiwaShift {
    minus_zinv_1,  // t - [1/z]_1 : (1 - u/z)
    plus_zinv_1,   // t + [1/z]_1 : (1 - u/z)^-1
    plus_z_1,      // t + [z]_1   : (1 - u z)^-1
    minus_z_1,     // t - [z]_1   : (1 - u z)
    plus_z_2,      // t + [z]_2   : (1 - z/u)
    minus_z_2,     // t - [z]_2   : (1 - z/u)^-1
    plus_zinv_2,   // t + [1/z]_2 : (1 - 1/(z u))
    minus_zinv_2   // t - [1/z]_2 : (1 - 1/(z u))^-1
};
Measure apply_miwa(const Measure& m, MiwaShift s, cplx z);

struct NamedResidual {
    std::string name;
    double residual = 0.0;
};

// relative residuals of the tau representations of phi_1, phi_2 and the associated families at level l
std::vector<NamedResidual> tau_poly_residuals(const Measure& m, const Ordering& ord, const DeformationTimes& t, int l,
                                              cplx z);
double tau_poly_residual(const Measure& m, const Ordering& ord, const DeformationTimes& t, int l, cplx z);

// second-kind functions and F_mu(t) through Miwa-shifted associated taus.
// Branches whose region excludes z are skipped.
std::vector<NamedResidual> tau_second_kind_residuals(const Measure& m, const Ordering& ord, const DeformationTimes& t,
                                                     int l, cplx z);
double tau_second_kind_residual(const Measure& m, const Ordering& ord, const DeformationTimes& t, int l, cplx z);

// contour integrals of phi_1^{(k)}(z,t) conj(phi_2^{(l)})(1/z,t') z^{-1} F_mu(z) exp(sum t_1j z^j - t'_2j z^-j)
// on |z| = r0 and |z| = rInf, both counterclockwise
struct BilinearReport {
    cplx i0 = 0.0;
    cplx i_inf = 0.0;
    double scale = 0.0;  // trapezoid sum of |f| |dz| on the inner circle
    double residual = 0.0;
};
BilinearReport bilinear_report(const Measure& m, const Ordering& ord, const DeformationTimes& t,
                               const DeformationTimes& tp, int k, int l, double r0 = 0.5, double r_inf = 2.0,
                               int N = 2048);
double bilinear_residual(const Measure& m, const Ordering& ord, const DeformationTimes& t, const DeformationTimes& tp,
                         int k, int l, double r0 = 0.5, double r_inf = 2.0, int N = 2048);

// oint Psi_1^{(n)}(z,t) conj(Psi_1^*)^{(k)}(z,t') dz against the same with Psi_2, Psi_2^*, on |z| = r0
BilinearReport wave_bilinear_report(const Measure& m, const Ordering& ord, const DeformationTimes& t,
                                    const DeformationTimes& tp, int n, int k, double r0 = 0.5, int N = 2048);

} // namespace olpuc

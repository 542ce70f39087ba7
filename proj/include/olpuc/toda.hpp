#pragma once

#include "olpuc/factorization.hpp"

#include <iosfwd>

namespace olpuc {

// L1 = S1 Ups S1^{-1}, L2 = S2 Ups^T S2^{-1}, both truncated
struct LaxPair {
    Mat L1;
    Mat L2;
};

struct LaxZS {
    LaxPair lax;
    std::vector<Mat> B1;  // B1[j-1] = (L1^j)_+ , upper part with the diagonal
    std::vector<Mat> B2;  // B2[j-1] = (L2^j)_- , strictly lower part
};

LaxZS lax_and_zs(const GaussBorelFactors& gb, const Mat& ups, int j_max);

Mat upper_part(const Mat& a);
Mat strictly_lower_part(const Mat& a);

// derivative of (alpha1_k, conj alpha2_k) along t11 * d/dt11 + t21 * d/dt21.
// Index 0 and the last index are held fixed.
struct TodaRhs {
    std::vector<cplx> d_alpha1;
    std::vector<cplx> d_beta;  // beta = conj(alpha2)
};
TodaRhs toeplitz_rhs(const VerblunskyData& v, cplx t11, cplx t21);

struct FlowState {
    DeformationTimes times;
    VerblunskyData v;  // h is not propagated and left empty
    int trusted_len = 0;
};

// coefficients k < trusted_len are unaffected by freezing the last one, to about 1e-14
int flow_trusted_len(int len, double t_abs);

// RK4 along t(s) = s (t11, t21), s in [0, 1]; TrustedLengthExhausted
FlowState integrate_flow(const VerblunskyData& v0, cplx t11, cplx t21, int steps);

struct FlowSnapshot {
    double s;
    VerblunskyData v;
};
std::vector<FlowSnapshot> integrate_flow_trajectory(const VerblunskyData& v0, cplx t11, cplx t21, int steps,
                                                    int every = 1);
// t, k, Re a1, Im a1, Re a2, Im a2
void write_trajectory_csv(std::ostream& os, const std::vector<FlowSnapshot>& traj);

// deform the measure, rebuild g^{[l]}(t), factorize, read off
VerblunskyData refactorize_at_time(const Measure& m, const Ordering& ord, const DeformationTimes& t, int l);
GaussBorelFactors factorize_at_time(const Measure& m, const Ordering& ord, const DeformationTimes& t, int l);

// finite-difference Lax and Zakharov-Shabat residuals on the trusted block, central step h
struct LaxResiduals {
    double lax_t11 = 0.0;  // dL1/dt11 - [B11, L1]
    double lax_t21 = 0.0;  // dL1/dt21 - [B21, L1]
    double lax2_t11 = 0.0; // dL2/dt11 - [B11, L2]
    double zs = 0.0;       // dB11/dt21 - dB21/dt11 + [B11, B21]
};
LaxResiduals lax_fd_residuals(const Measure& m, const Ordering& ord, const DeformationTimes& t, int l,
                              double h = 1e-3);

enum class Wave { psi1, psi2_star, psi1_star, psi2 };
// component l of a wave function at times t; gb_t factorizes deform(m, t).
// psi1_star / psi2 need z in the annulus of F_mu (OutsideRegion)
cplx wave_eval(const Measure& m, const GaussBorelFactors& gb_t, const DeformationTimes& t, const Ordering& ord,
               int l, cplx z, Wave which, int N = -1);
// same functions through F_mu of the undeformed measure and the other exponential
cplx wave_eval_undeformed(const Measure& m, const GaussBorelFactors& gb_t, const DeformationTimes& t,
                          const Ordering& ord, int l, cplx z, Wave which, int N = -1);

// max over trusted rows of |(L1 Psi1)_l - z Psi1_l| / max|Psi1|
double wave_eigen_residual(const Measure& m, const Ordering& ord, const DeformationTimes& t, int l, cplx z);

enum class StepDirection { T1, T2 };
enum class StepKind { D1, D2, conj_pair };

struct DiscreteStep {
    cplx lambda = 0.0;
    StepDirection direction = StepDirection::T1;
    StepKind kind = StepKind::D1;
    Mat delta;        // S1 T(S1)^{-1} T(S2) S2^{-1} built from the current factors
    Mat omega;        // delta_+ (upper factor of delta = delta_-^{-1} delta_+)
    Mat delta_minus;  // unit lower, predicted T(S1) S1^{-1}
};

struct DiscreteResult {
    Measure measure;
    GaussBorelFactors gb;  // factors of the shifted measure
    DiscreteStep step;
    double two_path_minus = 0.0;  // |T(S1)S1^{-1} - delta_-| / max(1, |delta_-|) on the trusted block
    double two_path_plus = 0.0;   // same for T(S2)S2^{-1} and delta_+
    double darboux = 0.0;         // |T(delta) - delta_+ delta_-^{-1}|, LU <-> UL exchange, relative
    double omega_band = 0.0;      // omega entries outside its predicted band
    double min_h_real = 0.0;      // min Re h of the shifted factors
    double max_h_imag = 0.0;
};

// T1 with D1 multiplies the measure by (z - lambda), T2 with D2 by (1/z - lambda);
// conj_pair by |z - lambda|^2 (T1) or |1/z - lambda|^2 (T2).  LambdaOnCircle for |lambda| >= 1
DiscreteResult discrete_step(const Measure& m, const GaussBorelFactors& gb, const Ordering& ord, cplx lambda,
                             StepDirection direction, StepKind kind);

} // namespace olpuc

#pragma once

#include "olpuc/second_kind.hpp"
#include "olpuc/tau.hpp"

#include <map>
#include <random>
#include <string>
#include <vector>

namespace olpuc {

struct CheckResult {
    std::string check;
    std::map<std::string, std::string> params;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct SuiteOptions {
    int size = 16;
    unsigned seed = 42;
    int points = 20;
    int quad_n = 4096;
};

// seeded points in r0 < |z| < r1
class PointSampler {
public:
    explicit PointSampler(unsigned seed) : rng_(seed) {}
    cplx annulus(double r0, double r1);
    std::vector<cplx> annulus(double r0, double r1, int n);

private:
    std::mt19937_64 rng_;
};

// positive measure: Hermitian moments and real positive pivots
bool is_positive(const Measure& m, const GaussBorelFactors& gb);
// weight analytic on C \ {0}
bool is_entire_type(const Measure& m);

// moments
double hermitian_residual(const Mat& g);
double moment_quadrature_residual(const Measure& m, const Ordering& ord, int n, int N);
// max over k <= kmax of | |det g^[k]| - |det T_k| | / |det T_k|, T_k = (2 pi c_{k'-j'}) reordered
double toeplitz_minor_residual(const Measure& m, const Ordering& ord, int kmax);
double parallel_serial_residual(const Measure& m, const Ordering& ord, int n);

// factorization
double biorthogonality_residual(const Measure& m, const GaussBorelFactors& gb, const Ordering& ord, int n, int N);
double determinantal_residual(const Mat& g, const GaussBorelFactors& gb, const Ordering& ord, int lmax);
double rho_residual(const VerblunskyData& v, int kmax);
double proportionality_residual(const GaussBorelFactors& gb, const Ordering& ord, int n);
// z^{nu_-(l)} phi_1^{(l)} against the Toeplitz oracle, both branches
double szego_oracle_residual(const Measure& m, const GaussBorelFactors& gb, const Ordering& ord, int lmax);
// two-term recursion from the extracted alpha against the oracle
double szego_recursion_residual(const Measure& m, const VerblunskyData& v, int lmax);
double ordering_independence_residual(const Measure& m, int size, int kmax);

// cmv_operator
double band_residual(const GaussBorelFactors& gb, const Ordering& ord);
double eigen_relation_residual(const GaussBorelFactors& gb, const Ordering& ord, const std::vector<cplx>& zs);
double explicit_cmv_residual(const GaussBorelFactors& gb, const VerblunskyData& v, const std::vector<cplx>& zs);

// cd_kernel
struct PointPair {
    cplx z;
    cplx zp;
};
std::vector<PointPair> cd_pairs(PointSampler& ps, int n);
struct CDTriple {
    double abc = 0.0;  // kernel_abc vs kernel_sum
    double cd = 0.0;   // cd_formula vs kernel_sum
};
CDTriple cd_triple_residual(const Mat& g, const GaussBorelFactors& gb, const Ordering& ord, int lmax,
                            const std::vector<PointPair>& pts);
double reproducing_residual(const Measure& m, const GaussBorelFactors& gb, const Ordering& ord, int l,
                            const std::vector<PointPair>& pts, int N);
struct ProjectionReport {
    double outside = 0.0;      // coefficients outside the window of chi^{(0..l-1)}
    double idempotence = 0.0;  // |P P f - P f|
};
ProjectionReport projection_report(const Measure& m, const GaussBorelFactors& gb, const Ordering& ord, int l,
                                   const LaurentPoly& f);
// linear-combination and linear-solve forms against the determinantal form
double associated_forms_residual(const Mat& g, const GaussBorelFactors& gb, const Ordering& ord, int lmax);

// second_kind
double second_kind_method_residual(const Measure& m, const GaussBorelFactors& gb, const Ordering& ord, int lmax,
                                   PointSampler& ps, int points, int N);
double second_kind_additivity_residual(const Measure& m, const GaussBorelFactors& gb, const Ordering& ord,
                                       int lmax, PointSampler& ps, int points);
double geronimus_residual(const Measure& m, const GaussBorelFactors& gb, const Ordering& ord, int lmax,
                          PointSampler& ps, int points, int N);
struct SummationReport {
    double direct = 0.0;    // |sum - limit| at L for (1,1) and (2,2)
    double cross = 0.0;     // C_{a,1} against phi_{a,2}
    bool monotone = true;   // worst direct residual non-increasing at L - 2p, L - p, L (p the period)
};
SummationReport summation_report(const Measure& m, const GaussBorelFactors& gb, const Ordering& ord, int L,
                                 PointSampler& ps, int points);

// toda (CMV ordering, refactorization at size `size`)
double toda_ode_residual(const Measure& m, cplx t11, cplx t21, int steps, int kmax, int size);
double schur_residual(const Measure& m, double t11, int steps, int kmax, int size);
double wave_eigen_max(const Measure& m, const Ordering& ord, const DeformationTimes& t, int size,
                      const std::vector<cplx>& zs);

// tau
double pivot_residual(const Measure& m, const Ordering& ord, const DeformationTimes& t, int lmax);
double translation_residual(const Measure& m, const Ordering& ord, const DeformationTimes& t,
                            const DeformationTimes& s, int lmax);
// sample alternately inside and outside the circle
std::vector<cplx> tau_points(PointSampler& ps, int n);

// every suite applicable to (m, ord); the run passes when all entries pass
std::vector<CheckResult> verify_all(const Measure& m, const Ordering& ord, const SuiteOptions& opt);
bool all_pass(const std::vector<CheckResult>& r);

} // namespace olpuc

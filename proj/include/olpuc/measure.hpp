#pragma once

#include "olpuc/laurent.hpp"

#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace olpuc {

enum class BaseKind { lebesgue, fourier_table, trig_poly_weight, exp_cos_weight };

enum class FactorKind {
    toda_exp,
    miwa1_plus,     // t + [w^-1]_1 : (1 - z/w)^-1
    miwa1_minus,    // t - [w^-1]_1 : (1 - z/w)
    miwa2_plus,     // t + [w]_2    : (1 - w/z)
    miwa2_minus,    // t - [w]_2    : (1 - w/z)^-1
    linear_z,       // (z - lambda)
    linear_zinv,    // (1/z - lambda)
    inverse_linear_z,
    inverse_linear_zinv,
    conjugate_pair,          // (z - lambda)(1/z - conj lambda)
    inverse_conjugate_pair
};

struct DeformationTimes {
    std::vector<cplx> t1;  // t1[j-1] = t_{1j}
    std::vector<cplx> t2;

    bool is_zero() const;
    bool schur_reduced(double tol = 1e-14) const;
    static DeformationTimes schur(std::vector<cplx> t1);
    DeformationTimes operator+(const DeformationTimes& o) const;
};

// Annulus R_minus < |z| < R_plus
struct Annulus {
    double r_minus = 0.0;
    double r_plus = std::numeric_limits<double>::infinity();
    bool contains(cplx z) const {
        double r = std::abs(z);
        return r > r_minus && r < r_plus;
    }
};

struct Factor {
    FactorKind kind;
    DeformationTimes times;  // toda_exp
    cplx w = 0.0;            // miwa
    cplx lambda = 0.0;       // linear and pair kinds

    // where the series expansion of the factor converges
    Annulus region() const;
    // value of the factor at a point of its region
    cplx value(cplx z) const;
    // Laurent coefficients on [-bound, bound], index n + bound
    std::vector<cplx> series(int bound) const;
};

struct FourierParams {
    std::map<int, cplx> coeffs;      // fourier_table
    std::map<std::string, double> params;  // named weights, e.g. "a"
};

// Complex measure on the unit circle, dmu = w(theta) dtheta, described by its
// Fourier coefficients c_n = (1/2pi) int e^{-in theta} dmu.  Immutable.
class Measure {
public:
    static constexpr int default_bound = 128;

    static Measure lebesgue(int bound = default_bound);
    static Measure fourier_table(std::map<int, cplx> coeffs, int bound = default_bound);
    static Measure trig_poly(double a, int bound = default_bound);
    static Measure exp_cos(int bound = default_bound);

    Measure decorated(const Factor& f) const;
    Measure with_bound(int bound) const;

    BaseKind base_kind() const { return base_; }
    const FourierParams& base_params() const { return bp_; }
    const std::vector<Factor>& decorations() const { return decs_; }
    int bound() const { return bound_; }

    // c_n; TruncationExceeded beyond the bound of a decorated spec
    cplx coeff(int n) const;
    // density w(theta) evaluated from closed forms (independent of the table)
    cplx density(double theta) const;
    // convergence annulus of F_mu
    Annulus annulus() const;
    // true when every decoration's expansion is valid on the unit circle
    bool valid_on_circle() const;
    // real measure: c_{-n} = conj(c_n) up to tol
    bool is_hermitian(double tol = 1e-13) const;

private:
    Measure() = default;
    void rebuild();

    BaseKind base_ = BaseKind::lebesgue;
    FourierParams bp_;
    std::vector<Factor> decs_;
    int bound_ = default_bound;
    std::shared_ptr<const std::vector<cplx>> table_;  // index n + bound
};

enum class SeriesMode { full, plus_k, minus_k };

// sum of c_n z^n over |n| <= N, restricted to n >= -k (plus_k) or n < -k (minus_k)
cplx eval_fseries(const Measure& m, cplx z, SeriesMode mode = SeriesMode::full, int k = 0, int N = -1);
// series with conjugated coefficients, sum conj(c_n) z^n
cplx eval_fseries_conj(const Measure& m, cplx z, SeriesMode mode = SeriesMode::full, int k = 0, int N = -1);

Measure deform(const Measure& m, const DeformationTimes& t);

enum class MiwaWhich { plus1, minus1, plus2, minus2 };
// plus1/minus1 shift t by +-[w^-1]_1, plus2/minus2 by +-[w]_2
Measure miwa_shift(const Measure& m, cplx w, MiwaWhich which);

enum class DiscreteKind { D1_forward, D2_forward, D1_backward, D2_backward, conjugate_pair_1, conjugate_pair_2 };
Measure apply_discrete_factor(const Measure& m, cplx lambda, DiscreteKind kind);

} // namespace olpuc

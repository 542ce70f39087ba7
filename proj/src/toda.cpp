#include "olpuc/toda.hpp"

#include "olpuc/error.hpp"
#include "olpuc/second_kind.hpp"

#include <cmath>
#include <numbers>
#include <iomanip>
#include <ostream>

namespace olpuc {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

Mat unit_lower_inverse(const Mat& L) {
    return L.triangularView<Eigen::UnitLower>().solve(Mat::Identity(L.rows(), L.cols()));
}

double max_abs_block(const Mat& a, int n) {
    if (n <= 0) return 0.0;
    return a.topLeftCorner(n, n).cwiseAbs().maxCoeff();
}

// |a - b| on the leading n x n block relative to max(1, |b|)
double rel_block(const Mat& a, const Mat& b, int n) {
    if (n <= 0) return 0.0;
    const double s = std::max(1.0, b.topLeftCorner(n, n).cwiseAbs().maxCoeff());
    return (a.topLeftCorner(n, n) - b.topLeftCorner(n, n)).cwiseAbs().maxCoeff() / s;
}

// exp(sum_j c_j z^j) for a coefficient list starting at j = 1
cplx exp_poly(const std::vector<cplx>& c, cplx z, double sign) {
    cplx s = 0.0, zp = 1.0;
    for (const cplx& cj : c) {
        zp *= z;
        s += cj * zp;
    }
    return std::exp(sign * s);
}

std::vector<cplx> conj_all(const std::vector<cplx>& v) {
    std::vector<cplx> r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = std::conj(v[i]);
    return r;
}

DeformationTimes shifted_times(const DeformationTimes& t, cplx d11, cplx d21) {
    DeformationTimes r = t;
    if (r.t1.empty()) r.t1.resize(1, 0.0);
    if (r.t2.empty()) r.t2.resize(1, 0.0);
    r.t1[0] += d11;
    r.t2[0] += d21;
    return r;
}

struct Lu {
    Mat lower;  // unit lower
    Mat upper;
};

// Doolittle without pivoting on the full truncation
Lu doolittle(const Mat& a) {
    GaussBorelFactors f = gauss_borel(a);
    // gauss_borel returns S1 = lower^{-1}
    return {unit_lower_inverse(f.S1), f.S2};
}

} // namespace

Mat upper_part(const Mat& a) { return a.triangularView<Eigen::Upper>(); }

Mat strictly_lower_part(const Mat& a) { return a.triangularView<Eigen::StrictlyLower>(); }

LaxZS lax_and_zs(const GaussBorelFactors& gb, const Mat& ups, int j_max) {
    const int n = gb.size();
    if (ups.rows() != n || ups.cols() != n) throw Error(ErrorKind::SizeMismatch, "shift and factors differ in size");
    LaxZS r;
    r.lax.L1 = gb.S1 * ups * unit_lower_inverse(gb.S1);
    r.lax.L2 = gb.S2 * ups.transpose() * gb.S2inv;
    Mat p1 = Mat::Identity(n, n), p2 = Mat::Identity(n, n);
    for (int j = 1; j <= j_max; ++j) {
        p1 = p1 * r.lax.L1;
        p2 = p2 * r.lax.L2;
        r.B1.push_back(upper_part(p1));
        r.B2.push_back(strictly_lower_part(p2));
    }
    return r;
}

TodaRhs toeplitz_rhs(const VerblunskyData& v, cplx t11, cplx t21) {
    const size_t n = v.alpha1.size();
    TodaRhs d;
    d.d_alpha1.assign(n, 0.0);
    d.d_beta.assign(n, 0.0);
    for (size_t k = 1; k + 1 < n; ++k) {
        const cplx a = v.alpha1[k], b = std::conj(v.alpha2[k]);
        const cplx r = 1.0 - a * b;
        d.d_alpha1[k] = (t11 * v.alpha1[k + 1] + t21 * v.alpha1[k - 1]) * r;
        d.d_beta[k] = -(t11 * std::conj(v.alpha2[k - 1]) + t21 * std::conj(v.alpha2[k + 1])) * r;
    }
    return d;
}

int flow_trusted_len(int len, double t_abs) {
    int d = 1;
    double term = t_abs;
    while (term >= 1e-14 && d < len) {
        ++d;
        term *= t_abs / d;
    }
    return len - 1 - d;
}

namespace {

struct State {
    std::vector<cplx> a, b;
};

State rhs_state(const State& s, cplx t11, cplx t21) {
    const size_t n = s.a.size();
    State d{std::vector<cplx>(n, 0.0), std::vector<cplx>(n, 0.0)};
    for (size_t k = 1; k + 1 < n; ++k) {
        const cplx r = 1.0 - s.a[k] * s.b[k];
        d.a[k] = (t11 * s.a[k + 1] + t21 * s.a[k - 1]) * r;
        d.b[k] = -(t11 * s.b[k - 1] + t21 * s.b[k + 1]) * r;
    }
    return d;
}

State axpy(const State& s, const State& d, double h) {
    State r = s;
    for (size_t k = 0; k < s.a.size(); ++k) {
        r.a[k] += h * d.a[k];
        r.b[k] += h * d.b[k];
    }
    return r;
}

VerblunskyData to_data(const State& s) {
    VerblunskyData v;
    v.alpha1 = s.a;
    v.alpha2 = conj_all(s.b);
    v.rho2.resize(s.a.size());
    v.rho2[0] = 0.0;
    for (size_t k = 1; k < s.a.size(); ++k) v.rho2[k] = 1.0 - s.a[k] * s.b[k];
    return v;
}

void check_flow(const VerblunskyData& v0, cplx t11, cplx t21, int steps) {
    if (steps <= 0) throw Error(ErrorKind::IndexOutOfRange, "step count must be positive", steps);
    const int len = static_cast<int>(v0.alpha1.size());
    if (flow_trusted_len(len, std::abs(t11) + std::abs(t21)) <= 1)
        throw Error(ErrorKind::TrustedLengthExhausted, "too few coefficients for this flow time", len);
}

} // namespace

std::vector<FlowSnapshot> integrate_flow_trajectory(const VerblunskyData& v0, cplx t11, cplx t21, int steps,
                                                    int every) {
    check_flow(v0, t11, t21, steps);
    State s{v0.alpha1, conj_all(v0.alpha2)};
    const double h = 1.0 / steps;
    std::vector<FlowSnapshot> out;
    out.push_back({0.0, to_data(s)});
    for (int i = 1; i <= steps; ++i) {
        State k1 = rhs_state(s, t11, t21);
        State k2 = rhs_state(axpy(s, k1, h / 2), t11, t21);
        State k3 = rhs_state(axpy(s, k2, h / 2), t11, t21);
        State k4 = rhs_state(axpy(s, k3, h), t11, t21);
        for (size_t k = 0; k < s.a.size(); ++k) {
            s.a[k] += h / 6 * (k1.a[k] + 2.0 * k2.a[k] + 2.0 * k3.a[k] + k4.a[k]);
            s.b[k] += h / 6 * (k1.b[k] + 2.0 * k2.b[k] + 2.0 * k3.b[k] + k4.b[k]);
        }
        if (i == steps || (every > 0 && i % every == 0)) out.push_back({i * h, to_data(s)});
    }
    return out;
}

FlowState integrate_flow(const VerblunskyData& v0, cplx t11, cplx t21, int steps) {
    auto traj = integrate_flow_trajectory(v0, t11, t21, steps, 0);
    FlowState st;
    st.times.t1 = {t11};
    st.times.t2 = {t21};
    st.v = traj.back().v;
    st.trusted_len = flow_trusted_len(static_cast<int>(v0.alpha1.size()), std::abs(t11) + std::abs(t21));
    return st;
}

void write_trajectory_csv(std::ostream& os, const std::vector<FlowSnapshot>& traj) {
    os << "t,k,re_alpha1,im_alpha1,re_alpha2,im_alpha2\n" << std::setprecision(15);
    for (const auto& snap : traj) {
        for (size_t k = 0; k < snap.v.alpha1.size(); ++k) {
            os << snap.s << ',' << k << ',' << snap.v.alpha1[k].real() << ',' << snap.v.alpha1[k].imag() << ','
               << snap.v.alpha2[k].real() << ',' << snap.v.alpha2[k].imag() << '\n';
        }
    }
}

GaussBorelFactors factorize_at_time(const Measure& m, const Ordering& ord, const DeformationTimes& t, int l) {
    return factorize(t.is_zero() ? m : deform(m, t), ord, l);
}

VerblunskyData refactorize_at_time(const Measure& m, const Ordering& ord, const DeformationTimes& t, int l) {
    return verblunsky(factorize_at_time(m, ord, t, l), ord);
}

LaxResiduals lax_fd_residuals(const Measure& m, const Ordering& ord, const DeformationTimes& t, int l, double h) {
    const Mat ups = build_upsilon(ord, l);
    auto at = [&](cplx d11, cplx d21) { return lax_and_zs(factorize_at_time(m, ord, shifted_times(t, d11, d21), l), ups, 1); };
    const LaxZS c = at(0.0, 0.0);
    const LaxZS p1 = at(h, 0.0), m1 = at(-h, 0.0);
    const LaxZS p2 = at(0.0, h), m2 = at(0.0, -h);
    const int n = trusted_size(ord, l) - ord.margin();
    const Mat& L1 = c.lax.L1;
    const Mat& L2 = c.lax.L2;
    const Mat& B11 = c.B1[0];
    const Mat& B21 = c.B2[0];
    LaxResiduals r;
    Mat dL1_11 = (p1.lax.L1 - m1.lax.L1) / (2 * h);
    Mat dL1_21 = (p2.lax.L1 - m2.lax.L1) / (2 * h);
    Mat dL2_11 = (p1.lax.L2 - m1.lax.L2) / (2 * h);
    r.lax_t11 = max_abs_block(dL1_11 - (B11 * L1 - L1 * B11), n);
    r.lax_t21 = max_abs_block(dL1_21 - (B21 * L1 - L1 * B21), n);
    r.lax2_t11 = max_abs_block(dL2_11 - (B11 * L2 - L2 * B11), n);
    Mat dB11_21 = (p2.B1[0] - m2.B1[0]) / (2 * h);
    Mat dB21_11 = (p1.B2[0] - m1.B2[0]) / (2 * h);
    r.zs = max_abs_block(dB11_21 - dB21_11 + (B11 * B21 - B21 * B11), n);
    return r;
}

cplx wave_eval(const Measure& m, const GaussBorelFactors& gb_t, const DeformationTimes& t, const Ordering& ord,
               int l, cplx z, Wave which, int N) {
    if (z == 0.0) throw Error(ErrorKind::OutsideRegion, "wave functions need z != 0");
    switch (which) {
    case Wave::psi1: return phi(gb_t, ord, 1, l)(z) * exp_poly(t.t1, z, 1.0);
    case Wave::psi2_star: return phi(gb_t, ord, 2, l)(z) * exp_poly(conj_all(t.t2), z, -1.0);
    case Wave::psi1_star: {
        const Measure mt = t.is_zero() ? m : deform(m, t);
        if (!mt.annulus().contains(z)) throw Error(ErrorKind::OutsideRegion, "z outside the annulus of F_mu");
        return second_kind(mt, gb_t, ord, l, SecondKind::C1, z, SKMethod::series, N) *
               exp_poly(conj_all(t.t1), z, -1.0);
    }
    case Wave::psi2: {
        const Measure mt = t.is_zero() ? m : deform(m, t);
        if (!mt.annulus().contains(1.0 / z)) throw Error(ErrorKind::OutsideRegion, "1/z outside the annulus of F_mu");
        return second_kind(mt, gb_t, ord, l, SecondKind::C2, z, SKMethod::series, N) * exp_poly(t.t2, z, 1.0);
    }
    }
    return 0.0;
}

cplx wave_eval_undeformed(const Measure& m, const GaussBorelFactors& gb_t, const DeformationTimes& t,
                          const Ordering& ord, int l, cplx z, Wave which, int N) {
    const cplx zi = 1.0 / z;
    switch (which) {
    case Wave::psi1_star:
        if (!m.annulus().contains(z)) throw Error(ErrorKind::OutsideRegion, "z outside the annulus of F_mu");
        return two_pi * phi(gb_t, ord, 2, l)(zi) * zi * eval_fseries_conj(m, z, SeriesMode::full, 0, N) *
               exp_poly(conj_all(t.t2), zi, -1.0);
    case Wave::psi2:
        if (!m.annulus().contains(zi)) throw Error(ErrorKind::OutsideRegion, "1/z outside the annulus of F_mu");
        return two_pi * phi(gb_t, ord, 1, l)(zi) * zi * eval_fseries(m, zi, SeriesMode::full, 0, N) *
               exp_poly(t.t1, zi, 1.0);
    default: return wave_eval(m, gb_t, t, ord, l, z, which, N);
    }
}

double wave_eigen_residual(const Measure& m, const Ordering& ord, const DeformationTimes& t, int l, cplx z) {
    const GaussBorelFactors gb = factorize_at_time(m, ord, t, l);
    const Mat L1 = lax_and_zs(gb, build_upsilon(ord, l), 0).lax.L1;
    Vec psi(l);
    for (int k = 0; k < l; ++k) psi(k) = wave_eval(m, gb, t, ord, k, z, Wave::psi1);
    const Vec r = L1 * psi - z * psi;
    const int n = trusted_size(ord, l);
    return r.head(n).cwiseAbs().maxCoeff() / psi.cwiseAbs().maxCoeff();
}

DiscreteResult discrete_step(const Measure& m, const GaussBorelFactors& gb, const Ordering& ord, cplx lambda,
                             StepDirection direction, StepKind kind) {
    if (std::abs(lambda) >= 1.0) throw Error(ErrorKind::LambdaOnCircle, "discrete flows need |lambda| < 1");
    if (kind == StepKind::D1) direction = StepDirection::T1;
    if (kind == StepKind::D2) direction = StepDirection::T2;
    const int n = gb.size();
    const Mat ups = build_upsilon(ord, n);
    const Mat id = Mat::Identity(n, n);
    const Mat s1inv = unit_lower_inverse(gb.S1);
    const Mat L1 = gb.S1 * ups * s1inv;
    const Mat L1inv = gb.S1 * ups.transpose() * s1inv;
    const Mat L2 = gb.S2 * ups.transpose() * gb.S2inv;
    const Mat L2inv = gb.S2 * ups * gb.S2inv;

    DiscreteResult r{m, gb, {}, 0, 0, 0, 0, 0, 0};
    DiscreteStep& st = r.step;
    st.lambda = lambda;
    st.direction = direction;
    st.kind = kind;

    const bool t1 = direction == StepDirection::T1;
    if (kind == StepKind::conj_pair) {
        st.delta = t1 ? Mat((L1 - lambda * id) * (L1inv - std::conj(lambda) * id))
                      : Mat((L2 - lambda * id) * (L2inv - std::conj(lambda) * id));
        r.measure = t1 ? apply_discrete_factor(m, lambda, DiscreteKind::conjugate_pair_1)
                       : m.decorated(Factor{FactorKind::conjugate_pair, {}, 0.0, std::conj(lambda)});
    } else {
        st.delta = t1 ? Mat(L1 - lambda * id) : Mat(L2 - lambda * id);
        r.measure = apply_discrete_factor(m, lambda, t1 ? DiscreteKind::D1_forward : DiscreteKind::D2_forward);
    }

    // a product of two dressed operators loses one more band width at the edge
    const int inner = trusted_size(ord, n) - (kind == StepKind::conj_pair ? ord.margin() : 0);
    const Mat dblock = st.delta.topLeftCorner(std::max(inner, 0), std::max(inner, 0));
    const Lu lu = doolittle(dblock);
    st.omega = lu.upper;
    st.delta_minus = unit_lower_inverse(lu.lower);

    r.gb = factorize(r.measure, ord, n);
    const int k = std::max(inner - ord.margin(), 0);
    const Mat ratio1 = r.gb.S1 * s1inv;
    const Mat ratio2 = r.gb.S2 * gb.S2inv;
    r.two_path_minus = rel_block(ratio1, st.delta_minus, inner);
    r.two_path_plus = rel_block(ratio2, st.omega, inner);

    // T(delta) from the shifted factors against the UL product
    const Mat s1inv_new = unit_lower_inverse(r.gb.S1);
    const Mat nL1 = r.gb.S1 * ups * s1inv_new;
    const Mat nL1inv = r.gb.S1 * ups.transpose() * s1inv_new;
    const Mat nL2 = r.gb.S2 * ups.transpose() * r.gb.S2inv;
    const Mat nL2inv = r.gb.S2 * ups * r.gb.S2inv;
    Mat tdelta;
    if (kind == StepKind::conj_pair)
        tdelta = t1 ? Mat((nL1 - lambda * id) * (nL1inv - std::conj(lambda) * id))
                    : Mat((nL2 - lambda * id) * (nL2inv - std::conj(lambda) * id));
    else
        tdelta = t1 ? Mat(nL1 - lambda * id) : Mat(nL2 - lambda * id);
    const Mat ul = lu.upper * lu.lower;
    r.darboux = rel_block(tdelta, ul, k);

    // omega = delta_+ keeps n_- + 1 superdiagonals for T1 and n_+ + 1 for T2, doubled for pairs
    int band = (t1 ? ord.n_minus : ord.n_plus) + 1;
    if (kind == StepKind::conj_pair) band = ord.n_plus + ord.n_minus + 2;
    double outside = 0.0;
    for (int i = 0; i < inner; ++i)
        for (int j = i + band + 1; j < inner; ++j) outside = std::max(outside, std::abs(st.omega(i, j)));
    r.omega_band = outside;

    r.min_h_real = r.gb.h.real().minCoeff();
    r.max_h_imag = r.gb.h.imag().cwiseAbs().maxCoeff();
    return r;
}

} // namespace olpuc

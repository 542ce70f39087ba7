#include "olpuc/measure.hpp"

#include "olpuc/error.hpp"

#include <cmath>
#include <numbers>

namespace olpuc {

namespace {

constexpr double kHuge = 1e250;

// geometric series sum_{n>=0} r^n z^{sign*n + offset}, scaled by s
void add_geometric(std::vector<cplx>& out, int bound, cplx s, cplx r, int sign, int offset) {
    cplx term = s;
    for (int n = 0;; ++n) {
        int e = sign * n + offset;
        if (e < -bound || e > bound) break;
        if (std::abs(term) > kHuge) break;
        out[e + bound] += term;
        term *= r;
    }
}

// power series of exp(sum_j p_j x^j), p[j-1] = p_j, up to degree n
std::vector<cplx> exp_series(const std::vector<cplx>& p, int n) {
    std::vector<cplx> e(n + 1, 0.0);
    e[0] = 1.0;
    for (int k = 1; k <= n; ++k) {
        cplx acc = 0.0;
        for (int j = 1; j <= k && j <= static_cast<int>(p.size()); ++j)
            acc += static_cast<double>(j) * p[j - 1] * e[k - j];
        e[k] = acc / static_cast<double>(k);
    }
    return e;
}

std::vector<cplx> convolve(const std::vector<cplx>& a, const std::vector<cplx>& b, int bound) {
    const int len = 2 * bound + 1;
    std::vector<cplx> out(len, 0.0);
    for (int i = 0; i < len; ++i) {
        if (a[i] == cplx(0.0)) continue;
        int ei = i - bound;
        for (int j = 0; j < len; ++j) {
            int e = ei + j - bound;
            if (e < -bound || e > bound) continue;
            out[e + bound] += a[i] * b[j];
        }
    }
    return out;
}

double inv_factorial(int n) {
    return std::exp(-std::lgamma(static_cast<double>(n) + 1.0));
}

} // namespace

bool DeformationTimes::is_zero() const {
    for (auto v : t1)
        if (v != cplx(0.0)) return false;
    for (auto v : t2)
        if (v != cplx(0.0)) return false;
    return true;
}

bool DeformationTimes::schur_reduced(double tol) const {
    size_t n = std::max(t1.size(), t2.size());
    for (size_t j = 0; j < n; ++j) {
        cplx a = j < t1.size() ? t1[j] : 0.0;
        cplx b = j < t2.size() ? t2[j] : 0.0;
        if (std::abs(b + std::conj(a)) > tol) return false;
    }
    return true;
}

DeformationTimes DeformationTimes::schur(std::vector<cplx> t1) {
    DeformationTimes t;
    t.t2.resize(t1.size());
    for (size_t j = 0; j < t1.size(); ++j) t.t2[j] = -std::conj(t1[j]);
    t.t1 = std::move(t1);
    return t;
}

DeformationTimes DeformationTimes::operator+(const DeformationTimes& o) const {
    DeformationTimes r;
    r.t1.resize(std::max(t1.size(), o.t1.size()), 0.0);
    r.t2.resize(std::max(t2.size(), o.t2.size()), 0.0);
    for (size_t j = 0; j < t1.size(); ++j) r.t1[j] += t1[j];
    for (size_t j = 0; j < o.t1.size(); ++j) r.t1[j] += o.t1[j];
    for (size_t j = 0; j < t2.size(); ++j) r.t2[j] += t2[j];
    for (size_t j = 0; j < o.t2.size(); ++j) r.t2[j] += o.t2[j];
    return r;
}

Annulus Factor::region() const {
    Annulus a;
    const double lw = std::abs(w);
    const double ll = std::abs(lambda);
    switch (kind) {
    case FactorKind::toda_exp:
    case FactorKind::miwa1_minus:
    case FactorKind::miwa2_plus:
    case FactorKind::linear_z:
    case FactorKind::linear_zinv:
    case FactorKind::conjugate_pair:
        break;
    case FactorKind::miwa1_plus: a.r_plus = lw; break;
    case FactorKind::miwa2_minus: a.r_minus = lw; break;
    case FactorKind::inverse_linear_z:
        if (ll < 1.0) a.r_minus = ll; else a.r_plus = ll;
        break;
    case FactorKind::inverse_linear_zinv:
        if (ll < 1.0) a.r_plus = ll > 0 ? 1.0 / ll : a.r_plus; else a.r_minus = 1.0 / ll;
        break;
    case FactorKind::inverse_conjugate_pair:
        if (ll < 1.0) {
            a.r_minus = ll;
            if (ll > 0) a.r_plus = 1.0 / ll;
        } else {
            a.r_minus = 1.0 / ll;
            a.r_plus = ll;
        }
        break;
    }
    return a;
}

cplx Factor::value(cplx z) const {
    switch (kind) {
    case FactorKind::toda_exp: {
        cplx s = 0.0;
        cplx zp = 1.0, zm = 1.0;
        size_t n = std::max(times.t1.size(), times.t2.size());
        for (size_t j = 0; j < n; ++j) {
            zp *= z;
            zm /= z;
            if (j < times.t1.size()) s += times.t1[j] * zp;
            if (j < times.t2.size()) s -= times.t2[j] * zm;
        }
        return std::exp(s);
    }
    case FactorKind::miwa1_plus: return 1.0 / (1.0 - z / w);
    case FactorKind::miwa1_minus: return 1.0 - z / w;
    case FactorKind::miwa2_plus: return 1.0 - w / z;
    case FactorKind::miwa2_minus: return 1.0 / (1.0 - w / z);
    case FactorKind::linear_z: return z - lambda;
    case FactorKind::linear_zinv: return 1.0 / z - lambda;
    case FactorKind::inverse_linear_z: return 1.0 / (z - lambda);
    case FactorKind::inverse_linear_zinv: return 1.0 / (1.0 / z - lambda);
    case FactorKind::conjugate_pair: return (z - lambda) * (1.0 / z - std::conj(lambda));
    case FactorKind::inverse_conjugate_pair: return 1.0 / ((z - lambda) * (1.0 / z - std::conj(lambda)));
    }
    return 1.0;
}

std::vector<cplx> Factor::series(int bound) const {
    const int len = 2 * bound + 1;
    std::vector<cplx> s(len, 0.0);
    auto at = [&](int e) -> cplx& { return s[e + bound]; };
    switch (kind) {
    case FactorKind::toda_exp: {
        std::vector<cplx> m2(times.t2.size());
        for (size_t j = 0; j < m2.size(); ++j) m2[j] = -times.t2[j];
        auto ep = exp_series(times.t1, bound);
        auto em = exp_series(m2, bound);
        std::vector<cplx> a(len, 0.0), b(len, 0.0);
        for (int n = 0; n <= bound; ++n) {
            a[n + bound] = ep[n];
            b[-n + bound] = em[n];
        }
        return convolve(a, b, bound);
    }
    case FactorKind::miwa1_plus: add_geometric(s, bound, 1.0, 1.0 / w, +1, 0); break;
    case FactorKind::miwa1_minus: at(0) = 1.0; at(1) = -1.0 / w; break;
    case FactorKind::miwa2_plus: at(0) = 1.0; at(-1) = -w; break;
    case FactorKind::miwa2_minus: add_geometric(s, bound, 1.0, w, -1, 0); break;
    case FactorKind::linear_z: at(1) = 1.0; at(0) = -lambda; break;
    case FactorKind::linear_zinv: at(-1) = 1.0; at(0) = -lambda; break;
    case FactorKind::inverse_linear_z:
        if (std::abs(lambda) < 1.0) add_geometric(s, bound, 1.0, lambda, -1, -1);
        else add_geometric(s, bound, -1.0 / lambda, 1.0 / lambda, +1, 0);
        break;
    case FactorKind::inverse_linear_zinv:
        if (std::abs(lambda) < 1.0) add_geometric(s, bound, 1.0, lambda, +1, 1);
        else add_geometric(s, bound, -1.0 / lambda, 1.0 / lambda, -1, 0);
        break;
    case FactorKind::conjugate_pair:
        at(1) = -std::conj(lambda);
        at(0) = 1.0 + std::norm(lambda);
        at(-1) = -lambda;
        break;
    case FactorKind::inverse_conjugate_pair: {
        Factor a{FactorKind::inverse_linear_z, {}, 0.0, lambda};
        Factor b{FactorKind::inverse_linear_zinv, {}, 0.0, std::conj(lambda)};
        return convolve(a.series(bound), b.series(bound), bound);
    }
    }
    return s;
}

Measure Measure::lebesgue(int bound) {
    Measure m;
    m.base_ = BaseKind::lebesgue;
    m.bound_ = bound;
    m.rebuild();
    return m;
}

Measure Measure::fourier_table(std::map<int, cplx> coeffs, int bound) {
    Measure m;
    m.base_ = BaseKind::fourier_table;
    for (auto& [n, c] : coeffs)
        if (std::abs(n) > bound) throw Error(ErrorKind::TruncationExceeded, "table entry beyond bound", n);
    m.bp_.coeffs = std::move(coeffs);
    m.bound_ = bound;
    m.rebuild();
    return m;
}

Measure Measure::trig_poly(double a, int bound) {
    Measure m;
    m.base_ = BaseKind::trig_poly_weight;
    m.bp_.params["a"] = a;
    m.bound_ = bound;
    m.rebuild();
    return m;
}

Measure Measure::exp_cos(int bound) {
    Measure m;
    m.base_ = BaseKind::exp_cos_weight;
    m.bound_ = bound;
    m.rebuild();
    return m;
}

Measure Measure::decorated(const Factor& f) const {
    Measure m = *this;
    m.decs_.push_back(f);
    m.rebuild();
    return m;
}

Measure Measure::with_bound(int bound) const {
    Measure m = *this;
    m.bound_ = bound;
    m.rebuild();
    return m;
}

void Measure::rebuild() {
    const int B = bound_;
    std::vector<cplx> t(2 * B + 1, 0.0);
    switch (base_) {
    case BaseKind::lebesgue: t[B] = 1.0; break;
    case BaseKind::fourier_table:
        for (auto& [n, c] : bp_.coeffs) t[n + B] = c;
        break;
    case BaseKind::trig_poly_weight: {
        double a = bp_.params.at("a");
        t[B] = 1.0;
        if (B >= 1) t[B + 1] = t[B - 1] = a / 2.0;
        break;
    }
    case BaseKind::exp_cos_weight:
        for (int n = -B; n <= B; ++n) t[n + B] = 0.5 * inv_factorial(std::abs(n));
        t[B] += std::numbers::e + 0.5;
        break;
    }
    for (auto& f : decs_) t = convolve(t, f.series(B), B);
    table_ = std::make_shared<const std::vector<cplx>>(std::move(t));
}

cplx Measure::coeff(int n) const {
    if (std::abs(n) > bound_) {
        if (decs_.empty()) {
            switch (base_) {
            case BaseKind::exp_cos_weight: return 0.5 * inv_factorial(std::abs(n));
            default: return 0.0;
            }
        }
        throw Error(ErrorKind::TruncationExceeded, "coefficient index beyond truncation bound", n);
    }
    return (*table_)[n + bound_];
}

cplx Measure::density(double theta) const {
    const cplx z = std::polar(1.0, theta);
    cplx w = 0.0;
    switch (base_) {
    case BaseKind::lebesgue: w = 1.0; break;
    case BaseKind::fourier_table:
        for (auto& [n, c] : bp_.coeffs) w += c * std::polar(1.0, n * theta);
        break;
    case BaseKind::trig_poly_weight: w = 1.0 + bp_.params.at("a") * std::cos(theta); break;
    case BaseKind::exp_cos_weight:
        w = std::numbers::e + std::exp(std::cos(theta)) * std::cos(std::sin(theta));
        break;
    }
    for (auto& f : decs_) w *= f.value(z);
    return w;
}

Annulus Measure::annulus() const {
    Annulus a;
    for (auto& f : decs_) {
        Annulus r = f.region();
        a.r_minus = std::max(a.r_minus, r.r_minus);
        a.r_plus = std::min(a.r_plus, r.r_plus);
    }
    return a;
}

bool Measure::valid_on_circle() const { return annulus().contains(1.0); }

bool Measure::is_hermitian(double tol) const {
    const auto& t = *table_;
    double scale = 0.0;
    for (auto v : t) scale = std::max(scale, std::abs(v));
    for (int n = 1; n <= bound_; ++n)
        if (std::abs(t[bound_ - n] - std::conj(t[bound_ + n])) > tol * scale) return false;
    return std::abs(t[bound_].imag()) <= tol * scale;
}

namespace {

cplx fseries_impl(const Measure& m, cplx z, SeriesMode mode, int k, int N, bool conj_c) {
    if (z == cplx(0.0)) throw Error(ErrorKind::OutsideAnnulus, "z = 0");
    Annulus a = m.annulus();
    const double r = std::abs(z);
    bool ok = true;
    switch (mode) {
    case SeriesMode::full: ok = a.contains(z); break;
    case SeriesMode::plus_k: ok = r < a.r_plus; break;
    case SeriesMode::minus_k: ok = r > a.r_minus; break;
    }
    if (!ok) throw Error(ErrorKind::OutsideAnnulus, "z outside the convergence annulus");
    if (N < 0) N = m.bound();
    N = std::min(N, m.bound());
    int lo = -N, hi = N;
    if (mode == SeriesMode::plus_k) lo = std::max(lo, -k);
    if (mode == SeriesMode::minus_k) hi = std::min(hi, -k - 1);
    cplx s = 0.0;
    if (hi < lo) return s;
    // Horner over [lo, hi]
    for (int n = hi; n >= lo; --n) {
        cplx c = m.coeff(n);
        s = s * z + (conj_c ? std::conj(c) : c);
    }
    return s * std::pow(z, lo);
}

} // namespace

cplx eval_fseries(const Measure& m, cplx z, SeriesMode mode, int k, int N) {
    return fseries_impl(m, z, mode, k, N, false);
}

cplx eval_fseries_conj(const Measure& m, cplx z, SeriesMode mode, int k, int N) {
    return fseries_impl(m, z, mode, k, N, true);
}

Measure deform(const Measure& m, const DeformationTimes& t) {
    if (t.is_zero()) return m;
    Factor f{FactorKind::toda_exp, t, 0.0, 0.0};
    return m.decorated(f);
}

Measure miwa_shift(const Measure& m, cplx w, MiwaWhich which) {
    if (w == cplx(0.0)) throw Error(ErrorKind::OutsideRegion, "Miwa point w = 0");
    FactorKind k = FactorKind::miwa1_plus;
    switch (which) {
    case MiwaWhich::plus1: k = FactorKind::miwa1_plus; break;
    case MiwaWhich::minus1: k = FactorKind::miwa1_minus; break;
    case MiwaWhich::plus2: k = FactorKind::miwa2_plus; break;
    case MiwaWhich::minus2: k = FactorKind::miwa2_minus; break;
    }
    return m.decorated(Factor{k, {}, w, 0.0});
}

Measure apply_discrete_factor(const Measure& m, cplx lambda, DiscreteKind kind) {
    if (std::abs(std::abs(lambda) - 1.0) < 1e-12)
        throw Error(ErrorKind::LambdaOnCircle, "|lambda| = 1");
    FactorKind k = FactorKind::linear_z;
    switch (kind) {
    case DiscreteKind::D1_forward: k = FactorKind::linear_z; break;
    case DiscreteKind::D2_forward: k = FactorKind::linear_zinv; break;
    case DiscreteKind::D1_backward: k = FactorKind::inverse_linear_z; break;
    case DiscreteKind::D2_backward: k = FactorKind::inverse_linear_zinv; break;
    case DiscreteKind::conjugate_pair_1: k = FactorKind::conjugate_pair; break;
    case DiscreteKind::conjugate_pair_2: k = FactorKind::inverse_conjugate_pair; break;
    }
    return m.decorated(Factor{k, {}, 0.0, lambda});
}

} // namespace olpuc

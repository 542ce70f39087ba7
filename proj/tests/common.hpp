#pragma once

#include <doctest.h>

#include "olpuc/checks.hpp"
#include "olpuc/cmv_operator.hpp"
#include "olpuc/error.hpp"
#include "olpuc/quadrature.hpp"
#include "oracles/frozen_values.hpp"

#include <cmath>
#include <numbers>

namespace testing {

using namespace olpuc;

constexpr double pi = std::numbers::pi;
constexpr double e = std::numbers::e;

inline double rel_err(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

inline const Ordering orderings[] = {Ordering(1, 1), Ordering(2, 1), Ordering(3, 2)};

inline Measure complex_test_measure() {
    // non-Hermitian but quasi-definite: exp_cos under complex Toda times
    Factor f{FactorKind::toda_exp, {}, 0.0, 0.0};
    f.times.t1 = {cplx(0.3, 0.1)};
    f.times.t2 = {cplx(-0.2, 0.05)};
    return Measure::exp_cos().decorated(f);
}

} // namespace testing

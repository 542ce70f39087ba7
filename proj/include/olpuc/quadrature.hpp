#pragma once

#include "olpuc/measure.hpp"

#include <functional>

namespace olpuc {

using ZFunc = std::function<cplx(cplx)>;

// default trapezoid size, overridable through OLPUC_QUAD_N
int default_quad_n();

// trapezoid rule for int_0^{2pi} f(e^{i theta}) dmu(theta); OpenMP over nodes
cplx integrate(const Measure& m, const ZFunc& f, int N = -1);
// single-threaded reference
cplx integrate_serial(const Measure& m, const ZFunc& f, int N = -1);
// same rule against conj(dmu)
cplx integrate_conj(const Measure& m, const ZFunc& f, int N = -1);

// closed contour integral of f over |z| = r, counterclockwise
cplx circle_integral(const ZFunc& f, double r, int N);

// nodes e^{2 pi i k / N} and density weights (2pi/N) w(theta_k)
struct QuadGrid {
    std::vector<cplx> z;
    std::vector<cplx> w;
};
QuadGrid quad_grid(const Measure& m, int N = -1);

} // namespace olpuc

#include "olpuc/quadrature.hpp"

#include <cstdlib>
#include <numbers>
#include <string>

namespace olpuc {

int default_quad_n() {
    if (const char* s = std::getenv("OLPUC_QUAD_N")) {
        try {
            int n = std::stoi(s);
            if (n >= 16) return n;
        } catch (...) {
        }
    }
    return 4096;
}

QuadGrid quad_grid(const Measure& m, int N) {
    if (N <= 0) N = default_quad_n();
    QuadGrid g;
    g.z.resize(N);
    g.w.resize(N);
    const double h = 2.0 * std::numbers::pi / N;
#pragma omp parallel for schedule(static)
    for (int k = 0; k < N; ++k) {
        double th = h * k;
        g.z[k] = std::polar(1.0, th);
        g.w[k] = h * m.density(th);
    }
    return g;
}

cplx integrate(const Measure& m, const ZFunc& f, int N) {
    if (N <= 0) N = default_quad_n();
    const double h = 2.0 * std::numbers::pi / N;
    double re = 0.0, im = 0.0;
#pragma omp parallel for reduction(+ : re, im) schedule(static)
    for (int k = 0; k < N; ++k) {
        double th = h * k;
        cplx v = f(std::polar(1.0, th)) * m.density(th);
        re += v.real();
        im += v.imag();
    }
    return h * cplx(re, im);
}

cplx integrate_serial(const Measure& m, const ZFunc& f, int N) {
    if (N <= 0) N = default_quad_n();
    const double h = 2.0 * std::numbers::pi / N;
    cplx s = 0.0;
    for (int k = 0; k < N; ++k) {
        double th = h * k;
        s += f(std::polar(1.0, th)) * m.density(th);
    }
    return h * s;
}

cplx integrate_conj(const Measure& m, const ZFunc& f, int N) {
    if (N <= 0) N = default_quad_n();
    const double h = 2.0 * std::numbers::pi / N;
    double re = 0.0, im = 0.0;
#pragma omp parallel for reduction(+ : re, im) schedule(static)
    for (int k = 0; k < N; ++k) {
        double th = h * k;
        cplx v = f(std::polar(1.0, th)) * std::conj(m.density(th));
        re += v.real();
        im += v.imag();
    }
    return h * cplx(re, im);
}

cplx circle_integral(const ZFunc& f, double r, int N) {
    const double h = 2.0 * std::numbers::pi / N;
    double re = 0.0, im = 0.0;
#pragma omp parallel for reduction(+ : re, im) schedule(static)
    for (int k = 0; k < N; ++k) {
        cplx z = std::polar(r, h * k);
        cplx v = f(z) * cplx(0.0, 1.0) * z;
        re += v.real();
        im += v.imag();
    }
    return h * cplx(re, im);
}

} // namespace olpuc

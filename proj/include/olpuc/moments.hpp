#pragma once

#include "olpuc/measure.hpp"
#include "olpuc/ordering.hpp"

namespace olpuc {

// 2 pi c_{J(k) - J(j)}
cplx moment_entry(const Measure& m, const Ordering& ord, int j, int k);

// l x l truncation g^{[l]}; entries filled in parallel
Mat build_moments(const Measure& m, const Ordering& ord, int l);
Mat build_moments_serial(const Measure& m, const Ordering& ord, int l);

struct Quasidefiniteness {
    std::vector<double> minors;  // |det g^{[k]}|, k = 1..l
    bool ok = true;
};
// minor k accepted when above tol * (max |g_jk|)^k
Quasidefiniteness check_quasidefinite(const Mat& g, double tol = 1e-10);

// max |(Ups g - g Ups)_{ij}| over entries untouched by the truncation
double string_residual(const Mat& g, const Mat& ups, const Ordering& ord);

} // namespace olpuc

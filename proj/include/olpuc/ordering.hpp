#pragma once

#include "olpuc/laurent.hpp"

#include <Eigen/Dense>

namespace olpuc {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// (n+, n-) alternation of Laurent monomials; (1,1) is the CMV sequence
struct Ordering {
    int n_plus = 1;
    int n_minus = 1;

    Ordering() = default;
    Ordering(int np, int nm);

    int period() const { return n_plus + n_minus; }
    bool is_cmv() const { return n_plus == 1 && n_minus == 1; }

    // chi^{(j)}(z) = z^{J(j)}
    int exponent(int j) const;
    // index carrying exponent e
    int index_of(int e) const;
    // 1 if J(l) >= 0, else 2
    int cls(int l) const;
    int nu_plus(int l) const;
    int nu_minus(int l) const;
    // l_{+a} (smallest l' >= l of class a) or l_{-a} (largest l' <= l); NoSuchIndex
    int l_plus(int l, int a) const;
    int l_minus(int l, int a) const;
    // rows/columns trusted in truncated operator identities
    int margin() const { return n_plus + n_minus + 2; }
};

Vec chi(const Ordering& ord, int n, cplx z);
// chi*^{(k)}(z) = z^{-J(k)-1}
Vec chi_star(const Ordering& ord, int n, cplx z);

// size x size truncation of the shift: Ups(j,k) = 1 iff J(k) = J(j) + 1
Mat build_upsilon(const Ordering& ord, int size);
// row j of the truncation is complete (its target index is inside)
bool upsilon_row_interior(const Ordering& ord, int j, int size);

// rows/columns below this index are free of truncation defects
int trusted_size(const Ordering& ord, int size);

// Laurent window [lo, hi] spanned by chi^{(0)}, ..., chi^{(l-1)}
std::pair<int, int> window(const Ordering& ord, int l);

} // namespace olpuc

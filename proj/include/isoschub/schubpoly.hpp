#pragma once

#include "isoschub/partition.hpp"
#include "isoschub/poly.hpp"
#include "isoschub/weyl.hpp"

namespace isoschub {

/// Top symplectic Schubert polynomial
/// (-1)^{n(n-1)/2} x_1^{n-1} x_2^{n-2} ... x_{n-1} * Q~_{rho_n}(X_n).
Poly c_top(int n);

/// C_w = d'_{w^{-1} w_0}(C_{w_0}) for w in the type C group W_n.
Poly c_w(const SignedPerm& w);

/// w_I = (i_1bar, ..., i_kbar, j_1 < ... < j_{n-k}) for strict I in rho_n.
SignedPerm w_grassmannian(const Partition& I, int n);

}  // namespace isoschub

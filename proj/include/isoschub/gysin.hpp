#pragma once

#include <optional>

#include "isoschub/chern.hpp"
#include "isoschub/geometry.hpp"

namespace isoschub {

/// Root-level image of Q~_I(R^vee) under the Grassmannian push-forward:
/// zero unless every p in 1..n (1..n-1 for even) has odd multiplicity in
/// I, otherwise 2^s * prod_p e_p(x^2)^{(m_p - 1)/2} with s = 0, n, n-1.
/// Even orthogonal input must have all parts <= n-1.
Poly push_qtilde_closed(const Partition& I, int n, Geometry g);

/// The same image in Chern classes of the ambient bundle V:
/// 2^s * prod_p ((-1)^p c_{2p} V)^{(m_p - 1)/2}.
ChernExpr push_qtilde_formal(const Partition& I, int n, Geometry g);

/// The same image computed by the divided-difference model.
Poly push_qtilde_operator(const Partition& I, int n, Geometry g);

struct SchurPush {
  bool zero = true;
  Partition J;
  Rational prefactor = 0;
  /// prefactor * s_J^[2](V).
  ChernExpr formal;
  /// prefactor * s_J(x_1^2, ..., x_n^2).
  Poly root_level;
};

/// Image of s_I(R^vee): nonzero only for I = 2J + rho_n (rho_{n-1} for
/// even). Requires l(I) <= n (n-1 for even).
SchurPush push_schur_closed(const Partition& I, int n, Geometry g);
Poly push_schur_operator(const Partition& I, int n, Geometry g);

/// s_J with e_i replaced by (-1)^i c_{2i}(bundle).
ChernExpr s_bracket2(const Partition& J, const std::string& bundle);

/// Residual partition J with I = (n, ..., k+1, J), or nullopt when
/// (n, ..., k+1) is not contained in I. Requires strict I inside rho_n and
/// 0 < k < n.
std::optional<Partition> push_partial_flag(const Partition& I, int k, int n);

/// Applies d_{w^(k)} to F_I(X_n^vee) (Q~ with type C, P~ with type B) and
/// compares with the combinatorial rule.
bool verify_partial_flag(const Partition& I, int k, int n, Geometry g);

/// Even orthogonal rule: residual after removing (n-1, ..., k), I strict
/// inside rho_{n-1}.
std::optional<Partition> push_partial_flag_even(const Partition& I, int k, int n);

/// nabla(F_I(X^vee) * F_J(X^vee)) with F = Q~ (lagrangian) or P~.
Poly orthogonality_value(const Partition& I, const Partition& J, int n, Geometry g);
/// Constant value of the above; throws std::logic_error if it is not a
/// constant.
Rational orthogonality_check(const Partition& I, const Partition& J, int n, Geometry g);

/// s_I(x^p) * s_{(p-1) rho_{n-1}}(X_n) == s_{pI + (p-1) rho_{n-1}}(X_n).
bool power_schur_identity(const Partition& I, int p, int n);

/// F_I(X_n^vee) for the family of the geometry, cached.
Poly family_dual(Family f, const Partition& I, int n);

}  // namespace isoschub

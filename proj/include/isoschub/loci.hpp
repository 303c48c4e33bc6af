#pragma once

#include "isoschub/chern.hpp"
#include "isoschub/geometry.hpp"

namespace isoschub {

/// Bundle names used by the generators. With EF naming the tautological
/// bundle is "E" and the flag is "F", "F_{n-1}", ...; with RV naming they
/// are "R" and "V_n", "V_{n-1}", ...
enum class Naming { EF, RV };

/// Name of the flag member of rank n - offset.
std::string flag_bundle(Naming naming, int offset);
std::string sub_bundle(Naming naming);

/// Q~_I or P~_I of a bundle written in its Chern classes through the
/// two-row formula and the Pfaffian recurrence; c_i = 0 for i > rank
/// (a negative rank means no truncation).
ChernExpr qtilde_chern(const Partition& I, const std::string& bundle, bool dual, int rank,
                       Family family);

/// Rewrites every Qt/Pt atom through qtilde_chern with the given rank.
ChernExpr expand_family_atoms(const ChernExpr& e, int rank);

/// Sum over strict I in the staircase of F_I(first^vee) * F_{rho - I}(second^vee),
/// staircase rho_k (rho_{k-1} for even), F = Q~ (lagrangian) or P~.
ChernExpr staircase_sum(int k, Geometry g, const std::string& first, const std::string& second);

/// Diagonal class on the fibre square, bundles R1 and R2.
ChernExpr diagonal_class(int n, Geometry g);

/// Class of the locus where the two rank n isotropic bundles meet in
/// dimension >= k; bundles E and F by default.
ChernExpr class_maximal_isotropic(int k, Geometry g, const std::string& first = "E",
                                  const std::string& second = "F");

/// Single Schubert condition dim(R cap V_a) >= 1 with a = n+1-i
/// (a = n-i for even). Odd and even carry the prefactor 1/2.
Formula class_single_condition(int i, int n, Geometry g, Naming naming);

/// Two Schubert conditions with a = n+1-i, b = n+1-j.
Formula class_two_conditions(int i, int j, int n, Geometry g);

/// Closed form for j = i-1 in Schur classes of V_{n+2-i}.
ChernExpr class_two_conditions_adjacent(int i);

/// Nested flag roots V_{n-d} = (x_1..x_{n-d}) and free symbols for R and V;
/// true when the general two-condition class at j = i-1 agrees with the
/// adjacent closed form.
bool two_conditions_adjacent_agree(int i, int n);

/// s_{k-(b-2)}(V_b^vee) s_{l-(a-1)}(V_a^vee) - s_{k-(a-2)}(V_a^vee) s_{l-(b-1)}(V_b^vee)
/// with bundles named V_a, V_b by their numeric ranks.
ChernExpr flag_push_s(int k, int l, int a, int b);

/// Pushes the diagonal class on the flag bundle (bundles D and R) through
/// the partial-flag rule, giving the class of Omega(n-k+1, ..., n) in
/// terms of V_n and R.
ChernExpr maximal_isotropic_recomputed(int k, int n);

/// True when every combined coefficient has a denominator dividing
/// 2^max_power.
bool bounded_denominators(const Formula& f, int max_power);

}  // namespace isoschub

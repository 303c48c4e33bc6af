#pragma once

#include <stdexcept>
#include <string>

#include "isoschub/symfunc.hpp"
#include "isoschub/weyl.hpp"

namespace isoschub {

/// Lagrangian (rank 2n symplectic), odd orthogonal (rank 2n+1) and even
/// orthogonal (rank 2n) Grassmannian bundles.
enum class Geometry { Lagrangian, OddOrth, EvenOrth };

inline std::string geometry_name(Geometry g) {
  switch (g) {
    case Geometry::Lagrangian: return "lagrangian";
    case Geometry::OddOrth: return "odd_orth";
    case Geometry::EvenOrth: return "even_orth";
  }
  return "?";
}

inline Geometry parse_geometry(const std::string& s) {
  if (s == "lagrangian" || s == "C") return Geometry::Lagrangian;
  if (s == "odd_orth" || s == "odd" || s == "B") return Geometry::OddOrth;
  if (s == "even_orth" || s == "even" || s == "D") return Geometry::EvenOrth;
  throw std::invalid_argument("unknown geometry '" + s + "'");
}

inline GroupType group_of(Geometry g) {
  switch (g) {
    case Geometry::Lagrangian: return GroupType::C;
    case Geometry::OddOrth: return GroupType::B;
    case Geometry::EvenOrth: return GroupType::D;
  }
  return GroupType::C;
}

/// Q~ for the symplectic case, P~ for both orthogonal cases.
inline Family family_of(Geometry g) {
  return g == Geometry::Lagrangian ? Family::QTilde : Family::PTilde;
}

/// Size of the staircase indexing the Schubert basis: n, or n-1 for even.
inline int staircase_of(Geometry g, int n) { return g == Geometry::EvenOrth ? n - 1 : n; }

}  // namespace isoschub

#pragma once

#include <compare>
#include <string>
#include <vector>

namespace isoschub {

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// dropped on construction, so equality is structural.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument if the sequence increases or has a
  /// negative entry. Zero entries are allowed only as a trailing block.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Parses "3,2,1"; the empty string (or "0") gives the zero partition.
  static Partition parse(const std::string& text);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  bool empty() const { return parts_.empty(); }
  bool is_strict() const;

  /// The p-th part (0-based); zero past the end.
  int operator[](std::size_t p) const { return p < parts_.size() ? parts_[p] : 0; }

  /// True when J's diagram sits inside this one.
  bool contains(const Partition& J) const;
  Partition conjugate() const;

  /// "3,2,1"; empty string for the zero partition.
  std::string str() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Strict order used for printing and enumeration: larger in the
/// lexicographic sense comes first.
struct LexGreater {
  bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

/// Order for staircase subsets: longer first, then lexicographically larger.
struct LengthThenLexGreater {
  bool operator()(const Partition& a, const Partition& b) const {
    if (a.length() != b.length()) return a.length() > b.length();
    return b < a;
  }
};

Partition rho(int k);

/// Strict partition whose parts are {k,...,1} minus the parts of I.
Partition rho_complement(const Partition& I, int k);

/// All J containing I with |J| = |I| + r, j_1 <= max_part and at most one
/// added box per column, in decreasing lexicographic order.
std::vector<Partition> horizontal_strips(const Partition& I, int r, int max_part);

struct PieriMultiplicity {
  int m = 0;
  bool meets_first_column = false;
};

/// m = #{p <= l(I) : j_{p+1} < i_p < j_p}. Cross-checked internally
/// against the number of connected components of J/I that avoid column 1.
PieriMultiplicity pieri_multiplicity(const Partition& I, const Partition& J);

/// Component count of the strip J/I avoiding column 1, computed from the
/// box diagram. Exposed for the equivalence property.
int strip_components_off_first_column(const Partition& I, const Partition& J);

bool is_horizontal_strip(const Partition& I, const Partition& J);

/// Partitions of w with parts <= max_part and length <= max_len (negative
/// bounds mean unbounded), in decreasing lexicographic order.
std::vector<Partition> partitions_of(int w, int max_part = -1, int max_len = -1);

/// All partitions of weight <= max_weight with parts <= max_part.
std::vector<Partition> partitions_up_to(int max_weight, int max_part, int max_len = -1);

/// Strict partitions contained in rho(k), longest first, then
/// lexicographically larger first.
std::vector<Partition> strict_subsets_of_rho(int k);

/// Sorts the given parts (any order, zeros allowed) into a partition.
Partition sorted_partition(std::vector<int> parts);

}  // namespace isoschub

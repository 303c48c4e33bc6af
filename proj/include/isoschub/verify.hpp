#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isoschub/geometry.hpp"

namespace isoschub {

struct SuiteParams {
  /// Largest rank swept when n is not fixed.
  int max_n = 3;
  /// Weight bound for the property suites that enumerate partitions.
  int max_weight = 12;
  /// Fixed rank; 0 sweeps the suite's natural range up to max_n.
  int n = 0;
  /// Restricts geometry-dependent suites to one geometry.
  std::optional<Geometry> geometry;
};

struct SuiteReport {
  std::string id;
  /// Noun used in the summary line ("pairs", "cases", ...).
  std::string unit = "cases";
  long cases = 0;
  long passed = 0;
  /// Canonical key of the first failing case, empty if none.
  std::string first_failure;

  bool ok() const { return cases == passed; }
  /// "64/64 pairs OK" or "63/64 pairs FAILED (first: ...)".
  std::string summary() const;
};

/// Suite identifiers in canonical order; "orthogonality" is accepted as an
/// alias of "thm-5-23" but is not listed.
const std::vector<std::string>& suite_ids();

/// Runs one suite. Throws std::invalid_argument for an unknown id.
SuiteReport run_suite(const std::string& id, const SuiteParams& params = {});

/// Upper bound on polynomial degree for CLI requests, from
/// ISOSCHUB_MAX_DEGREE when set (default 40).
int max_degree_guard();

}  // namespace isoschub

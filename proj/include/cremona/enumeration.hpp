#pragma once

// Exhaustive search for monomial Cremona transformations of P^n of a fixed
// degree, up to permutation of variables and of components.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cremona/invariants.hpp"
#include "cremona/monomial_map.hpp"
#include "json.hpp"

namespace cremona {

/// All vectors of `parts` non-negative integers summing to d, lexicographic.
std::vector<std::vector<std::int64_t>> compositions(std::int64_t d, int parts);

struct SearchOptions {
  int jobs = 1;
  /// Column-zero feasibility pruning; off only for cross-checking.
  bool prune = true;
};

struct SearchResult {
  /// Matrices with sorted distinct rows that pass validity and |det| = d.
  std::uint64_t raw_count = 0;
  /// Canonical forms, ascending.
  std::vector<ExponentMatrix> classes;
};

/// Supported dimensions are n = 2, 3, 4.
SearchResult search_classes(int n, std::int64_t d, const SearchOptions& options = {});

/// Delivers every class exactly once, as its canonical form, in ascending order.
void enumerate_maps(int n, std::int64_t d, const std::function<void(const ExponentMatrix&)>& callback,
                    const SearchOptions& options = {});

/// d' bound checked for dimension n: d for n = 2, 1 + (d-1) + ... + (d-1)^(n-1) otherwise.
std::int64_t conjectured_bound(int n, std::int64_t d);

struct Violation {
  ExponentMatrix matrix;
  std::string reason;
};

struct ClassRecord {
  ExponentMatrix canonical;
  std::int64_t dprime = 0;
  /// n = 3 and d >= 2 only.
  std::optional<InvariantReport> report;
  std::optional<Violation> violation;
};

struct EnumerationSummary {
  int n = 0;
  std::int64_t d = 0;
  std::int64_t bound = 0;
  std::uint64_t raw_count = 0;
  std::uint64_t class_count = 0;
  std::vector<ExponentMatrix> extremal_classes;
  std::vector<Violation> violations;
  /// Counts for Case I..IV; populated for n = 3, d >= 2.
  std::array<std::uint64_t, 4> case_histogram{};
  std::int64_t max_dprime = 0;
  std::int64_t min_dprime = 0;
};

struct VerifyOptions {
  int jobs = 1;
  KMode kmode = KMode::Fast;
  /// Called once per class, in canonical order, after all checks.
  std::function<void(const ClassRecord&)> on_class;
};

/// Enumerates every class and checks the degree bound for it. Violations,
/// including any failed internal assertion, are collected rather than thrown.
EnumerationSummary verify_bounds(int n, std::int64_t d, const VerifyOptions& options = {});

nlohmann::ordered_json to_json(const EnumerationSummary& summary);

}  // namespace cremona

#pragma once

// Monomial rational maps of projective space, encoded by their exponent
// matrices. Row i of the matrix is the exponent vector of the i-th component.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cremona/linalg.hpp"

namespace cremona {

using RawMatrix = std::vector<std::vector<std::int64_t>>;

/// A d-stochastic non-negative square matrix with a zero in every column.
/// Instances only come out of validate() or the operations below, so the
/// invariants always hold.
class ExponentMatrix {
 public:
  /// Projective dimension; the matrix is (n+1)x(n+1).
  int n() const noexcept { return static_cast<int>(size_) - 1; }
  std::size_t size() const noexcept { return size_; }
  std::int64_t degree() const noexcept { return degree_; }

  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * size_ + c]; }
  std::span<const std::int64_t> row(std::size_t r) const {
    return {data_.data() + r * size_, size_};
  }
  const std::vector<std::int64_t>& entries() const noexcept { return data_; }

  RawMatrix rows() const;
  IntMatrix to_int_matrix() const;

  friend bool operator==(const ExponentMatrix&, const ExponentMatrix&) = default;
  friend auto operator<=>(const ExponentMatrix& a, const ExponentMatrix& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return a.data_ <=> b.data_;
  }

 private:
  friend ExponentMatrix make_exponent_matrix(std::size_t, std::vector<std::int64_t>);

  ExponentMatrix(std::size_t size, std::int64_t degree, std::vector<std::int64_t> data)
      : size_(size), degree_(degree), data_(std::move(data)) {}

  std::size_t size_;
  std::int64_t degree_;
  std::vector<std::int64_t> data_;
};

/// Builds from a flat row-major buffer, throwing unless every invariant holds.
ExponentMatrix make_exponent_matrix(std::size_t size, std::vector<std::int64_t> flat);

std::ostream& operator<<(std::ostream& os, const ExponentMatrix& e);

struct ValidateOptions {
  /// Divide out a common monomial factor instead of rejecting it.
  bool normalize = false;
};

ExponentMatrix validate(const RawMatrix& raw, ValidateOptions options = {});

bool is_birational(const ExponentMatrix& e);

/// Exponent matrix of the inverse map, normalized to have non-negative
/// entries and a zero in every column.
ExponentMatrix invert(const ExponentMatrix& e);

std::int64_t inverse_degree(const ExponentMatrix& e);

struct MultidegreeVector {
  std::vector<std::int64_t> entries;

  MultidegreeVector reversed() const { return {{entries.rbegin(), entries.rend()}}; }
  friend bool operator==(const MultidegreeVector&, const MultidegreeVector&) = default;
};

/// (1, d, d', 1). Only n = 3 is supported.
MultidegreeVector multidegrees(const ExponentMatrix& e);

/// (x0^d : x0^(d-1) x1 : ... : x_{n-1}^(d-1) x_n).
ExponentMatrix phi_nd(int n, std::int64_t d);

/// Lexicographically least matrix over all row and column permutations.
ExponentMatrix canonical_form(const ExponentMatrix& e);

bool is_extremal_class(const ExponentMatrix& e);

/// Exponent matrix of the composite map b o a, with the common monomial
/// factor removed.
ExponentMatrix compose(const ExponentMatrix& b, const ExponentMatrix& a);

/// True iff the coordinate line {x_i = x_j = 0} lies in the zero set of every
/// component, i.e. every row has a positive entry in column i or column j.
bool contains_coordinate_line(const ExponentMatrix& e, std::size_t i, std::size_t j);

/// Pairs (i, j), i < j, of coordinate lines contained in the base locus.
std::vector<std::pair<int, int>> base_lines(const ExponentMatrix& e);

enum class Case { I, II, III, IV };

std::string_view to_string(Case c);

struct CaseLabel {
  Case label;
  /// Case I: the column holding exactly one zero.
  std::optional<int> column;
  /// Cases II-IV: the base lines.
  std::vector<std::pair<int, int>> lines;

  friend bool operator==(const CaseLabel&, const CaseLabel&) = default;
};

/// Case split of the degree-bound argument for maps of P^3 with d >= 2.
/// Case I is tested before the base lines are examined; the remaining
/// cases are: two lines through a common point, two skew lines, one line.
CaseLabel classify_case(const ExponentMatrix& e);

}  // namespace cremona

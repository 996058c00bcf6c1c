#pragma once

// Sparse multivariate polynomials with exact rational coefficients.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cremona/linalg.hpp"

namespace cremona {

using Exponent = std::vector<std::uint32_t>;

/// Graded lexicographic order with x0 > x1 > ... ; ascending.
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

class SparsePoly {
 public:
  using TermMap = std::map<Exponent, Rational, GrlexLess>;

  explicit SparsePoly(std::size_t nvars);

  static SparsePoly constant(std::size_t nvars, const Rational& c);
  static SparsePoly variable(std::size_t nvars, std::size_t index);
  static SparsePoly monomial(Exponent exponent, const Rational& c = 1);

  std::size_t nvars() const noexcept { return nvars_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const TermMap& terms() const noexcept { return terms_; }

  /// Coefficient of x^e (zero if absent).
  Rational coefficient(const Exponent& e) const;

  /// Greatest term under grlex. Requires a nonzero polynomial.
  const TermMap::value_type& leading_term() const;

  /// Adds c * x^e, dropping the term if it cancels.
  void add_term(const Exponent& e, const Rational& c);

  SparsePoly& operator+=(const SparsePoly& q);
  SparsePoly& operator-=(const SparsePoly& q);
  SparsePoly& operator*=(const Rational& c);

  friend SparsePoly operator+(SparsePoly p, const SparsePoly& q) { return p += q; }
  friend SparsePoly operator-(SparsePoly p, const SparsePoly& q) { return p -= q; }
  friend SparsePoly operator-(SparsePoly p) { return p *= -1; }
  friend SparsePoly operator*(SparsePoly p, const Rational& c) { return p *= c; }
  friend SparsePoly operator*(const Rational& c, SparsePoly p) { return p *= c; }
  friend SparsePoly operator*(const SparsePoly& p, const SparsePoly& q);

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Terms in descending grlex order, e.g. "x0^2 + 2*x0*x1 - 1/2*x3".
  std::string to_string() const;

 private:
  std::size_t nvars_;
  TermMap terms_;
};

SparsePoly pow(const SparsePoly& p, unsigned k);

SparsePoly derivative(const SparsePoly& p, std::size_t var);

/// p with x_var set to zero; the variable count is unchanged.
SparsePoly restrict_zero(const SparsePoly& p, std::size_t var);

/// Componentwise minimum of the exponents, i.e. the largest monomial dividing p.
Exponent monomial_content(const SparsePoly& p);

std::uint32_t total_degree(const SparsePoly& p);
bool is_homogeneous(const SparsePoly& p);

/// Quotient p / q when q divides p exactly, nullopt otherwise.
std::optional<SparsePoly> divide_exact(const SparsePoly& p, const SparsePoly& q);

/// Scales p to integer coefficients with gcd 1 and a positive leading
/// coefficient. Zero stays zero.
SparsePoly normalize(const SparsePoly& p);

/// Normalized greatest common divisor; gcd(p, 0) = normalize(p).
SparsePoly gcd(const SparsePoly& p, const SparsePoly& q);

/// Normalized product of the distinct irreducible factors of a homogeneous p.
SparsePoly squarefree_part(const SparsePoly& p);

}  // namespace cremona

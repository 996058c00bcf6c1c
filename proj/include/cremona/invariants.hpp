#pragma once

// Geometric invariants of a monomial Cremona transformation of P^3 read off
// the surface D = V(f), where f is the sum of the map's monomials.

#include <array>
#include <cstdint>
#include <optional>
#include <utility>

#include "cremona/monomial_map.hpp"
#include "cremona/poly.hpp"
#include "json.hpp"

namespace cremona {

/// Coordinate-line pairs in the fixed order (0,1),(0,2),(0,3),(1,2),(1,3),(2,3).
inline constexpr std::array<std::pair<int, int>, 6> kLinePairs{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

using KVector = std::array<std::int64_t, 4>;
using LMatrix = std::array<std::int64_t, 6>;

struct InvariantReport {
  std::int64_t d = 0;
  std::int64_t dprime = 0;
  KVector k{};
  LMatrix l{};
  std::int64_t mu_inferred = 0;
  std::int64_t lhs = 0;  // sum k - sum l
  std::int64_t rhs = 0;  // 3d + 1
  std::int64_t bound = 0;  // d^2 - d + 1
  CaseLabel case_label{Case::I, std::nullopt, {}};
  bool extremal = false;
};

nlohmann::ordered_json to_json(const InvariantReport& report);

/// Sum of the monomials x^{a_i}, each with coefficient 1.
SparsePoly build_f(const ExponentMatrix& e);

/// (x_i * df/dx_i) for i = 0..3.
std::array<SparsePoly, 4> toric_polar(const SparsePoly& f);

/// C[i][j] = coefficient of x^{a_j} in the i-th toric polar component.
/// Rows of e must be pairwise distinct (always true for birational maps).
IntMatrix linear_system_matrix(const ExponentMatrix& e);

enum class KMode {
  Fast,     // combinatorial count on the surviving monomials
  Oracle,   // squarefree part of the restricted polynomial
  Checked,  // both, throwing InternalDisagreement when they differ
};

/// k_i = degree of the reduced curve cut by f on the plane x_i = 0.
KVector k_vector(const ExponentMatrix& e, KMode mode = KMode::Fast);

/// l_{ij} = 1 iff V(f) contains the coordinate line x_i = x_j = 0.
LMatrix l_matrix(const ExponentMatrix& e);

/// Milnor number sum of a general plane section, obtained by solving the
/// degree formula d' = d^2 - 4d - mu + sum k - sum l for mu.
std::int64_t mu_inferred(const ExponentMatrix& e, KMode mode = KMode::Fast);

std::int64_t d_prime_from_geometry(std::int64_t d, std::int64_t mu, const KVector& k,
                                   const LMatrix& l);

/// Full report; throws BoundViolation if sum k - sum l > 3d + 1 or
/// d' > d^2 - d + 1.
InvariantReport johnson_check(const ExponentMatrix& e, KMode mode = KMode::Fast);

}  // namespace cremona

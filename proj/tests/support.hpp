#pragma once

// Test-only oracles and generators. Nothing here calls the code paths it is
// used to check: determinants are cofactor expansions, canonical forms try
// every row/column permutation pair, and the enumeration oracle walks the
// full ordered product of rows without pruning.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "cremona/linalg.hpp"
#include "cremona/monomial_map.hpp"

namespace cremona::test {

/// Seed for randomized tests; set with --seed on the test binary.
std::uint64_t seed();
void set_seed(std::uint64_t value);

/// Strips --seed N / --seed=N from argv, returning the remaining arguments.
std::vector<char*> consume_seed_flag(int argc, char** argv);

std::mt19937_64 make_rng(std::uint64_t salt = 0);

Integer cofactor_determinant(const IntMatrix& m);

IntMatrix to_int(const RawMatrix& rows);

RawMatrix brute_canonical(const RawMatrix& rows);

/// Canonical classes of birational normalized matrices for (n, d) by brute force.
std::set<RawMatrix> brute_force_classes(int n, std::int64_t d);

/// Uniform over ordered row tuples, rejecting until valid and birational.
ExponentMatrix random_birational(std::mt19937_64& rng, int n, std::int64_t d);

RawMatrix random_permutation_of(const RawMatrix& rows, std::mt19937_64& rng);

IntMatrix random_int_matrix(std::mt19937_64& rng, std::size_t size, int lo, int hi);

}  // namespace cremona::test

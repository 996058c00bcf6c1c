#include "support.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <string>

#include "cremona/error.hpp"

namespace cremona::test {

namespace {

std::uint64_t g_seed = 20261019;

std::vector<std::vector<std::int64_t>> all_rows(std::int64_t d, std::size_t parts) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> v(parts, 0);
  // Odometer over [0, d]^parts filtered by sum; small inputs only.
  for (;;) {
    if (std::accumulate(v.begin(), v.end(), std::int64_t{0}) == d) out.push_back(v);
    std::size_t i = 0;
    while (i < parts && v[i] == d) v[i++] = 0;
    if (i == parts) break;
    ++v[i];
  }
  return out;
}

bool columns_have_zero(const RawMatrix& rows) {
  for (std::size_t c = 0; c < rows.size(); ++c) {
    bool zero = false;
    for (const auto& row : rows) zero |= row[c] == 0;
    if (!zero) return false;
  }
  return true;
}

}  // namespace

std::uint64_t seed() { return g_seed; }
void set_seed(std::uint64_t value) { g_seed = value; }

std::vector<char*> consume_seed_flag(int argc, char** argv) {
  std::vector<char*> rest;
  for (int i = 0; i < argc; ++i) {
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      set_seed(std::stoull(argv[++i]));
    } else if (std::strncmp(argv[i], "--seed=", 7) == 0) {
      set_seed(std::stoull(argv[i] + 7));
    } else {
      rest.push_back(argv[i]);
    }
  }
  return rest;
}

std::mt19937_64 make_rng(std::uint64_t salt) { return std::mt19937_64(g_seed ^ (salt * 0x9E3779B97F4A7C15ull)); }

Integer cofactor_determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 1) return m(0, 0);
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    IntMatrix minor(n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t cc = 0, k = 0; cc < n; ++cc)
        if (cc != c) minor(r - 1, k++) = m(r, cc);
    const Integer term = m(0, c) * cofactor_determinant(minor);
    if (c % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

IntMatrix to_int(const RawMatrix& rows) {
  IntMatrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = static_cast<long>(rows[r][c]);
  return m;
}

RawMatrix brute_canonical(const RawMatrix& rows) {
  const std::size_t n = rows.size();
  std::vector<std::size_t> rp(n), cp(n);
  std::iota(rp.begin(), rp.end(), 0);
  RawMatrix best;
  do {
    std::iota(cp.begin(), cp.end(), 0);
    do {
      RawMatrix cand(n, std::vector<std::int64_t>(n));
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) cand[r][c] = rows[rp[r]][cp[c]];
      if (best.empty() || cand < best) best = cand;
    } while (std::next_permutation(cp.begin(), cp.end()));
  } while (std::next_permutation(rp.begin(), rp.end()));
  return best;
}

std::set<RawMatrix> brute_force_classes(int n, std::int64_t d) {
  const std::size_t size = static_cast<std::size_t>(n) + 1;
  const auto rows = all_rows(d, size);
  std::set<RawMatrix> classes;
  std::vector<std::size_t> idx(size, 0);
  for (;;) {
    RawMatrix m(size);
    for (std::size_t r = 0; r < size; ++r) m[r] = rows[idx[r]];
    if (columns_have_zero(m) && abs(cofactor_determinant(to_int(m))) == d) classes.insert(brute_canonical(m));
    std::size_t i = 0;
    while (i < size && idx[i] + 1 == rows.size()) idx[i++] = 0;
    if (i == size) break;
    ++idx[i];
  }
  return classes;
}

ExponentMatrix random_birational(std::mt19937_64& rng, int n, std::int64_t d) {
  const std::size_t size = static_cast<std::size_t>(n) + 1;
  const auto rows = all_rows(d, size);
  std::uniform_int_distribution<std::size_t> pick(0, rows.size() - 1);
  for (;;) {
    RawMatrix m(size);
    for (auto& row : m) row = rows[pick(rng)];
    if (!columns_have_zero(m)) continue;
    if (abs(cofactor_determinant(to_int(m))) != d) continue;
    return validate(m);
  }
}

RawMatrix random_permutation_of(const RawMatrix& rows, std::mt19937_64& rng) {
  const std::size_t n = rows.size();
  std::vector<std::size_t> rp(n), cp(n);
  std::iota(rp.begin(), rp.end(), 0);
  std::iota(cp.begin(), cp.end(), 0);
  std::shuffle(rp.begin(), rp.end(), rng);
  std::shuffle(cp.begin(), cp.end(), rng);
  RawMatrix out(n, std::vector<std::int64_t>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out[r][c] = rows[rp[r]][cp[c]];
  return out;
}

IntMatrix random_int_matrix(std::mt19937_64& rng, std::size_t size, int lo, int hi) {
  std::uniform_int_distribution<int> entry(lo, hi);
  IntMatrix m(size);
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = 0; c < size; ++c) m(r, c) = entry(rng);
  return m;
}

}  // namespace cremona::test

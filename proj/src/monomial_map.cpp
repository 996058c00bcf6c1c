#include "cremona/monomial_map.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cremona/error.hpp"

namespace cremona {

namespace {

std::string describe(std::size_t size, const std::vector<std::int64_t>& flat) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < size; ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < size; ++c) os << (c ? "," : "") << flat[r * size + c];
    os << ']';
  }
  os << ']';
  return os.str();
}

std::int64_t to_int64(const Integer& v, const char* what) {
  if (!v.fits_slong_p()) fail(ErrorKind::Malformed, std::string(what) + " exceeds 64-bit range");
  return v.get_si();
}

std::vector<std::int64_t> column_minima(std::size_t size, const std::vector<std::int64_t>& flat) {
  std::vector<std::int64_t> mins(flat.begin(), flat.begin() + static_cast<std::ptrdiff_t>(size));
  for (std::size_t r = 1; r < size; ++r)
    for (std::size_t c = 0; c < size; ++c) mins[c] = std::min(mins[c], flat[r * size + c]);
  return mins;
}

// Subtracts column minima in place; returns true if anything changed.
bool strip_common_factor(std::size_t size, std::vector<std::int64_t>& flat) {
  const auto mins = column_minima(size, flat);
  bool changed = false;
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = 0; c < size; ++c) {
      flat[r * size + c] -= mins[c];
      changed |= mins[c] != 0;
    }
  return changed;
}

}  // namespace

ExponentMatrix make_exponent_matrix(std::size_t size, std::vector<std::int64_t> flat) {
  if (size < 3) fail(ErrorKind::Malformed, "matrix size must be at least 3");
  if (flat.size() != size * size) fail(ErrorKind::Malformed, "matrix is not square");
  if (std::any_of(flat.begin(), flat.end(), [](std::int64_t v) { return v < 0; }))
    fail(ErrorKind::Malformed, "negative exponent in " + describe(size, flat));

  const auto row_sum = [&](std::size_t r) {
    return std::accumulate(flat.begin() + static_cast<std::ptrdiff_t>(r * size),
                           flat.begin() + static_cast<std::ptrdiff_t>((r + 1) * size),
                           std::int64_t{0});
  };
  const std::int64_t d = row_sum(0);
  for (std::size_t r = 1; r < size; ++r)
    if (row_sum(r) != d) fail(ErrorKind::NotStochastic, "row sums differ in " + describe(size, flat));
  if (d == 0) fail(ErrorKind::DegreeZero, "all components are constant");

  const auto mins = column_minima(size, flat);
  for (std::size_t c = 0; c < size; ++c)
    if (mins[c] > 0)
      fail(ErrorKind::CommonFactor,
           "column " + std::to_string(c) + " has no zero in " + describe(size, flat));
  return ExponentMatrix(size, d, std::move(flat));
}

RawMatrix ExponentMatrix::rows() const {
  RawMatrix out(size_);
  for (std::size_t r = 0; r < size_; ++r) out[r].assign(row(r).begin(), row(r).end());
  return out;
}

IntMatrix ExponentMatrix::to_int_matrix() const {
  IntMatrix m(size_);
  for (std::size_t r = 0; r < size_; ++r)
    for (std::size_t c = 0; c < size_; ++c) m(r, c) = static_cast<long>((*this)(r, c));
  return m;
}

std::ostream& operator<<(std::ostream& os, const ExponentMatrix& e) {
  return os << describe(e.size(), e.entries());
}

ExponentMatrix validate(const RawMatrix& raw, ValidateOptions options) {
  const std::size_t size = raw.size();
  if (size < 3) fail(ErrorKind::Malformed, "need at least 3 rows, got " + std::to_string(size));
  std::vector<std::int64_t> flat;
  flat.reserve(size * size);
  for (std::size_t r = 0; r < size; ++r) {
    if (raw[r].size() != size)
      fail(ErrorKind::Malformed, "row " + std::to_string(r) + " has " +
                                     std::to_string(raw[r].size()) + " entries, expected " +
                                     std::to_string(size));
    flat.insert(flat.end(), raw[r].begin(), raw[r].end());
  }
  if (std::any_of(flat.begin(), flat.end(), [](std::int64_t v) { return v < 0; }))
    fail(ErrorKind::Malformed, "exponents must be non-negative");

  if (options.normalize) {
    // Row sums are checked first so a ragged-degree input reports NotStochastic.
    for (std::size_t r = 1; r < size; ++r) {
      const auto sum = [&](std::size_t i) {
        return std::accumulate(raw[i].begin(), raw[i].end(), std::int64_t{0});
      };
      if (sum(r) != sum(0)) fail(ErrorKind::NotStochastic, "row sums differ in " + describe(size, flat));
    }
    strip_common_factor(size, flat);
  }
  return make_exponent_matrix(size, std::move(flat));
}

bool is_birational(const ExponentMatrix& e) {
  return abs(determinant(e.to_int_matrix())) == e.degree();
}

ExponentMatrix invert(const ExponentMatrix& e) {
  const IntMatrix a = e.to_int_matrix();
  const Integer det = determinant(a);
  if (abs(det) != e.degree())
    fail(ErrorKind::NotBirational, "|det| = " + Integer(abs(det)).get_str() + " but d = " +
                                       std::to_string(e.degree()));

  const RatMatrix inv = rational_inverse(a);
  const std::size_t n = e.size();
  std::vector<std::int64_t> flat(n * n);
  for (std::size_t c = 0; c < n; ++c) {
    Rational lowest = inv(0, c);
    for (std::size_t r = 1; r < n; ++r) lowest = std::min(lowest, inv(r, c));
    for (std::size_t r = 0; r < n; ++r) {
      const Rational shifted = inv(r, c) - lowest;
      if (shifted.get_den() != 1)
        fail(ErrorKind::IntegralityFailure,
             "normalized inverse is not integral for " + describe(n, e.entries()));
      flat[r * n + c] = to_int64(shifted.get_num(), "inverse exponent");
    }
  }
  try {
    return make_exponent_matrix(n, std::move(flat));
  } catch (const Error& err) {
    fail(ErrorKind::IntegralityFailure,
         "normalized inverse is malformed (" + std::string(err.what()) + ")");
  }
}

std::int64_t inverse_degree(const ExponentMatrix& e) { return invert(e).degree(); }

MultidegreeVector multidegrees(const ExponentMatrix& e) {
  if (e.n() != 3)
    fail(ErrorKind::UnsupportedDimension,
         "multidegrees are only available for n = 3, got n = " + std::to_string(e.n()));
  return {{1, e.degree(), inverse_degree(e), 1}};
}

ExponentMatrix phi_nd(int n, std::int64_t d) {
  if (n < 2) fail(ErrorKind::UnsupportedDimension, "phi_nd needs n >= 2");
  if (d < 1) fail(ErrorKind::DegreeZero, "phi_nd needs d >= 1");
  const std::size_t size = static_cast<std::size_t>(n) + 1;
  std::vector<std::int64_t> flat(size * size, 0);
  flat[0] = d;
  for (std::size_t i = 1; i < size; ++i) {
    flat[i * size + i - 1] = d - 1;
    flat[i * size + i] = 1;
  }
  return make_exponent_matrix(size, std::move(flat));
}

ExponentMatrix canonical_form(const ExponentMatrix& e) {
  // For a fixed column order the least row order is the sorted one, so only
  // column permutations need to be enumerated.
  const std::size_t n = e.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n));
  std::vector<std::int64_t> best, candidate(n * n);
  do {
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) rows[r][c] = e(r, perm[c]);
    std::sort(rows.begin(), rows.end());
    for (std::size_t r = 0; r < n; ++r) std::copy(rows[r].begin(), rows[r].end(), candidate.begin() + static_cast<std::ptrdiff_t>(r * n));
    if (best.empty() || candidate < best) best = candidate;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return make_exponent_matrix(n, std::move(best));
}

bool is_extremal_class(const ExponentMatrix& e) {
  return canonical_form(e) == canonical_form(phi_nd(e.n(), e.degree()));
}

ExponentMatrix compose(const ExponentMatrix& b, const ExponentMatrix& a) {
  if (a.size() != b.size()) fail(ErrorKind::ArityMismatch, "cannot compose maps of different dimension");
  const IntMatrix product = b.to_int_matrix() * a.to_int_matrix();
  const std::size_t n = a.size();
  std::vector<std::int64_t> flat(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) flat[r * n + c] = to_int64(product(r, c), "composed exponent");
  strip_common_factor(n, flat);
  return make_exponent_matrix(n, std::move(flat));
}

bool contains_coordinate_line(const ExponentMatrix& e, std::size_t i, std::size_t j) {
  for (std::size_t r = 0; r < e.size(); ++r)
    if (e(r, i) == 0 && e(r, j) == 0) return false;
  return true;
}

std::vector<std::pair<int, int>> base_lines(const ExponentMatrix& e) {
  std::vector<std::pair<int, int>> lines;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j)
      if (contains_coordinate_line(e, i, j)) lines.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return lines;
}

std::string_view to_string(Case c) {
  switch (c) {
    case Case::I: return "CaseI";
    case Case::II: return "CaseII";
    case Case::III: return "CaseIII";
    case Case::IV: return "CaseIV";
  }
  return "?";
}

CaseLabel classify_case(const ExponentMatrix& e) {
  if (e.n() != 3) fail(ErrorKind::UnsupportedDimension, "case analysis needs n = 3");
  if (e.degree() < 2) fail(ErrorKind::UnsupportedDegree, "case analysis needs d >= 2");
  if (!is_birational(e)) fail(ErrorKind::NotBirational, "case analysis needs a birational map");

  for (std::size_t c = 0; c < e.size(); ++c) {
    int zeros = 0;
    for (std::size_t r = 0; r < e.size(); ++r) zeros += e(r, c) == 0;
    if (zeros == 1) return {Case::I, static_cast<int>(c), {}};
  }

  auto lines = base_lines(e);
  if (lines.empty())
    fail(ErrorKind::EmptyBaseLocus, "no coordinate line in the base locus of " + describe(e.size(), e.entries()));
  for (std::size_t p = 0; p < lines.size(); ++p)
    for (std::size_t q = p + 1; q < lines.size(); ++q) {
      const auto [a, b] = lines[p];
      const auto [c, d] = lines[q];
      if (a == c || a == d || b == c || b == d) return {Case::II, std::nullopt, std::move(lines)};
    }
  if (lines.size() >= 2) return {Case::III, std::nullopt, std::move(lines)};
  return {Case::IV, std::nullopt, std::move(lines)};
}

}  // namespace cremona

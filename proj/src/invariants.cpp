#include "cremona/invariants.hpp"

#include <numeric>
#include <sstream>

#include "cremona/error.hpp"

namespace cremona {

namespace {

void require_p3(const ExponentMatrix& e, const char* what) {
  if (e.n() != 3)
    fail(ErrorKind::UnsupportedDimension,
         std::string(what) + " needs n = 3, got n = " + std::to_string(e.n()));
}

void require_birational_p3(const ExponentMatrix& e, const char* what) {
  require_p3(e, what);
  if (!is_birational(e)) fail(ErrorKind::NotBirational, std::string(what) + " needs a birational map");
}

std::string matrix_text(const ExponentMatrix& e) {
  std::ostringstream os;
  os << e;
  return os.str();
}

// Surviving monomials on x_i = 0 are pairwise distinct with coefficient 1
// (equal restricted rows would be equal rows of an invertible matrix). After
// removing their monomial content x^m the remaining factor has at most three
// terms and trivial content; it is then reduced, so the reduced curve is the
// union of one line per variable dividing x^m and that factor's curve.
std::int64_t k_fast(const ExponentMatrix& e, std::size_t i) {
  const std::size_t n = e.size();
  std::vector<std::int64_t> m;
  for (std::size_t r = 0; r < n; ++r) {
    if (e(r, i) != 0) continue;
    if (m.empty()) {
      m.assign(e.row(r).begin(), e.row(r).end());
    } else {
      for (std::size_t c = 0; c < n; ++c) m[c] = std::min(m[c], e(r, c));
    }
  }
  const auto lines = std::count_if(m.begin(), m.end(), [](std::int64_t v) { return v > 0; });
  return lines + (e.degree() - std::accumulate(m.begin(), m.end(), std::int64_t{0}));
}

std::int64_t k_oracle(const SparsePoly& f, std::size_t i) {
  const SparsePoly restricted = restrict_zero(f, i);
  return total_degree(squarefree_part(restricted));
}

}  // namespace

SparsePoly build_f(const ExponentMatrix& e) {
  SparsePoly f(e.size());
  for (std::size_t r = 0; r < e.size(); ++r) {
    Exponent ex(e.size());
    for (std::size_t c = 0; c < e.size(); ++c) ex[c] = static_cast<std::uint32_t>(e(r, c));
    f.add_term(ex, 1);
  }
  return f;
}

std::array<SparsePoly, 4> toric_polar(const SparsePoly& f) {
  if (f.nvars() != 4)
    fail(ErrorKind::ArityMismatch, "toric polar map expects 4 variables, got " + std::to_string(f.nvars()));
  auto component = [&](std::size_t i) { return SparsePoly::variable(4, i) * derivative(f, i); };
  return {component(0), component(1), component(2), component(3)};
}

IntMatrix linear_system_matrix(const ExponentMatrix& e) {
  require_p3(e, "linear_system_matrix");
  for (std::size_t a = 0; a < e.size(); ++a)
    for (std::size_t b = a + 1; b < e.size(); ++b)
      if (std::equal(e.row(a).begin(), e.row(a).end(), e.row(b).begin()))
        fail(ErrorKind::Malformed, "linear_system_matrix needs pairwise distinct rows");

  const auto polar = toric_polar(build_f(e));
  IntMatrix c(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      Exponent ex(4);
      for (std::size_t v = 0; v < 4; ++v) ex[v] = static_cast<std::uint32_t>(e(j, v));
      const Rational coeff = polar[i].coefficient(ex);
      c(i, j) = coeff.get_num();
    }
  return c;
}

KVector k_vector(const ExponentMatrix& e, KMode mode) {
  require_birational_p3(e, "k_vector");
  KVector fast{}, oracle{};
  if (mode != KMode::Oracle)
    for (std::size_t i = 0; i < 4; ++i) fast[i] = k_fast(e, i);
  if (mode != KMode::Fast) {
    const SparsePoly f = build_f(e);
    for (std::size_t i = 0; i < 4; ++i) oracle[i] = k_oracle(f, i);
  }
  switch (mode) {
    case KMode::Fast: return fast;
    case KMode::Oracle: return oracle;
    case KMode::Checked:
      if (fast != oracle)
        fail(ErrorKind::InternalDisagreement, "combinatorial and polynomial k_i differ for " + matrix_text(e));
      return fast;
  }
  return fast;
}

LMatrix l_matrix(const ExponentMatrix& e) {
  require_p3(e, "l_matrix");
  LMatrix l{};
  for (std::size_t p = 0; p < kLinePairs.size(); ++p) {
    const auto [i, j] = kLinePairs[p];
    l[p] = contains_coordinate_line(e, static_cast<std::size_t>(i), static_cast<std::size_t>(j)) ? 1 : 0;
  }
  return l;
}

std::int64_t d_prime_from_geometry(std::int64_t d, std::int64_t mu, const KVector& k,
                                   const LMatrix& l) {
  const auto sum_k = std::accumulate(k.begin(), k.end(), std::int64_t{0});
  const auto sum_l = std::accumulate(l.begin(), l.end(), std::int64_t{0});
  return d * d - 4 * d - mu + sum_k - sum_l;
}

namespace {

std::int64_t mu_from(const ExponentMatrix& e, std::int64_t dprime, const KVector& k, const LMatrix& l) {
  // d_prime_from_geometry is affine in mu with slope -1.
  const std::int64_t mu = d_prime_from_geometry(e.degree(), 0, k, l) - dprime;
  if (mu < 0)
    fail(ErrorKind::NegativeMilnorSum, "inferred Milnor sum " + std::to_string(mu) + " for " + matrix_text(e));
  return mu;
}

void require_degree_two(const ExponentMatrix& e, const char* what) {
  if (e.degree() < 2) fail(ErrorKind::UnsupportedDegree, std::string(what) + " needs d >= 2");
}

}  // namespace

std::int64_t mu_inferred(const ExponentMatrix& e, KMode mode) {
  require_birational_p3(e, "mu_inferred");
  require_degree_two(e, "mu_inferred");
  return mu_from(e, inverse_degree(e), k_vector(e, mode), l_matrix(e));
}

InvariantReport johnson_check(const ExponentMatrix& e, KMode mode) {
  require_birational_p3(e, "johnson_check");
  require_degree_two(e, "johnson_check");

  InvariantReport r;
  r.d = e.degree();
  r.dprime = inverse_degree(e);
  r.k = k_vector(e, mode);
  r.l = l_matrix(e);
  r.mu_inferred = mu_from(e, r.dprime, r.k, r.l);
  r.lhs = std::accumulate(r.k.begin(), r.k.end(), std::int64_t{0}) -
          std::accumulate(r.l.begin(), r.l.end(), std::int64_t{0});
  r.rhs = 3 * r.d + 1;
  r.bound = r.d * r.d - r.d + 1;
  r.case_label = classify_case(e);
  r.extremal = is_extremal_class(e);

  if (r.lhs > r.rhs || r.dprime > r.bound)
    fail(ErrorKind::BoundViolation, "sum k - sum l = " + std::to_string(r.lhs) + ", d' = " +
                                        std::to_string(r.dprime) + " for " + matrix_text(e));
  return r;
}

nlohmann::ordered_json to_json(const InvariantReport& r) {
  nlohmann::ordered_json j;
  j["d"] = r.d;
  j["dprime"] = r.dprime;
  j["k"] = r.k;
  j["l"] = r.l;
  j["mu_inferred"] = r.mu_inferred;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["bound"] = r.bound;
  j["case"] = to_string(r.case_label.label);
  nlohmann::ordered_json witness = nlohmann::ordered_json::object();
  if (r.case_label.column) witness["column"] = *r.case_label.column;
  if (!r.case_label.lines.empty()) {
    witness["lines"] = nlohmann::ordered_json::array();
    for (const auto& [a, b] : r.case_label.lines) witness["lines"].push_back({a, b});
  }
  j["case_witness"] = witness;
  j["extremal"] = r.extremal;
  return j;
}

}  // namespace cremona

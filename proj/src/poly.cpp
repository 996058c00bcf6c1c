#include "cremona/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "cremona/error.hpp"

namespace cremona {

namespace {

std::uint32_t degree_of(const Exponent& e) {
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

void require_same_arity(const SparsePoly& p, const SparsePoly& q) {
  if (p.nvars() != q.nvars())
    fail(ErrorKind::ArityMismatch, "polynomials in " + std::to_string(p.nvars()) + " and " +
                                       std::to_string(q.nvars()) + " variables");
}

void require_index(const SparsePoly& p, std::size_t var) {
  if (var >= p.nvars())
    fail(ErrorKind::IndexOutOfRange, "variable " + std::to_string(var) + " of " +
                                         std::to_string(p.nvars()));
}

// --- Univariate view: p as a polynomial in x_v over Q[other variables]. ---

int highest_variable(const SparsePoly& p) {
  int v = -1;
  for (const auto& [e, c] : p.terms())
    for (int i = static_cast<int>(e.size()) - 1; i > v; --i)
      if (e[static_cast<std::size_t>(i)] != 0) {
        v = i;
        break;
      }
  return v;
}

std::uint32_t degree_in(const SparsePoly& p, std::size_t v) {
  std::uint32_t deg = 0;
  for (const auto& [e, c] : p.terms()) deg = std::max(deg, e[v]);
  return deg;
}

SparsePoly coefficient_in(const SparsePoly& p, std::size_t v, std::uint32_t k) {
  SparsePoly out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (e[v] != k) continue;
    Exponent stripped = e;
    stripped[v] = 0;
    out.add_term(stripped, c);
  }
  return out;
}

SparsePoly leading_coefficient_in(const SparsePoly& p, std::size_t v) {
  return coefficient_in(p, v, degree_in(p, v));
}

SparsePoly shift(const SparsePoly& p, std::size_t v, std::uint32_t k) {
  SparsePoly out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    Exponent moved = e;
    moved[v] += k;
    out.add_term(moved, c);
  }
  return out;
}

SparsePoly exact_quotient(const SparsePoly& p, const SparsePoly& q) {
  auto quotient = divide_exact(p, q);
  if (!quotient)
    fail(ErrorKind::InternalDisagreement,
         "expected exact division of " + p.to_string() + " by " + q.to_string());
  return std::move(*quotient);
}

SparsePoly content_in(const SparsePoly& p, std::size_t v) {
  SparsePoly g(p.nvars());
  for (std::uint32_t k = 0, top = degree_in(p, v); k <= top; ++k) {
    SparsePoly c = coefficient_in(p, v, k);
    if (!c.is_zero()) g = gcd(g, c);
  }
  return g;
}

SparsePoly primitive_part_in(const SparsePoly& p, std::size_t v) {
  return exact_quotient(p, content_in(p, v));
}

// lc(b)^(deg a - deg b + 1) * a mod b, computed without fractions in x_v.
SparsePoly pseudo_remainder(const SparsePoly& a, const SparsePoly& b, std::size_t v) {
  const std::uint32_t db = degree_in(b, v);
  const SparsePoly lcb = leading_coefficient_in(b, v);
  SparsePoly r = a;
  int pending = static_cast<int>(degree_in(a, v)) - static_cast<int>(db) + 1;
  while (!r.is_zero() && degree_in(r, v) >= db) {
    const std::uint32_t dr = degree_in(r, v);
    r = lcb * r - leading_coefficient_in(r, v) * shift(b, v, dr - db);
    --pending;
  }
  for (; pending > 0; --pending) r = lcb * r;
  return r;
}

SparsePoly one(std::size_t nvars) { return SparsePoly::constant(nvars, 1); }

}  // namespace

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
  const auto da = degree_of(a), db = degree_of(b);
  if (da != db) return da < db;
  return a < b;
}

SparsePoly::SparsePoly(std::size_t nvars) : nvars_(nvars) {
  if (nvars == 0) fail(ErrorKind::Malformed, "polynomial needs at least one variable");
}

SparsePoly SparsePoly::constant(std::size_t nvars, const Rational& c) {
  SparsePoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

SparsePoly SparsePoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) fail(ErrorKind::IndexOutOfRange, "variable index out of range");
  Exponent e(nvars, 0);
  e[index] = 1;
  return monomial(std::move(e));
}

SparsePoly SparsePoly::monomial(Exponent exponent, const Rational& c) {
  SparsePoly p(exponent.size());
  p.add_term(exponent, c);
  return p;
}

Rational SparsePoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

const SparsePoly::TermMap::value_type& SparsePoly::leading_term() const {
  if (terms_.empty()) fail(ErrorKind::ZeroPolynomial, "zero polynomial has no leading term");
  return *terms_.rbegin();
}

void SparsePoly::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != nvars_) fail(ErrorKind::ArityMismatch, "exponent length differs from variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& q) {
  require_same_arity(*this, q);
  for (const auto& [e, c] : q.terms_) add_term(e, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& q) {
  require_same_arity(*this, q);
  for (const auto& [e, c] : q.terms_) add_term(e, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

SparsePoly operator*(const SparsePoly& p, const SparsePoly& q) {
  require_same_arity(p, q);
  SparsePoly out(p.nvars());
  Exponent e(p.nvars());
  for (const auto& [ep, cp] : p.terms())
    for (const auto& [eq, cq] : q.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ep[i] + eq[i];
      out.add_term(e, cp * cq);
    }
  return out;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const Rational magnitude = abs(c);
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;

    const bool is_constant = degree_of(e) == 0;
    bool need_star = false;
    if (magnitude != 1 || is_constant) {
      os << magnitude.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << (need_star ? "*" : "") << 'x' << i;
      if (e[i] > 1) os << '^' << e[i];
      need_star = true;
    }
  }
  return os.str();
}

SparsePoly pow(const SparsePoly& p, unsigned k) {
  SparsePoly out = one(p.nvars());
  for (unsigned i = 0; i < k; ++i) out = out * p;
  return out;
}

SparsePoly derivative(const SparsePoly& p, std::size_t var) {
  require_index(p, var);
  SparsePoly out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    Exponent lowered = e;
    --lowered[var];
    out.add_term(lowered, c * e[var]);
  }
  return out;
}

SparsePoly restrict_zero(const SparsePoly& p, std::size_t var) {
  require_index(p, var);
  SparsePoly out(p.nvars());
  for (const auto& [e, c] : p.terms())
    if (e[var] == 0) out.add_term(e, c);
  return out;
}

Exponent monomial_content(const SparsePoly& p) {
  if (p.is_zero()) fail(ErrorKind::ZeroPolynomial, "monomial content of zero");
  Exponent m = p.terms().begin()->first;
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

std::uint32_t total_degree(const SparsePoly& p) {
  if (p.is_zero()) fail(ErrorKind::ZeroPolynomial, "total degree of zero");
  return degree_of(p.leading_term().first);
}

bool is_homogeneous(const SparsePoly& p) {
  if (p.is_zero()) fail(ErrorKind::ZeroPolynomial, "homogeneity of zero");
  const auto deg = total_degree(p);
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [&](const auto& term) { return degree_of(term.first) == deg; });
}

std::optional<SparsePoly> divide_exact(const SparsePoly& p, const SparsePoly& q) {
  require_same_arity(p, q);
  if (q.is_zero()) fail(ErrorKind::ZeroPolynomial, "division by zero polynomial");
  // If q | r then lt(q) | lt(r), so a leading term that does not divide
  // proves inexactness.
  const auto& [lq, lc] = q.leading_term();
  SparsePoly quotient(p.nvars());
  SparsePoly r = p;
  Exponent step(p.nvars());
  while (!r.is_zero()) {
    const auto& [lr, rc] = r.leading_term();
    for (std::size_t i = 0; i < step.size(); ++i) {
      if (lr[i] < lq[i]) return std::nullopt;
      step[i] = lr[i] - lq[i];
    }
    const Rational factor = rc / lc;
    quotient.add_term(step, factor);
    r -= SparsePoly::monomial(step, factor) * q;
  }
  return quotient;
}

SparsePoly normalize(const SparsePoly& p) {
  if (p.is_zero()) return p;
  Integer den_lcm = 1, num_gcd = 0;
  for (const auto& [e, c] : p.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (p.leading_term().second < 0) scale = -scale;
  return p * scale;
}

SparsePoly gcd(const SparsePoly& p, const SparsePoly& q) {
  require_same_arity(p, q);
  if (p.is_zero() && q.is_zero()) fail(ErrorKind::ZeroPolynomial, "gcd(0, 0)");
  if (p.is_zero()) return normalize(q);
  if (q.is_zero()) return normalize(p);

  const int top = std::max(highest_variable(p), highest_variable(q));
  if (top < 0) return one(p.nvars());
  const auto v = static_cast<std::size_t>(top);

  // Recursion strictly lowers the highest variable involved.
  if (degree_in(p, v) == 0) return gcd(p, content_in(q, v));
  if (degree_in(q, v) == 0) return gcd(content_in(p, v), q);

  const SparsePoly cp = content_in(p, v);
  const SparsePoly cq = content_in(q, v);
  const SparsePoly content = gcd(cp, cq);
  SparsePoly a = exact_quotient(p, cp);
  SparsePoly b = exact_quotient(q, cq);
  if (degree_in(a, v) < degree_in(b, v)) std::swap(a, b);

  // Subresultant remainder sequence.
  SparsePoly g = one(p.nvars());
  SparsePoly h = one(p.nvars());
  for (;;) {
    const std::uint32_t delta = degree_in(a, v) - degree_in(b, v);
    SparsePoly r = pseudo_remainder(a, b, v);
    if (r.is_zero()) return normalize(content * primitive_part_in(b, v));
    if (degree_in(r, v) == 0) return normalize(content);
    a = std::move(b);
    b = exact_quotient(r, g * pow(h, delta));
    g = leading_coefficient_in(a, v);
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = exact_quotient(pow(g, delta), pow(h, delta - 1));
    }
  }
}

SparsePoly squarefree_part(const SparsePoly& p) {
  if (p.is_zero()) fail(ErrorKind::ZeroPolynomial, "squarefree part of zero");
  if (!is_homogeneous(p)) fail(ErrorKind::NotHomogeneous, p.to_string());
  // For homogeneous p in characteristic zero, Euler's relation makes
  // gcd(p, all partials) = prod f_i^(e_i - 1).
  SparsePoly g = p;
  for (std::size_t i = 0; i < p.nvars(); ++i) g = gcd(g, derivative(p, i));
  return normalize(exact_quotient(p, g));
}

}  // namespace cremona

#include "cremona/enumeration.hpp"
#include "cremona/error.hpp"
#include "cremona/monomial_map.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cremona;

namespace {

const RawMatrix kA2{{2, 0, 0, 0}, {1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}};
const RawMatrix kPlanar{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
const RawMatrix kCaseI{{0, 1, 1, 0}, {1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}};
const RawMatrix kCaseII{{3, 0, 0, 0}, {2, 1, 0, 0}, {0, 1, 1, 1}, {0, 0, 2, 1}};
const RawMatrix kCaseIII{{1, 0, 4, 0}, {2, 3, 0, 0}, {0, 0, 3, 2}, {0, 2, 0, 3}};

RawMatrix identity_rows(std::size_t n) {
  RawMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Malformed;
}

// B*A, rows of the composite before removing the common factor.
RawMatrix product(const ExponentMatrix& b, const ExponentMatrix& a) {
  const std::size_t n = a.size();
  RawMatrix p(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t c = 0; c < n; ++c) p[r][c] += b(r, k) * a(k, c);
  return p;
}

}  // namespace

TEST_CASE("validate") {
  const ExponentMatrix a2 = validate(kA2);
  CHECK(a2.n() == 3);
  CHECK(a2.degree() == 2);

  CHECK(kind_of([] { validate({{2, 0, 0, 0}, {1, 2, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}}); }) ==
        ErrorKind::NotStochastic);

  const RawMatrix factored{{3, 1, 0}, {2, 2, 0}, {1, 3, 0}};
  CHECK(kind_of([&] { validate(factored); }) == ErrorKind::CommonFactor);
  const ExponentMatrix stripped = validate(factored, {.normalize = true});
  CHECK(stripped.rows() == RawMatrix{{2, 0, 0}, {1, 1, 0}, {0, 2, 0}});
  CHECK(stripped.degree() == 2);
  CHECK(stripped.n() == 2);

  CHECK(kind_of([] { validate({{1, 1, 0}, {1, 1, 0}, {1, 1, 0}}, {.normalize = true}); }) ==
        ErrorKind::DegreeZero);
  CHECK(kind_of([] { validate({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}); }) == ErrorKind::DegreeZero);
  CHECK(kind_of([] { validate({{1, 0}, {0, 1}}); }) == ErrorKind::Malformed);
  CHECK(kind_of([] { validate({{1, 0, 0}, {0, 1}, {0, 0, 1}}); }) == ErrorKind::Malformed);
  CHECK(kind_of([] { validate({{2, -1, 0}, {0, 1, 0}, {0, 0, 1}}); }) == ErrorKind::Malformed);
}

TEST_CASE("is_birational") {
  CHECK(is_birational(validate(kA2)));
  CHECK_FALSE(is_birational(validate({{2, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 1, 1}})));
  CHECK(is_birational(validate(kPlanar)));
  CHECK(is_birational(validate(kCaseI)));
  CHECK(is_birational(validate(kCaseII)));
  CHECK(is_birational(validate(kCaseIII)));
}

TEST_CASE("invert examples") {
  const ExponentMatrix a2 = validate(kA2);
  const ExponentMatrix b = invert(a2);
  CHECK(b.rows() == RawMatrix{{1, 1, 1, 0}, {0, 2, 1, 0}, {1, 0, 2, 0}, {0, 2, 0, 1}});
  CHECK(b.degree() == 3);
  CHECK(product(b, a2) == RawMatrix{{3, 2, 1, 0}, {2, 3, 1, 0}, {2, 2, 2, 0}, {2, 2, 1, 1}});

  CHECK(invert(validate(kPlanar)).rows() == kPlanar);
  CHECK(invert(validate(identity_rows(4))).rows() == identity_rows(4));

  // Independent values for the worked case examples (sympy inverse + shift).
  CHECK(invert(validate(kCaseI)).rows() == kCaseI);
  CHECK(invert(validate(kCaseII)).rows() == RawMatrix{{1, 2, 1, 1}, {0, 3, 1, 1}, {0, 3, 0, 2}, {2, 0, 3, 0}});
  CHECK(invert(validate(kCaseIII)).rows() ==
        RawMatrix{{0, 5, 12, 0}, {9, 0, 0, 8}, {7, 1, 3, 6}, {3, 3, 8, 3}});

  CHECK(kind_of([] { invert(validate({{2, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 1, 1}})); }) ==
        ErrorKind::NotBirational);
}

TEST_CASE("inverse_degree and multidegrees") {
  CHECK(inverse_degree(phi_nd(3, 2)) == 3);
  CHECK(inverse_degree(phi_nd(3, 3)) == 7);
  CHECK(inverse_degree(phi_nd(3, 4)) == 13);
  CHECK(inverse_degree(validate(identity_rows(4))) == 1);
  for (std::int64_t d = 1; d <= 8; ++d) CHECK(inverse_degree(phi_nd(2, d)) == d);

  CHECK(multidegrees(phi_nd(3, 2)).entries == std::vector<std::int64_t>{1, 2, 3, 1});
  CHECK(multidegrees(validate(identity_rows(4))).entries == std::vector<std::int64_t>{1, 1, 1, 1});
  const ExponentMatrix p33 = phi_nd(3, 3);
  CHECK(multidegrees(p33).entries == std::vector<std::int64_t>{1, 3, 7, 1});
  CHECK(multidegrees(invert(p33)) == multidegrees(p33).reversed());
  CHECK(kind_of([] { multidegrees(phi_nd(4, 2)); }) == ErrorKind::UnsupportedDimension);
}

TEST_CASE("phi_nd") {
  CHECK(phi_nd(3, 5).rows() == RawMatrix{{5, 0, 0, 0}, {4, 1, 0, 0}, {0, 4, 1, 0}, {0, 0, 4, 1}});
  CHECK(phi_nd(3, 1).rows() == identity_rows(4));
  CHECK(phi_nd(2, 2).rows() == RawMatrix{{2, 0, 0}, {1, 1, 0}, {0, 1, 1}});
  for (int n = 2; n <= 5; ++n)
    for (std::int64_t d = 1; d <= 5; ++d) CHECK(is_birational(phi_nd(n, d)));
}

TEST_CASE("canonical_form") {
  auto rng = test::make_rng(10);
  CHECK(canonical_form(validate(identity_rows(4))).rows() ==
        RawMatrix{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}});

  RawMatrix reversed = kA2;
  std::reverse(reversed.begin(), reversed.end());
  CHECK(canonical_form(validate(reversed)) == canonical_form(validate(kA2)));

  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 3;
    const ExponentMatrix e = test::random_birational(rng, n, 1 + trial % 4);
    const ExponentMatrix c = canonical_form(e);
    CAPTURE(e);
    CHECK(canonical_form(validate(test::random_permutation_of(e.rows(), rng))) == c);
    CHECK(canonical_form(c) == c);
    if (n <= 3) CHECK(c.rows() == test::brute_canonical(e.rows()));
  }
}

TEST_CASE("is_extremal_class") {
  auto rng = test::make_rng(11);
  CHECK(is_extremal_class(validate(test::random_permutation_of(phi_nd(3, 5).rows(), rng))));
  CHECK_FALSE(is_extremal_class(validate(kPlanar)));
  CHECK(canonical_form(validate(kPlanar)).rows() == RawMatrix{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  CHECK(canonical_form(phi_nd(2, 2)).rows() == RawMatrix{{0, 0, 2}, {0, 1, 1}, {1, 1, 0}});
  CHECK(is_extremal_class(validate(identity_rows(4))));
  CHECK_FALSE(is_extremal_class(validate(kCaseIII)));
}

TEST_CASE("compose") {
  const ExponentMatrix a2 = phi_nd(3, 2);
  CHECK(compose(invert(a2), a2).rows() == identity_rows(4));
  CHECK(compose(a2, validate(identity_rows(4))) == a2);
  const ExponentMatrix planar = validate(kPlanar);
  CHECK(compose(planar, planar).rows() == identity_rows(3));
  CHECK(kind_of([&] { compose(planar, a2); }) == ErrorKind::ArityMismatch);
}

TEST_CASE("classify_case examples") {
  const CaseLabel c1 = classify_case(validate(kCaseI));
  CHECK(c1.label == Case::I);
  CHECK(c1.column == 0);

  const CaseLabel c2 = classify_case(validate(kCaseII));
  CHECK(c2.label == Case::II);
  CHECK(c2.lines == std::vector<std::pair<int, int>>{{0, 2}, {0, 3}});

  const CaseLabel c3 = classify_case(validate(kCaseIII));
  CHECK(c3.label == Case::III);
  CHECK(c3.lines == std::vector<std::pair<int, int>>{{0, 3}, {1, 2}});

  for (std::int64_t d = 2; d <= 10; ++d) {
    const CaseLabel c4 = classify_case(phi_nd(3, d));
    CHECK(c4.label == Case::IV);
    CHECK(c4.lines == std::vector<std::pair<int, int>>{{0, 2}});
  }

  CHECK(kind_of([] { classify_case(phi_nd(2, 3)); }) == ErrorKind::UnsupportedDimension);
  CHECK(kind_of([] { classify_case(phi_nd(3, 1)); }) == ErrorKind::UnsupportedDegree);
}

TEST_CASE("inversion properties on random birational maps") {
  auto rng = test::make_rng(12);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + trial % 3;
    const std::int64_t d = 1 + trial % (n == 4 ? 3 : 5);
    const ExponentMatrix e = test::random_birational(rng, n, d);
    CAPTURE(e);
    const ExponentMatrix b = invert(e);
    const RawMatrix identity = identity_rows(e.size());
    CHECK(compose(b, e).rows() == identity);
    CHECK(compose(e, b).rows() == identity);
    CHECK(invert(b) == e);
    CHECK(inverse_degree(b) == d);

    // B*A = I + 1*c^T with c >= 0.
    const RawMatrix p = product(b, e);
    for (std::size_t c = 0; c < e.size(); ++c) {
      const std::int64_t shift = p[c == 0 ? 1 : 0][c];
      CHECK(shift >= 0);
      for (std::size_t r = 0; r < e.size(); ++r) CHECK(p[r][c] == shift + (r == c ? 1 : 0));
    }
    if (n == 2) CHECK(b.degree() == d);
  }
}

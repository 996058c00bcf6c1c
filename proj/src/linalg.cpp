#include "cremona/linalg.hpp"

#include <utility>

#include "cremona/error.hpp"

namespace cremona {

template <class T>
SquareMatrix<T>::SquareMatrix(std::size_t size) : size_(size), data_(size * size) {
  if (size == 0) fail(ErrorKind::Malformed, "matrix size must be positive");
}

template <class T>
SquareMatrix<T>::SquareMatrix(std::initializer_list<std::initializer_list<T>> rows)
    : size_(rows.size()) {
  if (size_ == 0) fail(ErrorKind::Malformed, "matrix size must be positive");
  data_.reserve(size_ * size_);
  for (const auto& row : rows) {
    if (row.size() != size_) fail(ErrorKind::Malformed, "matrix is not square");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

template <class T>
SquareMatrix<T> SquareMatrix<T>::identity(std::size_t size) {
  SquareMatrix m(size);
  for (std::size_t i = 0; i < size; ++i) m(i, i) = 1;
  return m;
}

template <class T>
SquareMatrix<T> SquareMatrix<T>::transpose() const {
  SquareMatrix t(size_);
  for (std::size_t r = 0; r < size_; ++r)
    for (std::size_t c = 0; c < size_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

template <class T>
SquareMatrix<T> operator*(const SquareMatrix<T>& a, const SquareMatrix<T>& b) {
  if (a.size() != b.size()) fail(ErrorKind::ArityMismatch, "matrix sizes differ");
  const std::size_t n = a.size();
  SquareMatrix<T> p(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      if (a(r, k) == 0) continue;
      for (std::size_t c = 0; c < n; ++c) p(r, c) += a(r, k) * b(k, c);
    }
  return p;
}

template <class T>
std::ostream& operator<<(std::ostream& os, const SquareMatrix<T>& m) {
  os << '[';
  for (std::size_t r = 0; r < m.size(); ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < m.size(); ++c) os << (c ? "," : "") << m(r, c);
    os << ']';
  }
  return os << ']';
}

template class SquareMatrix<Integer>;
template class SquareMatrix<Rational>;
template IntMatrix operator*(const IntMatrix&, const IntMatrix&);
template RatMatrix operator*(const RatMatrix&, const RatMatrix&);
template std::ostream& operator<<(std::ostream&, const IntMatrix&);
template std::ostream& operator<<(std::ostream&, const RatMatrix&);

Integer determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = k; c < n; ++c) std::swap(a(k, c), a(p, c));
      sign = -sign;
    }
    Integer t;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Exact by Sylvester's identity.
        t = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

IntMatrix minor_matrix(const IntMatrix& m, std::size_t row, std::size_t col) {
  const std::size_t n = m.size();
  IntMatrix out(n - 1);
  for (std::size_t r = 0, rr = 0; r < n; ++r) {
    if (r == row) continue;
    for (std::size_t c = 0, cc = 0; c < n; ++c) {
      if (c == col) continue;
      out(rr, cc++) = m(r, c);
    }
    ++rr;
  }
  return out;
}

}  // namespace

IntMatrix adjugate(const IntMatrix& m) {
  const std::size_t n = m.size();
  IntMatrix adj(n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      Integer cof = determinant(minor_matrix(m, r, c));
      adj(c, r) = ((r + c) % 2 == 0) ? cof : Integer(-cof);
    }
  return adj;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix q(m.size());
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c) q(r, c) = m(r, c);
  return q;
}

RatMatrix rational_inverse(const IntMatrix& m) {
  const Integer det = determinant(m);
  if (det == 0) fail(ErrorKind::SingularMatrix, "determinant is zero");
  const IntMatrix adj = adjugate(m);
  RatMatrix inv(m.size());
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c) {
      inv(r, c) = Rational(adj(r, c), det);
      inv(r, c).canonicalize();
    }
  return inv;
}

}  // namespace cremona

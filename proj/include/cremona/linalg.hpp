#pragma once

// Exact linear algebra on small square matrices.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

namespace cremona {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense square matrix, row-major. Rational entries are kept canonical.
template <class T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t size);
  SquareMatrix(std::initializer_list<std::initializer_list<T>> rows);

  static SquareMatrix identity(std::size_t size);

  std::size_t size() const noexcept { return size_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * size_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * size_ + c]; }

  SquareMatrix transpose() const;

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.size_ == b.size_ && a.data_ == b.data_;
  }

 private:
  std::size_t size_ = 0;
  std::vector<T> data_;
};

using IntMatrix = SquareMatrix<Integer>;
using RatMatrix = SquareMatrix<Rational>;

template <class T>
SquareMatrix<T> operator*(const SquareMatrix<T>& a, const SquareMatrix<T>& b);

template <class T>
std::ostream& operator<<(std::ostream& os, const SquareMatrix<T>& m);

/// Fraction-free Gaussian elimination (Bareiss) with row pivoting.
Integer determinant(const IntMatrix& m);

/// Transposed cofactor matrix; defined for singular input, and [[1]] for 1x1.
IntMatrix adjugate(const IntMatrix& m);

/// adj(M)/det(M); throws SingularMatrix when det(M) = 0.
RatMatrix rational_inverse(const IntMatrix& m);

RatMatrix to_rational(const IntMatrix& m);

extern template class SquareMatrix<Integer>;
extern template class SquareMatrix<Rational>;
extern template IntMatrix operator*(const IntMatrix&, const IntMatrix&);
extern template RatMatrix operator*(const RatMatrix&, const RatMatrix&);
extern template std::ostream& operator<<(std::ostream&, const IntMatrix&);
extern template std::ostream& operator<<(std::ostream&, const RatMatrix&);

}  // namespace cremona

#include "grover/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace grover {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

Polynomial charpoly_exact(const RationalMatrix& input) {
  if (!input.is_square()) throw std::invalid_argument("charpoly of a non-square matrix");
  const std::size_t n = input.rows();
  RationalMatrix h = input;

  // Similarity transforms to upper Hessenberg form (Gaussian elimination
  // with row/column swaps, exact).
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t pivot = m;
    while (pivot < n && h(pivot, m - 1) == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(pivot, j), h(m, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, pivot), h(i, m));
    }
    const Rational inv = 1 / h(m, m - 1);
    for (std::size_t i = m + 1; i < n; ++i) {
      if (h(i, m - 1) == 0) continue;
      const Rational u = h(i, m - 1) * inv;
      for (std::size_t j = 0; j < n; ++j) h(i, j) -= u * h(m, j);
      for (std::size_t j = 0; j < n; ++j) h(j, m) += u * h(j, i);
    }
  }

  // p_k = charpoly of the leading k x k block.
  std::vector<Polynomial> p(n + 1);
  p[0] = Polynomial::constant(1);
  const Polynomial x = Polynomial::x();
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t c = k - 1;
    p[k] = (x - Polynomial::constant(h(c, c))) * p[k - 1];
    Rational sub = 1;
    for (std::size_t i = 1; i <= c; ++i) {
      sub *= h(c - i + 1, c - i);
      const Rational term = sub * h(c - i, c);
      if (term != 0) p[k] -= term * p[c - i];
    }
  }
  return p[n];
}

}  // namespace grover

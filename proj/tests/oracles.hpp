#pragma once

// Independent reference computations used only by tests.

#include <algorithm>
#include <numeric>
#include <vector>

#include "grover/matrix.hpp"
#include "grover/polynomial.hpp"

namespace grover::oracle {

/// det(x I - M) by the Leibniz permutation expansion. Exponential; n <= 7.
inline Polynomial leibniz_charpoly(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial total;
  do {
    // sign by counting inversions
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Polynomial term = Polynomial::constant(inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) {
      Polynomial entry = Polynomial::constant(-m(i, perm[i]));
      if (perm[i] == i) entry += Polynomial::x();
      term *= entry;
    }
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// prod_j (x - r_j) for rational roots.
inline Polynomial from_roots(const std::vector<Rational>& roots) {
  Polynomial p = Polynomial::constant(1);
  for (const auto& r : roots) p *= Polynomial(std::vector<Rational>{-r, Rational(1)});
  return p;
}

/// prod_j (z^2 - 2 mu_j z + 1): the transform written through the roots.
inline Polynomial transform_from_roots(const std::vector<Rational>& roots) {
  Polynomial p = Polynomial::constant(1);
  for (const auto& mu : roots) p *= Polynomial(std::vector<Rational>{Rational(1), -2 * mu, Rational(1)});
  return p;
}

/// Direct substitution: evaluate (2z)^i f((z + 1/z)/2) at a rational z.
inline Rational transform_at(const Polynomial& f, const Rational& z) {
  const Rational lam = (z + 1 / z) / 2;
  Rational scale = 1;
  for (int k = 0; k < f.degree(); ++k) scale *= 2 * z;
  return scale * f.eval(lam);
}

/// det(x I - M) at a rational x by exact Gaussian elimination.
inline Rational charpoly_at(const RationalMatrix& m, const Rational& x) {
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = (i == j ? x : Rational(0)) - m(i, j);
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

}  // namespace grover::oracle

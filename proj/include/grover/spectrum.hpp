#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "grover/graph.hpp"
#include "grover/polynomial.hpp"
#include "grover/walk.hpp"

namespace grover {

/// Exact transition matrix T(u, v) = 1/deg(u) for u ~ v.
RationalMatrix transition_matrix(const Graph& g);

/// Real roots of a polynomial whose roots are all real, each listed with
/// its multiplicity. Multiplicities come from an exact square-free
/// decomposition; the simple roots of each factor are located via the
/// companion matrix and polished by Newton iteration.
std::vector<double> numeric_real_roots(const Polynomial& p);

/// One eigenvalue mu of T other than +-1, lifted to exp(+-i arccos mu).
struct LiftedPoint {
  double mu;
  int multiplicity;
};

/// Spectrum of U assembled from the spectrum of T.
///
/// The eigenvalues of T other than +-1 contribute conjugate pairs on the
/// unit circle. The +-1 eigenvalues of T are counted once each, together
/// with the cycle-space contributions: mult(+1) = b1 + m_T(1) and
/// mult(-1) = b1 - 1 + 2 m_T(-1).
struct LiftedSpectrum {
  Polynomial interior;  // charpoly of T with the +-1 roots divided out
  std::vector<LiftedPoint> points;
  int mult_plus_one = 0;
  int mult_minus_one = 0;

  std::size_t total_multiplicity() const;
  /// Every eigenvalue as a complex number, with multiplicity.
  std::vector<std::complex<double>> expand() const;
};

/// Throws std::logic_error when the multiplicities do not add up to
/// arc_count.
LiftedSpectrum lift_spectrum(const Polynomial& charpoly_t, const Topology& topo, std::size_t arc_count);

inline constexpr std::size_t kDefaultDenseLimit = 2000;

/// Eigenvalues of the dense double realization of U. Diagnostic only.
std::vector<std::complex<double>> numeric_spectrum(const GroverOperator& u,
                                                   std::size_t dense_limit = kDefaultDenseLimit);

/// Sorts both multisets by angle and returns the largest componentwise
/// distance (infinity on a size mismatch).
double spectrum_mismatch(std::vector<std::complex<double>> a, std::vector<std::complex<double>> b);

}  // namespace grover

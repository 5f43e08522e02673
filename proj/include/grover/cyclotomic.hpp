#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "grover/polynomial.hpp"

namespace grover {

/// Euler totient by trial factorization. Requires m >= 1.
std::uint64_t euler_phi(std::uint64_t m);

/// Phi_m, computed by dividing z^m - 1 by Phi_d for every proper divisor d.
/// Results are memoized per thread.
const Polynomial& cyclotomic_poly(std::uint64_t m);

/// (2z)^i f((z + 1/z)/2) for a monic f of degree i >= 1, expanded in z.
/// The result is monic, self-reciprocal, degree 2i, constant term 1.
Polynomial zhukovskij_transform(const Polynomial& f);

/// A successful decomposition of a polynomial into cyclotomic factors.
struct CyclotomicFactorization {
  std::map<std::uint64_t, int> factors;  // m -> multiplicity
  bool residual_is_one = true;

  /// Product of Phi_m^mult over all factors.
  Polynomial reconstruct() const;
};

/// Returns the factorization when F is a product of cyclotomic polynomials,
/// std::nullopt otherwise. Non-integer coefficients, a non-monic F, or a
/// constant term other than +-1 reject immediately.
std::optional<CyclotomicFactorization> cyclotomic_product_test(const Polynomial& F);

/// lcm of the orders m appearing in the factorization.
std::uint64_t order_lcm(const CyclotomicFactorization& fac);

}  // namespace grover

#include "grover/cyclotomic.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace grover {

std::uint64_t euler_phi(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("euler_phi requires m >= 1");
  std::uint64_t result = m;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

const Polynomial& cyclotomic_poly(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("cyclotomic_poly requires m >= 1");
  thread_local std::unordered_map<std::uint64_t, Polynomial> cache;
  if (auto it = cache.find(m); it != cache.end()) return it->second;

  Polynomial p = Polynomial::monomial(1, static_cast<int>(m)) - Polynomial::constant(1);
  for (std::uint64_t d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    auto [q, r] = divmod(p, cyclotomic_poly(d));
    if (!r.is_zero()) throw std::logic_error("cyclotomic division left a remainder");
    p = std::move(q);
  }
  return cache.emplace(m, std::move(p)).first->second;
}

Polynomial zhukovskij_transform(const Polynomial& f) {
  if (f.degree() < 1) throw std::invalid_argument("zhukovskij_transform needs degree >= 1");
  if (!f.is_monic()) throw std::invalid_argument("zhukovskij_transform needs a monic polynomial");
  // (2z)^i f((z + 1/z)/2) = sum_k c_k 2^{i-k} z^{i-k} (z^2 + 1)^k
  const int deg = f.degree();
  const Polynomial z2p1{1, 0, 1};
  Polynomial result;
  Polynomial power = Polynomial::constant(1);  // (z^2 + 1)^k
  for (int k = 0; k <= deg; ++k) {
    Rational c = f.coeff(k);
    if (c != 0) {
      Integer scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(deg - k));
      result += Polynomial::monomial(c * Rational(scale), deg - k) * power;
    }
    power *= z2p1;
  }
  return result;
}

Polynomial CyclotomicFactorization::reconstruct() const {
  Polynomial p = Polynomial::constant(1);
  for (const auto& [m, mult] : factors) p *= pow(cyclotomic_poly(m), static_cast<unsigned>(mult));
  return p;
}

std::optional<CyclotomicFactorization> cyclotomic_product_test(const Polynomial& F) {
  if (F.is_zero()) throw std::invalid_argument("cyclotomic_product_test on the zero polynomial");
  if (!F.has_integer_coefficients() || !F.is_monic()) return std::nullopt;
  if (abs(F.coeff(0)) != 1) return std::nullopt;

  CyclotomicFactorization fac;
  Polynomial residual = F;
  const auto deg = static_cast<std::uint64_t>(F.degree());
  // phi(m) >= sqrt(m/2), so every Phi_m dividing F has m <= 2 deg^2.
  const std::uint64_t bound = std::max<std::uint64_t>(2 * deg * deg, 2);
  for (std::uint64_t m = 1; m <= bound && residual.degree() >= 1; ++m) {
    if (euler_phi(m) > static_cast<std::uint64_t>(residual.degree())) continue;
    const Polynomial& phi = cyclotomic_poly(m);
    while (residual.degree() >= phi.degree()) {
      auto [q, r] = divmod(residual, phi);
      if (!r.is_zero()) break;
      residual = std::move(q);
      ++fac.factors[m];
    }
  }
  if (residual != Polynomial::constant(1)) return std::nullopt;
  return fac;
}

std::uint64_t order_lcm(const CyclotomicFactorization& fac) {
  std::uint64_t l = 1;
  for (const auto& [m, mult] : fac.factors) l = std::lcm(l, m);
  return l;
}

}  // namespace grover

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "grover/rational.hpp"

namespace grover {

/// Dense univariate polynomial over Q, coefficients stored low-to-high.
/// The zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<long> coeffs);

  static Polynomial constant(const Rational& c);
  /// c * x^k
  static Polynomial monomial(const Rational& c, int k);
  static Polynomial x() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }
  bool has_integer_coefficients() const;

  /// Coefficient of x^k (zero outside the stored range).
  Rational coeff(int k) const;
  const Rational& leading() const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Polynomial monic() const;
  Polynomial derivative() const;
  Rational eval(const Rational& x) const;
  double eval(double x) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable, descending degree: "x^3 - 3/4*x - 1/4".
  std::string to_string(std::string_view var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Polynomial pow(Polynomial base, unsigned exponent);

/// Euclidean division; throws std::domain_error on a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic gcd (zero only when both inputs are zero).
Polynomial gcd(Polynomial a, Polynomial b);

/// Remainder of `a` modulo a monic `modulus` of degree >= 1.
Polynomial quotient_ring_reduce(const Polynomial& a, const Polynomial& modulus);

/// Square-free decomposition: returns (factor, multiplicity) pairs of monic
/// square-free, pairwise coprime factors whose product is monic(p).
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p);

}  // namespace grover

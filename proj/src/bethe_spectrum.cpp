#include "grover/bethe_spectrum.hpp"

#include <cmath>
#include <stdexcept>

#include "grover/cyclotomic.hpp"
#include "grover/matrix.hpp"
#include "grover/spectrum.hpp"

namespace grover {

std::vector<Rational> hopping_rates(const BetheSpec& spec) {
  const std::size_t n = spec.levels();
  std::vector<Rational> rates(n);
  rates[0] = make_rational(1, spec.d(1) + 1);
  for (std::size_t i = 1; i < n; ++i)
    rates[i] = make_rational(spec.d(i), static_cast<long>(spec.d(i) + 1) * (spec.d(i + 1) + 1));
  return rates;
}

std::set<std::size_t> branching_levels(const BetheSpec& spec) {
  const std::size_t n = spec.levels();
  std::set<std::size_t> omega;
  for (std::size_t i = 1; i <= n; ++i)
    if (spec.d(n - i) >= 2) omega.insert(i);
  return omega;
}

std::vector<Polynomial> g_sequence(const BetheSpec& spec) {
  const std::size_t n = spec.levels();
  const Polynomial x = Polynomial::x();
  std::vector<Polynomial> g(n + 2);
  g[0] = Polynomial::constant(1);
  g[1] = x;
  for (std::size_t i = 2; i <= n; ++i) {
    const int d = spec.d(n - i + 1);
    g[i] = Rational(d + 1) * (x * g[i - 1]) - Rational(d) * g[i - 2];
  }
  g[n + 1] = Rational(spec.d(0)) * (x * g[n] - g[n - 1]);
  return g;
}

std::vector<Polynomial> p_sequence(const BetheSpec& spec) {
  const std::size_t n = spec.levels();
  const auto rates = hopping_rates(spec);
  const Polynomial x = Polynomial::x();
  std::vector<Polynomial> p(n + 2);
  p[0] = Polynomial::constant(1);
  p[1] = x;
  for (std::size_t i = 2; i <= n + 1; ++i) p[i] = x * p[i - 1] - rates[n - i + 1] * p[i - 2];
  return p;
}

RationalMatrix level_quotient_matrix(const BetheSpec& spec) {
  const std::size_t n = spec.levels();
  RationalMatrix b(n + 1, n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const long deg = spec.d(i) + (i > 0 ? 1 : 0);
    if (i + 1 <= n) b(i, i + 1) = make_rational(spec.d(i), deg);
    if (i > 0) b(i, i - 1) = make_rational(1, deg);
  }
  return b;
}

Polynomial quotient_charpoly(const BetheSpec& spec) { return charpoly_exact(level_quotient_matrix(spec)); }

bool verify_p_equals_monic_g(const BetheSpec& spec) {
  const auto g = g_sequence(spec);
  const auto p = p_sequence(spec);
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i].monic() != p[i]) return false;
  return true;
}

Polynomial chebyshev(ChebyshevKind kind, int i) {
  if (i < -1 || (i == -1 && kind == ChebyshevKind::First))
    throw std::invalid_argument("Chebyshev index out of range");
  if (i == -1) return {};
  const Polynomial two_x{0, 2};
  Polynomial prev = Polynomial::constant(1);
  Polynomial cur = kind == ChebyshevKind::First ? Polynomial::x() : two_x;
  if (i == 0) return prev;
  for (int k = 2; k <= i; ++k) {
    Polynomial next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

bool chebyshev_identity_check(ChebyshevKind kind, int i) {
  if (i < 1) throw std::invalid_argument("identity check needs i >= 1");
  const Polynomial l = chebyshev(kind, i);
  // zhukovskij_transform needs a monic input; the leading coefficient of
  // L_i is 2^{i-1} (first kind) or 2^i (second kind).
  const Rational lead = l.leading();
  const Polynomial lhs = lead * zhukovskij_transform(l.monic());
  Integer two_pow;
  Polynomial rhs;
  if (kind == ChebyshevKind::First) {
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(i - 1));
    rhs = Rational(two_pow) * (Polynomial::monomial(1, 2 * i) + Polynomial::constant(1));
  } else {
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(i));
    for (int j = 0; j <= i; ++j) rhs += Polynomial::monomial(1, 2 * i - 2 * j);
    rhs *= Rational(two_pow);
  }
  return lhs == rhs;
}

std::size_t trailing_ones(const BetheSpec& spec) {
  std::size_t count = 0;
  const auto& d = spec.degrees();
  for (auto it = d.rbegin(); it != d.rend() && *it == 1; ++it) ++count;
  return count;
}

bool claim_path_check(const BetheSpec& spec) {
  const std::size_t k1 = std::min(trailing_ones(spec) + 1, spec.levels());
  const auto p = p_sequence(spec);
  Rational scale = 1;
  for (std::size_t i = 1; i <= k1; ++i) {
    if (p[i] != scale * chebyshev(ChebyshevKind::First, static_cast<int>(i))) return false;
    scale /= 2;
  }
  return true;
}

namespace {

std::vector<std::vector<Vertex>> children_of(const BetheTree& tree) {
  std::vector<std::vector<Vertex>> children(tree.graph.vertex_count());
  for (Vertex v = 1; v < tree.graph.vertex_count(); ++v) children[tree.partition.parent[v]].push_back(v);
  return children;
}

}  // namespace

SymbolicEigenfunction aperp_eigenfunction(const BetheTree& tree, std::size_t age, Vertex center) {
  const auto children = children_of(tree);
  if (center >= children.size()) throw std::invalid_argument("center vertex out of range");
  if (children[center].size() < 2) throw std::invalid_argument("center vertex has fewer than 2 children");
  return aperp_eigenfunction(tree, age, center, children[center][0], children[center][1]);
}

SymbolicEigenfunction aperp_eigenfunction(const BetheTree& tree, std::size_t age, Vertex center,
                                          Vertex first_child, Vertex second_child) {
  const BetheSpec& spec = tree.spec;
  const std::size_t n = spec.levels();
  if (!branching_levels(spec).contains(age))
    throw std::invalid_argument("age " + std::to_string(age) + " is not a branching level");
  const auto& part = tree.partition;
  if (center >= tree.graph.vertex_count() || part.level_of[center] != n - age)
    throw std::invalid_argument("center vertex is not on level n - age");
  const auto children = children_of(tree);
  auto is_child = [&](Vertex v) { return v < part.parent.size() && v != 0 && part.parent[v] == center; };
  if (!is_child(first_child) || !is_child(second_child) || first_child == second_child)
    throw std::invalid_argument("eigenfunction needs two distinct children of the center");

  const auto g = g_sequence(spec);
  SymbolicEigenfunction f;
  f.age = age;
  f.center = center;
  f.first_child = first_child;
  f.second_child = second_child;
  f.values.assign(tree.graph.vertex_count(), Polynomial{});
  auto fill = [&](Vertex root, const Rational& sign) {
    std::vector<Vertex> stack{root};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      const std::size_t j = n - part.level_of[v];
      f.values[v] = sign * g[j];
      for (Vertex c : children[v]) stack.push_back(c);
    }
  };
  fill(first_child, Rational(1));
  fill(second_child, Rational(-1));
  return f;
}

bool verify_eigenfunction(const BetheTree& tree, const SymbolicEigenfunction& f) {
  const Graph& g = tree.graph;
  if (f.values.size() != g.vertex_count()) return false;
  const Polynomial modulus = g_sequence(tree.spec).at(f.age).monic();
  const Polynomial x = Polynomial::x();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    Polynomial tf;
    for (Vertex w : g.neighbors(v)) tf += f.values[w];
    tf *= make_rational(1, static_cast<long>(g.degree(v)));
    if (!quotient_ring_reduce(tf - x * f.values[v], modulus).is_zero()) return false;
  }
  for (const auto& level : tree.partition.levels) {
    Polynomial sum;
    for (Vertex v : level) sum += f.values[v];
    if (!sum.is_zero()) return false;
  }
  return true;
}

std::vector<double> eigenvector_scaling(const BetheSpec& spec) {
  const std::size_t n = spec.levels();
  const auto rates = hopping_rates(spec);
  std::vector<double> c(n + 1);
  c[0] = 1.0;
  for (std::size_t j = 1; j <= n; ++j) c[j] = c[j - 1] / std::sqrt(rates[n - j].get_d());
  return c;
}

EigvecCheck a_eigvec_recurrence_check(const BetheSpec& spec) {
  const std::size_t n = spec.levels();
  const auto rates = hopping_rates(spec);
  const auto p = p_sequence(spec);
  const Polynomial x = Polynomial::x();
  const Polynomial& top = p[n + 1];

  EigvecCheck out;
  out.recurrence_ok = true;
  for (std::size_t i = 1; i <= n; ++i) {
    const Polynomial diff = p[i + 1] - (x * p[i] - rates[n - i] * p[i - 1]);
    if (!quotient_ring_reduce(diff, top).is_zero()) out.recurrence_ok = false;
  }
  if (!quotient_ring_reduce(p[n + 1], top).is_zero()) out.recurrence_ok = false;

  const auto scale = eigenvector_scaling(spec);
  std::vector<double> off(n);
  for (std::size_t i = 0; i < n; ++i) off[i] = std::sqrt(rates[i].get_d());
  out.roots = numeric_real_roots(top);
  for (double lam : out.roots) {
    // Component on level l is c_{n-l} p_{n-l}(lam).
    std::vector<double> v(n + 1);
    double norm = 0.0;
    for (std::size_t l = 0; l <= n; ++l) {
      v[l] = scale[n - l] * p[n - l].eval(lam);
      norm += v[l] * v[l];
    }
    norm = std::sqrt(norm);
    double residual = 0.0;
    for (std::size_t l = 0; l <= n; ++l) {
      double jv = 0.0;
      if (l > 0) jv += off[l - 1] * v[l - 1];
      if (l < n) jv += off[l] * v[l + 1];
      residual = std::max(residual, std::fabs(jv - lam * v[l]) / norm);
    }
    out.max_residual = std::max(out.max_residual, residual);
  }
  return out;
}

std::map<std::size_t, std::size_t> aperp_multiplicities(const BetheSpec& spec) {
  const std::size_t n = spec.levels();
  std::map<std::size_t, std::size_t> m;
  for (std::size_t i : branching_levels(spec))
    m[i] = spec.level_size(n - i) * static_cast<std::size_t>(spec.d(n - i) - 1);
  return m;
}

Polynomial predicted_charpoly(const BetheSpec& spec) {
  const auto p = p_sequence(spec);
  Polynomial out = p[spec.levels() + 1];
  for (const auto& [i, mult] : aperp_multiplicities(spec)) out *= pow(p[i], static_cast<unsigned>(mult));
  return out;
}

bool charpoly_factorization_check(const BetheSpec& spec, std::size_t vertex_limit) {
  if (spec.vertex_count() > vertex_limit)
    throw std::length_error("spec " + spec.to_string() + " exceeds the charpoly vertex limit");
  const BetheTree tree = bethe_graph(spec);
  return charpoly_exact(transition_matrix(tree.graph)) == predicted_charpoly(spec);
}

}  // namespace grover

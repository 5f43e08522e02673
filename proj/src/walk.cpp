#include "grover/walk.hpp"

#include <algorithm>
#include <stdexcept>

namespace grover {

GroverOperator::GroverOperator(const Graph& g) : rows_(g.arc_count()) {
  for (ArcId e = 0; e < g.arc_count(); ++e) {
    const Vertex u = g.arc(e).origin;
    const auto deg = static_cast<long>(g.degree(u));
    const ArcId inverse = g.reverse(e);
    // Columns f with t(f) = o(e): the reverses of the arcs leaving u.
    auto [lo, hi] = g.out_arcs(u);
    for (ArcId out = lo; out < hi; ++out) {
      const ArcId f = g.reverse(out);
      Rational v = make_rational(2, deg);
      if (f == inverse) v -= 1;
      if (v != 0) rows_[e].push_back({f, v});
    }
    std::sort(rows_[e].begin(), rows_[e].end(), [](const Entry& a, const Entry& b) { return a.column < b.column; });
  }
}

Rational GroverOperator::entry(ArcId e, ArcId f) const {
  for (const auto& en : rows_.at(e))
    if (en.column == f) return en.value;
  return 0;
}

RationalMatrix GroverOperator::to_dense() const {
  RationalMatrix m(arc_count(), arc_count());
  for (ArcId e = 0; e < arc_count(); ++e)
    for (const auto& en : rows_[e]) m(e, en.column) = en.value;
  return m;
}

bool GroverOperator::is_orthogonal() const {
  // (U^T U)(f, g) = sum_e U(e, f) U(e, g): accumulate per row, sparse.
  const std::size_t n = arc_count();
  std::vector<std::vector<std::pair<ArcId, Rational>>> gram(n);
  auto add = [&](ArcId f, ArcId g, const Rational& v) {
    auto& r = gram[f];
    auto it = std::find_if(r.begin(), r.end(), [g](const auto& p) { return p.first == g; });
    if (it == r.end())
      r.emplace_back(g, v);
    else
      it->second += v;
  };
  for (ArcId e = 0; e < n; ++e)
    for (const auto& a : rows_[e])
      for (const auto& b : rows_[e]) add(a.column, b.column, a.value * b.value);
  for (ArcId f = 0; f < n; ++f) {
    bool diag = false;
    for (const auto& [g, v] : gram[f]) {
      if (g == f) {
        diag = true;
        if (v != 1) return false;
      } else if (v != 0) {
        return false;
      }
    }
    if (!diag) return false;
  }
  return true;
}

ExactState step(const GroverOperator& u, const ExactState& s) {
  if (s.size() != u.arc_count()) throw std::invalid_argument("state dimension does not match operator");
  ExactState out(s.size());
  for (ArcId e = 0; e < s.size(); ++e)
    for (const auto& en : u.row(e)) out[e] += en.value * s[en.column];
  return out;
}

NumericState step(const GroverOperator& u, const NumericState& s) {
  if (s.size() != u.arc_count()) throw std::invalid_argument("state dimension does not match operator");
  NumericState out(s.size(), 0.0);
  for (ArcId e = 0; e < s.size(); ++e)
    for (const auto& en : u.row(e)) out[e] += en.value.get_d() * s[en.column];
  return out;
}

ExactState evolve(const GroverOperator& u, ExactState s, std::uint64_t t) {
  for (std::uint64_t i = 0; i < t; ++i) s = step(u, s);
  return s;
}

NumericState evolve(const GroverOperator& u, NumericState s, std::uint64_t t) {
  for (std::uint64_t i = 0; i < t; ++i) s = step(u, s);
  return s;
}

ExactState basis_state(std::size_t arc_count, ArcId a) {
  if (a >= arc_count) throw std::out_of_range("initial arc out of range");
  ExactState s(arc_count);
  s[a] = 1;
  return s;
}

Rational squared_norm(const ExactState& s) {
  Rational acc = 0;
  for (const auto& x : s) acc += x * x;
  return acc;
}

std::vector<Rational> vertex_distribution(const Graph& g, const ExactState& s) {
  if (s.size() != g.arc_count()) throw std::invalid_argument("state dimension does not match graph");
  std::vector<Rational> dist(g.vertex_count());
  for (ArcId a = 0; a < s.size(); ++a) dist[g.arc(a).terminus] += s[a] * s[a];
  return dist;
}

std::vector<double> vertex_distribution(const Graph& g, const NumericState& s) {
  if (s.size() != g.arc_count()) throw std::invalid_argument("state dimension does not match graph");
  std::vector<double> dist(g.vertex_count(), 0.0);
  for (ArcId a = 0; a < s.size(); ++a) dist[g.arc(a).terminus] += s[a] * s[a];
  return dist;
}

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, base);
    base = mulmod(base, base);
    e >>= 1;
  }
  return r;
}

std::uint64_t to_residue(const Rational& q) {
  Integer num = q.get_num() % Integer(static_cast<unsigned long>(kPrime));
  if (num < 0) num += Integer(static_cast<unsigned long>(kPrime));
  Integer den = q.get_den() % Integer(static_cast<unsigned long>(kPrime));
  const auto n = static_cast<std::uint64_t>(num.get_ui());
  const auto d = static_cast<std::uint64_t>(den.get_ui());
  if (d == 0) throw std::domain_error("denominator divisible by the screening prime");
  return mulmod(n, powmod(d, kPrime - 2));
}

}  // namespace

RationalMatrix exact_power(const GroverOperator& u, std::uint64_t k) {
  const std::size_t n = u.arc_count();
  RationalMatrix m = RationalMatrix::identity(n);
  for (std::uint64_t i = 0; i < k; ++i) {
    RationalMatrix next(n, n);
    for (ArcId e = 0; e < n; ++e)
      for (const auto& en : u.row(e))
        for (std::size_t j = 0; j < n; ++j) {
          const Rational& x = m(en.column, j);
          if (x != 0) next(e, j) += en.value * x;
        }
    m = std::move(next);
  }
  return m;
}

std::optional<std::uint64_t> bruteforce_period(const GroverOperator& u, std::uint64_t cap) {
  if (cap < 1) throw std::invalid_argument("brute-force cap must be >= 1");
  const std::size_t n = u.arc_count();
  std::vector<std::vector<std::pair<ArcId, std::uint64_t>>> rows(n);
  for (ArcId e = 0; e < n; ++e)
    for (const auto& en : u.row(e)) rows[e].emplace_back(en.column, to_residue(en.value));

  std::vector<std::uint64_t> power(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) power[i * n + i] = 1;
  std::vector<std::uint64_t> next(n * n);
  const RationalMatrix id = RationalMatrix::identity(n);

  for (std::uint64_t k = 1; k <= cap; ++k) {
    std::fill(next.begin(), next.end(), 0);
    for (ArcId e = 0; e < n; ++e)
      for (const auto& [col, val] : rows[e]) {
        const std::uint64_t* src = &power[col * n];
        std::uint64_t* dst = &next[e * n];
        for (std::size_t j = 0; j < n; ++j) {
          if (src[j] == 0) continue;
          dst[j] += mulmod(val, src[j]);
          if (dst[j] >= kPrime) dst[j] -= kPrime;
        }
      }
    power.swap(next);
    bool identity_mod_p = true;
    for (std::size_t i = 0; i < n && identity_mod_p; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (power[i * n + j] != (i == j ? 1u : 0u)) {
          identity_mod_p = false;
          break;
        }
    if (identity_mod_p && exact_power(u, k) == id) return k;
  }
  return std::nullopt;
}

}  // namespace grover

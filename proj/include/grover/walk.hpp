#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "grover/graph.hpp"
#include "grover/matrix.hpp"
#include "grover/rational.hpp"

namespace grover {

/// Grover transfer matrix on the symmetric arcs of a graph, stored by rows.
///
/// U(e, f) = 2/deg(t(f)) - [e = f^-1] when t(f) = o(e), zero otherwise.
class GroverOperator {
 public:
  struct Entry {
    ArcId column;
    Rational value;
  };

  explicit GroverOperator(const Graph& g);

  std::size_t arc_count() const { return rows_.size(); }
  const std::vector<Entry>& row(ArcId e) const { return rows_[e]; }
  /// Zero when (e, f) is not a stored entry.
  Rational entry(ArcId e, ArcId f) const;

  RationalMatrix to_dense() const;
  /// U^T U == I, checked exactly.
  bool is_orthogonal() const;

 private:
  std::vector<std::vector<Entry>> rows_;
};

inline GroverOperator build_grover(const Graph& g) { return GroverOperator(g); }

using ExactState = std::vector<Rational>;
using NumericState = std::vector<double>;

ExactState step(const GroverOperator& u, const ExactState& s);
NumericState step(const GroverOperator& u, const NumericState& s);
ExactState evolve(const GroverOperator& u, ExactState s, std::uint64_t t);
NumericState evolve(const GroverOperator& u, NumericState s, std::uint64_t t);

/// All amplitude on one arc.
ExactState basis_state(std::size_t arc_count, ArcId a);

Rational squared_norm(const ExactState& s);

/// |amplitude|^2 summed by terminal vertex of each arc.
std::vector<Rational> vertex_distribution(const Graph& g, const ExactState& s);
std::vector<double> vertex_distribution(const Graph& g, const NumericState& s);

/// Smallest k in [1, cap] with U^k = I, or std::nullopt.
///
/// Powers are screened modulo a 61-bit prime (a power that is not the
/// identity mod p is not the identity over Q); every candidate surviving
/// the screen is confirmed by exact rational powering, so the returned k
/// is exact and minimal.
std::optional<std::uint64_t> bruteforce_period(const GroverOperator& u, std::uint64_t cap);

/// U^k computed exactly by repeated sparse-times-dense multiplication.
RationalMatrix exact_power(const GroverOperator& u, std::uint64_t k);

}  // namespace grover

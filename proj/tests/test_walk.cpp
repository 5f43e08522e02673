#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>

#include "grover/spectrum.hpp"
#include "grover/walk.hpp"
#include "oracles.hpp"

using namespace grover;

namespace {

using Complex = std::complex<double>;

// The defining formula evaluated entry by entry over all arc pairs.
RationalMatrix grover_by_definition(const Graph& g) {
  const std::size_t m = g.arc_count();
  RationalMatrix u(m, m);
  for (ArcId e = 0; e < m; ++e)
    for (ArcId f = 0; f < m; ++f) {
      if (g.arc(f).terminus != g.arc(e).origin) continue;
      Rational v = make_rational(2, static_cast<long>(g.degree(g.arc(f).terminus)));
      if (g.arc(e).origin == g.arc(f).terminus && g.arc(e).terminus == g.arc(f).origin) v -= 1;
      u(e, f) = v;
    }
  return u;
}

Complex unit(double angle) { return std::polar(1.0, angle); }

Graph path3() { return Graph(3, {{0, 1}, {1, 2}}); }

}  // namespace

TEST_CASE("Grover matrix of P_2 is the swap") {
  const auto u = build_grover(Graph(2, {{0, 1}})).to_dense();
  CHECK(u(0, 0) == 0);
  CHECK(u(0, 1) == 1);
  CHECK(u(1, 0) == 1);
  CHECK(u(1, 1) == 0);
}

TEST_CASE("Grover matrix of C_3 is a permutation made of two 3-cycles") {
  const Graph g = cycle_graph(3);
  const auto u = build_grover(g).to_dense();
  CHECK(u == grover_by_definition(g));
  for (std::size_t i = 0; i < 6; ++i) {
    int ones = 0;
    for (std::size_t j = 0; j < 6; ++j) {
      CHECK((u(i, j) == 0 || u(i, j) == 1));
      ones += u(i, j) == 1 ? 1 : 0;
    }
    CHECK(ones == 1);
  }
  const auto u3 = exact_power(build_grover(g), 3);
  CHECK(u3 == RationalMatrix::identity(6));
  CHECK_FALSE(exact_power(build_grover(g), 1) == RationalMatrix::identity(6));
}

TEST_CASE("Grover matrix of P_3 turns at the centre and reflects nowhere") {
  const Graph g = path3();
  const auto op = build_grover(g);
  CHECK(op.to_dense() == grover_by_definition(g));
  const ArcId into_center = g.arc_index(0, 1);
  const ArcId turn = g.arc_index(1, 2);
  const ArcId reflect = g.arc_index(1, 0);
  CHECK(op.entry(turn, into_center) == 1);
  CHECK(op.entry(reflect, into_center) == 0);
  const ArcId leaf_arc = g.arc_index(1, 0);
  CHECK(op.entry(g.arc_index(0, 1), leaf_arc) == 1);
}

TEST_CASE("sparse build agrees with the definition on assorted graphs") {
  for (const Graph& g : {complete_graph(4), complete_bipartite_graph(2, 3), cycle_graph(5),
                         bethe_graph(BetheSpec({2, 3, 1})).graph})
    CHECK(build_grover(g).to_dense() == grover_by_definition(g));
}

TEST_CASE("step and evolve") {
  const Graph p2(2, {{0, 1}});
  const auto u = build_grover(p2);
  const ExactState s = basis_state(2, 0);
  CHECK(evolve(u, s, 2) == s);
  CHECK(evolve(u, s, 1) == basis_state(2, 1));
  CHECK(evolve(u, s, 0) == s);

  const Graph c3 = cycle_graph(3);
  const auto w = build_grover(c3);
  const ExactState mixed{1, make_rational(-2, 3), 0, make_rational(1, 5), 3, make_rational(7, 2)};
  CHECK(evolve(w, mixed, 3) == mixed);
  CHECK_FALSE(evolve(w, mixed, 1) == mixed);
  CHECK(evolve(w, mixed, 0) == mixed);

  CHECK_THROWS_AS(step(u, ExactState{1}), std::invalid_argument);
}

TEST_CASE("exact and numeric evolution agree") {
  const Graph g = bethe_graph(BetheSpec({2, 3})).graph;
  const auto u = build_grover(g);
  ExactState e = basis_state(u.arc_count(), 3);
  NumericState n(u.arc_count(), 0.0);
  n[3] = 1.0;
  e = evolve(u, e, 25);
  n = evolve(u, n, 25);
  for (std::size_t i = 0; i < e.size(); ++i) CHECK(n[i] == doctest::Approx(e[i].get_d()).epsilon(1e-12));
}

TEST_CASE("vertex distribution") {
  const Graph p2(2, {{0, 1}});
  const auto d = vertex_distribution(p2, basis_state(2, 0));
  CHECK(d[p2.arc(0).terminus] == 1);
  CHECK(d[p2.arc(0).origin] == 0);

  const Graph p3 = path3();
  const ExactState uniform(4, make_rational(1, 2));
  const auto dist = vertex_distribution(p3, uniform);
  Rational total = 0;
  for (const auto& x : dist) total += x;
  CHECK(total == 1);

  const Graph k23 = complete_bipartite_graph(2, 3);
  const auto u = build_grover(k23);
  const ExactState s = basis_state(u.arc_count(), 5);
  CHECK(vertex_distribution(k23, evolve(u, s, 4)) == vertex_distribution(k23, s));
}

TEST_CASE("brute-force period") {
  CHECK(bruteforce_period(build_grover(Graph(2, {{0, 1}})), 10) == 2u);
  CHECK(bruteforce_period(build_grover(complete_bipartite_graph(2, 3)), 100) == 4u);
  CHECK(bruteforce_period(build_grover(cycle_graph(3)), 100) == 3u);
  CHECK(bruteforce_period(build_grover(cycle_graph(7)), 100) == 7u);
  CHECK_FALSE(bruteforce_period(build_grover(complete_graph(4)), 100));
  CHECK_FALSE(bruteforce_period(build_grover(cycle_graph(7)), 6));
  CHECK_THROWS_AS(bruteforce_period(build_grover(cycle_graph(3)), 0), std::invalid_argument);
}

TEST_CASE("unitarity, norm preservation and column sums") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  for (const Graph& g : {path3(), complete_graph(5), complete_bipartite_graph(3, 3),
                         bethe_graph(BetheSpec({1, 2, 3})).graph}) {
    const auto u = build_grover(g);
    CHECK(u.is_orthogonal());
    const auto dense = u.to_dense();
    for (std::size_t j = 0; j < dense.cols(); ++j) {
      Rational col = 0;
      for (std::size_t i = 0; i < dense.rows(); ++i) col += dense(i, j);
      CHECK(col == 1);
    }
    ExactState s(u.arc_count());
    for (auto& x : s) x = make_rational(num(rng), den(rng));
    const Rational n0 = squared_norm(s);
    for (int t = 0; t < 20; ++t) {
      s = step(u, s);
      CHECK(squared_norm(s) == n0);
    }
  }
}

TEST_CASE("lifted spectrum examples") {
  SUBCASE("P_3") {
    const Graph g = path3();
    const auto lifted = lift_spectrum(charpoly_exact(transition_matrix(g)), betti_and_bipartite(g), g.arc_count());
    CHECK(lifted.mult_plus_one == 1);
    CHECK(lifted.mult_minus_one == 1);
    REQUIRE(lifted.points.size() == 1);
    CHECK(lifted.points[0].mu == doctest::Approx(0.0));
    CHECK(lifted.points[0].multiplicity == 1);
    CHECK(spectrum_mismatch(lifted.expand(), {1.0, -1.0, Complex(0, 1), Complex(0, -1)}) < 1e-12);
  }
  SUBCASE("C_3") {
    const Graph g = cycle_graph(3);
    const auto lifted = lift_spectrum(charpoly_exact(transition_matrix(g)), betti_and_bipartite(g), g.arc_count());
    CHECK(lifted.mult_plus_one == 2);
    CHECK(lifted.mult_minus_one == 0);
    REQUIRE(lifted.points.size() == 1);
    CHECK(lifted.points[0].mu == doctest::Approx(-0.5));
    CHECK(lifted.points[0].multiplicity == 2);
    const double a = 2 * std::numbers::pi / 3;
    CHECK(spectrum_mismatch(lifted.expand(), {1.0, 1.0, unit(a), unit(a), unit(-a), unit(-a)}) < 1e-12);
  }
  SUBCASE("P_2") {
    const Graph g(2, {{0, 1}});
    const auto lifted = lift_spectrum(charpoly_exact(transition_matrix(g)), betti_and_bipartite(g), g.arc_count());
    CHECK(lifted.mult_plus_one == 1);
    CHECK(lifted.mult_minus_one == 1);
    CHECK(lifted.points.empty());
  }
  SUBCASE("multiplicities must add up") {
    const Graph g = path3();
    CHECK_THROWS_AS(lift_spectrum(charpoly_exact(transition_matrix(g)), betti_and_bipartite(g), 6),
                    std::logic_error);
  }
}

TEST_CASE("numeric spectrum examples") {
  const double a = 2 * std::numbers::pi / 3;
  CHECK(spectrum_mismatch(numeric_spectrum(build_grover(Graph(2, {{0, 1}}))), {1.0, -1.0}) < 1e-9);
  CHECK(spectrum_mismatch(numeric_spectrum(build_grover(cycle_graph(3))),
                          {1.0, 1.0, unit(a), unit(a), unit(-a), unit(-a)}) < 1e-9);
  CHECK(spectrum_mismatch(numeric_spectrum(build_grover(path3())), {1.0, -1.0, Complex(0, 1), Complex(0, -1)}) <
        1e-9);
  CHECK_THROWS_AS(numeric_spectrum(build_grover(cycle_graph(3)), 4), std::length_error);
}

TEST_CASE("lifted and numeric spectra agree") {
  for (const Graph& g : {complete_graph(4), complete_graph(5), complete_bipartite_graph(2, 3), cycle_graph(6),
                         bethe_graph(BetheSpec({2, 2})).graph, bethe_graph(BetheSpec({1, 2, 3})).graph}) {
    const auto lifted = lift_spectrum(charpoly_exact(transition_matrix(g)), betti_and_bipartite(g), g.arc_count());
    CHECK(lifted.total_multiplicity() == g.arc_count());
    CHECK(spectrum_mismatch(lifted.expand(), numeric_spectrum(build_grover(g))) < 1e-8);
  }
}

TEST_CASE("transition matrix charpoly against the Leibniz oracle") {
  const Graph g = complete_bipartite_graph(2, 3);
  CHECK(charpoly_exact(transition_matrix(g)) == oracle::leibniz_charpoly(transition_matrix(g)));
}

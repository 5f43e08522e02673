#include <doctest.h>

#include <set>
#include <stdexcept>

#include "grover/bethe_spectrum.hpp"
#include "grover/periodicity.hpp"
#include "grover/walk.hpp"

using namespace grover;

namespace {

std::vector<int> ones(std::size_t k) { return std::vector<int>(k, 1); }

std::vector<int> cat(std::initializer_list<std::vector<int>> parts) {
  std::vector<int> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// Every member of the periodic families built forward from its parameters,
// with its period, filtered to the given bounds.
std::map<std::vector<int>, std::uint64_t> periodic_families(std::size_t max_levels, int max_degree,
                                                            std::size_t max_vertices) {
  std::map<std::vector<int>, std::uint64_t> out;
  auto add = [&](const std::vector<int>& d, std::uint64_t period) {
    if (d.empty() || d.size() > max_levels) return;
    for (int x : d)
      if (x > max_degree) return;
    if (BetheSpec(d).vertex_count() > max_vertices) return;
    out.emplace(d, period);
  };
  for (std::size_t n = 1; n <= max_levels; ++n) add(ones(n), 2 * n);
  for (std::size_t k = 1; k <= max_levels; ++k)
    for (int m = 2; m <= max_degree; ++m) {
      add(cat({{m}, ones(k - 1)}), 4 * k);
      add(cat({ones(k), {m}, ones(k - 1)}), 4 * k);
      if (m == 2) add(cat({ones(k), {2}, ones(k - 1), {3}, ones(k - 1)}), 12 * k);
      add(cat({{m}, ones(k - 1), {3}, ones(k - 1)}), 12 * k);
    }
  return out;
}

}  // namespace

TEST_CASE("classifier examples") {
  auto c = classify_bethe(BetheSpec({1, 1, 1}));
  CHECK(c.primary.family == Family::Path);
  CHECK(c.period() == 6u);

  c = classify_bethe(BetheSpec({1, 1, 2, 1, 3, 1}));
  CHECK(c.primary.family == Family::SubdividedB123);
  CHECK(c.primary.k == 2);
  CHECK(c.period() == 24u);

  c = classify_bethe(BetheSpec({2, 1, 3, 1}));
  CHECK(c.primary.family == Family::SubdividedBs3);
  CHECK(c.primary.s == 2);
  CHECK(c.primary.k == 2);
  CHECK(c.period() == 24u);

  c = classify_bethe(BetheSpec({2, 2}));
  CHECK(c.primary.family == Family::Aperiodic);
  CHECK_FALSE(c.period());
}

TEST_CASE("overlapping families agree on the period") {
  // (2, 1^{k-1}) is both S_k(ST_3) and the path P_{2k+1}.
  for (std::size_t k = 1; k <= 5; ++k) {
    const auto c = classify_bethe(BetheSpec(cat({{2}, ones(k - 1)})));
    CHECK(c.primary.family == Family::SubdividedStar);
    CHECK(c.primary.l == 3);
    REQUIRE(c.matches.size() == 2);
    CHECK(c.matches[1].family == Family::Path);
    CHECK(c.matches[1].n == 2 * k);
    CHECK(c.matches[0].period == c.matches[1].period);
  }
  const auto leaf_rooted = classify_bethe(BetheSpec({1, 1, 4, 1}));
  CHECK(leaf_rooted.primary.family == Family::SubdividedStar);
  CHECK(leaf_rooted.primary.l == 6);
  CHECK(leaf_rooted.period() == 8u);
}

TEST_CASE("spectral route examples") {
  auto v = spectral_period_bethe(BetheSpec({1, 1}));
  CHECK(v.period == 4u);
  REQUIRE(v.evidence.size() == 1);
  CHECK(v.evidence[0].transform == Polynomial{-1, 0, 1} * Polynomial{-1, 0, 0, 0, 1});

  v = spectral_period_bethe(BetheSpec({1, 2, 3}));
  CHECK(v.period == 12u);
  REQUIRE(v.evidence.size() == 3);
  CHECK(v.evidence[1].transform == Polynomial{1, 0, -1, 0, 1});

  v = spectral_period_bethe(BetheSpec({2, 2}));
  CHECK_FALSE(v.periodic());
  REQUIRE(v.witness);
  const auto& w = v.evidence[*v.witness];
  CHECK(w.transform == Polynomial(std::vector<Rational>{1, 0, make_rational(-2, 3), 0, 1}));
  CHECK_FALSE(w.transform.has_integer_coefficients());
}

TEST_CASE("spectral route on general graphs") {
  CHECK(spectral_period_graph(cycle_graph(3)).period == 3u);
  CHECK(spectral_period_graph(complete_bipartite_graph(2, 3)).period == 4u);
  CHECK(spectral_period_graph(complete_bipartite_graph(3, 3)).period == 4u);
  CHECK(spectral_period_graph(Graph(2, {{0, 1}})).period == 2u);
  CHECK(spectral_period_graph(cycle_graph(5)).period == 5u);
  CHECK(spectral_period_graph(cycle_graph(6)).period == 6u);
  const auto k4 = spectral_period_graph(complete_graph(4));
  CHECK_FALSE(k4.periodic());
  CHECK(k4.witness);
  CHECK_FALSE(spectral_period_graph(complete_graph(5)).periodic());
  CHECK_THROWS_AS(spectral_period_graph(complete_graph(8), 5), std::length_error);
}

TEST_CASE("graph and tree spectral routes agree") {
  for (const auto& spec : enumerate_bethe(3, 3, 30)) {
    const auto tree = spectral_period_bethe(spec);
    const auto graph = spectral_period_graph(bethe_graph(spec).graph);
    CHECK(tree.period == graph.period);
  }
}

TEST_CASE("agreement harness") {
  auto r = verify_agreement(BetheSpec({1, 1, 2, 1, 3, 1}));
  CHECK(r.agreement);
  CHECK(r.classifier.period() == 24u);
  CHECK(r.spectral.period == 24u);
  CHECK(r.bruteforce.status == BruteStatus::Period);
  CHECK(r.bruteforce.period == 24);

  r = verify_agreement(BetheSpec({2, 3}));
  CHECK(r.agreement);
  CHECK(r.spectral.period == 12u);
  CHECK(r.bruteforce.period == 12);

  r = verify_agreement(BetheSpec({2, 2}));
  CHECK(r.agreement);
  CHECK_FALSE(r.spectral.periodic());
  CHECK(r.bruteforce.status == BruteStatus::NoneWithinCap);

  AgreementOptions quick;
  quick.run_bruteforce = false;
  quick.run_graph_spectral = false;
  r = verify_agreement(BetheSpec({3, 3, 3}), quick);
  CHECK(r.bruteforce.status == BruteStatus::Skipped);
  CHECK_FALSE(r.graph_spectral);
  CHECK(r.agreement);
}

TEST_CASE("brute force confirms periods exactly and minimally") {
  for (const auto& d : std::vector<std::vector<int>>{{1, 1, 1}, {3, 1}, {1, 3}, {2, 3}, {1, 2, 3}}) {
    const BetheSpec spec(d);
    const auto u = build_grover(bethe_graph(spec).graph);
    const auto period = *classify_bethe(spec).period();
    CHECK(bruteforce_period(u, period) == period);
    CHECK_FALSE(bruteforce_period(u, period - 1));
  }
}

TEST_CASE("enumeration") {
  const auto small = enumerate_bethe(2, 2, 5);
  CHECK(small == std::vector<BetheSpec>{BetheSpec({1}), BetheSpec({1, 1}), BetheSpec({1, 2}), BetheSpec({2}),
                                        BetheSpec({2, 1})});
  CHECK(enumerate_bethe(1, 1, 2) == std::vector<BetheSpec>{BetheSpec({1})});
  CHECK(enumerate_bethe(3, 3, 1).empty());
  CHECK_THROWS_AS(enumerate_bethe(0, 3, 10), std::invalid_argument);

  const auto all = enumerate_bethe(4, 3, 40);
  CHECK(std::is_sorted(all.begin(), all.end()));
  std::size_t brute_count = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<int> d(n, 1);
    while (true) {
      if (BetheSpec(d).vertex_count() <= 40) ++brute_count;
      std::size_t i = n;
      while (i > 0 && d[i - 1] == 3) d[--i] = 1;
      if (i == 0) break;
      ++d[i - 1];
    }
  }
  CHECK(all.size() == brute_count);
}

TEST_CASE("age segmentation") {
  const auto seg = segment_ages(BetheSpec({2, 1, 3, 1}));
  CHECK(seg.ages == std::vector<std::size_t>{2, 4});
  CHECK(seg.degrees == std::vector<int>{3, 2});
  CHECK(segment_ages(BetheSpec({1, 1})).ages.empty());
}

TEST_CASE("two branching ages: integral p_{K2} transform only for k1 = k2 and d1 = 3") {
  std::size_t seen = 0;
  for (const auto& spec : enumerate_bethe(6, 4, 200)) {
    const auto seg = segment_ages(spec);
    if (seg.ages.size() != 2) continue;
    ++seen;
    const std::size_t k1 = seg.ages[0];
    const std::size_t k2 = seg.ages[1] - seg.ages[0];
    const Polynomial t = zhukovskij_transform(p_sequence(spec)[seg.ages[1]]);
    const bool integral = t.has_integer_coefficients();
    CHECK(integral == (k1 == k2 && seg.degrees[0] == 3));
  }
  CHECK(seen > 50);
}

TEST_CASE("three or more branching ages are never periodic") {
  std::size_t seen = 0;
  for (const auto& spec : enumerate_bethe(6, 3, 400)) {
    if (segment_ages(spec).ages.size() < 3) continue;
    ++seen;
    const auto v = spectral_period_bethe(spec);
    CHECK_FALSE(v.periodic());
    REQUIRE(v.witness);
    CHECK_FALSE(v.evidence[*v.witness].transform.has_integer_coefficients());
  }
  CHECK(seen > 20);
}

TEST_CASE("periodic specs are exactly the closed-form families") {
  const auto expected = periodic_families(5, 4, 60);
  std::map<std::vector<int>, std::uint64_t> spectral, classified;
  for (const auto& spec : enumerate_bethe(5, 4, 60)) {
    const auto v = spectral_period_bethe(spec);
    if (v.periodic()) spectral.emplace(spec.degrees(), *v.period);
    if (const auto p = classify_bethe(spec).period()) classified.emplace(spec.degrees(), *p);
  }
  CHECK(spectral == expected);
  CHECK(classified == expected);
}

#include "grover/periodicity.hpp"

#include <numeric>
#include <stdexcept>

#include "grover/bethe_spectrum.hpp"
#include "grover/spectrum.hpp"
#include "grover/walk.hpp"

namespace grover {

std::string to_string(Family f) {
  switch (f) {
    case Family::Path: return "Path";
    case Family::SubdividedStar: return "SubdividedStar";
    case Family::SubdividedB123: return "SubdividedB123";
    case Family::SubdividedBs3: return "SubdividedBs3";
    case Family::Aperiodic: return "Aperiodic";
  }
  return "Unknown";
}

namespace {

// Spec of the form: ones everywhere except the listed positions.
bool ones_except(const std::vector<int>& d, std::initializer_list<std::pair<std::size_t, int>> fixed) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    int want = 1;
    for (auto [pos, value] : fixed)
      if (pos == i) want = value;
    if (want != 0 && d[i] != want) return false;
  }
  return true;
}

}  // namespace

Classification classify_bethe(const BetheSpec& spec) {
  const auto& d = spec.degrees();
  const std::size_t n = d.size();
  Classification c;
  auto add = [&c](FamilyMatch m) { c.matches.push_back(m); };

  if (ones_except(d, {})) add({Family::Path, n, 0, 0, 0, 2 * n});

  // (m, 1^{k-1}): star rooted at its centre. m = 2 is also the path P_{2k+1}.
  if (d[0] >= 2 && ones_except(d, {{0, 0}})) {
    const std::uint64_t k = n;
    add({Family::SubdividedStar, 0, k, static_cast<std::uint64_t>(d[0]) + 1, 0, 4 * k});
    if (d[0] == 2) add({Family::Path, 2 * k, 0, 0, 0, 4 * k});
  }
  // (1^k, m, 1^{k-1}): star rooted at a leaf.
  if (n % 2 == 0) {
    const std::size_t k = n / 2;
    if (d[k] >= 2 && ones_except(d, {{k, 0}}))
      add({Family::SubdividedStar, 0, k, static_cast<std::uint64_t>(d[k]) + 2, 0, 4 * k});
  }
  // (1^k, 2, 1^{k-1}, 3, 1^{k-1})
  if (n % 3 == 0) {
    const std::size_t k = n / 3;
    if (ones_except(d, {{k, 2}, {2 * k, 3}})) add({Family::SubdividedB123, 0, k, 0, 0, 12 * k});
  }
  // (s, 1^{k-1}, 3, 1^{k-1}), s >= 2
  if (n % 2 == 0) {
    const std::size_t k = n / 2;
    if (d[0] >= 2 && ones_except(d, {{0, 0}, {k, 3}}))
      add({Family::SubdividedBs3, 0, k, 0, static_cast<std::uint64_t>(d[0]), 12 * k});
  }

  if (c.matches.empty()) add({Family::Aperiodic, 0, 0, 0, 0, 0});
  c.primary = c.matches.front();
  return c;
}

namespace {

TransformEvidence analyse(std::string label, const Polynomial& p) {
  TransformEvidence ev;
  ev.label = std::move(label);
  ev.polynomial = p;
  ev.transform = zhukovskij_transform(p);
  ev.factorization = cyclotomic_product_test(ev.transform);
  return ev;
}

}  // namespace

SpectralVerdict spectral_period_bethe(const BetheSpec& spec) {
  const std::size_t n = spec.levels();
  const auto p = p_sequence(spec);
  const auto omega = branching_levels(spec);
  std::vector<std::size_t> indices(omega.begin(), omega.end());
  indices.push_back(n + 1);

  SpectralVerdict v;
  std::uint64_t period = 1;
  for (std::size_t i : indices) {
    v.evidence.push_back(analyse("p_" + std::to_string(i), p[i]));
    const auto& fac = v.evidence.back().factorization;
    if (!fac) {
      v.witness = v.evidence.size() - 1;
      return v;
    }
    period = std::lcm(period, order_lcm(*fac));
  }
  v.period = period;
  return v;
}

SpectralVerdict spectral_period_graph(const Graph& g, std::size_t vertex_limit) {
  if (g.vertex_count() > vertex_limit)
    throw std::length_error("graph has " + std::to_string(g.vertex_count()) + " vertices, limit is " +
                            std::to_string(vertex_limit));
  const Polynomial chi = charpoly_exact(transition_matrix(g));
  SpectralVerdict v;
  v.evidence.push_back(analyse("char(T)", chi));
  const auto& fac = v.evidence.back().factorization;
  if (!fac) {
    v.witness = 0;
    return v;
  }
  std::uint64_t period = order_lcm(*fac);
  const auto lifted = lift_spectrum(chi, betti_and_bipartite(g), g.arc_count());
  if (lifted.mult_minus_one > 0) period = std::lcm(period, std::uint64_t{2});
  v.period = period;
  return v;
}

PeriodicityReport verify_agreement(const BetheSpec& spec, const AgreementOptions& options) {
  PeriodicityReport r{spec, classify_bethe(spec), spectral_period_bethe(spec), std::nullopt, {}, false};
  const BetheTree tree = bethe_graph(spec);

  if (options.run_graph_spectral && tree.graph.vertex_count() <= options.graph_vertex_limit)
    r.graph_spectral = spectral_period_graph(tree.graph, options.graph_vertex_limit);

  const std::uint64_t cap = options.cap.value_or(r.spectral.period ? 4 * *r.spectral.period : 1000);
  r.bruteforce.cap = cap;
  if (options.run_bruteforce && cap * tree.graph.arc_count() <= options.bruteforce_budget) {
    const auto found = bruteforce_period(build_grover(tree.graph), cap);
    r.bruteforce.status = found ? BruteStatus::Period : BruteStatus::NoneWithinCap;
    r.bruteforce.period = found.value_or(0);
  }

  bool ok = r.classifier.period() == r.spectral.period;
  if (r.graph_spectral) ok = ok && r.graph_spectral->period == r.spectral.period;
  switch (r.bruteforce.status) {
    case BruteStatus::Period: ok = ok && r.spectral.period == r.bruteforce.period; break;
    case BruteStatus::NoneWithinCap: ok = ok && !r.spectral.period; break;
    case BruteStatus::Skipped: break;
  }
  r.agreement = ok;
  return r;
}

void for_each_bethe(std::size_t max_levels, int max_degree, std::size_t max_vertices,
                    const std::function<void(const BetheSpec&)>& visit) {
  if (max_levels < 1 || max_degree < 1 || max_vertices < 1)
    throw std::invalid_argument("enumeration bounds must be positive");
  std::vector<int> d;
  // Depth-first over prefixes; a prefix's vertex count only grows when extended.
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t vertices, std::size_t last_level) {
    for (int deg = 1; deg <= max_degree; ++deg) {
      const std::size_t level = last_level * static_cast<std::size_t>(deg);
      if (vertices + level > max_vertices) break;
      d.push_back(deg);
      visit(BetheSpec(d));
      if (d.size() < max_levels) extend(vertices + level, level);
      d.pop_back();
    }
  };
  extend(1, 1);
}

std::vector<BetheSpec> enumerate_bethe(std::size_t max_levels, int max_degree, std::size_t max_vertices) {
  std::vector<BetheSpec> out;
  for_each_bethe(max_levels, max_degree, max_vertices, [&out](const BetheSpec& s) { out.push_back(s); });
  return out;
}

AgeSegmentation segment_ages(const BetheSpec& spec) {
  AgeSegmentation seg;
  const std::size_t n = spec.levels();
  for (std::size_t age : branching_levels(spec)) {
    seg.ages.push_back(age);
    seg.degrees.push_back(spec.d(n - age));
  }
  return seg;
}

}  // namespace grover

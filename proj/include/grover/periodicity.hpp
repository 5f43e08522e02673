#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "grover/cyclotomic.hpp"
#include "grover/graph.hpp"
#include "grover/polynomial.hpp"

namespace grover {

enum class Family { Path, SubdividedStar, SubdividedB123, SubdividedBs3, Aperiodic };

std::string to_string(Family f);

/// One closed-form family a spec belongs to. Unused parameters are zero.
struct FamilyMatch {
  Family family = Family::Aperiodic;
  std::uint64_t n = 0;  // Path: P_{n+1}
  std::uint64_t k = 0;  // subdivision factor
  std::uint64_t l = 0;  // SubdividedStar: ST_l
  std::uint64_t s = 0;  // SubdividedBs3
  std::uint64_t period = 0;
};

struct Classification {
  FamilyMatch primary;               // first match in pattern order
  std::vector<FamilyMatch> matches;  // every matching family
  std::optional<std::uint64_t> period() const {
    if (primary.family == Family::Aperiodic) return std::nullopt;
    return primary.period;
  }
};

/// Pattern match against the periodic Bethe families, in order: path,
/// subdivided star rooted at its centre, subdivided star rooted at a leaf,
/// S_k(B(1,2,3)), S_k(B(s,3)).
Classification classify_bethe(const BetheSpec& spec);

/// Transform and cyclotomic decomposition of one polynomial.
struct TransformEvidence {
  std::string label;  // e.g. "p_3" or "char(T)"
  Polynomial polynomial;
  Polynomial transform;
  std::optional<CyclotomicFactorization> factorization;
};

struct SpectralVerdict {
  std::optional<std::uint64_t> period;  // nullopt: not periodic
  std::vector<TransformEvidence> evidence;
  /// Index into evidence of the first non-cyclotomic transform.
  std::optional<std::size_t> witness;
  bool periodic() const { return period.has_value(); }
};

/// Tests p_i for every branching age i and p_{n+1}; period is the lcm of
/// the cyclotomic orders. Stops at the first non-cyclotomic transform.
SpectralVerdict spectral_period_bethe(const BetheSpec& spec);

inline constexpr std::size_t kDefaultGraphVertexLimit = 120;

/// Exact char(T) of an arbitrary graph, lifted through the Grover spectral
/// map. Throws std::length_error above the vertex limit.
SpectralVerdict spectral_period_graph(const Graph& g, std::size_t vertex_limit = kDefaultGraphVertexLimit);

enum class BruteStatus { Period, NoneWithinCap, Skipped };

struct BruteVerdict {
  BruteStatus status = BruteStatus::Skipped;
  std::uint64_t period = 0;
  std::uint64_t cap = 0;
};

struct AgreementOptions {
  bool run_graph_spectral = true;
  std::size_t graph_vertex_limit = 60;
  bool run_bruteforce = true;
  /// Brute force runs only when cap * arcs stays within this budget.
  std::uint64_t bruteforce_budget = 200000;
  /// Overrides the default cap (4 x spectral period, else 1000) when set.
  std::optional<std::uint64_t> cap;
};

struct PeriodicityReport {
  BetheSpec spec;
  Classification classifier;
  SpectralVerdict spectral;
  std::optional<SpectralVerdict> graph_spectral;
  BruteVerdict bruteforce;
  bool agreement = false;
};

/// Runs every route and records whether their verdicts coincide. A
/// disagreement is reported, never thrown.
PeriodicityReport verify_agreement(const BetheSpec& spec, const AgreementOptions& options = {});

/// Every spec with n <= max_levels, 1 <= d(i) <= max_degree and at most
/// max_vertices vertices, in lexicographic order of the degree sequence.
std::vector<BetheSpec> enumerate_bethe(std::size_t max_levels, int max_degree, std::size_t max_vertices);

/// Same enumeration, streamed; the callback sees specs in lexicographic order.
void for_each_bethe(std::size_t max_levels, int max_degree, std::size_t max_vertices,
                    const std::function<void(const BetheSpec&)>& visit);

/// Branching ages K_1 < K_2 < ... with their child counts d(n - K_i).
struct AgeSegmentation {
  std::vector<std::size_t> ages;
  std::vector<int> degrees;
};

AgeSegmentation segment_ages(const BetheSpec& spec);

}  // namespace grover

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace grover {

using Vertex = std::size_t;
using ArcId = std::size_t;

struct Arc {
  Vertex origin;
  Vertex terminus;
  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Finite simple connected graph on vertices 0..n-1 with at least one edge.
///
/// Arcs are the two orientations of every edge, numbered lexicographically
/// by (origin, terminus). Immutable after construction.
class Graph {
 public:
  /// Validates and builds; throws std::invalid_argument on loops,
  /// duplicate edges, out-of-range endpoints, fewer than two vertices, or a
  /// disconnected result.
  Graph(std::size_t vertex_count, const std::vector<std::pair<Vertex, Vertex>>& edges);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return arcs_.size() / 2; }
  std::size_t arc_count() const { return arcs_.size(); }

  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }

  const Arc& arc(ArcId a) const { return arcs_[a]; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  /// Index of arc (u, v); throws std::out_of_range when uv is not an edge.
  ArcId arc_index(Vertex u, Vertex v) const;
  ArcId reverse(ArcId a) const { return reverse_[a]; }
  /// Arcs leaving v, in increasing terminus order (contiguous block).
  std::pair<ArcId, ArcId> out_arcs(Vertex v) const { return {first_out_[v], first_out_[v + 1]}; }

  /// Edges (u < v) in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Arc> arcs_;
  std::vector<ArcId> first_out_;
  std::vector<ArcId> reverse_;
};

/// Degree sequence d(0..n-1) of a generalized Bethe tree; every vertex on
/// level i has d(i) children, level n holds the leaves.
class BetheSpec {
 public:
  explicit BetheSpec(std::vector<int> degrees);

  std::size_t levels() const { return degrees_.size(); }  // n
  /// d(i) for 0 <= i <= n; d(n) = 0.
  int d(std::size_t i) const { return i < degrees_.size() ? degrees_[i] : 0; }
  const std::vector<int>& degrees() const { return degrees_; }

  /// |C_i| = prod_{j<i} d(j), for i in [0, n].
  std::size_t level_size(std::size_t i) const;
  std::size_t vertex_count() const;

  /// "2,3,1"
  std::string to_string() const;
  friend bool operator==(const BetheSpec&, const BetheSpec&) = default;
  friend auto operator<=>(const BetheSpec&, const BetheSpec&) = default;

 private:
  std::vector<int> degrees_;
};

BetheSpec parse_bethe_spec(std::string_view text);

struct LevelPartition {
  std::vector<std::vector<Vertex>> levels;  // C_0..C_n
  std::vector<Vertex> parent;               // parent[root] == root
  std::vector<std::size_t> level_of;
};

struct BetheTree {
  BetheSpec spec;
  Graph graph;
  LevelPartition partition;
};

/// Rooted tree numbered breadth-first: level by level, children grouped in
/// parent order.
BetheTree bethe_graph(const BetheSpec& spec);

/// Spec of the k-subdivision: each d(i) followed by k-1 ones.
BetheSpec subdivide_spec(const BetheSpec& spec, int k);
BetheSpec path_spec(int vertices);
BetheSpec star_spec(int vertices);

/// Replaces every edge with a path through k-1 new vertices.
Graph subdivide_graph(const Graph& g, int k);

/// Recovers the Bethe spec of a tree rooted at `root`, or throws
/// std::invalid_argument when the tree is not a generalized Bethe tree
/// from that root.
BetheSpec extract_bethe_spec(const Graph& g, Vertex root);

struct Topology {
  std::size_t betti = 0;
  bool bipartite = false;
};

Topology betti_and_bipartite(const Graph& g);

/// Whitespace-separated 0-based vertex pairs.
Graph load_edge_list(std::string_view text);

Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph complete_bipartite_graph(std::size_t r, std::size_t s);

}  // namespace grover

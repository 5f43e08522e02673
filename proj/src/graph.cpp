#include "grover/graph.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace grover {

namespace {

bool is_connected(const std::vector<std::vector<Vertex>>& adj) {
  if (adj.empty()) return false;
  std::vector<bool> seen(adj.size(), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == adj.size();
}

}  // namespace

Graph::Graph(std::size_t vertex_count, const std::vector<std::pair<Vertex, Vertex>>& edges)
    : adjacency_(vertex_count) {
  if (vertex_count < 2) throw std::invalid_argument("graph needs at least 2 vertices");
  if (edges.empty()) throw std::invalid_argument("graph has no edges");
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count)
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (Vertex v = 0; v < vertex_count; ++v) {
    auto& nb = adjacency_[v];
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw std::invalid_argument("duplicate edge at vertex " + std::to_string(v));
  }
  if (!is_connected(adjacency_)) throw std::invalid_argument("graph is disconnected");

  first_out_.resize(vertex_count + 1);
  for (Vertex v = 0; v < vertex_count; ++v) {
    first_out_[v] = arcs_.size();
    for (Vertex w : adjacency_[v]) arcs_.push_back({v, w});
  }
  first_out_[vertex_count] = arcs_.size();
  reverse_.resize(arcs_.size());
  for (ArcId a = 0; a < arcs_.size(); ++a) reverse_[a] = arc_index(arcs_[a].terminus, arcs_[a].origin);
}

ArcId Graph::arc_index(Vertex u, Vertex v) const {
  if (u >= vertex_count()) throw std::out_of_range("vertex out of range");
  const auto& nb = adjacency_[u];
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) throw std::out_of_range("no arc " + std::to_string(u) + "->" + std::to_string(v));
  return first_out_[u] + static_cast<ArcId>(it - nb.begin());
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const Arc& a : arcs_)
    if (a.origin < a.terminus) out.emplace_back(a.origin, a.terminus);
  return out;
}

BetheSpec::BetheSpec(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  if (degrees_.empty()) throw std::invalid_argument("Bethe spec must have at least one level");
  for (int d : degrees_)
    if (d < 1) throw std::invalid_argument("Bethe spec degrees must be >= 1, got " + std::to_string(d));
}

std::size_t BetheSpec::level_size(std::size_t i) const {
  if (i > degrees_.size()) throw std::out_of_range("level beyond the leaves");
  std::size_t s = 1;
  for (std::size_t j = 0; j < i; ++j) s *= static_cast<std::size_t>(degrees_[j]);
  return s;
}

std::size_t BetheSpec::vertex_count() const {
  std::size_t total = 0;
  for (std::size_t i = 0; i <= levels(); ++i) total += level_size(i);
  return total;
}

std::string BetheSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(degrees_[i]);
  }
  return out;
}

BetheSpec parse_bethe_spec(std::string_view text) {
  std::vector<int> degrees;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int value = 0;
    auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || end != tok.data() + tok.size())
      throw std::invalid_argument("malformed Bethe spec '" + std::string(text) + "'");
    degrees.push_back(value);
    pos = comma + 1;
  }
  return BetheSpec(std::move(degrees));
}

BetheTree bethe_graph(const BetheSpec& spec) {
  const std::size_t n = spec.levels();
  LevelPartition part;
  part.levels.resize(n + 1);
  part.levels[0] = {0};
  part.parent = {0};
  part.level_of = {0};
  std::vector<std::pair<Vertex, Vertex>> edges;
  Vertex next = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (Vertex p : part.levels[i]) {
      for (int c = 0; c < spec.d(i); ++c) {
        part.levels[i + 1].push_back(next);
        part.parent.push_back(p);
        part.level_of.push_back(i + 1);
        edges.emplace_back(p, next);
        ++next;
      }
    }
  }
  Graph g(next, edges);
  return BetheTree{spec, std::move(g), std::move(part)};
}

BetheSpec subdivide_spec(const BetheSpec& spec, int k) {
  if (k < 1) throw std::invalid_argument("subdivision factor must be >= 1");
  std::vector<int> out;
  for (int d : spec.degrees()) {
    out.push_back(d);
    out.insert(out.end(), static_cast<std::size_t>(k - 1), 1);
  }
  return BetheSpec(std::move(out));
}

BetheSpec path_spec(int vertices) {
  if (vertices < 2) throw std::invalid_argument("path needs at least 2 vertices");
  return BetheSpec(std::vector<int>(static_cast<std::size_t>(vertices - 1), 1));
}

BetheSpec star_spec(int vertices) {
  if (vertices < 3) throw std::invalid_argument("star needs at least 3 vertices");
  return BetheSpec({vertices - 1});
}

Graph subdivide_graph(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("subdivision factor must be >= 1");
  std::vector<std::pair<Vertex, Vertex>> edges;
  Vertex next = g.vertex_count();
  for (auto [u, v] : g.edges()) {
    Vertex prev = u;
    for (int j = 1; j < k; ++j) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, v);
  }
  return Graph(next, edges);
}

BetheSpec extract_bethe_spec(const Graph& g, Vertex root) {
  if (g.edge_count() + 1 != g.vertex_count()) throw std::invalid_argument("graph is not a tree");
  std::vector<std::size_t> depth(g.vertex_count(), SIZE_MAX);
  std::vector<std::vector<Vertex>> levels{{root}};
  depth[root] = 0;
  std::vector<int> degrees;
  while (true) {
    const auto& level = levels.back();
    std::vector<Vertex> next;
    int common = -1;
    for (Vertex v : level) {
      int children = 0;
      for (Vertex w : g.neighbors(v))
        if (depth[w] == SIZE_MAX) {
          depth[w] = depth[v] + 1;
          next.push_back(w);
          ++children;
        }
      if (common == -1) common = children;
      if (children != common) throw std::invalid_argument("levels are not equitable");
    }
    if (common == 0) break;
    degrees.push_back(common);
    levels.push_back(std::move(next));
  }
  return BetheSpec(std::move(degrees));
}

Topology betti_and_bipartite(const Graph& g) {
  Topology t;
  t.betti = g.edge_count() + 1 - g.vertex_count();
  std::vector<int> color(g.vertex_count(), -1);
  std::queue<Vertex> q;
  color[0] = 0;
  q.push(0);
  t.bipartite = true;
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (Vertex w : g.neighbors(v)) {
      if (color[w] == -1) {
        color[w] = 1 - color[v];
        q.push(w);
      } else if (color[w] == color[v]) {
        t.bipartite = false;
      }
    }
  }
  return t;
}

Graph load_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::pair<Vertex, Vertex>> edges;
  Vertex max_vertex = 0;
  auto parse = [](const std::string& s) -> Vertex {
    Vertex v = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || end != s.data() + s.size())
      throw std::invalid_argument("malformed vertex id '" + s + "'");
    return v;
  };
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (tokens.size() != 2)
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected two vertex ids");
    Vertex u = parse(tokens[0]), v = parse(tokens[1]);
    max_vertex = std::max({max_vertex, u, v});
    edges.emplace_back(u, v);
  }
  if (edges.empty()) throw std::invalid_argument("edge list is empty");
  return Graph(max_vertex + 1, edges);
}

Graph cycle_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph complete_bipartite_graph(std::size_t r, std::size_t s) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < r; ++u)
    for (Vertex v = 0; v < s; ++v) edges.emplace_back(u, r + v);
  return Graph(r + s, edges);
}

}  // namespace grover

#include "recon/graph.hpp"

#include <algorithm>
#include <functional>
#include <istream>

#include "recon/errors.hpp"

namespace recon {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw PreconditionError("vertex count " + std::to_string(n) + " outside 0..32");
  }
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::from_rows(std::span<const Mask> rows) {
  Graph g(static_cast<int>(rows.size()));
  const Mask all = low_mask(g.n_);
  for (int v = 0; v < g.n_; ++v) {
    if ((rows[v] & ~all) != 0 || (rows[v] & bit(v)) != 0) {
      throw PreconditionError("adjacency row out of range or self-loop");
    }
    g.adj_[v] = rows[v];
  }
  for (int v = 0; v < g.n_; ++v) {
    for (int u : VertexSet(g.adj_[v])) {
      if (!g.adjacent(u, v)) throw PreconditionError("adjacency rows not symmetric");
    }
  }
  return g;
}

int Graph::size() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
  return twice / 2;
}

void Graph::add_edge(int u, int v) {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw PreconditionError("invalid edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
  adj_[u] &= ~bit(v);
  adj_[v] &= ~bit(u);
}

int Graph::add_vertex(Mask nbrs) {
  if (n_ == kMaxVertices) throw PreconditionError("graph already has 32 vertices");
  if ((nbrs & ~low_mask(n_)) != 0) throw PreconditionError("neighbor outside graph");
  const int v = n_++;
  adj_[v] = nbrs;
  for (int u : VertexSet(nbrs)) adj_[u] |= bit(v);
  return v;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < n_; ++v) {
    for (int u : VertexSet(adj_[v] & low_mask(v))) out.emplace_back(u, v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices())) throw PreconditionError("vertex set not contained in graph");
  std::array<Mask, kMaxVertices> rows{};
  int i = 0;
  for (int v : s) {
    // Compress the neighbor bits selected by s down to consecutive positions.
    Mask nb = g.neighbors(v) & s.mask();
    Mask packed = 0;
    int j = 0;
    for (int u : s) {
      if ((nb >> u) & 1u) packed |= bit(j);
      ++j;
    }
    rows[i++] = packed;
  }
  return Graph::from_rows(std::span<const Mask>(rows.data(), static_cast<std::size_t>(i)));
}

Graph delete_vertex(const Graph& g, int v) {
  return induced_subgraph(g, g.vertices().without(v));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(a.order() + u, a.order() + v);
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < v; ++u) g.add_edge(u, v);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

// graph6 ------------------------------------------------------------------

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw Graph6Error("empty graph6 record");
  const auto head = static_cast<unsigned char>(text[0]);
  if (head < 63 || head > 126) throw Graph6Error("malformed graph6 length header");
  if (head == 126) throw Graph6Error("graph6 records above 62 vertices are not supported");
  const int n = head - 63;
  if (n > kMaxVertices) throw Graph6Error("graph6 record has more than 32 vertices");

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t chars = (bits + 5) / 6;
  if (text.size() < 1 + chars) throw Graph6Error("graph6 payload too short");
  if (text.size() > 1 + chars) throw Graph6Error("trailing garbage after graph6 record");

  Graph g(n);
  std::size_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const auto c = static_cast<unsigned char>(text[1 + k / 6]);
      if (c < 63 || c > 126) throw Graph6Error("non-printable graph6 payload byte");
      if (((c - 63) >> (5 - k % 6)) & 1) g.add_edge(u, v);
    }
  }
  for (std::size_t i = 1; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw Graph6Error("non-printable graph6 payload byte");
  }
  if (bits % 6 != 0) {
    const auto last = static_cast<unsigned char>(text.back()) - 63;
    if ((last & ((1 << (6 - bits % 6)) - 1)) != 0) throw Graph6Error("nonzero graph6 padding bits");
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0;
  int used = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>(63 + (acc << (6 - used))));
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    std::string_view view = line;
    if (view.starts_with(">>graph6<<")) view.remove_prefix(10);
    if (view.empty()) continue;
    out.push_back(parse_graph6(view));
  }
  return out;
}

// Metric and structural primitives ------------------------------------------

std::vector<int> distances_from(const Graph& g, int v) {
  std::vector<int> dist(g.order(), kInfinity);
  dist[v] = 0;
  Mask seen = bit(v);
  Mask frontier = bit(v);
  for (int d = 1; frontier != 0; ++d) {
    Mask next = 0;
    for (int u : VertexSet(frontier)) next |= g.neighbors(u);
    next &= ~seen;
    for (int u : VertexSet(next)) dist[u] = d;
    seen |= next;
    frontier = next;
  }
  return dist;
}

VertexSet k_ball(const Graph& g, int v, int k) {
  if (v < 0 || v >= g.order()) throw PreconditionError("vertex out of range");
  Mask seen = bit(v);
  Mask frontier = bit(v);
  for (int d = 0; d < k && frontier != 0; ++d) {
    Mask next = 0;
    for (int u : VertexSet(frontier)) next |= g.neighbors(u);
    frontier = next & ~seen;
    seen |= frontier;
  }
  return VertexSet(seen);
}

VertexSet component_of(const Graph& g, int v) { return k_ball(g, v, g.order()); }

int component_count(const Graph& g) {
  int count = 0;
  Mask left = g.vertices().mask();
  while (left != 0) {
    left &= ~component_of(g, std::countr_zero(left)).mask();
    ++count;
  }
  return count;
}

bool is_connected(const Graph& g) { return component_count(g) == 1; }

bool is_forest(const Graph& g) { return g.size() == g.order() - component_count(g); }

bool is_tree(const Graph& g) { return is_connected(g) && g.size() == g.order() - 1; }

int girth(const Graph& g) {
  // A BFS from every vertex sees every shortest cycle through its root.
  int best = kInfinity;
  const int n = g.order();
  std::vector<int> dist(n), parent(n);
  for (int r = 0; r < n; ++r) {
    std::fill(dist.begin(), dist.end(), -1);
    std::vector<int> queue{r};
    dist[r] = 0;
    parent[r] = -1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      if (2 * dist[u] + 1 >= best) break;
      for (int w : g.neighbor_set(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  return best;
}

int eccentricity(const Graph& g, int v) {
  const auto dist = distances_from(g, v);
  return *std::max_element(dist.begin(), dist.end());
}

int radius(const Graph& g) {
  if (!is_connected(g)) return kInfinity;
  int best = kInfinity;
  for (int v = 0; v < g.order(); ++v) best = std::min(best, eccentricity(g, v));
  return best;
}

int diameter(const Graph& g) {
  if (!is_connected(g)) return kInfinity;
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, eccentricity(g, v));
  return best;
}

std::vector<int> degree_list(const Graph& g) {
  std::vector<int> out;
  out.reserve(g.order());
  for (int v = 0; v < g.order(); ++v) out.push_back(g.degree(v));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

GraphMetrics metrics(const Graph& g) {
  GraphMetrics m;
  m.girth = girth(g);
  m.radius = radius(g);
  m.diameter = diameter(g);
  m.degrees = degree_list(g);
  m.components = component_count(g);
  m.acyclic = g.size() == g.order() - m.components;
  return m;
}

}  // namespace recon

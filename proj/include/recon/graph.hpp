#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace recon {

inline constexpr int kMaxVertices = 32;

/// Marker for an infinite girth, radius or diameter.
inline constexpr int kInfinity = std::numeric_limits<int>::max();

using Mask = std::uint32_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

constexpr Mask low_mask(int n) {
  return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1;
}

/// Subset of the vertices of an ambient graph, one bit per vertex.
class VertexSet {
 public:
  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(Mask rest) : rest_(rest) {}
    int operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      auto old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    Mask rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Mask mask) : mask_(mask) {}

  static constexpr VertexSet first(int n) { return VertexSet(low_mask(n)); }

  constexpr Mask mask() const { return mask_; }
  int size() const { return std::popcount(mask_); }
  bool empty() const { return mask_ == 0; }
  bool contains(int v) const { return (mask_ >> v) & 1u; }
  VertexSet with(int v) const { return VertexSet(mask_ | bit(v)); }
  VertexSet without(int v) const { return VertexSet(mask_ & ~bit(v)); }
  bool subset_of(VertexSet other) const { return (mask_ & ~other.mask_) == 0; }

  iterator begin() const { return iterator(mask_); }
  iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const { return {begin(), end()}; }

  friend bool operator==(VertexSet, VertexSet) = default;

 private:
  Mask mask_ = 0;
};

/// Simple undirected graph on at most 32 vertices, stored as neighbor masks.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_rows(std::span<const Mask> rows);

  int order() const { return n_; }
  int size() const;

  Mask neighbors(int v) const { return adj_[v]; }
  VertexSet neighbor_set(int v) const { return VertexSet(adj_[v]); }
  int degree(int v) const { return std::popcount(adj_[v]); }
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1u; }
  VertexSet vertices() const { return VertexSet::first(n_); }
  std::span<const Mask> rows() const { return {adj_.data(), static_cast<std::size_t>(n_)}; }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  /// Appends a vertex adjacent to `nbrs` and returns its index.
  int add_vertex(Mask nbrs = 0);

  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::array<Mask, kMaxVertices> adj_{};
};

/// Subgraph induced by `s`, relabeled 0..|s|-1 in increasing vertex order.
Graph induced_subgraph(const Graph& g, VertexSet s);
Graph delete_vertex(const Graph& g, int v);
Graph disjoint_union(const Graph& a, const Graph& b);

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);

// graph6 ------------------------------------------------------------------

Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);
/// Reads one graph per non-empty line; a leading ">>graph6<<" header is
/// accepted and stripped.
std::vector<Graph> read_graph6_stream(std::istream& in);

// Metric and structural primitives ------------------------------------------

/// BFS distances from `v`; unreachable vertices get kInfinity.
std::vector<int> distances_from(const Graph& g, int v);
VertexSet k_ball(const Graph& g, int v, int k);
VertexSet component_of(const Graph& g, int v);

int component_count(const Graph& g);
bool is_connected(const Graph& g);
bool is_forest(const Graph& g);
bool is_tree(const Graph& g);
int girth(const Graph& g);
int eccentricity(const Graph& g, int v);
int radius(const Graph& g);
int diameter(const Graph& g);
std::vector<int> degree_list(const Graph& g);
int max_degree(const Graph& g);

struct GraphMetrics {
  int girth = kInfinity;
  int radius = kInfinity;
  int diameter = kInfinity;
  std::vector<int> degrees;  // descending
  int components = 0;
  bool acyclic = true;
};

GraphMetrics metrics(const Graph& g);

}  // namespace recon

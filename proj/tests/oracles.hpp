#pragma once

// Brute-force reference implementations, independent of the library's
// canonical labeling, deck and counting code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "recon/graph.hpp"

namespace oracle {

using recon::Graph;

// Upper-triangle adjacency string, maximized over all vertex orders.
inline std::string brute_form(const Graph& g) {
  const int n = g.order();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::string best;
  do {
    std::string s;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s.push_back(g.adjacent(p[i], p[j]) ? '1' : '0');
    if (s > best || best.empty()) best = s;
  } while (std::next_permutation(p.begin(), p.end()));
  return std::to_string(n) + ":" + best;
}

inline bool brute_isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && brute_form(a) == brute_form(b);
}

using BruteDeck = std::map<std::string, std::uint64_t>;

inline BruteDeck brute_deck(const Graph& g, int k) {
  BruteDeck deck;
  const int n = g.order();
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
    if (std::popcount(s) != k) continue;
    std::vector<int> keep;
    for (int v = 0; v < n; ++v)
      if (s >> v & 1) keep.push_back(v);
    Graph card(k);
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (g.adjacent(keep[i], keep[j])) card.add_edge(i, j);
    ++deck[brute_form(card)];
  }
  return deck;
}

inline std::vector<int> bfs(const Graph& g, int s) {
  std::vector<int> dist(g.order(), -1);
  std::queue<int> q;
  dist[s] = 0;
  q.push(s);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v = 0; v < g.order(); ++v)
      if (g.adjacent(u, v) && dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
  }
  return dist;
}

// Number of unordered vertex pairs at distance exactly t (t >= 1).
inline std::uint64_t pairs_at_distance(const Graph& g, int t) {
  std::uint64_t c = 0;
  for (int u = 0; u < g.order(); ++u) {
    auto d = bfs(g, u);
    for (int v = u + 1; v < g.order(); ++v) c += d[v] == t;
  }
  return c;
}

// Induced m-vertex paths, by testing every m-subset.
inline std::uint64_t brute_induced_paths(const Graph& g, int m) {
  std::uint64_t c = 0;
  const int n = g.order();
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
    if (std::popcount(s) != m) continue;
    int edges = 0;
    std::vector<int> deg(n, 0);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if ((s >> u & 1) && (s >> v & 1) && g.adjacent(u, v)) ++edges, ++deg[u], ++deg[v];
    if (edges != m - 1) continue;
    bool ok = true;
    for (int u = 0; u < n; ++u)
      if ((s >> u & 1) && deg[u] > 2) ok = false;
    // m-1 edges, max degree 2: a path iff connected, i.e. not a cycle plus paths.
    if (!ok) continue;
    int start = -1;
    for (int u = 0; u < n; ++u)
      if (s >> u & 1) start = u;
    std::uint32_t seen = 1u << start, frontier = seen;
    while (frontier) {
      std::uint32_t next = 0;
      for (int u = 0; u < n; ++u)
        if (frontier >> u & 1)
          for (int v = 0; v < n; ++v)
            if ((s >> v & 1) && g.adjacent(u, v)) next |= 1u << v;
      frontier = next & ~seen;
      seen |= next;
    }
    c += seen == s;
  }
  return c;
}

// Vertices with two neighbours each starting a path of k-1 further edges
// that avoids v; checked on the BFS tree of the k-ball (valid at girth >= 2k+2).
inline int brute_k_centers(const Graph& g, int k) {
  int count = 0;
  for (int v = 0; v < g.order(); ++v) {
    auto d = bfs(g, v);
    // Branch = neighbour u of v; far vertex w at distance k whose shortest path goes via u.
    int branches = 0;
    for (int u = 0; u < g.order(); ++u) {
      if (!g.adjacent(u, v)) continue;
      Graph h = g;
      h.remove_edge(u, v);
      auto du = bfs(h, u);
      bool far = false;
      for (int w = 0; w < g.order(); ++w)
        if (d[w] == k && du[w] == k - 1) far = true;
      branches += far;
    }
    count += branches >= 2;
  }
  return count;
}

// Edges uv such that, with uv removed, both ends still reach distance k
// (no shortcut through the other end exists at girth >= 2k+3).
inline int brute_k_central_edges(const Graph& g, int k) {
  int count = 0;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) continue;
      Graph h = g;
      h.remove_edge(u, v);
      auto du = bfs(h, u), dv = bfs(h, v);
      bool a = false, b = false;
      for (int w = 0; w < g.order(); ++w) {
        if (du[w] == k) a = true;
        if (dv[w] == k) b = true;
      }
      count += a && b;
    }
  return count;
}

}  // namespace oracle

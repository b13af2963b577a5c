#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "recon/graph.hpp"

namespace recon {

/// Isomorphism-invariant identity of a graph: the graph6 text of its
/// canonical form. Equal codes exactly for isomorphic graphs.
struct CanonicalCode {
  std::string bytes;
  int order = 0;

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
};

struct CanonicalLabeling {
  /// labeling[i] is the vertex of the input placed at canonical position i.
  std::vector<int> labeling;
  Graph form;
  /// Automorphisms met during the search, as vertex maps. They are genuine
  /// automorphisms but need not generate the whole group.
  std::vector<std::vector<int>> automorphisms;
};

/// Partition refinement plus a backtracking search over individualizations,
/// pruned with the automorphisms it discovers. The canonical form is the
/// leaf with the lexicographically largest relabeled adjacency.
CanonicalLabeling canonical_labeling(const Graph& g);

CanonicalCode canonical_code(const Graph& g);
Graph canonical_form(const Graph& g);
Graph decode(const CanonicalCode& code);
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace recon

template <>
struct std::hash<recon::CanonicalCode> {
  std::size_t operator()(const recon::CanonicalCode& c) const noexcept {
    return std::hash<std::string>{}(c.bytes);
  }
};

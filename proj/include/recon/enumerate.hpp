#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "recon/canonical.hpp"
#include "recon/graph.hpp"

namespace recon {

/// Structural predicate used to restrict enumeration and search. Filters
/// handed to the enumerator must be hereditary: if a graph passes, every
/// induced subgraph passes.
using GraphFilter = std::function<bool(const Graph&)>;

namespace filters {
GraphFilter any();
GraphFilter forests();
GraphFilter triangle_free();
GraphFilter min_girth(int g);
}  // namespace filters

struct AugmentationHooks {
  /// Cheap hereditary test, applied to every candidate before labeling.
  GraphFilter filter;
  /// Hereditary test applied once per isomorphism class, after the
  /// canonical-parent check. Receives the canonical code of the candidate.
  std::function<bool(const Graph&, const CanonicalCode&)> accept;
  /// Maximum number of accepted intermediate graphs; 0 means unlimited.
  std::uint64_t cap = 0;
};

/// Visits one representative (in canonical form) of every isomorphism class
/// of n-vertex graphs passing the hooks, in a deterministic order. Graphs are
/// grown one vertex at a time; a child is kept only when deleting its
/// canonically last vertex gives back its parent, so no global dedup table
/// is needed. Throws CapExceeded when the cap is hit.
void for_each_graph(int n, const AugmentationHooks& hooks,
                    const std::function<void(const Graph&, const CanonicalCode&)>& visit);

std::vector<Graph> enumerate_graphs(int n, const GraphFilter& filter = filters::any(),
                                    std::uint64_t cap = 0);

}  // namespace recon

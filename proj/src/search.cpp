#include <algorithm>
#include <functional>

#include "recon/errors.hpp"
#include "recon/recognizer.hpp"
#include "recon/vines.hpp"

namespace recon {
namespace {

/// Degree list of every reconstruction, when the deck certifies it.
std::optional<std::vector<int>> known_degrees(const Deck& d) {
  if (d.card_order < 3) return std::nullopt;
  // A K_{1,k-1} card would allow degrees we cannot see.
  if (d.multiplicity(canonical_code(star_graph(d.card_order - 1))) != 0) return std::nullopt;
  try {
    return degree_list_from_deck(d);
  } catch (const PreconditionError&) {
    return std::nullopt;
  }
}

}  // namespace

ReconstructionSearchResult reconstruct_all(const Deck& d, const GraphFilter& restrict,
                                           std::uint64_t cap) {
  validate(d);
  if (!d.ambient_n) throw PreconditionError("reconstruct_all: ambient vertex count unknown");
  const int n = *d.ambient_n;
  const int k = d.card_order;
  if (!restrict && n > 12) {
    throw PreconditionError("reconstruct_all: unrestricted search is limited to 12 vertices");
  }

  std::vector<Deck> levels;
  for (int j = 0; j <= k; ++j) levels.push_back(subdeck(d, j));

  std::optional<std::int64_t> edges;
  if (k >= 2) {
    edges = static_cast<std::int64_t>(levels[2].multiplicity(canonical_code(complete_graph(2))));
  }
  const std::optional<std::vector<int>> degrees = known_degrees(d);
  const int top_degree = degrees ? (degrees->empty() ? 0 : degrees->front()) : n - 1;

  ReconstructionSearchResult result;
  AugmentationHooks hooks;
  hooks.cap = cap;
  hooks.filter = [&](const Graph& x) {
    if (restrict && !restrict(x)) return false;
    if (edges) {
      const std::int64_t missing = *edges - x.size();
      // Every missing edge has an endpoint among the vertices still to come.
      if (missing < 0 || missing > static_cast<std::int64_t>(n - x.order()) * top_degree) return false;
    }
    if (degrees) {
      const auto have = degree_list(x);
      for (std::size_t i = 0; i < have.size(); ++i) {
        if (have[i] > (*degrees)[i]) return false;
      }
    }
    return true;
  };
  hooks.accept = [&](const Graph& x, const CanonicalCode& code) {
    ++result.nodes;
    const int m = x.order();
    if (m <= k) return levels[m].cards.contains(code);
    const Deck own = compute_deck(x, k);
    if (m == n) return deck_equal(own, d);
    return std::all_of(own.cards.begin(), own.cards.end(),
                       [&](const auto& card) { return card.second <= d.multiplicity(card.first); });
  };

  try {
    for_each_graph(n, hooks, [&](const Graph& g, const CanonicalCode& code) {
      result.matches.push_back(code);
      if (is_forest(g)) {
        result.acyclic_found = true;
      } else {
        result.cyclic_found = true;
      }
    });
  } catch (const CapExceeded&) {
    result.exhausted = false;
  }
  std::sort(result.matches.begin(), result.matches.end());
  return result;
}

}  // namespace recon

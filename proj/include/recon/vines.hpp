#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "recon/canonical.hpp"
#include "recon/deck.hpp"
#include "recon/graph.hpp"

namespace recon {

// k-vine: tree of diameter 2k, centered at a vertex.
// k-evine: tree of diameter 2k+1, centered at an edge.
bool is_k_vine(const Graph& g, int k);
bool is_k_evine(const Graph& g, int k);

/// Families whose induced members each lie in a unique maximal induced
/// member (under the girth bounds noted on the factories).
class AbsorbingFamily {
 public:
  enum class Kind { Connected, Star, KVine, KEvine };

  static AbsorbingFamily connected() { return {Kind::Connected, 0}; }
  /// Stars with at least two edges, i.e. 1-vines; absorbing when triangle-free.
  static AbsorbingFamily stars() { return {Kind::Star, 1}; }
  /// Absorbing for graphs of girth at least 2k+2.
  static AbsorbingFamily k_vines(int k) { return {Kind::KVine, k}; }
  /// Absorbing for graphs of girth at least 2k+3.
  static AbsorbingFamily k_evines(int k) { return {Kind::KEvine, k}; }

  Kind kind() const { return kind_; }
  int k() const { return k_; }
  bool contains(const Graph& g) const;
  std::string name() const;

 private:
  AbsorbingFamily(Kind kind, int k) : kind_(kind), k_(k) {}
  Kind kind_;
  int k_;
};

/// m(F,G) for each family member F occurring as a maximal member.
struct MaximalCountTable {
  std::map<CanonicalCode, std::uint64_t> entries;

  std::uint64_t total() const;
  std::uint64_t count(const CanonicalCode& code) const;
};

/// Lines "<m>\t<graph6>", sorted by code.
std::string write_table(const MaximalCountTable& t);
MaximalCountTable read_table(std::istream& in);

/// Vertices that are the center of some k-vine. Requires girth >= 2k+2 and
/// k >= 1; throws PreconditionError otherwise.
VertexSet k_centers(const Graph& g, int k);

/// Edges (u < v) whose k-eball holds a k-evine centered on them. Requires
/// girth >= 2k+3.
std::vector<std::pair<int, int>> k_central_edges(const Graph& g, int k);

/// Maximal occurrences of every family member, from the deck alone.
///
/// Members are resolved in decreasing vertex count with
///   m(F) = s(F,G) - sum over larger resolved H of s(F,H) m(H),
/// where s(F,G) comes from the deck (or one of its sub-decks). `known_large`
/// must list every member with more vertices than the cards; members with
/// exactly card_order vertices are taken from it when listed and resolved
/// otherwise. Throws DeckError on a negative count.
MaximalCountTable count_maximal_from_deck(const Deck& d, const AbsorbingFamily& family,
                                          const MaximalCountTable& known_large = {});

std::uint64_t count_k_centers_from_deck(const Deck& d, int k);
/// Uses k = k_hat - 1 from short_card_stats.
std::uint64_t count_k_centers_from_deck(const Deck& d);

std::uint64_t count_k_central_edges_from_deck(const Deck& d, int k);
std::uint64_t count_k_central_edges_from_deck(const Deck& d);

/// Degree list (descending) of every reconstruction of a triangle-free deck.
/// `known_large_degrees` holds the degrees of all vertices whose degree is at
/// least the card order.
std::vector<int> degree_list_from_deck(const Deck& d, std::span<const int> known_large_degrees = {});

struct ShortCardStats {
  int k_hat = 0;
  int k = 0;
  std::vector<std::pair<CanonicalCode, int>> short_cards;  // (card, d_C)
  int d = 0;
};

/// Minimum radius over connected cards and the path packings of the cards
/// attaining it. Disconnected cards have infinite radius.
ShortCardStats short_card_stats(const Deck& d);

/// Maximum number of pairwise edge-disjoint paths of the given length
/// starting at z, by exhaustive search.
int edge_disjoint_path_packing(const Graph& g, int z, int length);

/// d_C of a connected card: the packing at radius length, maximized over its
/// centers.
int card_packing(const Graph& card);

/// Number of vertex subsets of size m that induce a path.
std::uint64_t count_long_paths(const Graph& g, int m);

struct SpiderSpec {
  std::vector<int> legs;
};

/// Legs share vertex 0 and are laid out consecutively after it.
Graph build_spider(const SpiderSpec& spec);

}  // namespace recon

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "recon/canonical.hpp"
#include "recon/deck.hpp"
#include "recon/enumerate.hpp"
#include "recon/graph.hpp"

namespace recon {

enum class VerdictKind { Acyclic, Cyclic, ExceptionPair, Undecided };

struct Verdict {
  VerdictKind kind = VerdictKind::Undecided;
  std::string reason;
};

std::string to_string(VerdictKind kind);

/// Which step of the pipeline settled the verdict.
enum class DecisionPath {
  CyclicCard,       // some card has a cycle
  EdgeCount,        // at least n edges
  NoConnectedCard,  // a cycle would show up as a path card
  Fast,             // k-central-edge discriminator
  Fallback,         // search over forests
  FullSearch,       // unrestricted search (n <= 2l or (n,l) = (5,2))
};

std::string to_string(DecisionPath path);

struct RecognitionReport {
  int n = 0;
  int l = 0;
  std::uint64_t e = 0;
  bool all_cards_acyclic = false;
  std::optional<int> k_hat;
  std::optional<int> k;
  std::optional<int> d;
  std::optional<std::uint64_t> s;        // k-centers
  std::optional<std::uint64_t> s_prime;  // k-central edges
  DecisionPath path = DecisionPath::Fallback;
  Verdict verdict;
  std::vector<CanonicalCode> witnesses;
};

struct SearchOptions {
  std::uint64_t cap = 2'000'000;
};

/// Decides from an (n-l)-deck whether its reconstructions have cycles.
/// Throws DeckError when the deck turns out not to be the deck of any graph.
RecognitionReport recognize(const Deck& d, const SearchOptions& options = {});

/// Key=value lines: n, l, e, k_hat, d, s, s_prime, path, verdict; absent
/// values print as "-". Witness graph6 lines follow.
std::string format_report(const RecognitionReport& report);

struct ReconstructionSearchResult {
  std::vector<CanonicalCode> matches;
  bool acyclic_found = false;
  bool cyclic_found = false;
  bool exhausted = true;
  std::uint64_t nodes = 0;
};

/// Every isomorphism class of ambient_n-vertex graphs with deck d that passes
/// the (hereditary) restriction. Built vertex by vertex, pruning any partial
/// graph whose induced subgraphs disagree with the deck.
ReconstructionSearchResult reconstruct_all(const Deck& d, const GraphFilter& restrict = {},
                                           std::uint64_t cap = SearchOptions{}.cap);

// Same-deck pairs ----------------------------------------------------------

struct SameDeckPair {
  std::string name;
  Graph first;
  Graph second;
  int card_order = 0;
};

/// Trees on 2l vertices: P_{2l-1} plus a leaf at its central vertex, and
/// plus a leaf at a neighbor of the central vertex.
std::pair<Graph, Graph> nydl_pair(int l);

/// P_{2l} and C_{l+1} + P_{l-1}, equal l-decks.
SameDeckPair path_cycle_pair(int l);
/// C4 + K1 and the spider S_{1,1,2}, equal 3-decks.
SameDeckPair small_exception_pair();
SameDeckPair nydl_same_deck_pair(int l);
/// C_{2l-2} and 2 C_{l-1}, equal (l-2)-decks.
SameDeckPair cycle_split_pair(int l);
/// P_l + P_l and P_{l+1} + P_{l-1}, equal l-decks.
SameDeckPair path_split_pair(int l);

/// All of the above that are defined for l.
std::vector<SameDeckPair> same_deck_pairs(int l);

// Exhaustive verification ----------------------------------------------------

struct MixedClass {
  Deck deck;
  std::vector<Graph> acyclic;
  std::vector<Graph> cyclic;
};

struct VerifySummary {
  int n = 0;
  int l = 0;
  std::uint64_t graphs = 0;
  std::uint64_t classes = 0;
  std::vector<MixedClass> mixed;
};

/// Forests together with graphs of girth at least n-l+1. Any deck shared by
/// an acyclic and a cyclic graph has both of them in this set.
std::vector<Graph> recognizability_source(int n, int l);

/// Groups the source graphs by (n-l)-deck and reports the classes holding
/// both acyclic and cyclic graphs. The source must hold one graph per
/// isomorphism class; `jobs` worker threads compute the decks.
VerifySummary verify_recognizability(int n, int l, std::span<const Graph> source, int jobs = 1);

/// "classes=<N> mixed=<M>" and one witness block per mixed class.
std::string format_summary(const VerifySummary& summary);

struct ConsequenceReport {
  bool decks_equal = false;
  bool mixed = false;
  bool in_hypothesis = false;
  std::string note;
  std::vector<std::pair<std::string, bool>> checks;
};

/// Evaluates the conclusions that any ambiguous deck with n = 2l+1 >= 7 must
/// satisfy (no star card, maximum degree at least 3, 2 k_hat <= l) on a pair
/// of graphs. Unequal decks are flagged before anything is evaluated.
ConsequenceReport consequence_checks(const Graph& a, const Graph& b, int l);

}  // namespace recon

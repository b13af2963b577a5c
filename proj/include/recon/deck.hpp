#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "recon/canonical.hpp"
#include "recon/graph.hpp"

namespace recon {

/// Multiset of k-vertex induced subgraphs ("cards"), keyed by canonical code.
struct Deck {
  int card_order = 0;
  std::map<CanonicalCode, std::uint64_t> cards;
  std::optional<int> ambient_n;

  std::uint64_t total() const;
  std::uint64_t multiplicity(const CanonicalCode& code) const;
  /// Number of deleted vertices, n - k. Requires ambient_n.
  int deleted() const;
};

/// Binomial coefficient; throws on 64-bit overflow.
std::uint64_t binomial(int n, int k);

/// k-deck of g, subsets visited in colex order.
Deck compute_deck(const Graph& g, int k);

/// The j-deck of any graph with deck d, recovered by the exact counting
/// argument. Throws DeckError when a division is inexact.
Deck subdeck(const Deck& d, int j);

/// s(F,G): number of induced copies of f in any graph with deck d.
std::uint64_t count_induced_from_deck(const CanonicalCode& f, const Deck& d);

/// s(F,G) computed directly from g.
std::uint64_t count_induced(const CanonicalCode& f, const Graph& g);

/// Card multiset of the graph with the given code; memoized per thread.
const Deck& deck_of_code(const CanonicalCode& code, int k);

bool deck_equal(const Deck& a, const Deck& b);

/// Checks the Deck invariants; throws DeckError on violation.
void validate(const Deck& d);

/// Deck file: header "deck k=<K> n=<N|?>", then "<multiplicity>\t<graph6>"
/// per card class, sorted by code.
std::string write_deck(const Deck& d);
void write_deck(std::ostream& out, const Deck& d);
/// Order-insensitive; card graph6 need not be canonical. Repeated classes
/// are summed.
Deck read_deck(std::istream& in);
Deck read_deck_string(const std::string& text);

}  // namespace recon

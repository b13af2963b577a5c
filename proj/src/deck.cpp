#include "recon/deck.hpp"

#include <array>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "recon/errors.hpp"

namespace recon {

std::uint64_t Deck::total() const {
  std::uint64_t sum = 0;
  for (const auto& [code, mult] : cards) sum += mult;
  return sum;
}

std::uint64_t Deck::multiplicity(const CanonicalCode& code) const {
  const auto it = cards.find(code);
  return it == cards.end() ? 0 : it->second;
}

int Deck::deleted() const {
  if (!ambient_n) throw PreconditionError("deck has no ambient vertex count");
  return *ambient_n - card_order;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    const std::uint64_t factor = static_cast<std::uint64_t>(n - k + i);
    std::uint64_t product = 0;
    if (__builtin_mul_overflow(r, factor, &product)) throw Error("binomial coefficient overflow");
    r = product / static_cast<std::uint64_t>(i);
  }
  return r;
}

namespace {

constexpr int kPackedCardOrder = 6;

// Small cards are looked up by their labeled edge pattern.
const CanonicalCode& packed_card_code(const Graph& card) {
  thread_local std::array<std::unordered_map<std::uint32_t, CanonicalCode>, kPackedCardOrder + 1> cache;
  std::uint32_t key = 0;
  int pos = 0;
  for (int v = 1; v < card.order(); ++v) {
    for (int u = 0; u < v; ++u, ++pos) {
      if (card.adjacent(u, v)) key |= std::uint32_t{1} << pos;
    }
  }
  auto& table = cache[card.order()];
  auto it = table.find(key);
  if (it == table.end()) it = table.emplace(key, canonical_code(card)).first;
  return it->second;
}

}  // namespace

Deck compute_deck(const Graph& g, int k) {
  const int n = g.order();
  if (k < 0 || k > n) throw PreconditionError("card order outside 0..n");
  Deck d;
  d.card_order = k;
  d.ambient_n = n;
  if (k == 0) {
    d.cards[canonical_code(Graph(0))] = 1;
    return d;
  }
  // Gosper's hack walks the k-subsets in colex order.
  const Mask limit = low_mask(n);
  Mask s = low_mask(k);
  while (true) {
    const Graph card = induced_subgraph(g, VertexSet(s));
    if (k <= kPackedCardOrder) {
      ++d.cards[packed_card_code(card)];
    } else {
      ++d.cards[canonical_code(card)];
    }
    if (s == (limit & ~low_mask(n - k))) break;
    const Mask c = s & (~s + 1);
    const Mask r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return d;
}

const Deck& deck_of_code(const CanonicalCode& code, int k) {
  thread_local std::unordered_map<std::string, Deck> cache;
  std::string key = code.bytes;
  key.push_back('#');
  key += std::to_string(k);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(std::move(key), compute_deck(decode(code), k)).first;
  return it->second;
}

Deck subdeck(const Deck& d, int j) {
  if (!d.ambient_n) throw PreconditionError("subdeck needs the ambient vertex count");
  if (j < 0 || j > d.card_order) throw PreconditionError("subdeck order outside 0..k");
  if (j == d.card_order) return d;
  const int n = *d.ambient_n;
  const int k = d.card_order;

  std::map<CanonicalCode, std::uint64_t> sums;
  for (const auto& [card, mult] : d.cards) {
    for (const auto& [f, count] : deck_of_code(card, j).cards) sums[f] += mult * count;
  }
  // Each j-subset of G lies in exactly C(n-j, k-j) of the k-subsets.
  const std::uint64_t divisor = binomial(n - j, k - j);
  Deck out;
  out.card_order = j;
  out.ambient_n = n;
  for (const auto& [f, sum] : sums) {
    if (sum % divisor != 0) {
      throw DeckError("inexact division deriving the " + std::to_string(j) +
                      "-deck: not the deck of any graph");
    }
    out.cards.emplace(f, sum / divisor);
  }
  return out;
}

std::uint64_t count_induced(const CanonicalCode& f, const Graph& g) {
  if (f.order > g.order()) return 0;
  return compute_deck(g, f.order).multiplicity(f);
}

std::uint64_t count_induced_from_deck(const CanonicalCode& f, const Deck& d) {
  if (f.order > d.card_order) throw PreconditionError("pattern larger than the cards");
  if (f.order == d.card_order) return d.multiplicity(f);
  if (!d.ambient_n) throw PreconditionError("counting needs the ambient vertex count");
  const int n = *d.ambient_n;
  std::uint64_t sum = 0;
  for (const auto& [card, mult] : d.cards) sum += mult * deck_of_code(card, f.order).multiplicity(f);
  const std::uint64_t divisor = binomial(n - f.order, d.card_order - f.order);
  if (sum % divisor != 0) throw DeckError("inexact division counting induced copies: not a deck");
  return sum / divisor;
}

bool deck_equal(const Deck& a, const Deck& b) {
  return a.card_order == b.card_order && a.cards == b.cards;
}

void validate(const Deck& d) {
  if (d.card_order < 0 || d.card_order > kMaxVertices) throw DeckError("card order out of range");
  for (const auto& [code, mult] : d.cards) {
    if (code.order != d.card_order) throw DeckError("card of wrong order " + code.bytes);
    if (mult == 0) throw DeckError("zero multiplicity for card " + code.bytes);
  }
  if (d.ambient_n) {
    if (*d.ambient_n < d.card_order || *d.ambient_n > kMaxVertices) {
      throw DeckError("ambient vertex count out of range");
    }
    if (d.total() != binomial(*d.ambient_n, d.card_order)) {
      throw DeckError("card count " + std::to_string(d.total()) + " differs from C(" +
                      std::to_string(*d.ambient_n) + "," + std::to_string(d.card_order) + ")");
    }
  }
}

void write_deck(std::ostream& out, const Deck& d) {
  out << "deck k=" << d.card_order << " n=";
  if (d.ambient_n) {
    out << *d.ambient_n;
  } else {
    out << '?';
  }
  out << '\n';
  for (const auto& [code, mult] : d.cards) out << mult << '\t' << code.bytes << '\n';
}

std::string write_deck(const Deck& d) {
  std::ostringstream out;
  write_deck(out, d);
  return out.str();
}

namespace {

int parse_int_field(std::string_view token, std::string_view key) {
  if (!token.starts_with(key)) throw DeckError("deck header: expected " + std::string(key));
  token.remove_prefix(key.size());
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw DeckError("deck header: bad value in " + std::string(key));
  }
  return value;
}

}  // namespace

Deck read_deck(std::istream& in) {
  std::string line;
  while (std::getline(in, line) && line.find_first_not_of(" \t\r") == std::string::npos) {
  }
  if (!in && line.empty()) throw DeckError("empty deck file");

  std::istringstream header(line);
  std::string tag, kfield, nfield, extra;
  header >> tag >> kfield >> nfield;
  if (tag != "deck" || kfield.empty() || nfield.empty() || (header >> extra)) {
    throw DeckError("malformed deck header: " + line);
  }
  Deck d;
  d.card_order = parse_int_field(kfield, "k=");
  if (nfield != "n=?") d.ambient_n = parse_int_field(nfield, "n=");

  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw DeckError("deck line without tab: " + line);
    std::uint64_t mult = 0;
    const auto [ptr, ec] = std::from_chars(line.data(), line.data() + tab, mult);
    if (ec != std::errc() || ptr != line.data() + tab) throw DeckError("bad multiplicity: " + line);
    Graph card;
    try {
      card = parse_graph6(std::string_view(line).substr(tab + 1));
    } catch (const Graph6Error& e) {
      throw DeckError(std::string("bad card: ") + e.what());
    }
    if (card.order() != d.card_order) throw DeckError("card of wrong order: " + line);
    d.cards[canonical_code(card)] += mult;
  }
  validate(d);
  return d;
}

Deck read_deck_string(const std::string& text) {
  std::istringstream in(text);
  return read_deck(in);
}

}  // namespace recon

#include "recon/vines.hpp"

#include <algorithm>
#include <bitset>
#include <charconv>
#include <functional>
#include <istream>
#include <sstream>

#include "recon/errors.hpp"

namespace recon {

bool is_k_vine(const Graph& g, int k) { return is_tree(g) && diameter(g) == 2 * k; }

bool is_k_evine(const Graph& g, int k) { return is_tree(g) && diameter(g) == 2 * k + 1; }

bool AbsorbingFamily::contains(const Graph& g) const {
  switch (kind_) {
    case Kind::Connected:
      return is_connected(g);
    case Kind::Star:
    case Kind::KVine:
      return is_k_vine(g, k_);
    case Kind::KEvine:
      return is_k_evine(g, k_);
  }
  return false;
}

std::string AbsorbingFamily::name() const {
  switch (kind_) {
    case Kind::Connected:
      return "connected";
    case Kind::Star:
      return "stars";
    case Kind::KVine:
      return std::to_string(k_) + "-vines";
    case Kind::KEvine:
      return std::to_string(k_) + "-evines";
  }
  return "?";
}

std::uint64_t MaximalCountTable::total() const {
  std::uint64_t sum = 0;
  for (const auto& [code, m] : entries) sum += m;
  return sum;
}

std::uint64_t MaximalCountTable::count(const CanonicalCode& code) const {
  const auto it = entries.find(code);
  return it == entries.end() ? 0 : it->second;
}

std::string write_table(const MaximalCountTable& t) {
  std::ostringstream out;
  for (const auto& [code, m] : t.entries) out << m << '\t' << code.bytes << '\n';
  return out.str();
}

MaximalCountTable read_table(std::istream& in) {
  MaximalCountTable t;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    std::uint64_t m = 0;
    const auto [ptr, ec] = std::from_chars(line.data(), line.data() + tab, m);
    if (tab == std::string::npos || ec != std::errc() || ptr != line.data() + tab) {
      throw DeckError("malformed count table line: " + line);
    }
    t.entries[canonical_code(parse_graph6(std::string_view(line).substr(tab + 1)))] += m;
  }
  return t;
}

namespace {

/// Whether a path of exactly `depth` edges leaves `start` without touching
/// `blocked`.
bool reaches_depth(const Graph& g, int start, int blocked, int depth) {
  const Mask allowed = g.vertices().mask() & ~bit(blocked);
  Mask seen = bit(start);
  Mask frontier = bit(start);
  for (int d = 0; d < depth; ++d) {
    Mask next = 0;
    for (int u : VertexSet(frontier)) next |= g.neighbors(u);
    frontier = next & allowed & ~seen;
    if (frontier == 0) return false;
    seen |= frontier;
  }
  return true;
}

std::vector<Graph> decode_cards(const Deck& d) {
  std::vector<Graph> out;
  out.reserve(d.cards.size());
  for (const auto& [code, mult] : d.cards) out.push_back(decode(code));
  return out;
}

/// Shared preconditions of the center and central-edge counts: acyclic
/// cards, every card of radius above k.
void require_acyclic_wide_cards(const Deck& d, int k, const char* what) {
  if (k < 1) throw PreconditionError(std::string(what) + ": k must be positive");
  if (!d.ambient_n) throw PreconditionError(std::string(what) + ": ambient vertex count unknown");
  for (const Graph& card : decode_cards(d)) {
    if (!is_forest(card)) throw PreconditionError(std::string(what) + ": a card has a cycle");
    if (radius(card) <= k) {
      throw PreconditionError(std::string(what) + ": a card has radius at most k");
    }
  }
}

}  // namespace

VertexSet k_centers(const Graph& g, int k) {
  if (k < 1) throw PreconditionError("k_centers: k must be positive");
  if (girth(g) < 2 * k + 2) throw PreconditionError("k_centers: girth below 2k+2");
  Mask out = 0;
  for (int v = 0; v < g.order(); ++v) {
    int branches = 0;
    for (int u : g.neighbor_set(v)) {
      if (reaches_depth(g, u, v, k - 1) && ++branches == 2) break;
    }
    if (branches >= 2) out |= bit(v);
  }
  return VertexSet(out);
}

std::vector<std::pair<int, int>> k_central_edges(const Graph& g, int k) {
  if (k < 0) throw PreconditionError("k_central_edges: k must be non-negative");
  if (girth(g) < 2 * k + 3) throw PreconditionError("k_central_edges: girth below 2k+3");
  std::vector<std::pair<int, int>> out;
  for (auto [u, v] : g.edges()) {
    if (reaches_depth(g, u, v, k) && reaches_depth(g, v, u, k)) out.emplace_back(u, v);
  }
  return out;
}

MaximalCountTable count_maximal_from_deck(const Deck& d, const AbsorbingFamily& family,
                                          const MaximalCountTable& known_large) {
  if (!d.ambient_n) throw PreconditionError("count_maximal_from_deck: ambient vertex count unknown");
  struct Member {
    CanonicalCode code;
    std::uint64_t m;
  };
  std::vector<Member> resolved;
  MaximalCountTable out;
  for (const auto& [code, m] : known_large.entries) {
    if (!family.contains(decode(code))) {
      throw PreconditionError("known count for a non-member of " + family.name());
    }
    if (code.order < d.card_order) {
      throw PreconditionError("known counts must be for members with at least card_order vertices");
    }
    if (m > 0) {
      resolved.push_back({code, m});
      out.entries[code] = m;
    }
  }

  for (int j = d.card_order; j >= 1; --j) {
    const Deck level = subdeck(d, j);
    std::vector<Member> found;
    for (const auto& [code, s] : level.cards) {
      if (known_large.entries.contains(code)) continue;
      if (!family.contains(decode(code))) continue;
      auto m = static_cast<std::int64_t>(s);
      for (const Member& h : resolved) {
        m -= static_cast<std::int64_t>(deck_of_code(h.code, j).multiplicity(code) * h.m);
      }
      if (m < 0) {
        throw DeckError("negative maximal count for " + code.bytes +
                        ": family not absorbing or deck illegitimate");
      }
      if (m > 0) found.push_back({code, static_cast<std::uint64_t>(m)});
    }
    for (Member& f : found) {
      out.entries[f.code] = f.m;
      resolved.push_back(std::move(f));
    }
  }
  return out;
}

std::uint64_t count_k_centers_from_deck(const Deck& d, int k) {
  require_acyclic_wide_cards(d, k, "count_k_centers_from_deck");
  // No k-vine reaches card size, so nothing larger needs to be supplied.
  return count_maximal_from_deck(d, AbsorbingFamily::k_vines(k)).total();
}

std::uint64_t count_k_centers_from_deck(const Deck& d) {
  return count_k_centers_from_deck(d, short_card_stats(d).k);
}

std::uint64_t count_k_central_edges_from_deck(const Deck& d, int k) {
  require_acyclic_wide_cards(d, k, "count_k_central_edges_from_deck");
  if (2 * k + 2 > d.card_order) {
    throw PreconditionError("count_k_central_edges_from_deck: cards smaller than 2k+2");
  }
  for (const Graph& card : decode_cards(d)) {
    if (diameter(card) == 2 * k + 1) {
      throw PreconditionError("count_k_central_edges_from_deck: a card has diameter 2k+1");
    }
  }
  return count_maximal_from_deck(d, AbsorbingFamily::k_evines(k)).total();
}

std::uint64_t count_k_central_edges_from_deck(const Deck& d) {
  return count_k_central_edges_from_deck(d, short_card_stats(d).k);
}

std::vector<int> degree_list_from_deck(const Deck& d, std::span<const int> known_large_degrees) {
  if (!d.ambient_n) throw PreconditionError("degree_list_from_deck: ambient vertex count unknown");
  if (d.card_order < 3) {
    throw PreconditionError("degree_list_from_deck: cards too small to rule out triangles");
  }
  if (count_induced_from_deck(canonical_code(complete_graph(3)), d) != 0) {
    throw PreconditionError("degree_list_from_deck: reconstructions contain triangles");
  }
  const int n = *d.ambient_n;

  MaximalCountTable known;
  for (int deg : known_large_degrees) {
    if (deg < d.card_order || deg >= n) {
      throw PreconditionError("degree_list_from_deck: known degree outside card_order..n-1");
    }
    ++known.entries[canonical_code(star_graph(deg))];
  }
  const MaximalCountTable stars = count_maximal_from_deck(d, AbsorbingFamily::stars(), known);

  std::vector<std::int64_t> by_degree(n, 0);
  for (const auto& [code, m] : stars.entries) by_degree[code.order - 1] += static_cast<std::int64_t>(m);

  const auto edges = static_cast<std::int64_t>(count_induced_from_deck(canonical_code(complete_graph(2)), d));
  std::int64_t degree_sum = 0;
  std::int64_t counted = 0;
  for (int t = 2; t < n; ++t) {
    degree_sum += t * by_degree[t];
    counted += by_degree[t];
  }
  by_degree[1] = 2 * edges - degree_sum;
  counted += by_degree[1];
  if (by_degree[1] < 0 || counted > n) {
    throw DeckError("degree_list_from_deck: star counts inconsistent with edge and vertex totals");
  }
  by_degree[0] = n - counted;

  std::vector<int> out;
  for (int t = n - 1; t >= 0; --t) out.insert(out.end(), static_cast<std::size_t>(by_degree[t]), t);
  return out;
}

int edge_disjoint_path_packing(const Graph& g, int z, int length) {
  if (z < 0 || z >= g.order()) throw PreconditionError("path packing: vertex out of range");
  if (length < 1) throw PreconditionError("path packing: length must be positive");
  using EdgeSet = std::bitset<kMaxVertices*(kMaxVertices - 1) / 2>;
  auto edge_id = [](int u, int v) {
    if (u > v) std::swap(u, v);
    return v * (v - 1) / 2 + u;
  };

  std::vector<EdgeSet> paths;
  EdgeSet current;
  std::function<void(int, Mask, int)> walk = [&](int at, Mask used, int left) {
    if (left == 0) {
      paths.push_back(current);
      return;
    }
    for (int w : VertexSet(g.neighbors(at) & ~used)) {
      current.set(edge_id(at, w));
      walk(w, used | bit(w), left - 1);
      current.reset(edge_id(at, w));
    }
  };
  walk(z, bit(z), length);

  int best = 0;
  EdgeSet taken;
  std::function<void(std::size_t, int)> pack = [&](std::size_t i, int chosen) {
    best = std::max(best, chosen);
    if (i == paths.size() || chosen + static_cast<int>(paths.size() - i) <= best) return;
    if ((paths[i] & taken).none()) {
      taken |= paths[i];
      pack(i + 1, chosen + 1);
      taken &= ~paths[i];
    }
    pack(i + 1, chosen);
  };
  pack(0, 0);
  return best;
}

int card_packing(const Graph& card) {
  const int r = radius(card);
  if (r == kInfinity) throw PreconditionError("card_packing: card is disconnected");
  if (r == 0) return 0;
  int best = 0;
  for (int z = 0; z < card.order(); ++z) {
    if (eccentricity(card, z) == r) best = std::max(best, edge_disjoint_path_packing(card, z, r));
  }
  return best;
}

ShortCardStats short_card_stats(const Deck& d) {
  std::vector<std::pair<CanonicalCode, int>> radii;
  int k_hat = kInfinity;
  for (const auto& [code, mult] : d.cards) {
    const int r = radius(decode(code));
    if (r == kInfinity) continue;
    radii.emplace_back(code, r);
    k_hat = std::min(k_hat, r);
  }
  if (radii.empty()) throw PreconditionError("short_card_stats: no connected card");
  ShortCardStats stats;
  stats.k_hat = k_hat;
  stats.k = k_hat - 1;
  for (const auto& [code, r] : radii) {
    if (r != k_hat) continue;
    const int packing = card_packing(decode(code));
    stats.short_cards.emplace_back(code, packing);
    stats.d = std::max(stats.d, packing);
  }
  return stats;
}

std::uint64_t count_long_paths(const Graph& g, int m) {
  if (m < 1) throw PreconditionError("count_long_paths: m must be positive");
  std::uint64_t walks = 0;
  std::function<void(int, Mask, int)> grow = [&](int last, Mask path, int size) {
    if (size == m) {
      ++walks;
      return;
    }
    for (int w : VertexSet(g.neighbors(last) & ~path)) {
      // Keeps the path induced: w may only touch the current end.
      if ((g.neighbors(w) & path & ~bit(last)) != 0) continue;
      grow(w, path | bit(w), size + 1);
    }
  };
  for (int v = 0; v < g.order(); ++v) grow(v, bit(v), 1);
  return m == 1 ? walks : walks / 2;
}

Graph build_spider(const SpiderSpec& spec) {
  int n = 1;
  for (int leg : spec.legs) {
    if (leg < 1) throw PreconditionError("spider legs must have positive length");
    n += leg;
  }
  Graph g(n);
  int next = 1;
  for (int leg : spec.legs) {
    int prev = 0;
    for (int i = 0; i < leg; ++i, ++next) {
      g.add_edge(prev, next);
      prev = next;
    }
  }
  return g;
}

}  // namespace recon

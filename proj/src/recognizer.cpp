#include "recon/recognizer.hpp"

#include <sstream>

#include "recon/errors.hpp"
#include "recon/vines.hpp"

namespace recon {

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Acyclic:
      return "Acyclic";
    case VerdictKind::Cyclic:
      return "Cyclic";
    case VerdictKind::ExceptionPair:
      return "ExceptionPair";
    case VerdictKind::Undecided:
      return "Undecided";
  }
  return "?";
}

std::string to_string(DecisionPath path) {
  switch (path) {
    case DecisionPath::CyclicCard:
      return "cyclic-card";
    case DecisionPath::EdgeCount:
      return "edge-count";
    case DecisionPath::NoConnectedCard:
      return "no-connected-card";
    case DecisionPath::Fast:
      return "fast";
    case DecisionPath::Fallback:
      return "fallback";
    case DecisionPath::FullSearch:
      return "full-search";
  }
  return "?";
}

namespace {

RecognitionReport& settle(RecognitionReport& r, DecisionPath path, VerdictKind kind,
                          std::string reason = {}) {
  r.path = path;
  r.verdict = {kind, std::move(reason)};
  return r;
}

}  // namespace

RecognitionReport recognize(const Deck& d, const SearchOptions& options) {
  validate(d);
  if (!d.ambient_n) throw PreconditionError("recognize: ambient vertex count unknown");
  if (d.card_order < 2) throw PreconditionError("recognize: cards must have at least 2 vertices");

  RecognitionReport r;
  r.n = *d.ambient_n;
  r.l = r.n - d.card_order;
  const int n = r.n;
  const int l = r.l;
  r.e = count_induced_from_deck(canonical_code(complete_graph(2)), d);

  std::vector<Graph> cards;
  for (const auto& [code, mult] : d.cards) cards.push_back(decode(code));

  r.all_cards_acyclic = std::all_of(cards.begin(), cards.end(), [](const Graph& c) { return is_forest(c); });
  if (!r.all_cards_acyclic) return settle(r, DecisionPath::CyclicCard, VerdictKind::Cyclic);
  if (r.e >= static_cast<std::uint64_t>(n)) return settle(r, DecisionPath::EdgeCount, VerdictKind::Cyclic);
  // With acyclic cards any cycle has more than n-l vertices, and n-l
  // consecutive vertices of it would form a path card.
  if (std::none_of(cards.begin(), cards.end(), [](const Graph& c) { return is_connected(c); })) {
    return settle(r, DecisionPath::NoConnectedCard, VerdictKind::Acyclic);
  }

  const ShortCardStats stats = short_card_stats(d);
  r.k_hat = stats.k_hat;
  r.k = stats.k;
  r.d = stats.d;
  const int k = stats.k;
  if (k >= 1) r.s = count_k_centers_from_deck(d, k);

  if ((n == 5 && l == 2) || n <= 2 * l) {
    const ReconstructionSearchResult found = reconstruct_all(d, {}, options.cap);
    r.witnesses = found.matches;
    if (!found.exhausted) {
      return settle(r, DecisionPath::FullSearch, VerdictKind::Undecided, "search cap exceeded");
    }
    if (found.acyclic_found && found.cyclic_found) {
      return settle(r, DecisionPath::FullSearch, VerdictKind::ExceptionPair,
                    "acyclic and cyclic reconstructions both exist");
    }
    if (found.acyclic_found) return settle(r, DecisionPath::FullSearch, VerdictKind::Acyclic);
    if (found.cyclic_found) return settle(r, DecisionPath::FullSearch, VerdictKind::Cyclic);
    throw DeckError("recognize: no graph has this deck");
  }

  const bool no_evine_card = std::none_of(cards.begin(), cards.end(), [&](const Graph& c) {
    return diameter(c) == 2 * k + 1;
  });
  if (n >= 2 * l + 2 && stats.k_hat >= 2 && 2 * k + 2 <= d.card_order && no_evine_card) {
    const std::uint64_t s_prime = count_k_central_edges_from_deck(d, k);
    r.s_prime = s_prime;
    const auto dd = static_cast<std::uint64_t>(stats.d);
    // A forest has at most d+l central edges; a cycle forces at least
    // n-l+d-1 of them.
    if (s_prime <= dd + static_cast<std::uint64_t>(l)) {
      return settle(r, DecisionPath::Fast, VerdictKind::Acyclic);
    }
    if (s_prime + 1 >= static_cast<std::uint64_t>(n - l) + dd) {
      return settle(r, DecisionPath::Fast, VerdictKind::Cyclic);
    }
  }

  const ReconstructionSearchResult forests = reconstruct_all(d, filters::forests(), options.cap);
  r.witnesses = forests.matches;
  if (forests.acyclic_found) return settle(r, DecisionPath::Fallback, VerdictKind::Acyclic);
  if (!forests.exhausted) {
    return settle(r, DecisionPath::Fallback, VerdictKind::Undecided, "search cap exceeded");
  }
  return settle(r, DecisionPath::Fallback, VerdictKind::Cyclic, "no forest has this deck");
}

std::string format_report(const RecognitionReport& r) {
  std::ostringstream out;
  auto field = [&](const char* key, const auto& value) {
    out << key << '=';
    if (value) {
      out << *value;
    } else {
      out << '-';
    }
    out << '\n';
  };
  out << "n=" << r.n << '\n' << "l=" << r.l << '\n' << "e=" << r.e << '\n';
  field("k_hat", r.k_hat);
  field("d", r.d);
  field("s", r.s);
  field("s_prime", r.s_prime);
  out << "path=" << to_string(r.path) << '\n';
  out << "verdict=" << to_string(r.verdict.kind) << '\n';
  for (const auto& w : r.witnesses) out << w.bytes << '\n';
  return out.str();
}

}  // namespace recon

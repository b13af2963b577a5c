#include <algorithm>
#include <map>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "recon/errors.hpp"
#include "recon/recognizer.hpp"
#include "recon/vines.hpp"

namespace recon {

std::vector<Graph> recognizability_source(int n, int l) {
  if (n - l < 2) throw PreconditionError("recognizability_source: need n - l >= 2");
  return enumerate_graphs(n, filters::min_girth(n - l + 1));
}

VerifySummary verify_recognizability(int n, int l, std::span<const Graph> source, int jobs) {
  if (l < 0 || n - l < 2) throw PreconditionError("verify_recognizability: need n - l >= 2");
  const int k = n - l;

  struct Row {
    std::string key;
    bool acyclic = false;
  };
  std::vector<Row> rows(source.size());
  std::vector<std::string> codes(source.size());
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < source.size(); i += stride) {
      if (source[i].order() != n) continue;
      codes[i] = canonical_code(source[i]).bytes;
      rows[i] = {write_deck(compute_deck(source[i], k)), is_forest(source[i])};
    }
  };
  const auto workers = static_cast<std::size_t>(std::max(1, jobs));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
  }

  std::unordered_set<std::string> seen;
  std::map<std::string, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> groups;
  for (std::size_t i = 0; i < source.size(); ++i) {
    if (source[i].order() != n) throw PreconditionError("verify_recognizability: graph of wrong order");
    if (!seen.insert(codes[i]).second) {
      throw PreconditionError("verify_recognizability: source repeats an isomorphism class");
    }
    auto& group = groups[rows[i].key];
    (rows[i].acyclic ? group.first : group.second).push_back(i);
  }

  VerifySummary summary;
  summary.n = n;
  summary.l = l;
  summary.graphs = source.size();
  summary.classes = groups.size();
  for (const auto& [key, group] : groups) {
    if (group.first.empty() || group.second.empty()) continue;
    MixedClass mixed;
    mixed.deck = read_deck_string(key);
    for (std::size_t i : group.first) mixed.acyclic.push_back(source[i]);
    for (std::size_t i : group.second) mixed.cyclic.push_back(source[i]);
    summary.mixed.push_back(std::move(mixed));
  }
  return summary;
}

std::string format_summary(const VerifySummary& s) {
  std::ostringstream out;
  out << "classes=" << s.classes << " mixed=" << s.mixed.size() << '\n';
  for (std::size_t i = 0; i < s.mixed.size(); ++i) {
    const MixedClass& m = s.mixed[i];
    out << "class=" << i + 1 << " size=" << m.acyclic.size() + m.cyclic.size() << '\n';
    for (const Graph& g : m.acyclic) out << "acyclic=" << write_graph6(g) << '\n';
    for (const Graph& g : m.cyclic) out << "cyclic=" << write_graph6(g) << '\n';
  }
  return out.str();
}

ConsequenceReport consequence_checks(const Graph& a, const Graph& b, int l) {
  ConsequenceReport report;
  const int n = a.order();
  if (b.order() != n || n - l < 1 || l < 0) {
    report.note = "orders differ or l out of range";
    return report;
  }
  const Deck deck = compute_deck(a, n - l);
  report.decks_equal = deck_equal(deck, compute_deck(b, n - l));
  if (!report.decks_equal) {
    report.note = "decks differ";
    return report;
  }
  report.mixed = is_forest(a) != is_forest(b);
  if (n != 2 * l + 1 || n < 7) {
    report.note = "out of hypothesis: needs n = 2l+1 >= 7";
    return report;
  }
  report.in_hypothesis = true;

  bool star_card = false;
  int k_hat = kInfinity;
  for (const auto& [code, mult] : deck.cards) {
    const Graph card = decode(code);
    star_card = star_card || is_k_vine(card, 1);
    k_hat = std::min(k_hat, radius(card));
  }
  report.checks.emplace_back("nostar", !star_card);
  report.checks.emplace_back("maxdeg", max_degree(a) >= 3 && max_degree(b) >= 3);
  report.checks.emplace_back("kl-ineq", k_hat != kInfinity && 2 * k_hat <= l);
  return report;
}

}  // namespace recon

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "recon/canonical.hpp"
#include "recon/deck.hpp"
#include "recon/enumerate.hpp"
#include "recon/errors.hpp"
#include "recon/recognizer.hpp"
#include "recon/vines.hpp"

using namespace recon;

namespace {

CanonicalCode code_of(const Graph& g) { return canonical_code(g); }

bool has(const std::vector<CanonicalCode>& codes, const Graph& g) {
  return std::find(codes.begin(), codes.end(), code_of(g)) != codes.end();
}

// All n-vertex graphs with the given deck, by scanning the full enumeration.
std::vector<CanonicalCode> brute_reconstructions(const Deck& d) {
  std::vector<CanonicalCode> out;
  const oracle::BruteDeck target = [&] {
    oracle::BruteDeck b;
    for (const auto& [code, m] : d.cards) b[oracle::brute_form(decode(code))] += m;
    return b;
  }();
  for (const Graph& g : enumerate_graphs(*d.ambient_n)) {
    if (oracle::brute_deck(g, d.card_order) == target) out.push_back(code_of(g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("recognize spec decks") {
  const RecognitionReport c7 = recognize(compute_deck(cycle_graph(7), 5));
  CHECK(c7.e == 7);
  CHECK(c7.path == DecisionPath::EdgeCount);
  CHECK(c7.verdict.kind == VerdictKind::Cyclic);

  const RecognitionReport p7 = recognize(compute_deck(path_graph(7), 5));
  CHECK(p7.e == 6);
  CHECK(p7.verdict.kind == VerdictKind::Acyclic);

  const RecognitionReport exc = recognize(compute_deck(disjoint_union(cycle_graph(4), empty_graph(1)), 3));
  CHECK(exc.verdict.kind == VerdictKind::ExceptionPair);
  CHECK(exc.path == DecisionPath::FullSearch);
  CHECK(has(exc.witnesses, build_spider({{1, 1, 2}})));
}

TEST_CASE("each pipeline step") {
  CHECK(recognize(compute_deck(disjoint_union(cycle_graph(4), empty_graph(1)), 4)).path == DecisionPath::CyclicCard);
  CHECK(recognize(compute_deck(cycle_graph(5), 4)).path == DecisionPath::EdgeCount);
  CHECK(recognize(compute_deck(empty_graph(7), 3)).path == DecisionPath::NoConnectedCard);

  // P12 with l = 3: k_hat = 5 (P9 cards), k = 4, 2k+2 = 10 > 9, so no fast path.
  const RecognitionReport p12 = recognize(compute_deck(path_graph(12), 9));
  CHECK(p12.verdict.kind == VerdictKind::Acyclic);

  // The 10-cycle is longer than the cards, so every card is a forest.
  const Graph cyc = disjoint_union(cycle_graph(10), empty_graph(1));
  const RecognitionReport r = recognize(compute_deck(cyc, 9));
  CHECK(r.e == 10);
  CHECK(r.verdict.kind == VerdictKind::Cyclic);
  CHECK(r.all_cards_acyclic);

  const Graph forest = disjoint_union(path_graph(9), path_graph(2));
  const RecognitionReport f = recognize(compute_deck(forest, 9));
  CHECK(f.verdict.kind == VerdictKind::Acyclic);
}

TEST_CASE("fast path") {
  // Find graphs at n = 10, l = 2 whose decks take the fast path and check
  // each verdict against the truth.
  int fast = 0;
  for (const Graph& g : enumerate_graphs(10, filters::min_girth(9))) {
    const RecognitionReport r = recognize(compute_deck(g, 8));
    REQUIRE(r.verdict.kind == (is_forest(g) ? VerdictKind::Acyclic : VerdictKind::Cyclic));
    if (r.path == DecisionPath::Fast) {
      ++fast;
      REQUIRE(r.s_prime.has_value());
    }
  }
  CHECK(fast > 0);
}

TEST_CASE("report format") {
  const std::string text = format_report(recognize(compute_deck(cycle_graph(7), 5)));
  CHECK(text == "n=7\nl=2\ne=7\nk_hat=-\nd=-\ns=-\ns_prime=-\npath=edge-count\nverdict=Cyclic\n");
}

TEST_CASE("reconstructions") {
  const auto p6 = reconstruct_all(compute_deck(path_graph(6), 3));
  CHECK(p6.exhausted);
  CHECK(has(p6.matches, path_graph(6)));
  CHECK(has(p6.matches, disjoint_union(cycle_graph(4), path_graph(2))));
  CHECK(p6.acyclic_found);
  CHECK(p6.cyclic_found);

  const auto c8 = reconstruct_all(compute_deck(cycle_graph(8), 3));
  CHECK(has(c8.matches, cycle_graph(8)));
  CHECK(has(c8.matches, disjoint_union(cycle_graph(4), cycle_graph(4))));

  const auto k3 = reconstruct_all(compute_deck(complete_graph(3), 3));
  REQUIRE(k3.matches.size() == 1);
  CHECK(k3.matches[0] == code_of(complete_graph(3)));

  const auto forests = reconstruct_all(compute_deck(path_graph(6), 3), filters::forests());
  CHECK(has(forests.matches, path_graph(6)));
  CHECK_FALSE(forests.cyclic_found);
}

TEST_CASE("reconstructions equal brute-force preimages at n = 6") {
  for (const Graph& g : enumerate_graphs(6)) {
    for (int k = 2; k <= 5; ++k) {
      const Deck d = compute_deck(g, k);
      const auto found = reconstruct_all(d);
      REQUIRE(found.exhausted);
      REQUIRE(found.matches == brute_reconstructions(d));
    }
  }
}

TEST_CASE("search caps and bad decks") {
  const auto capped = reconstruct_all(compute_deck(path_graph(10), 3), {}, 5);
  CHECK_FALSE(capped.exhausted);
  CHECK_THROWS_AS(reconstruct_all(compute_deck(path_graph(13), 11)), PreconditionError);
  CHECK_NOTHROW(reconstruct_all(compute_deck(path_graph(13), 11), filters::forests()));

  Deck bogus;
  bogus.card_order = 3;
  bogus.ambient_n = 4;
  bogus.cards[code_of(complete_graph(3))] = 3;
  bogus.cards[code_of(empty_graph(3))] = 1;
  CHECK_THROWS_AS(recognize(bogus), DeckError);
}

TEST_CASE("same-deck pairs") {
  for (int l = 2; l <= 5; ++l) {
    for (const SameDeckPair& p : same_deck_pairs(l)) {
      CAPTURE(p.name);
      CAPTURE(l);
      CHECK(deck_equal(compute_deck(p.first, p.card_order), compute_deck(p.second, p.card_order)));
    }
  }
  const auto [a, b] = nydl_pair(3);
  CHECK(a.order() == 6);
  CHECK(is_tree(a));
  CHECK(is_tree(b));
  CHECK_FALSE(isomorphic(a, b));
  CHECK(deck_equal(compute_deck(a, 3), compute_deck(b, 3)));
  // At l = 2 the pair is K1,3 and P4, which share a 2-deck.
  const auto [c, e] = nydl_pair(2);
  CHECK(isomorphic(c, star_graph(3)));
  CHECK(isomorphic(e, path_graph(4)));
  CHECK(deck_equal(compute_deck(c, 2), compute_deck(e, 2)));
}

TEST_CASE("verification summaries") {
  const auto n7 = verify_recognizability(7, 3, enumerate_graphs(7));
  CHECK(n7.mixed.empty());
  CHECK(n7.graphs == 1044);

  const auto n6 = verify_recognizability(6, 3, enumerate_graphs(6));
  CHECK_FALSE(n6.mixed.empty());
  bool witness = false;
  for (const MixedClass& m : n6.mixed) {
    const auto hit = [&](const std::vector<Graph>& gs, const Graph& g) {
      return std::any_of(gs.begin(), gs.end(), [&](const Graph& x) { return isomorphic(x, g); });
    };
    witness = witness || (hit(m.acyclic, path_graph(6)) && hit(m.cyclic, disjoint_union(cycle_graph(4), path_graph(2))));
  }
  CHECK(witness);

  const auto n5 = verify_recognizability(5, 2, enumerate_graphs(5));
  REQUIRE(n5.mixed.size() == 1);
  CHECK(isomorphic(n5.mixed[0].acyclic.at(0), build_spider({{1, 1, 2}})));
  CHECK(isomorphic(n5.mixed[0].cyclic.at(0), disjoint_union(cycle_graph(4), empty_graph(1))));

  // The restricted source finds the same mixed classes.
  CHECK(verify_recognizability(6, 3, recognizability_source(6, 3)).mixed.size() == n6.mixed.size());

  const std::string text = format_summary(n5);
  CHECK(text.rfind("classes=32 mixed=1\nclass=1 size=2\n", 0) == 0);

  const auto threaded = verify_recognizability(7, 2, enumerate_graphs(7), 3);
  const auto single = verify_recognizability(7, 2, enumerate_graphs(7), 1);
  CHECK(format_summary(threaded) == format_summary(single));

  std::vector<Graph> twice{path_graph(5), path_graph(5)};
  CHECK_THROWS_AS(verify_recognizability(5, 2, twice), PreconditionError);
}

TEST_CASE("consequence checks") {
  const Graph p6 = path_graph(6);
  const Graph c4p2 = disjoint_union(cycle_graph(4), path_graph(2));
  const ConsequenceReport out = consequence_checks(p6, c4p2, 3);
  CHECK(out.decks_equal);
  CHECK(out.mixed);
  CHECK_FALSE(out.in_hypothesis);
  CHECK(out.note.find("out of hypothesis") != std::string::npos);
  CHECK(out.checks.empty());

  const ConsequenceReport bad = consequence_checks(path_graph(7), cycle_graph(7), 3);
  CHECK_FALSE(bad.decks_equal);
  CHECK(bad.note == "decks differ");

  const ConsequenceReport same = consequence_checks(path_graph(7), path_graph(7), 3);
  CHECK(same.in_hypothesis);
  CHECK_FALSE(same.mixed);
  CHECK(same.checks.size() == 3);
}

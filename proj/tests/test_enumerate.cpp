#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "recon/canonical.hpp"
#include "recon/enumerate.hpp"
#include "recon/errors.hpp"

using namespace recon;

namespace {

// Isomorphism classes of labeled n-vertex graphs passing `keep`.
std::set<std::string> brute_classes(int n, const GraphFilter& keep) {
  std::set<std::string> out;
  const int pairs = n * (n - 1) / 2;
  for (std::uint32_t bits = 0; bits < (1u << pairs); ++bits) {
    Graph g(n);
    int pos = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, ++pos)
        if (bits >> pos & 1) g.add_edge(u, v);
    if (keep(g)) out.insert(oracle::brute_form(g));
  }
  return out;
}

void check_against_brute(int n, const GraphFilter& keep) {
  const auto graphs = enumerate_graphs(n, keep);
  std::set<std::string> forms;
  for (const Graph& g : graphs) {
    REQUIRE(g.order() == n);
    REQUIRE(keep(g));
    REQUIRE(forms.insert(oracle::brute_form(g)).second);
  }
  CHECK(forms == brute_classes(n, keep));
}

}  // namespace

TEST_CASE("small counts") {
  CHECK(enumerate_graphs(0).size() == 1);
  CHECK(enumerate_graphs(1).size() == 1);
  CHECK(enumerate_graphs(3).size() == 4);
  CHECK(enumerate_graphs(4).size() == 11);
  CHECK(enumerate_graphs(5, filters::forests()).size() == 10);
}

TEST_CASE("enumeration equals brute-force dedup of labeled graphs") {
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    check_against_brute(n, filters::any());
    check_against_brute(n, filters::forests());
    check_against_brute(n, filters::triangle_free());
    check_against_brute(n, filters::min_girth(5));
  }
}

TEST_CASE("larger counts") {
  CHECK(enumerate_graphs(7).size() == 1044);
  CHECK(enumerate_graphs(8).size() == 12346);
  CHECK(enumerate_graphs(10, filters::forests()).size() == 329);
  const auto forests = enumerate_graphs(12, filters::forests());
  CHECK(std::count_if(forests.begin(), forests.end(), [](const Graph& g) { return is_tree(g); }) == 551);
}

TEST_CASE("no duplicates at n = 7") {
  std::set<CanonicalCode> codes;
  for (const Graph& g : enumerate_graphs(7)) REQUIRE(codes.insert(canonical_code(g)).second);
}

TEST_CASE("deterministic order") {
  const auto a = enumerate_graphs(6);
  const auto b = enumerate_graphs(6);
  CHECK(a == b);
}

TEST_CASE("cap") {
  CHECK_THROWS_AS(enumerate_graphs(7, filters::any(), 100), CapExceeded);
  CHECK_NOTHROW(enumerate_graphs(4, filters::any(), 1000));
}

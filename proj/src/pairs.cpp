#include "recon/errors.hpp"
#include "recon/recognizer.hpp"
#include "recon/vines.hpp"

namespace recon {

std::pair<Graph, Graph> nydl_pair(int l) {
  if (l < 2) throw PreconditionError("nydl_pair: l must be at least 2");
  const Graph spine = path_graph(2 * l - 1);
  const int middle = l - 1;
  Graph at_middle = spine;
  at_middle.add_vertex(bit(middle));
  Graph beside_middle = spine;
  beside_middle.add_vertex(bit(middle - 1));
  return {at_middle, beside_middle};
}

SameDeckPair path_cycle_pair(int l) {
  if (l < 2) throw PreconditionError("path_cycle_pair: l must be at least 2");
  return {"path-cycle", path_graph(2 * l), disjoint_union(cycle_graph(l + 1), path_graph(l - 1)), l};
}

SameDeckPair small_exception_pair() {
  return {"exception", disjoint_union(cycle_graph(4), path_graph(1)), build_spider({{1, 1, 2}}), 3};
}

SameDeckPair nydl_same_deck_pair(int l) {
  auto [a, b] = nydl_pair(l);
  return {"nydl", a, b, l};
}

SameDeckPair cycle_split_pair(int l) {
  if (l < 4) throw PreconditionError("cycle_split_pair: l must be at least 4");
  return {"cycle-split", cycle_graph(2 * l - 2),
          disjoint_union(cycle_graph(l - 1), cycle_graph(l - 1)), l - 2};
}

SameDeckPair path_split_pair(int l) {
  if (l < 2) throw PreconditionError("path_split_pair: l must be at least 2");
  return {"path-split", disjoint_union(path_graph(l), path_graph(l)),
          disjoint_union(path_graph(l + 1), path_graph(l - 1)), l};
}

std::vector<SameDeckPair> same_deck_pairs(int l) {
  std::vector<SameDeckPair> out;
  if (l >= 2) {
    out.push_back(path_cycle_pair(l));
    out.push_back(nydl_same_deck_pair(l));
    out.push_back(path_split_pair(l));
  }
  if (l == 2) out.push_back(small_exception_pair());
  if (l >= 4) out.push_back(cycle_split_pair(l));
  return out;
}

}  // namespace recon

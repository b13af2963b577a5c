#include "recon/enumerate.hpp"

#include <unordered_set>

#include "recon/errors.hpp"

namespace recon {

namespace filters {

GraphFilter any() {
  return [](const Graph&) { return true; };
}

GraphFilter forests() {
  return [](const Graph& g) { return is_forest(g); };
}

GraphFilter triangle_free() {
  return [](const Graph& g) { return girth(g) > 3; };
}

GraphFilter min_girth(int g) {
  return [g](const Graph& x) { return girth(x) >= g; };
}

}  // namespace filters

namespace {

class Augmenter {
 public:
  Augmenter(int n, const AugmentationHooks& hooks,
            const std::function<void(const Graph&, const CanonicalCode&)>& visit)
      : target_(n), hooks_(hooks), visit_(visit) {}

  void run() {
    const Graph root(0);
    extend(root, canonical_code(root));
  }

 private:
  void extend(const Graph& parent, const CanonicalCode& parent_code) {
    const int m = parent.order();
    if (m == target_) {
      visit_(parent, parent_code);
      return;
    }
    std::unordered_set<std::string> children;
    const Mask subsets = Mask{1} << m;
    for (Mask nbrs = 0; nbrs < subsets; ++nbrs) {
      Graph child = parent;
      child.add_vertex(nbrs);
      if (hooks_.filter && !hooks_.filter(child)) continue;

      const CanonicalLabeling lab = canonical_labeling(child);
      const int last = lab.labeling.back();
      if (last != m && canonical_code(delete_vertex(child, last)) != parent_code) continue;

      CanonicalCode code{write_graph6(lab.form), m + 1};
      if (!children.insert(code.bytes).second) continue;
      if (hooks_.accept && !hooks_.accept(lab.form, code)) continue;
      if (hooks_.cap != 0 && ++accepted_ > hooks_.cap) {
        throw CapExceeded("enumeration cap of " + std::to_string(hooks_.cap) + " exceeded");
      }
      extend(lab.form, code);
    }
  }

  int target_;
  const AugmentationHooks& hooks_;
  const std::function<void(const Graph&, const CanonicalCode&)>& visit_;
  std::uint64_t accepted_ = 0;
};

}  // namespace

void for_each_graph(int n, const AugmentationHooks& hooks,
                    const std::function<void(const Graph&, const CanonicalCode&)>& visit) {
  if (n < 0 || n > kMaxVertices) throw PreconditionError("vertex count outside 0..32");
  Augmenter(n, hooks, visit).run();
}

std::vector<Graph> enumerate_graphs(int n, const GraphFilter& filter, std::uint64_t cap) {
  std::vector<Graph> out;
  AugmentationHooks hooks;
  hooks.filter = filter;
  hooks.cap = cap;
  for_each_graph(n, hooks, [&](const Graph& g, const CanonicalCode&) { out.push_back(g); });
  return out;
}

}  // namespace recon

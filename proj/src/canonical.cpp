#include "recon/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace recon {
namespace {

constexpr int kNoJump = kMaxVertices + 1;

using Cells = std::vector<Mask>;

/// Splits cells by neighbor counts into each cell until the ordered
/// partition is equitable. Fragments are ordered by ascending count, so the
/// result depends only on the structure, not on the labels.
void refine(const Graph& g, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size(); ++s) {
      const Mask splitter = cells[s];
      for (std::size_t i = 0; i < cells.size(); ++i) {
        const Mask cell = cells[i];
        if (std::has_single_bit(cell)) continue;
        std::array<Mask, kMaxVertices + 1> by_count{};
        int lo = kMaxVertices;
        int hi = 0;
        for (int v : VertexSet(cell)) {
          const int c = std::popcount(g.neighbors(v) & splitter);
          by_count[c] |= bit(v);
          lo = std::min(lo, c);
          hi = std::max(hi, c);
        }
        if (lo == hi) continue;
        Cells parts;
        for (int c = lo; c <= hi; ++c) {
          if (by_count[c] != 0) parts.push_back(by_count[c]);
        }
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(i));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(i), parts.begin(), parts.end());
        i += parts.size() - 1;
        changed = true;
      }
    }
  }
}

struct Leaf {
  std::vector<int> labeling;
  std::vector<Mask> rows;
  std::vector<int> path;
};

class Search {
 public:
  explicit Search(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalLabeling run() {
    Cells cells;
    if (n_ > 0) cells.push_back(low_mask(n_));
    std::vector<int> path;
    descend(std::move(cells), path);
    CanonicalLabeling out;
    out.labeling = best_.labeling;
    out.form = Graph::from_rows(best_.rows);
    out.automorphisms = std::move(automorphisms_);
    return out;
  }

 private:
  int descend(Cells cells, std::vector<int>& path) {
    refine(g_, cells);
    const int depth = static_cast<int>(path.size());
    if (static_cast<int>(cells.size()) == n_) return leaf(cells, path);

    std::size_t target = 0;
    while (std::has_single_bit(cells[target])) ++target;
    const Mask cell = cells[target];

    Mask tried = 0;
    for (int v : VertexSet(cell)) {
      if (tried != 0 && equivalent_to_tried(v, tried, path)) continue;
      tried |= bit(v);
      Cells child = cells;
      child[target] = bit(v);
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(target) + 1, cell & ~bit(v));
      path.push_back(v);
      const int back_to = descend(std::move(child), path);
      path.pop_back();
      if (back_to < depth) return back_to;
    }
    return kNoJump;
  }

  int leaf(const Cells& cells, const std::vector<int>& path) {
    Leaf here;
    here.labeling.resize(n_);
    std::vector<int> position(n_);
    for (int i = 0; i < n_; ++i) {
      here.labeling[i] = std::countr_zero(cells[i]);
      position[here.labeling[i]] = i;
    }
    here.rows.assign(n_, 0);
    for (int i = 0; i < n_; ++i) {
      for (int u : g_.neighbor_set(here.labeling[i])) here.rows[i] |= bit(position[u]);
    }
    here.path = path;

    if (!have_first_) {
      have_first_ = true;
      first_ = here;
      best_ = std::move(here);
      return kNoJump;
    }
    if (here.rows == first_.rows) {
      record_automorphism(here, first_);
      return common_prefix(path, first_.path);
    }
    if (here.rows == best_.rows) {
      record_automorphism(here, best_);
      return common_prefix(path, best_.path);
    }
    if (here.rows > best_.rows) best_ = std::move(here);
    return kNoJump;
  }

  void record_automorphism(const Leaf& a, const Leaf& b) {
    std::vector<int> gamma(n_);
    for (int i = 0; i < n_; ++i) gamma[a.labeling[i]] = b.labeling[i];
    automorphisms_.push_back(std::move(gamma));
  }

  static int common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
    return static_cast<int>(i);
  }

  /// True when v shares an orbit with an already explored sibling under the
  /// automorphisms found so far that fix the current path pointwise.
  bool equivalent_to_tried(int v, Mask tried, const std::vector<int>& path) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool any = false;
    for (const auto& gamma : automorphisms_) {
      if (!std::all_of(path.begin(), path.end(), [&](int p) { return gamma[p] == p; })) continue;
      any = true;
      for (int x = 0; x < n_; ++x) parent[find(x)] = find(gamma[x]);
    }
    if (!any) return false;
    const int root = find(v);
    for (int u : VertexSet(tried)) {
      if (find(u) == root) return true;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  bool have_first_ = false;
  Leaf first_;
  Leaf best_;
  std::vector<std::vector<int>> automorphisms_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) { return Search(g).run(); }

CanonicalCode canonical_code(const Graph& g) {
  return {write_graph6(canonical_labeling(g).form), g.order()};
}

Graph canonical_form(const Graph& g) { return canonical_labeling(g).form; }

Graph decode(const CanonicalCode& code) { return parse_graph6(code.bytes); }

bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && canonical_code(a) == canonical_code(b);
}

}  // namespace recon

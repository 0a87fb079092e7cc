#include "pathideal/resolution.hpp"

#include <algorithm>

namespace pathideal {

ColonDecomposition colon_components(const RootedForest& tree, int t,
                                    const LeafPath& lp) {
  if (tree.roots().size() != 1) {
    throw NotATreeError("colon decomposition requires a single tree");
  }
  const VertexList& path = lp.path;  // x_{i_1}, ..., x_{i_t}
  if (static_cast<int>(path.size()) != t) {
    throw std::invalid_argument("leaf path must have exactly t vertices");
  }
  std::set<Vertex> removed(path.begin(), path.end());
  if (lp.head_parent) removed.insert(*lp.head_parent);

  ColonDecomposition dec;
  dec.principal_vertex = lp.head_parent;

  // Subtree hanging at x_{i_0} (or x_{i_1} when the path starts at the
  // root); everything outside it keeps its full-length ideal.
  Vertex anchor = lp.head_parent ? *lp.head_parent : path.front();
  RootedForest anchor_subtree = induced_subtree_at(tree, anchor);
  std::set<Vertex> anchor_vertices(anchor_subtree.vertices().begin(),
                                   anchor_subtree.vertices().end());
  dec.pieces.emplace_back(delete_vertices(tree, anchor_vertices), t);

  // Sibling forests along the path: for each path vertex x_{i_j}, the
  // subtrees under its children other than x_{i_{j+1}}, paired with
  // ideal length t-j.
  int j_start = lp.head_parent ? 0 : 1;
  for (int j = j_start; j <= t - 1; ++j) {
    Vertex xj = (j == 0) ? *lp.head_parent : path[j - 1];
    Vertex xj1 = path[j];
    RootedForest gamma_j = induced_subtree_at(tree, xj);
    RootedForest gamma_j1 = induced_subtree_at(tree, xj1);
    std::set<Vertex> cut(gamma_j1.vertices().begin(),
                         gamma_j1.vertices().end());
    RootedForest delta_j = delete_vertices(gamma_j, cut);
    std::set<Vertex> inside;
    for (Vertex v : delta_j.vertices()) {
      if (removed.count(v)) inside.insert(v);
    }
    dec.pieces.emplace_back(delete_vertices(delta_j, inside), t - j);
  }
  return dec;
}

ColonDecomposition colon_components(const RootedForest& tree, int t) {
  if (tree.roots().size() != 1) {
    throw NotATreeError("colon decomposition requires a single tree");
  }
  return colon_components(tree, t, highest_leaf_path(tree, t));
}

BettiEngine::BettiEngine()
    : selector_([](const RootedForest&, const VertexList& deepest) {
        return deepest.front();
      }) {}

BettiEngine::BettiEngine(LeafSelector selector)
    : selector_(std::move(selector)) {}

BettiTable BettiEngine::betti(const RootedForest& f, int t) {
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  if (t == 1) return BettiTable::koszul(static_cast<int>(f.size()));
  BettiTable acc = BettiTable::trivial();
  for (const RootedForest& comp : f.components()) {
    acc = acc.convolve(betti_tree(comp, t));
  }
  return acc;
}

BettiTable BettiEngine::betti_tree(const RootedForest& tree, int t) {
  if (compute_metrics(tree).height < t - 1) return BettiTable::trivial();

  const std::pair<std::string, int> key{canonical_code(tree), t};
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }

  VertexList deepest = deepest_leaves(tree);
  Vertex leaf = selector_(tree, deepest);
  LeafPath lp = leaf_path_at(tree, t, leaf);
  BettiTable result = betti(delete_vertices(tree, {leaf}), t) +
                      colon_quotient(tree, t, lp).shifted(1, t);

  {
    std::lock_guard<std::mutex> lock(mutex_);
    memo_.emplace(key, result);
  }
  return result;
}

BettiTable BettiEngine::betti_via_leaf(const RootedForest& tree, int t,
                                       Vertex leaf) {
  if (t < 2) throw std::invalid_argument("t must be >= 2");
  if (tree.roots().size() != 1) {
    throw NotATreeError("betti_via_leaf requires a single tree");
  }
  if (compute_metrics(tree).height < t - 1) {
    throw HeightTooSmallError("tree height is below t-1");
  }
  VertexList deepest = deepest_leaves(tree);
  if (std::find(deepest.begin(), deepest.end(), leaf) == deepest.end()) {
    throw std::invalid_argument("vertex " + std::to_string(leaf) +
                                " is not a highest-level leaf");
  }
  LeafPath lp = leaf_path_at(tree, t, leaf);
  return betti(delete_vertices(tree, {leaf}), t) +
         colon_quotient(tree, t, lp).shifted(1, t);
}

BettiTable BettiEngine::colon_quotient(const RootedForest& tree, int t,
                                       const LeafPath& lp) {
  ColonDecomposition dec = colon_components(tree, t, lp);
  BettiTable acc = BettiTable::trivial();
  if (dec.principal_vertex) acc = acc.convolve(BettiTable::koszul(1));
  for (const auto& [piece, tp] : dec.pieces) {
    acc = acc.convolve(betti(piece, tp));
  }
  return acc;
}

BettiTable betti(const RootedForest& f, int t) {
  static BettiEngine engine;
  return engine.betti(f, t);
}

}  // namespace pathideal

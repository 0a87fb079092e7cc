#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pathideal/betti_table.hpp"
#include "pathideal/forest.hpp"

namespace pathideal {

/// The colon ideal of a path ideal by the monomial of a deepest-leaf
/// path decomposes into an optional principal variable plus path ideals
/// of forests on pairwise-disjoint vertex sets.
struct ColonDecomposition {
  /// The parent of the path's first vertex, when it exists.
  std::optional<Vertex> principal_vertex;
  /// (forest, path vertex count) pairs. Pieces with no generators are
  /// kept; their tables are trivial.
  std::vector<std::pair<RootedForest, int>> pieces;
};

/// Decomposition along the given deepest-leaf path. The first piece is
/// the tree minus the whole subtree hanging at the path anchor; the
/// remaining pieces are the sibling forests along the path, with
/// decreasing path length.
ColonDecomposition colon_components(const RootedForest& tree, int t,
                                    const LeafPath& lp);

/// Same, using the deterministic deepest-leaf path. Requires a single
/// tree of height >= t-1.
ColonDecomposition colon_components(const RootedForest& tree, int t);

/// Computes graded Betti tables of path ideal quotients by the
/// mapping-cone recursion: delete a deepest leaf, add the shifted table
/// of the colon quotient, which is a convolution of piece tables.
///
/// Results are memoized keyed on (canonical tree code, t), so isomorphic
/// subtrees are computed once. The memo store is mutex-guarded:
/// concurrent calls return values equal to sequential execution and
/// never observe a partially built table (computation happens outside
/// the lock; a racing duplicate insert is dropped).
class BettiEngine {
 public:
  /// Given the tree and its deepest leaves (ascending), picks the leaf
  /// to delete. Any choice yields the same table; the selector exists so
  /// tests can exercise that independence.
  using LeafSelector =
      std::function<Vertex(const RootedForest&, const VertexList&)>;

  /// Deterministic engine: always the smallest-identifier deepest leaf.
  BettiEngine();
  explicit BettiEngine(LeafSelector selector);

  /// Betti table of S/I_t(f) for any rooted forest. t=1 is the Koszul
  /// complex on all vertices; a forest is the convolution of its
  /// component tables; a tree of height < t-1 has the trivial table.
  BettiTable betti(const RootedForest& f, int t);

  /// One recursion step with a forced deepest leaf: the input must be a
  /// single tree of height >= t-1 and `leaf` one of its deepest leaves.
  BettiTable betti_via_leaf(const RootedForest& tree, int t, Vertex leaf);

  /// Convolved table of the colon quotient for the given leaf path.
  BettiTable colon_quotient(const RootedForest& tree, int t,
                            const LeafPath& lp);

 private:
  BettiTable betti_tree(const RootedForest& tree, int t);

  LeafSelector selector_;
  std::map<std::pair<std::string, int>, BettiTable> memo_;
  std::mutex mutex_;
};

/// Convenience entry point backed by a process-wide engine.
BettiTable betti(const RootedForest& f, int t);

}  // namespace pathideal

#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pathideal {

using Vertex = int;
using VertexList = std::vector<Vertex>;

struct TreeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SelfLoopError : TreeError { using TreeError::TreeError; };
struct MultiParentError : TreeError { using TreeError::TreeError; };
struct CycleError : TreeError { using TreeError::TreeError; };
struct UnknownVertexError : TreeError { using TreeError::TreeError; };
struct HeightTooSmallError : TreeError { using TreeError::TreeError; };
struct NotATreeError : TreeError { using TreeError::TreeError; };

/// A rooted forest with edges directed away from the roots.
///
/// Vertex identifiers are arbitrary positive integers, not necessarily
/// contiguous. Children lists, roots, and every enumeration below are
/// ordered by ascending identifier, which makes all derived data
/// deterministic. Instances are immutable once built; operations return
/// new forests, so shared inputs are safe to use concurrently.
class RootedForest {
 public:
  RootedForest() = default;

  /// Builds a forest from directed (parent, child) pairs. Vertices not
  /// appearing in any edge can be declared via `isolated`. Roots are the
  /// vertices that never appear as a child.
  ///
  /// Throws SelfLoopError on (v, v), MultiParentError when a vertex
  /// appears as a child twice, CycleError when parent iteration does not
  /// terminate.
  static RootedForest from_edges(
      const std::vector<std::pair<Vertex, Vertex>>& edges,
      const std::vector<Vertex>& isolated = {});

  const std::set<Vertex>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  bool contains(Vertex v) const { return vertices_.count(v) != 0; }

  /// Parent of `v`, or nullopt when `v` is a root.
  std::optional<Vertex> parent(Vertex v) const;
  /// Children of `v`, ascending.
  const VertexList& children(Vertex v) const;
  bool is_leaf(Vertex v) const { return children(v).empty(); }

  /// Roots (vertices without a parent), ascending.
  VertexList roots() const;
  /// All leaves, ascending.
  VertexList leaves() const;
  /// Directed edges sorted by (parent, child).
  std::vector<std::pair<Vertex, Vertex>> edges() const;
  /// Proper descendants of `v`, ascending.
  VertexList descendants(Vertex v) const;

  /// Connected components as stand-alone forests, ordered by their root.
  std::vector<RootedForest> components() const;

  bool operator==(const RootedForest& other) const = default;

 private:
  void require(Vertex v) const;

  std::set<Vertex> vertices_;
  std::map<Vertex, Vertex> parent_;
  std::map<Vertex, VertexList> children_;
};

/// Levels, height, and vertex degrees of a forest. Levels are relative to
/// the root of each component; the height of a forest is the largest
/// component height (0 for the empty forest).
struct ForestMetrics {
  std::map<Vertex, int> level;
  std::map<Vertex, int> degree;
  int height = 0;
};

ForestMetrics compute_metrics(const RootedForest& f);

/// All directed paths on exactly `t` vertices, each as its vertex list,
/// in lexicographic order. These are the minimal generators of the path
/// ideal of the forest for that `t`.
std::vector<VertexList> enumerate_paths(const RootedForest& f, int t);

/// The induced subtree on `v` and its descendants, rooted at `v`.
RootedForest induced_subtree_at(const RootedForest& f, Vertex v);

/// The induced subforest after removing `doomed` and all incident edges.
/// Children of removed vertices become roots of new components.
RootedForest delete_vertices(const RootedForest& f,
                             const std::set<Vertex>& doomed);

/// A directed path on t vertices ending at a leaf, together with the
/// parent of its first vertex when one exists.
struct LeafPath {
  std::optional<Vertex> head_parent;
  VertexList path;
};

/// All leaves of maximal level, ascending. Empty for the empty forest.
VertexList deepest_leaves(const RootedForest& f);

/// The path of `t` vertices terminating at `leaf`, which must sit at
/// level >= t-1. Throws HeightTooSmallError otherwise.
LeafPath leaf_path_at(const RootedForest& f, int t, Vertex leaf);

/// The path of `t` vertices terminating at the deepest leaf (ties broken
/// by smallest identifier). Throws HeightTooSmallError when the forest
/// height is below t-1. Deterministic: equal inputs give equal output.
LeafPath highest_leaf_path(const RootedForest& f, int t);

/// Number of leaves whose level is at least t-1.
int leaf_count_deep(const RootedForest& f, int t);

/// Maximal number of pairwise vertex-disjoint directed paths of length t
/// (t+1 vertices each), computed by a bottom-up chain-cutting dynamic
/// program: each vertex propagates its longest unconsumed descending
/// chain and a path is cut as soon as the chain reaches t+1 vertices.
int max_disjoint_paths(const RootedForest& f, int t);

/// Repeatedly deletes leaves of level < t-1 until none remain. The
/// result carries exactly the same degree-t path generators.
RootedForest clean_form(const RootedForest& f, int t);

struct BroomResult {
  bool broom = false;
  /// Handle length s when `broom` is true, -1 otherwise.
  int handle_length = -1;
};

/// Tests whether a single tree is a broom of type `t`: a handle
/// x_0,...,x_s descending from the root such that every off-handle edge
/// is (x_i, y) with i >= s-t and y a leaf. Candidate handles are all
/// root-to-leaf paths; the maximal valid s is reported.
///
/// The "y is a leaf" clause is an interpretation: the definition only
/// gives off-handle edges the form (x_i, y), but any child of y would
/// itself violate that form, so off-handle vertices must be leaves.
/// Throws NotATreeError unless the input has exactly one component.
BroomResult is_broom(const RootedForest& f, int t);

/// Canonical code of the forest: per tree, a nested-parenthesis string
/// with children codes sorted; component codes sorted and concatenated.
/// Two forests get the same code exactly when they are isomorphic as
/// rooted forests (ignoring identifiers).
std::string canonical_code(const RootedForest& f);

}  // namespace pathideal

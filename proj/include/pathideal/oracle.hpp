#pragma once

#include <set>
#include <vector>

#include "pathideal/betti_table.hpp"
#include "pathideal/forest.hpp"

namespace pathideal {

/// A squarefree monomial ideal given by its support sets. Generators are
/// minimalized at construction: duplicates and supersets of other
/// generators are dropped, so the stored list is an antichain.
class SquarefreeIdeal {
 public:
  SquarefreeIdeal(std::set<Vertex> ground,
                  std::vector<std::set<Vertex>> generators);

  /// The path ideal of a forest: ground set = vertices, generators =
  /// vertex sets of the directed paths on t vertices.
  static SquarefreeIdeal path_ideal(const RootedForest& f, int t);

  const std::set<Vertex>& ground_set() const { return ground_; }
  const std::vector<std::set<Vertex>>& generators() const { return gens_; }
  bool zero() const { return gens_.empty(); }

 private:
  std::set<Vertex> ground_;
  std::vector<std::set<Vertex>> gens_;
};

/// A simplicial complex stored as its facet antichain. Faces are exactly
/// the subsets of facets. An empty facet list is normalized to the empty
/// complex { {} }, whose only face is the empty set.
class SimplicialComplex {
 public:
  SimplicialComplex(std::set<Vertex> ground,
                    std::vector<std::set<Vertex>> facets);

  const std::set<Vertex>& ground_set() const { return ground_; }
  const std::vector<std::set<Vertex>>& facets() const { return facets_; }
  bool is_face(const std::set<Vertex>& sigma) const;

 private:
  std::set<Vertex> ground_;
  std::vector<std::set<Vertex>> facets_;
};

/// The Stanley-Reisner complex of a squarefree ideal: faces are the
/// subsets of the ground set containing no generator.
SimplicialComplex stanley_reisner(const SquarefreeIdeal& ideal);

/// Dimensions of reduced simplicial homology, listed by degree starting
/// at -1 (so index k holds dim of degree k-1). Characteristic 0 means
/// exact rational ranks via fraction-free integer elimination; a prime p
/// means ranks over the field with p elements. Boundary orientation:
/// vertices of a face sorted ascending, signs alternating by position.
std::vector<long> reduced_homology_dims(const SimplicialComplex& complex,
                                        int characteristic);

/// Graded Betti numbers of S/I from Hochster's formula: for i >= 1,
/// beta_{i,j} = sum over vertex subsets W of size j of the dimension of
/// reduced homology in degree j-i-1 of the complex restricted to W, plus
/// the entry (0,0) = 1. Subsets touching vertices outside the union of
/// generator supports restrict to cones and are skipped; that pruning
/// never changes the result.
BettiTable hochster_betti(const SquarefreeIdeal& ideal, int characteristic);

/// Single entry beta_{i,j}(S/I) by the same formula, summing only over
/// subsets of size j.
Count hochster_entry(const SquarefreeIdeal& ideal, int i, int j,
                     int characteristic);

/// Exact maximum number of pairwise vertex-disjoint directed paths on
/// t+1 vertices, by exhaustive search. Intended for small forests.
int brute_force_disjoint_paths(const RootedForest& f, int t);

}  // namespace pathideal

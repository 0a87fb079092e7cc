#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "pathideal/forest.hpp"
#include "support/corpus.hpp"

using namespace pathideal;
using testing::line_graph;
using testing::example_tree;
using testing::random_tree;
using testing::relabel;
using testing::star_tree;

namespace {

// Independent count of directed paths on t vertices: for each vertex,
// the number of descendants at distance exactly t-1, found by walking
// the children lists level by level.
long count_paths_by_levels(const RootedForest& f, int t) {
  long total = 0;
  for (Vertex v : f.vertices()) {
    VertexList frontier{v};
    for (int step = 0; step < t - 1; ++step) {
      VertexList next;
      for (Vertex w : frontier) {
        const auto& kids = f.children(w);
        next.insert(next.end(), kids.begin(), kids.end());
      }
      frontier = std::move(next);
    }
    total += static_cast<long>(frontier.size());
  }
  return total;
}

}  // namespace

TEST_SUITE("forest") {

TEST_CASE("example tree construction") {
  RootedForest f = example_tree();
  CHECK(f.size() == 13);
  CHECK(f.roots() == VertexList{1});
  CHECK(f.children(4) == VertexList{7, 8, 9});
  CHECK(*f.parent(13) == 12);
  CHECK_FALSE(f.parent(1).has_value());
}

TEST_CASE("single declared vertex") {
  RootedForest f = RootedForest::from_edges({}, {1});
  CHECK(f.size() == 1);
  CHECK(f.roots() == VertexList{1});
  CHECK(f.is_leaf(1));
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(RootedForest::from_edges({{1, 2}, {2, 1}}), CycleError);
  CHECK_THROWS_AS(RootedForest::from_edges({{1, 1}}), SelfLoopError);
  CHECK_THROWS_AS(RootedForest::from_edges({{1, 2}, {3, 2}}),
                  MultiParentError);
  CHECK_THROWS_AS(RootedForest::from_edges({{1, 2}, {1, 2}}),
                  MultiParentError);
  CHECK_THROWS_AS(RootedForest::from_edges({{1, 2}, {2, 3}, {3, 1}}),
                  CycleError);
}

TEST_CASE("metrics of the example tree") {
  ForestMetrics m = compute_metrics(example_tree());
  CHECK(m.height == 4);
  CHECK(m.level.at(13) == 4);
  CHECK(m.level.at(1) == 0);
  CHECK(m.degree.at(4) == 4);
  CHECK(m.degree.at(1) == 3);
  CHECK(m.degree.at(13) == 1);
}

TEST_CASE("metrics of a single vertex") {
  ForestMetrics m = compute_metrics(RootedForest::from_edges({}, {5}));
  CHECK(m.height == 0);
  CHECK(m.degree.at(5) == 0);
}

TEST_CASE("example tree generators for every t") {
  RootedForest f = example_tree();
  std::vector<VertexList> t2 = enumerate_paths(f, 2);
  std::vector<VertexList> expected2 = {{1, 2},  {1, 3},  {1, 4},  {2, 5},
                                       {2, 6},  {4, 7},  {4, 8},  {4, 9},
                                       {5, 10}, {8, 11}, {8, 12}, {12, 13}};
  CHECK(t2 == expected2);

  std::vector<VertexList> expected3 = {
      {1, 2, 5},  {1, 2, 6},  {1, 4, 7},  {1, 4, 8},   {1, 4, 9},
      {2, 5, 10}, {4, 8, 11}, {4, 8, 12}, {8, 12, 13}};
  CHECK(enumerate_paths(f, 3) == expected3);

  std::vector<VertexList> expected4 = {
      {1, 2, 5, 10}, {1, 4, 8, 11}, {1, 4, 8, 12}, {4, 8, 12, 13}};
  CHECK(enumerate_paths(f, 4) == expected4);

  CHECK(enumerate_paths(f, 5) ==
        std::vector<VertexList>{{1, 4, 8, 12, 13}});
  CHECK(enumerate_paths(f, 6).empty());
}

TEST_CASE("path count matches the level-walk count") {
  std::mt19937 rng(7);
  for (int round = 0; round < 60; ++round) {
    RootedForest f = random_tree(rng, 1 + round % 11);
    for (int t = 1; t <= 5; ++t) {
      CHECK(static_cast<long>(enumerate_paths(f, t).size()) ==
            count_paths_by_levels(f, t));
    }
  }
}

TEST_CASE("induced subtrees of the example tree") {
  RootedForest f = example_tree();
  RootedForest at8 = induced_subtree_at(f, 8);
  CHECK(at8.vertices() == std::set<Vertex>{8, 11, 12, 13});
  CHECK(at8.roots() == VertexList{8});
  CHECK(induced_subtree_at(f, 13).vertices() == std::set<Vertex>{13});
  CHECK(induced_subtree_at(f, 1) == f);
  CHECK_THROWS_AS(induced_subtree_at(f, 99), UnknownVertexError);
}

TEST_CASE("vertex deletion") {
  RootedForest f = example_tree();
  RootedForest no13 = delete_vertices(f, {13});
  CHECK(no13.size() == 12);
  CHECK(no13.is_leaf(12));

  RootedForest cut = delete_vertices(f, {4, 8, 12, 13});
  CHECK(cut.roots() == VertexList{1, 7, 9, 11});
  auto comps = cut.components();
  REQUIRE(comps.size() == 4);
  CHECK(comps[0].vertices() == std::set<Vertex>{1, 2, 3, 5, 6, 10});
  CHECK(comps[1].vertices() == std::set<Vertex>{7});

  CHECK(delete_vertices(f, f.vertices()).empty());
  CHECK_THROWS_AS(delete_vertices(f, {42}), UnknownVertexError);
}

TEST_CASE("deleting a leaf removes exactly its paths") {
  std::mt19937 rng(11);
  for (int round = 0; round < 40; ++round) {
    RootedForest f = random_tree(rng, 2 + round % 9);
    Vertex leaf = f.leaves().front();
    for (int t = 1; t <= 4; ++t) {
      std::vector<VertexList> all = enumerate_paths(f, t);
      std::vector<VertexList> kept;
      for (const auto& p : all) {
        if (std::find(p.begin(), p.end(), leaf) == p.end()) kept.push_back(p);
      }
      CHECK(enumerate_paths(delete_vertices(f, {leaf}), t) == kept);
    }
  }
}

TEST_CASE("highest leaf path") {
  RootedForest f = example_tree();
  LeafPath lp = highest_leaf_path(f, 3);
  CHECK(lp.head_parent == Vertex{4});
  CHECK(lp.path == VertexList{8, 12, 13});

  LeafPath l4 = highest_leaf_path(line_graph(4), 2);
  CHECK(l4.head_parent == Vertex{2});
  CHECK(l4.path == VertexList{3, 4});

  LeafPath whole = highest_leaf_path(line_graph(3), 3);
  CHECK_FALSE(whole.head_parent.has_value());
  CHECK(whole.path == VertexList{1, 2, 3});

  CHECK_THROWS_AS(highest_leaf_path(line_graph(3), 4), HeightTooSmallError);
}

TEST_CASE("highest leaf path is deterministic and breaks ties low") {
  // two deepest leaves 4 and 5; the path must end at 4
  RootedForest f = RootedForest::from_edges({{1, 2}, {1, 3}, {2, 5}, {3, 4}});
  LeafPath a = highest_leaf_path(f, 2);
  LeafPath b = highest_leaf_path(f, 2);
  CHECK(a.path == b.path);
  CHECK(a.head_parent == b.head_parent);
  CHECK(a.path == VertexList{3, 4});
  CHECK(deepest_leaves(f) == VertexList{4, 5});
}

TEST_CASE("deep leaf count") {
  RootedForest f = example_tree();
  CHECK(leaf_count_deep(f, 2) == 7);
  CHECK(leaf_count_deep(f, 4) == 3);
  CHECK(leaf_count_deep(RootedForest::from_edges({}, {1}), 2) == 0);
}

TEST_CASE("disjoint path packing on lines and stars") {
  for (int t = 1; t <= 4; ++t) {
    for (int n = 1; n <= 12; ++n) {
      CHECK(max_disjoint_paths(line_graph(n), t) == n / (t + 1));
    }
  }
  CHECK(max_disjoint_paths(line_graph(4), 2) == 1);
  CHECK(max_disjoint_paths(example_tree(), 2) == 3);
  RootedForest isolated = RootedForest::from_edges({}, {1, 2, 3});
  CHECK(max_disjoint_paths(isolated, 1) == 0);
}

TEST_CASE("clean form") {
  RootedForest cleaned = clean_form(example_tree(), 4);
  CHECK(cleaned.vertices() ==
        std::set<Vertex>{1, 2, 4, 5, 8, 10, 11, 12, 13});
  for (int n : {3, 5, 8}) {
    for (int t = 2; t <= n; ++t) {
      CHECK(clean_form(line_graph(n), t) == line_graph(n));
    }
  }
  CHECK(clean_form(star_tree(4), 3).empty());
}

TEST_CASE("clean form is idempotent and preserves generators") {
  std::mt19937 rng(23);
  for (int round = 0; round < 50; ++round) {
    RootedForest f = random_tree(rng, 2 + round % 10);
    for (int t = 2; t <= 4; ++t) {
      RootedForest c = clean_form(f, t);
      CHECK(clean_form(c, t) == c);
      CHECK(enumerate_paths(c, t) == enumerate_paths(f, t));
    }
  }
}

TEST_CASE("broom classification") {
  for (int n = 1; n <= 6; ++n) {
    BroomResult r = is_broom(line_graph(n), 2);
    CHECK(r.broom);
    CHECK(r.handle_length == n - 1);
  }
  BroomResult star = is_broom(star_tree(5), 2);
  CHECK(star.broom);
  CHECK(star.handle_length == 1);

  BroomResult cleaned = is_broom(clean_form(example_tree(), 4), 4);
  CHECK_FALSE(cleaned.broom);

  RootedForest forest = RootedForest::from_edges({{1, 2}}, {3});
  CHECK_THROWS_AS(is_broom(forest, 2), NotATreeError);
}

TEST_CASE("broom verdict survives order-preserving relabeling") {
  std::mt19937 rng(31);
  for (int round = 0; round < 40; ++round) {
    RootedForest f = random_tree(rng, 1 + round % 9);
    for (int t = 2; t <= 3; ++t) {
      BroomResult base = is_broom(f, t);
      for (auto map : {std::function<Vertex(Vertex)>([](Vertex v) {
                         return v * 2;
                       }),
                       std::function<Vertex(Vertex)>([](Vertex v) {
                         return v + 17;
                       })}) {
        BroomResult moved = is_broom(relabel(f, map), t);
        CHECK(moved.broom == base.broom);
        CHECK(moved.handle_length == base.handle_length);
      }
    }
  }
}

TEST_CASE("canonical code identifies shapes, not labels") {
  RootedForest a = RootedForest::from_edges({{1, 2}, {1, 3}, {3, 4}});
  RootedForest b = RootedForest::from_edges({{7, 9}, {7, 5}, {5, 6}});
  CHECK(canonical_code(a) == canonical_code(b));
  RootedForest c = RootedForest::from_edges({{1, 2}, {2, 3}, {3, 4}});
  CHECK(canonical_code(a) != canonical_code(c));
  CHECK(canonical_code(RootedForest()) == "");
}

}  // TEST_SUITE

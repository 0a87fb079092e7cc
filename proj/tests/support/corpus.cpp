#include "support/corpus.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace pathideal::testing {

RootedForest example_tree() {
  return RootedForest::from_edges({{1, 2},
                                   {1, 3},
                                   {1, 4},
                                   {2, 5},
                                   {2, 6},
                                   {4, 7},
                                   {4, 8},
                                   {4, 9},
                                   {5, 10},
                                   {8, 11},
                                   {8, 12},
                                   {12, 13}});
}

RootedForest line_graph(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  return RootedForest::from_edges(edges, {1});
}

RootedForest star_tree(int leaf_count) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int v = 2; v <= leaf_count + 1; ++v) edges.emplace_back(1, v);
  return RootedForest::from_edges(edges, {1});
}

namespace {

// Shape codes of rooted trees on n vertices: "(" + child codes joined in
// non-increasing (size, code) order + ")". Each shape appears once.
const std::vector<std::string>& shape_codes(int n) {
  static std::vector<std::vector<std::string>> cache{{}, {"()"}};
  while (static_cast<int>(cache.size()) <= n) {
    int size = static_cast<int>(cache.size());
    std::vector<std::string> out;
    // Pick child subtrees in non-increasing (size, index) order.
    std::function<void(int, int, int, std::string&)> fill =
        [&](int remaining, int max_size, int max_index, std::string& acc) {
          if (remaining == 0) {
            out.push_back("(" + acc + ")");
            return;
          }
          for (int s = std::min(remaining, max_size); s >= 1; --s) {
            const auto& codes = cache[s];
            int start = (s == max_size)
                            ? std::min(max_index,
                                       static_cast<int>(codes.size()) - 1)
                            : static_cast<int>(codes.size()) - 1;
            for (int idx = start; idx >= 0; --idx) {
              std::size_t mark = acc.size();
              acc += codes[idx];
              fill(remaining - s, s, idx, acc);
              acc.resize(mark);
            }
          }
        };
    std::string acc;
    fill(size - 1, size - 1, 0x7fffffff, acc);
    std::sort(out.begin(), out.end());
    cache.push_back(std::move(out));
  }
  return cache[n];
}

RootedForest tree_from_shape(const std::string& code) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<Vertex> stack;
  Vertex next = 1;
  for (char ch : code) {
    if (ch == '(') {
      Vertex v = next++;
      if (!stack.empty()) edges.emplace_back(stack.back(), v);
      stack.push_back(v);
    } else {
      stack.pop_back();
    }
  }
  return RootedForest::from_edges(edges, {1});
}

}  // namespace

std::vector<RootedForest> all_rooted_tree_shapes(int n) {
  std::vector<RootedForest> out;
  for (const std::string& code : shape_codes(n)) {
    out.push_back(tree_from_shape(code));
  }
  return out;
}

std::vector<RootedForest> all_rooted_tree_shapes_upto(int n) {
  std::vector<RootedForest> out;
  for (int k = 1; k <= n; ++k) {
    auto shapes = all_rooted_tree_shapes(k);
    out.insert(out.end(), shapes.begin(), shapes.end());
  }
  return out;
}

std::vector<RootedForest> parent_array_shapes(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("supported for 1 <= n <= 8");
  std::vector<RootedForest> out;
  std::set<std::string> seen;
  // parents[v-1] in {0 (root), 1..n} \ {v}
  std::vector<int> parents(n, 0);
  std::function<void(int)> scan = [&](int pos) {
    if (pos == n) {
      int roots = 0;
      for (int v = 1; v <= n; ++v) {
        if (parents[v - 1] == 0) ++roots;
      }
      if (roots != 1) return;
      // every vertex must reach the root without revisiting
      for (int v = 1; v <= n; ++v) {
        int cur = v, steps = 0;
        while (parents[cur - 1] != 0) {
          cur = parents[cur - 1];
          if (++steps > n) return;  // cycle
        }
      }
      // canonical code straight from the parent array
      std::vector<std::vector<int>> kids(n + 1);
      int root = 0;
      for (int v = 1; v <= n; ++v) {
        if (parents[v - 1] == 0) {
          root = v;
        } else {
          kids[parents[v - 1]].push_back(v);
        }
      }
      std::function<std::string(int)> code = [&](int v) {
        std::vector<std::string> parts;
        for (int c : kids[v]) parts.push_back(code(c));
        std::sort(parts.begin(), parts.end());
        std::string s = "(";
        for (const auto& p : parts) s += p;
        return s + ")";
      };
      if (!seen.insert(code(root)).second) return;
      std::vector<std::pair<Vertex, Vertex>> edges;
      for (int v = 1; v <= n; ++v) {
        if (parents[v - 1] != 0) edges.emplace_back(parents[v - 1], v);
      }
      out.push_back(RootedForest::from_edges(edges, {root}));
      return;
    }
    for (int p = 0; p <= n; ++p) {
      if (p == pos + 1) continue;
      parents[pos] = p;
      scan(pos + 1);
    }
  };
  scan(0);
  return out;
}

RootedForest random_tree(std::mt19937& rng, int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int v = 2; v <= n; ++v) {
    std::uniform_int_distribution<int> pick(1, v - 1);
    edges.emplace_back(pick(rng), v);
  }
  return RootedForest::from_edges(edges, {1});
}

RootedForest relabel(const RootedForest& f,
                     const std::function<Vertex(Vertex)>& map) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& [u, v] : f.edges()) edges.emplace_back(map(u), map(v));
  std::vector<Vertex> isolated;
  for (Vertex v : f.vertices()) isolated.push_back(map(v));
  return RootedForest::from_edges(edges, isolated);
}

}  // namespace pathideal::testing

#include "pathideal/forest.hpp"

#include <algorithm>
#include <functional>

namespace pathideal {

namespace {

void check_identifier(Vertex v) {
  if (v <= 0) {
    throw TreeError("vertex identifiers must be positive, got " +
                    std::to_string(v));
  }
}

}  // namespace

RootedForest RootedForest::from_edges(
    const std::vector<std::pair<Vertex, Vertex>>& edges,
    const std::vector<Vertex>& isolated) {
  RootedForest f;
  for (Vertex v : isolated) {
    check_identifier(v);
    f.vertices_.insert(v);
  }
  for (const auto& [u, v] : edges) {
    check_identifier(u);
    check_identifier(v);
    if (u == v) {
      throw SelfLoopError("self loop at vertex " + std::to_string(v));
    }
    if (f.parent_.count(v)) {
      throw MultiParentError("vertex " + std::to_string(v) +
                             " has more than one parent");
    }
    f.vertices_.insert(u);
    f.vertices_.insert(v);
    f.parent_[v] = u;
    f.children_[u].push_back(v);
  }
  // Parent iteration from every vertex must terminate at a root.
  std::map<Vertex, int> state;  // 0 unseen, 1 on stack, 2 done
  for (Vertex start : f.vertices_) {
    if (state[start] != 0) continue;
    VertexList chain;
    Vertex v = start;
    while (true) {
      if (state[v] == 1) {
        throw CycleError("cycle through vertex " + std::to_string(v));
      }
      if (state[v] == 2) break;
      state[v] = 1;
      chain.push_back(v);
      auto it = f.parent_.find(v);
      if (it == f.parent_.end()) break;
      v = it->second;
    }
    for (Vertex w : chain) state[w] = 2;
  }
  for (Vertex v : f.vertices_) {
    auto& kids = f.children_[v];
    std::sort(kids.begin(), kids.end());
  }
  return f;
}

void RootedForest::require(Vertex v) const {
  if (!contains(v)) {
    throw UnknownVertexError("unknown vertex " + std::to_string(v));
  }
}

std::optional<Vertex> RootedForest::parent(Vertex v) const {
  require(v);
  auto it = parent_.find(v);
  if (it == parent_.end()) return std::nullopt;
  return it->second;
}

const VertexList& RootedForest::children(Vertex v) const {
  require(v);
  return children_.at(v);
}

VertexList RootedForest::roots() const {
  VertexList out;
  for (Vertex v : vertices_) {
    if (!parent_.count(v)) out.push_back(v);
  }
  return out;
}

VertexList RootedForest::leaves() const {
  VertexList out;
  for (Vertex v : vertices_) {
    if (children_.at(v).empty()) out.push_back(v);
  }
  return out;
}

std::vector<std::pair<Vertex, Vertex>> RootedForest::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const auto& [u, kids] : children_) {
    for (Vertex v : kids) out.emplace_back(u, v);
  }
  return out;
}

VertexList RootedForest::descendants(Vertex v) const {
  require(v);
  VertexList out;
  VertexList stack = children_.at(v);
  while (!stack.empty()) {
    Vertex w = stack.back();
    stack.pop_back();
    out.push_back(w);
    const auto& kids = children_.at(w);
    stack.insert(stack.end(), kids.begin(), kids.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RootedForest> RootedForest::components() const {
  std::vector<RootedForest> out;
  for (Vertex r : roots()) {
    std::vector<std::pair<Vertex, Vertex>> sub;
    VertexList stack{r};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex c : children_.at(v)) {
        sub.emplace_back(v, c);
        stack.push_back(c);
      }
    }
    out.push_back(from_edges(sub, {r}));
  }
  return out;
}

ForestMetrics compute_metrics(const RootedForest& f) {
  ForestMetrics m;
  for (Vertex r : f.roots()) {
    std::vector<std::pair<Vertex, int>> stack{{r, 0}};
    while (!stack.empty()) {
      auto [v, lv] = stack.back();
      stack.pop_back();
      m.level[v] = lv;
      m.height = std::max(m.height, lv);
      for (Vertex c : f.children(v)) stack.emplace_back(c, lv + 1);
    }
  }
  for (Vertex v : f.vertices()) {
    m.degree[v] =
        static_cast<int>(f.children(v).size()) + (f.parent(v) ? 1 : 0);
  }
  return m;
}

std::vector<VertexList> enumerate_paths(const RootedForest& f, int t) {
  if (t < 1) throw std::invalid_argument("path vertex count must be >= 1");
  std::vector<VertexList> out;
  VertexList path;
  std::function<void(Vertex)> extend = [&](Vertex v) {
    path.push_back(v);
    if (static_cast<int>(path.size()) == t) {
      out.push_back(path);
    } else {
      for (Vertex c : f.children(v)) extend(c);
    }
    path.pop_back();
  };
  for (Vertex v : f.vertices()) extend(v);
  std::sort(out.begin(), out.end());
  return out;
}

RootedForest induced_subtree_at(const RootedForest& f, Vertex v) {
  if (!f.contains(v)) {
    throw UnknownVertexError("unknown vertex " + std::to_string(v));
  }
  std::set<Vertex> keep;
  keep.insert(v);
  for (Vertex w : f.descendants(v)) keep.insert(w);
  std::vector<std::pair<Vertex, Vertex>> sub;
  for (Vertex u : keep) {
    for (Vertex c : f.children(u)) sub.emplace_back(u, c);
  }
  return RootedForest::from_edges(sub, {v});
}

RootedForest delete_vertices(const RootedForest& f,
                             const std::set<Vertex>& doomed) {
  for (Vertex v : doomed) {
    if (!f.contains(v)) {
      throw UnknownVertexError("unknown vertex " + std::to_string(v));
    }
  }
  VertexList keep;
  for (Vertex v : f.vertices()) {
    if (!doomed.count(v)) keep.push_back(v);
  }
  std::vector<std::pair<Vertex, Vertex>> sub;
  for (Vertex u : keep) {
    for (Vertex c : f.children(u)) {
      if (!doomed.count(c)) sub.emplace_back(u, c);
    }
  }
  return RootedForest::from_edges(sub, keep);
}

VertexList deepest_leaves(const RootedForest& f) {
  if (f.empty()) return {};
  ForestMetrics m = compute_metrics(f);
  VertexList out;
  for (Vertex v : f.vertices()) {
    if (m.level.at(v) == m.height && f.is_leaf(v)) out.push_back(v);
  }
  return out;
}

LeafPath leaf_path_at(const RootedForest& f, int t, Vertex leaf) {
  if (t < 1) throw std::invalid_argument("path vertex count must be >= 1");
  if (!f.contains(leaf)) {
    throw UnknownVertexError("unknown vertex " + std::to_string(leaf));
  }
  VertexList rev{leaf};
  Vertex v = leaf;
  for (int step = 1; step < t; ++step) {
    auto p = f.parent(v);
    if (!p) {
      throw HeightTooSmallError("leaf " + std::to_string(leaf) +
                                " sits at level below " + std::to_string(t - 1));
    }
    v = *p;
    rev.push_back(v);
  }
  LeafPath lp;
  lp.head_parent = f.parent(v);
  lp.path.assign(rev.rbegin(), rev.rend());
  return lp;
}

LeafPath highest_leaf_path(const RootedForest& f, int t) {
  if (t < 1) throw std::invalid_argument("path vertex count must be >= 1");
  VertexList deepest = deepest_leaves(f);
  if (deepest.empty() || compute_metrics(f).height < t - 1) {
    throw HeightTooSmallError("forest height is below " + std::to_string(t - 1));
  }
  return leaf_path_at(f, t, deepest.front());
}

int leaf_count_deep(const RootedForest& f, int t) {
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  ForestMetrics m = compute_metrics(f);
  int count = 0;
  for (Vertex v : f.leaves()) {
    if (m.level.at(v) >= t - 1) ++count;
  }
  return count;
}

int max_disjoint_paths(const RootedForest& f, int t) {
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  int count = 0;
  std::function<int(Vertex)> chain = [&](Vertex v) -> int {
    int longest = 0;
    for (Vertex c : f.children(v)) longest = std::max(longest, chain(c));
    int len = longest + 1;
    if (len == t + 1) {
      ++count;
      return 0;
    }
    return len;
  };
  for (Vertex r : f.roots()) chain(r);
  return count;
}

RootedForest clean_form(const RootedForest& f, int t) {
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  RootedForest cur = f;
  while (!cur.empty()) {
    ForestMetrics m = compute_metrics(cur);
    std::set<Vertex> doomed;
    for (Vertex v : cur.leaves()) {
      if (m.level.at(v) < t - 1) doomed.insert(v);
    }
    if (doomed.empty()) break;
    cur = delete_vertices(cur, doomed);
  }
  return cur;
}

BroomResult is_broom(const RootedForest& f, int t) {
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  if (f.roots().size() != 1) {
    throw NotATreeError("broom test requires a single tree, got " +
                        std::to_string(f.roots().size()) + " components");
  }
  std::vector<VertexList> candidates;
  for (Vertex leaf : f.leaves()) {
    VertexList rev{leaf};
    Vertex v = leaf;
    while (auto p = f.parent(v)) {
      v = *p;
      rev.push_back(v);
    }
    candidates.emplace_back(rev.rbegin(), rev.rend());
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const VertexList& a, const VertexList& b) {
              if (a.size() != b.size()) return a.size() > b.size();
              return a < b;
            });
  for (const VertexList& handle : candidates) {
    int s = static_cast<int>(handle.size()) - 1;
    std::map<Vertex, int> index;
    for (int i = 0; i <= s; ++i) index[handle[i]] = i;
    bool ok = true;
    for (Vertex v : f.vertices()) {
      if (index.count(v)) continue;
      if (!f.is_leaf(v)) {
        ok = false;
        break;
      }
      Vertex p = *f.parent(v);
      auto it = index.find(p);
      if (it == index.end() || it->second < s - t) {
        ok = false;
        break;
      }
    }
    if (ok) return {true, s};
  }
  return {false, -1};
}

std::string canonical_code(const RootedForest& f) {
  std::function<std::string(Vertex)> code = [&](Vertex v) {
    std::vector<std::string> parts;
    for (Vertex c : f.children(v)) parts.push_back(code(c));
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (const auto& p : parts) out += p;
    out += ")";
    return out;
  };
  std::vector<std::string> comps;
  for (Vertex r : f.roots()) comps.push_back(code(r));
  std::sort(comps.begin(), comps.end());
  std::string out;
  for (const auto& c : comps) out += c;
  return out;
}

}  // namespace pathideal

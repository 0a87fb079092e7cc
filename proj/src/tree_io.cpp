#include "pathideal/tree_io.hpp"

#include <fstream>
#include <limits>
#include <map>
#include <sstream>

namespace pathideal {

namespace {

Vertex parse_identifier(const std::string& token, int line) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(token, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "expected a vertex identifier, got '" + token + "'");
  }
  if (used != token.size()) {
    throw ParseError(line, "trailing characters in '" + token + "'");
  }
  if (value <= 0 || value > std::numeric_limits<Vertex>::max()) {
    throw ParseError(line, "vertex identifier out of range: " + token);
  }
  return static_cast<Vertex>(value);
}

// Union-find over vertex identifiers, for per-line cycle detection.
struct Dsu {
  std::map<Vertex, Vertex> up;
  Vertex find(Vertex v) {
    auto it = up.find(v);
    if (it == up.end()) {
      up[v] = v;
      return v;
    }
    while (up[v] != v) {
      up[v] = up[up[v]];
      v = up[v];
    }
    return v;
  }
  void unite(Vertex a, Vertex b) { up[find(a)] = find(b); }
};

}  // namespace

RootedForest parse_tree_file(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<Vertex> declared;
  std::map<Vertex, int> parent_line;
  Dsu dsu;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (row >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens[0] == "vertices:") {
      for (std::size_t k = 1; k < tokens.size(); ++k) {
        declared.push_back(parse_identifier(tokens[k], lineno));
      }
      continue;
    }
    if (tokens.size() != 2) {
      throw ParseError(lineno, "expected 'u v' edge or 'vertices:' line");
    }
    Vertex u = parse_identifier(tokens[0], lineno);
    Vertex v = parse_identifier(tokens[1], lineno);
    if (u == v) {
      throw SelfLoopError("line " + std::to_string(lineno) +
                          ": self loop at vertex " + std::to_string(v));
    }
    if (parent_line.count(v)) {
      throw MultiParentError("line " + std::to_string(lineno) + ": vertex " +
                             std::to_string(v) +
                             " already has a parent (line " +
                             std::to_string(parent_line[v]) + ")");
    }
    if (dsu.find(u) == dsu.find(v)) {
      throw CycleError("line " + std::to_string(lineno) + ": edge " +
                       std::to_string(u) + " " + std::to_string(v) +
                       " closes a cycle");
    }
    dsu.unite(u, v);
    parent_line[v] = lineno;
    edges.emplace_back(u, v);
  }
  return RootedForest::from_edges(edges, declared);
}

RootedForest load_tree_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_tree_file(buffer.str());
}

std::string format_tree(const RootedForest& f) {
  std::ostringstream out;
  VertexList isolated;
  for (Vertex r : f.roots()) {
    if (f.is_leaf(r)) isolated.push_back(r);
  }
  if (!isolated.empty() || f.empty()) {
    out << "vertices:";
    for (Vertex v : isolated) out << ' ' << v;
    out << '\n';
  }
  for (const auto& [u, v] : f.edges()) {
    out << u << ' ' << v << '\n';
  }
  return out.str();
}

}  // namespace pathideal

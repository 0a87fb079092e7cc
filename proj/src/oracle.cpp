#include "pathideal/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>

namespace pathideal {

namespace {

using Mask = std::uint32_t;

void validate_characteristic(int ch) {
  if (ch == 0) return;
  if (ch < 2) throw std::invalid_argument("characteristic must be 0 or prime");
  for (long long d = 2; d * d <= ch; ++d) {
    if (ch % d == 0) {
      throw std::invalid_argument("characteristic " + std::to_string(ch) +
                                  " is not prime");
    }
  }
}

// Fraction-free elimination (Bareiss): after each step entries are
// minors of the original integer matrix, so every division is exact.
long rank_rational(std::vector<std::vector<Count>>& m) {
  if (m.empty() || m[0].empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  Count prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Count num = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        Count q, rem;
        boost::multiprecision::divide_qr(num, prev, q, rem);
        if (rem != 0) throw std::logic_error("inexact division in elimination");
        m[i][j] = q;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<long>(r);
}

long long mod_inverse(long long a, long long p) {
  long long t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    long long q = r / new_r;
    long long next_t = t - q * new_t;
    long long next_r = r - q * new_r;
    t = new_t;
    new_t = next_t;
    r = new_r;
    new_r = next_r;
  }
  return t < 0 ? t + p : t;
}

long rank_mod_p(std::vector<std::vector<long long>>& m, long long p) {
  if (m.empty() || m[0].empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] % p == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    long long inv = mod_inverse(((m[r][c] % p) + p) % p, p);
    for (std::size_t j = c; j < cols; ++j) {
      m[r][j] = (((m[r][j] % p) + p) % p) * inv % p;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      long long factor = ((m[i][c] % p) + p) % p;
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        m[i][j] = ((m[i][j] - factor * m[r][j]) % p + p) % p;
      }
    }
    ++r;
  }
  return static_cast<long>(r);
}

// Boundary rank from faces of cardinality `c` to cardinality `c-1`.
// Columns follow the sorted face lists; each face is oriented by
// ascending vertex index with signs alternating by removed position.
long boundary_rank(const std::vector<Mask>& sub_faces,
                   const std::vector<Mask>& faces, int characteristic) {
  if (faces.empty() || sub_faces.empty()) return 0;
  auto row_of = [&](Mask f) {
    return static_cast<std::size_t>(
        std::lower_bound(sub_faces.begin(), sub_faces.end(), f) -
        sub_faces.begin());
  };
  const std::size_t rows = sub_faces.size();
  const std::size_t cols = faces.size();
  if (characteristic == 0) {
    std::vector<std::vector<Count>> m(rows, std::vector<Count>(cols, 0));
    for (std::size_t col = 0; col < cols; ++col) {
      Mask face = faces[col];
      int k = 0;
      for (Mask rest = face; rest != 0; rest &= rest - 1, ++k) {
        Mask bit = rest & (~rest + 1);
        m[row_of(face ^ bit)][col] = (k % 2 == 0) ? 1 : -1;
      }
    }
    return rank_rational(m);
  }
  std::vector<std::vector<long long>> m(rows,
                                        std::vector<long long>(cols, 0));
  for (std::size_t col = 0; col < cols; ++col) {
    Mask face = faces[col];
    int k = 0;
    for (Mask rest = face; rest != 0; rest &= rest - 1, ++k) {
      Mask bit = rest & (~rest + 1);
      m[row_of(face ^ bit)][col] = (k % 2 == 0) ? 1 : characteristic - 1;
    }
  }
  return rank_mod_p(m, characteristic);
}

// Reduced homology dimensions of a complex given as faces grouped by
// cardinality (index 0 holds the empty face). Output index k is the
// dimension in homological degree k-1.
std::vector<long> homology_from_mask_faces(
    std::vector<std::vector<Mask>>& by_card, int characteristic) {
  while (by_card.size() > 1 && by_card.back().empty()) by_card.pop_back();
  if (by_card.empty() || by_card[0].empty()) return {};  // void complex
  const std::size_t top = by_card.size() - 1;
  for (auto& level : by_card) std::sort(level.begin(), level.end());
  std::vector<long> ranks(top + 2, 0);
  for (std::size_t c = 1; c <= top; ++c) {
    ranks[c] = boundary_rank(by_card[c - 1], by_card[c], characteristic);
  }
  std::vector<long> dims(top + 1, 0);
  for (std::size_t k = 0; k <= top; ++k) {
    dims[k] = static_cast<long>(by_card[k].size()) - ranks[k] - ranks[k + 1];
  }
  return dims;
}

std::vector<Vertex> sorted_vector(const std::set<Vertex>& s) {
  return {s.begin(), s.end()};
}

}  // namespace

SquarefreeIdeal::SquarefreeIdeal(std::set<Vertex> ground,
                                 std::vector<std::set<Vertex>> generators)
    : ground_(std::move(ground)) {
  for (const auto& g : generators) {
    if (g.empty()) throw std::invalid_argument("empty generator");
    for (Vertex v : g) {
      if (!ground_.count(v)) {
        throw std::invalid_argument("generator vertex " + std::to_string(v) +
                                    " outside the ground set");
      }
    }
  }
  std::sort(generators.begin(), generators.end(),
            [](const std::set<Vertex>& a, const std::set<Vertex>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  for (const auto& g : generators) {
    bool redundant = false;
    for (const auto& kept : gens_) {
      if (std::includes(g.begin(), g.end(), kept.begin(), kept.end())) {
        redundant = true;
        break;
      }
    }
    if (!redundant) gens_.push_back(g);
  }
}

SquarefreeIdeal SquarefreeIdeal::path_ideal(const RootedForest& f, int t) {
  std::vector<std::set<Vertex>> gens;
  for (const VertexList& p : enumerate_paths(f, t)) {
    gens.emplace_back(p.begin(), p.end());
  }
  return SquarefreeIdeal(f.vertices(), std::move(gens));
}

SimplicialComplex::SimplicialComplex(std::set<Vertex> ground,
                                     std::vector<std::set<Vertex>> facets)
    : ground_(std::move(ground)) {
  for (const auto& f : facets) {
    for (Vertex v : f) {
      if (!ground_.count(v)) {
        throw std::invalid_argument("facet vertex " + std::to_string(v) +
                                    " outside the ground set");
      }
    }
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  for (const auto& f : facets) {
    bool maximal = true;
    for (const auto& g : facets) {
      if (f != g && std::includes(g.begin(), g.end(), f.begin(), f.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) facets_.push_back(f);
  }
  if (facets_.empty()) facets_.push_back({});
}

bool SimplicialComplex::is_face(const std::set<Vertex>& sigma) const {
  for (const auto& f : facets_) {
    if (std::includes(f.begin(), f.end(), sigma.begin(), sigma.end())) {
      return true;
    }
  }
  return false;
}

SimplicialComplex stanley_reisner(const SquarefreeIdeal& ideal) {
  std::vector<Vertex> verts = sorted_vector(ideal.ground_set());
  const int n = static_cast<int>(verts.size());
  if (n > 20) {
    throw std::invalid_argument("ground set too large for face enumeration");
  }
  std::vector<Mask> gen_masks;
  for (const auto& g : ideal.generators()) {
    Mask gm = 0;
    for (Vertex v : g) {
      int idx = static_cast<int>(
          std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
      gm |= Mask{1} << idx;
    }
    gen_masks.push_back(gm);
  }
  const Mask full = (n == 0) ? 0 : ((Mask{1} << n) - 1);
  std::vector<char> face(std::size_t{1} << n, 0);
  for (Mask m = 0; m <= full; ++m) {
    bool ok = true;
    for (Mask g : gen_masks) {
      if ((g & ~m) == 0) {
        ok = false;
        break;
      }
    }
    face[m] = ok;
    if (n == 0) break;
  }
  std::vector<std::set<Vertex>> facets;
  for (Mask m = 0; m <= full; ++m) {
    if (!face[m]) continue;
    bool maximal = true;
    for (int b = 0; b < n; ++b) {
      Mask bit = Mask{1} << b;
      if (!(m & bit) && face[m | bit]) {
        maximal = false;
        break;
      }
    }
    if (maximal) {
      std::set<Vertex> f;
      for (int b = 0; b < n; ++b) {
        if (m & (Mask{1} << b)) f.insert(verts[b]);
      }
      facets.push_back(f);
    }
    if (n == 0) break;
  }
  return SimplicialComplex(ideal.ground_set(), facets);
}

std::vector<long> reduced_homology_dims(const SimplicialComplex& complex,
                                        int characteristic) {
  validate_characteristic(characteristic);
  std::vector<Vertex> verts = sorted_vector(complex.ground_set());
  const int n = static_cast<int>(verts.size());
  if (n > 31) {
    throw std::invalid_argument("ground set too large for homology");
  }
  std::set<Mask> faces;
  for (const auto& facet : complex.facets()) {
    Mask fm = 0;
    for (Vertex v : facet) {
      int idx = static_cast<int>(
          std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
      fm |= Mask{1} << idx;
    }
    Mask sub = fm;
    while (true) {
      faces.insert(sub);
      if (sub == 0) break;
      sub = (sub - 1) & fm;
    }
  }
  int top = 0;
  for (Mask f : faces) top = std::max(top, std::popcount(f));
  std::vector<std::vector<Mask>> by_card(top + 1);
  for (Mask f : faces) by_card[std::popcount(f)].push_back(f);
  return homology_from_mask_faces(by_card, characteristic);
}

namespace {

// Faces of the ideal's complex restricted to W, grouped by cardinality.
std::vector<std::vector<Mask>> restricted_faces(
    const std::vector<Mask>& gen_masks, Mask w) {
  std::vector<std::vector<Mask>> by_card(std::popcount(w) + 1);
  Mask mu = w;
  while (true) {
    bool face = true;
    for (Mask g : gen_masks) {
      if ((g & ~mu) == 0) {
        face = false;
        break;
      }
    }
    if (face) by_card[std::popcount(mu)].push_back(mu);
    if (mu == 0) break;
    mu = (mu - 1) & w;
  }
  return by_card;
}

struct SupportIndex {
  std::vector<Vertex> verts;
  std::vector<Mask> gen_masks;
};

SupportIndex index_support(const SquarefreeIdeal& ideal) {
  std::set<Vertex> supp;
  for (const auto& g : ideal.generators()) supp.insert(g.begin(), g.end());
  SupportIndex si;
  si.verts = sorted_vector(supp);
  if (si.verts.size() > 16) {
    throw std::invalid_argument("generator support too large for the oracle");
  }
  for (const auto& g : ideal.generators()) {
    Mask gm = 0;
    for (Vertex v : g) {
      int idx = static_cast<int>(
          std::lower_bound(si.verts.begin(), si.verts.end(), v) -
          si.verts.begin());
      gm |= Mask{1} << idx;
    }
    si.gen_masks.push_back(gm);
  }
  return si;
}

}  // namespace

BettiTable hochster_betti(const SquarefreeIdeal& ideal, int characteristic) {
  validate_characteristic(characteristic);
  BettiTable table;
  table.add(0, 0, 1);
  if (ideal.zero()) return table;
  SupportIndex si = index_support(ideal);
  const int m = static_cast<int>(si.verts.size());
  const Mask full = (Mask{1} << m) - 1;
  for (Mask w = 0;; ++w) {
    auto by_card = restricted_faces(si.gen_masks, w);
    std::vector<long> dims = homology_from_mask_faces(by_card, characteristic);
    const int j = std::popcount(w);
    for (std::size_t k = 0; k < dims.size(); ++k) {
      const int i = j - static_cast<int>(k);
      if (i >= 1 && dims[k] > 0) table.add(i, j, dims[k]);
    }
    if (w == full) break;
  }
  return table;
}

Count hochster_entry(const SquarefreeIdeal& ideal, int i, int j,
                     int characteristic) {
  validate_characteristic(characteristic);
  if (i == 0 && j == 0) return 1;
  if (i < 1 || j < 1) return 0;
  if (ideal.zero()) return 0;
  SupportIndex si = index_support(ideal);
  const int m = static_cast<int>(si.verts.size());
  if (j > m) return 0;
  const Mask full = (Mask{1} << m) - 1;
  const int k = j - i;
  Count total = 0;
  for (Mask w = 0;; ++w) {
    if (std::popcount(w) == j && k >= 0) {
      auto by_card = restricted_faces(si.gen_masks, w);
      std::vector<long> dims =
          homology_from_mask_faces(by_card, characteristic);
      if (static_cast<std::size_t>(k) < dims.size() && dims[k] > 0) {
        total += dims[k];
      }
    }
    if (w == full) break;
  }
  return total;
}

int brute_force_disjoint_paths(const RootedForest& f, int t) {
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  std::vector<Vertex> verts = sorted_vector(f.vertices());
  if (verts.size() > 63) {
    throw std::invalid_argument("forest too large for exhaustive search");
  }
  auto index_of = [&](Vertex v) {
    return static_cast<int>(
        std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  // A descending path on t+1 vertices is determined by its lowest vertex.
  std::vector<std::uint64_t> paths;
  for (Vertex bottom : verts) {
    std::uint64_t mask = std::uint64_t{1} << index_of(bottom);
    Vertex v = bottom;
    bool complete = true;
    for (int step = 0; step < t; ++step) {
      auto p = f.parent(v);
      if (!p) {
        complete = false;
        break;
      }
      v = *p;
      mask |= std::uint64_t{1} << index_of(v);
    }
    if (complete) paths.push_back(mask);
  }
  std::function<int(std::size_t, std::uint64_t)> best =
      [&](std::size_t idx, std::uint64_t used) -> int {
    if (idx == paths.size()) return 0;
    int result = best(idx + 1, used);
    if ((paths[idx] & used) == 0) {
      result = std::max(result, 1 + best(idx + 1, used | paths[idx]));
    }
    return result;
  };
  return best(0, 0);
}

}  // namespace pathideal

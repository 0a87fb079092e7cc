#include "pathideal/closed_forms.hpp"

namespace pathideal {

Count linear_strand(const RootedForest& f, int t, long long i) {
  if (t < 2) throw std::invalid_argument("t must be >= 2");
  if (i < 1) throw std::invalid_argument("strand index must be >= 1");
  ForestMetrics m = compute_metrics(f);
  Count total = 0;
  for (Vertex v : f.vertices()) {
    if (t == 2) {
      total += binomial(m.degree.at(v), i + 1);
    } else if (m.level.at(v) >= t - 1) {
      total += binomial(m.degree.at(v), i + 1);
    } else if (m.level.at(v) == t - 2) {
      total += binomial(m.degree.at(v) - 1, i + 1);
    }
  }
  return total;
}

long long regularity_bound(const RootedForest& f, int t) {
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  return static_cast<long long>(t - 1) *
         (leaf_count_deep(f, t) + max_disjoint_paths(f, t));
}

bool has_linear_resolution(const RootedForest& f, int t) {
  if (t < 2) throw std::invalid_argument("t must be >= 2");
  std::vector<RootedForest> active;
  for (const RootedForest& comp : f.components()) {
    if (compute_metrics(comp).height >= t - 1) active.push_back(comp);
  }
  if (active.empty()) return true;  // zero ideal
  if (active.size() > 1) return false;
  RootedForest clean = clean_form(active.front(), t);
  BroomResult br = is_broom(clean, t);
  return br.broom && compute_metrics(clean).height <= 2 * t - 1;
}

long long line_pd(long long n, int t) {
  if (t < 2) throw std::invalid_argument("t must be >= 2");
  if (n < t) throw std::invalid_argument("n must be >= t");
  long long d = n % (t + 1);
  if (d <= t - 1) return 2 * (n - d) / (t + 1);
  return (2 * n - (t - 1)) / (t + 1);
}

long long line_reg(long long n, int t) {
  if (t < 2) throw std::invalid_argument("t must be >= 2");
  if (n < t) throw std::invalid_argument("n must be >= t");
  long long a = n - t + 1;
  return static_cast<long long>(t - 1) * ((a + t) / (t + 1));
}

Count line_betti_linear(long long n, int t, long long i) {
  if (t < 2) throw std::invalid_argument("t must be >= 2");
  if (n < t) throw std::invalid_argument("n must be >= t");
  if (i < 0) throw std::invalid_argument("i must be >= 0");
  return binomial(n - i * t + 1, i);
}

bool line_nonzero(long long n, int t, long long i, long long j) {
  if (t < 2) throw std::invalid_argument("t must be >= 2");
  if (n < t) throw std::invalid_argument("n must be >= t");
  if (i < 0 || j < i) return false;
  long long pd = line_pd(n, t);
  long long width = (n - t + 1 + t) / (t + 1);  // ceil((n-t+1)/(t+1))
  long long s_max = std::min(i, width);
  for (long long s = 0; s <= s_max; ++s) {
    if (j - i == s * (t - 1) && i <= std::min(2 * s, pd)) return true;
  }
  return false;
}

}  // namespace pathideal

#include "pathideal/betti_table.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace pathideal {

Count binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Count r = 1;
  for (long long idx = 1; idx <= k; ++idx) {
    r *= n - k + idx;
    r /= idx;
  }
  return r;
}

BettiTable BettiTable::trivial() {
  BettiTable t;
  t.add(0, 0, 1);
  return t;
}

BettiTable BettiTable::principal(int degree) {
  if (degree < 1) throw std::invalid_argument("degree must be >= 1");
  BettiTable t = trivial();
  t.add(1, degree, 1);
  return t;
}

BettiTable BettiTable::koszul(int vars) {
  if (vars < 0) throw std::invalid_argument("variable count must be >= 0");
  BettiTable t;
  for (int i = 0; i <= vars; ++i) t.add(i, i, binomial(vars, i));
  return t;
}

Count BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? Count(0) : it->second;
}

void BettiTable::add(int i, int j, const Count& c) {
  if (c < 0) throw std::invalid_argument("negative Betti count");
  if (c == 0) return;
  entries_[{i, j}] += c;
}

BettiTable BettiTable::convolve(const BettiTable& other) const {
  BettiTable out;
  for (const auto& [ka, ca] : entries_) {
    for (const auto& [kb, cb] : other.entries_) {
      out.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
    }
  }
  return out;
}

BettiTable BettiTable::shifted(int di, int dj) const {
  BettiTable out;
  for (const auto& [k, c] : entries_) {
    out.add(k.first + di, k.second + dj, c);
  }
  return out;
}

int BettiTable::projective_dimension() const {
  if (entries_.empty()) throw EmptyTableError("empty Betti table");
  int pd = 0;
  for (const auto& [k, c] : entries_) pd = std::max(pd, k.first);
  return pd;
}

int BettiTable::regularity() const {
  if (entries_.empty()) throw EmptyTableError("empty Betti table");
  int reg = entries_.begin()->first.second - entries_.begin()->first.first;
  for (const auto& [k, c] : entries_) reg = std::max(reg, k.second - k.first);
  return reg;
}

std::string BettiTable::to_tsv() const {
  std::ostringstream out;
  for (const auto& [k, c] : entries_) {
    out << k.first << '\t' << k.second << '\t' << c << '\n';
  }
  return out.str();
}

std::string BettiTable::to_json() const {
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  for (const auto& [k, c] : entries_) {
    obj[std::to_string(k.first) + "," + std::to_string(k.second)] = c.str();
  }
  return obj.dump();
}

BettiTable BettiTable::from_tsv(const std::string& text) {
  BettiTable t;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    int i = 0, j = 0;
    std::string count;
    if (!(row >> i >> j >> count)) {
      throw std::runtime_error("malformed Betti TSV row: " + line);
    }
    t.add(i, j, Count(count));
  }
  return t;
}

BettiTable BettiTable::from_json(const std::string& text) {
  BettiTable t;
  auto obj = nlohmann::json::parse(text);
  if (!obj.is_object()) throw std::runtime_error("Betti JSON must be an object");
  for (const auto& [key, value] : obj.items()) {
    auto comma = key.find(',');
    if (comma == std::string::npos || !value.is_string()) {
      throw std::runtime_error("malformed Betti JSON entry: " + key);
    }
    int i = std::stoi(key.substr(0, comma));
    int j = std::stoi(key.substr(comma + 1));
    t.add(i, j, Count(value.get<std::string>()));
  }
  return t;
}

BettiTable convolve(const BettiTable& a, const BettiTable& b) {
  return a.convolve(b);
}

BettiTable operator+(const BettiTable& a, const BettiTable& b) {
  BettiTable out = a;
  for (const auto& [k, c] : b.entries()) out.add(k.first, k.second, c);
  return out;
}

std::pair<int, int> table_invariants(const BettiTable& a) {
  return {a.projective_dimension(), a.regularity()};
}

}  // namespace pathideal

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace pathideal {

/// Exact multiplicity type for Betti numbers. Binomial growth overflows
/// 64-bit already for modest vertex degrees.
using Count = boost::multiprecision::cpp_int;

struct EmptyTableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// binomial(n, k) with the standard zero extension: 0 whenever k < 0,
/// n < 0, or k > n. Formulas then need no case splits at boundaries.
Count binomial(long long n, long long k);

/// Sparse table of graded Betti numbers beta_{i,j}, keyed by
/// (homological degree i, internal degree j). Zero entries are never
/// stored; stored counts are always positive.
class BettiTable {
 public:
  using Key = std::pair<int, int>;

  BettiTable() = default;

  /// beta(S/0): the single entry (0,0) -> 1.
  static BettiTable trivial();
  /// beta of S modulo one monomial of the given degree.
  static BettiTable principal(int degree);
  /// beta of S modulo `vars` variables: entries (i,i) -> binomial(vars,i).
  static BettiTable koszul(int vars);

  /// Entry at (i,j); 0 when absent.
  Count at(int i, int j) const;
  /// Adds `c` to entry (i,j). A zero addend is a no-op; negative addends
  /// are rejected (no cancellation ever occurs in this calculus).
  void add(int i, int j, const Count& c);

  const std::map<Key, Count>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  /// Table of the tensor product of the two underlying resolutions:
  /// entry (i,j) = sum over splits of products. Only meaningful when the
  /// two tables come from ideals in disjoint variable sets, which the
  /// caller must guarantee.
  BettiTable convolve(const BettiTable& other) const;

  /// Entry (i,j) moved to (i+di, j+dj).
  BettiTable shifted(int di, int dj) const;

  /// Largest i with a nonzero entry. Throws EmptyTableError when empty.
  int projective_dimension() const;
  /// Largest j-i over nonzero entries. Throws EmptyTableError when empty.
  int regularity() const;

  bool operator==(const BettiTable& other) const = default;

  /// TSV rows "i<TAB>j<TAB>count", sorted by (i,j), one per line.
  std::string to_tsv() const;
  /// JSON object mapping "i,j" keys to decimal-string counts, keys in
  /// (i,j) order. Counts are strings because they exceed native ranges.
  std::string to_json() const;
  static BettiTable from_tsv(const std::string& text);
  static BettiTable from_json(const std::string& text);

 private:
  std::map<Key, Count> entries_;
};

BettiTable convolve(const BettiTable& a, const BettiTable& b);
/// Entrywise sum (the mapping-cone accumulation).
BettiTable operator+(const BettiTable& a, const BettiTable& b);

/// (projective dimension, regularity) of a nonempty table.
std::pair<int, int> table_invariants(const BettiTable& a);

}  // namespace pathideal

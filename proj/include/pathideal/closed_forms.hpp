#pragma once

#include "pathideal/betti_table.hpp"
#include "pathideal/forest.hpp"

namespace pathideal {

/// beta_{i,i+t} of the path ideal itself, i >= 1, from vertex degrees:
/// for t=2 every vertex contributes binomial(deg, i+1); for t>2 vertices
/// of level >= t-1 contribute binomial(deg, i+1) and vertices of level
/// t-2 contribute binomial(deg-1, i+1). Additive over components.
/// Against the quotient table this is the entry (i+1, i+t).
Count linear_strand(const RootedForest& f, int t, long long i);

/// (t-1) * (deep leaf count + maximal disjoint path packing), an upper
/// bound for the regularity of the path ideal quotient.
long long regularity_bound(const RootedForest& f, int t);

/// Whether the path ideal has a linear resolution: the clean form must
/// be a broom of height at most 2t-1. A forest qualifies only when at
/// most one component carries generators. Zero ideals (height < t-1
/// everywhere) count as linear by convention.
bool has_linear_resolution(const RootedForest& f, int t);

/// Projective dimension of the path ideal quotient of the path graph on
/// n vertices: 2(n-d)/(t+1) when n = d mod (t+1) with 0 <= d <= t-1,
/// and (2n-(t-1))/(t+1) when n = t mod (t+1).
long long line_pd(long long n, int t);

/// Regularity of the same quotient: (t-1) * ceil((n-t+1)/(t+1)).
long long line_reg(long long n, int t);

/// Entry (i, it) of the same quotient table: binomial(n-it+1, i).
Count line_betti_linear(long long n, int t, long long i);

/// Whether entry (i,j) of the path-graph quotient table is nonzero:
/// j-i = s(t-1) for some integer s with 0 <= s <= min(i,
/// ceil((n-t+1)/(t+1))) and i <= min(2s, line_pd(n,t)).
bool line_nonzero(long long n, int t, long long i, long long j);

}  // namespace pathideal

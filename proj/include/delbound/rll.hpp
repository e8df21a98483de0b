#pragma once

#include <span>

#include "delbound/bounds.hpp"
#include "delbound/qary_string.hpp"
#include "delbound/rational.hpp"

namespace delbound {

/// Binary (d, inf)-run-length-limited strings of length n.
struct RllSpec {
  int n = 0;
  int d = 2;
};

/// Membership in S_n(d, inf): every 1-run has length 1, the first and last
/// runs are 0-runs, and every 0-run has length >= d. The all-zero string is
/// a member whenever n >= d.
bool in_rll_set(std::span<const Symbol> x, int d);

/// Membership in S'_m(d, inf): as above except that exactly one 0-run
/// (anywhere, the end runs included) has length exactly d - 1.
bool in_rll_prime_set(std::span<const Symbol> x, int d);

/// S_n(d, inf) by exhaustive filtering; requires 1 < d <= n.
StringSet rll_set(const RllSpec& spec);

/// S'_m(d, inf); requires 1 < d and m >= d - 1 (S'_{d-1} = {0^{d-1}}).
StringSet rll_prime_set(int m, int d);

/// D_1(S_n(d, inf)) == S_{n-1}(d, inf) u S'_{n-1}(d, inf), by enumeration.
bool lemma9_check(int n, int d);

/// The closed two-sum bound on the optimal single-deletion code inside
/// S_n(d, inf):
///   sum_{r=0}^{rb} C(n-2-r-(d-1)(r+1), r) / (2r+1)
///     + sum_{r=1}^{rb'} (r+1) C(n-2-r-(d-1)(r+1), r-1) / (2r+1),
/// rb = floor((n-1-d)/(d+1)), rb' = floor((n-d)/(d+1)). Evaluated literally;
/// both sums are empty at n = d.
Rational rll_bound(int n, int d);

/// sum over x in S_{n-1}(d, inf) u S'_{n-1}(d, inf) of 1/r(x), by enumeration.
Rational rll_decomposition_sum(int n, int d);

/// sum over x in D_1(S_n(d, inf)) of 1/r(x), by enumeration.
Rational rll_direct_sum(int n, int d);

struct ConstrainedOptions {
  /// Solve the LP and the exact matching number when |S| is at most this.
  int max_sources = 1 << 12;
  long budget_nodes = 10'000'000;
};

/// Bounds for an arbitrary uniform-length source set S:
///   "lower"  |S| / (C(n+s-1, s) iota(q, s, n))
///   "upper"  sum_{x in D_s(S)} 1/|D_s(x)|
/// and, when |S| <= max_sources, "lp_lower"/"lp_upper" (certified bracket on
/// nu*) and "nu" (exact matching number, only if proven optimal).
BoundReport constrained_bounds(const StringSet& sources, int s, const ConstrainedOptions& options = {});

}  // namespace delbound

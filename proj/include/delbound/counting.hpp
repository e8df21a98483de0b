#pragma once

#include "delbound/rational.hpp"

namespace delbound {

/// C(n, k); zero whenever n < 0, k < 0 or k > n.
BigInt binomial(long n, long k);

/// q^e for e >= 0.
BigInt power(long q, long e);

/// Number of integer solutions of t_1 + ... + t_k = n with every t_i >= d:
/// C(n - k(d-1) - 1, k - 1).
BigInt composition_count(long n, long k, long d);

/// delta(r, s): sum_{i=0}^{s} C(r-s, i) for r > s >= 0, 1 for s = r >= 0,
/// 0 for s < 0 or s > r.
BigInt delta(long r, long s);

/// iota_{q,s,n} = sum_{j=0}^{s} C(n, j)(q-1)^j, the insertion-set size of any
/// string of length n - s.
BigInt iota(long q, long s, long n);

/// Lower bound on |D_s(x)| for x of length n with r = r(x) runs,
/// 2 < r <= n and s < n:
///   delta(r, s) + sum_{i = s+r-n-1}^{min(s-2, r-3)} delta(r-2, i).
/// Throws std::domain_error for r <= 2 or r > n or s >= n.
BigInt dset_size_lower(long r, long s, long n);

/// Upper bound C(r+s-1, s) on |D_s(x)| for any x with r runs.
BigInt dset_size_upper(long r, long s);

/// Number of strings in F_q^m with exactly r runs: q (q-1)^{r-1} C(m-1, r-1).
BigInt count_strings_with_runs(long q, long m, long r);

}  // namespace delbound

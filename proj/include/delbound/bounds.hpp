#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "delbound/rational.hpp"

namespace delbound {

/// A named bound value: exact rational and its floor.
struct BoundEntry {
  Rational exact;
  BigInt floored;
};

/// Bound values for one (q, s, n) instance, or one constrained source set.
struct BoundReport {
  int q = 2;
  int s = 1;
  int n = 0;
  std::map<std::string, BoundEntry> entries;

  void add(const std::string& name, const Rational& value) { entries[name] = {value, value.floor()}; }
  [[nodiscard]] bool has(const std::string& name) const { return entries.contains(name); }
  [[nodiscard]] const BoundEntry& at(const std::string& name) const { return entries.at(name); }
};

/// (q^n - q) / ((q-1)(n-1)); q >= 2, n >= 2.
Rational single_deletion_bound(int q, int n);

/// Default cap on the number of strings enumerated by transversal_sum_bound.
inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 22;

/// sum over x in F_q^{n-s} of 1/|D_s(x)|, the weight of the fractional
/// transversal w(x) = 1/|D_s(x)|. Throws ResourceError if q^{n-s} > cap.
Rational transversal_sum_bound(int q, int s, int n, std::uint64_t cap = kDefaultEnumerationCap);

/// U_{q,s,n}: the transversal sum with |D_s(x)| replaced by the run-count
/// lower bound for r(x) >= 3 and by 1 for r(x) <= 2. Requires n > 2s >= 2.
Rational U_bound(int q, int s, int n);

/// (q^n - q sum_{r<s} (q-1)^r C(n-1, r)) / ((q-1)^s C(n-1, s)), a lower
/// bound on both the transversal sum and U. Requires n > 2s, s >= 1.
Rational U_lower(int q, int s, int n);

/// Which r values the Levenshtein minimisation ranges over.
enum class LevenshteinRange {
  /// r >= max(1, s-1), the range the reference tables use. Falls
  /// back to r = s-1 when empty (n = 1).
  Table,
  /// Every r with 1 <= s <= r+1 <= n.
  Full,
};

struct LevenshteinBound {
  Rational value;
  int argmin = 0;
};

/// min_r q^{n-s} / sum_{i=0}^{s} C(r-s+1, i) + q sum_{i=0}^{r-1} C(n-1, i)(q-1)^i.
/// Ties resolve to the smallest r.
LevenshteinBound levenshtein_bound(int q, int s, int n, LevenshteinRange range = LevenshteinRange::Table);

/// (q^{n-1} + (n-2) q^{n-2} + q) / n for single deletions; n >= 2.
Rational levenshtein92_bound(int q, int n);

/// q^{n-s}.
BigInt trivial_bound(int q, int s, int n);

/// Every bound above that applies to (q, s, n). The transversal sum is
/// included when q^{n-s} <= cap.
BoundReport make_bound_report(int q, int s, int n, std::uint64_t cap = kDefaultEnumerationCap);

// ---------------------------------------------------------------------------
// Asymptotic rate function bound. All values are in units of log q.

double binary_entropy(double x);
double qary_entropy(double x, int q);

/// N(rho; tau) = (1 - tau) h_q(rho / (1 - tau)).
double rate_numerator_exponent(double rho, double tau, int q);

/// The maximand (rho - mu) h(min(mu / (rho - mu), 1/2)) / log2 q, taken as
/// (rho - mu) / log2 q at mu = rho.
double rate_denominator_term(double mu, double rho, int q);

/// D(rho; tau): max of the term over mu in [max(2tau + rho - 1, 0), min(tau, rho)].
/// The term is unimodal in mu, so golden-section search is exact up to
/// its tolerance.
double rate_denominator_exponent(double rho, double tau, int q);

/// D_1(rho; tau): the term at mu = tau when rho > tau, else 0.
double rate_d1_exponent(double rho, double tau, int q);

/// Upper bound on R_q(tau): max over rho in [0, 1-tau] of N - D for
/// tau < 1/2, and 1 - tau on [1/2, 1]. The outer maximum uses a 1e-3 grid
/// followed by golden-section refinement; results carry about 1e-5 accuracy.
/// Throws std::domain_error for tau outside [0, 1].
double rate_bound(int q, double tau);

struct RateCurve {
  int q = 2;
  std::vector<std::pair<double, double>> points;  // (tau, bound), tau increasing
};

/// Evaluates rate_bound on a sorted grid in [0, 1].
RateCurve rate_curve(int q, const std::vector<double>& grid);

/// tau of the curve's minimum if it is an interior point and some later
/// point exceeds it by more than `tol`; nullopt otherwise.
std::optional<double> local_minimum_then_increase(const RateCurve& curve, double tol = 1e-5);

}  // namespace delbound

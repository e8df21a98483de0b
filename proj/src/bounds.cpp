#include "delbound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "delbound/counting.hpp"
#include "delbound/errors.hpp"
#include "delbound/qary_string.hpp"

namespace delbound {

Rational single_deletion_bound(int q, int n) {
  if (q < 2 || n < 2) throw std::domain_error("single_deletion_bound: need q >= 2, n >= 2");
  return Rational(power(q, n) - q, BigInt(q - 1) * (n - 1));
}

Rational transversal_sum_bound(int q, int s, int n, std::uint64_t cap) {
  if (q < 2 || s < 1 || n <= s) throw std::domain_error("transversal_sum_bound: need q >= 2, n > s >= 1");
  const int m = n - s;
  const BigInt total = power(q, m);
  if (total > BigInt(static_cast<unsigned long>(cap)))
    throw ResourceError("transversal_sum_bound: q^(n-s) = " + total.get_str() + " exceeds cap");

  // Histogram of deletion-set sizes; the sum is then exact over few terms.
  std::unordered_map<std::uint64_t, std::uint64_t> histogram;
  for_each_string(q, m, [&](std::uint64_t, std::span<const Symbol> x) {
    std::uint64_t size = 0;
    if (s == 1) {
      size = 1;
      for (std::size_t i = 1; i < x.size(); ++i) size += x[i] != x[i - 1];
    } else {
      size = distinct_subsequence_count(x, m - s);
    }
    ++histogram[size];
  });
  std::vector<std::pair<std::uint64_t, std::uint64_t>> terms(histogram.begin(), histogram.end());
  std::sort(terms.begin(), terms.end());
  Rational sum = 0;
  for (auto [size, count] : terms) sum += Rational(BigInt(static_cast<unsigned long>(count)), BigInt(static_cast<unsigned long>(size)));
  return sum;
}

Rational U_bound(int q, int s, int n) {
  if (q < 2 || s < 1 || n <= 2 * s) throw std::domain_error("U_bound: need q >= 2, n > 2s >= 2");
  const int m = n - s;
  Rational sum = 0;
  for (int r = 3; r <= m; ++r)
    sum += Rational(count_strings_with_runs(q, m, r), dset_size_lower(r, s, m));
  for (int r = 1; r <= std::min(2, m); ++r) sum += Rational(count_strings_with_runs(q, m, r));
  return sum;
}

Rational U_lower(int q, int s, int n) {
  if (q < 2 || s < 1 || n <= 2 * s) throw std::domain_error("U_lower: need q >= 2, n > 2s >= 2");
  BigInt head = 0;
  for (int r = 0; r < s; ++r) head += power(q - 1, r) * binomial(n - 1, r);
  return Rational(power(q, n) - BigInt(q) * head, power(q - 1, s) * binomial(n - 1, s));
}

LevenshteinBound levenshtein_bound(int q, int s, int n, LevenshteinRange range) {
  if (q < 2 || s < 1 || s > n) throw std::domain_error("levenshtein_bound: need q >= 2, 1 <= s <= n");
  int r_lo = s - 1;
  if (range == LevenshteinRange::Table && std::max(1, s - 1) <= n - 1) r_lo = std::max(1, s - 1);
  const BigInt numerator = power(q, n - s);

  std::optional<LevenshteinBound> best;
  BigInt tail = 0;  // q sum_{i<r} C(n-1, i)(q-1)^i, built incrementally
  for (int i = 0; i < r_lo; ++i) tail += BigInt(q) * binomial(n - 1, i) * power(q - 1, i);
  for (int r = r_lo; r + 1 <= n; ++r) {
    BigInt den = 0;
    for (int i = 0; i <= s; ++i) den += binomial(r - s + 1, i);
    const Rational value = Rational(numerator, den) + Rational(tail);
    if (!best || value < best->value) best = LevenshteinBound{value, r};
    tail += BigInt(q) * binomial(n - 1, r) * power(q - 1, r);
  }
  return *best;
}

Rational levenshtein92_bound(int q, int n) {
  if (q < 2 || n < 2) throw std::domain_error("levenshtein92_bound: need q >= 2, n >= 2");
  return Rational(power(q, n - 1) + BigInt(n - 2) * power(q, n - 2) + q, BigInt(n));
}

BigInt trivial_bound(int q, int s, int n) {
  if (s < 0 || s > n) throw std::domain_error("trivial_bound: need 0 <= s <= n");
  return power(q, n - s);
}

BoundReport make_bound_report(int q, int s, int n, std::uint64_t cap) {
  BoundReport rep;
  rep.q = q;
  rep.s = s;
  rep.n = n;
  rep.add("trivial", Rational(trivial_bound(q, s, n)));
  rep.add("lev_ub", levenshtein_bound(q, s, n).value);
  if (s == 1 && n >= 2) {
    rep.add("closed_form", single_deletion_bound(q, n));
    rep.add("lev92_ub", levenshtein92_bound(q, n));
  }
  if (n > 2 * s) {
    rep.add("U", U_bound(q, s, n));
    rep.add("U_lower", U_lower(q, s, n));
  }
  if (n > s && power(q, n - s) <= BigInt(static_cast<unsigned long>(cap)))
    rep.add("transversal_sum", transversal_sum_bound(q, s, n, cap));
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

constexpr double kInvPhi = 0.6180339887498949;

/// Maximises a unimodal f on [a, b]; returns (argmax, max) including the
/// endpoints in the comparison.
template <typename F>
std::pair<double, double> golden_max(F&& f, double a, double b, double tol) {
  double best_x = a, best_v = f(a);
  if (const double vb = f(b); vb > best_v) best_x = b, best_v = vb;
  double c = b - kInvPhi * (b - a), d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d, d = c, fd = fc;
      c = b - kInvPhi * (b - a), fc = f(c);
    } else {
      a = c, c = d, fc = fd;
      d = a + kInvPhi * (b - a), fd = f(d);
    }
  }
  for (auto [x, v] : {std::pair{c, fc}, std::pair{d, fd}})
    if (v > best_v) best_x = x, best_v = v;
  return {best_x, best_v};
}

}  // namespace

double binary_entropy(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double qary_entropy(double x, int q) {
  x = std::clamp(x, 0.0, 1.0);
  return (binary_entropy(x) + x * std::log2(static_cast<double>(q - 1))) / std::log2(static_cast<double>(q));
}

double rate_numerator_exponent(double rho, double tau, int q) {
  return (1.0 - tau) * qary_entropy(rho / (1.0 - tau), q);
}

double rate_denominator_term(double mu, double rho, int q) {
  const double gap = rho - mu;
  if (gap <= 0.0) return 0.0;
  const double ratio = std::min(mu / gap, 0.5);
  return gap * binary_entropy(ratio) / std::log2(static_cast<double>(q));
}

double rate_denominator_exponent(double rho, double tau, int q) {
  const double lo = std::max(2.0 * tau + rho - 1.0, 0.0);
  const double hi = std::max(std::min(tau, rho), lo);
  return golden_max([&](double mu) { return rate_denominator_term(mu, rho, q); }, lo, hi, 1e-10).second;
}

double rate_d1_exponent(double rho, double tau, int q) {
  return rho > tau ? rate_denominator_term(tau, rho, q) : 0.0;
}

double rate_bound(int q, double tau) {
  if (q < 2) throw std::domain_error("rate_bound: need q >= 2");
  if (!(tau >= 0.0 && tau <= 1.0)) throw std::domain_error("rate_bound: tau outside [0, 1]");
  if (tau >= 0.5) return 1.0 - tau;

  const double top = 1.0 - tau;
  auto objective = [&](double rho) {
    return rate_numerator_exponent(rho, tau, q) - rate_denominator_exponent(rho, tau, q);
  };
  const int steps = static_cast<int>(std::ceil(top / 1e-3));
  int best_i = 0;
  double best = objective(0.0);
  for (int i = 1; i <= steps; ++i) {
    const double v = objective(top * i / steps);
    if (v > best) best = v, best_i = i;
  }
  const double a = top * std::max(best_i - 1, 0) / steps;
  const double b = top * std::min(best_i + 1, steps) / steps;
  return std::max(best, golden_max(objective, a, b, 1e-7).second);
}

RateCurve rate_curve(int q, const std::vector<double>& grid) {
  if (!std::is_sorted(grid.begin(), grid.end())) throw std::domain_error("rate_curve: grid must be sorted");
  RateCurve curve;
  curve.q = q;
  curve.points.reserve(grid.size());
  for (double tau : grid) curve.points.emplace_back(tau, rate_bound(q, tau));
  return curve;
}

std::optional<double> local_minimum_then_increase(const RateCurve& curve, double tol) {
  const auto& p = curve.points;
  if (p.size() < 3) return std::nullopt;
  std::size_t arg = 0;
  for (std::size_t i = 1; i < p.size(); ++i)
    if (p[i].second < p[arg].second) arg = i;
  if (arg == 0 || arg + 1 == p.size()) return std::nullopt;
  for (std::size_t j = arg + 1; j < p.size(); ++j)
    if (p[j].second > p[arg].second + tol) return p[arg].first;
  return std::nullopt;
}

}  // namespace delbound

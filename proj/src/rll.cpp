#include "delbound/rll.hpp"

#include <stdexcept>

#include "delbound/counting.hpp"
#include "delbound/exact_search.hpp"
#include "delbound/hypergraph.hpp"
#include "delbound/lp.hpp"

namespace delbound {

namespace {

/// 0-run lengths of a string whose 1-runs are single 1s and whose end runs
/// are 0-runs; false if the string has any other shape.
bool zero_runs(std::span<const Symbol> x, std::vector<int>& runs) {
  runs.clear();
  if (x.empty() || x.front() != 0 || x.back() != 0) return false;
  int length = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > 1) return false;
    if (x[i] == 0) {
      ++length;
      continue;
    }
    if (x[i - 1] == 1) return false;  // i > 0 since x starts with 0
    runs.push_back(length);
    length = 0;
  }
  runs.push_back(length);
  return true;
}

void check_d(int d) {
  if (d <= 1) throw std::domain_error("rll: need d > 1");
}

Rational inverse_runs_sum(const StringSet& set) {
  Rational sum = 0;
  for (const auto& x : set) sum += Rational(BigInt(1), BigInt(x.runs()));
  return sum;
}

}  // namespace

bool in_rll_set(std::span<const Symbol> x, int d) {
  std::vector<int> runs;
  if (!zero_runs(x, runs)) return false;
  for (int len : runs)
    if (len < d) return false;
  return true;
}

bool in_rll_prime_set(std::span<const Symbol> x, int d) {
  std::vector<int> runs;
  if (!zero_runs(x, runs)) return false;
  int short_runs = 0;
  for (int len : runs) {
    if (len == d - 1) ++short_runs;
    else if (len < d) return false;
  }
  return short_runs == 1;
}

StringSet rll_set(const RllSpec& spec) {
  check_d(spec.d);
  if (spec.d > spec.n) throw std::domain_error("rll_set: need d <= n");
  std::vector<QaryString> members;
  for_each_string(2, spec.n, [&](std::uint64_t, std::span<const Symbol> x) {
    if (in_rll_set(x, spec.d)) members.emplace_back(std::vector<Symbol>(x.begin(), x.end()), 2);
  });
  return StringSet(std::move(members));
}

StringSet rll_prime_set(int m, int d) {
  check_d(d);
  if (m < d - 1) throw std::domain_error("rll_prime_set: need m >= d - 1");
  std::vector<QaryString> members;
  for_each_string(2, m, [&](std::uint64_t, std::span<const Symbol> x) {
    if (in_rll_prime_set(x, d)) members.emplace_back(std::vector<Symbol>(x.begin(), x.end()), 2);
  });
  return StringSet(std::move(members));
}

bool lemma9_check(int n, int d) {
  const StringSet left = deletion_set(rll_set({n, d}), 1);
  const StringSet right = set_union(n - 1 >= d ? rll_set({n - 1, d}) : StringSet{}, rll_prime_set(n - 1, d));
  return left == right;
}

Rational rll_bound(int n, int d) {
  check_d(d);
  if (d > n) throw std::domain_error("rll_bound: need d <= n");
  const long rb = (n - 1 - d) >= 0 ? (n - 1 - d) / (d + 1) : -1;
  const long rb_prime = (n - d) / (d + 1);
  Rational sum = 0;
  for (long r = 0; r <= rb; ++r)
    sum += Rational(binomial(n - 2 - r - (d - 1) * (r + 1), r), BigInt(2 * r + 1));
  for (long r = 1; r <= rb_prime; ++r)
    sum += Rational(BigInt(r + 1) * binomial(n - 2 - r - (d - 1) * (r + 1), r - 1), BigInt(2 * r + 1));
  return sum;
}

Rational rll_decomposition_sum(int n, int d) {
  check_d(d);
  if (d > n) throw std::domain_error("rll_decomposition_sum: need d <= n");
  Rational sum = inverse_runs_sum(rll_prime_set(n - 1, d));
  if (n - 1 >= d) sum += inverse_runs_sum(rll_set({n - 1, d}));
  return sum;
}

Rational rll_direct_sum(int n, int d) {
  return inverse_runs_sum(deletion_set(rll_set({n, d}), 1));
}

BoundReport constrained_bounds(const StringSet& sources, int s, const ConstrainedOptions& options) {
  if (sources.empty()) throw std::domain_error("constrained_bounds: empty source set");
  const auto h = build_constrained(sources, s);
  BoundReport rep;
  rep.q = h.q;
  rep.s = s;
  rep.n = h.n;
  rep.add("lower", Rational(BigInt(static_cast<unsigned long>(sources.size())),
                            binomial(h.n + s - 1, s) * iota(h.q, s, h.n)));
  Rational upper = 0;
  for (const auto& x : h.vertices) upper += Rational(BigInt(1), BigInt(static_cast<unsigned long>(deletion_set_size(x, s))));
  rep.add("upper", upper);

  if (static_cast<int>(sources.size()) <= options.max_sources) {
    const auto lp = solve_fractional_matching(h);
    if (lp.status == LpStatus::Optimal) {
      rep.add("lp_lower", lp.certified_lower);
      rep.add("lp_upper", lp.certified_upper);
    }
    MisOptions mis;
    mis.budget_nodes = options.budget_nodes;
    const auto best = max_independent_set(line_graph(h, options.max_sources), mis);
    if (best.proven_optimal) rep.add("nu", Rational(best.size));
  }
  return rep;
}

}  // namespace delbound

#include "delbound/reports.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

#include "delbound/bounds.hpp"
#include "delbound/codebooks.hpp"
#include "delbound/counting.hpp"
#include "delbound/errors.hpp"
#include "delbound/exact_search.hpp"
#include "delbound/hypergraph.hpp"
#include "delbound/rll.hpp"

namespace delbound {

namespace {

constexpr double kFloorTol = 1e-6;

const std::string& table_name(char which) {
  static const std::string names[] = {"a", "b", "c", "d"};
  if (which < 'a' || which > 'd') throw std::invalid_argument(std::string("unknown table '") + which + "'");
  return names[which - 'a'];
}

std::string cell(const std::optional<Cell>& c, bool floored) {
  if (!c) return "";
  return floored ? to_string(c->floored) : c->value.str();
}

}  // namespace

std::string format_float(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

int table_alphabet(char which) {
  table_name(which);
  return which - 'a' + 2;
}

int table_max_length(char which) {
  static const int lengths[] = {14, 8, 6, 6};
  table_name(which);
  return lengths[which - 'a'];
}

ReportRow make_row(int q, int n, const ReportOptions& options) {
  ReportRow row;
  row.q = q;
  row.n = n;
  const auto lev = levenshtein_bound(q, 1, n);
  row.lev_ub = Cell::of(lev.value);
  row.lev_argmin = lev.argmin;
  if (n >= 2) {
    row.closed_form = Cell::of(single_deletion_bound(q, n));
    row.transversal_sum = Cell::of(transversal_sum_bound(q, 1, n));
  }
  if (n > 2) row.u = Cell::of(U_bound(q, 1, n));

  const auto best = best_known_size(q, n);
  row.best_code = best.size;
  row.best_code_label = best.code.label();

  if (n == 1) {
    // Every string deletes to the empty word: one vertex, so nu = nu* = 1.
    row.lp_ub = 1.0;
    row.lp_floor = 1;
    row.lp_lower = row.lp_upper = Rational(1);
    row.lp_status = "trivial";
    row.exact_nu = 1;
    return row;
  }

  const double vertices = std::pow(static_cast<double>(q), n - 1);
  if (vertices > static_cast<double>(options.max_vertices)) return row;

  const auto h = build(q, 1, n);
  LpOptions lp_options;
  lp_options.mode = options.lp_mode;
  const auto lp = solve_fractional_matching(h, lp_options);
  row.lp_status = to_string(lp.status);
  if (lp.status == LpStatus::Optimal) {
    row.lp_ub = lp.exact_value ? lp.exact_value->to_double() : lp.value;
    row.lp_floor = lp.exact_value ? lp.exact_value->floor() : BigInt(static_cast<long>(std::floor(lp.value + kFloorTol)));
    row.lp_lower = lp.certified_lower;
    row.lp_upper = lp.certified_upper;
  }

  if (std::pow(static_cast<double>(q), n) <= static_cast<double>(options.exact_max_sources)) {
    MisOptions mis;
    mis.budget_nodes = options.budget_nodes;
    for (const auto& x : best.code.members) mis.seed.push_back(static_cast<int>(h.edges.index_of(x)));
    const auto result = max_independent_set(line_graph(h), mis);
    if (result.proven_optimal) row.exact_nu = result.size;
  }
  return row;
}

std::vector<ReportRow> table1(char which, const ReportOptions& options) {
  std::vector<ReportRow> rows;
  for (int n = 1; n <= table_max_length(which); ++n) rows.push_back(make_row(table_alphabet(which), n, options));
  return rows;
}

void write_table_csv(std::ostream& os, const std::vector<ReportRow>& rows) {
  os << "q,s,n,lev_ub,lev_ub_floor,lev_argmin,closed_form,closed_form_floor,U,U_floor,transversal_sum,"
        "transversal_sum_floor,lp_ub,lp_ub_floor,lp_lower,lp_upper,lp_status,exact_nu,best_code,best_code_label\n";
  for (const auto& r : rows) {
    os << r.q << ',' << r.s << ',' << r.n << ',' << r.lev_ub.value.str() << ',' << to_string(r.lev_ub.floored) << ','
       << r.lev_argmin << ',' << cell(r.closed_form, false) << ',' << cell(r.closed_form, true) << ','
       << cell(r.u, false) << ',' << cell(r.u, true) << ',' << cell(r.transversal_sum, false) << ','
       << cell(r.transversal_sum, true) << ',' << (r.lp_ub ? format_float(*r.lp_ub) : "") << ','
       << (r.lp_floor ? to_string(*r.lp_floor) : "") << ',' << (r.lp_lower ? r.lp_lower->str() : "") << ','
       << (r.lp_upper ? r.lp_upper->str() : "") << ',' << r.lp_status << ','
       << (r.exact_nu ? std::to_string(*r.exact_nu) : "") << ',' << r.best_code << ',' << r.best_code_label << '\n';
  }
}

const std::vector<ReferenceRow>& reference_table(char which) {
  static const std::vector<ReferenceRow> a = {
      {1, -1, 1, 1},      {3, 2, 2, 2},       {4, 3, 2, 2},        {6, 4, 4, 4},         {10, 7, 6, 6},
      {18, 12, 10, 10},   {34, 21, 17, 16},   {58, 36, 30, 30},    {103, 63, 53, 52},    {190, 113, 96, 94},
      {363, 204, 175, 172}, {646, 372, 321, 316}, {1182, 682, 593, 586}, {2232, 1260, 1104, 1096}};
  static const std::vector<ReferenceRow> b = {{1, -1, 1, 1},      {4, 3, 3, 2},        {7, 6, 5, 5},
                                              {16, 13, 12, 8},    {43, 30, 24, 17},    {114, 72, 62, 46},
                                              {282, 182, 153, 105}, {774, 468, 402, 278}};
  static const std::vector<ReferenceRow> c = {{1, -1, 1, 1},   {6, 4, 4, 3},     {12, 10, 8, 6},
                                              {36, 28, 25, 20}, {132, 85, 69, 52}, {405, 272, 231, 178}};
  static const std::vector<ReferenceRow> d = {{1, -1, 1, 1},    {7, 5, 5, 3},       {17, 15, 11, 9},
                                              {67, 51, 45, 33}, {293, 195, 158, 129}, {1146, 781, 657, 527}};
  switch (which) {
    case 'a': return a;
    case 'b': return b;
    case 'c': return c;
    case 'd': return d;
    default: throw std::invalid_argument(std::string("unknown table '") + which + "'");
  }
}

TableCheck check_table(char which, const std::vector<ReportRow>& rows, int required_lp_n) {
  const auto& ref = reference_table(which);
  TableCheck out;
  auto mismatch = [&](int n, const std::string& column, const std::string& got, long want) {
    out.mismatches.push_back("n=" + std::to_string(n) + " " + column + ": got " + got + ", expected " +
                             std::to_string(want));
  };
  for (const auto& r : rows) {
    if (r.n < 1 || r.n > static_cast<int>(ref.size())) continue;
    const auto& want = ref[static_cast<std::size_t>(r.n - 1)];
    if (r.lev_ub.floored != want.lev) mismatch(r.n, "lev_ub", to_string(r.lev_ub.floored), want.lev);
    if (want.closed >= 0 && (!r.closed_form || r.closed_form->floored != want.closed))
      mismatch(r.n, "closed_form", cell(r.closed_form, true), want.closed);
    if (r.lp_floor && *r.lp_floor != want.lp) mismatch(r.n, "lp_ub", to_string(*r.lp_floor), want.lp);
    if (!r.lp_floor && r.n <= required_lp_n) out.skipped_required.push_back(r.n);
    if (r.best_code != want.best) mismatch(r.n, "best_code", std::to_string(r.best_code), want.best);
  }
  return out;
}

std::vector<DominanceRow> fig2_data(int q, const std::vector<int>& s_list, int n_min, int n_max) {
  std::vector<DominanceRow> rows;
  for (int s : s_list)
    for (int n = n_min; n <= n_max; ++n) {
      const auto lev = levenshtein_bound(q, s, n, LevenshteinRange::Full);
      rows.push_back({s, n, U_bound(q, s, n), lev.value, lev.argmin});
    }
  return rows;
}

void write_fig2_csv(std::ostream& os, const std::vector<DominanceRow>& rows) {
  os << "s,n,U,lev_min,lev_argmin,U_exact,lev_min_exact,dominates\n";
  for (const auto& r : rows)
    os << r.s << ',' << r.n << ',' << format_float(r.u.to_double()) << ',' << format_float(r.lev_min.to_double())
       << ',' << r.lev_argmin << ',' << r.u.str() << ',' << r.lev_min.str() << ',' << (r.dominates() ? 1 : 0)
       << '\n';
}

std::vector<double> uniform_grid(double step, double end) {
  if (!(step > 0)) throw std::domain_error("uniform_grid: step must be positive");
  std::vector<double> grid;
  for (long i = 0;; ++i) {
    const double tau = static_cast<double>(i) * step;
    if (tau >= end - step * 1e-9) break;
    grid.push_back(tau);
  }
  return grid;
}

std::vector<RateRow> fig1_data(const std::vector<int>& q_list, const std::vector<double>& grid) {
  for (double tau : grid)
    if (tau < 0 || tau >= 0.5) throw std::domain_error("fig1_data: grid must lie in [0, 1/2)");
  std::vector<RateRow> rows;
  for (int q : q_list) {
    const auto curve = rate_curve(q, grid);
    const auto minimum = local_minimum_then_increase(curve);
    for (const auto& [tau, bound] : curve.points) rows.push_back({q, tau, bound, minimum && *minimum == tau});
  }
  return rows;
}

void write_fig1_csv(std::ostream& os, const std::vector<RateRow>& rows) {
  os << "q,tau,bound,local_minimum\n";
  for (const auto& r : rows)
    os << r.q << ',' << format_float(r.tau) << ',' << format_float(r.bound) << ',' << (r.local_minimum ? 1 : 0) << '\n';
}

// ---------------------------------------------------------------------------
// Suites

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.passed; });
}

namespace {

/// Collects failures of one named check; only the first few are kept.
class Check {
 public:
  explicit Check(std::string name) : name_(std::move(name)) {}
  void expect(bool ok, const std::string& what) {
    ++cases_;
    if (ok) return;
    if (++failures_ <= 3) detail_ += (detail_.empty() ? "" : "; ") + what;
  }
  SuiteCheck done() const {
    return {name_, failures_ == 0,
            failures_ ? std::to_string(failures_) + " of " + std::to_string(cases_) + " failed: " + detail_
                      : std::to_string(cases_) + " cases"};
  }

 private:
  std::string name_, detail_;
  long cases_ = 0, failures_ = 0;
};

std::string tag(int q, int s, int n) {
  return "(" + std::to_string(q) + "," + std::to_string(s) + "," + std::to_string(n) + ")";
}

void suite_invariants(SuiteResult& out) {
  Check order("row ordering");
  for (auto [q, n_max] : {std::pair{2, 10}, {3, 6}, {4, 5}, {5, 4}})
    for (int n = 2; n <= n_max; ++n) {
      const auto r = make_row(q, n);
      const std::string t = tag(q, 1, n);
      order.expect(r.lp_upper && *r.lp_lower <= r.closed_form->value, t + " lp > closed form");
      order.expect(r.closed_form->value <= r.lev_ub.value, t + " closed form > levenshtein");
      order.expect(r.lp_upper && Rational(r.best_code) <= *r.lp_upper, t + " best code > lp");
      if (r.exact_nu) order.expect(r.best_code <= *r.exact_nu && Rational(*r.exact_nu) <= *r.lp_upper, t + " nu out of range");
    }
  out.checks.push_back(order.done());

  Check sizes("deletion-set size bounds");
  for (int n = 3; n <= 8; ++n)
    for (int s = 1; s <= 3 && s < n; ++s)
      for_each_string(2, n, [&](std::uint64_t, std::span<const Symbol> sym) {
        const QaryString x(std::vector<Symbol>(sym.begin(), sym.end()), 2);
        const int r = x.runs();
        if (r <= 2) return;
        const BigInt size = deletion_set_size(x, s);
        sizes.expect(dset_size_lower(r, s, n) <= size && size <= dset_size_upper(r, s), x.str() + " s=" + std::to_string(s));
      });
  out.checks.push_back(sizes.done());

  Check mono("deletion-set monotonicity under insertion");
  for (int n = 2; n <= 6; ++n)
    for (int s = 1; s <= 2 && s < n; ++s)
      for_each_string(2, n, [&](std::uint64_t, std::span<const Symbol> sym) {
        const QaryString x(std::vector<Symbol>(sym.begin(), sym.end()), 2);
        const auto dx = deletion_set_size(x, s);
        for (const auto& y : insertion_set(x, 1))
          mono.expect(dx <= deletion_set_size(y, s), x.str() + " -> " + y.str());
      });
  out.checks.push_back(mono.done());

  Check lower("U lower bound");
  for (int q = 2; q <= 3; ++q)
    for (int s = 1; s <= 3; ++s)
      for (int n = 2 * s + 1; n <= 12; ++n) lower.expect(U_lower(q, s, n) <= U_bound(q, s, n), tag(q, s, n));
  out.checks.push_back(lower.done());
}

void suite_oracles(SuiteResult& out) {
  Check count("deletion-set size against enumeration");
  for (auto [q, n_max] : {std::pair{2, 8}, {3, 5}})
    for (int n = 1; n <= n_max; ++n)
      for (int s = 1; s <= 3 && s <= n; ++s)
        for_each_string(q, n, [&](std::uint64_t, std::span<const Symbol> sym) {
          const QaryString x(std::vector<Symbol>(sym.begin(), sym.end()), q);
          count.expect(deletion_set_size(x, s) == deletion_set(x, s).size(), x.str() + " s=" + std::to_string(s));
        });
  out.checks.push_back(count.done());

  Check confusable("edit distance against deletion-set intersection");
  for (auto [q, n] : {std::pair{2, 6}, {3, 4}}) {
    const auto all = all_strings(q, n);
    for (int s = 1; s <= 2; ++s)
      for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) {
          const bool meet = !set_intersection(deletion_set(all[i], s), deletion_set(all[j], s)).empty();
          confusable.expect(meet == (edit_distance(all[i], all[j]) <= 2 * s), all[i].str() + " " + all[j].str());
        }
  }
  out.checks.push_back(confusable.done());

  Check closed("transversal sum against closed form");
  for (int q = 2; q <= 3; ++q)
    for (int n = 2; n <= (q == 2 ? 14 : 9); ++n)
      closed.expect(transversal_sum_bound(q, 1, n) == single_deletion_bound(q, n), tag(q, 1, n));
  out.checks.push_back(closed.done());

  Check runs("run-count census");
  for (int q = 2; q <= 4; ++q)
    for (int m = 1; m <= 6; ++m) {
      std::vector<long> census(static_cast<std::size_t>(m + 1), 0);
      for_each_string(q, m, [&](std::uint64_t, std::span<const Symbol> sym) {
        ++census[static_cast<std::size_t>(QaryString(std::vector<Symbol>(sym.begin(), sym.end()), q).runs())];
      });
      for (int r = 1; r <= m; ++r)
        runs.expect(count_strings_with_runs(q, m, r) == census[static_cast<std::size_t>(r)],
                    tag(q, r, m));
    }
  out.checks.push_back(runs.done());

  Check codes("constructed codes are single-deletion correcting");
  for (int n = 1; n <= 10; ++n) codes.expect(verify_codebook(vt_code(n, 0), 1).valid, "vt n=" + std::to_string(n));
  for (auto [q, n_max] : {std::pair{3, 6}, {4, 4}, {5, 4}})
    for (int n = 1; n <= n_max; ++n) {
      const auto best = best_known_size(q, n);
      codes.expect(verify_codebook(best.code, 1).valid, best.code.label());
    }
  out.checks.push_back(codes.done());
}

void suite_duality(SuiteResult& out) {
  Check gap("matching and transversal optima agree");
  Check chain("nu <= nu* <= transversal weight <= U");
  const std::vector<std::array<int, 3>> instances = {
      {2, 1, 4}, {2, 1, 6}, {2, 1, 8}, {2, 1, 10}, {3, 1, 4}, {3, 1, 6}, {4, 1, 4}, {4, 1, 5},
      {5, 1, 4}, {2, 2, 5}, {2, 2, 6}, {2, 2, 8}, {3, 2, 5}, {3, 2, 6}, {2, 3, 7}, {2, 3, 8}};
  for (const auto& [q, s, n] : instances) {
    const auto h = build(q, s, n);
    const auto matching = solve_fractional_matching(h);
    const auto transversal = solve_fractional_transversal(h);
    const std::string t = tag(q, s, n);
    gap.expect(matching.status == LpStatus::Optimal && transversal.status == LpStatus::Optimal &&
                   std::abs(matching.value - transversal.value) <= 1e-6,
               t);
    gap.expect(verify_matching(h, matching.matching).ok && verify_transversal(h, transversal.transversal).ok,
               t + " infeasible solution");

    const auto w = paper_transversal(h);
    Rational weight = 0;
    for (Eigen::Index i = 0; i < w.size(); ++i) weight += w[i];
    chain.expect(matching.certified_lower <= weight, t + " nu* > transversal weight");
    if (n > 2 * s) chain.expect(weight <= U_bound(q, s, n), t + " transversal weight > U");
    if (h.edge_count() <= 256) {
      const auto nu = max_independent_set(line_graph(h));
      chain.expect(nu.proven_optimal && Rational(nu.size) <= matching.certified_upper, t + " nu > nu*");
    }
  }
  out.checks.push_back(gap.done());
  out.checks.push_back(chain.done());
}

void suite_rll(SuiteResult& out) {
  Check lemma("deletion ball decomposition");
  Check disjoint("S and S' disjoint");
  Check sum("closed sum equals direct sum (n > d)");
  for (int d = 2; d <= 4; ++d)
    for (int n = d; n <= 12; ++n) {
      const std::string t = "n=" + std::to_string(n) + " d=" + std::to_string(d);
      lemma.expect(lemma9_check(n, d), t);
      disjoint.expect(set_intersection(rll_set({n, d}), rll_prime_set(n, d)).empty(), t);
      if (n > d) sum.expect(rll_bound(n, d) == rll_direct_sum(n, d) && rll_bound(n, d) == rll_decomposition_sum(n, d), t);
    }
  out.checks.push_back(lemma.done());
  out.checks.push_back(disjoint.done());
  out.checks.push_back(sum.done());

  Check bound("closed sum bounds the exact code size (n > d)");
  for (int d = 2; d <= 3; ++d)
    for (int n = d + 1; n <= 12; ++n) {
      const auto h = build_constrained(rll_set({n, d}), 1);
      const auto nu = max_independent_set(line_graph(h));
      bound.expect(nu.proven_optimal && Rational(nu.size) <= rll_bound(n, d),
                   "n=" + std::to_string(n) + " d=" + std::to_string(d));
    }
  out.checks.push_back(bound.done());
}

}  // namespace

SuiteResult run_suite(const std::string& name) {
  SuiteResult out;
  out.name = name;
  if (name == "invariants") suite_invariants(out);
  else if (name == "oracles") suite_oracles(out);
  else if (name == "duality") suite_duality(out);
  else if (name == "rll") suite_rll(out);
  else throw std::invalid_argument("unknown suite '" + name + "'");
  return out;
}

void write_suite_json(std::ostream& os, const SuiteResult& result) {
  nlohmann::ordered_json j;
  j["suite"] = result.name;
  j["passed"] = result.passed();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : result.checks) j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  os << j.dump(2) << '\n';
}

}  // namespace delbound

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "delbound/lp.hpp"
#include "delbound/rational.hpp"

namespace delbound {

struct ReportOptions {
  /// LP columns are computed only when the hypergraph has at most this many
  /// vertices (q^(n-s)); larger rows are marked "skipped".
  long max_vertices = 1 << 12;
  LpMode lp_mode = LpMode::Float;
  /// Exact matching number for rows with at most this many source strings.
  long exact_max_sources = 256;
  long budget_nodes = 10'000'000;
};

/// A value with its floor; absent cells render as empty CSV fields.
struct Cell {
  Rational value;
  BigInt floored;
  static Cell of(const Rational& v) { return {v, v.floor()}; }
};

struct ReportRow {
  int q = 2, s = 1, n = 1;
  Cell lev_ub;
  int lev_argmin = 0;
  std::optional<Cell> closed_form;
  std::optional<Cell> u;
  std::optional<Cell> transversal_sum;
  /// Float LP optimum, its floor (taken after adding 1e-6), and the
  /// certified bracket around the true optimum.
  std::optional<double> lp_ub;
  std::optional<BigInt> lp_floor;
  std::optional<Rational> lp_lower, lp_upper;
  std::string lp_status = "skipped";
  std::optional<int> exact_nu;
  long best_code = 0;
  std::string best_code_label;
};

/// Which reference table: 'a' q=2 n=1..14, 'b' q=3 n=1..8, 'c' q=4 n=1..6,
/// 'd' q=5 n=1..6.
int table_alphabet(char which);
int table_max_length(char which);

ReportRow make_row(int q, int n, const ReportOptions& options = {});
std::vector<ReportRow> table1(char which, const ReportOptions& options = {});
void write_table_csv(std::ostream& os, const std::vector<ReportRow>& rows);

/// Published floored columns (levenshtein, closed form, LP, best code), one
/// entry per n starting at 1; closed form is -1 where undefined.
struct ReferenceRow {
  long lev, closed, lp, best;
};
const std::vector<ReferenceRow>& reference_table(char which);

struct TableCheck {
  std::vector<std::string> mismatches;
  /// Rows whose LP cell is skipped although reference data exists for them
  /// and they fall inside the required range.
  std::vector<int> skipped_required;
};

/// Compares present cells against the reference; LP cells are required for
/// n <= required_lp_n.
TableCheck check_table(char which, const std::vector<ReportRow>& rows, int required_lp_n);

/// Data for `fig 2`: U against the best Levenshtein bound.
struct DominanceRow {
  int s = 2, n = 15;
  Rational u, lev_min;
  int lev_argmin = 0;
  [[nodiscard]] bool dominates() const { return u < lev_min; }
};
std::vector<DominanceRow> fig2_data(int q = 2, const std::vector<int>& s_list = {2, 3, 4}, int n_min = 15, int n_max = 30);
void write_fig2_csv(std::ostream& os, const std::vector<DominanceRow>& rows);

/// Data for `fig 1`: the rate bound on a tau grid for each q.
struct RateRow {
  int q = 2;
  double tau = 0, bound = 0;
  bool local_minimum = false;
};
std::vector<RateRow> fig1_data(const std::vector<int>& q_list, const std::vector<double>& grid);
/// 0, step, 2 step, ... strictly below `end`.
std::vector<double> uniform_grid(double step, double end = 0.5);
void write_fig1_csv(std::ostream& os, const std::vector<RateRow>& rows);

struct SuiteCheck {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::vector<SuiteCheck> checks;
  [[nodiscard]] bool passed() const;
};

/// "invariants", "oracles", "duality" or "rll"; unknown names throw
/// std::invalid_argument.
SuiteResult run_suite(const std::string& name);
void write_suite_json(std::ostream& os, const SuiteResult& result);

/// printf "%.9g": 9 significant digits.
std::string format_float(double v);

}  // namespace delbound

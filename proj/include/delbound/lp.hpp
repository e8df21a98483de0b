#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "delbound/hypergraph.hpp"
#include "delbound/rational.hpp"

namespace delbound {

enum class Sense { Maximize, Minimize };

/// Packing or covering LP with nonnegative variables:
///   Maximize: max c'x  s.t.  A x <= b,  x >= 0
///   Minimize: min c'x  s.t.  A x >= b,  x >= 0
/// The matching and transversal LPs of a hypergraph are the two cases with
/// A the 0/1 incidence matrix (or its transpose) and b = c = 1. Symmetry
/// reduced LPs keep the same shape with nonnegative integer coefficients.
template <typename Scalar>
struct LpProblem {
  Sense sense = Sense::Maximize;
  Eigen::SparseMatrix<Scalar> a;
  VectorX<Scalar> b;
  VectorX<Scalar> c;
  std::vector<std::string> row_names;
  std::vector<std::string> col_names;

  [[nodiscard]] int rows() const { return static_cast<int>(a.rows()); }
  [[nodiscard]] int cols() const { return static_cast<int>(a.cols()); }
};

enum class LpStatus { Optimal, Infeasible, Unbounded, ResourceLimit };

std::string to_string(LpStatus status);

struct SimplexOptions {
  long max_iterations = 2'000'000;
  /// Primal and dual feasibility tolerance (floating point only).
  double feasibility_tol = 1e-9;
  /// Smallest pivot magnitude accepted in ratio tests (floating point only).
  double pivot_tol = 1e-7;
  /// Pivots between refactorisations of the basis inverse (floating point only).
  int refactor_every = 100;
  /// Consecutive degenerate pivots after which pricing switches from
  /// Dantzig's rule to Bland's rule until the objective moves again.
  int degenerate_streak = 50;
};

template <typename Scalar>
struct SimplexResult {
  LpStatus status = LpStatus::ResourceLimit;
  Scalar value{};
  VectorX<Scalar> x;  // primal, one entry per column
  VectorX<Scalar> y;  // dual, one entry per row, y >= 0
  /// Final basis over columns 0..cols-1 and slacks cols..cols+rows-1.
  std::vector<int> basis;
  long iterations = 0;
  long bland_iterations = 0;
};

/// Revised simplex with an explicit dense basis inverse updated by rank-one
/// eta steps. Uses the primal method when b >= 0 in the <= form (the slack
/// basis is primal feasible) and the dual method when c <= 0 (the slack
/// basis is dual feasible); the matching LP is the first case, the
/// transversal LP the second. `start_basis`, if given, is tried first and
/// abandoned for the slack basis when it is neither primal nor dual feasible.
/// Throws std::domain_error for problems in neither class.
template <typename Scalar>
SimplexResult<Scalar> simplex_solve(const LpProblem<Scalar>& lp, const SimplexOptions& options = {},
                                    const std::vector<int>* start_basis = nullptr);

/// A packing LP (max c'x, A x <= b, b >= 0) solved repeatedly with changing
/// objectives. Each solve starts from the previous optimal basis, which is
/// still primal feasible because only the objective moved. Giving a column a
/// negative cost pins it to zero at the optimum (lowering a packing variable
/// never breaks feasibility), so this also solves restrictions of the LP to
/// column subsets.
class WarmPackingLp {
 public:
  explicit WarmPackingLp(const LpProblem<double>& lp, const SimplexOptions& options = {});
  ~WarmPackingLp();
  WarmPackingLp(const WarmPackingLp&) = delete;
  WarmPackingLp& operator=(const WarmPackingLp&) = delete;

  SimplexResult<double> solve(const VectorX<double>& c);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// ---------------------------------------------------------------------------
// Hypergraph LPs

/// max 1'z s.t. A z <= 1 over the edges of h.
LpProblem<double> matching_lp(const DeletionHypergraph& h);
/// min 1'w s.t. A'w >= 1 over the vertices of h.
LpProblem<double> transversal_lp(const DeletionHypergraph& h);

/// Orbit-reduced matching LP: one variable per edge orbit with objective
/// weight |orbit|, one row per vertex orbit whose coefficient on an edge
/// orbit is the number of its edges covering a fixed vertex of the row orbit.
LpProblem<double> reduced_matching_lp(const DeletionHypergraph& h, const SymmetryOrbits& orbits);
/// Orbit-reduced transversal LP, the analogue over vertex orbits.
LpProblem<double> reduced_transversal_lp(const DeletionHypergraph& h, const SymmetryOrbits& orbits);

enum class LpMode { Float, Exact };

struct LpOptions {
  LpMode mode = LpMode::Float;
  /// Solve the orbit-reduced LP. Results are expanded back to the full
  /// hypergraph and verified there, so this only changes speed.
  bool use_symmetry = true;
  /// Exact mode runs the rational simplex only up to this many LP variables
  /// (after reduction); larger instances fall back to certified floats.
  int exact_max_variables = 1 << 10;
  SimplexOptions simplex;
};

/// Optimal fractional matching or transversal with the certificate pair.
///
/// `matching` (edge weights) and `transversal` (vertex weights) are the
/// primal and dual solutions, whichever LP was solved. `certified_lower` and
/// `certified_upper` are exact rationals obtained by rounding both vectors
/// to a 1e-9 grid and rescaling them to exact feasibility: they bracket
/// nu* = tau* rigorously. In exact mode they coincide with
/// `exact_value`.
struct LpSolution {
  LpStatus status = LpStatus::ResourceLimit;
  double value = 0.0;
  std::optional<Rational> exact_value;
  VectorX<double> matching;
  VectorX<double> transversal;
  Rational certified_lower;
  Rational certified_upper;
  long iterations = 0;
  int lp_rows = 0;
  int lp_cols = 0;
  bool reduced = false;
};

LpSolution solve_fractional_matching(const DeletionHypergraph& h, const LpOptions& options = {});
LpSolution solve_fractional_transversal(const DeletionHypergraph& h, const LpOptions& options = {});

/// {"status":..., "value":..., "exact_value":"num/den", "certified_lower":...,
///  "certified_upper":..., "matching":{"index":value,...}, "transversal":{...}}
/// Zero entries are omitted from the two weight maps.
void write_solution_json(std::ostream& os, const LpSolution& solution);

/// Reads a free-format MPS packing (MAX with L rows) or covering (MIN with G
/// rows) LP as produced by write_matching_mps. Integrality markers and
/// binary bounds are ignored, giving the LP relaxation.
LpProblem<double> read_mps(std::istream& is);

}  // namespace delbound

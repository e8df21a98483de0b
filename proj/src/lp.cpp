#include "delbound/lp.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <type_traits>
#include <unordered_map>

#include "json.hpp"

#include "delbound/errors.hpp"

namespace delbound {

std::string to_string(LpStatus status) {
  switch (status) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
    case LpStatus::ResourceLimit: return "resource-limit";
  }
  return "unknown";
}

namespace {

template <typename Scalar>
using Dense = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
constexpr bool kFloat = std::is_floating_point_v<Scalar>;

/// Inverse of a square matrix; nullopt when singular.
template <typename Scalar>
std::optional<Dense<Scalar>> invert(const Dense<Scalar>& m) {
  const auto k = m.rows();
  if constexpr (kFloat<Scalar>) {
    Eigen::PartialPivLU<Dense<double>> lu(m);
    if (k > 0 && lu.matrixLU().diagonal().cwiseAbs().minCoeff() < 1e-11) return std::nullopt;
    return Dense<double>(lu.inverse());
  } else {
    Dense<Scalar> a = m;
    Dense<Scalar> inv = Dense<Scalar>::Identity(k, k);
    for (Eigen::Index col = 0; col < k; ++col) {
      Eigen::Index p = col;
      while (p < k && a(p, col).is_zero()) ++p;
      if (p == k) return std::nullopt;
      if (p != col) {
        a.row(p).swap(a.row(col));
        inv.row(p).swap(inv.row(col));
      }
      const Scalar pivot = a(col, col);
      a.row(col) /= pivot;
      inv.row(col) /= pivot;
      for (Eigen::Index r = 0; r < k; ++r) {
        if (r == col || a(r, col).is_zero()) continue;
        const Scalar f = a(r, col);
        a.row(r) -= f * a.row(col);
        inv.row(r) -= f * inv.row(col);
      }
    }
    return inv;
  }
}

struct SingularBasis : ConsistencyError {
  using ConsistencyError::ConsistencyError;
};

template <typename Scalar>
class Simplex {
 public:
  Simplex(const LpProblem<Scalar>& lp, const SimplexOptions& options) : opt_(options) {
    m_ = lp.rows();
    n_ = lp.cols();
    if (lp.b.size() != m_ || lp.c.size() != n_) throw std::domain_error("simplex: dimension mismatch");
    // Everything is solved in the form max c'x, A x <= b.
    const bool flip = lp.sense == Sense::Minimize;
    flipped_ = flip;
    a_ = lp.a;
    b_ = lp.b;
    c_ = lp.c;
    if (flip) {
      a_ = -a_;
      b_ = -b_;
      c_ = -c_;
    }
    a_.makeCompressed();
    pos_.assign(static_cast<std::size_t>(n_ + m_), -1);
  }

  SimplexResult<Scalar> solve(const std::vector<int>* start) {
    SimplexResult<Scalar> out;
    bool dual = false;
    if (!(start && load_basis(*start) && choose_method(dual))) {
      slack_basis();
      if (!choose_method(dual))
        throw std::domain_error("simplex: problem needs b >= 0 or c <= 0 in the <= form");
    }
    try {
      out.status = dual ? run_dual(out) : run_primal(out);
    } catch (const SingularBasis&) {
      // Accumulated round-off; start over from the slack basis with a
      // stricter pivot threshold.
      if constexpr (!kFloat<Scalar>) throw;
      opt_.pivot_tol = std::max(opt_.pivot_tol, 1e-5);
      slack_basis();
      choose_method(dual);
      out.status = dual ? run_dual(out) : run_primal(out);
    }
    collect(out);
    return out;
  }

  /// Replaces the objective of a packing problem and re-optimises from the
  /// current basis, which stays primal feasible.
  SimplexResult<Scalar> resolve(const VectorX<Scalar>& c) {
    if (c.size() != n_) throw std::domain_error("simplex: objective size mismatch");
    c_ = c;
    SimplexResult<Scalar> out;
    VectorX<Scalar> cb(m_);
    for (int i = 0; i < m_; ++i) cb(i) = cost(basis_[static_cast<std::size_t>(i)]);
    y_ = binv_.transpose() * cb;
    try {
      out.status = run_primal(out);
    } catch (const SingularBasis&) {
      if constexpr (!kFloat<Scalar>) throw;
      slack_basis();
      out.status = run_primal(out);
    }
    collect(out);
    return out;
  }

 private:
  void collect(SimplexResult<Scalar>& out) const {
    out.x = VectorX<Scalar>::Zero(n_);
    for (int i = 0; i < m_; ++i)
      if (basis_[static_cast<std::size_t>(i)] < n_) out.x(basis_[static_cast<std::size_t>(i)]) = xb_(i);
    out.y = y_;
    out.value = c_.dot(out.x);
    if (sense_flipped()) out.value = -out.value;
    out.basis = basis_;
  }

  [[nodiscard]] bool sense_flipped() const { return flipped_; }

  [[nodiscard]] bool positive(const Scalar& v) const {
    if constexpr (kFloat<Scalar>) return v > opt_.feasibility_tol;
    else return v.sign() > 0;
  }
  [[nodiscard]] bool negative(const Scalar& v) const {
    if constexpr (kFloat<Scalar>) return v < -opt_.feasibility_tol;
    else return v.sign() < 0;
  }
  [[nodiscard]] bool pivotable(const Scalar& v) const {
    if constexpr (kFloat<Scalar>) return v > opt_.pivot_tol;
    else return v.sign() > 0;
  }
  [[nodiscard]] static bool tied(const Scalar& a, const Scalar& b) {
    if constexpr (kFloat<Scalar>) return std::abs(a - b) <= 1e-10 * (1.0 + std::abs(b));
    else return a == b;
  }

  [[nodiscard]] Scalar cost(int j) const { return j < n_ ? c_(j) : Scalar(0); }

  [[nodiscard]] Scalar dot_column(const VectorX<Scalar>& v, int j) const {
    if (j >= n_) return v(j - n_);
    Scalar sum(0);
    for (typename Eigen::SparseMatrix<Scalar>::InnerIterator it(a_, j); it; ++it) sum += it.value() * v(it.row());
    return sum;
  }

  [[nodiscard]] VectorX<Scalar> ftran(int j) const {
    if (j >= n_) return binv_.col(j - n_);
    VectorX<Scalar> u = VectorX<Scalar>::Zero(m_);
    for (typename Eigen::SparseMatrix<Scalar>::InnerIterator it(a_, j); it; ++it) u += it.value() * binv_.col(it.row());
    return u;
  }

  void slack_basis() {
    basis_.resize(static_cast<std::size_t>(m_));
    std::fill(pos_.begin(), pos_.end(), -1);
    for (int i = 0; i < m_; ++i) {
      basis_[static_cast<std::size_t>(i)] = n_ + i;
      pos_[static_cast<std::size_t>(n_ + i)] = i;
    }
    binv_ = Dense<Scalar>::Identity(m_, m_);
    xb_ = b_;
    y_ = VectorX<Scalar>::Zero(m_);
    since_refactor_ = 0;
  }

  bool load_basis(const std::vector<int>& start) {
    if (static_cast<int>(start.size()) != m_) return false;
    std::vector<int> seen(static_cast<std::size_t>(n_ + m_), 0);
    for (int j : start)
      if (j < 0 || j >= n_ + m_ || seen[static_cast<std::size_t>(j)]++) return false;
    basis_ = start;
    std::fill(pos_.begin(), pos_.end(), -1);
    for (int i = 0; i < m_; ++i) pos_[static_cast<std::size_t>(basis_[static_cast<std::size_t>(i)])] = i;
    return refactor();
  }

  /// Recomputes the inverse, basic values and duals from the basis.
  bool refactor() {
    Dense<Scalar> bmat = Dense<Scalar>::Zero(m_, m_);
    for (int i = 0; i < m_; ++i) {
      const int j = basis_[static_cast<std::size_t>(i)];
      if (j >= n_) {
        bmat(j - n_, i) = Scalar(1);
      } else {
        for (typename Eigen::SparseMatrix<Scalar>::InnerIterator it(a_, j); it; ++it) bmat(it.row(), i) = it.value();
      }
    }
    auto inv = invert<Scalar>(bmat);
    if (!inv) return false;
    binv_ = std::move(*inv);
    xb_ = binv_ * b_;
    VectorX<Scalar> cb(m_);
    for (int i = 0; i < m_; ++i) cb(i) = cost(basis_[static_cast<std::size_t>(i)]);
    y_ = binv_.transpose() * cb;
    since_refactor_ = 0;
    return true;
  }

  bool choose_method(bool& dual) {
    bool primal_ok = true;
    for (int i = 0; i < m_ && primal_ok; ++i) primal_ok = !negative(xb_(i));
    if (primal_ok) {
      dual = false;
      return true;
    }
    for (int j = 0; j < n_ + m_; ++j)
      if (pos_[static_cast<std::size_t>(j)] < 0 && positive(cost(j) - dot_column(y_, j))) return false;
    dual = true;
    return true;
  }

  void pivot(int r, int q, const VectorX<Scalar>& u, const Scalar& dq) {
    const Scalar ur = u(r);
    const VectorX<Scalar> row = binv_.row(r).transpose() / ur;
    binv_ -= u * row.transpose();
    binv_.row(r) = row.transpose();
    const Scalar theta = xb_(r) / ur;
    xb_ -= theta * u;
    xb_(r) = theta;
    y_ += dq * row;
    pos_[static_cast<std::size_t>(basis_[static_cast<std::size_t>(r)])] = -1;
    basis_[static_cast<std::size_t>(r)] = q;
    pos_[static_cast<std::size_t>(q)] = r;
    ++since_refactor_;
  }

  /// Refactors when due; returns false if the basis became singular.
  bool maintain() {
    if constexpr (kFloat<Scalar>) {
      if (since_refactor_ >= opt_.refactor_every) return refactor();
    }
    return true;
  }

  /// On apparent optimality in floating point, refactor once and re-check.
  bool confirm() {
    if constexpr (kFloat<Scalar>) {
      if (since_refactor_ > 0) {
        if (!refactor()) throw SingularBasis("simplex: singular basis");
        return false;
      }
    }
    return true;
  }

  LpStatus run_primal(SimplexResult<Scalar>& out) {
    int streak = 0;
    for (;;) {
      if (out.iterations >= opt_.max_iterations) return LpStatus::ResourceLimit;
      if (!maintain()) throw SingularBasis("simplex: singular basis");
      const bool bland = streak >= opt_.degenerate_streak;

      int q = -1;
      Scalar best(0), dq(0);
      for (int j = 0; j < n_ + m_; ++j) {
        if (pos_[static_cast<std::size_t>(j)] >= 0) continue;
        const Scalar d = cost(j) - dot_column(y_, j);
        if (!positive(d)) continue;
        if (q < 0 || d > best) q = j, best = d;
        if (bland) break;
      }
      if (q < 0) {
        if (confirm()) return LpStatus::Optimal;
        continue;
      }
      dq = best;
      const VectorX<Scalar> u = ftran(q);

      int r = -1;
      Scalar min_ratio(0);
      for (int i = 0; i < m_; ++i) {
        if (!pivotable(u(i))) continue;
        Scalar ratio = xb_(i) / u(i);
        if (ratio < Scalar(0)) ratio = Scalar(0);
        if (r < 0 || ratio < min_ratio) r = i, min_ratio = ratio;
      }
      if (r < 0) return LpStatus::Unbounded;
      for (int i = 0; i < m_; ++i) {
        if (i == r || !pivotable(u(i))) continue;
        Scalar ratio = xb_(i) / u(i);
        if (ratio < Scalar(0)) ratio = Scalar(0);
        if (!tied(ratio, min_ratio)) continue;
        const bool better = bland ? basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(r)] : u(i) > u(r);
        if (better) r = i;
      }
      streak = positive(min_ratio) ? 0 : streak + 1;
      if (bland) ++out.bland_iterations;
      pivot(r, q, u, dq);
      ++out.iterations;
    }
  }

  LpStatus run_dual(SimplexResult<Scalar>& out) {
    int streak = 0;
    for (;;) {
      if (out.iterations >= opt_.max_iterations) return LpStatus::ResourceLimit;
      if (!maintain()) throw SingularBasis("simplex: singular basis");
      const bool bland = streak >= opt_.degenerate_streak;

      int r = -1;
      for (int i = 0; i < m_; ++i) {
        if (!negative(xb_(i))) continue;
        if (r < 0) {
          r = i;
        } else if (bland ? basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(r)] : xb_(i) < xb_(r)) {
          r = i;
        }
      }
      if (r < 0) {
        if (confirm()) return LpStatus::Optimal;
        continue;
      }
      const VectorX<Scalar> rho = binv_.row(r).transpose();

      int q = -1;
      Scalar min_ratio(0), alpha_q(0), dq(0);
      for (int j = 0; j < n_ + m_; ++j) {
        if (pos_[static_cast<std::size_t>(j)] >= 0) continue;
        const Scalar alpha = dot_column(rho, j);
        if (!pivotable(-alpha)) continue;
        const Scalar d = cost(j) - dot_column(y_, j);
        Scalar ratio = d / alpha;
        if (ratio < Scalar(0)) ratio = Scalar(0);
        bool take = q < 0 || ratio < min_ratio;
        if (!take && tied(ratio, min_ratio) && !bland) take = -alpha > -alpha_q;
        if (take && q >= 0 && tied(ratio, min_ratio) && bland) take = false;  // keep the smallest index
        if (take) q = j, min_ratio = ratio, alpha_q = alpha, dq = d;
      }
      if (q < 0) return LpStatus::Infeasible;
      const VectorX<Scalar> u = ftran(q);
      streak = positive(min_ratio) ? 0 : streak + 1;
      if (bland) ++out.bland_iterations;
      pivot(r, q, u, dq);
      ++out.iterations;
    }
  }

  SimplexOptions opt_;
  int m_ = 0;
  int n_ = 0;
  bool flipped_ = false;
  Eigen::SparseMatrix<Scalar> a_;
  VectorX<Scalar> b_, c_;
  std::vector<int> basis_;
  std::vector<int> pos_;
  Dense<Scalar> binv_;
  VectorX<Scalar> xb_, y_;
  int since_refactor_ = 0;
};

}  // namespace

template <typename Scalar>
SimplexResult<Scalar> simplex_solve(const LpProblem<Scalar>& lp, const SimplexOptions& options,
                                    const std::vector<int>* start_basis) {
  Simplex<Scalar> solver(lp, options);
  return solver.solve(start_basis);
}

template SimplexResult<double> simplex_solve<double>(const LpProblem<double>&, const SimplexOptions&,
                                                     const std::vector<int>*);
template SimplexResult<Rational> simplex_solve<Rational>(const LpProblem<Rational>&, const SimplexOptions&,
                                                         const std::vector<int>*);

struct WarmPackingLp::Impl {
  Simplex<double> simplex;
  bool started = false;
};

WarmPackingLp::WarmPackingLp(const LpProblem<double>& lp, const SimplexOptions& options)
    : impl_(std::make_unique<Impl>(Impl{Simplex<double>(lp, options)})) {
  if (lp.sense != Sense::Maximize || (lp.b.array() < 0).any())
    throw std::domain_error("WarmPackingLp: needs max c'x, A x <= b with b >= 0");
}

WarmPackingLp::~WarmPackingLp() = default;

SimplexResult<double> WarmPackingLp::solve(const VectorX<double>& c) {
  if (!impl_->started) {
    impl_->started = true;
    impl_->simplex.solve(nullptr);
  }
  return impl_->simplex.resolve(c);
}

// ---------------------------------------------------------------------------

namespace {

LpProblem<double> incidence_lp(const DeletionHypergraph& h, bool transpose) {
  LpProblem<double> lp;
  const auto a = h.incidence<double>();
  lp.sense = transpose ? Sense::Minimize : Sense::Maximize;
  if (transpose)
    lp.a = a.transpose();
  else
    lp.a = a;
  lp.b = VectorX<double>::Ones(lp.a.rows());
  lp.c = VectorX<double>::Ones(lp.a.cols());
  const char* row = transpose ? "E" : "V";
  const char* col = transpose ? "V" : "E";
  for (int i = 0; i < lp.rows(); ++i) lp.row_names.push_back(row + std::to_string(i));
  for (int j = 0; j < lp.cols(); ++j) lp.col_names.push_back(col + std::to_string(j));
  return lp;
}

/// Row orbits x column orbits, counting incidences of one representative.
LpProblem<double> reduced_lp(const std::vector<std::vector<int>>& row_members,
                             const std::vector<std::vector<int>>& col_members, const std::vector<int>& col_orbit,
                             const std::vector<std::vector<int>>& adjacency, Sense sense) {
  LpProblem<double> lp;
  lp.sense = sense;
  const auto rows = static_cast<Eigen::Index>(row_members.size());
  const auto cols = static_cast<Eigen::Index>(col_members.size());
  std::vector<Eigen::Triplet<double>> t;
  for (Eigen::Index p = 0; p < rows; ++p) {
    std::map<int, int> counts;
    for (int e : adjacency[static_cast<std::size_t>(row_members[static_cast<std::size_t>(p)].front())])
      ++counts[col_orbit[static_cast<std::size_t>(e)]];
    for (auto [o, k] : counts) t.emplace_back(p, o, static_cast<double>(k));
  }
  lp.a.resize(rows, cols);
  lp.a.setFromTriplets(t.begin(), t.end());
  lp.b = VectorX<double>::Ones(rows);
  lp.c.resize(cols);
  for (Eigen::Index o = 0; o < cols; ++o) lp.c(o) = static_cast<double>(col_members[static_cast<std::size_t>(o)].size());
  for (Eigen::Index i = 0; i < rows; ++i) lp.row_names.push_back("P" + std::to_string(i));
  for (Eigen::Index j = 0; j < cols; ++j) lp.col_names.push_back("O" + std::to_string(j));
  return lp;
}

}  // namespace

LpProblem<double> matching_lp(const DeletionHypergraph& h) { return incidence_lp(h, false); }
LpProblem<double> transversal_lp(const DeletionHypergraph& h) { return incidence_lp(h, true); }

LpProblem<double> reduced_matching_lp(const DeletionHypergraph& h, const SymmetryOrbits& orbits) {
  return reduced_lp(orbits.vertex_members, orbits.edge_members, orbits.edge_orbit, h.vertex_edges, Sense::Maximize);
}

LpProblem<double> reduced_transversal_lp(const DeletionHypergraph& h, const SymmetryOrbits& orbits) {
  return reduced_lp(orbits.edge_members, orbits.vertex_members, orbits.vertex_orbit, h.edge_vertices, Sense::Minimize);
}

namespace {

template <typename Scalar>
VectorX<Scalar> expand(const VectorX<Scalar>& reduced, const std::vector<int>& orbit_of,
                       const std::vector<std::vector<int>>& members, bool divide_by_size) {
  VectorX<Scalar> out(static_cast<Eigen::Index>(orbit_of.size()));
  for (std::size_t i = 0; i < orbit_of.size(); ++i) {
    const int o = orbit_of[i];
    out(static_cast<Eigen::Index>(i)) = reduced(o);
    if (divide_by_size) out(static_cast<Eigen::Index>(i)) /= Scalar(static_cast<long>(members[static_cast<std::size_t>(o)].size()));
  }
  return out;
}

/// Certificates work on a fixed grid k / kGrid so the exact arithmetic
/// stays in 64-bit integers: weights are rounded down for the matching and
/// up for the transversal, then rescaled to exact feasibility.
constexpr double kGrid = 1e9;

std::vector<std::int64_t> to_grid(const VectorX<double>& v, bool round_up) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double scaled = std::max(v(i), 0.0) * kGrid;
    out[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(round_up ? std::ceil(scaled) : std::floor(scaled));
  }
  return out;
}

/// sum z / (max vertex load), a feasible matching value.
Rational certify_lower(const DeletionHypergraph& h, const VectorX<double>& weights) {
  const auto z = to_grid(weights, false);
  std::int64_t total = 0, worst = 0;
  for (auto k : z) total += k;
  for (const auto& edges : h.vertex_edges) {
    std::int64_t load = 0;
    for (int e : edges) load += z[static_cast<std::size_t>(e)];
    worst = std::max(worst, load);
  }
  return worst == 0 ? Rational(0) : Rational(BigInt(static_cast<long>(total)), BigInt(static_cast<long>(worst)));
}

/// sum w / (min edge coverage), a feasible transversal value; falls back to
/// the all-ones transversal when some edge is uncovered.
Rational certify_upper(const DeletionHypergraph& h, const VectorX<double>& weights) {
  const auto w = to_grid(weights, true);
  std::int64_t total = 0;
  std::optional<std::int64_t> least;
  for (auto k : w) total += k;
  for (const auto& vertices : h.edge_vertices) {
    std::int64_t cover = 0;
    for (int v : vertices) cover += w[static_cast<std::size_t>(v)];
    if (!least || cover < *least) least = cover;
  }
  if (!least || *least == 0) return Rational(h.vertex_count());
  return Rational(BigInt(static_cast<long>(total)), BigInt(static_cast<long>(*least)));
}

VectorX<double> to_double_vector(const VectorX<Rational>& v) {
  VectorX<double> out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = v(i).to_double();
  return out;
}

LpProblem<Rational> to_rational(const LpProblem<double>& lp) {
  LpProblem<Rational> out;
  out.sense = lp.sense;
  std::vector<Eigen::Triplet<Rational>> t;
  for (int j = 0; j < lp.a.outerSize(); ++j)
    for (Eigen::SparseMatrix<double>::InnerIterator it(lp.a, j); it; ++it)
      t.emplace_back(it.row(), it.col(), Rational::from_double(it.value()));
  out.a.resize(lp.a.rows(), lp.a.cols());
  out.a.setFromTriplets(t.begin(), t.end());
  out.b.resize(lp.b.size());
  for (Eigen::Index i = 0; i < lp.b.size(); ++i) out.b(i) = Rational::from_double(lp.b(i));
  out.c.resize(lp.c.size());
  for (Eigen::Index j = 0; j < lp.c.size(); ++j) out.c(j) = Rational::from_double(lp.c(j));
  out.row_names = lp.row_names;
  out.col_names = lp.col_names;
  return out;
}

/// Solves the matching (transversal = false) or transversal LP and maps
/// primal and dual back to edge and vertex weights.
LpSolution solve_hypergraph_lp(const DeletionHypergraph& h, const LpOptions& options, bool transversal) {
  std::optional<SymmetryOrbits> orbits;
  if (options.use_symmetry) orbits = symmetry_orbits(h);
  const LpProblem<double> lp = orbits ? (transversal ? reduced_transversal_lp(h, *orbits) : reduced_matching_lp(h, *orbits))
                                      : (transversal ? transversal_lp(h) : matching_lp(h));

  // Primal lives on edges for the matching LP, on vertices for the transversal LP.
  auto map_back = [&](const auto& primal, const auto& dual, auto& z, auto& w) {
    if (!orbits) {
      (transversal ? w : z) = primal;
      (transversal ? z : w) = dual;
      return;
    }
    if (transversal) {
      w = expand(primal, orbits->vertex_orbit, orbits->vertex_members, false);
      z = expand(dual, orbits->edge_orbit, orbits->edge_members, true);
    } else {
      z = expand(primal, orbits->edge_orbit, orbits->edge_members, false);
      w = expand(dual, orbits->vertex_orbit, orbits->vertex_members, true);
    }
  };

  LpSolution out;
  out.lp_rows = lp.rows();
  out.lp_cols = lp.cols();
  out.reduced = orbits.has_value();
  const auto fres = simplex_solve(lp, options.simplex);
  out.status = fres.status;
  out.iterations = fres.iterations;
  out.value = fres.value;
  if (fres.status != LpStatus::Optimal) return out;
  map_back(fres.x, fres.y, out.matching, out.transversal);

  if (options.mode == LpMode::Exact && lp.cols() <= options.exact_max_variables) {
    const auto rlp = to_rational(lp);
    const auto rres = simplex_solve(rlp, SimplexOptions{}, &fres.basis);
    if (rres.status != LpStatus::Optimal) throw ConsistencyError("exact simplex did not reach optimality");
    VectorX<Rational> z, w;
    map_back(rres.x, rres.y, z, w);
    if (!verify_matching(h, z).ok || !verify_transversal(h, w).ok)
      throw ConsistencyError("exact LP solution fails verification");
    Rational zsum = 0, wsum = 0;
    for (Eigen::Index e = 0; e < z.size(); ++e) zsum += z(e);
    for (Eigen::Index v = 0; v < w.size(); ++v) wsum += w(v);
    if (zsum != wsum || zsum != rres.value) throw ConsistencyError("exact LP duality mismatch");
    out.exact_value = rres.value;
    out.value = rres.value.to_double();
    out.iterations += rres.iterations;
    out.matching = to_double_vector(z);
    out.transversal = to_double_vector(w);
    out.certified_lower = out.certified_upper = rres.value;
    return out;
  }

  out.certified_lower = certify_lower(h, out.matching);
  out.certified_upper = certify_upper(h, out.transversal);
  if (out.certified_upper < out.certified_lower) throw ConsistencyError("LP certificates cross");
  return out;
}

}  // namespace

LpSolution solve_fractional_matching(const DeletionHypergraph& h, const LpOptions& options) {
  return solve_hypergraph_lp(h, options, false);
}

LpSolution solve_fractional_transversal(const DeletionHypergraph& h, const LpOptions& options) {
  return solve_hypergraph_lp(h, options, true);
}

void write_solution_json(std::ostream& os, const LpSolution& solution) {
  nlohmann::ordered_json j;
  j["status"] = to_string(solution.status);
  j["value"] = solution.value;
  if (solution.exact_value) j["exact_value"] = solution.exact_value->str();
  j["certified_lower"] = solution.certified_lower.str();
  j["certified_upper"] = solution.certified_upper.str();
  j["iterations"] = solution.iterations;
  j["lp_rows"] = solution.lp_rows;
  j["lp_cols"] = solution.lp_cols;
  j["symmetry_reduced"] = solution.reduced;
  auto weights = [](const VectorX<double>& v) {
    nlohmann::ordered_json m = nlohmann::ordered_json::object();
    for (Eigen::Index i = 0; i < v.size(); ++i)
      if (v(i) != 0.0) m[std::to_string(i)] = v(i);
    return m;
  };
  j["matching"] = weights(solution.matching);
  j["transversal"] = weights(solution.transversal);
  os << j.dump(1) << '\n';
}

LpProblem<double> read_mps(std::istream& is) {
  enum class Section { None, Name, ObjSense, Rows, Columns, Rhs, Bounds };
  Section section = Section::None;
  std::optional<Sense> sense;
  std::string objective;
  std::unordered_map<std::string, int> row_index, col_index;
  std::vector<std::string> row_names, col_names;
  std::vector<char> row_type;
  std::vector<Eigen::Triplet<double>> entries;
  std::map<int, double> objective_coef, rhs;

  auto fail = [](const std::string& what) { throw std::domain_error("read_mps: " + what); };
  auto parse_sense = [&](const std::string& word) {
    if (word == "MAX" || word == "MAXIMIZE") sense = Sense::Maximize;
    else if (word == "MIN" || word == "MINIMIZE") sense = Sense::Minimize;
    else fail("unknown objective sense " + word);
  };

  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '*') continue;
    std::istringstream ss(line);
    std::vector<std::string> tok;
    for (std::string t; ss >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (!std::isspace(static_cast<unsigned char>(line[0]))) {
      const std::string& head = tok[0];
      if (head == "NAME") section = Section::Name;
      else if (head == "OBJSENSE") {
        section = Section::ObjSense;
        if (tok.size() > 1) parse_sense(tok[1]);
      } else if (head == "ROWS") section = Section::Rows;
      else if (head == "COLUMNS") section = Section::Columns;
      else if (head == "RHS") section = Section::Rhs;
      else if (head == "BOUNDS") section = Section::Bounds;
      else if (head == "ENDATA") break;
      else fail("unsupported section " + head);
      continue;
    }
    switch (section) {
      case Section::ObjSense: parse_sense(tok[0]); break;
      case Section::Rows: {
        if (tok.size() != 2) fail("malformed ROWS line");
        if (tok[0] == "N") {
          if (objective.empty()) objective = tok[1];
          break;
        }
        if (tok[0] != "L" && tok[0] != "G") fail("only L and G rows are supported");
        row_index[tok[1]] = static_cast<int>(row_names.size());
        row_names.push_back(tok[1]);
        row_type.push_back(tok[0][0]);
        break;
      }
      case Section::Columns: {
        if (tok.size() >= 2 && tok[1] == "'MARKER'") break;
        if (tok.size() != 3 && tok.size() != 5) fail("malformed COLUMNS line");
        auto [it, fresh] = col_index.try_emplace(tok[0], static_cast<int>(col_names.size()));
        if (fresh) col_names.push_back(tok[0]);
        for (std::size_t k = 1; k + 1 < tok.size(); k += 2) {
          const double value = std::stod(tok[k + 1]);
          if (tok[k] == objective) {
            objective_coef[it->second] += value;
          } else {
            const auto r = row_index.find(tok[k]);
            if (r == row_index.end()) fail("unknown row " + tok[k]);
            entries.emplace_back(r->second, it->second, value);
          }
        }
        break;
      }
      case Section::Rhs: {
        if (tok.size() != 3 && tok.size() != 5) fail("malformed RHS line");
        for (std::size_t k = 1; k + 1 < tok.size(); k += 2) {
          if (tok[k] == objective) continue;
          const auto r = row_index.find(tok[k]);
          if (r == row_index.end()) fail("unknown row " + tok[k]);
          rhs[r->second] = std::stod(tok[k + 1]);
        }
        break;
      }
      case Section::Bounds: {
        // Binary and upper bounds are dropped: the result is the LP relaxation.
        if (tok[0] == "BV" || tok[0] == "UP" || tok[0] == "PL") break;
        if (tok[0] == "LO" && tok.size() == 4 && std::stod(tok[3]) == 0.0) break;
        fail("unsupported bound type " + tok[0]);
        break;
      }
      default: fail("data outside a section");
    }
  }

  LpProblem<double> lp;
  lp.sense = sense.value_or(Sense::Minimize);
  const char expected = lp.sense == Sense::Maximize ? 'L' : 'G';
  for (char t : row_type)
    if (t != expected) fail("MAX needs L rows and MIN needs G rows");
  const auto m = static_cast<Eigen::Index>(row_names.size());
  const auto n = static_cast<Eigen::Index>(col_names.size());
  lp.a.resize(m, n);
  lp.a.setFromTriplets(entries.begin(), entries.end());
  lp.b = VectorX<double>::Zero(m);
  for (auto [r, v] : rhs) lp.b(r) = v;
  lp.c = VectorX<double>::Zero(n);
  for (auto [j, v] : objective_coef) lp.c(j) = v;
  lp.row_names = std::move(row_names);
  lp.col_names = std::move(col_names);
  return lp;
}

}  // namespace delbound

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "delbound/qary_string.hpp"
#include "delbound/rational.hpp"

namespace delbound {

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Deletion hypergraph H^D: vertices are the strings of length n - s that
/// can be reached by s deletions, each hyperedge is D_s(y) for a source
/// string y. Vertices and edges are numbered by lexicographic rank.
///
/// Incidence is stored edge-major (`edge_vertices`, the columns of the
/// matching LP) with a derived vertex-major index (`vertex_edges`, the rows).
struct DeletionHypergraph {
  int q = 2;
  int s = 1;
  int n = 0;
  bool constrained = false;
  StringSet vertices;
  StringSet edges;
  std::vector<std::vector<int>> edge_vertices;
  std::vector<std::vector<int>> vertex_edges;

  [[nodiscard]] int vertex_count() const { return static_cast<int>(vertices.size()); }
  [[nodiscard]] int edge_count() const { return static_cast<int>(edges.size()); }
  [[nodiscard]] std::size_t nonzeros() const;

  /// Vertex-by-edge 0/1 incidence matrix A: A z <= 1 is the matching polytope.
  template <typename Scalar = double>
  [[nodiscard]] Eigen::SparseMatrix<Scalar> incidence() const {
    std::vector<Eigen::Triplet<Scalar>> t;
    t.reserve(nonzeros());
    for (int e = 0; e < edge_count(); ++e)
      for (int v : edge_vertices[static_cast<std::size_t>(e)]) t.emplace_back(v, e, Scalar(1));
    Eigen::SparseMatrix<Scalar> a(vertex_count(), edge_count());
    a.setFromTriplets(t.begin(), t.end());
    return a;
  }
};

/// Default cap on the number of hyperedges, q^n <= 2^20.
inline constexpr std::uint64_t kDefaultHypergraphCap = std::uint64_t{1} << 20;

/// H^D_{q,s,n}. Throws ResourceError if q^n exceeds `cap`.
DeletionHypergraph build(int q, int s, int n, std::uint64_t cap = kDefaultHypergraphCap);

/// H^D_{S,s}, the partial hypergraph generated by S: vertices D_s(S), edges S.
DeletionHypergraph build_constrained(const StringSet& sources, int s);

/// w(x) = 1/|D_s(x)| on every vertex, checked to be a fractional transversal.
/// Throws ConsistencyError if a covering constraint fails.
VectorX<Rational> paper_transversal(const DeletionHypergraph& h);

struct VerifyResult {
  bool ok = true;
  /// Edges (transversal check) or vertices (matching check) whose constraint fails.
  std::vector<int> violated;
  /// Indices holding negative weights.
  std::vector<int> negative;
};

/// sum_{x in D_s(y)} w(x) >= 1 for every edge y, w >= 0. Floating-point
/// weights are checked with absolute tolerance `tol`; rational ones exactly.
template <typename Scalar>
VerifyResult verify_transversal(const DeletionHypergraph& h, const VectorX<Scalar>& w, double tol = 1e-9);

/// sum_{y covering x} z(y) <= 1 for every vertex x, z >= 0.
template <typename Scalar>
VerifyResult verify_matching(const DeletionHypergraph& h, const VectorX<Scalar>& z, double tol = 1e-9);

/// Orbits of vertices and edges under string reversal and permutations of
/// the alphabet, restricted to the symmetries that map the edge set onto
/// itself (always all of them for the unconstrained hypergraph).
struct SymmetryOrbits {
  std::vector<int> vertex_orbit;
  std::vector<int> edge_orbit;
  std::vector<std::vector<int>> vertex_members;
  std::vector<std::vector<int>> edge_members;
  int generators_used = 0;
};

SymmetryOrbits symmetry_orbits(const DeletionHypergraph& h);

/// Free-format MPS of the matching LP (max 1'z, A z <= 1, z >= 0), or of the
/// matching ILP when `integer` is set (binary columns). Rows are named
/// V<vertex index>, columns E<edge index>.
void write_matching_mps(std::ostream& os, const DeletionHypergraph& h, bool integer = false);

/// JSON incidence dump:
///   {"q":2,"s":1,"n":3,"vertices":["00",...],"edges":["000",...],
///    "incidence":[[0,1],...]}
/// where incidence[e] lists the vertex indices covered by edge e.
void write_incidence_json(std::ostream& os, const DeletionHypergraph& h);

}  // namespace delbound

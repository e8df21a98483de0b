#include <set>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"

#include "delbound/bounds.hpp"
#include "delbound/counting.hpp"
#include "delbound/errors.hpp"
#include "delbound/hypergraph.hpp"
#include "delbound/lp.hpp"
#include "delbound/rll.hpp"

using namespace delbound;

namespace {

Rational frac(long a, long b) { return Rational(BigInt(a), BigInt(b)); }

Rational total(const VectorX<Rational>& w) {
  Rational sum = 0;
  for (Eigen::Index i = 0; i < w.size(); ++i) sum += w[i];
  return sum;
}

}  // namespace

TEST_CASE("hypergraph structure") {
  const auto h = build(2, 1, 3);
  CHECK(h.vertex_count() == 4);
  CHECK(h.edge_count() == 8);
  const auto e = h.edges.index_of(QaryString::parse("010", 2));
  std::set<std::string> covered;
  for (int v : h.edge_vertices[static_cast<std::size_t>(e)]) covered.insert(h.vertices[static_cast<std::size_t>(v)].str());
  CHECK(covered == std::set<std::string>{"10", "00", "01"});

  for (auto [q, s, n] : {std::tuple{2, 1, 6}, {2, 2, 6}, {3, 1, 4}, {3, 2, 5}, {4, 1, 4}}) {
    const auto g = build(q, s, n);
    for (int i = 0; i < g.edge_count(); ++i) {
      const auto& y = g.edges[static_cast<std::size_t>(i)];
      std::set<std::string> want = oracle::deletions(y.str(), s), got;
      for (int v : g.edge_vertices[static_cast<std::size_t>(i)]) got.insert(g.vertices[static_cast<std::size_t>(v)].str());
      REQUIRE(got == want);
    }
    // Regular: every vertex lies in iota(q, s, n) edges.
    for (const auto& edges : g.vertex_edges) REQUIRE(iota(q, s, n) == edges.size());
  }
  const auto h24 = build(2, 2, 4);
  CHECK(h24.edge_vertices[0].size() == 1);  // 0000
  CHECK_THROWS_AS(build(2, 1, 12, 1 << 10), ResourceError);
  CHECK_THROWS_AS(build(2, 3, 3), std::domain_error);
}

TEST_CASE("constrained hypergraph") {
  const auto full = build_constrained(all_strings(3, 4), 1);
  const auto h = build(3, 1, 4);
  CHECK(full.vertices == h.vertices);
  CHECK(full.edges == h.edges);
  CHECK(full.edge_vertices == h.edge_vertices);

  const auto rll = rll_set({5, 2});
  const auto c = build_constrained(rll, 1);
  std::set<std::string> want, got;
  for (const auto& y : rll)
    for (const auto& x : oracle::deletions(y.str(), 1)) want.insert(x);
  for (const auto& x : c.vertices) got.insert(x.str());
  CHECK(got == want);

  const auto one = build_constrained(StringSet({QaryString::parse("0110", 2)}), 2);
  CHECK(one.edge_count() == 1);
  CHECK(one.vertex_count() == static_cast<int>(oracle::deletions("0110", 2).size()));
  CHECK_THROWS_AS(build_constrained(StringSet{}, 1), std::domain_error);
}

TEST_CASE("run-count transversal and verification") {
  for (int n = 2; n <= 12; ++n) {
    const auto h = build(2, 1, n);
    const auto w = paper_transversal(h);
    CHECK(verify_transversal(h, w).ok);
    CHECK(total(w) == single_deletion_bound(2, n));
  }
  for (auto [q, s, n] : {std::tuple{3, 1, 6}, {2, 2, 9}, {3, 2, 6}, {2, 3, 10}}) {
    const auto h = build(q, s, n);
    const auto w = paper_transversal(h);
    CHECK(verify_transversal(h, w).ok);
    CHECK(total(w) == transversal_sum_bound(q, s, n));
  }
  const auto rll = build_constrained(rll_set({9, 2}), 1);
  const auto w = paper_transversal(rll);
  CHECK(verify_transversal(rll, w).ok);
  Rational direct = 0;
  for (const auto& x : rll.vertices) direct += frac(1, static_cast<long>(oracle::deletions(x.str(), 1).size()));
  CHECK(total(w) == direct);

  const auto h = build(2, 1, 5);
  const auto zeros = VectorX<Rational>::Zero(h.vertex_count()).eval();
  const auto none = verify_transversal(h, zeros);
  CHECK_FALSE(none.ok);
  CHECK(none.violated.size() == static_cast<std::size_t>(h.edge_count()));
  CHECK(verify_transversal(h, VectorX<Rational>::Ones(h.vertex_count()).eval()).ok);
  CHECK_THROWS_AS(verify_transversal(h, VectorX<Rational>::Ones(3).eval()), std::domain_error);

  VectorX<Rational> z = VectorX<Rational>::Zero(h.edge_count());
  CHECK(verify_matching(h, z).ok);
  for (const auto& x : {"00000", "00111", "01010", "10001", "11011", "11100"})  // VT_0(5)
    z[h.edges.index_of(QaryString::parse(x, 2))] = 1;
  CHECK(verify_matching(h, z).ok);
  z = VectorX<Rational>::Zero(h.edge_count());
  z[h.edges.index_of(QaryString::parse("00000", 2))] = 1;
  z[h.edges.index_of(QaryString::parse("00001", 2))] = 1;
  CHECK_FALSE(verify_matching(h, z).ok);
}

TEST_CASE("LP optimum is certified by weak duality") {
  for (auto [q, s, n] : {std::tuple{2, 1, 6}, {2, 1, 8}, {3, 1, 5}, {4, 1, 4}, {5, 1, 3}, {2, 2, 7}, {3, 2, 6}}) {
    const auto h = build(q, s, n);
    for (bool symmetry : {true, false}) {
      LpOptions options;
      options.use_symmetry = symmetry;
      const auto m = solve_fractional_matching(h, options);
      const auto t = solve_fractional_transversal(h, options);
      REQUIRE(m.status == LpStatus::Optimal);
      REQUIRE(t.status == LpStatus::Optimal);
      // Both primal and dual vectors are feasible for the full hypergraph,
      // so their weights bracket the optimum.
      for (const auto* sol : {&m, &t}) {
        CHECK(verify_matching(h, sol->matching, 1e-9).ok);
        CHECK(verify_transversal(h, sol->transversal, 1e-9).ok);
        CHECK(std::abs(sol->matching.sum() - sol->transversal.sum()) <= 1e-6);
        CHECK(sol->certified_lower <= sol->certified_upper);
        CHECK((sol->certified_upper - sol->certified_lower).to_double() <= 1e-6);
      }
      CHECK(std::abs(m.value - t.value) <= 1e-6);
      CHECK(m.certified_upper <= transversal_sum_bound(q, s, n));
    }
  }
  CHECK(std::floor(solve_fractional_matching(build(2, 1, 8)).value + 1e-6) == 30);
  CHECK(std::floor(solve_fractional_matching(build(3, 1, 4)).value + 1e-6) == 12);
  CHECK(std::floor(solve_fractional_matching(build(5, 1, 3)).value + 1e-6) == 11);
}

TEST_CASE("exact LP values") {
  LpOptions exact;
  exact.mode = LpMode::Exact;
  const std::vector<std::tuple<int, int, Rational>> cases = {
      {2, 4, 4}, {2, 6, frac(41, 4)}, {2, 7, frac(343, 20)}, {3, 5, frac(174, 7)}};
  for (const auto& [q, n, value] : cases) {
    const auto h = build(q, 1, n);
    const auto m = solve_fractional_matching(h, exact);
    REQUIRE(m.exact_value.has_value());
    CHECK(*m.exact_value == value);
    CHECK(m.certified_lower == value);
    CHECK(m.certified_upper == value);
    const auto t = solve_fractional_transversal(h, exact);
    REQUIRE(t.exact_value.has_value());
    CHECK(*t.exact_value == value);
  }
}

TEST_CASE("rational simplex on a small packing LP") {
  // max x + y  s.t. 2x + y <= 4, x + 3y <= 6  ->  x = 6/5, y = 8/5.
  LpProblem<Rational> lp;
  lp.a.resize(2, 2);
  std::vector<Eigen::Triplet<Rational>> t = {{0, 0, Rational(2)}, {0, 1, Rational(1)}, {1, 0, Rational(1)}, {1, 1, Rational(3)}};
  lp.a.setFromTriplets(t.begin(), t.end());
  lp.b.resize(2);
  lp.b << Rational(4), Rational(6);
  lp.c = VectorX<Rational>::Ones(2);
  const auto r = simplex_solve(lp);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == frac(14, 5));
  CHECK(r.x[0] == frac(6, 5));
  CHECK(r.x[1] == frac(8, 5));
  CHECK(r.y[0] == frac(2, 5));
  CHECK(r.y[1] == frac(1, 5));
}

TEST_CASE("warm packing LP matches cold solves") {
  const auto h = build(2, 1, 7);
  const auto lp = matching_lp(h);
  WarmPackingLp warm(lp);
  for (int round = 0; round < 5; ++round) {
    VectorX<double> c = VectorX<double>::Ones(lp.cols());
    for (int j = 0; j < lp.cols(); ++j)
      if ((j * 7 + round * 3) % 5 == 0) c[j] = -1;
    auto cold_lp = lp;
    cold_lp.c = c;
    const auto cold = simplex_solve(cold_lp);
    const auto hot = warm.solve(c);
    REQUIRE(hot.status == LpStatus::Optimal);
    CHECK(hot.value == doctest::Approx(cold.value).epsilon(1e-9));
  }
}

TEST_CASE("MPS export round trip") {
  const auto h = build(2, 1, 6);
  std::stringstream mps;
  write_matching_mps(mps, h);
  const auto text = mps.str();
  CHECK(text.find("OBJSENSE") != std::string::npos);
  const auto lp = read_mps(mps);
  const auto direct = matching_lp(h);
  CHECK(lp.rows() == direct.rows());
  CHECK(lp.cols() == direct.cols());
  CHECK(Eigen::MatrixXd(lp.a) == Eigen::MatrixXd(direct.a));
  CHECK(lp.sense == Sense::Maximize);
  const auto r = simplex_solve(lp);
  CHECK(r.value == doctest::Approx(10.25).epsilon(1e-9));

  std::stringstream ilp;
  write_matching_mps(ilp, h, true);
  CHECK(ilp.str().find("MARKER") != std::string::npos);
  CHECK(ilp.str().find(" BV ") != std::string::npos);
  const auto relaxed = read_mps(ilp);
  CHECK(simplex_solve(relaxed).value == doctest::Approx(10.25).epsilon(1e-9));
}

TEST_CASE("JSON exports") {
  const auto h = build(2, 1, 4);
  std::stringstream inc;
  write_incidence_json(inc, h);
  const auto j = nlohmann::json::parse(inc.str());
  REQUIRE(j["edges"].size() == 16);
  CHECK(j["vertices"].size() == 8);
  for (std::size_t e = 0; e < 16; ++e)
    CHECK(j["incidence"][e].size() == static_cast<std::size_t>(oracle::runs(j["edges"][e].get<std::string>())));

  std::stringstream sol;
  write_solution_json(sol, solve_fractional_matching(h));
  const auto s = nlohmann::json::parse(sol.str());
  CHECK(s["status"] == "optimal");
  CHECK(s["value"].get<double>() == doctest::Approx(4.0));
}

TEST_CASE("symmetry orbits") {
  const auto h = build(3, 1, 4);
  const auto orbits = symmetry_orbits(h);
  CHECK(orbits.generators_used == 3);
  // Orbit sizes add up, and every member of an orbit has the same degree.
  std::size_t members = 0;
  for (const auto& o : orbits.edge_members) {
    members += o.size();
    for (int e : o) CHECK(h.edge_vertices[static_cast<std::size_t>(e)].size() == h.edge_vertices[static_cast<std::size_t>(o.front())].size());
  }
  CHECK(members == static_cast<std::size_t>(h.edge_count()));
}

#include "delbound/exact_search.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "delbound/errors.hpp"
#include "delbound/lp.hpp"

namespace delbound {

int Bitset::count() const {
  int total = 0;
  for (auto w : words_) total += __builtin_popcountll(w);
  return total;
}

bool Bitset::none() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

int Bitset::next(int from) const {
  if (from >= size_) return -1;
  std::size_t w = static_cast<std::size_t>(from >> 6);
  std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (bits) return static_cast<int>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits)));
    if (++w == words_.size()) return -1;
    bits = words_[w];
  }
}

void Bitset::subtract(const Bitset& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
}

void Bitset::intersect(const Bitset& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
}

bool Bitset::intersects(const Bitset& other) const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & other.words_[w]) return true;
  return false;
}

int LineGraph::max_degree() const {
  int best = 0;
  for (int v = 0; v < vertex_count(); ++v) best = std::max(best, degree(v));
  return best;
}

LineGraph line_graph(const DeletionHypergraph& h, int cap) {
  if (h.edge_count() > cap)
    throw ResourceError("line_graph: " + std::to_string(h.edge_count()) + " vertices exceed cap " + std::to_string(cap));
  LineGraph g;
  g.s = h.s;
  g.strings = h.edges;
  g.adjacency.assign(static_cast<std::size_t>(h.edge_count()), Bitset(h.edge_count()));
  for (const auto& group : h.vertex_edges)
    for (int u : group)
      for (int v : group)
        if (u != v) g.adjacency[static_cast<std::size_t>(u)].set(v);
  g.cliques = h.vertex_edges;
  return g;
}

LineGraph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  LineGraph g;
  g.adjacency.assign(static_cast<std::size_t>(n), Bitset(n));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw std::domain_error("graph_from_edges: bad edge");
    g.adjacency[static_cast<std::size_t>(u)].set(v);
    g.adjacency[static_cast<std::size_t>(v)].set(u);
  }
  for (int u = 0; u < n; ++u)
    g.adjacency[static_cast<std::size_t>(u)].for_each([&](int v) {
      if (u < v) g.cliques.push_back({u, v});
    });
  return g;
}

namespace {

void check_independent(const LineGraph& g, const std::vector<int>& members) {
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (g.adjacent(members[i], members[j])) throw ConsistencyError("independent set contains an adjacent pair");
  if (g.strings.empty()) return;
  std::size_t total = 0;
  std::vector<QaryString> all;
  for (int v : members) {
    const auto ball = deletion_set(g.strings[static_cast<std::size_t>(v)], g.s);
    total += ball.size();
    all.insert(all.end(), ball.begin(), ball.end());
  }
  if (StringSet(std::move(all)).size() != total) throw ConsistencyError("codebook deletion sets intersect");
}

void finish(const LineGraph& g, MisResult& out) {
  std::sort(out.members.begin(), out.members.end());
  out.size = static_cast<int>(out.members.size());
  check_independent(g, out.members);
  if (!g.strings.empty()) {
    std::vector<QaryString> strings;
    for (int v : out.members) strings.push_back(g.strings[static_cast<std::size_t>(v)]);
    out.witness = StringSet(std::move(strings));
  }
}

struct NodeBound {
  /// Rigorous upper bound total / cover on the candidates' independence number.
  __int128 total = 0;
  __int128 cover = 0;
  std::vector<int> columns;
  std::vector<double> z;
  std::vector<int> free_vertices;
};

class Search {
 public:
  Search(const LineGraph& g, const MisOptions& options) : g_(g), options_(options) {
    std::vector<Eigen::Triplet<double>> t;
    vertex_rows_.resize(static_cast<std::size_t>(g.vertex_count()));
    int rows = 0;
    for (const auto& clique : g.cliques) {
      if (clique.size() < 2) continue;
      for (int v : clique) {
        t.emplace_back(rows, v, 1.0);
        vertex_rows_[static_cast<std::size_t>(v)].push_back(rows);
      }
      ++rows;
    }
    LpProblem<double> lp;
    lp.a.resize(rows, g.vertex_count());
    lp.a.setFromTriplets(t.begin(), t.end());
    lp.b = VectorX<double>::Ones(rows);
    lp.c = VectorX<double>::Zero(g.vertex_count());
    lp_ = std::make_unique<WarmPackingLp>(lp);
  }

  MisResult run() {
    MisResult out;
    best_ = greedy_lower(g_).members;
    if (!options_.seed.empty()) {
      check_independent(g_, options_.seed);
      if (options_.seed.size() > best_.size()) best_ = options_.seed;
    }
    Bitset all(g_.vertex_count());
    for (int v = 0; v < g_.vertex_count(); ++v) all.set(v);

    const int cover_bound = clique_cover_bound(all);
    root_upper_ = cover_bound;
    if (g_.vertex_count() > 0) {
      const auto root = lp_bound(all);
      if (root.cover > 0) root_upper_ = std::min<long>(cover_bound, static_cast<long>(root.total / root.cover) +
                                                                   static_cast<long>(root.free_vertices.size()));
    }
    std::vector<int> chosen;
    if (static_cast<int>(best_.size()) < root_upper_) search(all, chosen);

    out.members = best_;
    out.nodes = nodes_;
    out.proven_optimal = !aborted_;
    finish(g_, out);
    out.upper_bound = out.proven_optimal ? out.size : static_cast<int>(root_upper_);
    return out;
  }

 private:
  /// Number of cliques in a greedy clique cover of the candidates.
  [[nodiscard]] int clique_cover_bound(const Bitset& p) const {
    Bitset uncovered = p;
    int cliques = 0;
    for (int v = uncovered.next(0); v >= 0; v = uncovered.next(v + 1)) {
      ++cliques;
      uncovered.reset(v);
      Bitset pool = uncovered;
      pool.intersect(g_.adjacency[static_cast<std::size_t>(v)]);
      for (int u = pool.next(0); u >= 0; u = pool.next(u + 1)) {
        uncovered.reset(u);
        pool.intersect(g_.adjacency[static_cast<std::size_t>(u)]);
      }
    }
    return cliques;
  }

  /// Fractional clique-cover LP over the candidates. Candidates with no
  /// neighbour among the candidates are set aside as free. One LP over all
  /// vertices is re-solved with cost -1 on non-candidates, so every node
  /// starts from the previous node's basis.
  NodeBound lp_bound(const Bitset& p) {
    NodeBound nb;
    VectorX<double> cost = VectorX<double>::Constant(g_.vertex_count(), -1.0);
    p.for_each([&](int v) {
      if (g_.adjacency[static_cast<std::size_t>(v)].intersects(p)) {
        nb.columns.push_back(v);
        cost(v) = 1.0;
      } else {
        nb.free_vertices.push_back(v);
      }
    });
    if (nb.columns.empty()) {
      nb.cover = 1;
      return nb;
    }
    const auto res = lp_->solve(cost);
    if (res.status != LpStatus::Optimal) throw ConsistencyError("clique LP not solved to optimality");

    // Certify from the dual: y rounded up to a grid, divided by its least
    // cover over the candidates.
    constexpr double kGrid = 1e9;
    std::vector<__int128> y(static_cast<std::size_t>(res.y.size()));
    for (Eigen::Index r = 0; r < res.y.size(); ++r) {
      y[static_cast<std::size_t>(r)] = static_cast<__int128>(std::ceil(std::max(res.y(r), 0.0) * kGrid));
      nb.total += y[static_cast<std::size_t>(r)];
    }
    nb.cover = -1;
    for (int v : nb.columns) {
      __int128 cover = 0;
      for (int r : vertex_rows_[static_cast<std::size_t>(v)]) cover += y[static_cast<std::size_t>(r)];
      if (nb.cover < 0 || cover < nb.cover) nb.cover = cover;
    }
    for (int v : nb.columns) nb.z.push_back(res.x(v));
    return nb;
  }

  /// Greedy rounding of the LP point: largest values first.
  void round_up(const NodeBound& nb, const std::vector<int>& chosen) {
    std::vector<int> order(nb.columns.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return nb.z[static_cast<std::size_t>(a)] > nb.z[static_cast<std::size_t>(b)];
    });
    std::vector<int> pick = chosen;
    pick.insert(pick.end(), nb.free_vertices.begin(), nb.free_vertices.end());
    Bitset blocked(g_.vertex_count());
    for (int v : pick) {
      blocked.set(v);
      for_each_neighbour(v, [&](int u) { blocked.set(u); });
    }
    for (int i : order) {
      const int v = nb.columns[static_cast<std::size_t>(i)];
      if (blocked.test(v)) continue;
      pick.push_back(v);
      blocked.set(v);
      for_each_neighbour(v, [&](int u) { blocked.set(u); });
    }
    if (pick.size() > best_.size()) best_ = pick;
  }

  template <typename F>
  void for_each_neighbour(int v, F&& f) const {
    g_.adjacency[static_cast<std::size_t>(v)].for_each(f);
  }

  void search(Bitset p, std::vector<int>& chosen) {
    if (aborted_) return;
    if (++nodes_ > options_.budget_nodes) {
      aborted_ = true;
      return;
    }
    const auto c = static_cast<long>(chosen.size());
    const auto best = static_cast<long>(best_.size());
    if (p.none()) {
      if (c > best) best_ = chosen;
      return;
    }
    if (c + clique_cover_bound(p) <= best) return;

    const NodeBound nb = lp_bound(p);
    const long base = c + static_cast<long>(nb.free_vertices.size());
    // prune when floor(base + total / cover) <= best
    if (nb.columns.empty() || (nb.cover > 0 && nb.total < static_cast<__int128>(best + 1 - base) * nb.cover)) {
      if (nb.columns.empty() && base > best) {
        best_ = chosen;
        best_.insert(best_.end(), nb.free_vertices.begin(), nb.free_vertices.end());
      }
      return;
    }
    round_up(nb, chosen);
    if (static_cast<long>(best_.size()) > best && nb.cover > 0 &&
        nb.total < static_cast<__int128>(static_cast<long>(best_.size()) + 1 - base) * nb.cover)
      return;

    // Branch on the most fractional column; an integral point is an
    // independent set and optimal for this node.
    int branch = -1;
    double closest = 1.0;
    for (std::size_t i = 0; i < nb.z.size(); ++i) {
      const double gap = std::abs(nb.z[i] - 0.5);
      if (gap < 0.5 - 1e-6 && gap < closest) closest = gap, branch = static_cast<int>(i);
    }
    const std::size_t mark = chosen.size();
    chosen.insert(chosen.end(), nb.free_vertices.begin(), nb.free_vertices.end());
    for (int v : nb.free_vertices) p.reset(v);
    if (branch < 0) {
      for (std::size_t i = 0; i < nb.z.size(); ++i)
        if (nb.z[i] > 0.5) chosen.push_back(nb.columns[i]);
      if (chosen.size() > best_.size()) {
        check_independent(g_, chosen);
        best_ = chosen;
      }
      chosen.resize(mark);
      return;
    }
    const int v = nb.columns[static_cast<std::size_t>(branch)];
    Bitset with = p;
    with.reset(v);
    with.subtract(g_.adjacency[static_cast<std::size_t>(v)]);
    chosen.push_back(v);
    search(with, chosen);
    chosen.pop_back();
    p.reset(v);
    search(p, chosen);
    chosen.resize(mark);
  }

  const LineGraph& g_;
  const MisOptions& options_;
  std::vector<std::vector<int>> vertex_rows_;
  std::unique_ptr<WarmPackingLp> lp_;
  std::vector<int> best_;
  long nodes_ = 0;
  long root_upper_ = 0;
  bool aborted_ = false;
};

}  // namespace

MisResult max_independent_set(const LineGraph& g, const MisOptions& options) {
  return Search(g, options).run();
}

MisResult greedy_lower(const LineGraph& g) {
  const int n = g.vertex_count();
  Bitset alive(n);
  std::vector<int> degree(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    alive.set(v);
    degree[static_cast<std::size_t>(v)] = g.degree(v);
  }
  MisResult out;
  while (!alive.none()) {
    int pick = -1;
    alive.for_each([&](int v) {
      if (pick < 0 || degree[static_cast<std::size_t>(v)] < degree[static_cast<std::size_t>(pick)]) pick = v;
    });
    out.members.push_back(pick);
    std::vector<int> removed{pick};
    g.adjacency[static_cast<std::size_t>(pick)].for_each([&](int u) {
      if (alive.test(u)) removed.push_back(u);
    });
    for (int u : removed) alive.reset(u);
    for (int u : removed)
      g.adjacency[static_cast<std::size_t>(u)].for_each([&](int w) {
        if (alive.test(w)) --degree[static_cast<std::size_t>(w)];
      });
  }
  finish(g, out);
  out.upper_bound = n;
  return out;
}

}  // namespace delbound

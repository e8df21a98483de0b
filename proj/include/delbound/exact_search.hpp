#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "delbound/hypergraph.hpp"
#include "delbound/qary_string.hpp"
#include "delbound/rational.hpp"

namespace delbound {

/// Fixed-size bitset over graph vertices.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int size) : size_(size), words_(static_cast<std::size_t>((size + 63) / 64), 0) {}

  [[nodiscard]] int size() const { return size_; }
  [[nodiscard]] bool test(int i) const { return (words_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1U; }
  void set(int i) { words_[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[static_cast<std::size_t>(i >> 6)] &= ~(std::uint64_t{1} << (i & 63)); }
  [[nodiscard]] int count() const;
  [[nodiscard]] bool none() const;
  /// Index of the first set bit at or after `from`, or -1.
  [[nodiscard]] int next(int from) const;
  /// this &= ~other
  void subtract(const Bitset& other);
  void intersect(const Bitset& other);
  [[nodiscard]] bool intersects(const Bitset& other) const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      for (std::uint64_t bits = words_[w]; bits; bits &= bits - 1)
        f(static_cast<int>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits))));
  }

 private:
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Graph whose independent sets are codebooks: one vertex per source string,
/// adjacent when the deletion sets meet. `cliques` lists vertex groups that
/// are pairwise adjacent (the edges covering one deletion-set string); they
/// give the LP bound used by the search. For a plain graph they are its edges.
struct LineGraph {
  int s = 1;
  StringSet strings;  // empty for graphs not built from a hypergraph
  std::vector<Bitset> adjacency;
  std::vector<std::vector<int>> cliques;

  [[nodiscard]] int vertex_count() const { return static_cast<int>(adjacency.size()); }
  [[nodiscard]] bool adjacent(int u, int v) const { return adjacency[static_cast<std::size_t>(u)].test(v); }
  [[nodiscard]] int degree(int v) const { return adjacency[static_cast<std::size_t>(v)].count(); }
  [[nodiscard]] int max_degree() const;
};

/// Default cap on line-graph vertices (hyperedges).
inline constexpr int kDefaultLineGraphCap = 1 << 14;

/// L(H): throws ResourceError when H has more than `cap` edges.
LineGraph line_graph(const DeletionHypergraph& h, int cap = kDefaultLineGraphCap);

/// A plain graph on `n` vertices with the given edges.
LineGraph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges);

struct MisOptions {
  /// Search nodes before giving up.
  long budget_nodes = 10'000'000;
  /// Optional known independent set used as the starting incumbent.
  std::vector<int> seed;
};

struct MisResult {
  int size = 0;
  std::vector<int> members;  // sorted vertex indices
  StringSet witness;         // members as strings, when the graph has them
  bool proven_optimal = false;
  /// Upper bound on the independence number: `size` when proven optimal,
  /// otherwise the floor of the root LP bound.
  int upper_bound = 0;
  long nodes = 0;
};

/// Maximum independent set by branch and bound. Each node is bounded by the
/// greedy clique-cover bound and, when that does not prune, by the fractional
/// clique-cover LP over the remaining candidates (certified from its dual
/// solution); branching follows the most fractional LP variable, taking it
/// first. The witness is re-verified before returning (pairwise
/// non-adjacency, and deletion-set disjointness when strings are attached).
MisResult max_independent_set(const LineGraph& g, const MisOptions& options = {});

/// Repeatedly takes a vertex of minimum remaining degree (smallest index on
/// ties) and deletes its neighbourhood; size >= |V| / (max degree + 1).
MisResult greedy_lower(const LineGraph& g);

}  // namespace delbound

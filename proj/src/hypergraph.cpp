#include "delbound/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <type_traits>

#include "delbound/errors.hpp"

namespace delbound {

std::size_t DeletionHypergraph::nonzeros() const {
  std::size_t total = 0;
  for (const auto& list : edge_vertices) total += list.size();
  return total;
}

namespace {

void index_vertices(DeletionHypergraph& h) {
  h.vertex_edges.assign(h.vertices.size(), {});
  for (int e = 0; e < h.edge_count(); ++e)
    for (int v : h.edge_vertices[static_cast<std::size_t>(e)]) h.vertex_edges[static_cast<std::size_t>(v)].push_back(e);
  for (const auto& list : h.vertex_edges)
    if (list.empty()) throw ConsistencyError("hypergraph: exposed vertex");
}

/// Ranks of the strings obtained by deleting the first symbol of each run.
void single_deletion_ranks(std::span<const Symbol> y, int q, std::vector<int>& out) {
  out.clear();
  const std::size_t n = y.size();
  // prefix[i] = rank of y[0..i), suffix value of y[i+1..n) computed on the fly
  std::vector<std::uint64_t> prefix(n + 1, 0), suffix(n + 1, 0), scale(n + 1, 1);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] * static_cast<std::uint64_t>(q) + y[i];
  for (std::size_t i = n; i-- > 0;) {
    suffix[i] = suffix[i + 1] + y[i] * scale[n - i - 1];
    scale[n - i] = scale[n - i - 1] * static_cast<std::uint64_t>(q);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && y[i] == y[i - 1]) continue;
    const std::size_t tail = n - i - 1;
    out.push_back(static_cast<int>(prefix[i] * scale[tail] + suffix[i + 1]));
  }
  std::sort(out.begin(), out.end());
}

}  // namespace

DeletionHypergraph build(int q, int s, int n, std::uint64_t cap) {
  if (q < 2 || s < 1 || s >= n) throw std::domain_error("build: need q >= 2 and 1 <= s < n");
  const double size = std::pow(static_cast<double>(q), n);
  if (size > static_cast<double>(cap))
    throw ResourceError("build: q^n = " + std::to_string(q) + "^" + std::to_string(n) + " exceeds cap " +
                        std::to_string(cap));

  DeletionHypergraph h;
  h.q = q;
  h.s = s;
  h.n = n;
  h.vertices = all_strings(q, n - s);
  h.edges = all_strings(q, n);
  h.edge_vertices.resize(h.edges.size());
  std::vector<int> ranks;
  for (std::size_t e = 0; e < h.edges.size(); ++e) {
    const QaryString& y = h.edges[e];
    if (s == 1) {
      single_deletion_ranks(y.symbols(), q, ranks);
    } else {
      ranks.clear();
      for (const auto& x : deletion_set(y, s)) ranks.push_back(static_cast<int>(x.rank()));
    }
    h.edge_vertices[e] = ranks;
  }
  index_vertices(h);
  return h;
}

DeletionHypergraph build_constrained(const StringSet& sources, int s) {
  if (sources.empty()) throw std::domain_error("build_constrained: empty source set");
  const std::size_t n = sources[0].size();
  const int q = sources[0].q();
  for (const auto& y : sources)
    if (y.size() != n || y.q() != q) throw std::domain_error("build_constrained: mixed lengths or alphabets");
  if (s < 1 || static_cast<std::size_t>(s) >= n) throw std::domain_error("build_constrained: need 1 <= s < n");

  DeletionHypergraph h;
  h.q = q;
  h.s = s;
  h.n = static_cast<int>(n);
  h.constrained = true;
  h.edges = sources;
  std::vector<StringSet> balls;
  balls.reserve(sources.size());
  std::vector<QaryString> all;
  for (const auto& y : sources) {
    balls.push_back(deletion_set(y, s));
    all.insert(all.end(), balls.back().begin(), balls.back().end());
  }
  h.vertices = StringSet(std::move(all));
  h.edge_vertices.resize(sources.size());
  for (std::size_t e = 0; e < balls.size(); ++e) {
    auto& list = h.edge_vertices[e];
    for (const auto& x : balls[e]) list.push_back(static_cast<int>(h.vertices.index_of(x)));
  }
  index_vertices(h);
  return h;
}

VectorX<Rational> paper_transversal(const DeletionHypergraph& h) {
  VectorX<Rational> w(h.vertex_count());
  for (int v = 0; v < h.vertex_count(); ++v) {
    const QaryString& x = h.vertices[static_cast<std::size_t>(v)];
    if (x.size() < static_cast<std::size_t>(h.s)) throw std::domain_error("paper_transversal: vertex shorter than s");
    const std::uint64_t size = h.s == 1 ? static_cast<std::uint64_t>(x.runs()) : deletion_set_size(x, h.s);
    w(v) = Rational(BigInt(1), BigInt(static_cast<unsigned long>(std::max<std::uint64_t>(size, 1))));
  }
  if (const auto check = verify_transversal(h, w); !check.ok)
    throw ConsistencyError("paper_transversal: edge " + h.edges[static_cast<std::size_t>(check.violated.front())].str() +
                           " is not covered");
  return w;
}

namespace {

template <typename Scalar>
bool below(const Scalar& a, const Scalar& b, double tol) {
  if constexpr (std::is_floating_point_v<Scalar>)
    return a < b - tol;
  else
    return a < b;
}

}  // namespace

template <typename Scalar>
VerifyResult verify_transversal(const DeletionHypergraph& h, const VectorX<Scalar>& w, double tol) {
  if (w.size() != h.vertex_count()) throw std::domain_error("verify_transversal: weight vector does not match vertices");
  VerifyResult out;
  for (int v = 0; v < h.vertex_count(); ++v)
    if (below(w(v), Scalar(0), tol)) out.negative.push_back(v);
  for (int e = 0; e < h.edge_count(); ++e) {
    Scalar sum(0);
    for (int v : h.edge_vertices[static_cast<std::size_t>(e)]) sum += w(v);
    if (below(sum, Scalar(1), tol)) out.violated.push_back(e);
  }
  out.ok = out.violated.empty() && out.negative.empty();
  return out;
}

template <typename Scalar>
VerifyResult verify_matching(const DeletionHypergraph& h, const VectorX<Scalar>& z, double tol) {
  if (z.size() != h.edge_count()) throw std::domain_error("verify_matching: weight vector does not match edges");
  VerifyResult out;
  for (int e = 0; e < h.edge_count(); ++e)
    if (below(z(e), Scalar(0), tol)) out.negative.push_back(e);
  for (int v = 0; v < h.vertex_count(); ++v) {
    Scalar sum(0);
    for (int e : h.vertex_edges[static_cast<std::size_t>(v)]) sum += z(e);
    if (below(Scalar(1), sum, tol)) out.violated.push_back(v);
  }
  out.ok = out.violated.empty() && out.negative.empty();
  return out;
}

template VerifyResult verify_transversal<double>(const DeletionHypergraph&, const VectorX<double>&, double);
template VerifyResult verify_transversal<Rational>(const DeletionHypergraph&, const VectorX<Rational>&, double);
template VerifyResult verify_matching<double>(const DeletionHypergraph&, const VectorX<double>&, double);
template VerifyResult verify_matching<Rational>(const DeletionHypergraph&, const VectorX<Rational>&, double);

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[static_cast<std::size_t>(a)] != a)
      a = parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
    return a;
  }
  void unite(int a, int b) {
    a = find(a), b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

/// Orbit ids numbered by first appearance in index order.
void collect(DisjointSets& sets, std::vector<int>& orbit, std::vector<std::vector<int>>& members) {
  const auto n = sets.parent.size();
  orbit.assign(n, -1);
  std::vector<int> id_of_root(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const int root = sets.find(static_cast<int>(i));
    auto& id = id_of_root[static_cast<std::size_t>(root)];
    if (id < 0) {
      id = static_cast<int>(members.size());
      members.emplace_back();
    }
    orbit[i] = id;
    members[static_cast<std::size_t>(id)].push_back(static_cast<int>(i));
  }
}

}  // namespace

SymmetryOrbits symmetry_orbits(const DeletionHypergraph& h) {
  using Map = std::function<QaryString(const QaryString&)>;
  auto relabel = [q = h.q](std::vector<Symbol> perm) -> Map {
    return [perm, q](const QaryString& x) {
      std::vector<Symbol> out(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) out[i] = perm[x[i]];
      return QaryString(std::move(out), q);
    };
  };
  std::vector<Map> generators{[](const QaryString& x) { return x.reversed(); }};
  std::vector<Symbol> swap(static_cast<std::size_t>(h.q)), cycle(static_cast<std::size_t>(h.q));
  for (int a = 0; a < h.q; ++a) {
    swap[static_cast<std::size_t>(a)] = static_cast<Symbol>(a);
    cycle[static_cast<std::size_t>(a)] = static_cast<Symbol>((a + 1) % h.q);
  }
  std::swap(swap[0], swap[1]);
  generators.push_back(relabel(swap));
  if (h.q > 2) generators.push_back(relabel(cycle));

  DisjointSets vsets(h.vertices.size()), esets(h.edges.size());
  SymmetryOrbits out;
  for (const auto& g : generators) {
    std::vector<int> image(h.edges.size());
    bool preserved = true;
    for (std::size_t e = 0; e < h.edges.size() && preserved; ++e) {
      const auto j = h.edges.index_of(g(h.edges[e]));
      preserved = j >= 0;
      image[e] = static_cast<int>(j);
    }
    if (!preserved) continue;
    ++out.generators_used;
    for (std::size_t e = 0; e < image.size(); ++e) esets.unite(static_cast<int>(e), image[e]);
    for (std::size_t v = 0; v < h.vertices.size(); ++v) {
      const auto j = h.vertices.index_of(g(h.vertices[v]));
      if (j < 0) throw ConsistencyError("symmetry_orbits: vertex set not closed under an edge symmetry");
      vsets.unite(static_cast<int>(v), static_cast<int>(j));
    }
  }
  collect(vsets, out.vertex_orbit, out.vertex_members);
  collect(esets, out.edge_orbit, out.edge_members);
  return out;
}

void write_matching_mps(std::ostream& os, const DeletionHypergraph& h, bool integer) {
  os << "NAME HD_q" << h.q << "_s" << h.s << "_n" << h.n << (h.constrained ? "_S" : "") << '\n';
  os << "OBJSENSE\n    MAX\n";
  os << "ROWS\n N  OBJ\n";
  for (int v = 0; v < h.vertex_count(); ++v) os << " L  V" << v << '\n';
  os << "COLUMNS\n";
  if (integer) os << "    MARKER  'MARKER'  'INTORG'\n";
  for (int e = 0; e < h.edge_count(); ++e) {
    os << "    E" << e << "  OBJ  1\n";
    for (int v : h.edge_vertices[static_cast<std::size_t>(e)]) os << "    E" << e << "  V" << v << "  1\n";
  }
  if (integer) os << "    MARKER  'MARKER'  'INTEND'\n";
  os << "RHS\n";
  for (int v = 0; v < h.vertex_count(); ++v) os << "    RHS  V" << v << "  1\n";
  if (integer) {
    os << "BOUNDS\n";
    for (int e = 0; e < h.edge_count(); ++e) os << " BV BND  E" << e << '\n';
  }
  os << "ENDATA\n";
}

void write_incidence_json(std::ostream& os, const DeletionHypergraph& h) {
  auto strings = [&os](const StringSet& set) {
    os << '[';
    for (std::size_t i = 0; i < set.size(); ++i) os << (i ? "," : "") << '"' << set[i].str() << '"';
    os << ']';
  };
  os << "{\"q\":" << h.q << ",\"s\":" << h.s << ",\"n\":" << h.n << ",\"vertices\":";
  strings(h.vertices);
  os << ",\"edges\":";
  strings(h.edges);
  os << ",\"incidence\":[";
  for (std::size_t e = 0; e < h.edge_vertices.size(); ++e) {
    os << (e ? "," : "") << '[';
    const auto& list = h.edge_vertices[e];
    for (std::size_t i = 0; i < list.size(); ++i) os << (i ? "," : "") << list[i];
    os << ']';
  }
  os << "]}\n";
}

}  // namespace delbound

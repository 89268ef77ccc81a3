#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hsplab/group.hpp"
#include "hsplab/numeric.hpp"
#include "hsplab/permutation.hpp"
#include "hsplab/rep_ops.hpp"
#include "hsplab/sampling.hpp"

namespace hsplab {

inline constexpr int kAutVertexCap = 12;
inline constexpr int kGiVertexCap = 8;
inline constexpr int kGiCombinedCap = 16;
inline constexpr int kHspGraphCap = 8;

/// Simple undirected graph on vertices 1..n; edges stored as sorted (min, max) pairs.
class Graph {
 public:
  explicit Graph(int vertex_count = 0, const std::vector<std::pair<int, int>>& edges = {}) : n_(vertex_count) {
    if (n_ < 0) throw std::invalid_argument("Graph: negative vertex count");
    adj_.assign(static_cast<std::size_t>(n_), std::vector<char>(static_cast<std::size_t>(n_), 0));
    for (auto [u, v] : edges) add_edge(u, v);
  }

  void add_edge(int u, int v) {
    if (u < 1 || v < 1 || u > n_ || v > n_) throw std::invalid_argument("Graph: vertex out of range");
    if (u == v) throw std::invalid_argument("Graph: loops are not allowed");
    if (u > v) std::swap(u, v);
    if (adjacent(u, v)) throw std::invalid_argument("Graph: duplicate edge");
    adj_[static_cast<std::size_t>(u - 1)][static_cast<std::size_t>(v - 1)] = 1;
    adj_[static_cast<std::size_t>(v - 1)][static_cast<std::size_t>(u - 1)] = 1;
    edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), std::pair{u, v}), {u, v});
  }

  int vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }

  bool adjacent(int u, int v) const {
    return adj_[static_cast<std::size_t>(u - 1)][static_cast<std::size_t>(v - 1)] != 0;
  }
  int degree(int v) const {
    int d = 0;
    for (char c : adj_[static_cast<std::size_t>(v - 1)]) d += c;
    return d;
  }

  /// g(Γ): edge {u, v} becomes {g(u), g(v)}.
  Graph permuted(const Permutation& g) const {
    if (static_cast<int>(g.degree()) != n_) throw std::invalid_argument("Graph::permuted: degree mismatch");
    Graph out(n_);
    for (auto [u, v] : edges_) out.add_edge(g(u), g(v));
    return out;
  }

  /// Sorted edge list "u-v,u-v,..." prefixed by the vertex count.
  std::string canonical_edge_string() const {
    std::string s = std::to_string(n_) + ":";
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(edges_[i].first) + "-" + std::to_string(edges_[i].second);
    }
    return s;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_;
  std::vector<std::vector<char>> adj_;
  std::vector<std::pair<int, int>> edges_;
};

inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: n must be at least 3");
  Graph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
  g.add_edge(n, 1);
  return g;
}

inline Graph path_graph(int n) {
  Graph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
  return g;
}

/// Γ1 ⊔ Γ2 with Γ2's vertices shifted by |V(Γ1)|.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.vertex_count() + b.vertex_count(), a.edges());
  for (auto [u, v] : b.edges()) g.add_edge(u + a.vertex_count(), v + a.vertex_count());
  return g;
}

/// C_m ⊔ C_{m+1} ⊔ ... ⊔ C_{m+k-1}.
inline Graph disjoint_cycle_family(int m, int n_cycles) {
  if (m < 3) throw std::invalid_argument("disjoint_cycle_family: m must be at least 3");
  if (n_cycles < 1) throw std::invalid_argument("disjoint_cycle_family: need at least one cycle");
  Graph g(0);
  for (int i = 0; i < n_cycles; ++i) g = disjoint_union(g, cycle_graph(m + i));
  return g;
}

inline Graph cycles_union(const std::vector<int>& lengths) {
  Graph g(0);
  for (int len : lengths) g = disjoint_union(g, cycle_graph(len));
  return g;
}

// ---------------------------------------------------------------------------
// Isomorphism search
// ---------------------------------------------------------------------------

namespace detail {

// Backtracking over vertex images of a into b. Candidates must match degree
// and adjacency with every vertex already placed. `visit` returns false to stop.
inline void enumerate_isomorphisms(const Graph& a, const Graph& b, const std::function<bool(const std::vector<int>&)>& visit) {
  const int n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return;
  std::vector<int> da(static_cast<std::size_t>(n)), db(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) {
    da[static_cast<std::size_t>(v - 1)] = a.degree(v);
    db[static_cast<std::size_t>(v - 1)] = b.degree(v);
  }
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return;
  }
  std::vector<int> image(static_cast<std::size_t>(n), 0);
  std::vector<char> used(static_cast<std::size_t>(n + 1), 0);
  bool stop = false;
  auto rec = [&](auto&& self, int v) -> void {
    if (stop) return;
    if (v > n) {
      if (!visit(image)) stop = true;
      return;
    }
    for (int w = 1; w <= n && !stop; ++w) {
      if (used[static_cast<std::size_t>(w)] || db[static_cast<std::size_t>(w - 1)] != da[static_cast<std::size_t>(v - 1)])
        continue;
      bool ok = true;
      for (int u = 1; u < v && ok; ++u)
        ok = a.adjacent(u, v) == b.adjacent(image[static_cast<std::size_t>(u - 1)], w);
      if (!ok) continue;
      image[static_cast<std::size_t>(v - 1)] = w;
      used[static_cast<std::size_t>(w)] = 1;
      self(self, v + 1);
      used[static_cast<std::size_t>(w)] = 0;
    }
  };
  if (n == 0) {
    visit(image);
    return;
  }
  rec(rec, 1);
}

inline bool isomorphic_uncapped(const Graph& a, const Graph& b) {
  bool found = false;
  enumerate_isomorphisms(a, b, [&](const std::vector<int>&) {
    found = true;
    return false;
  });
  return found;
}

}  // namespace detail

/// Aut(Γ) with every element listed and a generating set picked greedily.
struct AutGroup {
  Graph graph;
  std::vector<Permutation> elements;  // sorted
  std::vector<Permutation> generators;

  std::size_t order() const noexcept { return elements.size(); }

  FiniteGroupView<Permutation> view() const {
    const auto deg = static_cast<std::size_t>(graph.vertex_count());
    return FiniteGroupView<Permutation>(
        elements, [](const Permutation& x, const Permutation& y) { return x * y; },
        [](const Permutation& x) { return x.inverse(); }, Permutation::identity(deg));
  }
};

/// All edge-preserving permutations of Γ; at most 12 vertices and 40320 automorphisms.
inline AutGroup brute_force_aut(const Graph& g) {
  require_cap("brute_force_aut vertex count", g.vertex_count(), kAutVertexCap);
  AutGroup out{g, {}, {}};
  detail::enumerate_isomorphisms(g, g, [&](const std::vector<int>& image) {
    out.elements.emplace_back(image);
    require_cap("brute_force_aut group order", static_cast<long long>(out.elements.size()),
                static_cast<long long>(kExplicitGroupCap));
    return true;
  });
  std::sort(out.elements.begin(), out.elements.end());
  const auto deg = static_cast<std::size_t>(g.vertex_count());
  std::function<Permutation(const Permutation&, const Permutation&)> mul = [](const Permutation& x,
                                                                           const Permutation& y) { return x * y; };
  std::set<Permutation> reached{Permutation::identity(deg)};
  for (const auto& e : out.elements) {
    if (reached.count(e)) continue;
    out.generators.push_back(e);
    auto closure = generate_closure(out.generators, Permutation::identity(deg), mul);
    reached = std::set<Permutation>(closure.begin(), closure.end());
    if (reached.size() == out.elements.size()) break;
  }
  return out;
}

/// True iff an edge-preserving bijection exists; each graph at most 8 vertices.
inline bool brute_force_gi(const Graph& a, const Graph& b) {
  require_cap("brute_force_gi vertex count", std::max(a.vertex_count(), b.vertex_count()), kGiVertexCap);
  require_cap("brute_force_gi combined vertex count", a.vertex_count() + b.vertex_count(), kGiCombinedCap);
  return detail::isomorphic_uncapped(a, b);
}

/// Γ_[i]: Γ with a pendant path of vertex_count + 1 new vertices hanging from i.
inline Graph labeled_copy(const Graph& g, int i) {
  const int n = g.vertex_count();
  if (i < 1 || i > n) throw std::invalid_argument("labeled_copy: vertex out of range");
  Graph out(2 * n + 1, g.edges());
  out.add_edge(i, n + 1);
  for (int k = n + 1; k < 2 * n + 1; ++k) out.add_edge(k, k + 1);
  return out;
}

struct GiQuery {
  int i = 0;
  int j = 0;
  bool isomorphic = false;
};

struct TuringReduction {
  bool accepted = false;
  std::vector<GiQuery> transcript;
};

using GiDecider = std::function<bool(const Graph&, const Graph&)>;

/// GA ≤_T GI: accept iff some pair i < j has Γ_[i] ≅ Γ_[j]. Without a decider
/// the built-in search is used, which handles the 2n+1 vertex labeled copies
/// for n ≤ 8.
inline TuringReduction ga_gi_turing_reduction(const Graph& g, GiDecider decider = {}) {
  if (!decider) {
    require_cap("ga_gi_turing_reduction vertex count", g.vertex_count(), kGiVertexCap);
    decider = detail::isomorphic_uncapped;
  }
  TuringReduction r;
  const int n = g.vertex_count();
  for (int i = 1; i <= n && !r.accepted; ++i)
    for (int j = i + 1; j <= n && !r.accepted; ++j) {
      bool iso = decider(labeled_copy(g, i), labeled_copy(g, j));
      r.transcript.push_back({i, j, iso});
      r.accepted = iso;
    }
  return r;
}

/// Ambient S_n, hidden Aut(Γ), oracle π ↦ canonical edge list of π(Γ).
inline HiddenSubgroupInstance<Permutation> hsp_instance_from_graph(const Graph& g) {
  require_cap("hsp_instance_from_graph vertex count", g.vertex_count(), kHspGraphCap);
  HiddenSubgroupInstance<Permutation> inst;
  inst.ambient = share(symmetric_group(g.vertex_count()));
  inst.hidden = share(brute_force_aut(g).view());
  inst.oracle = [g](const Permutation& p) { return g.permuted(p).canonical_edge_string(); };
  return inst;
}

/// Every labeled simple graph on n vertices, edges taken in lexicographic pair order.
inline std::vector<Graph> all_labeled_graphs(int n) {
  require_cap("all_labeled_graphs n", n, 6);
  std::vector<std::pair<int, int>> pairs;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
  std::vector<Graph> out;
  const unsigned long total = 1UL << pairs.size();
  out.reserve(total);
  for (unsigned long mask = 0; mask < total; ++mask) {
    Graph g(n);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask >> k & 1UL) g.add_edge(pairs[k].first, pairs[k].second);
    out.push_back(std::move(g));
  }
  return out;
}

/// One graph per isomorphism class on n vertices, first in enumeration order.
inline std::vector<Graph> graph_isomorphism_classes(int n) {
  std::vector<Graph> reps;
  for (auto& g : all_labeled_graphs(n)) {
    bool seen = false;
    for (const auto& r : reps)
      if (detail::isomorphic_uncapped(g, r)) {
        seen = true;
        break;
      }
    if (!seen) reps.push_back(std::move(g));
  }
  return reps;
}

/// First graph on n vertices (enumeration order) whose only automorphism is the identity.
inline std::optional<Graph> first_rigid_graph(int n) {
  for (auto& g : all_labeled_graphs(n))
    if (brute_force_aut(g).order() == 1) return g;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Text format: "n m" then m lines "u v"
// ---------------------------------------------------------------------------

inline Graph read_graph(std::istream& in) {
  long long n = -1, m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) throw std::invalid_argument("graph file: expected header 'n m'");
  Graph g(static_cast<int>(n));
  for (long long k = 0; k < m; ++k) {
    int u = 0, v = 0;
    if (!(in >> u >> v)) throw std::invalid_argument("graph file: expected " + std::to_string(m) + " edge lines");
    g.add_edge(u, v);
  }
  return g;
}

inline Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

inline void write_graph(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline std::string format_graph(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

}  // namespace hsplab

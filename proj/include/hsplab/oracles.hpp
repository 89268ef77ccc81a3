#pragma once

// Slow, independent routes to quantities the main code computes another way.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <vector>

#include "hsplab/dihedral.hpp"
#include "hsplab/graph.hpp"
#include "hsplab/group.hpp"
#include "hsplab/matrix.hpp"
#include "hsplab/numeric.hpp"
#include "hsplab/partition.hpp"
#include "hsplab/permutation.hpp"

namespace hsplab::oracle {

/// Standard tableaux counted by peeling off corner cells.
inline BigInt syt_count(const std::vector<int>& parts) {
  if (parts.empty()) return 1;
  BigInt total = 0;
  for (std::size_t r = 0; r < parts.size(); ++r) {
    bool corner = r + 1 == parts.size() || parts[r + 1] < parts[r];
    if (!corner) continue;
    auto smaller = parts;
    if (--smaller[r] == 0) smaller.erase(smaller.begin() + static_cast<long>(r));
    total += syt_count(smaller);
  }
  return total;
}

/// Every subgroup, grown one element at a time from {e}. Any subgroup is
/// reached because it is the closure of a chain of its own elements.
template <class Element>
std::vector<std::vector<Element>> all_subgroups(const FiniteGroupView<Element>& g) {
  std::set<std::vector<Element>> found;
  std::vector<std::vector<Element>> frontier{{g.identity()}};
  found.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<std::vector<Element>> next;
    for (const auto& s : frontier)
      for (const auto& x : g.elements()) {
        if (std::binary_search(s.begin(), s.end(), x)) continue;
        auto gens = s;
        gens.push_back(x);
        auto c = generate_closure(gens, g.identity(), g.multiplication());
        if (found.insert(c).second) next.push_back(std::move(c));
      }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

/// Cycle type by walking orbits, written independently of Permutation::cycles.
inline std::vector<int> orbit_lengths(const Permutation& p) {
  const std::size_t n = p.degree();
  std::vector<char> seen(n + 1, 0);
  std::vector<int> lens;
  for (std::size_t i = 1; i <= n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = static_cast<int>(i); !seen[static_cast<std::size_t>(j)]; j = p(j)) {
      seen[static_cast<std::size_t>(j)] = 1;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end(), std::greater<>());
  return lens;
}

/// Kronecker product A ⊗ B.
inline CycMatrix kron(const CycMatrix& a, const CycMatrix& b) {
  CycMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

/// Isomorphism D_m × D_n → Aut(C_m ⊔ C_n) placing each factor on its own cycle.
inline Permutation product_embedding(const DihedralElement& a, const DihedralElement& b) {
  const int m = a.n, n = b.n;
  std::vector<int> im(static_cast<std::size_t>(m + n));
  auto pa = as_permutation(a);
  auto pb = as_permutation(b);
  for (int i = 1; i <= m; ++i) im[static_cast<std::size_t>(i - 1)] = pa(i);
  for (int i = 1; i <= n; ++i) im[static_cast<std::size_t>(m + i - 1)] = m + pb(i);
  return Permutation(std::move(im));
}

/// Naive isomorphism test: tries all n! bijections.
inline bool isomorphic_by_all_bijections(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  for (const auto& p : all_permutations(static_cast<std::size_t>(a.vertex_count())))
    if (a.permuted(p) == b) return true;
  return false;
}

}  // namespace hsplab::oracle

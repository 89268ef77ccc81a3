#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hsplab/numeric.hpp"
#include "hsplab/partition.hpp"

namespace hsplab {

inline constexpr int kCharacterTableCap = 12;

// ---------------------------------------------------------------------------
// Murnaghan–Nakayama
// ---------------------------------------------------------------------------

namespace detail {

// Beta set {λ_i + L - i} of a partition with L parts, in decreasing order.
inline std::vector<int> beta_set(const std::vector<int>& parts) {
  const int len = static_cast<int>(parts.size());
  std::vector<int> beta(parts.size());
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = parts[static_cast<std::size_t>(i)] + len - 1 - i;
  return beta;
}

inline std::vector<int> parts_from_beta(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int len = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) {
    int p = beta[static_cast<std::size_t>(i)] - (len - 1 - i);
    if (p > 0) parts.push_back(p);
  }
  return parts;
}

}  // namespace detail

/// One removable rim hook (border strip) of a shape.
struct RimHookRemoval {
  std::vector<int> remaining;  // partition parts after removal
  int height = 0;              // rows occupied minus one
};

/// All border strips of the given length that can be removed from `parts`
/// leaving a valid diagram.
inline std::vector<RimHookRemoval> removable_rim_hooks(const std::vector<int>& parts, int length) {
  std::vector<RimHookRemoval> out;
  std::vector<int> beta = detail::beta_set(parts);
  std::set<int> members(beta.begin(), beta.end());
  for (int b : beta) {
    int target = b - length;
    if (target < 0 || members.count(target)) continue;
    int height = 0;
    for (int c : beta)
      if (c > target && c < b) ++height;
    std::vector<int> moved = beta;
    std::replace(moved.begin(), moved.end(), b, target);
    out.push_back({detail::parts_from_beta(std::move(moved)), height});
  }
  return out;
}

/// Cache for χ_λ(μ) keyed on (remaining shape, number of cycle parts already consumed).
/// Not shared between threads; give each worker its own.
class MnMemo {
 public:
  BigInt evaluate(const std::vector<int>& shape, const std::vector<int>& content, std::size_t from) {
    if (from == content.size()) return shape.empty() ? BigInt(1) : BigInt(0);
    Key key{shape, content, from};
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    BigInt total = 0;
    for (const auto& removal : removable_rim_hooks(shape, content[from])) {
      BigInt sub = evaluate(removal.remaining, content, from + 1);
      if (removal.height % 2 == 0) total += sub;
      else total -= sub;
    }
    cache_.emplace(std::move(key), total);
    return total;
  }

  std::size_t size() const noexcept { return cache_.size(); }

 private:
  struct Key {
    std::vector<int> shape;
    std::vector<int> content;
    std::size_t from;
    friend auto operator<=>(const Key&, const Key&) = default;
  };
  std::map<Key, BigInt> cache_;
};

/// χ_λ evaluated at the class of cycle type μ, by signed border-strip removal
/// with μ's parts taken largest first.
inline BigInt mn_character(const Partition& lambda, const Partition& mu, MnMemo& memo) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("mn_character: |lambda| != |mu|");
  return memo.evaluate(lambda.parts(), mu.parts(), 0);
}

inline BigInt mn_character(const Partition& lambda, const Partition& mu) {
  MnMemo memo;
  return mn_character(lambda, mu, memo);
}

/// d_λ = n! / (l_1! ... l_k!) · ∏_{i<j} (l_i - l_j), with l_i = λ_i + k - i.
inline BigInt hook_dimension(const Partition& lambda) {
  const int k = static_cast<int>(lambda.length());
  const int n = lambda.size();
  std::vector<int> l(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) l[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + k - (i + 1);
  BigInt num = factorial(static_cast<unsigned>(n));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) num *= (l[static_cast<std::size_t>(i)] - l[static_cast<std::size_t>(j)]);
  BigInt den = 1;
  for (int v : l) den *= factorial(static_cast<unsigned>(v));
  return num / den;
}

// ---------------------------------------------------------------------------
// Character table
// ---------------------------------------------------------------------------

struct CharacterTable {
  int n = 0;
  std::vector<Partition> rows;   // irreps, decreasing: (n) first
  std::vector<Partition> cols;   // classes, increasing: (1^n) first
  std::vector<std::vector<BigInt>> entries;  // entries[row][col]
  std::vector<BigInt> class_sizes;            // aligned with cols

  const BigInt& at(const Partition& irrep, const Partition& cls) const {
    auto r = std::find(rows.begin(), rows.end(), irrep);
    auto c = std::find(cols.begin(), cols.end(), cls);
    if (r == rows.end() || c == cols.end()) throw std::out_of_range("CharacterTable: unknown label");
    return entries[static_cast<std::size_t>(r - rows.begin())][static_cast<std::size_t>(c - cols.begin())];
  }
};

inline CharacterTable character_table(int n) {
  if (n < 1) throw std::invalid_argument("character_table: n must be positive");
  require_cap("character_table n", n, kCharacterTableCap);
  CharacterTable t;
  t.n = n;
  t.rows = partitions_of(n);
  t.cols = t.rows;
  std::reverse(t.cols.begin(), t.cols.end());
  MnMemo memo;
  t.entries.resize(t.rows.size());
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    t.entries[r].reserve(t.cols.size());
    for (const auto& cls : t.cols) t.entries[r].push_back(mn_character(t.rows[r], cls, memo));
  }
  for (const auto& cls : t.cols) t.class_sizes.push_back(cls.class_size());
  return t;
}

/// (2,2,...,2): the cycle type of a fixed-point-free involution of S_{2n}.
inline Partition fixed_point_free_involution_type(int half_n) {
  return Partition(std::vector<int>(static_cast<std::size_t>(half_n), 2));
}

/// χ_λ(σ) for every λ ⊢ 2n, σ of cycle type (2^n); keys in partitions_of order.
inline std::vector<std::pair<Partition, BigInt>> char_at_fixed_point_free_involution(int half_n) {
  if (half_n < 1) throw std::invalid_argument("half-degree must be positive");
  require_cap("2n for involution characters", 2LL * half_n, kCharacterTableCap);
  const Partition sigma = fixed_point_free_involution_type(half_n);
  MnMemo memo;
  std::vector<std::pair<Partition, BigInt>> out;
  for (const auto& lambda : partitions_of(2 * half_n)) out.emplace_back(lambda, mn_character(lambda, sigma, memo));
  return out;
}

// ---------------------------------------------------------------------------
// Explicit border-strip fillings
// ---------------------------------------------------------------------------

/// A border-strip tableau of `shape` with content μ: strip i holds the cells
/// labelled i+1. Cells are (row, col), 0-based.
struct BorderStripFilling {
  Partition shape;
  std::vector<std::vector<std::pair<int, int>>> strips;
  std::vector<int> heights;

  int sign() const {
    int s = 0;
    for (int h : heights) s += h;
    return s % 2 == 0 ? 1 : -1;
  }
};

namespace detail {

// Cells of outer/inner as a skew shape, or empty if not a border strip.
inline bool skew_is_border_strip(const std::vector<int>& outer, const std::vector<int>& inner,
                                 std::vector<std::pair<int, int>>& cells) {
  cells.clear();
  for (std::size_t r = 0; r < outer.size(); ++r) {
    int lo = r < inner.size() ? inner[r] : 0;
    for (int c = lo; c < outer[r]; ++c) cells.emplace_back(static_cast<int>(r), c);
  }
  if (cells.empty()) return false;
  std::set<std::pair<int, int>> in(cells.begin(), cells.end());
  for (auto [r, c] : cells)
    if (in.count({r + 1, c}) && in.count({r, c + 1}) && in.count({r + 1, c + 1})) return false;
  // connectivity by flood fill through edge-adjacent cells
  std::set<std::pair<int, int>> seen{cells.front()};
  std::vector<std::pair<int, int>> stack{cells.front()};
  while (!stack.empty()) {
    auto [r, c] = stack.back();
    stack.pop_back();
    for (auto nb : {std::pair{r + 1, c}, std::pair{r - 1, c}, std::pair{r, c + 1}, std::pair{r, c - 1}})
      if (in.count(nb) && seen.insert(nb).second) stack.push_back(nb);
  }
  return seen.size() == cells.size();
}

inline void sub_diagrams(const std::vector<int>& outer, int target_size, std::size_t row, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
  int used = 0;
  for (int v : cur) used += v;
  if (row == outer.size()) {
    if (used == target_size) {
      std::vector<int> trimmed = cur;
      while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
      out.push_back(trimmed);
    }
    return;
  }
  int cap = outer[row];
  if (row > 0) cap = std::min(cap, cur[row - 1]);
  for (int v = 0; v <= cap && used + v <= target_size; ++v) {
    cur.push_back(v);
    sub_diagrams(outer, target_size, row + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// Every border-strip tableau of shape λ with content μ, enumerated from the
/// cell-level definition (connected, no 2×2 block, nested diagrams).
inline std::vector<BorderStripFilling> border_strip_fillings(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("border_strip_fillings: size mismatch");
  std::vector<BorderStripFilling> out;
  std::vector<std::vector<std::pair<int, int>>> strips(mu.length());
  std::vector<int> heights(mu.length());
  // Peel labels from the outside in: the last label occupies an outer strip.
  auto rec = [&](auto&& self, const std::vector<int>& shape, std::size_t label_count) -> void {
    if (label_count == 0) {
      if (shape.empty()) out.push_back({lambda, strips, heights});
      return;
    }
    const int len = mu.parts()[label_count - 1];
    int total = 0;
    for (int v : shape) total += v;
    std::vector<std::vector<int>> inners;
    std::vector<int> cur;
    detail::sub_diagrams(shape, total - len, 0, cur, inners);
    std::vector<std::pair<int, int>> cells;
    for (const auto& inner : inners) {
      if (!detail::skew_is_border_strip(shape, inner, cells)) continue;
      std::set<int> rows_used;
      for (auto [r, c] : cells) rows_used.insert(r);
      strips[label_count - 1] = cells;
      heights[label_count - 1] = static_cast<int>(rows_used.size()) - 1;
      self(self, inner, label_count - 1);
    }
  };
  rec(rec, lambda.parts(), mu.length());
  return out;
}

}  // namespace hsplab

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hsplab/numeric.hpp"
#include "hsplab/permutation.hpp"

namespace hsplab {

/// Weakly decreasing list of positive parts. Labels both the irreducible
/// representations and the conjugacy classes of S_n.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Sorts arbitrary positive parts into partition order.
  static Partition from_unsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
  }

  /// (1,1,...,1) of the given size.
  static Partition column(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }
  static Partition row(int n) { return n == 0 ? Partition() : Partition(std::vector<int>{n}); }

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  bool empty() const noexcept { return parts_.empty(); }

  Partition conjugate() const {
    std::vector<int> c;
    if (parts_.empty()) return Partition();
    for (int j = 1; j <= parts_[0]; ++j) {
      int count = 0;
      for (int p : parts_)
        if (p >= j) ++count;
      c.push_back(count);
    }
    return Partition(std::move(c));
  }

  /// Multiplicity m_j of each part size j.
  std::map<int, int> multiplicities() const {
    std::map<int, int> m;
    for (int p : parts_) ++m[p];
    return m;
  }

  /// Size of the S_n conjugacy class with this cycle type: n! / ∏ j^{m_j} m_j!.
  BigInt class_size() const {
    BigInt denom = 1;
    for (auto [j, m] : multiplicities()) {
      for (int t = 0; t < m; ++t) denom *= j;
      denom *= factorial(static_cast<unsigned>(m));
    }
    return factorial(static_cast<unsigned>(size())) / denom;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ')';
    return os.str();
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  // Lexicographic on parts: (3) > (2,1) > (1,1,1).
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

/// Cycle lengths of p in decreasing order, fixed points included as 1s.
inline Partition cycle_type(const Permutation& p) {
  std::vector<int> lens;
  for (const auto& c : p.cycles()) lens.push_back(static_cast<int>(c.size()));
  return Partition::from_unsorted(std::move(lens));
}

/// All partitions of n, reverse-lexicographic (largest first): (n), (n-1,1), ...
inline std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: n must be non-negative");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

/// Partition function via Euler's pentagonal-number recurrence.
inline std::vector<BigInt> partition_counts(int n_max) {
  std::vector<BigInt> p(static_cast<std::size_t>(n_max + 1), 0);
  p[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    BigInt acc = 0;
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2;
      int g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      int sign = (k % 2 == 1) ? 1 : -1;
      acc += sign * p[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) acc += sign * p[static_cast<std::size_t>(n - g2)];
    }
    p[static_cast<std::size_t>(n)] = acc;
  }
  return p;
}

}  // namespace hsplab

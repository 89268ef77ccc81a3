#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hsplab {

class Partition;

/// A bijection on {1..n}, stored as its image list. Composition follows the
/// function convention: (p * q)(i) = p(q(i)).
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size() + 1, 0);
    for (int v : images_) {
      if (v < 1 || v > static_cast<int>(images_.size()) || seen[v])
        throw std::invalid_argument("images do not form a bijection of {1..n}");
      seen[v] = 1;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im), Unchecked{});
  }

  /// Builds a permutation of degree n from disjoint cycles, e.g. {{1,2,3},{4,5}}.
  static Permutation from_cycles(std::size_t n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    std::vector<char> used(n + 1, 0);
    for (const auto& c : cycles) {
      for (std::size_t k = 0; k < c.size(); ++k) {
        int a = c[k];
        if (a < 1 || a > static_cast<int>(n) || used[a])
          throw std::invalid_argument("cycles are not disjoint or out of range");
        used[a] = 1;
        im[a - 1] = c[(k + 1) % c.size()];
      }
    }
    return Permutation(std::move(im), Unchecked{});
  }

  /// Parses cycle notation such as "(1 2 3)(4 5)"; "()" is the identity.
  static Permutation parse_cycles(std::size_t n, const std::string& text) {
    std::vector<std::vector<int>> cycles;
    std::vector<int> current;
    bool open = false;
    std::string token;
    auto flush = [&] {
      if (!token.empty()) {
        current.push_back(std::stoi(token));
        token.clear();
      }
    };
    for (char ch : text) {
      if (ch == '(') {
        if (open) throw std::invalid_argument("nested '(' in cycle notation");
        open = true;
      } else if (ch == ')') {
        if (!open) throw std::invalid_argument("unbalanced ')' in cycle notation");
        flush();
        if (!current.empty()) cycles.push_back(current);
        current.clear();
        open = false;
      } else if (ch == ' ' || ch == ',') {
        flush();
      } else if (ch >= '0' && ch <= '9') {
        if (!open) throw std::invalid_argument("digit outside a cycle");
        token.push_back(ch);
      } else {
        throw std::invalid_argument(std::string("unexpected character in cycle notation: ") + ch);
      }
    }
    if (open) throw std::invalid_argument("unterminated cycle");
    return from_cycles(n, cycles);
  }

  std::size_t degree() const noexcept { return images_.size(); }
  const std::vector<int>& images() const noexcept { return images_; }

  int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != static_cast<int>(i + 1)) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i] - 1] = static_cast<int>(i + 1);
    return Permutation(std::move(inv), Unchecked{});
  }

  /// Disjoint cycles including fixed points, each starting at its smallest point.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(images_.size() + 1, 0);
    for (int start = 1; start <= static_cast<int>(images_.size()); ++start) {
      if (seen[start]) continue;
      std::vector<int> c;
      for (int v = start; !seen[v]; v = images_[v - 1]) {
        seen[v] = 1;
        c.push_back(v);
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  std::string to_cycle_string() const {
    std::ostringstream os;
    bool any = false;
    for (const auto& c : cycles()) {
      if (c.size() < 2) continue;
      any = true;
      os << '(';
      for (std::size_t k = 0; k < c.size(); ++k) os << (k ? " " : "") << c[k];
      os << ')';
    }
    if (!any) os << "()";
    return os.str();
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<int> images, Unchecked) : images_(std::move(images)) {}

  friend Permutation compose(const Permutation& p, const Permutation& q);

  std::vector<int> images_;
};

/// (p ∘ q)(i) = p(q(i)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> im(p.degree());
  for (std::size_t i = 0; i < im.size(); ++i) im[i] = p.images_[q.images_[i] - 1];
  return Permutation(std::move(im), Permutation::Unchecked{});
}

inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

inline std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << p.to_cycle_string();
}

/// All permutations of degree n in lexicographic order of image lists.
inline std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

/// Word w with p = s_{w[0]} ∘ s_{w[1]} ∘ ... where s_i swaps i and i+1.
inline std::vector<int> adjacent_transposition_word(const Permutation& p) {
  std::vector<int> im = p.images();
  std::vector<int> reduced;
  // Right-multiplying by s_i at a descent removes one inversion.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < im.size(); ++i) {
      if (im[i] > im[i + 1]) {
        std::swap(im[i], im[i + 1]);
        reduced.push_back(static_cast<int>(i + 1));
        changed = true;
      }
    }
  }
  std::reverse(reduced.begin(), reduced.end());
  return reduced;
}

}  // namespace hsplab

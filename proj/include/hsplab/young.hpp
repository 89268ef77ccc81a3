#pragma once

#include <cmath>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "hsplab/numeric.hpp"
#include "hsplab/partition.hpp"
#include "hsplab/permutation.hpp"

namespace hsplab {

inline constexpr int kYoungOrthogonalCap = 8;

/// A standard Young tableau stored as the (row, col) position of each entry 1..n.
struct StandardTableau {
  std::vector<std::pair<int, int>> position;  // position[v-1] for entry v

  int content(int v) const {
    auto [r, c] = position[static_cast<std::size_t>(v - 1)];
    return c - r;
  }
  friend auto operator<=>(const StandardTableau&, const StandardTableau&) = default;
};

/// All standard tableaux of shape λ, built by placing 1..n at addable corners.
inline std::vector<StandardTableau> standard_tableaux(const Partition& lambda) {
  std::vector<StandardTableau> out;
  const int n = lambda.size();
  std::vector<int> filled(lambda.length(), 0);
  StandardTableau cur;
  cur.position.resize(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, int v) -> void {
    if (v > n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t r = 0; r < filled.size(); ++r) {
      if (filled[r] >= lambda[r]) continue;
      if (r > 0 && filled[r] >= filled[r - 1]) continue;
      cur.position[static_cast<std::size_t>(v - 1)] = {static_cast<int>(r), filled[r]};
      ++filled[r];
      self(self, v + 1);
      --filled[r];
    }
  };
  rec(rec, 1);
  return out;
}

/// Dense real matrix used by the orthogonal form.
struct RealMatrix {
  std::size_t n = 0;
  std::vector<double> a;

  explicit RealMatrix(std::size_t dim = 0) : n(dim), a(dim * dim, 0.0) {}
  static RealMatrix identity(std::size_t dim) {
    RealMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }
  double& operator()(std::size_t r, std::size_t c) { return a[r * n + c]; }
  double operator()(std::size_t r, std::size_t c) const { return a[r * n + c]; }
  double trace() const {
    double t = 0;
    for (std::size_t i = 0; i < n; ++i) t += (*this)(i, i);
    return t;
  }
  friend RealMatrix operator*(const RealMatrix& x, const RealMatrix& y) {
    RealMatrix r(x.n);
    for (std::size_t i = 0; i < x.n; ++i)
      for (std::size_t k = 0; k < x.n; ++k) {
        double v = x(i, k);
        if (v == 0.0) continue;
        for (std::size_t j = 0; j < x.n; ++j) r(i, j) += v * y(k, j);
      }
    return r;
  }
  double max_abs_diff(const RealMatrix& o) const {
    double m = 0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - o.a[i]));
    return m;
  }
};

/// Young's orthogonal representation of S_n for shape λ. Generator s_i = (i i+1)
/// acts on the tableau basis with diagonal 1/r and off-diagonal sqrt(1 - 1/r²),
/// r the axial distance content(i+1) - content(i). Off-diagonal entries are
/// irrational; each is within 1e-12 of its true value.
class YoungOrthogonalRep {
 public:
  static constexpr double kEntryErrorBound = 1e-12;

  YoungOrthogonalRep(const Partition& lambda, int n) : shape_(lambda), n_(n) {
    if (lambda.size() != n) throw std::invalid_argument("YoungOrthogonalRep: |lambda| != n");
    require_cap("Young orthogonal form degree", n, kYoungOrthogonalCap);
    tableaux_ = standard_tableaux(lambda);
    std::map<StandardTableau, std::size_t> index;
    for (std::size_t t = 0; t < tableaux_.size(); ++t) index[tableaux_[t]] = t;
    const std::size_t dim = tableaux_.size();
    for (int i = 1; i < n; ++i) {
      RealMatrix m(dim);
      for (std::size_t t = 0; t < dim; ++t) {
        const auto& tab = tableaux_[t];
        auto pi = tab.position[static_cast<std::size_t>(i - 1)];
        auto pj = tab.position[static_cast<std::size_t>(i)];
        if (pi.first == pj.first) {
          m(t, t) = 1.0;
        } else if (pi.second == pj.second) {
          m(t, t) = -1.0;
        } else {
          const double r = tab.content(i + 1) - tab.content(i);
          StandardTableau swapped = tab;
          std::swap(swapped.position[static_cast<std::size_t>(i - 1)], swapped.position[static_cast<std::size_t>(i)]);
          m(t, t) = 1.0 / r;
          m(index.at(swapped), t) = std::sqrt(1.0 - 1.0 / (r * r));
        }
      }
      generators_.push_back(std::move(m));
    }
  }

  std::size_t dimension() const noexcept { return tableaux_.size(); }
  const Partition& shape() const noexcept { return shape_; }
  const std::vector<StandardTableau>& basis() const noexcept { return tableaux_; }

  /// Image of s_i = (i i+1), 1 <= i < n.
  const RealMatrix& generator(int i) const { return generators_.at(static_cast<std::size_t>(i - 1)); }

  RealMatrix operator()(const Permutation& g) const {
    if (static_cast<int>(g.degree()) != n_) throw std::invalid_argument("YoungOrthogonalRep: degree mismatch");
    RealMatrix m = RealMatrix::identity(dimension());
    for (int s : adjacent_transposition_word(g)) m = m * generator(s);
    return m;
  }

  double character(const Permutation& g) const { return (*this)(g).trace(); }

 private:
  Partition shape_;
  int n_;
  std::vector<StandardTableau> tableaux_;
  std::vector<RealMatrix> generators_;
};

inline YoungOrthogonalRep yor_matrices(const Partition& lambda, int n) { return YoungOrthogonalRep(lambda, n); }

}  // namespace hsplab

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hsplab/numeric.hpp"

namespace hsplab {

using Poly = std::vector<std::int64_t>;  // coefficient i multiplies x^i

namespace detail {

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division a / b for monic b with integer coefficients; throws unless
// the remainder is zero.
inline Poly exact_divide(Poly a, const Poly& b) {
  trim(a);
  if (b.empty() || b.back() != 1) throw std::invalid_argument("exact_divide: divisor must be monic");
  if (a.size() < b.size()) {
    if (!a.empty()) throw std::logic_error("exact_divide: non-zero remainder");
    return {};
  }
  Poly q(a.size() - b.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    std::int64_t c = a[k + b.size() - 1];
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] = checked_add(a[k + j], -checked_mul(c, b[j]));
  }
  trim(a);
  if (!a.empty()) throw std::logic_error("exact_divide: non-zero remainder");
  return q;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = checked_add(r[i + j], checked_mul(a[i], b[j]));
  return r;
}

}  // namespace detail

/// Reduction data for Z[ζ_N] = Z[x]/(Φ_N): the cyclotomic polynomial and the
/// canonical residue of every power x^k, 0 <= k < N.
struct CyclotomicField {
  int order = 1;
  Poly phi;                      // Φ_N, monic, degree φ(N)
  std::vector<Poly> power_residue;  // x^k mod Φ_N, each of length φ(N)

  int degree() const { return static_cast<int>(phi.size()) - 1; }
};

namespace detail {

class FieldCache {
 public:
  static FieldCache& instance() {
    static FieldCache cache;
    return cache;
  }

  std::shared_ptr<const CyclotomicField> get(int n) {
    std::lock_guard<std::mutex> lock(mutex_);
    return get_locked(n);
  }

  Poly phi(int n) {
    std::lock_guard<std::mutex> lock(mutex_);
    return phi_locked(n);
  }

 private:
  // Φ_N = (x^N - 1) / ∏_{d | N, d < N} Φ_d
  Poly phi_locked(int n) {
    if (auto it = phis_.find(n); it != phis_.end()) return it->second;
    Poly num(static_cast<std::size_t>(n) + 1, 0);
    num[0] = -1;
    num[static_cast<std::size_t>(n)] = 1;
    for (int d = 1; d < n; ++d)
      if (n % d == 0) num = exact_divide(num, phi_locked(d));
    phis_[n] = num;
    return num;
  }

  std::shared_ptr<const CyclotomicField> get_locked(int n) {
    if (auto it = fields_.find(n); it != fields_.end()) return it->second;
    auto f = std::make_shared<CyclotomicField>();
    f->order = n;
    f->phi = phi_locked(n);
    const std::size_t deg = f->phi.size() - 1;
    f->power_residue.assign(static_cast<std::size_t>(n), Poly(deg, 0));
    Poly cur(deg, 0);
    cur[0] = 1;  // x^0
    for (int k = 0; k < n; ++k) {
      f->power_residue[static_cast<std::size_t>(k)] = cur;
      // multiply by x, then fold the overflow coefficient using Φ_N monic
      std::int64_t top = cur[deg - 1];
      for (std::size_t i = deg - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      if (top != 0)
        for (std::size_t i = 0; i < deg; ++i) cur[i] = checked_add(cur[i], -checked_mul(top, f->phi[i]));
    }
    fields_[n] = f;
    return f;
  }

  std::mutex mutex_;
  std::map<int, Poly> phis_;
  std::map<int, std::shared_ptr<const CyclotomicField>> fields_;
};

}  // namespace detail

/// N-th cyclotomic polynomial Φ_N (coefficients low to high).
inline Poly cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: N must be positive");
  return detail::FieldCache::instance().phi(n);
}

inline std::shared_ptr<const CyclotomicField> cyclotomic_field(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_field: N must be positive");
  return detail::FieldCache::instance().get(n);
}

/// Element of Z[ζ_N] in canonical form: a polynomial in ζ_N of degree < φ(N),
/// reduced modulo Φ_N. Two values are equal iff their coefficients agree
/// after lifting to a common order, so the zero test is a coefficient check.
class CyclotomicInteger {
 public:
  CyclotomicInteger() : CyclotomicInteger(std::int64_t{0}) {}

  // NOLINTNEXTLINE(google-explicit-constructor): integers embed implicitly.
  CyclotomicInteger(std::int64_t value) : field_(cyclotomic_field(1)), coeffs_{value} {}
  CyclotomicInteger(int value) : CyclotomicInteger(static_cast<std::int64_t>(value)) {}

  /// ζ_N^a, reduced modulo Φ_N.
  static CyclotomicInteger root(int order, std::int64_t exponent) {
    auto f = cyclotomic_field(order);
    std::size_t k = static_cast<std::size_t>(detail::mod(exponent, order));
    return CyclotomicInteger(f, f->power_residue[k]);
  }

  /// Σ_i coeffs[i]·ζ_N^i for arbitrary-length input; reduced on construction.
  static CyclotomicInteger from_powers(int order, const std::vector<std::int64_t>& coeffs_by_power) {
    auto f = cyclotomic_field(order);
    Poly acc(static_cast<std::size_t>(f->degree()), 0);
    for (std::size_t i = 0; i < coeffs_by_power.size(); ++i) {
      if (coeffs_by_power[i] == 0) continue;
      const Poly& r = f->power_residue[i % static_cast<std::size_t>(order)];
      for (std::size_t j = 0; j < acc.size(); ++j)
        acc[j] = detail::checked_add(acc[j], detail::checked_mul(coeffs_by_power[i], r[j]));
    }
    return CyclotomicInteger(f, std::move(acc));
  }

  int order() const noexcept { return field_->order; }
  const Poly& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const noexcept {
    for (auto c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  /// True iff the value is an ordinary integer (every non-constant basis coefficient vanishes).
  bool is_rational() const noexcept {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return false;
    return true;
  }

  std::int64_t integer_value() const {
    if (!is_rational()) throw IntegrityError("cyclotomic value is not an integer");
    return coeffs_.empty() ? 0 : coeffs_[0];
  }

  std::complex<double> to_complex() const {
    std::complex<double> z = 0;
    const double step = 2.0 * M_PI / order();
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) z += static_cast<double>(coeffs_[i]) * std::polar(1.0, step * static_cast<double>(i));
    return z;
  }

  /// Same value expressed in Z[ζ_M]; requires order() | M.
  CyclotomicInteger lift(int target_order) const {
    if (target_order % order() != 0) throw std::invalid_argument("lift: order must divide target");
    if (target_order == order()) return *this;
    const std::int64_t step = target_order / order();
    auto f = cyclotomic_field(target_order);
    Poly acc(static_cast<std::size_t>(f->degree()), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0) continue;
      const Poly& r = f->power_residue[static_cast<std::size_t>(static_cast<std::int64_t>(i) * step)];
      for (std::size_t j = 0; j < acc.size(); ++j)
        acc[j] = detail::checked_add(acc[j], detail::checked_mul(coeffs_[i], r[j]));
    }
    return CyclotomicInteger(f, std::move(acc));
  }

  /// Complex conjugate: ζ^i ↦ ζ^{-i}.
  CyclotomicInteger conj() const {
    const int n = order();
    Poly acc(coeffs_.size(), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0) continue;
      const Poly& r = field_->power_residue[static_cast<std::size_t>(detail::mod(-static_cast<std::int64_t>(i), n))];
      for (std::size_t j = 0; j < acc.size(); ++j)
        acc[j] = detail::checked_add(acc[j], detail::checked_mul(coeffs_[i], r[j]));
    }
    return CyclotomicInteger(field_, std::move(acc));
  }

  CyclotomicInteger operator-() const {
    Poly c = coeffs_;
    for (auto& v : c) v = detail::checked_mul(v, -1);
    return CyclotomicInteger(field_, std::move(c));
  }

  CyclotomicInteger& operator+=(const CyclotomicInteger& o) {
    if (o.order() == order()) {
      for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = detail::checked_add(coeffs_[i], o.coeffs_[i]);
      return *this;
    }
    const int l = std::lcm(order(), o.order());
    *this = lift(l);
    return *this += o.lift(l);
  }

  CyclotomicInteger& operator-=(const CyclotomicInteger& o) { return *this += -o; }

  CyclotomicInteger& operator*=(const CyclotomicInteger& o) {
    if (o.order() != order()) {
      const int l = std::lcm(order(), o.order());
      *this = lift(l) * o.lift(l);
      return *this;
    }
    const int n = order();
    // product modulo x^N - 1, then fold each power through its residue
    Poly wrapped(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
        if (o.coeffs_[j] == 0) continue;
        std::size_t k = (i + j) % static_cast<std::size_t>(n);
        wrapped[k] = detail::checked_add(wrapped[k], detail::checked_mul(coeffs_[i], o.coeffs_[j]));
      }
    }
    Poly acc(coeffs_.size(), 0);
    for (std::size_t k = 0; k < wrapped.size(); ++k) {
      if (wrapped[k] == 0) continue;
      const Poly& r = field_->power_residue[k];
      for (std::size_t j = 0; j < acc.size(); ++j)
        acc[j] = detail::checked_add(acc[j], detail::checked_mul(wrapped[k], r[j]));
    }
    coeffs_ = std::move(acc);
    return *this;
  }

  friend CyclotomicInteger operator+(CyclotomicInteger a, const CyclotomicInteger& b) { return a += b; }
  friend CyclotomicInteger operator-(CyclotomicInteger a, const CyclotomicInteger& b) { return a -= b; }
  friend CyclotomicInteger operator*(CyclotomicInteger a, const CyclotomicInteger& b) { return a *= b; }

  friend bool operator==(const CyclotomicInteger& a, const CyclotomicInteger& b) {
    if (a.order() == b.order()) return a.coeffs_ == b.coeffs_;
    const int l = std::lcm(a.order(), b.order());
    return a.lift(l).coeffs_ == b.lift(l).coeffs_;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      std::int64_t c = coeffs_[i];
      if (c == 0) continue;
      if (!first) os << (c > 0 ? " + " : " - ");
      else if (c < 0) os << "-";
      std::int64_t a = c < 0 ? -c : c;
      if (i == 0) {
        os << a;
      } else {
        if (a != 1) os << a << "*";
        os << "z" << order();
        if (i > 1) os << "^" << i;
      }
      first = false;
    }
    return os.str();
  }

 private:
  CyclotomicInteger(std::shared_ptr<const CyclotomicField> f, Poly coeffs)
      : field_(std::move(f)), coeffs_(std::move(coeffs)) {}

  std::shared_ptr<const CyclotomicField> field_;
  Poly coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const CyclotomicInteger& z) { return os << z.to_string(); }

/// ζ_N^{a mod N}.
inline CyclotomicInteger cyclotomic_root(int order, std::int64_t exponent) {
  return CyclotomicInteger::root(order, exponent);
}

inline bool is_zero(const CyclotomicInteger& z) { return z.is_zero(); }

/// z·conj(z) as an exact integer; throws if the result is not rational.
inline std::int64_t norm_squared(const CyclotomicInteger& z) { return (z * z.conj()).integer_value(); }

}  // namespace hsplab

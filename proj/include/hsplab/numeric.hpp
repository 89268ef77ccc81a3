#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hsplab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when an input exceeds one of the desk-scale enumeration caps.
class CapacityError : public std::length_error {
 public:
  CapacityError(const std::string& what, long long value, long long cap)
      : std::length_error(what + ": " + std::to_string(value) + " exceeds cap " +
                          std::to_string(cap)),
        value_(value),
        cap_(cap) {}

  long long value() const noexcept { return value_; }
  long long cap() const noexcept { return cap_; }

 private:
  long long value_;
  long long cap_;
};

/// Raised when an exact computation produces a value that cannot be right
/// for well-formed input (e.g. an irrational inner product of characters).
class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void require_cap(const char* what, long long value, long long cap) {
  if (value > cap) throw CapacityError(what, value, cap);
}

inline BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  return Rational(num, den);
}

// "num/den", or just "num" when the denominator is one.
inline std::string to_string(const Rational& q) {
  return q.str();
}

inline std::string to_string(const BigInt& z) {
  return z.str();
}

inline bool is_integer(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

inline BigInt numerator(const Rational& q) {
  return boost::multiprecision::numerator(q);
}

inline BigInt denominator(const Rational& q) {
  return boost::multiprecision::denominator(q);
}

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("cyclotomic coefficient overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("cyclotomic coefficient overflow");
  return r;
}

inline std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace detail

}  // namespace hsplab

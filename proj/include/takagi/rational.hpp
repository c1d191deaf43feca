#pragma once

/**
 * @file rational.hpp
 * @brief Exact rationals with arbitrary-size numerator and denominator.
 *
 * Thin value type over GMP's mpq_class. The representation is always
 * canonical: gcd(|num|, den) = 1 and den >= 1, so equality is value
 * equality and the textual form "p/q" is unique.
 */

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace takagi {

using Integer = mpz_class;

/// Builds an Integer from any builtin integral type.
template <std::integral I>
Integer make_integer(I n) {
  if constexpr (std::is_signed_v<I>) {
    return Integer(static_cast<long>(n));
  } else {
    return Integer(static_cast<unsigned long>(n));
  }
}

/// 2^k as an Integer.
Integer pow2(std::size_t k);

class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I n) : value_(make_integer(n)) {}  // NOLINT(google-explicit-constructor)

  Rational(const Integer& n) : value_(n) {}  // NOLINT(google-explicit-constructor)

  /// Throws DomainError when den == 0.
  Rational(const Integer& num, const Integer& den);

  template <std::integral I, std::integral J>
  Rational(I num, J den) : Rational(make_integer(num), make_integer(den)) {}

  explicit Rational(mpq_class q) : value_(std::move(q)) { value_.canonicalize(); }

  /// Parses "p", "p/q", "-p/q". Throws ParseError on malformed text and
  /// DomainError on a zero denominator.
  static Rational parse(std::string_view text);

  Integer num() const { return value_.get_num(); }
  Integer den() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }

  /// Largest integer <= value.
  Integer floor() const;
  /// value - floor(value), in [0, 1).
  Rational frac() const;
  Rational abs() const;

  /// value * 2^k for any integer k.
  Rational scaled_pow2(long k) const;

  /// "p/q", or "p" when den == 1.
  std::string to_string() const;

  /// Fixed-point rendering with `digits` fractional digits, rounded half
  /// away from zero.
  std::string to_decimal(int digits) const;

  /// Nearest double, for diagnostics only.
  double to_double() const { return value_.get_d(); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  /// Throws DomainError on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q);

 private:
  mpq_class value_{0};
};

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

}  // namespace takagi

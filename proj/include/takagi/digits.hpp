#pragma once

/**
 * @file digits.hpp
 * @brief Eventually periodic binary expansions of rationals.
 *
 * A rational x is written x = k + sum_{n>=1} a_n 2^-n with k = floor(x),
 * so every fraction digit is 0 or 1 even for negative x. The fraction
 * digits are a finite preperiod a_1..a_P followed by a period
 * a_{P+1}..a_{P+L} that repeats forever.
 *
 * DigitExpansion is always canonical:
 *   - the period is never all ones (0.0(1) is stored as 0.1(0)),
 *   - the period length L is minimal,
 *   - the preperiod length P is minimal.
 * Dyadic rationals therefore use their terminating expansion and have
 * period exactly [0].
 *
 * Text form is "k.pre(per)" with k written in binary, e.g. "0.01(10)",
 * "-1.(10)", "10.1(0)".
 */

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "takagi/rational.hpp"

namespace takagi {

using Bit = std::uint8_t;

class DigitExpansion {
 public:
  /// Canonicalizes the given parts. Throws DomainError if a bit is not 0/1
  /// or the period is empty.
  DigitExpansion(Integer int_part, std::vector<Bit> preperiod, std::vector<Bit> period);

  /// Parses the "k.pre(per)" text form. A missing "(per)" means "(0)".
  static DigitExpansion parse(std::string_view text);

  const Integer& int_part() const { return int_part_; }
  std::span<const Bit> preperiod() const { return preperiod_; }
  std::span<const Bit> period() const { return period_; }
  std::size_t preperiod_length() const { return preperiod_.size(); }
  std::size_t period_length() const { return period_.size(); }

  bool is_dyadic() const { return period_.size() == 1 && period_[0] == 0; }

  /// a_n for n >= 1. Throws DomainError for n == 0.
  Bit digit(std::size_t n) const;

  std::string to_string() const;

  friend bool operator==(const DigitExpansion&, const DigitExpansion&) = default;

 private:
  struct Trusted {};
  DigitExpansion(Trusted, Integer int_part, std::vector<Bit> preperiod, std::vector<Bit> period)
      : int_part_(std::move(int_part)),
        preperiod_(std::move(preperiod)),
        period_(std::move(period)) {}

  friend DigitExpansion rational_to_expansion(const Rational& q);

  void canonicalize();

  Integer int_part_;
  std::vector<Bit> preperiod_;
  std::vector<Bit> period_;
};

/// Exact binary expansion of q by long division. The cost is linear in
/// the period length, which is the multiplicative order of 2 modulo the
/// odd part of the denominator.
DigitExpansion rational_to_expansion(const Rational& q);

Rational expansion_to_rational(const DigitExpansion& e);

/// sum_{j>n} a_j 2^-(j-n): the fraction digits after position n read as a
/// number in [0, 1]. Computed from the digit pattern alone.
Rational shifted_tail(const DigitExpansion& e, std::size_t n);

/// sum_{j<m} a_j 2^-j (fraction digits only).
Rational digit_head(const DigitExpansion& e, std::size_t m);

/// Smallest n with x in D_n = 2^-(n-1) Z, for dyadic e; empty otherwise.
std::optional<std::size_t> dyadic_level(const DigitExpansion& e);

/// Consecutive points left < x < right of D_level around a non-dyadic x,
/// with center their midpoint.
struct NeighborBracket {
  Rational left;
  Rational center;
  Rational right;
  std::size_t level = 1;
};

/// left = floor(2^(n-1) x) / 2^(n-1), right = left + 2^-(n-1).
/// Throws DomainError for dyadic e or n == 0.
NeighborBracket neighbor_bracket(const DigitExpansion& e, std::size_t n);

struct UnitReduction {
  DigitExpansion point;  // in [0, 1)
  bool reflected = false;
};

/// Maps x to a point of [0, 1) with the same Takagi value: frac(x) for
/// x >= 0 and frac(-x) for x < 0. `reflected` records the x -> -x step,
/// under which left and right Dini data trade places.
UnitReduction reduce_to_unit(const DigitExpansion& e);

}  // namespace takagi

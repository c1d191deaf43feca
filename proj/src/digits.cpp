#include "takagi/digits.hpp"

#include <algorithm>
#include <limits>

#include "takagi/errors.hpp"

namespace takagi {

namespace {

Integer bits_to_integer(std::span<const Bit> bits) {
  if (bits.empty()) return 0;
  std::string s(bits.size(), '0');
  for (std::size_t i = 0; i < bits.size(); ++i) s[i] = bits[i] ? '1' : '0';
  return Integer(s, 2);
}

std::vector<Bit> parse_bits(std::string_view s, std::string_view whole) {
  std::vector<Bit> out;
  out.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1') {
      throw ParseError("malformed expansion '" + std::string(whole) + "': bad token '" +
                       std::string(s) + "'");
    }
    out.push_back(static_cast<Bit>(c - '0'));
  }
  return out;
}

// Period digits of an odd-denominator fraction num/den (0 <= num < den) by
// doubling the remainder until it returns to its start value.
template <class Int>
std::vector<Bit> periodic_digits(Int num, const Int& den) {
  std::vector<Bit> period;
  const Int start = num;
  do {
    num *= 2;
    if (num >= den) {
      num -= den;
      period.push_back(1);
    } else {
      period.push_back(0);
    }
  } while (num != start);
  return period;
}

template <class Int>
std::vector<Bit> preperiod_digits(Int& num, const Int& den, std::size_t count) {
  std::vector<Bit> pre;
  pre.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    num *= 2;
    if (num >= den) {
      num -= den;
      pre.push_back(1);
    } else {
      pre.push_back(0);
    }
  }
  return pre;
}

}  // namespace

DigitExpansion::DigitExpansion(Integer int_part, std::vector<Bit> preperiod,
                               std::vector<Bit> period)
    : int_part_(std::move(int_part)),
      preperiod_(std::move(preperiod)),
      period_(std::move(period)) {
  if (period_.empty()) throw DomainError("expansion period must be nonempty");
  const auto bad = [](Bit b) { return b > 1; };
  if (std::ranges::any_of(preperiod_, bad) || std::ranges::any_of(period_, bad)) {
    throw DomainError("expansion digits must be 0 or 1");
  }
  canonicalize();
}

void DigitExpansion::canonicalize() {
  // minimal period: smallest divisor d of L with period[i] == period[i mod d]
  const std::size_t len = period_.size();
  for (std::size_t d = 1; d < len; ++d) {
    if (len % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < len && repeats; ++i) repeats = period_[i] == period_[i - d];
    if (repeats) {
      period_.resize(d);
      break;
    }
  }

  // 0.b1..bP(1) == 0.b1..bP + 2^-P
  if (period_.size() == 1 && period_[0] == 1) {
    period_[0] = 0;
    auto it = preperiod_.rbegin();
    for (; it != preperiod_.rend() && *it == 1; ++it) *it = 0;
    if (it == preperiod_.rend()) {
      ++int_part_;
    } else {
      *it = 1;
    }
  }

  // minimal preperiod: absorb matching trailing preperiod digits into the
  // period by rotating it right
  while (!preperiod_.empty() && preperiod_.back() == period_.back()) {
    preperiod_.pop_back();
    std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
  }
}

DigitExpansion DigitExpansion::parse(std::string_view text) {
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) {
    throw ParseError("malformed expansion '" + std::string(text) + "': missing '.'");
  }
  std::string_view int_text = text.substr(0, dot);
  std::string_view rest = text.substr(dot + 1);

  bool negative = false;
  if (!int_text.empty() && int_text.front() == '-') {
    negative = true;
    int_text.remove_prefix(1);
  }
  if (int_text.empty()) {
    throw ParseError("malformed expansion '" + std::string(text) + "': bad token '" +
                     std::string(text.substr(0, dot)) + "'");
  }
  Integer k = bits_to_integer(parse_bits(int_text, text));
  if (negative) {
    if (k == 0) throw ParseError("malformed expansion '" + std::string(text) + "': bad token '-0'");
    k = -k;
  }

  std::vector<Bit> period{0};
  const auto open = rest.find('(');
  std::string_view pre_text = rest;
  if (open != std::string_view::npos) {
    if (rest.back() != ')' || rest.size() < open + 3) {
      throw ParseError("malformed expansion '" + std::string(text) + "': bad token '" +
                       std::string(rest.substr(open)) + "'");
    }
    pre_text = rest.substr(0, open);
    period = parse_bits(rest.substr(open + 1, rest.size() - open - 2), text);
  }
  return DigitExpansion(std::move(k), parse_bits(pre_text, text), std::move(period));
}

Bit DigitExpansion::digit(std::size_t n) const {
  if (n == 0) throw DomainError("digit index starts at 1");
  if (n <= preperiod_.size()) return preperiod_[n - 1];
  return period_[(n - preperiod_.size() - 1) % period_.size()];
}

std::string DigitExpansion::to_string() const {
  std::string out = int_part_ < 0 ? "-" : "";
  const Integer mag = int_part_ < 0 ? Integer(-int_part_) : int_part_;
  out += mag.get_str(2);
  out += '.';
  for (Bit b : preperiod_) out += static_cast<char>('0' + b);
  out += '(';
  for (Bit b : period_) out += static_cast<char>('0' + b);
  out += ')';
  return out;
}

DigitExpansion rational_to_expansion(const Rational& q) {
  Integer k = q.floor();
  const Rational f = q.frac();
  const Integer den = f.den();
  const std::size_t twos = mpz_scan1(den.get_mpz_t(), 0);
  const Integer odd = den >> twos;

  std::vector<Bit> pre;
  std::vector<Bit> period;
  constexpr unsigned long kFastLimit = std::numeric_limits<std::uint64_t>::max() >> 2;
  if (den <= kFastLimit) {
    std::uint64_t num = f.num().get_ui();
    const std::uint64_t d = den.get_ui();
    pre = preperiod_digits<std::uint64_t>(num, d, twos);
    // after the preperiod the remainder is num = 2^twos * r with r/odd
    // purely periodic
    period = periodic_digits<std::uint64_t>(num >> twos, odd.get_ui());
  } else {
    Integer num = f.num();
    pre = preperiod_digits<Integer>(num, den, twos);
    Integer r = num >> twos;
    period = periodic_digits<Integer>(std::move(r), odd);
  }
  return DigitExpansion(DigitExpansion::Trusted{}, std::move(k), std::move(pre),
                        std::move(period));
}

Rational expansion_to_rational(const DigitExpansion& e) {
  const std::size_t p = e.preperiod_length();
  const std::size_t l = e.period_length();
  const Integer repunit = pow2(l) - 1;
  // k + (pre + per / (2^L - 1)) / 2^P
  Rational frac(bits_to_integer(e.preperiod()) * repunit + bits_to_integer(e.period()),
                repunit * pow2(p));
  return Rational(e.int_part()) + frac;
}

Rational shifted_tail(const DigitExpansion& e, std::size_t n) {
  const std::size_t p = e.preperiod_length();
  const std::size_t l = e.period_length();
  const Integer repunit = pow2(l) - 1;
  const auto period = e.period();
  if (n >= p) {
    const std::size_t r = (n - p) % l;
    std::vector<Bit> rotated(period.begin() + static_cast<std::ptrdiff_t>(r), period.end());
    rotated.insert(rotated.end(), period.begin(), period.begin() + static_cast<std::ptrdiff_t>(r));
    return Rational(bits_to_integer(rotated), repunit);
  }
  const auto rest = e.preperiod().subspan(n);
  return Rational(bits_to_integer(rest) * repunit + bits_to_integer(period),
                  repunit * pow2(p - n));
}

Rational digit_head(const DigitExpansion& e, std::size_t m) {
  if (m <= 1) return Rational(0);
  std::vector<Bit> head(m - 1);
  for (std::size_t j = 1; j < m; ++j) head[j - 1] = e.digit(j);
  return Rational(bits_to_integer(head), pow2(m - 1));
}

std::optional<std::size_t> dyadic_level(const DigitExpansion& e) {
  if (!e.is_dyadic()) return std::nullopt;
  return e.preperiod_length() + 1;
}

NeighborBracket neighbor_bracket(const DigitExpansion& e, std::size_t n) {
  if (n == 0) throw DomainError("bracket level starts at 1");
  if (e.is_dyadic()) throw DomainError("neighbor bracket needs a non-dyadic point");
  const Rational x = expansion_to_rational(e);
  const long shift = static_cast<long>(n - 1);
  const Rational left = Rational(x.scaled_pow2(shift).floor()).scaled_pow2(-shift);
  const Rational step = Rational(1).scaled_pow2(-shift);
  const Rational right = left + step;
  return NeighborBracket{left, left + step.scaled_pow2(-1), right, n};
}

UnitReduction reduce_to_unit(const DigitExpansion& e) {
  if (e.int_part() >= 0) {
    return UnitReduction{DigitExpansion(0, std::vector<Bit>(e.preperiod().begin(), e.preperiod().end()),
                                        std::vector<Bit>(e.period().begin(), e.period().end())),
                         false};
  }
  const Rational x = expansion_to_rational(e);
  return UnitReduction{rational_to_expansion((-x).frac()), true};
}

}  // namespace takagi

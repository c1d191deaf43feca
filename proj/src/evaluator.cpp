#include "takagi/evaluator.hpp"

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "takagi/errors.hpp"

namespace takagi {

namespace {

// sum_{i in [lo, hi)} w[i] * 2^(hi-1-i), by binary splitting
Integer weighted_binary_sum(std::span<const Integer> w, std::size_t lo, std::size_t hi) {
  if (hi - lo <= 32) {
    Integer acc = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      acc <<= 1;
      acc += w[i];
    }
    return acc;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  Integer left = weighted_binary_sum(w, lo, mid);
  left <<= static_cast<mp_bitcnt_t>(hi - mid);
  left += weighted_binary_sum(w, mid, hi);
  return left;
}

Integer from_limbs(const std::vector<std::uint64_t>& limbs) {
  Integer out;
  mpz_import(out.get_mpz_t(), limbs.size(), 1, sizeof(std::uint64_t), 0, 0, limbs.data());
  return out;
}

// Same sum for entries below 2^62: blocks of 64 terms are accumulated in
// 128 bits, and the block values are laid out as two limb arrays.
Integer weighted_binary_sum(std::span<const std::uint64_t> w, std::size_t lo, std::size_t hi) {
  const std::size_t n = hi - lo;
  const std::size_t pad = (64 - n % 64) % 64;
  const std::size_t blocks = (n + pad) / 64;
  std::vector<std::uint64_t> low(blocks);
  std::vector<std::uint64_t> high(blocks + 1, 0);
  for (std::size_t k = 0; k < blocks; ++k) {
    __extension__ using Wide = unsigned __int128;
    Wide acc = 0;
    for (std::size_t t = 0; t < 64; ++t) {
      const std::size_t i = k * 64 + t;
      if (i < pad) continue;
      acc += static_cast<Wide>(w[lo + i - pad]) << (63 - t);
    }
    low[k] = static_cast<std::uint64_t>(acc);
    high[k] = static_cast<std::uint64_t>(acc >> 64);
  }
  return from_limbs(low) + from_limbs(high);
}

// Distances to the nearest integer of the doubling orbit of frac(x) = num/den,
// all over the common denominator den. The first `twos` entries are the
// preperiodic part (den = 2^twos * odd); the rest is one full cycle of the
// purely periodic point num'/odd reached afterwards.
template <class Int>
struct Orbit {
  std::vector<Int> head;
  std::vector<Int> cycle;
};

template <class Int>
Orbit<Int> doubling_orbit(Int num, const Int& den, std::size_t twos, const Int& odd) {
  Orbit<Int> orbit;
  orbit.head.reserve(twos);
  for (std::size_t k = 0; k < twos; ++k) {
    const Int other = den - num;
    orbit.head.push_back(num < other ? num : other);
    num *= 2;
    if (num >= den) num -= den;
  }
  num >>= twos;  // now frac(2^twos x) = num / odd
  const Int start = num;
  do {
    const Int other = odd - num;
    orbit.cycle.push_back(num < other ? num : other);
    num *= 2;
    if (num >= odd) num -= odd;
  } while (num != start);
  return orbit;
}

// T(x) = [ H / 2^(s-1) + 2 C / (2^L - 1) ] / den, where
//   H = sum_{k<s} m_k 2^(s-1-k)  over the preperiodic orbit,
//   C = sum_{j<L} c_j 2^(L-1-j)  over one cycle,
// using T(y) = 2^L / (2^L - 1) * sum_{j<L} 2^-j phi(2^j y) for purely periodic y.
template <class Int>
Rational assemble(const Orbit<Int>& orbit, const Integer& den) {
  const std::size_t s = orbit.head.size();
  const std::size_t l = orbit.cycle.size();
  Rational total(2 * weighted_binary_sum(std::span<const Int>(orbit.cycle), 0, l), pow2(l) - 1);
  if (s > 0) total += Rational(weighted_binary_sum(std::span<const Int>(orbit.head), 0, s), pow2(s - 1));
  return total / Rational(den);
}

}  // namespace

Rational phi(const Rational& x) {
  const Rational f = x.frac();
  return min(f, Rational(1) - f);
}

Rational g_k(const Rational& x, std::size_t k) {
  if (k == 0) throw DomainError("g_k needs k >= 1");
  const long shift = static_cast<long>(k - 1);
  return phi(x.scaled_pow2(shift)).scaled_pow2(-shift);
}

Rational g_k_digit_formula(const DigitExpansion& e, std::size_t k) {
  if (k == 0) throw DomainError("g_k needs k >= 1");
  const int a = e.digit(k);
  const long shift = static_cast<long>(k);
  const Rational tail = shifted_tail(e, k).scaled_pow2(-shift);
  return Rational(a).scaled_pow2(-shift) + Rational(1 - 2 * a) * tail;
}

Rational partial_sum(const Rational& x, std::size_t n) {
  Rational sum;
  for (std::size_t k = 1; k <= n; ++k) sum += g_k(x, k);
  return sum;
}

Rational takagi_exact(const Rational& x) {
  const Rational f = x.frac();
  const Integer den = f.den();
  const std::size_t twos = mpz_scan1(den.get_mpz_t(), 0);
  const Integer odd = den >> twos;
  constexpr unsigned long kFastLimit = std::numeric_limits<std::uint64_t>::max() >> 2;
  if (den <= kFastLimit) {
    const auto orbit = doubling_orbit<std::uint64_t>(f.num().get_ui(), den.get_ui(), twos,
                                                     odd.get_ui());
    return assemble(orbit, den);
  }
  return assemble(doubling_orbit<Integer>(f.num(), den, twos, odd), den);
}

Rational takagi_exact(const DigitExpansion& e) { return takagi_exact(expansion_to_rational(e)); }

CertifiedValue takagi_certified(const Rational& x, std::size_t n_terms) {
  if (n_terms == 0) throw DomainError("certified evaluation needs at least one term");
  return CertifiedValue{partial_sum(x, n_terms), Rational(1).scaled_pow2(-static_cast<long>(n_terms)),
                        n_terms};
}

TailSplit split_tail(const DigitExpansion& e, std::size_t m) {
  if (m == 0) throw DomainError("split index starts at 1");
  const Rational x = expansion_to_rational(e);
  const long shift = static_cast<long>(m - 1);
  TailSplit split;
  split.head_point = digit_head(e, m);
  split.tail_point = shifted_tail(e, m - 1).scaled_pow2(-shift);
  split.head_value = partial_sum(x, m - 1);
  split.tail_value = takagi_exact(x) - split.head_value;
  return split;
}

}  // namespace takagi

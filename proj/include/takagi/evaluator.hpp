#pragma once

/**
 * @file evaluator.hpp
 * @brief Exact evaluation of the Takagi function and its pieces.
 *
 *   phi(x)   = dist(x, Z)
 *   g_k(x)   = dist(x, D_k) = 2^-(k-1) phi(2^(k-1) x),   D_k = 2^-(k-1) Z
 *   G_n(x)   = g_1(x) + ... + g_n(x)
 *   T(x)     = lim G_n(x)
 *
 * Every function accepts any rational; no unit-interval reduction is
 * required of the caller.
 */

#include <cstddef>

#include "takagi/digits.hpp"
#include "takagi/rational.hpp"

namespace takagi {

Rational phi(const Rational& x);

/// dist(x, D_k). Throws DomainError for k == 0.
Rational g_k(const Rational& x, std::size_t k);

/// g_k from the binary digits: a_k / 2^k + (1 - 2 a_k) sum_{j>k} a_j 2^-j.
Rational g_k_digit_formula(const DigitExpansion& e, std::size_t k);

/// G_n(x); G_0 = 0.
Rational partial_sum(const Rational& x, std::size_t n);

/// Exact T(x). Linear in preperiod plus period length of x's expansion.
Rational takagi_exact(const Rational& x);
Rational takagi_exact(const DigitExpansion& e);

/// G_n(x) with the tail bound |T(x) - G_n(x)| <= 2^-n.
struct CertifiedValue {
  Rational value;
  Rational error_bound;
  std::size_t terms_used = 0;

  Rational lower() const { return value - error_bound; }
  Rational upper() const { return value + error_bound; }
  bool contains(const Rational& y) const { return lower() <= y && y <= upper(); }
};

/// Throws DomainError for n_terms == 0.
CertifiedValue takagi_certified(const Rational& x, std::size_t n_terms);

/// Split of x and T(x) at digit index m (m >= 1):
///   head_point = sum_{j<m} a_j 2^-j,   tail_point = sum_{j>=m} a_j 2^-j
///   head_value = sum_{j<m} g_j(x),     tail_value = sum_{j>=m} g_j(x)
/// so head_point + tail_point = frac(x), head_value + tail_value = T(x),
/// and tail_value = 2^-(m-1) T(2^(m-1) tail_point).
struct TailSplit {
  Rational head_point;
  Rational tail_point;
  Rational head_value;
  Rational tail_value;
};

TailSplit split_tail(const DigitExpansion& e, std::size_t m);

}  // namespace takagi

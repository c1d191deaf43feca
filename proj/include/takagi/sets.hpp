#pragma once

/**
 * @file sets.hpp
 * @brief Digit-level membership tests for the maximum set and its relatives.
 *
 *   M        points where T = 2/3: a_{2n-1} + a_{2n} = 1 for all n >= 1
 *   A        alternating tails: a_n + a_{n+1} = 1 for all n >= m, some m
 *   ScriptA  superdifferentiable points: a_{m+2i} + a_{m+2i+1} = 1, i >= 0
 *
 * Conditions are read off the fraction digits of x = k + sum a_n 2^-n. T is
 * 1-periodic and even, and x -> 1 - x complements the digits, so this gives
 * the same answers as reducing to [0, 1) first.
 */

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "takagi/digits.hpp"
#include "takagi/rational.hpp"

namespace takagi {

enum class SetId { M, A, ScriptA };

std::string to_string(SetId id);

/// x = dyadic_part + 2^-(m-1) scaled_point with dyadic_part in D_m and
/// scaled_point in M.
struct SetWitness {
  SetId set = SetId::ScriptA;
  std::size_t m = 1;
  Rational dyadic_part;
  Rational scaled_point;
};

bool in_M(const DigitExpansion& e);

/// Minimal m with a_n + a_{n+1} = 1 for all n >= m.
std::optional<std::size_t> in_A(const DigitExpansion& e);

/// 4 / (3 * 2^m) + k / 2^(m-1). Throws DomainError for m == 0.
Rational a_identity_member(std::size_t m, const Integer& k);

/// For x in A: the (m, k) with x == a_identity_member(m, k). The index is
/// the alternating witness m when a_m = 1 and m + 1 when a_m = 0.
std::optional<std::pair<std::size_t, Integer>> a_identity_preimage(const DigitExpansion& e);

/// Decomposition over the minimal superdifferentiability witness; empty
/// exactly when the superdifferential is empty.
std::optional<SetWitness> in_script_A(const DigitExpansion& e);

/// T(x) == 2/3, decided by exact evaluation.
bool max_value_check(const DigitExpansion& e);

}  // namespace takagi

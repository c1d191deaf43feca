#pragma once

/**
 * @file differentials.hpp
 * @brief Slope bookkeeping, superdifferential classification and Dini data.
 *
 * Off the dyadics each g_n is locally linear with slope 1 - 2 a_n, so the
 * slope of G_n is the integer sum_{k<=n} (1 - 2 a_k). The superdifferential
 * of T at x is decided from the digit stream alone:
 *
 *   Dyadic           x in D                           -> empty
 *   TailAlternating  a_n + a_{n+1} = 1 for n >= m     -> c + [0,1] (a_m = 0)
 *                                                        c + [-1,0] (a_m = 1)
 *   PairSumming      a_{m+2i} + a_{m+2i+1} = 1, i>=0  -> {c}
 *   Irregular        otherwise                        -> empty
 *
 * with c = m - 1 - 2 sum_{j<m} a_j. The subdifferential is R on D and empty
 * elsewhere.
 */

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "takagi/digits.hpp"
#include "takagi/parallel.hpp"
#include "takagi/rational.hpp"

namespace takagi {

/// Slope of g_n at a non-dyadic x: 1 - 2 a_n. Throws DomainError on dyadic e.
int piece_slope(const DigitExpansion& e, std::size_t n);

/// Slope of G_n at a non-dyadic x. partial_slope(e, 0) == 0.
/// Throws DomainError on dyadic e.
long long partial_slope(const DigitExpansion& e, std::size_t n);

/// An integer or one of the two infinities.
struct ExtendedInt {
  enum class Kind { Finite, PlusInfinity, MinusInfinity };
  Kind kind = Kind::Finite;
  long long value = 0;

  static ExtendedInt finite(long long v) { return {Kind::Finite, v}; }
  static ExtendedInt plus_infinity() { return {Kind::PlusInfinity, 0}; }
  static ExtendedInt minus_infinity() { return {Kind::MinusInfinity, 0}; }

  bool is_finite() const { return kind == Kind::Finite; }
  /// "+inf", "-inf" or the decimal integer.
  std::string to_string() const;

  friend bool operator==(const ExtendedInt&, const ExtendedInt&) = default;
};

/// liminf and limsup of the partial slopes G'_n(x).
struct SlopeLimits {
  ExtendedInt liminf;
  ExtendedInt limsup;

  bool finite() const { return liminf.is_finite() && limsup.is_finite(); }
};

/// Throws DomainError on dyadic e.
SlopeLimits slope_limits(const DigitExpansion& e);

enum class CaseTag { Dyadic, TailAlternating, PairSumming, Irregular };

std::string to_string(CaseTag tag);

struct Classification {
  CaseTag tag = CaseTag::Irregular;
  std::optional<std::size_t> witness;    // minimal m; TailAlternating / PairSumming only
  std::optional<long long> slope_offset;  // c_x for that m

  friend bool operator==(const Classification&, const Classification&) = default;
};

/// a_n + a_{n+1} = 1 for every n >= m.
bool alternates_from(const DigitExpansion& e, std::size_t m);
/// a_{m+2i} + a_{m+2i+1} = 1 for every i >= 0.
bool pairs_sum_to_one_from(const DigitExpansion& e, std::size_t m);

/// Minimal m satisfying the respective tail condition, if any.
std::optional<std::size_t> min_alternating_witness(const DigitExpansion& e);
std::optional<std::size_t> min_pair_witness(const DigitExpansion& e);

/// m - 1 - 2 sum_{j<m} a_j.
long long slope_offset(const DigitExpansion& e, std::size_t m);

/// Total: exactly one case applies to every canonical expansion.
Classification classify(const DigitExpansion& e);

class SuperdiffResult {
 public:
  enum class Kind { Empty, Singleton, Interval };

  static SuperdiffResult empty() { return SuperdiffResult(Kind::Empty, 0); }
  static SuperdiffResult singleton(long long c) { return SuperdiffResult(Kind::Singleton, c); }
  /// [lo, lo + 1]; the interval always has unit length.
  static SuperdiffResult interval(long long lo) { return SuperdiffResult(Kind::Interval, lo); }

  Kind kind() const { return kind_; }
  bool is_empty() const { return kind_ == Kind::Empty; }
  long long lo() const { return lo_; }
  long long hi() const { return kind_ == Kind::Interval ? lo_ + 1 : lo_; }
  bool contains(const Rational& xi) const;

  /// "empty", "{c}" or "[lo,hi]".
  std::string to_string() const;

  friend bool operator==(const SuperdiffResult&, const SuperdiffResult&) = default;

 private:
  SuperdiffResult(Kind kind, long long lo) : kind_(kind), lo_(lo) {}
  Kind kind_;
  long long lo_;
};

SuperdiffResult superdifferential(const DigitExpansion& e);

/// The superdifferential computed from a caller-chosen witness m for the
/// given case. Throws DomainError when m does not satisfy that case's
/// tail condition.
SuperdiffResult superdifferential_from_witness(const DigitExpansion& e, CaseTag tag,
                                               std::size_t m);

enum class Subdifferential { Empty, AllReals };

Subdifferential subdifferential(const DigitExpansion& e);

/// Difference quotient of T between x and its mirror x' = 2 x_n - x, where
/// x_n is the left point of the level-n bracket.
struct MirrorQuotient {
  std::size_t level = 0;
  Rational mirror_point;
  Rational quotient;
  /// Slope predicted from the digits alone: G'_{j-1}(x) where j < n is the
  /// last index with a_j = 1 (so x_j < x_{j+1} = ... = x_n); when j = n-1
  /// this is G'_{n-2}(x) = G'_{n-1}(x) + 1. If a_1..a_{n-1} are all zero,
  /// x_1 = x_n is an integer, x' is x reflected through it and the
  /// prediction is 0.
  long long predicted = 0;
};

/// Throws DomainError for dyadic e or n < 3.
MirrorQuotient mirror_quotient(const DigitExpansion& e, std::size_t n);

/// Right difference quotient of T at a dyadic x with step 2^-p.
struct DyadicQuotient {
  std::size_t level = 0;  // minimal n with x in D_n
  std::size_t power = 0;  // p
  Rational quotient;      // (T(x + 2^-p) - T(x)) 2^p
  long long predicted = 0;  // sum_{j<=n} (1 - 2 a_j) + (p - n)
};

/// Throws DomainError for non-dyadic e or p <= level.
DyadicQuotient dyadic_quotient(const DigitExpansion& e, std::size_t p);

struct DiniConfig {
  std::size_t depth = 24;
  std::size_t width = 8;
  /// Number of grid depths, ending at `depth`.
  std::size_t window = 8;
  /// Minimum number of mirror levels, ending at `depth`.
  std::size_t mirror_window = 10;
  /// A per-depth extremal quotient beyond this magnitude flags divergence.
  double divergence_threshold = 1e3;
  /// Consecutive depths over which strict growth (to a new record) flags
  /// divergence.
  std::size_t growth_window = 3;
};

/// Sampled one-sided Dini data. The grid x +- j 2^-d, 1 <= j <= width, is
/// sampled at depths d in [depth - w + 1, depth] with w = min(window, depth - 2). For non-dyadic x the
/// mirror points 2 x_d - x (left) and 2 y_d - x (right) are added for the
/// last max(mirror_window, L + 2) levels up to depth, capped at depth - 2,
/// where L is the period length of x.
struct DiniEstimate {
  Rational lower_left;   // min left quotient, estimates d_-T(x)
  Rational upper_right;  // max right quotient, estimates D^+T(x)
  std::size_t depth = 0;
  bool divergent_up = false;
  bool divergent_down = false;
  std::vector<Rational> right_max_by_depth;  // grid only, one per sampled depth
  std::vector<Rational> left_min_by_depth;
};

/// Throws DomainError for depth < 4, width < 2, fewer than growth_window + 1
/// grid depths, or mirror_window == 0.
DiniEstimate dini_estimate(const Rational& x, const DiniConfig& config = {},
                           Exec exec = Exec::Parallel);

/// T has a local maximum at x iff x is superdifferentiable with c_x = 0.
bool is_local_max(const DigitExpansion& e);

}  // namespace takagi

#include "takagi/differentials.hpp"

#include <algorithm>
#include <array>

#include "takagi/errors.hpp"
#include "takagi/evaluator.hpp"

namespace takagi {

namespace {

void require_non_dyadic(const DigitExpansion& e, const char* what) {
  if (e.is_dyadic()) {
    throw DomainError(std::string(what) + " is undefined at the dyadic point " + e.to_string());
  }
}

// Decides good(n) = b(n) && b(n + step) && b(n + 2 step) && ... for
// b(n) = [a_n + a_{n+1} == 1] and step 1 or 2. Beyond the preperiod b is
// periodic with the digit period L, so good(n) there depends on the residue
// class (for step 2 and even L, on its parity as well); inside the
// preperiod good(n) = b(n) && good(n + step).
class TailCondition {
 public:
  TailCondition(const DigitExpansion& e, std::size_t step) : e_(e), step_(step) {
    const std::size_t p = e.preperiod_length();
    const std::size_t l = e.period_length();
    std::array<bool, 2> parity_ok{true, true};
    bool all_ok = true;
    for (std::size_t r = 0; r < l; ++r) {
      const bool ok = pair_sums_to_one(p + 1 + r);
      all_ok = all_ok && ok;
      parity_ok[r % 2] = parity_ok[r % 2] && ok;
    }
    periodic_all_ = all_ok;
    periodic_parity_ = parity_ok;

    head_.assign(p + 1, false);
    for (std::size_t n = p; n >= 1; --n) head_[n] = pair_sums_to_one(n) && good(n + step_);
  }

  bool good(std::size_t n) const {
    const std::size_t p = e_.preperiod_length();
    if (n <= p) return head_[n];
    if (step_ == 1 || e_.period_length() % 2 == 1) return periodic_all_;
    return periodic_parity_[(n - p - 1) % 2];
  }

  /// Every residue class beyond the preperiod shows up in [P+1, P+L].
  std::optional<std::size_t> min_witness() const {
    const std::size_t limit = e_.preperiod_length() + e_.period_length();
    for (std::size_t n = 1; n <= limit; ++n) {
      if (good(n)) return n;
    }
    return std::nullopt;
  }

 private:
  bool pair_sums_to_one(std::size_t n) const { return e_.digit(n) + e_.digit(n + 1) == 1; }

  const DigitExpansion& e_;
  std::size_t step_;
  bool periodic_all_ = false;
  std::array<bool, 2> periodic_parity_{false, false};
  std::vector<bool> head_;
};

// Strictly monotone over the last `window` entries and beyond every
// earlier entry.
bool grows_to_record(const std::vector<Rational>& v, std::size_t window, bool upward) {
  if (window < 2 || v.size() < window) return false;
  const std::size_t start = v.size() - window;
  const auto beyond = [upward](const Rational& a, const Rational& b) {
    return upward ? a > b : a < b;
  };
  for (std::size_t i = start + 1; i < v.size(); ++i) {
    if (!beyond(v[i], v[i - 1])) return false;
  }
  for (std::size_t i = 0; i < start; ++i) {
    if (!beyond(v.back(), v[i])) return false;
  }
  return true;
}

}  // namespace

int piece_slope(const DigitExpansion& e, std::size_t n) {
  require_non_dyadic(e, "the slope of g_n");
  return 1 - 2 * e.digit(n);
}

long long partial_slope(const DigitExpansion& e, std::size_t n) {
  require_non_dyadic(e, "the slope of G_n");
  return slope_offset(e, n + 1);
}

long long slope_offset(const DigitExpansion& e, std::size_t m) {
  long long sum = 0;
  for (std::size_t j = 1; j < m; ++j) sum += 1 - 2 * e.digit(j);
  return sum;
}

std::string ExtendedInt::to_string() const {
  switch (kind) {
    case Kind::PlusInfinity: return "+inf";
    case Kind::MinusInfinity: return "-inf";
    case Kind::Finite: break;
  }
  return std::to_string(value);
}

SlopeLimits slope_limits(const DigitExpansion& e) {
  require_non_dyadic(e, "slope limits");
  const std::size_t p = e.preperiod_length();
  const std::size_t l = e.period_length();
  long long drift = 0;
  for (Bit a : e.period()) drift += 1 - 2 * a;
  if (drift > 0) return {ExtendedInt::plus_infinity(), ExtendedInt::plus_infinity()};
  if (drift < 0) return {ExtendedInt::minus_infinity(), ExtendedInt::minus_infinity()};

  // G'_n is periodic for n > P; one period covers every value it keeps taking.
  long long g = slope_offset(e, p + 1);
  long long lo = 0;
  long long hi = 0;
  for (std::size_t r = 1; r <= l; ++r) {
    g += 1 - 2 * e.digit(p + r);
    lo = r == 1 ? g : std::min(lo, g);
    hi = r == 1 ? g : std::max(hi, g);
  }
  return {ExtendedInt::finite(lo), ExtendedInt::finite(hi)};
}

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::Dyadic: return "Dyadic";
    case CaseTag::TailAlternating: return "TailAlternating";
    case CaseTag::PairSumming: return "PairSumming";
    case CaseTag::Irregular: return "Irregular";
  }
  return "Irregular";
}

bool alternates_from(const DigitExpansion& e, std::size_t m) {
  if (m == 0) throw DomainError("witness index starts at 1");
  return TailCondition(e, 1).good(m);
}

bool pairs_sum_to_one_from(const DigitExpansion& e, std::size_t m) {
  if (m == 0) throw DomainError("witness index starts at 1");
  return TailCondition(e, 2).good(m);
}

std::optional<std::size_t> min_alternating_witness(const DigitExpansion& e) {
  return TailCondition(e, 1).min_witness();
}

std::optional<std::size_t> min_pair_witness(const DigitExpansion& e) {
  return TailCondition(e, 2).min_witness();
}

Classification classify(const DigitExpansion& e) {
  if (e.is_dyadic()) return {CaseTag::Dyadic, std::nullopt, std::nullopt};
  if (const auto m = min_alternating_witness(e)) {
    return {CaseTag::TailAlternating, m, slope_offset(e, *m)};
  }
  if (const auto m = min_pair_witness(e)) {
    return {CaseTag::PairSumming, m, slope_offset(e, *m)};
  }
  return {CaseTag::Irregular, std::nullopt, std::nullopt};
}

bool SuperdiffResult::contains(const Rational& xi) const {
  switch (kind_) {
    case Kind::Empty: return false;
    case Kind::Singleton: return xi == Rational(lo_);
    case Kind::Interval: return Rational(lo_) <= xi && xi <= Rational(lo_ + 1);
  }
  return false;
}

std::string SuperdiffResult::to_string() const {
  switch (kind_) {
    case Kind::Empty: return "empty";
    case Kind::Singleton: return "{" + std::to_string(lo_) + "}";
    case Kind::Interval:
      return "[" + std::to_string(lo_) + "," + std::to_string(lo_ + 1) + "]";
  }
  return "empty";
}

SuperdiffResult superdifferential_from_witness(const DigitExpansion& e, CaseTag tag,
                                               std::size_t m) {
  switch (tag) {
    case CaseTag::TailAlternating: {
      if (e.is_dyadic() || !alternates_from(e, m)) {
        throw DomainError("m = " + std::to_string(m) + " is not an alternating-tail witness");
      }
      const long long c = slope_offset(e, m);
      return SuperdiffResult::interval(e.digit(m) == 0 ? c : c - 1);
    }
    case CaseTag::PairSumming: {
      if (e.is_dyadic() || min_alternating_witness(e) || !pairs_sum_to_one_from(e, m)) {
        throw DomainError("m = " + std::to_string(m) + " is not a pair-summing witness");
      }
      return SuperdiffResult::singleton(slope_offset(e, m));
    }
    case CaseTag::Dyadic:
    case CaseTag::Irregular:
      break;
  }
  throw DomainError("case " + to_string(tag) + " has no witness");
}

SuperdiffResult superdifferential(const DigitExpansion& e) {
  const Classification c = classify(e);
  if (!c.witness) return SuperdiffResult::empty();
  return superdifferential_from_witness(e, c.tag, *c.witness);
}

Subdifferential subdifferential(const DigitExpansion& e) {
  return e.is_dyadic() ? Subdifferential::AllReals : Subdifferential::Empty;
}

MirrorQuotient mirror_quotient(const DigitExpansion& e, std::size_t n) {
  require_non_dyadic(e, "the mirror quotient");
  if (n < 3) throw DomainError("mirror quotient needs level n >= 3");
  const Rational x = expansion_to_rational(e);
  const NeighborBracket bracket = neighbor_bracket(e, n);
  MirrorQuotient out;
  out.level = n;
  out.mirror_point = bracket.left.scaled_pow2(1) - x;
  out.quotient = (takagi_exact(out.mirror_point) - takagi_exact(x)) / (out.mirror_point - x);

  std::size_t j = n - 1;
  while (j >= 1 && e.digit(j) == 0) --j;
  out.predicted = j >= 1 ? partial_slope(e, j - 1) : 0;
  return out;
}

DyadicQuotient dyadic_quotient(const DigitExpansion& e, std::size_t p) {
  const auto level = dyadic_level(e);
  if (!level) throw DomainError("dyadic quotient needs a dyadic point, got " + e.to_string());
  if (p <= *level) {
    throw DomainError("dyadic quotient needs p > " + std::to_string(*level) + ", got " +
                      std::to_string(p));
  }
  const Rational x = expansion_to_rational(e);
  const long shift = static_cast<long>(p);
  DyadicQuotient out;
  out.level = *level;
  out.power = p;
  out.quotient = (takagi_exact(x + Rational(1).scaled_pow2(-shift)) - takagi_exact(x)).scaled_pow2(shift);
  long long right_slopes = 0;
  for (std::size_t j = 1; j <= *level; ++j) right_slopes += 1 - 2 * e.digit(j);
  out.predicted = right_slopes + static_cast<long long>(p - *level);
  return out;
}

DiniEstimate dini_estimate(const Rational& x, const DiniConfig& config, Exec exec) {
  if (config.depth < 4) throw DomainError("Dini estimate needs depth >= 4");
  if (config.width < 2) throw DomainError("Dini estimate needs width >= 2");
  const std::size_t depths = std::min(config.window, config.depth - 2);
  if (depths < config.growth_window + 1) {
    throw DomainError("Dini estimate needs at least " + std::to_string(config.growth_window + 1) +
                      " grid depths, got " + std::to_string(depths));
  }
  if (config.mirror_window == 0) throw DomainError("Dini mirror window must be positive");
  const DigitExpansion e = rational_to_expansion(x);
  const std::size_t first = config.depth - depths + 1;

  // Sample layout: [x], then per depth the width right and width left grid
  // points, then per depth a left and a right mirror point (non-dyadic only).
  std::vector<Rational> points;
  points.reserve(1 + depths * 2 * config.width + 2 * config.mirror_window);
  points.push_back(x);
  for (std::size_t d = first; d <= config.depth; ++d) {
    const Rational unit = Rational(1).scaled_pow2(-static_cast<long>(d));
    for (std::size_t j = 1; j <= config.width; ++j) points.push_back(x + Rational(j) * unit);
    for (std::size_t j = 1; j <= config.width; ++j) points.push_back(x - Rational(j) * unit);
  }
  const std::size_t mirror_base = points.size();
  if (!e.is_dyadic()) {
    // the last max(mirror_window, L + 2) levels
    const std::size_t span =
        std::min(std::max(config.mirror_window, e.period_length() + 2), config.depth - 2);
    for (std::size_t d = config.depth - span + 1; d <= config.depth; ++d) {
      const NeighborBracket b = neighbor_bracket(e, d);
      points.push_back(b.left.scaled_pow2(1) - x);
      points.push_back(b.right.scaled_pow2(1) - x);
    }
  }

  const std::vector<Rational> values = takagi_values(points, exec);
  const auto quotient = [&](std::size_t i) { return (values[i] - values[0]) / (points[i] - x); };

  DiniEstimate out;
  out.depth = config.depth;
  std::optional<Rational> lower;
  std::optional<Rational> upper;
  for (std::size_t k = 0; k < depths; ++k) {
    const std::size_t base = 1 + k * 2 * config.width;
    std::optional<Rational> right_max;
    std::optional<Rational> left_min;
    for (std::size_t j = 0; j < config.width; ++j) {
      const Rational r = quotient(base + j);
      const Rational l = quotient(base + config.width + j);
      right_max = right_max ? max(*right_max, r) : r;
      left_min = left_min ? min(*left_min, l) : l;
    }
    out.right_max_by_depth.push_back(*right_max);
    out.left_min_by_depth.push_back(*left_min);
    upper = upper ? max(*upper, *right_max) : *right_max;
    lower = lower ? min(*lower, *left_min) : *left_min;
  }
  for (std::size_t i = mirror_base; i < points.size(); i += 2) {
    lower = min(*lower, quotient(i));
    upper = max(*upper, quotient(i + 1));
  }
  out.lower_left = *lower;
  out.upper_right = *upper;

  const Rational threshold(mpq_class(config.divergence_threshold));
  out.divergent_up = out.right_max_by_depth.back() > threshold ||
                     grows_to_record(out.right_max_by_depth, config.growth_window, true);
  out.divergent_down = out.left_min_by_depth.back() < -threshold ||
                       grows_to_record(out.left_min_by_depth, config.growth_window, false);
  return out;
}

bool is_local_max(const DigitExpansion& e) {
  const Classification c = classify(e);
  return c.slope_offset && *c.slope_offset == 0;
}

}  // namespace takagi

#pragma once

// Reference computations used only by tests. Each one takes a different
// route from the library code it checks.

#include <cstdint>
#include <vector>

#include "takagi/differentials.hpp"
#include "takagi/digits.hpp"
#include "takagi/rational.hpp"

namespace takagi::oracle {

struct RawExpansion {
  long long int_part = 0;
  std::vector<Bit> preperiod;
  std::vector<Bit> period;
};

/// Schoolbook long division of num/den (den > 0), detecting the cycle by
/// remembering the position of every remainder.
RawExpansion long_division(long long num, long long den);

/// k + sum pre_j 2^-j + 2^-P (sum per_j 2^-j) / (1 - 2^-L), term by term.
Rational geometric_value(long long int_part, const std::vector<Bit>& pre,
                         const std::vector<Bit>& period);

/// dist(x, 2^-(k-1) Z) from the two neighbouring grid points.
Rational grid_distance(const Rational& x, std::size_t k);

/// T on the doubling orbit: T(y) = phi(y) + T(2y mod 1) / 2, solved on the
/// eventual cycle with a remainder-keyed map.
Rational takagi_by_orbit(const Rational& x);

/// Case analysis by bounded window scans: candidates m in [1, P + 2L],
/// each checked over P + 2 lcm(2, L) further digits.
Classification classify_by_window(const DigitExpansion& e);

/// The superdifferential case table applied to a classification.
SuperdiffResult superdiff_from_table(const DigitExpansion& e, const Classification& c);

}  // namespace takagi::oracle

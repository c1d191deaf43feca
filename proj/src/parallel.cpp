#include "takagi/parallel.hpp"

#include <omp.h>

#include "takagi/evaluator.hpp"

namespace takagi {

std::vector<Rational> takagi_values(std::span<const Rational> xs, Exec exec) {
  return map_indices<Rational>(xs.size(), [&](std::size_t i) { return takagi_exact(xs[i]); },
                               exec);
}

int available_threads() { return omp_get_max_threads(); }

}  // namespace takagi

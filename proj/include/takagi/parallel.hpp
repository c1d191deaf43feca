#pragma once

/**
 * @file parallel.hpp
 * @brief Data-parallel kernels over batches of points.
 *
 * Each kernel has an OpenMP path and a serial reference path selected by
 * Exec. Both produce identical results in identical order; the serial path
 * exists so tests and benchmarks can compare against it.
 */

#include <cstddef>
#include <span>
#include <vector>

#include "takagi/rational.hpp"

namespace takagi {

enum class Exec { Serial, Parallel };

/// T(x) for every x, in input order.
std::vector<Rational> takagi_values(std::span<const Rational> xs, Exec exec = Exec::Parallel);

/// Applies fn to every index in [0, n) and collects results in index order.
/// fn must be safe to call concurrently.
template <class T, class Fn>
std::vector<T> map_indices(std::size_t n, Fn&& fn, Exec exec = Exec::Parallel) {
  std::vector<T> out(n);
  if (exec == Exec::Serial) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (long long i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
  }
  return out;
}

/// Number of OpenMP threads available to the parallel path.
int available_threads();

}  // namespace takagi

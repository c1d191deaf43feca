#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "takagi/evaluator.hpp"
#include "takagi/parallel.hpp"
#include "takagi/scan.hpp"

using namespace takagi;

TEST_CASE("batch evaluation matches pointwise evaluation in both modes") {
  std::mt19937_64 rng(51);
  std::vector<Rational> xs;
  for (int i = 0; i < 3000; ++i) xs.push_back(corpus::random_rational(rng, 20000));
  const auto serial = takagi_values(xs, Exec::Serial);
  const auto parallel = takagi_values(xs, Exec::Parallel);
  REQUIRE(serial.size() == xs.size());
  CHECK(serial == parallel);
  for (std::size_t i = 0; i < xs.size(); i += 97) CHECK(serial[i] == takagi_exact(xs[i]));
  CHECK(takagi_values({}, Exec::Parallel).empty());
}

TEST_CASE("map_indices keeps index order") {
  const auto sq = map_indices<long long>(1000, [](std::size_t i) { return static_cast<long long>(i * i); });
  for (std::size_t i = 0; i < sq.size(); ++i) CHECK(sq[i] == static_cast<long long>(i * i));
  CHECK(available_threads() >= 1);
}

TEST_CASE("scan rows are identical in both modes") {
  const auto a = scan(Rational(-1), Rational(2), Rational(1, 96), Exec::Serial);
  const auto b = scan(Rational(-1), Rational(2), Rational(1, 96), Exec::Parallel);
  REQUIRE(a.size() == 289);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].x == b[i].x);
    CHECK(a[i].value == b[i].value);
    CHECK(a[i].tag == b[i].tag);
    CHECK(a[i].superdiff == b[i].superdiff);
  }
}

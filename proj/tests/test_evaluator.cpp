#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "oracles.hpp"
#include "takagi/errors.hpp"
#include "takagi/evaluator.hpp"

using namespace takagi;

TEST_CASE("phi and g_k") {
  CHECK(phi(Rational(1, 3)) == Rational(1, 3));
  CHECK(phi(Rational(2, 3)) == Rational(1, 3));
  CHECK(phi(Rational(-7, 4)) == Rational(1, 4));
  CHECK(phi(Rational(5)) == Rational(0));
  CHECK(g_k(Rational(1, 3), 1) == Rational(1, 3));
  CHECK(g_k(Rational(1, 3), 2) == Rational(1, 6));
  CHECK(g_k(Rational(1, 3), 3) == Rational(1, 12));
  CHECK(g_k(Rational(3, 8), 4) == Rational(0));
  CHECK_THROWS_AS(g_k(Rational(1, 3), 0), DomainError);
}

TEST_CASE("known values") {
  const std::pair<Rational, Rational> table[] = {
      {Rational(1, 3), Rational(2, 3)},   {Rational(2, 3), Rational(2, 3)},
      {Rational(1, 5), Rational(8, 15)},  {Rational(2, 5), Rational(2, 3)},
      {Rational(1, 9), Rational(8, 21)},  {Rational(1, 7), Rational(22, 49)},
      {Rational(1, 4), Rational(1, 2)},   {Rational(1, 2), Rational(1, 2)},
      {Rational(3, 8), Rational(5, 8)},   {Rational(5, 12), Rational(2, 3)},
      {Rational(11, 12), Rational(1, 3)}, {Rational(1, 6), Rational(1, 2)},
      {Rational(4, 15), Rational(128, 225)}, {Rational(-1, 3), Rational(2, 3)},
      {Rational(1, 8), Rational(3, 8)},   {Rational(9, 16), Rational(5, 8)},
      {Rational(0), Rational(0)},         {Rational(7), Rational(0)},
  };
  for (const auto& [x, t] : table) {
    CAPTURE(x.to_string());
    CHECK(takagi_exact(x) == t);
    CHECK(takagi_exact(rational_to_expansion(x)) == t);
  }
}

TEST_CASE("exact value matches the orbit oracle on the corpus") {
  for (const auto& e : corpus::points()) {
    const Rational x = expansion_to_rational(e);
    CAPTURE(e.to_string());
    CHECK(takagi_exact(e) == oracle::takagi_by_orbit(x));
  }
  std::mt19937_64 rng(21);
  for (int i = 0; i < 2000; ++i) {
    const Rational x = corpus::random_rational(rng, 3000);
    CHECK(takagi_exact(x) == oracle::takagi_by_orbit(x));
  }
}

TEST_CASE("large denominators leave the machine-word fast path") {
  const Rational x(Integer(1), pow2(70) * 3);
  CHECK(takagi_exact(x) == oracle::takagi_by_orbit(x));
  // 2 has small order modulo these, so the periods stay short
  const Rational y(Integer(12345), pow2(65) - 1);
  CHECK(takagi_exact(y) == oracle::takagi_by_orbit(y));
  const Rational z(Integer(5), (pow2(64) + 1) * 3);
  CHECK(takagi_exact(z) == oracle::takagi_by_orbit(z));
}

TEST_CASE("g_k from digits equals the grid distance for k <= 40") {
  std::mt19937_64 rng(22);
  auto points = corpus::points();
  for (int i = 0; i < 200; ++i) points.push_back(rational_to_expansion(corpus::random_rational(rng, 10000)));
  for (const auto& e : points) {
    const Rational x = expansion_to_rational(e);
    for (std::size_t k = 1; k <= 40; ++k) {
      const Rational expected = oracle::grid_distance(x, k);
      REQUIRE(g_k(x, k) == expected);
      REQUIRE(g_k_digit_formula(e, k) == expected);
    }
  }
}

TEST_CASE("pair lemma: g_n + g_{n+1} <= 2^-n with equality iff digits differ") {
  for (const auto& e : corpus::points()) {
    const Rational x = expansion_to_rational(e);
    for (std::size_t n = 1; n <= 40; ++n) {
      const Rational s = g_k(x, n) + g_k(x, n + 1);
      const Rational bound = Rational(1).scaled_pow2(-static_cast<long>(n));
      CHECK(s <= bound);
      if (!e.is_dyadic()) CHECK((s == bound) == (e.digit(n) != e.digit(n + 1)));
    }
  }
}

TEST_CASE("partial sums, symmetry and range") {
  std::mt19937_64 rng(23);
  const Rational two_thirds(2, 3);
  for (int i = 0; i < 2000; ++i) {
    const Rational x = corpus::random_rational(rng, 5000);
    const Rational t = takagi_exact(x);
    CHECK(t >= Rational(0));
    CHECK(t <= two_thirds);
    CHECK(takagi_exact(-x) == t);
    CHECK(takagi_exact(x + Rational(3)) == t);
    CHECK(takagi_exact(Rational(1) - x) == t);
    // T(x/2) = phi(x/2) + T(x)/2 on [0, 1]
    const Rational u = x.frac();
    const Rational half = u.scaled_pow2(-1);
    CHECK(takagi_exact(half) == phi(half) + t.scaled_pow2(-1));
    CHECK(partial_sum(x, 0) == Rational(0));
    CHECK(partial_sum(x, 3) == g_k(x, 1) + g_k(x, 2) + g_k(x, 3));
  }
}

TEST_CASE("certified value brackets the exact value") {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 500; ++i) {
    const Rational x = corpus::random_rational(rng, 100000);
    const Rational t = takagi_exact(x);
    for (std::size_t n : {1u, 2u, 5u, 17u, 64u}) {
      const auto c = takagi_certified(x, n);
      CHECK(c.terms_used == n);
      CHECK(c.error_bound == Rational(1).scaled_pow2(-static_cast<long>(n)));
      CHECK(c.value == partial_sum(x, n));
      CHECK(c.contains(t));
    }
  }
  CHECK_THROWS_AS(takagi_certified(Rational(1, 3), 0), DomainError);
}

TEST_CASE("tail split") {
  const auto s = split_tail(rational_to_expansion(Rational(1, 5)), 2);
  CHECK(s.tail_value == Rational(1, 3));
  CHECK(s.tail_value == takagi_exact(Rational(2, 5)).scaled_pow2(-1));

  std::mt19937_64 rng(25);
  for (int i = 0; i < 200; ++i) {
    const auto e = corpus::random_expansion(rng, rng() % 8, 1 + rng() % 8);
    const Rational x = expansion_to_rational(e);
    for (std::size_t m = 1; m <= 12; ++m) {
      const auto sp = split_tail(e, m);
      CHECK(sp.head_point + sp.tail_point == x.frac());
      CHECK(sp.head_value + sp.tail_value == takagi_exact(x));
      CHECK(sp.head_value == partial_sum(x, m - 1));
      const long shift = static_cast<long>(m) - 1;
      CHECK(sp.tail_value == takagi_exact(sp.tail_point.scaled_pow2(shift)).scaled_pow2(-shift));
    }
  }
}

#include "supercong/special.hpp"

#include <doctest.h>

using namespace supercong;

TEST_CASE("Euler and Bernoulli numbers") {
  CHECK(euler_number(0) == 1);
  CHECK(euler_number(2) == -1);
  CHECK(euler_number(10) == -50521);
  CHECK(euler_number(7) == 0);
  CHECK(bernoulli_number(1) == Rat(-1, 2));
  CHECK(bernoulli_number(12) == Rat(-691, 2730));
  CHECK(bernoulli_number(-1) == 0);
  CHECK(bernoulli_number(13) == 0);
}

TEST_CASE("Bernoulli and Euler polynomials") {
  CHECK(bernoulli_poly_at(2, Rat(1, 3)) == Rat(-1, 18));
  CHECK(bernoulli_poly_at(0, Rat(1, 3)) == 1);
  CHECK(euler_poly_at(1, Rat(1, 4)) == Rat(-1, 4));
  CHECK(euler_poly_at(2, Rat(1, 2)) == Rat(-1, 4));
}

TEST_CASE("harmonic numbers p-adically") {
  // H_6 = 49/20: valuation 2 at p = 7.
  auto h = harmonic_padic(6, 7, 4);
  CHECK(h.v == 2);
  Int r = padic_reduce(h, 4);
  CHECK(r * 20 % 2401 == 49 % 2401);
}

TEST_CASE("binary quadratic form representations") {
  auto s = represent_form(13, 1, 1);
  REQUIRE(s.has_value());
  CHECK(s->x * s->x + s->y * s->y == 13);
  auto all = represent_form_all(13, 1, 1);
  CHECK(all.size() == 2);  // (3,2) and (2,3)
  CHECK(all[0].y <= all[1].y);
  CHECK_FALSE(represent_form(7, 1, 1).has_value());
  auto t = represent_form(7, 1, 3, 4);  // 4*7 = x^2 + 3 y^2 = 25+3
  REQUIRE(t.has_value());
  CHECK(t->x * t->x + 3 * t->y * t->y == 28);
}

TEST_CASE("eta coefficients") {
  auto c = eta_coeffs(20);
  CHECK(c[1] == 1);
  CHECK(c[5] == -6);
  CHECK(c[9] == 9);
  CHECK(c[13] == 10);
  CHECK(c[17] == -30);
  CHECK(c[2] == 0);
}

TEST_CASE("special value cache fast paths agree with exact tables") {
  for (long p : sieve_primes(7, 60)) {
    SpecialValueCache cache(p, 2);
    CHECK(cache.exact_available());
    CHECK(cache.euler_pm3_fast() == padic_reduce(cache.euler_pm3(1), 1));
    CHECK(cache.bernoulli_pm3_fast() == padic_reduce(cache.bernoulli_pm3(1), 1));
    CHECK(cache.bernoulli_pm5_fast() == padic_reduce(cache.bernoulli_pm5(1), 1));
  }
}

TEST_CASE("fermat quotient") {
  SpecialValueCache cache(7, 2);
  // q_7(2) = (2^6 - 1)/7 = 9.
  auto q = cache.fermat_quotient2(2);
  CHECK(padic_reduce(q, 2) == 9);
}

#include "supercong/arith.hpp"

#include <doctest.h>

using namespace supercong;

TEST_CASE("prime sieve and primality") {
  CHECK(sieve_primes(5, 30) == std::vector<long>{5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(sieve_primes(24, 28).empty());
  CHECK(is_prime(2));
  CHECK(is_prime(149));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(221));  // 13 * 17
}

TEST_CASE("jacobi symbol") {
  CHECK(jacobi(2, 7) == 1);
  CHECK(jacobi(2, 5) == -1);
  CHECK(jacobi(-1, 7) == -1);
  CHECK(jacobi(-1, 13) == 1);
  CHECK(jacobi(21, 35) == 0);
  CHECK(jacobi(Int(1001), Int(9907)) == -1);
}

TEST_CASE("valuations") {
  CHECK(valuation(Int(250), 5) == 3);
  CHECK(valuation(Rat(50, 4), 5) == 2);
  CHECK(valuation(Rat(3, 25), 5) == -2);
  CHECK(factorial_valuation(100, 5) == 24);
  CHECK(factorial_valuation(10, 3) == 4);
}

TEST_CASE("modular inverse") {
  PrimePower ctx(7, 2);
  CHECK(ctx.modulus == 49);
  Residue r = mod_inverse(Int(3), ctx);
  CHECK((r.value * 3) % 49 == 1);
  CHECK(inv_mod(Int(10), Int(121)) * 10 % 121 == 1);
}

TEST_CASE("padic construction") {
  auto x = padic_from_rational(Rat(10), 5, 3);
  CHECK_FALSE(x.zero);
  CHECK(x.v == 1);
  CHECK(x.u == 2);
  CHECK(x.m == 3);
  CHECK(x.abs_precision() == 4);

  // Units that carry p factors are renormalized; full loss becomes a marker.
  auto z = PadicTracked::make(5, 0, Int(25), 2);
  CHECK(z.zero);
  CHECK(z.t == 2);

  auto e = PadicTracked::exact_zero(7);
  CHECK(e.is_exact_zero());
  CHECK(e.congruent_zero(1000));
}

TEST_CASE("padic arithmetic") {
  // 6 + O(5^3) plus 4 + O(5) cancels the unit digit: 10 = 2*5, but the sum is
  // only known mod 5, so the result is a zero marker O(5).
  auto a = padic_from_rational(Rat(6), 5, 3);
  auto b = padic_from_rational(Rat(4), 5, 1);
  auto s = padic_add(a, b);
  CHECK(s.zero);
  CHECK(s.t == 1);

  auto x = padic_from_rational(Rat(75), 5, 4);   // 5^2 * 3
  auto y = padic_from_rational(Rat(2, 5), 5, 4); // 5^-1 * 2
  auto prod = padic_mul(x, y);
  CHECK(prod.v == 1);
  CHECK(prod.u == 6);

  auto q = padic_div(x, y);  // 75 / (2/5) = 375/2, valuation 3
  CHECK(q.v == 3);
  CHECK(padic_reduce(q, 4) * 2 % 625 == 375);

  CHECK(padic_sub(x, x).congruent_zero(6));
  CHECK_THROWS_AS(padic_div(x, PadicTracked::zero_to(5, 3)), precision_error);
}

TEST_CASE("padic reduce") {
  auto x = padic_from_rational(Rat(1, 3), 7, 2);
  Int r = padic_reduce(x, 2);
  CHECK(r * 3 % 49 == 1);
  CHECK_THROWS_AS(padic_reduce(x, 3), precision_error);
}

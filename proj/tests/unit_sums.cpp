#include "supercong/sums.hpp"

#include <doctest.h>

using namespace supercong;

namespace {

// Inclusive bounds of a summation range.
std::pair<long, long> range_bounds(SumRange r, long p, int a) {
  long pa = 1;
  for (int i = 0; i < a; ++i) pa *= p;
  switch (r) {
    case SumRange::FullPa: return {0, pa - 1};
    case SumRange::HalfPa: return {0, (pa - 1) / 2};
    case SumRange::OneToPam1: return {1, pa - 1};
    case SumRange::OneToPm1: return {1, p - 1};
    case SumRange::OneToHalf: return {1, (p - 1) / 2};
    case SumRange::UpperHalf: return {(p + 1) / 2, p - 1};
    case SumRange::UpperHalfPa: return {(pa + 1) / 2, pa - 1};
    case SumRange::FloorPa34: return {0, 3 * pa / 4};
    case SumRange::FloorPa58: return {0, 5 * pa / 8};
    case SumRange::FloorPa78: return {0, 7 * pa / 8};
    case SumRange::FloorPa23: return {0, 2 * pa / 3};
  }
  return {0, -1};
}

// Direct exact evaluation of a SumSpec over the rationals.
Rat brute_sum(const SumSpec& spec, long p, int a) {
  auto [lo, hi] = range_bounds(spec.range, p, a);
  long pa = 1;
  for (int i = 0; i < a; ++i) pa *= p;
  Rat total(0);
  Rat power(1);
  for (long i = 0; i < lo; ++i) power *= spec.base;
  for (long k = lo; k <= hi; ++k) {
    Rat term = spec.c0 + spec.c1 * k + spec.c2 * k * k;
    term *= power;
    power *= spec.base;
    if (spec.k_power > 0)
      for (int i = 0; i < spec.k_power; ++i) term *= k;
    else
      for (int i = 0; i < -spec.k_power; ++i) term /= k;
    bool zero_factor = false;
    for (const auto& f : spec.factors) {
      Rat b = binom_factor_value(f.kind, k);
      if (b == 0) { zero_factor = true; break; }
      for (int i = 0; i < f.exp; ++i) term *= b;
      for (int i = 0; i < -f.exp; ++i) term /= b;
    }
    if (zero_factor) continue;
    if (spec.extra_binom_upper) {
      mpz_class b;
      mpz_bin_uiui(b.get_mpz_t(), pa - 1, k);
      term *= b;
    }
    if (spec.character_mod3) term *= jacobi(Int(k), Int(3));
    if (spec.inner) term *= inner_convolution(*spec.inner, k);
    total += term;
  }
  return total;
}

void check_against_brute(const SumSpec& spec, long p, int a, int target_abs) {
  PadicTracked got = eval_sum(spec, p, a, target_abs, 2);
  Rat exact = brute_sum(spec, p, a);
  PadicTracked want = padic_from_rational(exact, p, target_abs + 2);
  PadicTracked diff = padic_sub(got, want);
  CAPTURE(p);
  CAPTURE(a);
  CHECK(diff.congruent_zero(target_abs));
}

}  // namespace

TEST_CASE("binomial factor values") {
  CHECK(binom_factor_value(BinomKind::CentralBinom, 4) == 70);
  CHECK(binom_factor_value(BinomKind::Binom3kK, 2) == 15);
  CHECK(binom_factor_value(BinomKind::Binom4k2k, 2) == 70);
  CHECK(binom_factor_value(BinomKind::Binom6k3k, 1) == 20);
  CHECK(binom_factor_value(BinomKind::Catalan, 3) == 5);
  CHECK(binom_factor_value(BinomKind::Catalan2, 2) == Rat(3));
  CHECK(binom_factor_value(BinomKind::CatalanEven, 2) == 14);
  CHECK(binom_factor_value(BinomKind::Binom2kKp1, 0) == 0);
  CHECK(binom_factor_value(BinomKind::Binom2kKp1, 3) == 15);
  CHECK(binom_factor_value(BinomKind::Binom3kKp1, 2) == 20);
  CHECK(binom_factor_value(BinomKind::Binom3kKm1, 2) == 6);
  CHECK(binom_factor_value(BinomKind::Binom4k2kp1, 1) == 4);
}

TEST_CASE("generalized binomials and inner convolutions") {
  CHECK(rational_binom(Rat(-1, 2), 3) == Rat(-5, 16));
  CHECK(rational_binom(Rat(5), 2) == 10);
  CHECK(inner_convolution(InnerShape::CentralPair, 0) == 1);
  CHECK(inner_convolution(InnerShape::CentralPair, 1) == 4);
  CHECK(inner_convolution(InnerShape::QuarticBeta, 1) == Rat(5, 8));
  CHECK(inner_convolution(InnerShape::CentralPairQuartic, 1) == 4);
}

TEST_CASE("eval_sum matches exact evaluation") {
  SumSpec classic{.range = SumRange::FullPa, .c0 = Rat(8), .c1 = Rat(21),
                  .factors = {{BinomKind::CentralBinom, 3}}};
  check_against_brute(classic, 7, 1, 3);
  check_against_brute(classic, 5, 2, 4);

  SumSpec inverse{.range = SumRange::OneToPm1, .k_power = -2,
                  .factors = {{BinomKind::CentralBinom, -1}}};
  check_against_brute(inverse, 11, 1, 2);

  SumSpec geometric{.range = SumRange::HalfPa, .base = Rat(1, 16),
                    .factors = {{BinomKind::CentralBinom, 2}}};
  check_against_brute(geometric, 7, 1, 3);
  check_against_brute(geometric, 5, 2, 3);

  SumSpec character{.range = SumRange::FullPa, .base = Rat(-1, 27),
                    .factors = {{BinomKind::CentralBinom, 2}, {BinomKind::Binom3kK, 1}},
                    .character_mod3 = true};
  check_against_brute(character, 7, 1, 2);

  SumSpec zero_at_origin{.range = SumRange::FullPa, .base = Rat(1, 16),
                         .factors = {{BinomKind::Binom2kKp1, 1},
                                     {BinomKind::CentralBinom, 1}}};
  check_against_brute(zero_at_origin, 11, 1, 2);

  SumSpec upper{.range = SumRange::UpperHalf, .base = Rat(1, 16),
                .factors = {{BinomKind::Catalan, 1}, {BinomKind::CentralBinom, 1}}};
  check_against_brute(upper, 13, 1, 2);

  SumSpec with_upper_binom{.range = SumRange::FullPa, .c0 = Rat(1),
                           .c1 = Rat(5), .base = Rat(1, 2304),
                           .factors = {{BinomKind::CentralBinom, 2},
                                       {BinomKind::Binom4k2k, 1}},
                           .extra_binom_upper = true};
  check_against_brute(with_upper_binom, 7, 1, 3);

  SumSpec with_inner{.range = SumRange::FullPa, .base = Rat(3, 2),
                     .inner = InnerShape::CentralPair};
  check_against_brute(with_inner, 7, 1, 3);

  SumSpec floor_range{.range = SumRange::FloorPa34, .base = Rat(-1, 1024),
                      .factors = {{BinomKind::CentralBinom, 2},
                                  {BinomKind::Binom4k2k, 1}}};
  check_against_brute(floor_range, 13, 1, 2);
}

TEST_CASE("central binomial stream") {
  CentralBinomStream stream(7, 2);
  const long expect[] = {1, 2, 6, 20, 70, 252};
  for (long e : expect) {
    PadicTracked v = stream.next();
    CHECK(padic_reduce(v, 2) == Int(e) % 49);
  }
}

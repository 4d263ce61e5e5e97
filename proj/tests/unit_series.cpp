#include "supercong/series.hpp"

#include <doctest.h>

using namespace supercong;

TEST_CASE("reference constants") {
  CHECK(reference_constant("pi", 30).str() ==
        "3.141592653589793238462643383279");
  CHECK(reference_constant("sqrt2", 20).str() == "1.41421356237309504880");
  CHECK(reference_constant("sqrt3", 20).str() == "1.73205080756887729352");
  CHECK(reference_constant("zeta3", 25).str() == "1.2020569031595942853997381");
  CHECK(reference_constant("K", 30).str() ==
        "0.781302412896486296867187429624");
}

TEST_CASE("independent zeta(4) paths agree") {
  Fixed a = reference_constant("zeta4", 30);
  Fixed b = reference_constant("zeta4-em", 30);
  Int diff = a.mantissa - b.mantissa;
  CHECK(abs(diff) <= 1);
}

TEST_CASE("Hurwitz zeta difference defines K") {
  Fixed h13 = reference_constant("hurwitz13", 30);
  Fixed h23 = reference_constant("hurwitz23", 30);
  Fixed k = reference_constant("K", 30);
  Int diff = (h13.mantissa - h23.mantissa) / 9 - k.mantissa;
  CHECK(abs(diff) <= 2);
}

TEST_CASE("series evaluation") {
  CHECK(series_ids().size() == 22);

  auto z = eval_series("zeilberger-pi2over6", 30, 60);
  CHECK(z.pass);
  CHECK(z.tail_sound);
  CHECK(z.terms <= 60);

  auto r = eval_series("ramanujan/4-pi", 30, 100);
  CHECK(r.pass);
  CHECK(r.tail_sound);

  auto a = eval_series("rem1.2/zeta3", 20, 100);
  CHECK(a.pass);
  CHECK(a.tail_sound);
}

TEST_CASE("headline accuracy bound") {
  auto h = headline_check();
  CHECK(h.pass);
}

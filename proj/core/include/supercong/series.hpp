#pragma once

#include "supercong/arith.hpp"

namespace supercong {

// Fixed-point decimal: value = mantissa / 10^digits, |error| < 10^{-digits}.
struct Fixed {
  Int mantissa;
  int digits = 0;

  std::string str() const;
  Rat to_rational() const;
};

// Reference constants computed from scratch in exact arithmetic:
//   pi (Machin arctangent series), sqrt2, sqrt3 (integer square roots),
//   zeta3 (central-binomial series), zeta4 (pi^4/90), zeta4-em
//   (independent Euler-Maclaurin path), hurwitz13 = zeta(2,1/3),
//   hurwitz23 = zeta(2,2/3), K = (hurwitz13 - hurwitz23)/9.
Fixed reference_constant(const std::string& name, int digits);

const std::vector<std::string>& series_ids();

struct SeriesResult {
  std::string id;
  long terms = 0;         // number of summed terms
  bool pass = false;      // |partial - target| <= 10^{-digits} + tail bound
  bool tail_sound = true; // alternation / ratio hypothesis held at every step
  Fixed value;            // partial sum
  Fixed target;           // claimed closed form
  std::string tail_bound; // certified bound on the omitted tail
  std::string error;      // |partial - target|
};

// Sums the series exactly (rationals) up to max_terms terms, stopping early
// once the certified tail bound drops below the requested accuracy.
SeriesResult eval_series(const std::string& id, int digits, long max_terms);

// 200 terms of the first series of eq (1.20)-type at 240-digit working
// precision; passes when |2S/pi^2 - 1| < 10^{-227}.
struct HeadlineResult {
  bool pass = false;
  std::string relative_error;
};
HeadlineResult headline_check();

}  // namespace supercong

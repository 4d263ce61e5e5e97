#pragma once

#include "supercong/arith.hpp"

#include <cstddef>
#include <optional>

namespace supercong {

// Euler numbers E_0..E_nmax (odd indices are zero).  The returned reference
// stays valid and may grow; calls are thread-safe.
const std::vector<Int>& euler_table(std::size_t nmax);

// Bernoulli numbers B_0..B_nmax with B_1 = -1/2.
const std::vector<Rat>& bernoulli_table(std::size_t nmax);

Rat bernoulli_number(long n);  // n = -1 is defined as 0 for convenience
Int euler_number(long n);

Rat bernoulli_poly_at(long n, const Rat& x);
Rat euler_poly_at(long n, const Rat& x);

// Largest index for which exact tables are used (default 1200, override via
// SUPERCONG_EXACT_CEILING).
long exact_ceiling();

// H_n = sum_{k=1}^n 1/k as a p-adic value computed modulo p^e.
PadicTracked harmonic_padic(long n, long p, int e);

struct FormSolution {
  long x = 0;
  long y = 0;
};

// Nonnegative solution of scale*p = c1*x^2 + d*y^2, if one exists.
std::optional<FormSolution> represent_form(long p, long c1, long d, long scale = 1);

// All nonnegative solutions, in increasing y.
std::vector<FormSolution> represent_form_all(long p, long c1, long d, long scale = 1);

// Coefficients a(1..nmax) of q * prod_{n>=1} (1-q^{4n})^6; index 0 unused.
std::vector<Int> eta_coeffs(std::size_t nmax);

// Lazily computed per-prime special values.  All accessors return values with
// at least the requested unit precision m (absolute precision for harmonic).
class SpecialValueCache {
 public:
  SpecialValueCache(long p, int guard);

  long p() const { return p_; }
  int guard() const { return guard_; }

  PadicTracked euler_pm3(int m) const;       // E_{p-3}
  PadicTracked bernoulli_pm3(int m) const;   // B_{p-3}
  PadicTracked bernoulli_pm5(int m) const;   // B_{p-5}, needs p >= 7
  PadicTracked fermat_quotient2(int m) const;  // q_p(2) = (2^{p-1}-1)/p
  PadicTracked harmonic_full(int abs_prec) const;     // H_{p-1}
  PadicTracked harmonic_half(int abs_prec) const;     // H_{(p-1)/2}
  PadicTracked harmonic_quarter(int abs_prec) const;  // H_{floor(p/4)}
  PadicTracked bernoulli_poly_third(int m) const;  // B_{p-2}(1/3), exact range only
  PadicTracked euler_poly_quarter(int m) const;    // E_{p-3}(1/4), exact range only

  // O(p) residues mod p, independent of the exact tables.
  Int euler_pm3_fast() const;
  Int bernoulli_pm3_fast() const;
  Int bernoulli_pm5_fast() const;

  bool exact_available() const { return p_ - 3 <= exact_ceiling(); }

 private:
  long p_;
  int guard_;
};

}  // namespace supercong

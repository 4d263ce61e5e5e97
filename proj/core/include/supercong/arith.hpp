#pragma once

#include <gmpxx.h>

#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace supercong {

using Int = mpz_class;
using Rat = mpq_class;

// Deterministic primality (trial division; inputs stay well below 10^7).
bool is_prime(long n);

// Ascending primes in [lo, hi]; empty range yields an empty vector.
std::vector<long> sieve_primes(long lo, long hi);

// Jacobi symbol (a/n) for odd n >= 1.
int jacobi(const Int& a, const Int& n);
int jacobi(long a, long n);

// p-adic valuation of a nonzero integer.
long valuation(const Int& n, long p);
// Valuation of a rational (num valuation minus den valuation).
long valuation(const Rat& q, long p);

Int pow_int(long base, unsigned long e);
Int pow_int(const Int& base, unsigned long e);

struct PrimePower {
  long p;
  int e;
  Int modulus;

  PrimePower(long p_, int e_);
};

struct Residue {
  Int value;  // in [0, modulus)
  PrimePower ctx;
};

// Inverse of a modulo p^e; rejects p | a.
Residue mod_inverse(const Int& a, const PrimePower& ctx);
Int inv_mod(const Int& a, const Int& modulus);

class precision_error : public std::runtime_error {
 public:
  explicit precision_error(const std::string& what) : std::runtime_error(what) {}
};

// A p-adic value with tracked precision: p^v * u + O(p^{v+m}) with gcd(u,p)=1,
// or a zero-to-precision marker O(p^t) (t = kExact for exact zero).
class PadicTracked {
 public:
  static constexpr long kExact = std::numeric_limits<long>::max() / 4;

  long p = 0;
  bool zero = true;
  long v = 0;  // valuation (non-zero case)
  Int u;       // unit in [1, p^m), coprime to p
  int m = 1;   // unit precision
  long t = kExact;  // zero case: absolute precision

  PadicTracked() = default;

  static PadicTracked exact_zero(long p);
  static PadicTracked zero_to(long p, long t);
  static PadicTracked make(long p, long v, Int unit, int m);

  long abs_precision() const { return zero ? t : v + m; }
  bool is_exact_zero() const { return zero && t == kExact; }

  // True when the value is ≡ 0 (mod p^e) at the tracked precision.
  bool congruent_zero(long e) const { return zero ? t >= e : v >= e; }

  std::string str() const;
};

PadicTracked padic_from_rational(const Rat& q, long p, int m);
PadicTracked padic_from_int(const Int& n, long p, int m);
PadicTracked padic_add(const PadicTracked& x, const PadicTracked& y);
PadicTracked padic_neg(const PadicTracked& x);
PadicTracked padic_sub(const PadicTracked& x, const PadicTracked& y);
PadicTracked padic_mul(const PadicTracked& x, const PadicTracked& y);
PadicTracked padic_div(const PadicTracked& x, const PadicTracked& y);

// The congruence class mod p^e; requires v >= 0 (or zero with t >= e) and
// abs_precision() >= e.
Int padic_reduce(const PadicTracked& x, long e);

// v_p(n!) by Legendre's formula.
long factorial_valuation(long n, long p);

}  // namespace supercong

#include "supercong/arith.hpp"

#include <cmath>
#include <sstream>

namespace supercong {

bool is_prime(long n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<long> sieve_primes(long lo, long hi) {
  std::vector<long> out;
  if (hi < 2 || hi < lo) return out;
  std::vector<bool> composite(hi + 1, false);
  for (long i = 2; i * i <= hi; ++i)
    if (!composite[i])
      for (long j = i * i; j <= hi; j += i) composite[j] = true;
  for (long n = std::max(lo, 2L); n <= hi; ++n)
    if (!composite[n]) out.push_back(n);
  return out;
}

int jacobi(const Int& a, const Int& n) { return mpz_jacobi(a.get_mpz_t(), n.get_mpz_t()); }

int jacobi(long a, long n) { return jacobi(Int(a), Int(n)); }

long valuation(const Int& n, long p) {
  if (n == 0) throw std::invalid_argument("valuation of zero");
  Int rest;
  Int pz(p);
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
}

long valuation(const Rat& q, long p) {
  if (q == 0) throw std::invalid_argument("valuation of zero");
  return valuation(Int(q.get_num()), p) - valuation(Int(q.get_den()), p);
}

Int pow_int(long base, unsigned long e) { return pow_int(Int(base), e); }

Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

PrimePower::PrimePower(long p_, int e_) : p(p_), e(e_) {
  if (p < 2 || e < 1) throw std::invalid_argument("bad prime power");
  modulus = pow_int(p, static_cast<unsigned long>(e));
}

Int inv_mod(const Int& a, const Int& modulus) {
  Int r;
  if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t()))
    throw std::invalid_argument("not invertible");
  return r;
}

Residue mod_inverse(const Int& a, const PrimePower& ctx) {
  if (mpz_divisible_ui_p(a.get_mpz_t(), static_cast<unsigned long>(ctx.p)))
    throw std::invalid_argument("mod_inverse: argument divisible by p");
  return Residue{inv_mod(a, ctx.modulus), ctx};
}

namespace {

long sat_add(long a, long b) {
  if (a >= PadicTracked::kExact || b >= PadicTracked::kExact) return PadicTracked::kExact;
  long s = a + b;
  return s >= PadicTracked::kExact ? PadicTracked::kExact : s;
}

}  // namespace

PadicTracked PadicTracked::exact_zero(long p) {
  PadicTracked x;
  x.p = p;
  return x;
}

PadicTracked PadicTracked::zero_to(long p, long t) {
  PadicTracked x;
  x.p = p;
  x.t = t >= kExact ? kExact : t;
  return x;
}

PadicTracked PadicTracked::make(long p, long v, Int unit, int m) {
  if (m < 1) return zero_to(p, v + m);
  Int mod = pow_int(p, static_cast<unsigned long>(m));
  unit = ((unit % mod) + mod) % mod;
  if (unit == 0) return zero_to(p, v + m);
  long extra = valuation(unit, p);
  if (extra > 0) {
    // value actually has higher valuation than announced
    if (extra >= m) return zero_to(p, v + m);
    v += extra;
    m -= static_cast<int>(extra);
    mod = pow_int(p, static_cast<unsigned long>(m));
    unit = (unit / pow_int(p, static_cast<unsigned long>(extra))) % mod;
  }
  PadicTracked x;
  x.p = p;
  x.zero = false;
  x.v = v;
  x.u = unit;
  x.m = m;
  x.t = 0;
  return x;
}

std::string PadicTracked::str() const {
  std::ostringstream os;
  if (zero) {
    if (is_exact_zero())
      os << "0 (exact, p=" << p << ")";
    else
      os << "O(" << p << "^" << t << ")";
  } else {
    os << p << "^" << v << " * " << u.get_str() << " + O(" << p << "^" << (v + m) << ")";
  }
  return os.str();
}

PadicTracked padic_from_int(const Int& n, long p, int m) {
  if (n == 0) return PadicTracked::exact_zero(p);
  long v = valuation(n, p);
  Int unit = n / pow_int(p, static_cast<unsigned long>(v));
  return PadicTracked::make(p, v, unit, m);
}

PadicTracked padic_from_rational(const Rat& q, long p, int m) {
  if (q == 0) return PadicTracked::exact_zero(p);
  Int num = q.get_num(), den = q.get_den();
  long vn = valuation(num, p), vd = valuation(den, p);
  num /= pow_int(p, static_cast<unsigned long>(vn));
  den /= pow_int(p, static_cast<unsigned long>(vd));
  Int mod = pow_int(p, static_cast<unsigned long>(m));
  Int unit = (num % mod) * inv_mod(den % mod, mod);
  return PadicTracked::make(p, vn - vd, unit, m);
}

PadicTracked padic_add(const PadicTracked& x, const PadicTracked& y) {
  if (x.p != y.p) throw std::invalid_argument("padic_add: mixed primes");
  long p = x.p;
  if (x.zero && y.zero) {
    if (x.is_exact_zero() && y.is_exact_zero()) return PadicTracked::exact_zero(p);
    return PadicTracked::zero_to(p, std::min(x.t, y.t));
  }
  if (x.zero || y.zero) {
    const PadicTracked& z = x.zero ? x : y;
    const PadicTracked& w = x.zero ? y : x;
    long a = std::min(z.t, w.v + static_cast<long>(w.m));
    if (a <= w.v) return PadicTracked::zero_to(p, a);
    return PadicTracked::make(p, w.v, w.u, static_cast<int>(a - w.v));
  }
  long a = std::min(x.v + static_cast<long>(x.m), y.v + static_cast<long>(y.m));
  long v0 = std::min(x.v, y.v);
  if (a <= v0) return PadicTracked::zero_to(p, a);
  Int mod = pow_int(p, static_cast<unsigned long>(a - v0));
  Int s = x.u * pow_int(p, static_cast<unsigned long>(x.v - v0)) +
          y.u * pow_int(p, static_cast<unsigned long>(y.v - v0));
  s %= mod;
  if (s < 0) s += mod;
  if (s == 0) return PadicTracked::zero_to(p, a);
  long extra = valuation(s, p);
  long v = v0 + extra;
  if (v >= a) return PadicTracked::zero_to(p, a);
  Int unit = s / pow_int(p, static_cast<unsigned long>(extra));
  return PadicTracked::make(p, v, unit, static_cast<int>(a - v));
}

PadicTracked padic_neg(const PadicTracked& x) {
  if (x.zero) return x;
  return PadicTracked::make(x.p, x.v, -x.u, x.m);
}

PadicTracked padic_sub(const PadicTracked& x, const PadicTracked& y) {
  return padic_add(x, padic_neg(y));
}

PadicTracked padic_mul(const PadicTracked& x, const PadicTracked& y) {
  if (x.p != y.p) throw std::invalid_argument("padic_mul: mixed primes");
  long p = x.p;
  if (x.is_exact_zero() || y.is_exact_zero()) return PadicTracked::exact_zero(p);
  if (x.zero && y.zero) return PadicTracked::zero_to(p, sat_add(x.t, y.t));
  if (x.zero || y.zero) {
    const PadicTracked& z = x.zero ? x : y;
    const PadicTracked& w = x.zero ? y : x;
    return PadicTracked::zero_to(p, sat_add(z.t, w.v));
  }
  int m = std::min(x.m, y.m);
  Int mod = pow_int(p, static_cast<unsigned long>(m));
  return PadicTracked::make(p, x.v + y.v, (x.u * y.u) % mod, m);
}

PadicTracked padic_div(const PadicTracked& x, const PadicTracked& y) {
  if (x.p != y.p) throw std::invalid_argument("padic_div: mixed primes");
  if (y.zero) throw precision_error("padic_div: divisor is a zero-to-precision value");
  long p = x.p;
  if (x.is_exact_zero()) return PadicTracked::exact_zero(p);
  if (x.zero) return PadicTracked::zero_to(p, x.t - y.v);
  int m = std::min(x.m, y.m);
  Int mod = pow_int(p, static_cast<unsigned long>(m));
  Int unit = (x.u % mod) * inv_mod(y.u % mod, mod);
  return PadicTracked::make(p, x.v - y.v, unit, m);
}

Int padic_reduce(const PadicTracked& x, long e) {
  if (e < 1) throw std::invalid_argument("padic_reduce: bad exponent");
  if (x.abs_precision() < e) throw precision_error("padic_reduce: insufficient precision");
  if (x.zero) return Int(0);
  if (x.v < 0) throw precision_error("padic_reduce: negative valuation");
  Int mod = pow_int(x.p, static_cast<unsigned long>(e));
  Int r = (pow_int(x.p, static_cast<unsigned long>(x.v)) * x.u) % mod;
  return r;
}

long factorial_valuation(long n, long p) {
  long s = 0;
  for (long q = n / p; q > 0; q /= p) s += q;
  return s;
}

}  // namespace supercong

#include "supercong/special.hpp"

#include <cmath>
#include <cstdlib>
#include <mutex>

namespace supercong {

namespace {

std::mutex g_table_mutex;

// Boustrophedon (zigzag) numbers A_0, A_1, ...: a(n,k)=a(n,k-1)+a(n-1,n-k),
// A_n = a(n,n).  One run feeds both Euler and Bernoulli tables.
std::vector<Int>& zigzag_locked(std::size_t nmax) {
  static std::vector<Int> A;
  static std::vector<Int> row;  // last triangle row, reversed-access form
  if (A.empty()) {
    A.reserve(std::max<std::size_t>(nmax + 1, 1301));
    row.reserve(std::max<std::size_t>(nmax + 2, 1302));
    A.push_back(1);
    row.push_back(1);
  }
  while (A.size() <= nmax) {
    std::size_t n = A.size();
    std::vector<Int> next(n + 1);
    next[0] = 0;
    for (std::size_t k = 1; k <= n; ++k) next[k] = next[k - 1] + row[n - k];
    A.push_back(next[n]);
    row = std::move(next);
  }
  return A;
}

Int binom_ui(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Residue known modulo p^e, as a tracked p-adic value.
PadicTracked residue_to_padic(const Int& s, long p, int e) {
  Int mod = pow_int(p, static_cast<unsigned long>(e));
  Int r = ((s % mod) + mod) % mod;
  if (r == 0) return PadicTracked::zero_to(p, e);
  long v = valuation(r, p);
  return PadicTracked::make(p, v, r / pow_int(p, static_cast<unsigned long>(v)),
                            static_cast<int>(e - v));
}

}  // namespace

const std::vector<Int>& euler_table(std::size_t nmax) {
  std::lock_guard<std::mutex> lock(g_table_mutex);
  static std::vector<Int> E;
  if (E.empty()) E.reserve(std::max<std::size_t>(nmax + 1, 1301));
  const auto& A = zigzag_locked(nmax);
  while (E.size() <= nmax) {
    std::size_t n = E.size();
    if (n % 2 == 1)
      E.push_back(0);
    else
      E.push_back((n / 2) % 2 == 0 ? A[n] : -A[n]);
  }
  return E;
}

const std::vector<Rat>& bernoulli_table(std::size_t nmax) {
  std::lock_guard<std::mutex> lock(g_table_mutex);
  static std::vector<Rat> B;
  if (B.empty()) B.reserve(std::max<std::size_t>(nmax + 1, 1301));
  const auto& A = zigzag_locked(nmax);
  while (B.size() <= nmax) {
    std::size_t n = B.size();
    if (n == 0)
      B.push_back(Rat(1));
    else if (n == 1)
      B.push_back(Rat(-1, 2));
    else if (n % 2 == 1)
      B.push_back(Rat(0));
    else {
      std::size_t h = n / 2;
      Int four_h = pow_int(4, h);
      Rat b(Int(n) * A[n - 1], four_h * (four_h - 1));
      b.canonicalize();
      if (h % 2 == 0) b = -b;
      B.push_back(b);
    }
  }
  return B;
}

Rat bernoulli_number(long n) {
  if (n == -1) return Rat(0);
  if (n < 0) throw std::invalid_argument("bernoulli_number: negative index");
  return bernoulli_table(static_cast<std::size_t>(n))[n];
}

Int euler_number(long n) {
  if (n < 0) throw std::invalid_argument("euler_number: negative index");
  return euler_table(static_cast<std::size_t>(n))[n];
}

Rat bernoulli_poly_at(long n, const Rat& x) {
  const auto& B = bernoulli_table(static_cast<std::size_t>(n));
  Rat acc(0), xpow(1);
  // sum over k from n down to 0 of C(n,k) B_k x^{n-k}
  for (long k = n; k >= 0; --k) {
    acc += Rat(binom_ui(n, k)) * B[k] * xpow;
    xpow *= x;
  }
  return acc;
}

Rat euler_poly_at(long n, const Rat& x) {
  const auto& E = euler_table(static_cast<std::size_t>(n));
  Rat y = x - Rat(1, 2);
  Rat acc(0), ypow(1);
  for (long k = n; k >= 0; --k) {
    Rat t(binom_ui(n, k) * E[k], pow_int(2, k));
    t.canonicalize();
    acc += t * ypow;
    ypow *= y;
  }
  return acc;
}

long exact_ceiling() {
  static long c = [] {
    if (const char* s = std::getenv("SUPERCONG_EXACT_CEILING")) {
      long v = std::atol(s);
      if (v > 0) return v;
    }
    return 1200L;
  }();
  return c;
}

PadicTracked harmonic_padic(long n, long p, int e) {
  if (n <= 0) return PadicTracked::exact_zero(p);
  Int mod = pow_int(p, static_cast<unsigned long>(e));
  Int s = 0;
  for (long k = 1; k <= n; ++k) {
    if (k % p == 0) continue;
    s += inv_mod(Int(k), mod);
  }
  PadicTracked total = residue_to_padic(s, p, e);
  if (n >= p) {
    PadicTracked inner = harmonic_padic(n / p, p, e + 1);
    PadicTracked pinv = PadicTracked::make(p, -1, 1, e + 1);
    total = padic_add(total, padic_mul(pinv, inner));
  }
  return total;
}

std::vector<FormSolution> represent_form_all(long p, long c1, long d, long scale) {
  std::vector<FormSolution> out;
  long target = scale * p;
  for (long y = 0; d * y * y <= target; ++y) {
    long r = target - d * y * y;
    if (r % c1 != 0) continue;
    long s = r / c1;
    long x = static_cast<long>(std::sqrt(static_cast<double>(s)));
    while (x * x < s) ++x;
    while (x > 0 && x * x > s) --x;
    if (x * x == s) out.push_back(FormSolution{x, y});
  }
  return out;
}

std::optional<FormSolution> represent_form(long p, long c1, long d, long scale) {
  auto all = represent_form_all(p, c1, d, scale);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::vector<Int> eta_coeffs(std::size_t nmax) {
  std::vector<Int> c(nmax + 1, Int(0));
  if (nmax >= 1) c[1] = 1;
  for (std::size_t n = 1; 4 * n <= nmax; ++n) {
    // multiply by (1 - q^{4n})^6
    std::vector<Int> next(nmax + 1, Int(0));
    for (std::size_t j = 0; j <= 6; ++j) {
      std::size_t shift = 4 * n * j;
      if (shift > nmax) break;
      Int coef = binom_ui(6, j);
      if (j % 2 == 1) coef = -coef;
      for (std::size_t i = 0; i + shift <= nmax; ++i)
        if (c[i] != 0) next[i + shift] += coef * c[i];
    }
    c = std::move(next);
  }
  return c;
}

SpecialValueCache::SpecialValueCache(long p, int guard) : p_(p), guard_(guard) {
  if (p < 3) throw std::invalid_argument("SpecialValueCache: p must be an odd prime");
}

PadicTracked SpecialValueCache::euler_pm3(int m) const {
  if (exact_available()) return padic_from_int(euler_number(p_ - 3), p_, m);
  if (m > 1) throw precision_error("euler_pm3: beyond exact range only mod p is available");
  return residue_to_padic(euler_pm3_fast(), p_, 1);
}

PadicTracked SpecialValueCache::bernoulli_pm3(int m) const {
  if (exact_available()) return padic_from_rational(bernoulli_number(p_ - 3), p_, m);
  if (m > 1) throw precision_error("bernoulli_pm3: beyond exact range only mod p is available");
  return residue_to_padic(bernoulli_pm3_fast(), p_, 1);
}

PadicTracked SpecialValueCache::bernoulli_pm5(int m) const {
  if (p_ < 7) throw std::invalid_argument("bernoulli_pm5: needs p >= 7");
  if (exact_available()) return padic_from_rational(bernoulli_number(p_ - 5), p_, m);
  if (m > 1) throw precision_error("bernoulli_pm5: beyond exact range only mod p is available");
  return residue_to_padic(bernoulli_pm5_fast(), p_, 1);
}

PadicTracked SpecialValueCache::fermat_quotient2(int m) const {
  Int mod = pow_int(p_, static_cast<unsigned long>(m + 1));
  Int t;
  Int two(2);
  mpz_powm_ui(t.get_mpz_t(), two.get_mpz_t(), static_cast<unsigned long>(p_ - 1),
              mod.get_mpz_t());
  t = (t - 1) / p_;
  return residue_to_padic(t, p_, m);
}

PadicTracked SpecialValueCache::harmonic_full(int abs_prec) const {
  return harmonic_padic(p_ - 1, p_, abs_prec);
}

PadicTracked SpecialValueCache::harmonic_half(int abs_prec) const {
  return harmonic_padic((p_ - 1) / 2, p_, abs_prec);
}

PadicTracked SpecialValueCache::harmonic_quarter(int abs_prec) const {
  return harmonic_padic(p_ / 4, p_, abs_prec);
}

PadicTracked SpecialValueCache::bernoulli_poly_third(int m) const {
  if (!exact_available())
    throw precision_error("bernoulli_poly_third: exact range only");
  return padic_from_rational(bernoulli_poly_at(p_ - 2, Rat(1, 3)), p_, m);
}

PadicTracked SpecialValueCache::euler_poly_quarter(int m) const {
  if (!exact_available()) throw precision_error("euler_poly_quarter: exact range only");
  return padic_from_rational(euler_poly_at(p_ - 3, Rat(1, 4)), p_, m);
}

Int SpecialValueCache::euler_pm3_fast() const {
  // Lehmer: sum_{k<=p/4} 1/k^2 = (-1)^{(p-1)/2} * 4 * E_{p-3}  (mod p)
  Int mod(p_);
  Int s = 0;
  for (long k = 1; k <= p_ / 4; ++k) s += inv_mod(Int(k) * k, mod);
  s %= mod;
  if (((p_ - 1) / 2) % 2 == 1) s = mod - s;
  s = (s * inv_mod(Int(4), mod)) % mod;
  return s;
}

Int SpecialValueCache::bernoulli_pm3_fast() const {
  // H_{p-1} = -(1/3) p^2 B_{p-3}  (mod p^3)
  Int mod = pow_int(p_, 3);
  Int s = 0;
  for (long k = 1; k < p_; ++k) s += inv_mod(Int(k), mod);
  s %= mod;
  Int w = (s / (Int(p_) * p_)) % p_;
  Int r = (Int(p_) - (w * 3) % p_) % p_;
  return r;
}

Int SpecialValueCache::bernoulli_pm5_fast() const {
  // sum_{k<p} 1/k^3 = -(6/5) p^2 B_{p-5}  (mod p^3)
  Int mod = pow_int(p_, 3);
  Int s = 0;
  for (long k = 1; k < p_; ++k) s += inv_mod(Int(k) * k * k % mod, mod);
  s %= mod;
  Int w = (s / (Int(p_) * p_)) % p_;
  Int r = (-(w * 5) * inv_mod(Int(6), Int(p_))) % p_;
  return ((r % p_) + p_) % p_;
}

}  // namespace supercong

#include "supercong/identities.hpp"

#include "supercong/special.hpp"
#include "supercong/sums.hpp"

#include <stdexcept>

namespace supercong {

namespace {

Int C(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rat frac(const Int& n, const Int& d) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

Int ipow(const Int& b, long e) { return pow_int(b, static_cast<unsigned long>(e)); }

Int spow(long b, long e) {  // signed base
  Int r = pow_int(std::abs(b), static_cast<unsigned long>(e));
  if (b < 0 && e % 2 == 1) r = -r;
  return r;
}

Rat harm(long n) {
  Rat h(0);
  for (long k = 1; k <= n; ++k) h += frac(1, Int(k));
  return h;
}

Rat harm_alt(long n) {
  Rat h(0);
  for (long k = 1; k <= n; ++k) h += frac(k % 2 ? -1 : 1, Int(k));
  return h;
}

// H_0..H_n as a table (identities use H at many indices).
std::vector<Rat> harm_table(long n) {
  std::vector<Rat> H(n + 1, Rat(0));
  for (long k = 1; k <= n; ++k) H[k] = H[k - 1] + frac(1, Int(k));
  return H;
}

bool congr(const Rat& lhs, const Rat& rhs, long p, int e) {
  Rat d = lhs - rhs;
  if (d == 0) return true;
  return valuation(d, p) >= e;
}

int sgn_pow(long e) { return e % 2 == 0 ? 1 : -1; }

// Single odd-x solution of p = x^2 + y^2, or 0 when none.
long odd_x_square_split(long p, long* y_out = nullptr) {
  for (const auto& s : represent_form_all(p, 1, 1, 1))
    if (s.x % 2 == 1) {
      if (y_out) *y_out = s.y;
      return s.x;
    }
  return 0;
}

bool identity_holds(const std::string& id, long n) {
  Rat sum25(0);
  for (long k = 1; k <= n; ++k) sum25 += frac(C(2 * k, k), Int(k));

  if (id == "eq2.5") {
    Rat rhs(0);
    for (long k = 1; k <= n; ++k) {
      Int cnk = C(n, k);
      rhs += frac(1, Int(k) * k * cnk * cnk);
    }
    rhs *= frac(Int(n + 1) * C(2 * n + 1, n), Int(3));
    return sum25 == rhs;
  }
  if (id == "eq2.6") {
    Rat lhs(0);
    for (long k = 1; k <= n; ++k)
      lhs += frac(Int(sgn_pow(k)), Int(k) * k * C(n, k) * C(n + k, k));
    Rat r1(0), r2(0);
    for (long k = 1; k <= n; ++k) {
      r1 += frac(1, Int(k) * k * C(2 * k, k));
      r2 += frac(Int(sgn_pow(k)), Int(k) * k);
    }
    return lhs == Rat(sgn_pow(n - 1)) * (3 * r1 + 2 * r2);
  }
  if (id == "eq2.7") {
    Rat lhs(0), r1(0), r2(0);
    for (long k = 1; k <= n; ++k) {
      lhs += frac(1, Int(k) * k * C(n + k, k));
      r1 += frac(1, Int(k) * k * C(2 * k, k));
      r2 += frac(1, Int(k) * k);
    }
    return lhs == 3 * r1 - r2;
  }
  if (id == "eq3.4" || id == "eq3.7" || id == "eq3.8") {
    auto H = harm_table(2 * n);
    Rat s34(0), s37(0), s38(0);
    for (long k = 0; k <= n; ++k) {
      Rat w = Rat(C(n, k) * spow(-2, n - k));
      s34 += w * (H[n + k] - H[n - k]);
      s37 += w * H[n + k];
      s38 += w * H[n - k];
    }
    Rat hn = H[n], ha = harm_alt(n);
    if (id == "eq3.4") return Rat(sgn_pow(n)) * s34 == ha - hn / 2;
    if (id == "eq3.7") return s37 == Rat(sgn_pow(n)) * hn / 2;
    return s38 == Rat(sgn_pow(n)) * (hn - ha);
  }
  if (id == "eq3.5" || id == "eq3.6" || id == "eq3.9" || id == "prodinger" ||
      id == "os36" || id == "os37" || id == "chu-vandermonde-1" ||
      id == "chu-vandermonde-2") {
    auto H = harm_table(2 * n);
    Rat s35(0), s36(0), s39(0), sp(0), so36(0), so37(0), cv1(0), cv2(0);
    for (long k = 0; k <= n; ++k) {
      Rat w = Rat(C(n, k) * C(n + k, k) * sgn_pow(k));
      Rat dh = H[n + k] - H[n - k];
      s35 += w * dh;
      s36 += w * k * dh;
      s39 += w * H[n - k];
      sp += w * H[n + k];
      so36 += w * k * H[n + k];
      so37 += w * k * H[n - k];
      cv1 += w;
      cv2 += w * k;
    }
    Rat hn = H[n];
    int sn = sgn_pow(n);
    if (id == "eq3.5") return Rat(sn) * s35 == Rat(3, 2) * sum25;
    if (id == "eq3.6")
      return Rat(sn) * s36 ==
             Rat(2 * n + 1) * (1 - Rat(C(2 * n, n))) + Rat(3, 2) * n * (n + 1) * sum25;
    if (id == "eq3.9") return s39 == Rat(2 * sn) * hn - Rat(3 * sn, 2) * sum25;
    if (id == "prodinger") return sp == Rat(2 * sn) * hn;
    if (id == "os36") return Rat(sn) * so36 == Rat(2 * n) * (n + 1) * hn - Rat(n) * n;
    if (id == "os37")
      return Rat(sn) * so37 == Rat(2 * n + 1) * C(2 * n, n) - Rat(n + 1) * (n + 1) +
                                   Rat(2 * n) * (n + 1) * hn -
                                   Rat(3, 2) * n * (n + 1) * sum25;
    if (id == "chu-vandermonde-1") return cv1 == Rat(sn);
    return cv2 == Rat(sn) * n * (n + 1);
  }
  if (id == "ahlgren-ono") {
    auto H = harm_table(2 * n);
    Rat lhs(0);
    for (long k = 1; k <= n; ++k) {
      Int w = C(n, k) * C(n + k, k);
      lhs += Rat(w * w) * (1 + Rat(2 * k) * (H[n + k] + H[n - k]) - Rat(4 * k) * H[k]);
    }
    return lhs == 0;
  }
  if (id == "trig-sum") {
    Rat lhs(0);
    for (long k = 0; k <= n; ++k) lhs += Rat(spow(-2, k) * C(n + k, 2 * k));
    return lhs == Rat(jacobi(2, 2 * n + 1));
  }
  if (id == "gosper-1") {
    Rat lhs(0);
    for (long k = 0; k <= n; ++k)
      lhs += frac(Int(9 * k + 2) * C(2 * k, k) * C(3 * k, k), ipow(27, k));
    return lhs == frac(Int(3 * n + 1) * (3 * n + 2) * C(2 * n, n) * C(3 * n, n),
                       ipow(27, n));
  }
  if (id == "gosper-2") {
    Rat lhs(0);
    for (long k = 0; k <= n; ++k)
      lhs += frac(Int(36 * k + 5) * C(6 * k, 3 * k) * C(3 * k, k), ipow(432, k));
    return lhs == frac(Int(6 * n + 1) * (6 * n + 5) * C(6 * n, 3 * n) * C(3 * n, n),
                       ipow(432, n));
  }
  if (id == "tauraso-id") {
    long p = n;
    if (p < 5 || !is_prime(p)) throw std::invalid_argument("tauraso-id: needs a prime >= 5");
    long h = (p - 1) / 2;
    Rat lhs(0);
    for (long k = h + 1; k <= p - 1; ++k) {
      Int cb = C(2 * k, k);
      lhs += frac(Int(4 * k + 1) * cb * cb, ipow(16, k));
    }
    Int c1 = C(2 * p - 1, p - 1), c2 = C(p - 1, h);
    Rat rhs = frac(Int(p) * p * c1 * c1, ipow(16, p - 1)) -
              frac(Int(p) * p * c2 * c2, ipow(4, p - 1));
    return lhs == rhs;
  }
  throw std::invalid_argument("unknown identity id: " + id);
}

}  // namespace

const std::vector<std::string>& identity_ids() {
  static const std::vector<std::string> ids = {
      "eq2.5", "eq2.6", "eq2.7", "eq3.4", "eq3.5", "eq3.6", "eq3.7", "eq3.8", "eq3.9",
      "prodinger", "os36", "os37", "ahlgren-ono", "chu-vandermonde-1",
      "chu-vandermonde-2", "trig-sum", "gosper-1", "gosper-2", "tauraso-id"};
  return ids;
}

bool verify_identity(const std::string& id, long n) { return identity_holds(id, n); }

Int s_value(long n) {
  Int s = 0;
  for (long k = 0; k < n; ++k) {
    Int cb = C(2 * k, k);
    s += Int(21 * k + 8) * cb * cb * cb;
  }
  if (s % n != 0) throw std::runtime_error("s_value: sum not divisible by n");
  return s / n;
}

Int t_value(long n) {
  Int d = 4 * C(2 * n, n);
  Int s = s_value(n);
  if (s % d != 0) throw std::runtime_error("t_value: not integral");
  return s / d;
}

Int r_value(long n) {
  Int r = 0;
  for (long k = 0; k < n; ++k) {
    Int c = C(n + k - 1, k);
    r += c * c;
  }
  return r;
}

bool verify_recursions(long n) {
  Int sn = s_value(n), sn1 = s_value(n + 1);
  Int cb = C(2 * (n - 1), n - 1);
  Int lhs = Int(n) * n * n * (n + 1) * sn1;
  Int rhs = Int(n) * n * n * n * sn +
            8 * ipow(2 * n - 1, 3) * (21 * n + 8) * cb * cb * cb;
  if (lhs != rhs) return false;
  Int tn = t_value(n), tn1 = t_value(n + 1);
  Int c2 = C(2 * n - 1, n);
  if (Int(4 * n + 2) * tn1 - n * tn != Int(21 * n + 8) * c2 * c2) return false;
  return tn == r_value(n);
}

namespace {

int delta3(long m) {
  while (m % 3 == 0) m /= 3;
  return m == 1 ? 1 : 0;
}

struct DivFamily {
  const char* id;
  long c, d, base;     // coefficient c*k+d, geometric base
  int kind;            // 0: cb^3, 1: cb^2*b3k, 2: cb^2*b4k, 3: b6k*b3k*cb
  int denom_kind;      // 0: 2n*binom, 1: n(2n+1)binom, 2: 2n(2n+1)binom
  bool allow3;         // multiply by 3^{delta3(2n+1)} before testing
  int base_step = 1;   // exponent step (4 for the 28^4 family)
};

const DivFamily kFamilies[] = {
    {"5.1i/-8", 3, 1, -8, 0, 0, false},
    {"5.1i/16", 3, 1, 16, 0, 0, false},
    {"5.1i/256", 6, 1, 256, 0, 0, false},
    {"5.1i/-512", 6, 1, -512, 0, 0, false},
    {"5.1i/4096", 42, 5, 4096, 0, 0, false},
    {"5.3", 35, 8, 81, 2, 1, true},   // denominator 4n(2n+1)binom: use scale below
    {"5.4", 11, 3, 64, 1, 1, false},
    {"5.5", 10, 3, 8, 1, 1, false},
    {"rem5.2/1", 15, 4, -27, 1, 2, true},
    {"rem5.2/2", 40, 3, 28, 2, 2, false, 4},
    {"5.8", 154, 15, -32768, 3, 2, false},
};

Int div_term(const DivFamily& f, long k) {
  Int cb = C(2 * k, k);
  switch (f.kind) {
    case 0: return cb * cb * cb;
    case 1: return cb * cb * C(3 * k, k);
    case 2: return cb * cb * C(4 * k, 2 * k);
    default: return C(6 * k, 3 * k) * C(3 * k, k) * cb;
  }
}

}  // namespace

const std::vector<std::string>& divisibility_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& f : kFamilies) v.push_back(f.id);
    return v;
  }();
  return ids;
}

bool verify_divisibility(const std::string& family, long n) {
  const DivFamily* fam = nullptr;
  for (const auto& f : kFamilies)
    if (family == f.id) fam = &f;
  if (!fam) throw std::invalid_argument("unknown divisibility family: " + family);
  Int sum = 0;
  for (long k = 0; k < n; ++k)
    sum += Int(fam->c * k + fam->d) * div_term(*fam, k) *
           spow(fam->base, fam->base_step * (n - 1 - k));
  Int denom;
  Int cb = C(2 * n, n);
  if (fam->denom_kind == 0)
    denom = Int(2 * n) * cb;
  else if (fam->denom_kind == 1)
    denom = Int(n) * (2 * n + 1) * cb;
  else
    denom = Int(2 * n) * (2 * n + 1) * cb;
  if (std::string(fam->id) == "5.3") denom = Int(4 * n) * (2 * n + 1) * cb;
  if (fam->allow3) sum *= pow_int(3, static_cast<unsigned long>(delta3(2 * n + 1)));
  return sum % denom == 0;
}

bool verify_am(long m) {
  Rat num(0);
  for (long n = 0; n < m; ++n)
    num += Rat(Int(3 * n * n + n) * ipow(16, m - 1 - n)) *
           inner_convolution(InnerShape::CentralPair, n);
  Rat am = num / Rat(Int(2) * m * m * m * (m - 1));
  am.canonicalize();
  if (am.get_den() != 1) return false;
  bool is_pow2 = (m & (m - 1)) == 0;
  bool odd = mpz_odd_p(am.get_num().get_mpz_t());
  return odd == is_pow2;
}

std::vector<long> scan_s_primality(long limit) {
  std::vector<long> composites;
  Int S = 0;
  for (long n = 1; n <= limit; ++n) {
    long k = n - 1;
    Int cb = C(2 * k, k);
    S += Int(21 * k + 8) * cb * cb * cb;
    if (n == 1) continue;
    Int mod = ipow(Int(n), 4);
    if ((S - Int(8) * n) % mod == 0 && !is_prime(n)) composites.push_back(n);
  }
  return composites;
}

const std::vector<std::string>& numeric_congruence_ids() {
  static const std::vector<std::string> ids = {
      "lemma2.1", "lehmer2.2", "lehmer2.3", "lehmer20", "lem2.4a", "lem2.4b",
      "lem4.2",   "morley",    "glaisher",  "sd-lift",  "fast-euler",
      "fast-b3",  "fast-b5",   "eta-klein", "rv-eta"};
  return ids;
}

bool verify_numeric_congruence(const std::string& id, long p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("needs an odd prime");
  int jm1 = p % 4 == 1 ? 1 : -1;
  if (id == "lemma2.1") {
    for (long k = 1; k < p; ++k) {
      int sign = 2 * k > p ? 1 : -1;
      if (!congr(Rat(Int(k) * C(2 * k, k) * C(2 * (p - k), p - k)), Rat(2 * sign * p), p, 2))
        return false;
    }
    return true;
  }
  Rat q = frac(ipow(2, p - 1) - 1, Int(p));
  if (id == "lehmer2.2") return congr(harm((p - 1) / 2), -2 * q + p * q * q, p, 2);
  if (id == "lehmer2.3")
    return congr(harm(p / 4),
                 -3 * q + Rat(3, 2) * p * q * q - Rat(jm1 * p) * Rat(euler_number(p - 3)),
                 p, 2);
  if (id == "lehmer20" || id == "lem2.4a" || id == "lem2.4b") {
    long hi = id == "lehmer20" ? p / 4 : (p - 1) / 2;
    Rat s(0);
    for (long k = 1; k <= hi; ++k)
      s += frac(Int(id == "lem2.4b" && k % 2 ? -1 : 1), Int(k) * k);
    Rat rhs = id == "lem2.4a" ? Rat(0)
                              : Rat((id == "lehmer20" ? 4 : 2) * jm1) *
                                    Rat(euler_number(p - 3));
    return congr(s, rhs, p, 1);
  }
  if (id == "lem4.2") {
    Rat s(0), h(0);
    for (long k = 1; k < p; ++k) {
      s += (Rat(1) + Rat(2 * p) * h) / Rat(Int(k) * k);
      h += frac(1, Int(k));
    }
    return congr(s, Rat(8, 3) * p * bernoulli_number(p - 3), p, 2);
  }
  if (id == "morley") {
    long h = (p - 1) / 2;
    return congr(Rat(C(p - 1, h)), Rat(sgn_pow(h)) * Rat(ipow(4, p - 1)), p, 3);
  }
  if (id == "glaisher")
    return congr(Rat(C(2 * p - 1, p - 1)),
                 Rat(1) - Rat(2, 3) * Rat(ipow(Int(p), 3)) * bernoulli_number(p - 3), p, 4);
  if (id == "sd-lift")
    return congr(frac(C(2 * p * p, p * p), Int(2)), frac(C(2 * p, p), Int(2)), p, 4);
  SpecialValueCache cache(p, 2);
  if (id == "fast-euler")
    return congr(Rat(cache.euler_pm3_fast()), Rat(euler_number(p - 3)), p, 1);
  if (id == "fast-b3")
    return congr(Rat(cache.bernoulli_pm3_fast()), bernoulli_number(p - 3), p, 1);
  if (id == "fast-b5") {
    if (p < 7) throw std::invalid_argument("fast-b5 needs p >= 7");
    return congr(Rat(cache.bernoulli_pm5_fast()), bernoulli_number(p - 5), p, 1);
  }
  if (id == "eta-klein" || id == "rv-eta") {
    auto coeffs = eta_coeffs(static_cast<std::size_t>(p));
    Int ap = coeffs[p];
    Int expect = 0;
    if (p % 4 == 1) {
      long x = odd_x_square_split(p);
      expect = Int(4) * x * x - 2 * p;
    }
    if (id == "eta-klein") return ap == expect;
    Rat s(0);
    for (long k = 0; k < p; ++k) {
      Int cb = C(2 * k, k);
      s += frac(cb * cb * cb, ipow(64, k));
    }
    return congr(s, Rat(ap), p, 2);
  }
  throw std::invalid_argument("unknown congruence id: " + id);
}

}  // namespace supercong

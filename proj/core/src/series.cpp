#include "supercong/series.hpp"

#include "supercong/special.hpp"
#include "supercong/sums.hpp"

#include <functional>
#include <stdexcept>

namespace supercong {

namespace {

Int tpow10(int d) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(d));
  return r;
}

Int C(long n, long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Int spow(long b, long e) {
  Int r = pow_int(std::abs(b), static_cast<unsigned long>(e));
  if (b < 0 && e % 2 == 1) r = -r;
  return r;
}

Rat rabs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

// Canonicalized fraction (the two-argument mpq constructor does not reduce
// and requires a positive denominator before arithmetic).
Rat qq(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// ---- fixed-point constants at scale 10^wdigits ----

Int fp_atan_inv(long x, const Int& scale) {
  Int p = scale / x;
  Int x2 = Int(x) * x;
  Int sum = p;
  for (long j = 1; p != 0; ++j) {
    p /= x2;
    Int t = p / (2 * j + 1);
    if (j % 2) sum -= t; else sum += t;
  }
  return sum;
}

Int fp_pi(const Int& scale) {
  return 16 * fp_atan_inv(5, scale) - 4 * fp_atan_inv(239, scale);
}

Int fp_sqrt(long n, const Int& scale) {
  Int x = n * scale * scale;
  Int r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

Int fp_zeta3(const Int& scale) {
  // zeta(3) = (5/2) sum_{k>=1} (-1)^{k-1} / (k^3 binom(2k,k))
  Int sum = 0, cb = 1;
  for (long k = 1;; ++k) {
    cb = cb * 2 * (2 * k - 1) / k;
    Int t = (5 * scale) / (Int(2) * k * k * k * cb);
    if (t == 0) break;
    if (k % 2) sum += t; else sum -= t;
  }
  return sum;
}

// Euler-Maclaurin tail terms for zeta(s, a): B_{2k}/(2k)! * (s)_{2k-1} * (N+a)^{1-s-2k}.
Int fp_hurwitz2(long q, long r, const Int& scale, int wdigits) {
  long N = 2L * wdigits / 5 + 40;
  Int sum = 0;
  for (long n = 0; n < N; ++n) {
    Int d = Int(r) * n + q;
    sum += scale * r * r / (d * d);
  }
  Int D = Int(r) * N + q;
  sum += scale * r / D;
  sum += scale * r * r / (2 * D * D);
  const auto& B = bernoulli_table(static_cast<std::size_t>(wdigits + 100));
  Rat base(Int(r), D);
  base.canonicalize();
  Rat pw = base * base * base;  // (N+a)^{-3}
  for (std::size_t k = 1; 2 * k + 1 < B.size(); ++k) {
    Rat t = B[2 * k] * pw;
    Int c = t.get_num() * scale / t.get_den();
    if (c == 0) break;
    sum += c;
    pw *= base * base;
  }
  return sum;
}

Int fp_zeta4_em(const Int& scale, int wdigits) {
  long N = 2L * wdigits / 5 + 40;
  Int sum = 0;
  for (long n = 1; n < N; ++n) sum += scale / (Int(n) * n * n * n);
  Int Nn(N);
  sum += scale / (3 * Nn * Nn * Nn);
  sum += scale / (2 * Nn * Nn * Nn * Nn);
  const auto& B = bernoulli_table(static_cast<std::size_t>(wdigits + 100));
  Rat base(1, N);
  Rat pw = base * base * base * base * base;  // N^{-5}
  for (std::size_t k = 1; 2 * k + 1 < B.size(); ++k) {
    Rat t = B[2 * k] * qq(Int(2 * k + 1) * (2 * k + 2), 6) * pw;
    Int c = t.get_num() * scale / t.get_den();
    if (c == 0) break;
    sum += c;
    pw *= base * base;
  }
  return sum;
}

Int fp_constant(const std::string& name, const Int& scale, int wdigits) {
  if (name == "pi") return fp_pi(scale);
  if (name == "sqrt2") return fp_sqrt(2, scale);
  if (name == "sqrt3") return fp_sqrt(3, scale);
  if (name == "zeta3") return fp_zeta3(scale);
  if (name == "hurwitz13") return fp_hurwitz2(1, 3, scale, wdigits);
  if (name == "hurwitz23") return fp_hurwitz2(2, 3, scale, wdigits);
  if (name == "K")
    return (fp_hurwitz2(1, 3, scale, wdigits) - fp_hurwitz2(2, 3, scale, wdigits)) / 9;
  if (name == "zeta4") {
    Int p = fp_pi(scale);
    Int p2 = p * p / scale;
    return p2 * p2 / scale / 90;
  }
  if (name == "zeta4-em") return fp_zeta4_em(scale, wdigits);
  throw std::invalid_argument("unknown constant: " + name);
}

// ---- series registry ----

Rat cbq(long k) { return Rat(C(2 * k, k)); }

struct Entry {
  const char* id;
  long k0;
  bool alternating;
  Rat rho;  // tail ratio bound for non-alternating entries
  std::function<Rat(long)> term;
  std::function<Rat(const Rat& pi, const Rat& sqrt2, const Rat& sqrt3, const Rat& zeta3,
                    const Rat& zeta4, const Rat& K)>
      target;
};

Rat inv3(long k, const Rat& coef, long base) {  // coef * base^k / (k^3 cb^2 b3k)
  Int cb = C(2 * k, k);
  return coef * qq(spow(base, k), Int(k) * k * k * cb * cb * C(3 * k, k));
}
Rat inv4(long k, const Rat& coef, long base) {  // coef * base^k / (k^3 cb^2 b4k)
  Int cb = C(2 * k, k);
  return coef * qq(spow(base, k), Int(k) * k * k * cb * cb * C(4 * k, 2 * k));
}
Rat num3(long k, const Rat& coef, long base) {  // coef * cb^2 b3k / base^k
  Int cb = C(2 * k, k);
  return coef * qq(cb * cb * C(3 * k, k), spow(base, k));
}
Rat num4(long k, const Rat& coef, long base) {  // coef * cb^2 b4k / base^k
  Int cb = C(2 * k, k);
  return coef * qq(cb * cb * C(4 * k, 2 * k), spow(base, k));
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {"conj1.4/first", 1, false, Rat(12, 100),
       [](long k) -> Rat { return inv3(k, Rat(10 * k - 3), 8); },
       [](const Rat& pi, const Rat&, const Rat&, const Rat&, const Rat&, const Rat&) -> Rat {
         return pi * pi / 2;
       }},
      {"conj1.4/1.20b", 1, false, Rat(62, 100),
       [](long k) -> Rat { return inv3(k, Rat(11 * k - 3), 64); },
       [](const Rat& pi, const Rat&, const Rat&, const Rat&, const Rat&, const Rat&) -> Rat {
         return 8 * pi * pi;
       }},
      {"conj1.4/1.20c", 1, false, Rat(34, 100),
       [](long k) -> Rat { return inv4(k, Rat(35 * k - 8), 81); },
       [](const Rat& pi, const Rat&, const Rat&, const Rat&, const Rat&, const Rat&) -> Rat {
         return 12 * pi * pi;
       }},
      {"conj1.4/1.21a", 1, true, Rat(0),
       [](long k) -> Rat { return inv3(k, Rat(15 * k - 4), -27); },
       [](const Rat&, const Rat&, const Rat&, const Rat&, const Rat&, const Rat& K) -> Rat {
         return -27 * K;
       }},
      {"conj1.4/1.21b", 1, true, Rat(0),
       [](long k) -> Rat { return inv4(k, Rat(5 * k - 1), -144); },
       [](const Rat&, const Rat&, const Rat&, const Rat&, const Rat&, const Rat& K) -> Rat {
         return Rat(-45, 2) * K;
       }},
      {"conj1.4/1.22", 0, true, Rat(0),
       [](long n) -> Rat {
         Int cb = C(2 * n, n);
         return qq(Int(18 * n * n + 7 * n + 1) * cb * cb, spow(-128, n)) *
                inner_convolution(InnerShape::QuarticBeta, n);
       },
       [](const Rat& pi, const Rat& sqrt2, const Rat&, const Rat&, const Rat&, const Rat&) -> Rat {
         return 4 * sqrt2 / (pi * pi);
       }},
      {"conj1.4/1.23", 0, true, Rat(0),
       [](long n) -> Rat {
         Int cb = C(2 * n, n);
         return qq(Int(40 * n * n + 26 * n + 5) * cb * cb, spow(-256, n)) *
                inner_convolution(InnerShape::CentralPair, n);
       },
       [](const Rat& pi, const Rat&, const Rat&, const Rat&, const Rat&, const Rat&) -> Rat {
         return Rat(24) / (pi * pi);
       }},
      {"rem1.1/pi2-18", 1, false, Rat(26, 100),
       [](long k) -> Rat { return qq(Int(1), Int(k) * k * C(2 * k, k)); },
       [](const Rat& pi, const Rat&, const Rat&, const Rat&, const Rat&, const Rat&) -> Rat {
         return pi * pi / 18;
       }},
      {"rem1.1/pi2-2", 1, false, Rat(9999, 10000),
       [](long k) -> Rat { return qq(pow_int(4, k), Int(k) * k * C(2 * k, k)); },
       [](const Rat& pi, const Rat&, const Rat&, const Rat&, const Rat&, const Rat&) -> Rat {
         return pi * pi / 2;
       }},
      {"rem1.2/pi-2", 1, false, Rat(1, 2),
       [](long k) -> Rat { return qq(pow_int(2, k), Int(k) * C(2 * k, k)); },
       [](const Rat& pi, const Rat&, const Rat&, const Rat&, const Rat&, const Rat&) -> Rat {
         return pi / 2;
       }},
      {"rem1.2/zeta3", 1, true, Rat(0),
       [](long k) -> Rat { return qq(Int(k % 2 ? -1 : 1), Int(k) * k * k * C(2 * k, k)); },
       [](const Rat&, const Rat&, const Rat&, const Rat& zeta3, const Rat&, const Rat&) -> Rat {
         return Rat(-2, 5) * zeta3;
       }},
      {"rem1.2/zeta4", 1, false, Rat(26, 100),
       [](long k) -> Rat { return qq(Int(1), Int(k) * k * k * k * C(2 * k, k)); },
       [](const Rat&, const Rat&, const Rat&, const Rat&, const Rat& zeta4, const Rat&) -> Rat {
         return Rat(17, 36) * zeta4;
       }},
      {"zeilberger-pi2over6", 1, false, Rat(2, 100),
       [](long k) -> Rat {
         Int cb = C(2 * k, k);
         return qq(Int(21 * k - 8), Int(k) * k * k * cb * cb * cb);
       },
       [](const Rat& pi, const Rat&, const Rat&, const Rat&, const Rat&, const Rat&) -> Rat {
         return pi * pi / 6;
       }},
      {"ramanujan/4-pi", 0, false, Rat(26, 100),
       [](long k) -> Rat {
         Int cb = C(2 * k, k);
         return qq(Int(6 * k + 1) * cb * cb * cb, pow_int(256, k));
       },
       [](const Rat& pi, const Rat&, const Rat&, const Rat&, const Rat&, const Rat&) -> Rat {
         return Rat(4) / pi;
       }},
      {"ramanujan/2sqrt2-pi", 0, true, Rat(0),
       [](long k) -> Rat {
         Int cb = C(2 * k, k);
         return qq(Int(6 * k + 1) * cb * cb * cb, spow(-512, k));
       },
       [](const Rat& pi, const Rat& sqrt2, const Rat&, const Rat&, const Rat&, const Rat&) -> Rat {
         return 2 * sqrt2 / pi;
       }},
      {"ramanujan/16-pi", 0, false, Rat(2, 100),
       [](long k) -> Rat {
         Int cb = C(2 * k, k);
         return qq(Int(42 * k + 5) * cb * cb * cb, pow_int(4096, k));
       },
       [](const Rat& pi, const Rat&, const Rat&, const Rat&, const Rat&, const Rat&) -> Rat {
         return Rat(16) / pi;
       }},
      // The paper prints 4*sqrt(3)/pi here; numerically the sum equals
      // 4*sqrt(3)/(3*pi) (the printed constant is off by a factor 3).
      {"rem5.2ii/1", 0, true, Rat(0),
       [](long k) -> Rat { return num3(k, Rat(5 * k + 1), -192); },
       [](const Rat& pi, const Rat&, const Rat& sqrt3, const Rat&, const Rat&, const Rat&) -> Rat {
         return 4 * sqrt3 / (3 * pi);
       }},
      {"rem5.2ii/2", 0, false, Rat(51, 100),
       [](long k) -> Rat { return num3(k, Rat(6 * k + 1), 216); },
       [](const Rat& pi, const Rat&, const Rat& sqrt3, const Rat&, const Rat&, const Rat&) -> Rat {
         return 3 * sqrt3 / pi;
       }},
      {"rem5.2ii/3", 0, false, Rat(45, 100),
       [](long k) -> Rat { return num4(k, Rat(8 * k + 1), 2304); },
       [](const Rat& pi, const Rat&, const Rat& sqrt3, const Rat&, const Rat&, const Rat&) -> Rat {
         return 2 * sqrt3 / pi;
       }},
      {"rem5.2ii/4", 0, false, Rat(1, 100),
       [](long k) -> Rat { return num4(k, Rat(40 * k + 3), 614656); },
       [](const Rat& pi, const Rat&, const Rat& sqrt3, const Rat&, const Rat&, const Rat&) -> Rat {
         return Rat(49) / (3 * sqrt3 * pi);
       }},
      {"rem5.2ii/5", 0, true, Rat(0),
       [](long k) -> Rat { return num4(k, Rat(28 * k + 3), -12288); },
       [](const Rat& pi, const Rat&, const Rat& sqrt3, const Rat&, const Rat&, const Rat&) -> Rat {
         return Rat(16) / (sqrt3 * pi);
       }},
      {"az-zeta3", 1, true, Rat(0),
       [](long k) -> Rat {
         Int cb = C(2 * k, k);
         Int cb5 = cb * cb * cb * cb * cb;
         return qq(Int(k % 2 ? -1 : 1) * (Int(205) * k * k - 160 * k + 32),
                    Int(k) * k * k * k * k * cb5);
       },
       [](const Rat&, const Rat&, const Rat&, const Rat& zeta3, const Rat&, const Rat&) -> Rat {
         return -2 * zeta3;
       }},
  };
  return entries;
}

Rat const_rat(const std::string& name, int digits) {
  Fixed f = reference_constant(name, digits);
  Rat r(f.mantissa, tpow10(digits));
  r.canonicalize();
  return r;
}

std::string rat_to_sci(const Rat& q) {
  if (q == 0) return "0";
  Rat a = rabs(q);
  int e = 0;
  while (a < 1) {
    a *= 10;
    --e;
  }
  while (a >= 10) {
    a /= 10;
    ++e;
  }
  Rat scaled = a * 1000;
  Int digs = scaled.get_num() / scaled.get_den();
  std::string m = digs.get_str();  // 4 digits "dddd"
  std::string out = (q < 0 ? "-" : "");
  out += m.substr(0, 1) + "." + m.substr(1);
  out += "e" + std::string(e < 0 ? "-" : "+") + std::to_string(std::abs(e));
  return out;
}

Fixed to_fixed(const Rat& q, int digits) {
  Int scale = tpow10(digits);
  Rat s = q * scale;
  Int m = s.get_num() / s.get_den();  // truncated
  return Fixed{m, digits};
}

}  // namespace

std::string Fixed::str() const {
  Int a = mantissa < 0 ? Int(-mantissa) : mantissa;
  Int scale = tpow10(digits);
  Int ip = a / scale, fp = a % scale;
  std::string frac = fp.get_str();
  frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
  return (mantissa < 0 ? "-" : "") + ip.get_str() + "." + frac;
}

Rat Fixed::to_rational() const {
  Rat r(mantissa, tpow10(digits));
  r.canonicalize();
  return r;
}

Fixed reference_constant(const std::string& name, int digits) {
  int w = digits + 10;
  Int scale = tpow10(w);
  Int v = fp_constant(name, scale, w);
  Int m = v / tpow10(10);  // drop the guard digits
  return Fixed{m, digits};
}

const std::vector<std::string>& series_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& e : registry()) v.push_back(e.id);
    return v;
  }();
  return ids;
}

SeriesResult eval_series(const std::string& id, int digits, long max_terms) {
  const Entry* entry = nullptr;
  for (const auto& e : registry())
    if (id == e.id) entry = &e;
  if (!entry) throw std::invalid_argument("unknown series id: " + id);
  if (max_terms < 1) throw std::invalid_argument("max_terms must be positive");

  SeriesResult res;
  res.id = id;
  Rat eps(Int(1), tpow10(digits + 2));
  eps.canonicalize();

  Rat S(0), prev(0), tail(0);
  long used = 0;
  for (long k = entry->k0;; ++k) {
    Rat a = entry->term(k);
    Rat aa = rabs(a);
    if (used > 0) {
      if (entry->alternating) {
        bool flip = (a > 0) != (prev > 0);
        if (!flip || aa >= rabs(prev)) res.tail_sound = false;
      } else {
        if (a < 0 || aa > entry->rho * rabs(prev)) res.tail_sound = false;
      }
    }
    Rat bound = entry->alternating ? aa : Rat(aa / (1 - entry->rho));
    if (used >= 1 && (bound <= eps || used >= max_terms)) {
      tail = bound;
      break;
    }
    S += a;
    prev = a;
    ++used;
  }
  res.terms = used;

  int wt = digits + 15;
  Rat target = entry->target(const_rat("pi", wt), const_rat("sqrt2", wt),
                             const_rat("sqrt3", wt), const_rat("zeta3", wt),
                             const_rat("zeta4", wt), const_rat("K", wt));
  Rat err = rabs(S - target);
  Rat allowance = qq(Int(1), tpow10(digits)) + tail + qq(Int(8), tpow10(wt));
  res.pass = res.tail_sound && err <= allowance;
  res.value = to_fixed(S, digits);
  res.target = to_fixed(target, digits);
  res.tail_bound = rat_to_sci(tail);
  res.error = rat_to_sci(err);
  return res;
}

HeadlineResult headline_check() {
  const Entry* entry = nullptr;
  for (const auto& e : registry())
    if (e.id == std::string("conj1.4/first")) entry = &e;
  Rat S(0);
  for (long k = 1; k <= 200; ++k) S += entry->term(k);
  Rat pi = const_rat("pi", 240);
  Rat rel = rabs(2 * S / (pi * pi) - 1);
  HeadlineResult r;
  r.relative_error = rat_to_sci(rel);
  r.pass = rel < qq(Int(1), tpow10(227));
  return r;
}

}  // namespace supercong

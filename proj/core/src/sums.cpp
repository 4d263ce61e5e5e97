#include "supercong/sums.hpp"

#include <array>
#include <mutex>

namespace supercong {

namespace {

// term(k+1)/term(k) = prod_i (prod_{j=1..a_i} (a_i*k + b_i + j))^{e_i}
struct RatioAtom {
  int a;
  int b;
  int e;
};

struct KindInfo {
  std::array<RatioAtom, 3> atoms;
  int natoms;
  bool zero_at_k0;
};

const KindInfo& kind_info(BinomKind kind) {
  static const KindInfo table[] = {
      {{{{2, 0, 1}, {1, 0, -2}, {0, 0, 0}}}, 2, false},   // CentralBinom
      {{{{3, 0, 1}, {1, 0, -1}, {2, 0, -1}}}, 3, false},  // Binom3kK
      {{{{4, 0, 1}, {2, 0, -2}, {0, 0, 0}}}, 2, false},   // Binom4k2k
      {{{{6, 0, 1}, {3, 0, -2}, {0, 0, 0}}}, 2, false},   // Binom6k3k
      {{{{2, 0, 1}, {1, 0, -1}, {1, 1, -1}}}, 3, false},  // Catalan
      {{{{3, 0, 1}, {1, 0, -1}, {2, 1, -1}}}, 3, false},  // Catalan2
      {{{{4, 0, 1}, {2, 0, -1}, {2, 1, -1}}}, 3, false},  // CatalanEven
      {{{{2, 0, 1}, {1, 1, -1}, {1, -1, -1}}}, 3, true},  // Binom2kKp1
      {{{{3, 0, 1}, {1, 1, -1}, {2, -1, -1}}}, 3, true},  // Binom3kKp1
      {{{{3, 0, 1}, {1, -1, -1}, {2, 1, -1}}}, 3, true},  // Binom3kKm1
      {{{{4, 0, 1}, {2, 1, -1}, {2, -1, -1}}}, 3, true},  // Binom4k2kp1
  };
  return table[static_cast<int>(kind)];
}

Int binom_z(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

long digits_base_p(long n, long p) {
  long d = 0;
  while (n > 0) {
    ++d;
    n /= p;
  }
  return d;
}

PadicTracked pow_padic(const PadicTracked& x, int e) {
  if (e == 0) return PadicTracked::make(x.p, 0, 1, x.zero ? 1 : x.m);
  PadicTracked acc = x;
  for (int i = 1; i < std::abs(e); ++i) acc = padic_mul(acc, x);
  if (e < 0) acc = padic_div(PadicTracked::make(x.p, 0, 1, acc.zero ? 1 : acc.m), acc);
  return acc;
}

}  // namespace

Rat binom_factor_value(BinomKind kind, long k) {
  unsigned long u = static_cast<unsigned long>(k);
  switch (kind) {
    case BinomKind::CentralBinom: return Rat(binom_z(2 * u, u));
    case BinomKind::Binom3kK: return Rat(binom_z(3 * u, u));
    case BinomKind::Binom4k2k: return Rat(binom_z(4 * u, 2 * u));
    case BinomKind::Binom6k3k: return Rat(binom_z(6 * u, 3 * u));
    case BinomKind::Catalan: {
      Rat r(binom_z(2 * u, u), Int(k + 1));
      r.canonicalize();
      return r;
    }
    case BinomKind::Catalan2: {
      Rat r(binom_z(3 * u, u), Int(2 * k + 1));
      r.canonicalize();
      return r;
    }
    case BinomKind::CatalanEven: {
      Rat r(binom_z(4 * u, 2 * u), Int(2 * k + 1));
      r.canonicalize();
      return r;
    }
    case BinomKind::Binom2kKp1: return Rat(binom_z(2 * u, u + 1));
    case BinomKind::Binom3kKp1: return Rat(binom_z(3 * u, u + 1));
    case BinomKind::Binom3kKm1: return k >= 1 ? Rat(binom_z(3 * u, u - 1)) : Rat(0);
    case BinomKind::Binom4k2kp1: return Rat(binom_z(4 * u, 2 * u + 1));
  }
  throw std::logic_error("unknown BinomKind");
}

Rat rational_binom(const Rat& alpha, long k) {
  if (k < 0) return Rat(0);
  Rat num(1);
  for (long j = 0; j < k; ++j) num *= alpha - j;
  Rat den(1);
  for (long j = 2; j <= k; ++j) den *= j;
  Rat r = num / den;
  r.canonicalize();
  return r;
}

Rat inner_convolution(InnerShape shape, long n) {
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (shape == InnerShape::QuarticBeta) {
    static std::vector<Rat> ra, rb;  // binom(-1/4,k)^2 and binom(-3/4,k)^2
    while (static_cast<long>(ra.size()) <= n) {
      long k = static_cast<long>(ra.size());
      if (k == 0) {
        ra.emplace_back(1);
        rb.emplace_back(1);
      } else {
        // binom(a,k) = binom(a,k-1) * (a-k+1)/k, squared
        Rat fa = (Rat(-1, 4) - (k - 1)) / k;
        Rat fb = (Rat(-3, 4) - (k - 1)) / k;
        ra.push_back(ra[k - 1] * fa * fa);
        rb.push_back(rb[k - 1] * fb * fb);
      }
    }
    Rat acc(0);
    for (long k = 0; k <= n; ++k) acc += ra[k] * rb[n - k];
    acc.canonicalize();
    return acc;
  }
  static std::vector<Int> cb;  // binom(2k,k)
  while (static_cast<long>(cb.size()) <= n)
    cb.push_back(binom_z(2 * cb.size(), cb.size()));
  int power = shape == InnerShape::CentralPair ? 2 : 4;
  Int acc(0), row(1);  // row = binom(n,k)
  for (long k = 0; k <= n; ++k) {
    Int w = row;
    w *= row;
    if (power == 4) w *= w;
    acc += w * cb[k] * cb[n - k];
    row = row * (n - k) / (k + 1);
  }
  return Rat(acc);
}

PadicTracked eval_sum(const SumSpec& spec, long p, int a, int target_abs, int guard) {
  long N = 1;
  for (int i = 0; i < a; ++i) {
    N *= p;
    if (N > 4'000'000) throw std::invalid_argument("eval_sum: p^a too large");
  }
  long lo = 0, hi = N - 1;
  switch (spec.range) {
    case SumRange::FullPa: break;
    case SumRange::HalfPa: hi = (N - 1) / 2; break;
    case SumRange::OneToPam1: lo = 1; break;
    case SumRange::OneToPm1: lo = 1; hi = p - 1; break;
    case SumRange::OneToHalf: lo = 1; hi = (p - 1) / 2; break;
    case SumRange::UpperHalf: lo = (p + 1) / 2; hi = p - 1; break;
    case SumRange::UpperHalfPa: lo = (N + 1) / 2; break;
    case SumRange::FloorPa34: hi = 3 * N / 4; break;
    case SumRange::FloorPa58: hi = 5 * N / 8; break;
    case SumRange::FloorPa78: hi = 7 * N / 8; break;
    case SumRange::FloorPa23: hi = 2 * N / 3; break;
  }
  bool zero_at_0 = false;
  long neg_bound = 0;
  long L = digits_base_p(6 * hi + 1, p);
  for (const auto& f : spec.factors) {
    if (kind_info(f.kind).zero_at_k0) zero_at_0 = true;
    if (f.exp < 0) neg_bound += static_cast<long>(-f.exp) * L;
  }
  if (spec.k_power < 0) {
    if (lo == 0) throw std::invalid_argument("eval_sum: negative k power from k=0");
    neg_bound += static_cast<long>(-spec.k_power) * digits_base_p(hi, p);
  }
  if (lo == 0 && zero_at_0) lo = 1;  // the k=0 term vanishes
  if (hi < lo) return PadicTracked::zero_to(p, PadicTracked::kExact);

  int W = target_abs + guard + static_cast<int>(neg_bound);
  if (spec.base == 0 || valuation(spec.base, p) != 0)
    throw std::invalid_argument("eval_sum: base must be a p-adic unit");
  PadicTracked base = padic_from_rational(spec.base, p, W);

  // exact starting value of the streamed part at k = lo
  Rat start(1);
  for (const auto& f : spec.factors) {
    Rat v = binom_factor_value(f.kind, lo);
    for (int i = 0; i < std::abs(f.exp); ++i) {
      if (f.exp > 0)
        start *= v;
      else
        start /= v;
    }
  }
  if (spec.extra_binom_upper) start *= Rat(binom_z(N - 1, lo));
  for (long i = 0; i < lo; ++i) start *= spec.base;
  PadicTracked term = padic_from_rational(start, p, W);

  PadicTracked sum = PadicTracked::exact_zero(p);
  for (long k = lo;; ++k) {
    // contribution at k
    Rat c = spec.c0 + spec.c1 * k + spec.c2 * k * k;
    int chi = 1;
    if (spec.character_mod3) chi = k % 3 == 0 ? 0 : (k % 3 == 1 ? 1 : -1);
    if (c != 0 && chi != 0) {
      PadicTracked contrib = term;
      if (chi == -1) c = -c;
      if (c != 1) contrib = padic_mul(contrib, padic_from_rational(c, p, W));
      if (spec.k_power != 0)
        contrib = padic_mul(contrib, pow_padic(padic_from_int(Int(k), p, W), spec.k_power));
      if (spec.inner) {
        Rat iv = inner_convolution(*spec.inner, k);
        if (iv == 0)
          contrib = PadicTracked::exact_zero(p);
        else
          contrib = padic_mul(contrib, padic_from_rational(iv, p, W));
      }
      sum = padic_add(sum, contrib);
    }
    if (k == hi) break;
    // advance the streamed part to k+1
    for (const auto& f : spec.factors) {
      const KindInfo& info = kind_info(f.kind);
      for (int i = 0; i < info.natoms; ++i) {
        const RatioAtom& at = info.atoms[i];
        int reps = at.e * f.exp;
        for (int j = 1; j <= at.a; ++j) {
          PadicTracked fac = padic_from_int(Int(at.a) * k + at.b + j, p, W);
          for (int r = 0; r < std::abs(reps); ++r)
            term = reps > 0 ? padic_mul(term, fac) : padic_div(term, fac);
        }
      }
    }
    if (spec.extra_binom_upper) {
      term = padic_mul(term, padic_from_int(Int(N - 1 - k), p, W));
      term = padic_div(term, padic_from_int(Int(k + 1), p, W));
    }
    term = padic_mul(term, base);
  }
  if (sum.abs_precision() < target_abs)
    throw precision_error("eval_sum: achieved precision " +
                          std::to_string(sum.abs_precision()) + " below target " +
                          std::to_string(target_abs));
  return sum;
}

CentralBinomStream::CentralBinomStream(long p, int prec) : p_(p), prec_(prec) {
  cur_ = PadicTracked::make(p, 0, 1, prec);
}

PadicTracked CentralBinomStream::next() {
  PadicTracked out = cur_;
  long k = k_++;
  PadicTracked num = padic_mul(padic_from_int(Int(2 * k + 1), p_, prec_),
                               padic_from_int(Int(2 * k + 2), p_, prec_));
  PadicTracked den = padic_from_int(Int(k + 1), p_, prec_);
  cur_ = padic_div(padic_mul(cur_, num), padic_mul(den, den));
  return out;
}

}  // namespace supercong

#pragma once

#include "supercong/arith.hpp"

#include <optional>

namespace supercong {

// Binomial-type factor of a summand, indexed by the summation variable k.
enum class BinomKind {
  CentralBinom,   // binom(2k,k)
  Binom3kK,       // binom(3k,k)
  Binom4k2k,      // binom(4k,2k)
  Binom6k3k,      // binom(6k,3k)
  Catalan,        // binom(2k,k)/(k+1)
  Catalan2,       // binom(3k,k)/(2k+1)
  CatalanEven,    // binom(4k,2k)/(2k+1), i.e. Catalan number C_{2k}
  Binom2kKp1,     // binom(2k,k+1) = binom(2k,k-1); zero at k=0
  Binom3kKp1,     // binom(3k,k+1); zero at k=0
  Binom3kKm1,     // binom(3k,k-1); zero at k=0
  Binom4k2kp1,    // binom(4k,2k+1); zero at k=0
};

struct TermFactor {
  BinomKind kind;
  int exp = 1;  // may be negative
};

// Inner sum attached to each term (evaluated at n = summation index).
enum class InnerShape {
  QuarticBeta,         // sum_k binom(-1/4,k)^2 binom(-3/4,n-k)^2
  CentralPair,         // sum_k binom(n,k)^2 binom(2k,k) binom(2(n-k),n-k)
  CentralPairQuartic,  // sum_k binom(n,k)^4 binom(2k,k) binom(2(n-k),n-k)
};

enum class SumRange {
  FullPa,       // 0 .. p^a - 1
  HalfPa,       // 0 .. (p^a - 1)/2
  OneToPam1,    // 1 .. p^a - 1
  OneToPm1,     // 1 .. p - 1
  OneToHalf,    // 1 .. (p-1)/2
  UpperHalf,    // (p+1)/2 .. p - 1
  UpperHalfPa,  // (p^a + 1)/2 .. p^a - 1
  FloorPa34,    // 0 .. floor(3 p^a / 4)
  FloorPa58,    // 0 .. floor(5 p^a / 8)
  FloorPa78,    // 0 .. floor(7 p^a / 8)
  FloorPa23,    // 0 .. floor(2 p^a / 3)
};

struct SumSpec {
  SumRange range = SumRange::FullPa;
  Rat c0 = Rat(1), c1 = Rat(0), c2 = Rat(0);  // coefficient c0 + c1 k + c2 k^2
  int k_power = 0;                            // extra k^e factor (e may be < 0)
  Rat base = Rat(1);                          // geometric factor base^k
  std::vector<TermFactor> factors;
  bool extra_binom_upper = false;  // binom(p^a - 1, k)
  bool character_mod3 = false;     // Legendre symbol (k/3)
  std::optional<InnerShape> inner;
};

// Exact value of a factor at index k.
Rat binom_factor_value(BinomKind kind, long k);

// Evaluate the sum p-adically with enough working precision that the result
// carries absolute precision >= target_abs (plus guard extra digits).  Throws
// precision_error when the precision budget cannot be met.
PadicTracked eval_sum(const SumSpec& spec, long p, int a, int target_abs, int guard);

// Generalized binomial coefficient binom(alpha, k).
Rat rational_binom(const Rat& alpha, long k);

// Exact inner convolution value at n.
Rat inner_convolution(InnerShape shape, long n);

// Streams binom(2k,k) mod p^prec for k = 0, 1, 2, ...
class CentralBinomStream {
 public:
  CentralBinomStream(long p, int prec);
  PadicTracked next();  // value at current k, then advances

 private:
  long p_;
  int prec_;
  long k_ = 0;
  PadicTracked cur_;
};

}  // namespace supercong

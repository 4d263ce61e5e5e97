#include "supercong/catalog.hpp"

#include <algorithm>
#include <stdexcept>

namespace supercong {

namespace {

using Ctx = CheckContext;
using AppFn = std::function<std::optional<std::string>(long, int)>;
using ModFn = std::function<int(long, int)>;
using LhsFn = std::function<PadicTracked(Ctx&)>;
using RhsFn = std::function<RhsResult(Ctx&)>;

int uprec(const Ctx& c, int e) { return e + c.guard + 2; }

PadicTracked pr(Ctx& c, const Rat& q, int e) {
  if (q == 0) return PadicTracked::exact_zero(c.p);
  return padic_from_rational(q, c.p, uprec(c, e));
}

PadicTracked shiftv(PadicTracked x, long s) {
  if (x.zero) {
    if (!x.is_exact_zero()) x.t += s;
  } else {
    x.v += s;
  }
  return x;
}

RhsResult one(PadicTracked v) {
  RhsResult r;
  r.candidates.push_back(std::move(v));
  return r;
}
RhsResult oneq(Ctx& c, const Rat& q, int e) { return one(pr(c, q, e)); }
RhsResult zero_rhs(Ctx& c) { return one(PadicTracked::exact_zero(c.p)); }

int jm1(long p) { return p % 4 == 1 ? 1 : -1; }
int j2s(long p) { long r = p % 8; return (r == 1 || r == 7) ? 1 : -1; }
int jm2s(long p) { long r = p % 8; return (r == 1 || r == 3) ? 1 : -1; }
int j3s(long p) { return p % 3 == 1 ? 1 : -1; }  // (p/3) for p != 3
int ipow(int s, int e) { return e % 2 == 0 ? 1 : s; }

Rat rq(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Int bin(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rat ppow(Ctx& c, int k) { return Rat(pow_int(c.p, k)); }

PadicTracked ev(Ctx& c, const SumSpec& s, int target_abs) {
  return eval_sum(s, c.p, c.a, target_abs, c.guard);
}

PadicTracked mulq(Ctx& c, const Rat& q, const PadicTracked& x, int e) {
  return padic_mul(pr(c, q, e), x);
}

PadicTracked Ep3(Ctx& c, int e) { return c.cache.euler_pm3(uprec(c, e)); }
PadicTracked Bp3(Ctx& c, int e) { return c.cache.bernoulli_pm3(uprec(c, e)); }
PadicTracked Bp5(Ctx& c, int e) { return c.cache.bernoulli_pm5(uprec(c, e)); }
PadicTracked Q2(Ctx& c, int e) { return c.cache.fermat_quotient2(uprec(c, e)); }
PadicTracked Hfull(Ctx& c, int e) { return c.cache.harmonic_full(e + c.guard + 4); }
PadicTracked Hhalf(Ctx& c, int e) { return c.cache.harmonic_half(e + c.guard + 2); }
PadicTracked BP13(Ctx& c, int e) { return c.cache.bernoulli_poly_third(uprec(c, e)); }
PadicTracked EP14(Ctx& c, int e) { return c.cache.euler_poly_quarter(uprec(c, e)); }

std::optional<std::string> need(bool cond, const char* msg) {
  if (cond) return std::nullopt;
  return std::string(msg);
}

const TermFactor CB{BinomKind::CentralBinom, 1};
const TermFactor CB2{BinomKind::CentralBinom, 2};
const TermFactor CB3{BinomKind::CentralBinom, 3};
const TermFactor CB5{BinomKind::CentralBinom, 5};
const TermFactor CBi{BinomKind::CentralBinom, -1};
const TermFactor CBi2{BinomKind::CentralBinom, -2};
const TermFactor CBi3{BinomKind::CentralBinom, -3};
const TermFactor B3{BinomKind::Binom3kK, 1};
const TermFactor B3i{BinomKind::Binom3kK, -1};
const TermFactor B4{BinomKind::Binom4k2k, 1};
const TermFactor B42{BinomKind::Binom4k2k, 2};
const TermFactor B6{BinomKind::Binom6k3k, 1};
const TermFactor CAT{BinomKind::Catalan, 1};
const TermFactor CAT2{BinomKind::Catalan2, 1};
const TermFactor CATE{BinomKind::CatalanEven, 1};
const TermFactor B2P1{BinomKind::Binom2kKp1, 1};
const TermFactor B3P1{BinomKind::Binom3kKp1, 1};
const TermFactor B3M1{BinomKind::Binom3kKm1, 1};
const TermFactor B4P1{BinomKind::Binom4k2kp1, 1};

long norm_mod(long x, long m) { return ((x % m) + m) % m; }

FormSolution pick_form(long p, long c1, long d, long scale, const char* what) {
  auto sol = represent_form(p, c1, d, scale);
  if (!sol) throw std::runtime_error(std::string("no representation by form ") + what);
  return *sol;
}

// x with p = x^2 + d y^2 (scale 1), no side condition: first solution.
long plain_x(long p, long d) { return pick_form(p, 1, d, 1, "x^2+dy^2").x; }

Rat two_x_term(long p, long x) { return Rat(2 * x) - rq(Int(p), Int(2 * x)); }

CongruenceSpec spec(std::string id, bool thm, int maxa, AppFn app, ModFn me, LhsFn lhs,
                    RhsFn rhs, bool exact_tables = false) {
  CongruenceSpec s;
  s.id = std::move(id);
  s.is_theorem = thm;
  s.max_a = maxa;
  s.needs_exact_tables = exact_tables;
  s.applicable = std::move(app);
  s.mod_exp = std::move(me);
  s.lhs = std::move(lhs);
  s.rhs = std::move(rhs);
  return s;
}

ModFn me(int e) {
  return [e](long, int) { return e; };
}
AppFn any_p() {
  return [](long, int) -> std::optional<std::string> { return std::nullopt; };
}
AppFn p_gt(long m) {
  return [m](long p, int) { return need(p > m, "requires larger p"); };
}

// Sum of binom(2k,k)^3 / base^k over 0..p-1 (a = 1 entries of Conjecture 5.2).
PadicTracked A3(Ctx& c, const Rat& base, int target) {
  SumSpec s{.range = SumRange::FullPa, .base = base, .factors = {CB3}};
  return ev(c, s, target);
}

void add_theorems(std::vector<CongruenceSpec>& v) {
  v.push_back(spec("1.1", true, 1, any_p(), me(3),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .base = Rat(1, 2), .factors = {CB}};
        return ev(c, s, 3);
      },
      [](Ctx& c) {
        return one(padic_add(pr(c, Rat(jm1(c.p)), 3),
                             mulq(c, -ppow(c, 2), Ep3(c, 3), 3)));
      }));
  v.push_back(spec("1.2", true, 1, p_gt(3), me(2),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::OneToHalf, .k_power = -1, .factors = {CB}};
        return ev(c, s, 2);
      },
      [](Ctx& c) {
        return one(mulq(c, Rat(-jm1(c.p) * 8, 3) * c.p, Ep3(c, 2), 2));
      }));
  v.push_back(spec("1.3", true, 1, p_gt(3), me(1),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::OneToHalf, .k_power = -2, .factors = {CBi}};
        return ev(c, s, 1);
      },
      [](Ctx& c) { return one(mulq(c, Rat(jm1(c.p) * 4, 3), Ep3(c, 1), 1)); }));
  v.push_back(spec("1.4", true, 1, any_p(), me(1),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::OneToHalf, .k_power = -2, .base = Rat(4), .factors = {CBi}};
        return ev(c, s, 1);
      },
      [](Ctx& c) { return one(mulq(c, Rat(4 * jm1(c.p)), Ep3(c, 1), 1)); }));
  v.push_back(spec("1.5", true, 1, any_p(), me(2),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::UpperHalf, .k_power = -1, .base = Rat(1, 4),
                  .factors = {CB}};
        return ev(c, s, 2);
      },
      [](Ctx& c) { return one(mulq(c, Rat(2 * jm1(c.p)) * c.p, Ep3(c, 2), 2)); }));
  v.push_back(spec("1.6", true, 1, p_gt(3), me(3),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::HalfPa, .base = Rat(1, 8), .factors = {CB}};
        return ev(c, s, 3);
      },
      [](Ctx& c) {
        return one(padic_add(pr(c, Rat(j2s(c.p)), 3),
                             mulq(c, Rat(jm2s(c.p), 4) * ppow(c, 2), Ep3(c, 3), 3)));
      }));
  v.push_back(spec("1.7", true, 1, p_gt(3), me(3),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::HalfPa, .base = Rat(1, 16), .factors = {CB2}};
        return ev(c, s, 3);
      },
      [](Ctx& c) {
        return one(padic_add(pr(c, Rat(jm1(c.p)), 3), mulq(c, ppow(c, 2), Ep3(c, 3), 3)));
      }));
  v.push_back(spec("1.8", true, 1, p_gt(3), me(3),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::HalfPa, .c0 = Rat(0), .c1 = Rat(1), .base = Rat(1, 16),
                  .factors = {CB2}};
        return ev(c, s, 3);
      },
      [](Ctx& c) {
        PadicTracked t = padic_sub(pr(c, Rat(1), 3), Ep3(c, 3));
        return one(padic_add(pr(c, Rat(-jm1(c.p), 4), 3),
                             mulq(c, ppow(c, 2) / 4, t, 3)));
      }));
  v.push_back(spec("1.9", true, 1, p_gt(3), me(3),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::UpperHalf, .base = Rat(1, 16), .factors = {CB2}};
        return ev(c, s, 3);
      },
      [](Ctx& c) { return one(mulq(c, Rat(-2) * ppow(c, 2), Ep3(c, 3), 3)); }));
  v.push_back(spec("1.10", true, 1, p_gt(3), me(3),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::UpperHalf, .c0 = Rat(0), .c1 = Rat(1),
                  .base = Rat(1, 16), .factors = {CB2}};
        return ev(c, s, 3);
      },
      [](Ctx& c) { return one(mulq(c, ppow(c, 2) / 2, Ep3(c, 3), 3)); }));
  v.push_back(spec("1.11", true, 1, p_gt(3), me(4),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::HalfPa, .base = Rat(1, 16), .factors = {CB2}};
        return mulq(c, Rat(jm1(c.p)), ev(c, s, 4), 4);
      },
      [](Ctx& c) {
        SumSpec b{.range = SumRange::OneToHalf, .k_power = -1, .factors = {CB}};
        return one(padic_sub(pr(c, Rat(1), 4),
                             mulq(c, Rat(3, 8) * c.p, ev(c, b, 4), 4)));
      }));
  v.push_back(spec("1.12", true, 1, p_gt(3), me(4),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::HalfPa, .c0 = Rat(0), .c1 = Rat(1),
                  .base = Rat(1, 16), .factors = {CB2}};
        return ev(c, s, 4);
      },
      [](Ctx& c) {
        SumSpec b{.range = SumRange::OneToHalf, .k_power = -1, .factors = {CB}};
        Rat two_p = Rat(pow_int(2, static_cast<unsigned long>(c.p)));
        PadicTracked r = pr(c, Rat(-jm1(c.p), 4) + ppow(c, 2) / 4 * (two_p - 1), 4);
        r = padic_add(r, mulq(c, Rat(jm1(c.p) * 3, 32) * c.p, ev(c, b, 4), 4));
        return one(r);
      }));
  v.push_back(spec("rem1.1/ST", true, 1, p_gt(3), me(3),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::OneToPm1, .k_power = -1, .factors = {CB}};
        return ev(c, s, 3);
      },
      [](Ctx& c) { return one(mulq(c, Rat(8, 9) * ppow(c, 2), Bp3(c, 3), 3)); }));
  v.push_back(spec("rem1.1/T1", true, 1, p_gt(5), me(3),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::OneToPm1, .k_power = -1, .base = Rat(1, 4),
                  .factors = {CB}};
        return ev(c, s, 3);
      },
      [](Ctx& c) { return one(padic_neg(Hhalf(c, 3))); }));
  v.push_back(spec("rem1.1/T2", true, 1, p_gt(5), me(3),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::OneToPm1, .k_power = -2, .factors = {CBi}};
        return ev(c, s, 3);
      },
      [](Ctx& c) { return one(mulq(c, Rat(1, 3), shiftv(Hfull(c, 3), -1), 3)); }));
  v.push_back(spec("rem1.3/half", true, 1, p_gt(3), me(4),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::HalfPa, .c0 = Rat(1), .c1 = Rat(4),
                  .base = Rat(1, 16), .factors = {CB2}};
        return ev(c, s, 4);
      },
      [](Ctx& c) {
        Rat two_p = Rat(pow_int(2, static_cast<unsigned long>(c.p)));
        return oneq(c, ppow(c, 2) * (two_p - 1), 4);
      }));
  v.push_back(spec("rem1.3/upper", true, 1, any_p(), me(4),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::UpperHalf, .c0 = Rat(1), .c1 = Rat(4),
                  .base = Rat(1, 16), .factors = {CB2}};
        return ev(c, s, 4);
      },
      [](Ctx& c) {
        Rat t = Rat(pow_int(2, static_cast<unsigned long>(c.p - 1)));
        return oneq(c, Rat(6) * ppow(c, 2) * (1 - t), 4);
      }));
  v.push_back(spec("1.15", true, 2, any_p(), me(4),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .c0 = Rat(8), .c1 = Rat(21), .factors = {CB3}};
        return shiftv(ev(c, s, 4 + c.a), -c.a);
      },
      [](Ctx& c) {
        return one(padic_add(pr(c, Rat(8), 4), mulq(c, Rat(16) * ppow(c, 3), Bp3(c, 4), 4)));
      }));
  v.push_back(spec("vanhamme/256", true, 1, any_p(), me(4),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::HalfPa, .c0 = Rat(1), .c1 = Rat(6),
                  .base = Rat(1, 256), .factors = {CB3}};
        return ev(c, s, 4);
      },
      [](Ctx& c) { return oneq(c, Rat(jm1(c.p)) * c.p, 4); }));
  v.push_back(spec("vanhamme/m512", true, 1, any_p(), me(3),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::HalfPa, .c0 = Rat(1), .c1 = Rat(6),
                  .base = Rat(-1, 512), .factors = {CB3}};
        return ev(c, s, 3);
      },
      [](Ctx& c) { return oneq(c, Rat(jm2s(c.p)) * c.p, 3); }));
  v.push_back(spec("vanhamme/4096", true, 1, any_p(), me(4),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::HalfPa, .c0 = Rat(5), .c1 = Rat(42),
                  .base = Rat(1, 4096), .factors = {CB3}};
        return ev(c, s, 4);
      },
      [](Ctx& c) { return oneq(c, Rat(5 * jm1(c.p)) * c.p, 4); }));
}

void add_conj1(std::vector<CongruenceSpec>& v) {
  v.push_back(spec("az-quintic", false, 1, p_gt(3), me(6),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::HalfPa, .c0 = Rat(32), .c1 = Rat(160), .c2 = Rat(205),
                  .base = Rat(-1), .factors = {CB5}};
        return ev(c, s, 6);
      },
      [](Ctx& c) {
        return one(padic_add(pr(c, Rat(32) * ppow(c, 2), 6),
                             mulq(c, Rat(896, 3) * ppow(c, 5), Bp3(c, 6), 6)));
      }));
  v.push_back(spec("c1.1/l1", false, 1, p_gt(3), me(2),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::OneToPm1, .k_power = -2, .base = Rat(4),
                  .factors = {CBi}};
        return padic_add(ev(c, s, 3), shiftv(mulq(c, Rat(4), Q2(c, 4), 4), -1));
      },
      [](Ctx& c) {
        PadicTracked q = Q2(c, 3);
        PadicTracked r = mulq(c, Rat(-2), padic_mul(q, q), 2);
        return one(padic_add(r, mulq(c, Rat(c.p), Bp3(c, 2), 2)));
      }));
  v.push_back(spec("c1.1/l2", false, 1, p_gt(3), me(3),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::OneToPm1, .k_power = -1, .base = Rat(2),
                  .factors = {CBi}};
        return shiftv(ev(c, s, 3), 1);
      },
      [](Ctx& c) {
        PadicTracked r = pr(c, Rat(jm1(c.p) - 1), 3);
        r = padic_sub(r, mulq(c, Rat(c.p), Q2(c, 3), 3));
        r = padic_add(r, mulq(c, ppow(c, 2), Ep3(c, 3), 3));
        return one(r);
      }));
  v.push_back(spec("c1.1/l3", false, 1, p_gt(3), me(1),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::OneToPm1, .k_power = -3, .factors = {CB}};
        return ev(c, s, 1);
      },
      [](Ctx& c) { return one(mulq(c, Rat(2, 3), Bp3(c, 1), 1)); }));
  v.push_back(spec("c1.1/l4", false, 1, p_gt(7), me(4),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::OneToPm1, .k_power = -3, .factors = {CB}};
        return ev(c, s, 4);
      },
      [](Ctx& c) {
        SumSpec cubes{.range = SumRange::OneToPm1, .k_power = -3};
        PadicTracked r = mulq(c, Rat(-2), shiftv(Hfull(c, 4), -2), 4);
        return one(padic_sub(r, mulq(c, Rat(13, 27), ev(c, cubes, 4), 4)));
      }));
  v.push_back(spec("c1.1/l5", false, 1, p_gt(5), me(1),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::OneToHalf, .k_power = -3, .base = Rat(-1),
                  .factors = {CBi}};
        return ev(c, s, 1);
      },
      [](Ctx& c) { return one(mulq(c, Rat(-2), Bp3(c, 1), 1)); }));
  v.push_back(spec("c1.1/l6", false, 1, p_gt(5), me(2),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::OneToHalf, .k_power = -2, .base = Rat(-1),
                  .factors = {CB}};
        return ev(c, s, 2);
      },
      [](Ctx& c) { return one(mulq(c, Rat(56, 15) * c.p, Bp3(c, 2), 2)); }));
  v.push_back(spec("c1.1/l7", false, 1, p_gt(5), me(2),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::OneToPm1, .k_power = -4, .factors = {CBi}};
        return padic_sub(ev(c, s, 2), shiftv(Hfull(c, 2), -3));
      },
      [](Ctx& c) { return one(mulq(c, Rat(-7, 45) * c.p, Bp5(c, 2), 2)); }));
  // Conjecture 1.2
  AppFn app12a = [](long p, int a) {
    return need(p % 4 == 1 || a > 1, "requires p = 1 mod 4 or a > 1");
  };
  AppFn app12b = [](long p, int a) {
    return need(p > 3 && (p % 8 == 1 || p % 8 == 3 || a > 1),
                "requires p > 3 and (p = 1,3 mod 8 or a > 1)");
  };
  v.push_back(spec("c1.2/13a", false, 2, app12a, me(2),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FloorPa34, .base = Rat(-1, 4), .factors = {CB}};
        return ev(c, s, 2);
      },
      [](Ctx& c) { return oneq(c, Rat(ipow(j2s(c.p), c.a)), 2); }));
  v.push_back(spec("c1.2/13b", false, 2, app12a, me(3),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FloorPa34, .base = Rat(1, 16), .factors = {CB2}};
        return ev(c, s, 3);
      },
      [](Ctx& c) { return oneq(c, Rat(ipow(jm1(c.p), c.a)), 3); }));
  v.push_back(spec("c1.2/14r5", false, 2, app12b, me(3),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FloorPa58, .base = Rat(1, 16), .factors = {CB2}};
        return ev(c, s, 3);
      },
      [](Ctx& c) { return oneq(c, Rat(ipow(jm1(c.p), c.a)), 3); }));
  v.push_back(spec("c1.2/14r7", false, 2, app12b, me(3),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FloorPa78, .base = Rat(1, 16), .factors = {CB2}};
        return ev(c, s, 3);
      },
      [](Ctx& c) { return oneq(c, Rat(ipow(jm1(c.p), c.a)), 3); }));
  // Conjecture 1.3
  v.push_back(spec("c1.3/18", false, 2,
      [](long p, int a) {
        long pa = 1;
        for (int i = 0; i < a; ++i) pa *= p;
        return need(pa % 3 == 1, "requires p^a = 1 mod 3");
      },
      [](long, int a) { return a + 4; },
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FloorPa23, .c0 = Rat(8), .c1 = Rat(21), .factors = {CB3}};
        return ev(c, s, c.a + 4);
      },
      [](Ctx& c) { return oneq(c, Rat(8) * ppow(c, c.a), c.a + 4); }));
  v.push_back(spec("c1.3/19", false, 1, p_gt(5), me(3),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::OneToPm1, .c0 = Rat(-8), .c1 = Rat(21),
                  .k_power = -3, .factors = {CBi3}};
        return padic_add(ev(c, s, 3), pr(c, rq(Int(c.p - 1), pow_int(c.p, 3)), 3));
      },
      [](Ctx& c) {
        PadicTracked h = shiftv(Hfull(c, 3), -2);
        PadicTracked r = padic_mul(h, pr(c, Rat(15) * c.p - 6, 3));
        return one(padic_add(r, mulq(c, Rat(12, 5) * ppow(c, 2), Bp5(c, 3), 3)));
      }));
}

void add_conj51_52(std::vector<CongruenceSpec>& v) {
  v.push_back(spec("5.1ii/1", false, 1, p_gt(3), me(4),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .c0 = Rat(1), .c1 = Rat(3),
                  .base = Rat(-1, 8), .factors = {CB3}};
        return ev(c, s, 4);
      },
      [](Ctx& c) {
        return one(padic_add(pr(c, Rat(jm1(c.p)) * c.p, 4),
                             mulq(c, ppow(c, 3), Ep3(c, 4), 4)));
      }));
  v.push_back(spec("5.1ii/2", false, 1, p_gt(3), me(4),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::HalfPa, .c0 = Rat(1), .c1 = Rat(3),
                  .base = Rat(1, 16), .factors = {CB3}};
        return ev(c, s, 4);
      },
      [](Ctx& c) {
        return one(padic_add(pr(c, Rat(c.p), 4),
                             mulq(c, Rat(2 * jm1(c.p)) * ppow(c, 3), Ep3(c, 4), 4)));
      }));
  v.push_back(spec("5.1ii/3", false, 1, p_gt(3), me(4),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .c0 = Rat(1), .c1 = Rat(6),
                  .base = Rat(1, 256), .factors = {CB3}};
        return ev(c, s, 4);
      },
      [](Ctx& c) {
        return one(padic_sub(pr(c, Rat(jm1(c.p)) * c.p, 4),
                             mulq(c, ppow(c, 3), Ep3(c, 4), 4)));
      }));
  v.push_back(spec("5.1ii/4", false, 1, p_gt(3), me(4),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::HalfPa, .c0 = Rat(1), .c1 = Rat(6),
                  .base = Rat(-1, 512), .factors = {CB3}};
        return ev(c, s, 4);
      },
      [](Ctx& c) {
        return one(padic_add(pr(c, Rat(jm2s(c.p)) * c.p, 4),
                             mulq(c, Rat(j2s(c.p), 4) * ppow(c, 3), Ep3(c, 4), 4)));
      }));
  v.push_back(spec("5.1ii/5", false, 1, p_gt(3), me(4),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .c0 = Rat(5), .c1 = Rat(42),
                  .base = Rat(1, 4096), .factors = {CB3}};
        return ev(c, s, 4);
      },
      [](Ctx& c) {
        return one(padic_sub(pr(c, Rat(5 * jm1(c.p)) * c.p, 4),
                             mulq(c, ppow(c, 3), Ep3(c, 4), 4)));
      }));
  v.push_back(spec("5.1ii/6", false, 1, p_gt(3), me(4),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::HalfPa, .c0 = Rat(1), .c1 = Rat(3),
                  .base = Rat(-1, 8), .factors = {CB3}};
        return ev(c, s, 4);
      },
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .c0 = Rat(1), .c1 = Rat(6),
                  .base = Rat(-1, 512), .factors = {CB3}};
        PadicTracked r = mulq(c, Rat(4 * j2s(c.p)), ev(c, s, 4), 4);
        return one(padic_sub(r, pr(c, Rat(3 * jm1(c.p)) * c.p, 4)));
      }));
  v.push_back(spec("5.1ii/7", false, 3, any_p(), me(4),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .c0 = Rat(1), .c1 = Rat(3),
                  .base = Rat(1, 16), .factors = {CB3}};
        return shiftv(ev(c, s, 4 + c.a), -c.a);
      },
      [](Ctx& c) {
        return one(padic_add(pr(c, Rat(1), 4), mulq(c, Rat(7, 6) * ppow(c, 3), Bp3(c, 4), 4)));
      }));
  v.push_back(spec("5.1ii/8", false, 3, any_p(), me(5),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::HalfPa, .c0 = Rat(5), .c1 = Rat(42),
                  .base = Rat(1, 4096), .factors = {CB3}};
        return shiftv(ev(c, s, 5 + c.a), -c.a);
      },
      [](Ctx& c) {
        PadicTracked r = padic_sub(pr(c, Rat(5), 5),
                                   mulq(c, Rat(3, 4) * c.p, Hfull(c, 5), 5));
        return one(mulq(c, Rat(ipow(jm1(c.p), c.a)), r, 5));
      }));
  // Conjecture 5.2
  v.push_back(spec("5.2i/r1", false, 1,
      [](long p, int) { return need(p > 3 && p % 4 == 1, "requires p = 1 mod 4"); }, me(3),
      [](Ctx& c) { return A3(c, Rat(-1, 8), 3); },
      [](Ctx& c) { return one(A3(c, Rat(1, 64), 3)); }));
  v.push_back(spec("5.2i/r2", false, 1,
      [](long p, int) { return need(p > 3 && p % 4 == 1, "requires p = 1 mod 4"); }, me(3),
      [](Ctx& c) { return A3(c, Rat(1, 64), 3); },
      [](Ctx& c) { return one(mulq(c, Rat(j2s(c.p)), A3(c, Rat(-1, 512), 3), 3)); }));
  v.push_back(spec("5.2i/z1", false, 1,
      [](long p, int) { return need(p % 4 == 3, "requires p = 3 mod 4"); }, me(2),
      [](Ctx& c) { return A3(c, Rat(-1, 8), 2); }, zero_rhs));
  v.push_back(spec("5.2i/z2", false, 1,
      [](long p, int) { return need(p % 4 == 3, "requires p = 3 mod 4"); }, me(2),
      [](Ctx& c) { return A3(c, Rat(-1, 512), 2); }, zero_rhs));
  v.push_back(spec("5.2ii/r", false, 1,
      [](long p, int) { return need(p % 3 == 1, "requires p = 1 mod 3"); }, me(3),
      [](Ctx& c) { return A3(c, Rat(1, 16), 3); },
      [](Ctx& c) { return one(mulq(c, Rat(jm1(c.p)), A3(c, Rat(1, 256), 3), 3)); }));
  v.push_back(spec("5.2ii/f", false, 1,
      [](long p, int) { return need(p % 3 == 1, "requires p = 1 mod 3"); }, me(2),
      [](Ctx& c) { return A3(c, Rat(1, 16), 2); },
      [](Ctx& c) {
        long x = plain_x(c.p, 3);
        return oneq(c, Rat(4 * x * x - 2 * c.p), 2);
      }));
  v.push_back(spec("5.2ii/z1", false, 1,
      [](long p, int) { return need(p > 3 && p % 3 == 2, "requires p = 2 mod 3"); }, me(2),
      [](Ctx& c) { return A3(c, Rat(1, 16), 2); }, zero_rhs));
  v.push_back(spec("5.2ii/z2", false, 1,
      [](long p, int) { return need(p > 3 && p % 3 == 2, "requires p = 2 mod 3"); }, me(2),
      [](Ctx& c) { return A3(c, Rat(1, 256), 2); }, zero_rhs));
  v.push_back(spec("5.2iii/r", false, 1,
      [](long p, int) { return need(p != 7 && jacobi(p, 7) == 1, "requires (p/7) = 1"); },
      me(3), [](Ctx& c) { return A3(c, Rat(1), 3); },
      [](Ctx& c) { return one(mulq(c, Rat(jm1(c.p)), A3(c, Rat(1, 4096), 3), 3)); }));
  v.push_back(spec("5.2iii/z", false, 1,
      [](long p, int) { return need(p != 7 && jacobi(p, 7) == -1, "requires (p/7) = -1"); },
      me(2), [](Ctx& c) { return A3(c, Rat(1, 4096), 2); }, zero_rhs));
  v.push_back(spec("5.2iv/f", false, 1,
      [](long p, int) { return need(jm2s(p) == 1, "requires (-2/p) = 1"); }, me(2),
      [](Ctx& c) { return A3(c, Rat(-1, 64), 2); },
      [](Ctx& c) {
        long x = plain_x(c.p, 2);
        return oneq(c, Rat(jm1(c.p)) * (4 * x * x - 2 * c.p), 2);
      }));
  v.push_back(spec("5.2iv/z", false, 1,
      [](long p, int) { return need(p % 8 == 5 || p % 8 == 7, "requires p = 5,7 mod 8"); },
      me(2), [](Ctx& c) { return A3(c, Rat(-1, 64), 2); }, zero_rhs));
}

void add_conj53_55(std::vector<CongruenceSpec>& v) {
  v.push_back(spec("5.3/rel", false, 1,
      [](long p, int) { return need(p > 3 && jacobi(p, 7) == 1, "requires (p/7) = 1"); },
      me(3),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .base = Rat(1, 81), .factors = {CB2, B4}};
        return ev(c, s, 3);
      },
      [](Ctx& c) { return one(A3(c, Rat(1), 3)); }));
  v.push_back(spec("5.3/zero", false, 1,
      [](long p, int) { return need(p > 3 && jacobi(p, 7) == -1, "requires (p/7) = -1"); },
      me(2),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .base = Rat(1, 81), .factors = {CB2, B4}};
        return ev(c, s, 2);
      },
      zero_rhs));
  v.push_back(spec("5.3/half", false, 2, p_gt(3), me(2),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::HalfPa, .c0 = Rat(8), .c1 = Rat(35),
                  .base = Rat(1, 81), .factors = {CB2, B4}};
        return shiftv(ev(c, s, 2 + c.a), -c.a);
      },
      [](Ctx& c) {
        return oneq(c, Rat(8) * Rat(pow_int(3, static_cast<unsigned long>(c.p - 1))), 2);
      }));
  v.push_back(spec("5.3/full", false, 2, p_gt(3), me(4),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .c0 = Rat(8), .c1 = Rat(35),
                  .base = Rat(1, 81), .factors = {CB2, B4}};
        return shiftv(ev(c, s, 4 + c.a), -c.a);
      },
      [](Ctx& c) {
        return one(padic_add(pr(c, Rat(8), 4),
                             mulq(c, Rat(416, 27) * ppow(c, 3), Bp3(c, 4), 4)));
      }));
  v.push_back(spec("5.4i", false, 3, any_p(), me(4),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .c0 = Rat(3), .c1 = Rat(11),
                  .base = Rat(1, 64), .factors = {CB2, B3}};
        return shiftv(ev(c, s, 4 + c.a), -c.a);
      },
      [](Ctx& c) {
        return one(padic_add(pr(c, Rat(3), 4), mulq(c, Rat(7, 2) * ppow(c, 3), Bp3(c, 4), 4)));
      }));
  v.push_back(spec("5.4ii", false, 1, p_gt(3), me(3),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::OneToHalf, .c0 = Rat(-3), .c1 = Rat(11),
                  .k_power = -3, .base = Rat(64), .factors = {CBi2, B3i}};
        return shiftv(ev(c, s, 2), 1);
      },
      [](Ctx& c) {
        PadicTracked r = mulq(c, Rat(32), Q2(c, 3), 3);
        return one(padic_sub(r, mulq(c, Rat(64, 3) * ppow(c, 2), Bp3(c, 3), 3)));
      }));
  v.push_back(spec("5.5a", false, 3, any_p(), me(4),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .c0 = Rat(3), .c1 = Rat(10),
                  .base = Rat(1, 8), .factors = {CB2, B3}};
        return shiftv(ev(c, s, 4 + c.a), -c.a);
      },
      [](Ctx& c) {
        return one(padic_add(pr(c, Rat(3), 4), mulq(c, Rat(49, 8) * ppow(c, 3), Bp3(c, 4), 4)));
      }));
  v.push_back(spec("5.5/form", false, 1,
      [](long p, int) { return need(jm2s(p) == 1, "requires (-2/p) = 1"); }, me(2),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .base = Rat(1, 8), .factors = {CB2, B3}};
        return ev(c, s, 2);
      },
      [](Ctx& c) {
        long x = plain_x(c.p, 2);
        return oneq(c, Rat(4 * x * x - 2 * c.p), 2);
      }));
  v.push_back(spec("5.5/zero", false, 1,
      [](long p, int) { return need(jm2s(p) == -1, "requires (-2/p) = -1"); }, me(2),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .base = Rat(1, 8), .factors = {CB2, B3}};
        return ev(c, s, 2);
      },
      zero_rhs));
}

PadicTracked sum_b223(Ctx& c, const Rat& base, int target) {
  SumSpec s{.range = SumRange::FullPa, .base = base, .factors = {CB2, B3}};
  return ev(c, s, target);
}
PadicTracked sum_b224(Ctx& c, const Rat& base, int target) {
  SumSpec s{.range = SumRange::FullPa, .base = base, .factors = {CB2, B4}};
  return ev(c, s, target);
}

void add_conj56(std::vector<CongruenceSpec>& v) {
  v.push_back(spec("5.6/m27-f15", false, 1,
      [](long p, int) {
        return need(p > 3 && (p % 15 == 1 || p % 15 == 4), "requires p = 1,4 mod 15");
      },
      me(2), [](Ctx& c) { return sum_b223(c, Rat(-1, 27), 2); },
      [](Ctx& c) {
        long x = plain_x(c.p, 15);
        return oneq(c, Rat(4 * x * x - 2 * c.p), 2);
      }));
  v.push_back(spec("5.6/m27-f35", false, 1,
      [](long p, int) {
        return need(p > 3 && (p % 15 == 2 || p % 15 == 8), "requires p = 2,8 mod 15");
      },
      me(2), [](Ctx& c) { return sum_b223(c, Rat(-1, 27), 2); },
      [](Ctx& c) {
        long x = pick_form(c.p, 3, 5, 1, "3x^2+5y^2").x;
        return oneq(c, Rat(2 * c.p - 12 * x * x), 2);
      }));
  v.push_back(spec("5.6/m27-z", false, 1,
      [](long p, int) { return need(p > 3 && jacobi(p, 15) == -1, "requires (p/15) = -1"); },
      me(2), [](Ctx& c) { return sum_b223(c, Rat(-1, 27), 2); }, zero_rhs));
  v.push_back(spec("5.6/m192-f", false, 1,
      [](long p, int) { return need(p % 3 == 1, "requires p = 1 mod 3"); }, me(2),
      [](Ctx& c) { return sum_b223(c, Rat(-1, 192), 2); },
      [](Ctx& c) {
        long x = pick_form(c.p, 1, 27, 4, "x^2+27y^2=4p").x;
        return oneq(c, Rat(x * x - 2 * c.p), 2);
      }));
  v.push_back(spec("5.6/m192-z", false, 1,
      [](long p, int) { return need(p > 3 && p % 3 == 2, "requires p = 2 mod 3"); }, me(2),
      [](Ctx& c) { return sum_b223(c, Rat(-1, 192), 2); }, zero_rhs));
  v.push_back(spec("5.6/216-rel", false, 1, p_gt(3),
      [](long p, int) { return (5 + jacobi(-6, p)) / 2; },
      [](Ctx& c) {
        int e = (5 + jacobi(-6, c.p)) / 2;
        return sum_b223(c, Rat(1, 216), e);
      },
      [](Ctx& c) {
        int e = (5 + jacobi(-6, c.p)) / 2;
        return one(mulq(c, Rat(j3s(c.p)), sum_b224(c, Rat(1, 2304), e), e));
      }));
  v.push_back(spec("5.6/216-f16", false, 1,
      [](long p, int) { return need(p % 24 == 1 || p % 24 == 7, "requires p = 1,7 mod 24"); },
      me(2), [](Ctx& c) { return sum_b223(c, Rat(1, 216), 2); },
      [](Ctx& c) {
        long x = plain_x(c.p, 6);
        return oneq(c, Rat(4 * x * x - 2 * c.p), 2);
      }));
  v.push_back(spec("5.6/216-f23", false, 1,
      [](long p, int) { return need(p % 24 == 5 || p % 24 == 11, "requires p = 5,11 mod 24"); },
      me(2), [](Ctx& c) { return sum_b223(c, Rat(1, 216), 2); },
      [](Ctx& c) {
        long x = pick_form(c.p, 2, 3, 1, "2x^2+3y^2").x;
        return oneq(c, Rat(8 * x * x - 2 * c.p), 2);
      }));
  v.push_back(spec("5.6/216-z", false, 1,
      [](long p, int) { return need(p > 3 && jacobi(-6, p) == -1, "requires (-6/p) = -1"); },
      me(2), [](Ctx& c) { return sum_b223(c, Rat(1, 216), 2); }, zero_rhs));
  v.push_back(spec("5.6/28e4-f", false, 1,
      [](long p, int) { return need(p > 3 && p != 7 && jm2s(p) == 1, "requires (-2/p)=1, p!=7"); },
      me(2), [](Ctx& c) { return sum_b224(c, Rat(1, 614656), 2); },
      [](Ctx& c) {
        long x = plain_x(c.p, 2);
        return oneq(c, Rat(4 * x * x - 2 * c.p), 2);
      }));
  v.push_back(spec("5.6/28e4-z", false, 1,
      [](long p, int) { return need(p > 3 && p != 7 && jm2s(p) == -1, "requires (-2/p)=-1, p!=7"); },
      me(2), [](Ctx& c) { return sum_b224(c, Rat(1, 614656), 2); }, zero_rhs));
  v.push_back(spec("5.6/12288-f", false, 1,
      [](long p, int) { return need(p % 12 == 1, "requires p = 1 mod 12"); }, me(2),
      [](Ctx& c) { return sum_b224(c, Rat(-1, 12288), 2); },
      [](Ctx& c) {
        for (const auto& s : represent_form_all(c.p, 1, 1, 1))
          if (s.x % 3 != 0 && s.y % 3 == 0)
            return oneq(c, Rat(4 * s.x * s.x - 2 * c.p), 2);
        throw std::runtime_error("no x^2+y^2 split with 3|y");
      }));
  v.push_back(spec("5.6/12288-s", false, 1,
      [](long p, int) { return need(p % 12 == 5, "requires p = 5 mod 12"); }, me(2),
      [](Ctx& c) { return sum_b224(c, Rat(-1, 12288), 2); },
      [](Ctx& c) {
        RhsResult r;
        for (const auto& s : represent_form_all(c.p, 1, 1, 1)) {
          if (s.x < s.y) continue;
          for (int sx : {1, -1}) {
            long xy = sx * s.x * s.y;
            int j = jacobi(Int(xy), Int(3));
            r.candidates.push_back(pr(c, Rat(-4 * j) * xy, 2));
          }
        }
        r.ambiguous = r.candidates.size() > 1;
        return r;
      }));
  v.push_back(spec("5.6/12288-z", false, 1,
      [](long p, int) { return need(p % 12 == 7 || p % 12 == 11, "requires p = 3 mod 4"); },
      me(2), [](Ctx& c) { return sum_b224(c, Rat(-1, 12288), 2); }, zero_rhs));
  // a-families with Bernoulli polynomial values
  struct AFam {
    const char* id;
    Rat c0, c1, base;
    bool four;  // uses binom(4k,2k) instead of binom(3k,k)
    Rat v0, coef;
    bool skip7;
  };
  const AFam fams[] = {
      {"5.6/a27", Rat(4), Rat(15), Rat(-1, 27), false, Rat(4), Rat(4, 3), false},
      {"5.6/a192", Rat(1), Rat(5), Rat(-1, 192), false, Rat(1), Rat(5, 18), false},
      {"5.6/a216", Rat(1), Rat(6), Rat(1, 216), false, Rat(1), Rat(-5, 12), false},
      {"5.6/a48", Rat(1), Rat(8), Rat(1, 2304), true, Rat(1), Rat(-5, 24), false},
      {"5.6/a28e4", Rat(3), Rat(40), Rat(1, 614656), true, Rat(3), Rat(-5, 392), true},
      {"5.6/a12288", Rat(3), Rat(28), Rat(-1, 12288), true, Rat(3), Rat(5, 24), false},
      {"rem5.2i/a144", Rat(1), Rat(5), Rat(-1, 144), true, Rat(1), Rat(5, 12), false},
  };
  for (const auto& f : fams) {
    bool skip7 = f.skip7;
    Rat c0 = f.c0, c1 = f.c1, base = f.base, v0 = f.v0, coef = f.coef;
    bool four = f.four;
    v.push_back(spec(f.id, false, 2,
        [skip7](long p, int) {
          if (skip7 && p == 7) return std::optional<std::string>("p = 7 excluded");
          return need(p > 3, "requires p > 3");
        },
        me(3),
        [c0, c1, base, four](Ctx& c) {
          SumSpec s{.range = SumRange::FullPa, .c0 = c0, .c1 = c1, .base = base,
                    .factors = {CB2, four ? B4 : B3}};
          return shiftv(ev(c, s, 3 + c.a), -c.a);
        },
        [v0, coef](Ctx& c) {
          int j3a = ipow(j3s(c.p), c.a);
          int j3a1 = ipow(j3s(c.p), c.a - 1);
          PadicTracked r = pr(c, v0 * j3a, 3);
          return one(padic_add(
              r, mulq(c, coef * j3a1 * ppow(c, 2), BP13(c, 3), 3)));
        },
        true));
  }
  v.push_back(spec("5.6/tail", false, 2, p_gt(3),
      [](long, int a) { return a + 2; },
      [](Ctx& c) {
        SumSpec s{.range = SumRange::UpperHalfPa, .c0 = Rat(1), .c1 = Rat(8),
                  .base = Rat(1, 2304), .factors = {CB2, B4}};
        return ev(c, s, c.a + 2);
      },
      zero_rhs));
}

void add_conj57_59(std::vector<CongruenceSpec>& v) {
  v.push_back(spec("5.7/1024-f", false, 1,
      [](long p, int) { return need(p % 20 == 1 || p % 20 == 9, "requires p = 1,9 mod 20"); },
      me(2), [](Ctx& c) { return sum_b224(c, Rat(-1, 1024), 2); },
      [](Ctx& c) {
        long x = plain_x(c.p, 5);
        return oneq(c, Rat(4 * x * x - 2 * c.p), 2);
      }));
  v.push_back(spec("5.7/1024-g", false, 1,
      [](long p, int) { return need(p % 20 == 3 || p % 20 == 7, "requires p = 3,7 mod 20"); },
      me(2), [](Ctx& c) { return sum_b224(c, Rat(-1, 1024), 2); },
      [](Ctx& c) {
        long x = pick_form(c.p, 1, 5, 2, "x^2+5y^2=2p").x;
        return oneq(c, Rat(2 * c.p - 2 * x * x), 2);
      }));
  v.push_back(spec("5.7/1024-z", false, 1,
      [](long p, int) { return need(p > 5 && jacobi(-5, p) == -1, "requires (-5/p) = -1"); },
      me(2), [](Ctx& c) { return sum_b224(c, Rat(-1, 1024), 2); }, zero_rhs));
  v.push_back(spec("5.7/12e4-f", false, 1,
      [](long p, int) {
        long r = p % 40;
        return need(p > 3 && (r == 1 || r == 9 || r == 11 || r == 19),
                    "requires p = 1,9,11,19 mod 40");
      },
      me(2), [](Ctx& c) { return sum_b224(c, Rat(1, 20736), 2); },
      [](Ctx& c) {
        long x = plain_x(c.p, 10);
        return oneq(c, Rat(4 * x * x - 2 * c.p), 2);
      }));
  v.push_back(spec("5.7/12e4-g", false, 1,
      [](long p, int) {
        long r = p % 40;
        return need(r == 7 || r == 13 || r == 23 || r == 37,
                    "requires p = 7,13,23,37 mod 40");
      },
      me(2), [](Ctx& c) { return sum_b224(c, Rat(1, 20736), 2); },
      [](Ctx& c) {
        long x = pick_form(c.p, 2, 5, 1, "2x^2+5y^2").x;
        return oneq(c, Rat(2 * c.p - 8 * x * x), 2);
      }));
  v.push_back(spec("5.7/12e4-z", false, 1,
      [](long p, int) {
        long r = p % 40;
        bool f = r == 1 || r == 9 || r == 11 || r == 19;
        bool g = r == 7 || r == 13 || r == 23 || r == 37;
        return need(p > 5 && !f && !g, "requires (-10/p) = -1");
      },
      me(2), [](Ctx& c) { return sum_b224(c, Rat(1, 20736), 2); }, zero_rhs));
  v.push_back(spec("5.7/big-f", false, 1,
      [](long p, int) {
        return need(p > 5 && (p % 20 == 1 || p % 20 == 9), "requires p = 1,9 mod 20");
      },
      me(2), [](Ctx& c) { return sum_b224(c, Rat(-1, 6635520), 2); },
      [](Ctx& c) {
        for (const auto& s : represent_form_all(c.p, 1, 1, 1))
          if (s.x % 5 != 0 && s.y % 5 == 0)
            return oneq(c, Rat(4 * s.x * s.x - 2 * c.p), 2);
        throw std::runtime_error("no x^2+y^2 split with 5|y");
      }));
  v.push_back(spec("5.7/big-s", false, 1,
      [](long p, int) { return need(p % 20 == 13 || p % 20 == 17, "requires p = 13,17 mod 20"); },
      me(2), [](Ctx& c) { return sum_b224(c, Rat(-1, 6635520), 2); },
      [](Ctx& c) {
        RhsResult r;
        std::vector<Rat> seen;
        for (const auto& s : represent_form_all(c.p, 1, 1, 1))
          for (int sx : {1, -1})
            for (int sy : {1, -1}) {
              if (norm_mod(sx * s.x + sy * s.y, 5) != 0) continue;
              Rat val = Rat(4 * sx * s.x) * (sy * s.y);
              if (std::find(seen.begin(), seen.end(), val) != seen.end()) continue;
              seen.push_back(val);
              r.candidates.push_back(pr(c, val, 2));
            }
        r.ambiguous = r.candidates.size() > 1;
        return r;
      }));
  v.push_back(spec("5.7/big-z", false, 1,
      [](long p, int) { return need(p > 5 && p % 4 == 3, "requires p = 3 mod 4"); }, me(2),
      [](Ctx& c) { return sum_b224(c, Rat(-1, 6635520), 2); }, zero_rhs));
  v.push_back(spec("5.7/1024-a", false, 2, any_p(), me(3),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .c0 = Rat(3), .c1 = Rat(20),
                  .base = Rat(-1, 1024), .factors = {CB2, B4}};
        return shiftv(ev(c, s, 3 + c.a), -c.a);
      },
      [](Ctx& c) {
        PadicTracked r = pr(c, Rat(3 * ipow(jm1(c.p), c.a)), 3);
        return one(padic_add(
            r, mulq(c, Rat(3 * ipow(jm1(c.p), c.a - 1)) * ppow(c, 2), Ep3(c, 3), 3)));
      }));
  v.push_back(spec("5.7/12e4-a", false, 2, p_gt(3), me(3),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .c0 = Rat(1), .c1 = Rat(10),
                  .base = Rat(1, 20736), .factors = {CB2, B4}};
        return shiftv(ev(c, s, 3 + c.a), -c.a);
      },
      [](Ctx& c) {
        PadicTracked r = pr(c, Rat(ipow(jm2s(c.p), c.a)), 3);
        return one(padic_sub(
            r, mulq(c, Rat(ipow(jm2s(c.p), c.a - 1), 48) * ppow(c, 2), EP14(c, 3), 3)));
      },
      true));
  // Conjecture 5.8
  v.push_back(spec("5.8/form", false, 1,
      [](long p, int) { return need(p != 11 && jacobi(p, 11) == 1, "requires (p/11) = 1"); },
      me(2),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .base = Rat(-1, 32768), .factors = {B6, B3, CB}};
        return ev(c, s, 2);
      },
      [](Ctx& c) {
        long x = pick_form(c.p, 1, 11, 4, "x^2+11y^2=4p").x;
        return oneq(c, Rat(jm2s(c.p)) * (Rat(x) * x - 2 * c.p), 2);
      }));
  v.push_back(spec("5.8/zero", false, 1,
      [](long p, int) { return need(p != 11 && jacobi(p, 11) == -1, "requires (p/11) = -1"); },
      me(2),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .base = Rat(-1, 32768), .factors = {B6, B3, CB}};
        return ev(c, s, 2);
      },
      zero_rhs));
  v.push_back(spec("5.8/a", false, 2, any_p(), me(3),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .c0 = Rat(15), .c1 = Rat(154),
                  .base = Rat(-1, 32768), .factors = {B6, B3, CB}};
        return shiftv(ev(c, s, 3 + c.a), -c.a);
      },
      [](Ctx& c) {
        PadicTracked r = pr(c, Rat(15 * ipow(jm2s(c.p), c.a)), 3);
        return one(padic_add(
            r, mulq(c, Rat(15 * ipow(jm2s(c.p), c.a - 1), 16) * ppow(c, 2), EP14(c, 3), 3)));
      },
      true));
  // Conjecture 5.9
  v.push_back(spec("5.9/1", false, 3,
      [](long p, int) { return need(p % 3 == 1, "requires p = 1 mod 3"); },
      [](long, int a) { return 2 * a; },
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .c0 = Rat(2), .c1 = Rat(9),
                  .base = Rat(1, 108), .factors = {CB2, B3}};
        return ev(c, s, 2 * c.a);
      },
      zero_rhs));
  v.push_back(spec("5.9/2", false, 3,
      [](long p, int) { return need(p % 8 == 1 || p % 8 == 3, "requires p = 1,3 mod 8"); },
      [](long p, int a) { return 2 * a + (p == 3 ? 1 : 0); },
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .c0 = Rat(3), .c1 = Rat(16),
                  .base = Rat(1, 256), .factors = {CB2, B4}};
        return ev(c, s, 2 * c.a + (c.p == 3 ? 1 : 0));
      },
      zero_rhs));
  v.push_back(spec("5.9/3", false, 3,
      [](long p, int) { return need(p % 4 == 1, "requires p = 1 mod 4"); },
      [](long, int a) { return 2 * a; },
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .c0 = Rat(1), .c1 = Rat(4),
                  .base = Rat(1, 64), .factors = {CB3}};
        return ev(c, s, 2 * c.a);
      },
      zero_rhs));
  v.push_back(spec("5.9/4", false, 3,
      [](long p, int) { return need(p % 4 == 1, "requires p = 1 mod 4"); },
      [](long p, int a) { return 2 * a + (p == 5 ? 1 : 0); },
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .c0 = Rat(5), .c1 = Rat(36),
                  .base = Rat(1, 1728), .factors = {B6, B3, CB}};
        return ev(c, s, 2 * c.a + (c.p == 5 ? 1 : 0));
      },
      zero_rhs));
}

void add_conj510_512(std::vector<CongruenceSpec>& v) {
  v.push_back(spec("5.10i", false, 2,
      [](long p, int) { return need(p % 3 == 1, "requires p = 1 mod 3"); },
      [](long, int a) { return a + 1; },
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .c0 = Rat(0), .c1 = Rat(1),
                  .base = Rat(1, 54), .factors = {CB, B3}};
        return ev(c, s, c.a + 1);
      },
      zero_rhs));
  v.push_back(spec("5.10ii/f", false, 1,
      [](long p, int) {
        return need(p > 3 && (p % 8 == 1 || p % 8 == 3), "requires p = 1,3 mod 8, p > 3");
      },
      me(2),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .base = Rat(1, 128), .factors = {CB, B4}};
        return ev(c, s, 2);
      },
      [](Ctx& c) {
        long x = pick_form(c.p, 1, 2, 1, "x^2+2y^2").x;
        if (norm_mod(x, 4) != 1) x = -x;
        int sgn = ((c.p + 5) / 8) % 2 ? -1 : 1;
        return oneq(c, Rat(sgn) * two_x_term(c.p, x), 2);
      }));
  v.push_back(spec("5.10ii/a", false, 2,
      [](long p, int) { return need(p % 8 == 1 || p % 8 == 3, "requires p = 1,3 mod 8"); },
      [](long p, int a) { return a + 1 + (p == 3 ? 1 : 0); },
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .c0 = Rat(0), .c1 = Rat(1),
                  .base = Rat(1, 128), .factors = {CB, B4}};
        return ev(c, s, c.a + 1 + (c.p == 3 ? 1 : 0));
      },
      zero_rhs));
  v.push_back(spec("5.10iii/f1", false, 1,
      [](long p, int) { return need(p % 12 == 1, "requires p = 1 mod 12"); }, me(2),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .base = Rat(1, 864), .factors = {B6, B3}};
        return ev(c, s, 2);
      },
      [](Ctx& c) {
        long x = 0;
        for (const auto& s : represent_form_all(c.p, 1, 1, 1))
          if (s.x % 2 == 1) x = s.x;
        if (norm_mod(x, 4) != 1) x = -x;
        long fl = x >= 0 ? x / 6 : -((-x + 5) / 6);
        int sgn = (fl % 2 + 2) % 2 ? -1 : 1;
        return oneq(c, Rat(sgn) * two_x_term(c.p, x), 2);
      }));
  v.push_back(spec("5.10iii/f2", false, 1,
      [](long p, int) { return need(p > 5 && p % 12 == 5, "requires p = 5 mod 12, p > 5"); },
      me(2),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .base = Rat(1, 864), .factors = {B6, B3}};
        return ev(c, s, 2);
      },
      [](Ctx& c) {
        long x = 0, y = 0;
        for (const auto& s : represent_form_all(c.p, 1, 1, 1))
          if (s.x % 2 == 1) {
            x = s.x;
            y = s.y;
          }
        if (norm_mod(x, 4) != 1) x = -x;
        RhsResult r;
        for (int sy : {1, -1}) {
          long yy = sy * y;
          int j = jacobi(Int(x) * yy, Int(3));
          r.candidates.push_back(
              pr(c, Rat(j) * (Rat(2 * yy) - rq(Int(c.p), Int(2 * yy))), 2));
        }
        r.ambiguous = true;
        return r;
      }));
  v.push_back(spec("5.10iii/a", false, 2,
      [](long p, int) { return need(p % 4 == 1, "requires p = 1 mod 4"); },
      [](long, int a) { return a + 1; },
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .c0 = Rat(0), .c1 = Rat(1),
                  .base = Rat(1, 864), .factors = {B6, B3}};
        return ev(c, s, c.a + 1);
      },
      zero_rhs));
  v.push_back(spec("5.10iii/p5", false, 2,
      [](long p, int) { return need(p == 5, "requires p = 5"); },
      [](long, int a) { return a + 3; },
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .c0 = Rat(0), .c1 = Rat(1),
                  .base = Rat(1, 864), .factors = {B6, B3}};
        return ev(c, s, c.a + 3);
      },
      [](Ctx& c) { return oneq(c, Rat(3) * ppow(c, c.a + 2), c.a + 3); }));
  // Conjecture 5.11
  v.push_back(spec("5.11i/1", false, 1,
      [](long p, int) { return need(p % 12 == 7, "requires p = 7 mod 12"); }, me(2),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .base = Rat(-1, 16), .factors = {CB2},
                  .character_mod3 = true};
        return ev(c, s, 2);
      },
      [](Ctx& c) {
        long y = pick_form(c.p, 1, 3, 1, "x^2+3y^2").y;
        if (norm_mod(y, 4) != 1) y = -y;
        int sgn = ((c.p - 3) / 4) % 2 ? -1 : 1;
        return oneq(c, Rat(sgn) * (Rat(4 * y) - rq(Int(c.p), Int(3 * y))), 2);
      }));
  v.push_back(spec("5.11i/2", false, 1,
      [](long p, int) { return need(p % 12 == 7, "requires p = 7 mod 12"); }, me(2),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .c0 = Rat(0), .c1 = Rat(1),
                  .base = Rat(-1, 16), .factors = {CB2}, .character_mod3 = true};
        return ev(c, s, 2);
      },
      [](Ctx& c) {
        long y = pick_form(c.p, 1, 3, 1, "x^2+3y^2").y;
        if (norm_mod(y, 4) != 1) y = -y;
        int sgn = ((c.p + 1) / 4) % 2 ? -1 : 1;
        return oneq(c, Rat(sgn * y), 2);
      }));
  v.push_back(spec("5.11ii/1", false, 1,
      [](long p, int) { return need(p % 12 == 1, "requires p = 1 mod 12"); }, me(2),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .base = Rat(1, 16), .factors = {CB2},
                  .extra_binom_upper = true, .character_mod3 = true};
        return ev(c, s, 2);
      },
      zero_rhs));
  v.push_back(spec("5.11ii/2", false, 1,
      [](long p, int) { return need(p % 12 == 11, "requires p = 11 mod 12"); }, me(1),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .base = Rat(-1, 16), .factors = {CB2},
                  .character_mod3 = true};
        return ev(c, s, 1);
      },
      zero_rhs));
  // Conjecture 5.12
  v.push_back(spec("5.12i/1", false, 2, any_p(), me(3),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .base = Rat(1, 64), .factors = {CB, B4}};
        return ev(c, s, 3);
      },
      [](Ctx& c) {
        PadicTracked r = pr(c, Rat(ipow(jm2s(c.p), c.a)), 3);
        return one(padic_sub(
            r, mulq(c, Rat(3 * ipow(jm2s(c.p), c.a - 1), 16) * ppow(c, 2), EP14(c, 3), 3)));
      },
      true));
  v.push_back(spec("5.12i/2", false, 2, any_p(), me(3),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .base = Rat(1, 64), .factors = {CB, CATE}};
        return ev(c, s, 3);
      },
      [](Ctx& c) {
        PadicTracked r = pr(c, Rat(ipow(jm1(c.p), c.a)), 3);
        return one(padic_sub(
            r, mulq(c, Rat(3 * ipow(jm1(c.p), c.a - 1)) * ppow(c, 2), Ep3(c, 3), 3)));
      }));
  v.push_back(spec("5.12ii/1", false, 2, p_gt(3), me(3),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .base = Rat(1, 432), .factors = {B6, B3}};
        return ev(c, s, 3);
      },
      [](Ctx& c) {
        PadicTracked r = pr(c, Rat(ipow(jm1(c.p), c.a)), 3);
        return one(padic_sub(
            r, mulq(c, Rat(25 * ipow(jm1(c.p), c.a - 1), 9) * ppow(c, 2), Ep3(c, 3), 3)));
      }));
  v.push_back(spec("5.12ii/2", false, 2, p_gt(3), me(2),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .base = Rat(1, 432), .factors = {B6, CAT2}};
        return ev(c, s, 2);
      },
      [](Ctx& c) { return oneq(c, Rat(ipow(j3s(c.p), c.a)), 2); }));
  v.push_back(spec("5.12iii/1", false, 2, p_gt(3), me(1),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .base = Rat(1, 27), .factors = {B2P1, B3P1}};
        return ev(c, s, 1);
      },
      [](Ctx& c) { return oneq(c, Rat(2 * ipow(j3s(c.p), c.a) - 7), 1); }));
  v.push_back(spec("5.12iii/2", false, 2, p_gt(3), me(2),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .base = Rat(1, 27), .factors = {B2P1, B3M1}};
        return ev(c, s, 2);
      },
      [](Ctx& c) { return oneq(c, Rat(ipow(j3s(c.p), c.a)) - ppow(c, c.a), 2); }));
  v.push_back(spec("5.12iii/3", false, 2, p_gt(3), me(3),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .base = Rat(1, 27), .factors = {CB, B3}};
        return ev(c, s, 3);
      },
      [](Ctx& c) {
        PadicTracked r = pr(c, Rat(ipow(j3s(c.p), c.a)), 3);
        return one(padic_sub(
            r, mulq(c, Rat(ipow(j3s(c.p), c.a - 1), 3) * ppow(c, 2), BP13(c, 3), 3)));
      },
      true));
  v.push_back(spec("5.12iii/4", false, 2, p_gt(3), me(3),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .base = Rat(1, 27), .factors = {CB, CAT2}};
        return ev(c, s, 3);
      },
      [](Ctx& c) {
        PadicTracked r = pr(c, Rat(ipow(j3s(c.p), c.a)), 3);
        return one(padic_sub(
            r, mulq(c, Rat(2 * ipow(j3s(c.p), c.a - 1), 3) * ppow(c, 2), BP13(c, 3), 3)));
      },
      true));
  v.push_back(spec("5.12iii/5", false, 2, p_gt(3), me(4),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .c0 = Rat(1), .c1 = Rat(4),
                  .base = Rat(1, 27), .factors = {CB, CAT2}};
        return ev(c, s, 4);
      },
      [](Ctx& c) { return oneq(c, Rat(ipow(j3s(c.p), c.a)), 4); }));
}

void add_conj513_515(std::vector<CongruenceSpec>& v) {
  auto b23sum = [](Ctx& c, const Rat& base, int target) {
    SumSpec s{.range = SumRange::FullPa, .base = base, .factors = {CB, B3}};
    return ev(c, s, target);
  };
  v.push_back(spec("5.13/rel", false, 1, p_gt(3), me(2),
      [b23sum](Ctx& c) { return b23sum(c, Rat(1, 24), 2); },
      [b23sum](Ctx& c) {
        return one(mulq(c, Rat(j3s(c.p)), b23sum(c, Rat(-1, 216), 2), 2));
      }));
  v.push_back(spec("5.13/main1", false, 1,
      [](long p, int) { return need(p > 3 && p % 3 == 1, "requires p = 1 mod 3"); }, me(2),
      [b23sum](Ctx& c) { return b23sum(c, Rat(1, 24), 2); },
      [](Ctx& c) {
        unsigned long d = static_cast<unsigned long>((c.p - 1) / 3);
        return oneq(c, Rat(bin(2 * d, d)), 2);
      }));
  v.push_back(spec("5.13/main2", false, 1,
      [](long p, int) { return need(p > 3 && p % 3 == 2, "requires p = 2 mod 3"); }, me(2),
      [b23sum](Ctx& c) { return b23sum(c, Rat(1, 24), 2); },
      [](Ctx& c) {
        unsigned long d = static_cast<unsigned long>((c.p + 1) / 3);
        return oneq(c, rq(Int(c.p), bin(2 * d, d)), 2);
      }));
  v.push_back(spec("5.13/c-rel", false, 1, p_gt(3), me(1),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .base = Rat(1, 24), .factors = {B3, CAT}};
        return ev(c, s, 1);
      },
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .base = Rat(-1, 216), .factors = {B3, CAT}};
        return one(mulq(c, Rat(j3s(c.p), 9), ev(c, s, 1), 1));
      }));
  v.push_back(spec("5.13/c-val", false, 1, p_gt(3), me(1),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .base = Rat(1, 24), .factors = {B3, CAT}};
        return ev(c, s, 1);
      },
      [](Ctx& c) {
        unsigned long d = static_cast<unsigned long>((c.p - j3s(c.p)) / 3);
        return oneq(c, rq(bin(2 * d, d), Int(2)), 1);
      }));
  v.push_back(spec("5.13/x1", false, 1,
      [](long p, int) { return need(p > 3 && p % 3 == 1, "requires p = 1 mod 3"); }, me(2),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .c0 = Rat(2), .c1 = Rat(1),
                  .base = Rat(1, 24), .factors = {CB, B3}};
        return ev(c, s, 2);
      },
      [](Ctx& c) {
        long x = pick_form(c.p, 1, 27, 4, "x^2+27y^2=4p").x;
        if (norm_mod(x, 3) != 2) x = -x;
        return oneq(c, Rat(x), 2);
      }));
  v.push_back(spec("5.13/x2", false, 1,
      [](long p, int) { return need(p > 3 && p % 3 == 1, "requires p = 1 mod 3"); }, me(2),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .c0 = Rat(2), .c1 = Rat(9),
                  .base = Rat(-1, 216), .factors = {CB, B3}};
        return ev(c, s, 2);
      },
      [](Ctx& c) {
        long x = pick_form(c.p, 1, 27, 4, "x^2+27y^2=4p").x;
        if (norm_mod(x, 3) != 2) x = -x;
        return oneq(c, Rat(x), 2);
      }));
  // Conjecture 5.14
  auto b24sum = [](Ctx& c, const Rat& base, int target, Rat c0 = Rat(1), Rat c1 = Rat(0)) {
    SumSpec s{.range = SumRange::FullPa, .c0 = c0, .c1 = c1, .base = base,
              .factors = {CB, B4}};
    return ev(c, s, target);
  };
  v.push_back(spec("5.14i/zero", false, 1, p_gt(3), me(2),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .base = Rat(1, 48), .factors = {CB, B4P1}};
        return ev(c, s, 2);
      },
      zero_rhs));
  v.push_back(spec("5.14i/fa", false, 1,
      [](long p, int) { return need(p > 3 && p % 3 == 1, "requires p = 1 mod 3"); }, me(2),
      [b24sum](Ctx& c) { return b24sum(c, Rat(1, 48), 2); },
      [](Ctx& c) {
        long x = plain_x(c.p, 3);
        if (norm_mod(x, 3) != 1) x = -x;
        return oneq(c, two_x_term(c.p, x), 2);
      }));
  v.push_back(spec("5.14i/fb", false, 1,
      [](long p, int) { return need(p > 3 && p % 3 == 1, "requires p = 1 mod 3"); }, me(2),
      [b24sum](Ctx& c) { return b24sum(c, Rat(1, 48), 2, Rat(1), Rat(1)); },
      [](Ctx& c) {
        long x = plain_x(c.p, 3);
        if (norm_mod(x, 3) != 1) x = -x;
        return oneq(c, Rat(x), 2);
      }));
  v.push_back(spec("5.14i/inv", false, 1,
      [](long p, int) { return need(p > 3 && p % 3 == 2, "requires p = 2 mod 3"); }, me(2),
      [b24sum](Ctx& c) { return b24sum(c, Rat(1, 48), 2); },
      [](Ctx& c) {
        unsigned long n = static_cast<unsigned long>((c.p + 1) / 2);
        unsigned long k = static_cast<unsigned long>((c.p + 1) / 6);
        return oneq(c, rq(Int(3) * c.p, 2 * bin(n, k)), 2);
      }));
  v.push_back(spec("5.14ii/fa", false, 1,
      [](long p, int) {
        return need(p > 3 && p != 7 && jacobi(p, 7) == 1, "requires (p/7) = 1");
      },
      me(2), [b24sum](Ctx& c) { return b24sum(c, Rat(1, 63), 2); },
      [](Ctx& c) {
        long x = plain_x(c.p, 7);
        if (jacobi(Int(x), Int(7)) != 1) x = -x;
        return oneq(c, Rat(j3s(c.p)) * two_x_term(c.p, x), 2);
      }));
  v.push_back(spec("5.14ii/fb", false, 1,
      [](long p, int) {
        return need(p > 3 && p != 7 && jacobi(p, 7) == 1, "requires (p/7) = 1");
      },
      me(2), [b24sum](Ctx& c) { return b24sum(c, Rat(1, 63), 2, Rat(8), Rat(1)); },
      [](Ctx& c) {
        long x = plain_x(c.p, 7);
        if (jacobi(Int(x), Int(7)) != 1) x = -x;
        return oneq(c, Rat(8 * j3s(c.p) * x), 2);
      }));
  v.push_back(spec("5.14ii/z1", false, 1,
      [](long p, int) { return need(p > 3 && jacobi(p, 7) == -1, "requires (p/7) = -1"); },
      me(1), [b24sum](Ctx& c) { return b24sum(c, Rat(1, 63), 1); }, zero_rhs));
  v.push_back(spec("5.14ii/z2", false, 1,
      [](long p, int) { return need(p > 3 && jacobi(p, 7) == -1, "requires (p/7) = -1"); },
      me(1),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .base = Rat(1, 63), .factors = {CB, B42}};
        return ev(c, s, 1);
      },
      zero_rhs));
  v.push_back(spec("5.14iii/fa", false, 1,
      [](long p, int) { return need(p > 3 && p % 4 == 1, "requires p = 1 mod 4"); }, me(2),
      [b24sum](Ctx& c) { return b24sum(c, Rat(1, 72), 2); },
      [](Ctx& c) {
        long x = 0;
        for (const auto& s : represent_form_all(c.p, 1, 1, 1))
          if (s.x % 2 == 1) x = s.x;
        if (norm_mod(x, 4) != 1) x = -x;
        return oneq(c, Rat(jacobi(6, c.p)) * two_x_term(c.p, x), 2);
      }));
  v.push_back(spec("5.14iii/fb", false, 1,
      [](long p, int) { return need(p > 3 && p % 4 == 1, "requires p = 1 mod 4"); }, me(2),
      [b24sum](Ctx& c) { return b24sum(c, Rat(1, 72), 2, Rat(1), Rat(-1)); },
      [](Ctx& c) {
        long x = 0;
        for (const auto& s : represent_form_all(c.p, 1, 1, 1))
          if (s.x % 2 == 1) x = s.x;
        if (norm_mod(x, 4) != 1) x = -x;
        return oneq(c, Rat(jacobi(6, c.p) * x), 2);
      }));
  v.push_back(spec("5.14iii/inv", false, 1,
      [](long p, int) { return need(p > 3 && p % 4 == 3, "requires p = 3 mod 4"); }, me(2),
      [b24sum](Ctx& c) { return b24sum(c, Rat(1, 72), 2); },
      [](Ctx& c) {
        unsigned long n = static_cast<unsigned long>((c.p + 1) / 2);
        unsigned long k = static_cast<unsigned long>((c.p + 1) / 4);
        return oneq(c, Rat(jacobi(6, c.p)) * rq(Int(2) * c.p, Int(3) * bin(n, k)), 2);
      }));
  // Conjecture 5.15
  v.push_back(spec("5.15i/1", false, 1, any_p(), me(3),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .c0 = Rat(1), .c1 = Rat(7), .c2 = Rat(18),
                  .base = Rat(-1, 128), .factors = {CB2},
                  .inner = InnerShape::QuarticBeta};
        return ev(c, s, 3);
      },
      [](Ctx& c) { return oneq(c, Rat(j2s(c.p)) * ppow(c, 2), 3); }));
  v.push_back(spec("5.15i/2", false, 1, any_p(), me(3),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .c0 = Rat(5), .c1 = Rat(26), .c2 = Rat(40),
                  .base = Rat(-1, 256), .factors = {CB2},
                  .inner = InnerShape::CentralPair};
        return ev(c, s, 3);
      },
      [](Ctx& c) { return oneq(c, Rat(5) * ppow(c, 2), 3); }));
  v.push_back(spec("5.15i/3", false, 1, any_p(), me(6),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .c0 = Rat(3), .c1 = Rat(11), .c2 = Rat(12),
                  .base = Rat(-1, 32), .inner = InnerShape::CentralPairQuartic};
        return ev(c, s, 6);
      },
      [](Ctx& c) {
        return one(padic_add(pr(c, Rat(3) * ppow(c, 2), 6),
                             mulq(c, Rat(7, 4) * ppow(c, 5), Bp3(c, 6), 6)));
      }));
  v.push_back(spec("5.15ii", false, 1, p_gt(3), me(6),
      [](Ctx& c) {
        SumSpec s{.range = SumRange::FullPa, .c0 = Rat(0), .c1 = Rat(1), .c2 = Rat(3),
                  .base = Rat(1, 16), .inner = InnerShape::CentralPair};
        return ev(c, s, 6);
      },
      [](Ctx& c) {
        PadicTracked q = Q2(c, 6);
        PadicTracked r = mulq(c, Rat(-4) * ppow(c, 4), q, 6);
        return one(padic_add(r, mulq(c, Rat(6) * ppow(c, 5), padic_mul(q, q), 6)));
      }));
  // Remark 1.4
  v.push_back(spec("rem1.4/form", false, 1,
      [](long p, int) { return need(jacobi(p, 7) == 1, "requires (p/7) = 1"); }, me(2),
      [](Ctx& c) { return A3(c, Rat(1), 2); },
      [](Ctx& c) {
        long x = plain_x(c.p, 7);
        return oneq(c, Rat(4 * x * x - 2 * c.p), 2);
      }));
  v.push_back(spec("rem1.4/zero", false, 1,
      [](long p, int) { return need(p != 7 && jacobi(p, 7) == -1, "requires (p/7) = -1"); },
      me(2), [](Ctx& c) { return A3(c, Rat(1), 2); }, zero_rhs));
}

}  // namespace

const std::vector<CongruenceSpec>& catalog() {
  static const std::vector<CongruenceSpec> entries = [] {
    std::vector<CongruenceSpec> v;
    add_theorems(v);
    add_conj1(v);
    add_conj51_52(v);
    add_conj53_55(v);
    add_conj56(v);
    add_conj57_59(v);
    add_conj510_512(v);
    add_conj513_515(v);
    return v;
  }();
  return entries;
}

}  // namespace supercong

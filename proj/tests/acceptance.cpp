// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria.
#include "supercong/catalog.hpp"
#include "supercong/identities.hpp"
#include "supercong/series.hpp"

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

using namespace supercong;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int idx, const char* what, bool ok, const std::string& detail,
            double secs) {
  std::printf("%s  criterion %d (%s): %s [%.1fs]\n", ok ? "PASS" : "FAIL", idx,
              what, detail.c_str(), secs);
  std::fflush(stdout);
  if (!ok) ++failures;
}

struct Tally {
  long pass = 0, fail = 0, skip = 0, error = 0;
  std::string first_bad;

  void add(const std::vector<CheckResult>& rs) {
    for (const auto& r : rs) {
      switch (r.status) {
        case CheckStatus::Pass: ++pass; break;
        case CheckStatus::Skip: ++skip; break;
        case CheckStatus::Fail: ++fail; break;
        case CheckStatus::Error: ++error; break;
      }
      if ((r.status == CheckStatus::Fail || r.status == CheckStatus::Error) &&
          first_bad.empty())
        first_bad = r.id + " p=" + std::to_string(r.p) + " a=" +
                    std::to_string(r.a) + ": " + r.message;
    }
  }
  bool clean() const { return fail == 0 && error == 0; }
  std::string summary() const {
    std::string s = std::to_string(pass) + " pass, " + std::to_string(fail) +
                    " fail, " + std::to_string(skip) + " skip, " +
                    std::to_string(error) + " error";
    if (!first_bad.empty()) s += "; first: " + first_bad;
    return s;
  }
};

RunOptions opts(long lo, long hi, int a_max, int guard) {
  RunOptions o;
  o.p_lo = lo;
  o.p_hi = hi;
  o.a_max = a_max;
  o.guard = guard;
  o.workers = 1;
  return o;
}

std::vector<std::string> exact_table_ids() {
  std::vector<std::string> ids;
  for (const auto& s : catalog())
    if (s.needs_exact_tables) ids.push_back(s.id);
  return ids;
}

// The five verification batches of criteria 1 and 3, at a given guard.
std::vector<RunOptions> suite_batches(int guard) {
  std::vector<RunOptions> batches;
  auto theorems = opts(5, 499, 1, guard);
  theorems.theorems_only = true;
  batches.push_back(theorems);
  auto squares = opts(5, 97, 2, guard);
  squares.ids = {"1.15"};
  batches.push_back(squares);
  auto conj1 = opts(5, 199, 1, guard);
  conj1.conjectures_only = true;
  batches.push_back(conj1);
  auto conj2 = opts(5, 31, 2, guard);
  conj2.conjectures_only = true;
  batches.push_back(conj2);
  auto poly = opts(5, 293, 1, guard);
  poly.ids = exact_table_ids();
  batches.push_back(poly);
  return batches;
}

}  // namespace

int main() {
  std::vector<std::vector<CheckResult>> base_results;

  {  // 1: proven congruences, 5 <= p <= 499, plus prime squares up to 97^2.
    auto t0 = Clock::now();
    auto batches = suite_batches(2);
    Tally t;
    base_results.push_back(run_range(batches[0]));
    t.add(base_results.back());
    base_results.push_back(run_range(batches[1]));
    t.add(base_results.back());
    double secs = seconds_since(t0);
    report(1, "theorems p<=499 and mod p^(4+a) lifting p<=97", t.clean() && secs < 120.0,
           t.summary(), secs);
  }

  {  // 2: primes p <= 1000 dividing E_{p-3}.
    auto t0 = Clock::now();
    auto found = search_exceptional(1000);
    double secs = seconds_since(t0);
    bool ok = found == std::vector<long>{149, 241} && secs < 10.0;
    std::string detail = "found {";
    for (std::size_t i = 0; i < found.size(); ++i)
      detail += (i ? "," : "") + std::to_string(found[i]);
    detail += "}";
    report(2, "exceptional primes up to 1000", ok, detail, secs);
  }

  {  // 3: conjectural congruences (p <= 199; a = 2 up to 31; polynomial
     //    entries up to 293 from the exact tables).
    auto t0 = Clock::now();
    auto batches = suite_batches(2);
    Tally t;
    for (std::size_t i = 2; i < batches.size(); ++i) {
      base_results.push_back(run_range(batches[i]));
      t.add(base_results.back());
    }
    report(3, "conjectural congruences", t.clean(), t.summary(),
           seconds_since(t0));
  }

  {  // 4: exact identities, recursions and the primality scan up to 2000.
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail = "all identities n<=200, recursions, scan clean";
    for (const auto& id : identity_ids()) {
      if (id == "tauraso-id") {
        for (long p : sieve_primes(5, 200))
          if (!verify_identity(id, p)) { ok = false; detail = id; }
      } else {
        for (long n = 1; n <= 200; ++n)
          if (!verify_identity(id, n)) { ok = false; detail = id + " n=" + std::to_string(n); }
      }
    }
    for (long n = 1; n < 200; ++n)
      if (!verify_recursions(n)) { ok = false; detail = "recursion n=" + std::to_string(n); }
    for (long n = 1; n <= 200; ++n) {
      Int c;
      mpz_bin_uiui(c.get_mpz_t(), 2 * n, n);
      if (s_value(n) % (4 * c) != 0) { ok = false; detail = "4 binom(2n,n) | s_n at n=" + std::to_string(n); }
    }
    auto composites = scan_s_primality(2000);
    if (!composites.empty()) {
      ok = false;
      detail = "scan found composite " + std::to_string(composites.front());
    }
    double secs = seconds_since(t0);
    report(4, "identities and integer sequences", ok && secs < 60.0, detail, secs);
  }

  {  // 5: divisibility families up to n = 120 and a_m parity up to 64.
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail = "11 families n<=120; a_m for m<=64";
    for (const auto& fam : divisibility_ids())
      for (long n = 2; n <= 120; ++n)
        if (!verify_divisibility(fam, n)) { ok = false; detail = fam + " n=" + std::to_string(n); }
    for (long m = 2; m <= 64; ++m)
      if (!verify_am(m)) { ok = false; detail = "a_m at m=" + std::to_string(m); }
    report(5, "divisibility families", ok, detail, seconds_since(t0));
  }

  {  // 6: every registry series matches its closed form to 40 certified
     //    digits within 400 terms; headline 10^-227 bound from 200 terms.
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail = "22 series at 40 digits; headline bound holds";
    for (const auto& id : series_ids()) {
      auto r = eval_series(id, 40, 400);
      if (!r.pass || !r.tail_sound) {
        ok = false;
        detail = id + " err=" + r.error + " tail=" + r.tail_bound;
      }
    }
    auto h = headline_check();
    if (!h.pass) { ok = false; detail = "headline rel err " + h.relative_error; }
    report(6, "series against closed forms", ok, detail, seconds_since(t0));
  }

  {  // 7: O(p) special-value formulas against the exact tables, eta
     //    coefficients against the Klein form count, classical congruences.
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail = "fast paths p<=1000; eta p<200; lemmas p<=200";
    for (long p : sieve_primes(7, 1000))
      for (const char* id : {"fast-euler", "fast-b3", "fast-b5"})
        if (!verify_numeric_congruence(id, p)) { ok = false; detail = std::string(id) + " p=" + std::to_string(p); }
    for (long p : sieve_primes(5, 199))
      for (const char* id : {"eta-klein", "rv-eta"})
        if (!verify_numeric_congruence(id, p)) { ok = false; detail = std::string(id) + " p=" + std::to_string(p); }
    for (long p : sieve_primes(5, 200))
      for (const char* id : {"lemma2.1", "morley", "glaisher", "sd-lift"})
        if (!verify_numeric_congruence(id, p)) { ok = false; detail = std::string(id) + " p=" + std::to_string(p); }
    report(7, "cross-validated special values", ok, detail, seconds_since(t0));
  }

  {  // 8: every verdict from criteria 1-3 is stable when the guard precision
     //    is raised from 2 to 4.
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail = "verdicts identical at guard 2 and 4";
    auto batches = suite_batches(4);
    for (std::size_t b = 0; b < batches.size() && ok; ++b) {
      auto redo = run_range(batches[b]);
      const auto& base = base_results[b];
      if (redo.size() != base.size()) {
        ok = false;
        detail = "result count changed in batch " + std::to_string(b);
        break;
      }
      for (std::size_t i = 0; i < redo.size(); ++i) {
        if (redo[i].id != base[i].id || redo[i].p != base[i].p ||
            redo[i].a != base[i].a || redo[i].status != base[i].status) {
          ok = false;
          detail = "verdict changed: " + redo[i].id + " p=" +
                   std::to_string(redo[i].p) + " a=" + std::to_string(redo[i].a);
          break;
        }
      }
    }
    report(8, "guard-precision stability", ok, detail, seconds_since(t0));
  }

  std::printf("%s: %d of 8 criteria failed\n", failures ? "FAIL" : "OK", failures);
  return failures;
}

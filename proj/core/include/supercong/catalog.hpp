#pragma once

#include "supercong/special.hpp"
#include "supercong/sums.hpp"

#include <functional>

namespace supercong {

struct CheckContext {
  long p;
  int a;
  int guard;
  SpecialValueCache cache;

  CheckContext(long p_, int a_, int guard_) : p(p_), a(a_), guard(guard_), cache(p_, guard_) {}

  long pa() const {
    long n = 1;
    for (int i = 0; i < a; ++i) n *= p;
    return n;
  }
};

struct RhsResult {
  std::vector<PadicTracked> candidates;
  bool ambiguous = false;
};

struct CongruenceSpec {
  std::string id;
  bool is_theorem = false;
  int max_a = 1;
  bool needs_exact_tables = false;  // evaluates Bernoulli/Euler polynomial values
  std::function<std::optional<std::string>(long p, int a)> applicable;
  std::function<int(long p, int a)> mod_exp;
  std::function<PadicTracked(CheckContext&)> lhs;
  std::function<RhsResult(CheckContext&)> rhs;
};

enum class CheckStatus { Pass, Fail, Skip, Error };

struct CheckResult {
  std::string id;
  long p = 0;
  int a = 1;
  CheckStatus status = CheckStatus::Skip;
  bool ambiguous = false;
  int mod_exp = 0;
  std::string message;
};

const std::vector<CongruenceSpec>& catalog();
const CongruenceSpec* find_spec(const std::string& id);

CheckResult check(const CongruenceSpec& spec, long p, int a, int guard);

struct RunOptions {
  long p_lo = 5;
  long p_hi = 200;
  int a_max = 1;
  int guard = 2;
  int workers = 0;  // 0 = hardware concurrency
  std::vector<std::string> ids;  // empty = all
  bool theorems_only = false;
  bool conjectures_only = false;
};

// Deterministic (sorted by id, p, a) regardless of worker count.
std::vector<CheckResult> run_range(const RunOptions& opt);

// Odd primes p <= bound with p | E_{p-3}.
std::vector<long> search_exceptional(long bound);

std::string status_name(CheckStatus s);
std::string result_json_line(const CheckResult& r);
std::string result_csv_line(const CheckResult& r);
std::string csv_header();

}  // namespace supercong

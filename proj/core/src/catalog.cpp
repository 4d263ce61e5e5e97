#include "supercong/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace supercong {

const CongruenceSpec* find_spec(const std::string& id) {
  for (const auto& s : catalog())
    if (s.id == id) return &s;
  return nullptr;
}

CheckResult check(const CongruenceSpec& spec, long p, int a, int guard) {
  CheckResult res;
  res.id = spec.id;
  res.p = p;
  res.a = a;
  if (a > spec.max_a) {
    res.status = CheckStatus::Skip;
    res.message = "exponent above supported range";
    return res;
  }
  if (auto reason = spec.applicable(p, a)) {
    res.status = CheckStatus::Skip;
    res.message = *reason;
    return res;
  }
  try {
    int e = spec.mod_exp(p, a);
    res.mod_exp = e;
    CheckContext ctx(p, a, guard);
    PadicTracked left = spec.lhs(ctx);
    RhsResult right = spec.rhs(ctx);
    res.ambiguous = right.ambiguous;
    bool pass = false;
    long worst = PadicTracked::kExact;
    for (const auto& cand : right.candidates) {
      PadicTracked diff = padic_sub(left, cand);
      worst = std::min(worst, diff.abs_precision());
      if (diff.abs_precision() < e) continue;
      if (diff.congruent_zero(e)) {
        pass = true;
        break;
      }
    }
    if (!pass && worst < e) {
      res.status = CheckStatus::Fail;
      res.message = "insufficient precision: have " + std::to_string(worst) + ", need " +
                    std::to_string(e);
    } else {
      res.status = pass ? CheckStatus::Pass : CheckStatus::Fail;
      if (!pass) res.message = "congruence does not hold mod p^" + std::to_string(e);
    }
  } catch (const precision_error& ex) {
    res.status = CheckStatus::Fail;
    res.message = std::string("precision: ") + ex.what();
  } catch (const std::exception& ex) {
    res.status = CheckStatus::Error;
    res.message = ex.what();
  }
  return res;
}

std::vector<CheckResult> run_range(const RunOptions& opt) {
  std::vector<const CongruenceSpec*> specs;
  for (const auto& s : catalog()) {
    if (!opt.ids.empty() &&
        std::find(opt.ids.begin(), opt.ids.end(), s.id) == opt.ids.end())
      continue;
    if (opt.theorems_only && !s.is_theorem) continue;
    if (opt.conjectures_only && s.is_theorem) continue;
    specs.push_back(&s);
  }
  std::vector<long> primes = sieve_primes(std::max(opt.p_lo, 3L), opt.p_hi);

  struct Task {
    const CongruenceSpec* spec;
    long p;
    int a;
  };
  std::vector<Task> tasks;
  for (const auto* s : specs)
    for (long p : primes)
      for (int a = 1; a <= opt.a_max; ++a) tasks.push_back({s, p, a});

  // warm shared tables before spawning workers
  if (!primes.empty()) {
    long top = std::min(primes.back(), exact_ceiling() + 3);
    euler_table(static_cast<std::size_t>(std::max(top - 3, 2L)));
    bernoulli_table(static_cast<std::size_t>(std::max(top - 3, 2L)));
  }

  std::vector<CheckResult> results(tasks.size());
  unsigned workers = opt.workers > 0 ? static_cast<unsigned>(opt.workers)
                                     : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, tasks.size() ? tasks.size() : 1);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) break;
      results[i] = check(*tasks[i].spec, tasks[i].p, tasks[i].a, opt.guard);
    }
  };
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::sort(results.begin(), results.end(), [](const CheckResult& x, const CheckResult& y) {
    if (x.id != y.id) return x.id < y.id;
    if (x.p != y.p) return x.p < y.p;
    return x.a < y.a;
  });
  return results;
}

std::vector<long> search_exceptional(long bound) {
  std::vector<long> out;
  for (long p : sieve_primes(5, bound)) {
    std::vector<long> inv(p);
    inv[1] = 1;
    for (long i = 2; i < p; ++i) inv[i] = (p - (p / i) * inv[p % i] % p) % p;
    long s = 0;
    for (long k = 1; k <= p / 4; ++k) s = (s + inv[k] * inv[k]) % p;
    if (s == 0) out.push_back(p);
  }
  return out;
}

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
    case CheckStatus::Error: return "error";
  }
  return "?";
}

namespace {
std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}
}  // namespace

std::string result_json_line(const CheckResult& r) {
  std::ostringstream os;
  os << "{\"id\":\"" << json_escape(r.id) << "\",\"p\":" << r.p << ",\"a\":" << r.a
     << ",\"status\":\"" << status_name(r.status) << "\",\"mod_exp\":" << r.mod_exp
     << ",\"ambiguous\":" << (r.ambiguous ? "true" : "false") << ",\"message\":\""
     << json_escape(r.message) << "\"}";
  return os.str();
}

std::string csv_header() { return "id,p,a,status,mod_exp,ambiguous,message"; }

std::string result_csv_line(const CheckResult& r) {
  std::ostringstream os;
  std::string msg = r.message;
  for (auto& c : msg)
    if (c == ',' || c == '\n') c = ';';
  os << r.id << ',' << r.p << ',' << r.a << ',' << status_name(r.status) << ',' << r.mod_exp
     << ',' << (r.ambiguous ? 1 : 0) << ',' << msg;
  return os.str();
}

}  // namespace supercong

#include "supercong/catalog.hpp"
#include "supercong/identities.hpp"
#include "supercong/series.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>

using namespace supercong;

namespace {

std::ostream* open_out(const std::string& path, std::ofstream& file) {
  if (path.empty()) return &std::cout;
  file.open(path);
  if (!file) throw CLI::ValidationError("--out", "cannot open " + path);
  return &file;
}

std::string timestamp() {
  std::time_t t = std::time(nullptr);
  char buf[64];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

bool parse_range(const std::string& s, long& lo, long& hi) {
  auto pos = s.find("..");
  if (pos == std::string::npos) return false;
  try {
    lo = std::stol(s.substr(0, pos));
    hi = std::stol(s.substr(pos + 2));
  } catch (...) {
    return false;
  }
  return lo >= 2 && hi >= lo;
}

// Comma-separated ids; a trailing '*' matches by prefix.
std::vector<std::string> expand_ids(const std::string& arg) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= arg.size()) {
    auto comma = arg.find(',', start);
    std::string tok = arg.substr(start, comma == std::string::npos ? comma : comma - start);
    if (!tok.empty()) {
      if (tok.back() == '*') {
        std::string prefix = tok.substr(0, tok.size() - 1);
        for (const auto& s : catalog())
          if (s.id.rfind(prefix, 0) == 0) out.push_back(s.id);
      } else {
        out.push_back(tok);
      }
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic verification of super congruences, identities and series"};
  app.require_subcommand(1);

  std::string primes = "5..200", ids_arg, format = "text", out_path;
  int a_max = 1, guard = 2, digits = 40, workers = 0;
  long terms = 400, bound = 1000, n_max = 60;
  bool no_timestamp = false, theorems_only = false, conjectures_only = false;
  bool headline = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "json|csv|text")->default_str("text");
    cmd->add_option("--out", out_path, "write report to a file");
    cmd->add_flag("--no-timestamp", no_timestamp, "omit the timestamp line");
  };

  auto* check = app.add_subcommand("check", "verify the congruence catalog over a prime range");
  check->add_option("--primes", primes, "prime range LO..HI")->default_str("5..200");
  check->add_option("--a-max", a_max, "largest prime-power exponent");
  check->add_option("--ids", ids_arg, "comma-separated ids; trailing * matches prefixes");
  check->add_option("--guard", guard, "extra p-adic guard digits");
  check->add_option("--workers", workers, "worker threads (0 = hardware)");
  check->add_flag("--theorems-only", theorems_only, "only proven entries");
  check->add_flag("--conjectures-only", conjectures_only, "only conjectural entries");
  add_common(check);

  auto* search = app.add_subcommand("search-exceptional", "primes p with p | E_{p-3}");
  search->add_option("--bound", bound, "upper bound")->default_str("1000");
  add_common(search);

  auto* idents = app.add_subcommand("identities", "exact identities, recursions, divisibilities");
  idents->add_option("--n-max", n_max, "largest index to test")->default_str("60");
  add_common(idents);

  auto* series = app.add_subcommand("series", "evaluate the series registry");
  series->add_option("--digits", digits, "decimal digits")->default_str("40");
  series->add_option("--terms", terms, "term cap")->default_str("400");
  series->add_flag("--headline", headline, "also reproduce the 10^-227 headline bound");
  add_common(series);

  auto* list = app.add_subcommand("list", "print catalog, identity and series ids");

  CLI11_PARSE(app, argc, argv);

  std::ofstream file;
  std::ostream* os_ptr = nullptr;
  try {
    os_ptr = open_out(out_path, file);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  }
  std::ostream& os = *os_ptr;
  bool text = format == "text";

  try {
    if (*list) {
      os << "# congruence catalog\n";
      for (const auto& s : catalog())
        os << s.id << (s.is_theorem ? "  [theorem]" : "  [conjecture]") << "\n";
      os << "# identities\n";
      for (const auto& id : identity_ids()) os << id << "\n";
      os << "# divisibility families\n";
      for (const auto& id : divisibility_ids()) os << id << "\n";
      os << "# numeric congruences\n";
      for (const auto& id : numeric_congruence_ids()) os << id << "\n";
      os << "# series\n";
      for (const auto& id : series_ids()) os << id << "\n";
      return 0;
    }

    if (*check) {
      RunOptions opt;
      if (!parse_range(primes, opt.p_lo, opt.p_hi)) {
        std::cerr << "bad --primes range: " << primes << "\n";
        return 2;
      }
      opt.a_max = a_max;
      opt.guard = guard;
      opt.workers = workers;
      opt.theorems_only = theorems_only;
      opt.conjectures_only = conjectures_only;
      if (!ids_arg.empty()) {
        opt.ids = expand_ids(ids_arg);
        if (opt.ids.empty()) {
          std::cerr << "no catalog ids match: " << ids_arg << "\n";
          return 2;
        }
      }
      auto results = run_range(opt);
      long pass = 0, fail = 0, skip = 0, error = 0, theorem_fail = 0;
      if (format == "csv") os << csv_header() << "\n";
      for (const auto& r : results) {
        switch (r.status) {
          case CheckStatus::Pass: ++pass; break;
          case CheckStatus::Fail: ++fail; break;
          case CheckStatus::Skip: ++skip; break;
          case CheckStatus::Error: ++error; break;
        }
        if (r.status == CheckStatus::Fail) {
          const auto* s = find_spec(r.id);
          if (s && s->is_theorem) ++theorem_fail;
        }
        if (format == "json")
          os << result_json_line(r) << "\n";
        else if (format == "csv")
          os << result_csv_line(r) << "\n";
        else if (r.status != CheckStatus::Pass && r.status != CheckStatus::Skip)
          os << status_name(r.status) << "  " << r.id << "  p=" << r.p << " a=" << r.a
             << "  " << r.message << "\n";
      }
      if (text) {
        if (!no_timestamp) os << "# " << timestamp() << "\n";
        os << "checked " << results.size() << ": " << pass << " pass, " << fail
           << " fail (" << theorem_fail << " theorem), " << skip << " skip, " << error
           << " error\n";
      }
      return (theorem_fail > 0 || error > 0) ? 1 : 0;
    }

    if (*search) {
      auto primes_found = search_exceptional(bound);
      for (long p : primes_found) os << p << "\n";
      if (text && !no_timestamp) os << "# " << timestamp() << "\n";
      return 0;
    }

    if (*idents) {
      long failures = 0;
      auto report = [&](const std::string& what, bool ok) {
        if (!ok) ++failures;
        if (!ok || text) os << (ok ? "pass" : "FAIL") << "  " << what << "\n";
      };
      for (const auto& id : identity_ids()) {
        bool ok = true;
        if (id == "tauraso-id") {
          for (long p : sieve_primes(5, n_max)) ok = ok && verify_identity(id, p);
        } else {
          for (long n = 1; n <= n_max; ++n) ok = ok && verify_identity(id, n);
        }
        report("identity " + id, ok);
      }
      {
        bool ok = true;
        for (long n = 1; n < n_max; ++n) ok = ok && verify_recursions(n);
        report("recursions s_n/t_n/r_n", ok);
      }
      for (const auto& fam : divisibility_ids()) {
        bool ok = true;
        for (long n = 2; n <= n_max; ++n) ok = ok && verify_divisibility(fam, n);
        report("divisibility " + fam, ok);
      }
      {
        bool ok = true;
        for (long m = 2; m <= std::min<long>(n_max, 64); ++m) ok = ok && verify_am(m);
        report("a_m integrality and parity", ok);
      }
      report("S_n primality scan", scan_s_primality(n_max * 10).empty());
      for (const auto& id : numeric_congruence_ids()) {
        bool ok = true;
        for (long p : sieve_primes(id == "fast-b5" ? 7 : 5, n_max))
          ok = ok && verify_numeric_congruence(id, p);
        report("congruence " + id, ok);
      }
      if (text && !no_timestamp) os << "# " << timestamp() << "\n";
      return failures ? 1 : 0;
    }

    if (*series) {
      long unsound = 0, failed = 0;
      for (const auto& id : series_ids()) {
        auto r = eval_series(id, digits, terms);
        if (!r.tail_sound) ++unsound;
        if (!r.pass) ++failed;
        os << (r.pass ? "pass" : "FAIL") << "  " << r.id << "  terms=" << r.terms
           << "  tail<=" << r.tail_bound << "  |S-target|=" << r.error << "\n";
      }
      if (headline) {
        auto h = headline_check();
        os << (h.pass ? "pass" : "FAIL") << "  headline 200-term bound, |2S/pi^2 - 1| = "
           << h.relative_error << "\n";
        if (!h.pass) ++failed;
      }
      if (text && !no_timestamp) os << "# " << timestamp() << "\n";
      return (unsound || failed) ? 1 : 0;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}

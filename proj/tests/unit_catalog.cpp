#include "supercong/catalog.hpp"

#include <doctest.h>

#include <set>

using namespace supercong;

TEST_CASE("catalog lookup") {
  CHECK(catalog().size() > 140);
  const auto* s = find_spec("1.1");
  REQUIRE(s != nullptr);
  CHECK(s->is_theorem);
  CHECK(find_spec("no-such-entry") == nullptr);
  std::set<std::string> ids;
  for (const auto& spec : catalog()) CHECK(ids.insert(spec.id).second);
}

TEST_CASE("single checks") {
  const auto* s = find_spec("1.1");
  REQUIRE(s != nullptr);
  auto r = check(*s, 7, 1, 2);
  CHECK(r.status == CheckStatus::Pass);
  CHECK(r.mod_exp == 3);

  // c1.3/18 only applies when p^a = 1 (mod 3).
  const auto* c = find_spec("c1.3/18");
  REQUIRE(c != nullptr);
  CHECK(check(*c, 5, 1, 2).status == CheckStatus::Skip);
  CHECK(check(*c, 7, 1, 2).status == CheckStatus::Pass);
}

TEST_CASE("exceptional primes dividing E_{p-3}") {
  CHECK(search_exceptional(300) == std::vector<long>{149, 241});
  CHECK(search_exceptional(100).empty());
}

TEST_CASE("run_range is deterministic across worker counts") {
  RunOptions opt;
  opt.p_lo = 5;
  opt.p_hi = 40;
  opt.ids = {"1.1", "1.2", "1.5", "c1.2/13a", "5.4i"};
  opt.workers = 1;
  auto one = run_range(opt);
  opt.workers = 4;
  auto four = run_range(opt);
  REQUIRE(one.size() == four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].id == four[i].id);
    CHECK(one[i].p == four[i].p);
    CHECK(one[i].a == four[i].a);
    CHECK(one[i].status == four[i].status);
  }
  for (const auto& r : one)
    CHECK((r.status == CheckStatus::Pass || r.status == CheckStatus::Skip));
}

TEST_CASE("report formatting") {
  CheckResult r;
  r.id = "1.1";
  r.p = 7;
  r.a = 1;
  r.status = CheckStatus::Pass;
  r.mod_exp = 3;
  CHECK(csv_header() == "id,p,a,status,mod_exp,ambiguous,message");
  CHECK(result_csv_line(r) == "1.1,7,1,pass,3,0,");
  std::string js = result_json_line(r);
  CHECK(js.find("\"id\":\"1.1\"") != std::string::npos);
  CHECK(js.find("\"status\":\"pass\"") != std::string::npos);
  CHECK(status_name(CheckStatus::Fail) == "fail");
}

#include <doctest.h>

#include <chrono>
#include <set>
#include <thread>

#include "rgflab/errors.hpp"
#include "rgflab/verify.hpp"

using namespace rgflab;

TEST_CASE("SUM_GAUSS up to 10 gives one passing record per n") {
  VerifyOptions o;
  o.ids = {"SUM_GAUSS"};
  o.n_max = 10;
  const Report r = run_checks(o);
  REQUIRE(r.records.size() == 10);
  for (int i = 0; i < 10; ++i) {
    CHECK(r.records[i].n == i + 1);
    CHECK(r.records[i].status == Status::pass);
    CHECK(r.records[i].kind == CheckKind::formula);
  }
  CHECK(r.ok());
}

TEST_CASE("the full registry at n <= 7 fails only on the lb Wilf lifts") {
  VerifyOptions o;
  o.n_max = 7;
  const Report r = run_checks(o);
  std::set<std::string> failing;
  std::set<std::string> kinds;
  for (const auto& rec : r.records) {
    kinds.insert(kind_name(rec.kind));
    CHECK(rec.status != Status::skipped);
    if (rec.status == Status::fail) {
      failing.insert(rec.check_id + "@" + std::to_string(rec.n));
      CHECK_FALSE(rec.witness.empty());
    }
  }
  CHECK(failing == std::set<std::string>{"EQ_WILF_LB_K2@5", "EQ_WILF_LB_K2@6", "EQ_WILF_LB_K2@7",
                                         "EQ_WILF_LB_K3@6", "EQ_WILF_LB_K3@7"});
  CHECK(kinds.size() == 5);
  CHECK_FALSE(r.ok());
}

TEST_CASE("witness for the lb lift is the first differing exponent") {
  VerifyOptions o;
  o.ids = {"EQ_WILF_LB_K2"};
  o.n_max = 5;
  const Report r = run_checks(o);
  CHECK(r.records.back().witness == "LB_n(1223) vs LB_n(1233) differs at q^1 r^0 s^0 t^0: 12 vs 13");
}

TEST_CASE("a mutated formula fails with a polynomial witness") {
  Formula f = find_formula("SUM_GAUSS");
  const auto original = f.eval;
  f.eval = [original](const FormulaArgs& a) {
    MultiPoly p = original(a);
    if (a.n >= 4) p += MultiPoly::var(kQ, 2);
    return p;
  };
  const TheoremCheck c = make_formula_check("MUTANT", f, [](int n) { return FormulaArgs{n, 0, 0, {}}; }, 1, 6);
  const Report r = run_checks({c}, VerifyOptions{});
  REQUIRE(r.records.size() == 6);
  CHECK(r.records[2].status == Status::pass);
  CHECK(r.records[3].status == Status::fail);
  CHECK(r.records[3].witness == "LB_n(112) (formula vs enumeration) differs at q^2 r^0 s^0 t^0: 3 vs 2");
  CHECK_FALSE(r.ok());
}

TEST_CASE("reports are byte-identical across runs and thread counts") {
  VerifyOptions a;
  a.n_max = 6;
  VerifyOptions b = a;
  b.threads = 4;
  const std::string ja = run_checks(a).json();
  CHECK(ja == run_checks(a).json());
  CHECK(ja == run_checks(b).json());
  CHECK(run_checks(a).text() == run_checks(b).text());
}

TEST_CASE("budget overruns become skipped records") {
  TheoremCheck slow;
  slow.id = "SLOW";
  slow.n_min = 0;
  slow.n_max = 3;
  slow.run = [](int, const AvoidOptions&) {
    std::this_thread::sleep_for(std::chrono::milliseconds(30));
    return CheckResult{};
  };
  VerifyOptions o;
  o.budget_seconds = 0.01;
  const Report r = run_checks({slow}, o);
  REQUIRE(r.records.size() == 4);
  CHECK(r.records[0].status == Status::pass);
  for (int i = 1; i < 4; ++i) {
    CHECK(r.records[i].status == Status::skipped);
    CHECK(r.records[i].witness == "budget");
  }
  CHECK(r.ok());
}

TEST_CASE("errors") {
  VerifyOptions o;
  o.ids = {"NO_SUCH"};
  CHECK_THROWS_AS(run_checks(o), DomainError);
  VerifyOptions big;
  big.n_max = 16;
  CHECK_THROWS_AS(run_checks(big), ResourceLimitError);
}

TEST_CASE("json layout") {
  VerifyOptions o;
  o.ids = {"CARD_FIB"};
  o.n_max = 1;
  const std::string j = run_checks(o).json();
  CHECK(j.find("\"check_id\": \"CARD_FIB\"") != std::string::npos);
  CHECK(j.find("\"kind\": \"cardinality\"") != std::string::npos);
  CHECK(j.find("\"witness\"") == std::string::npos);
  CHECK(j.find("\"summary\"") != std::string::npos);
}

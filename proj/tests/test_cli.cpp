#include <doctest.h>

#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "rgflab/bijections.hpp"
#include "rgflab/statistics.hpp"
#include "rgflab/verify.hpp"

using namespace rgflab;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("enumerate") {
  const Run r = run({"enumerate", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "111\n112\n121\n122\n123\n");
  CHECK(r.out == golden("enumerate_n3.txt"));
  CHECK(run({"enumerate", "--n", "3", "--format", "json"}).out == golden("enumerate_n3.json"));
  CHECK(run({"enumerate", "--n", "0"}).out == "\n");
  const Run big = run({"enumerate", "--n", "20"});
  CHECK(big.code == 3);
  CHECK(big.out.empty());
  CHECK(run({"--max-n", "3", "enumerate", "--n", "4"}).code == 3);
  CHECK(run({"enumerate", "--n", "4", "--max-n", "4"}).code == 0);
}

TEST_CASE("avoid") {
  CHECK(run({"avoid", "--n", "4", "--patterns", "1212", "--count-only"}).out == "14\n");
  CHECK(run({"avoid", "--n", "5", "--patterns", "111,112", "--count-only"}).out == "8\n");
  const Run bad = run({"avoid", "--n", "4", "--patterns", "11214322"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("not an RGF") != std::string::npos);
  // thin adapter over avoiders()
  std::string expected;
  for (const auto& w : avoiders(7, PatternSet::parse("1221,111"))) expected += w.str() + "\n";
  CHECK(run({"avoid", "--n", "7", "--patterns", "1221,111", "--threads", "3"}).out == expected);
  CHECK(run({"avoid", "--n", "3", "--patterns", "112", "--format", "json"}).out ==
        "{\"n\":3,\"patterns\":\"112\",\"words\":[\"111\",\"121\",\"122\",\"123\"]}\n");
}

TEST_CASE("stats") {
  const Run r = run({"stats", "--word", "12332412"});
  CHECK(r.code == 0);
  CHECK(r.out == "lb 6\nls 10\nrb 9\nrs 8\n");
  CHECK(run({"stats", "--word", "12332412", "--format", "json"}).out ==
        "{\"word\":\"12332412\",\"lb\":6,\"ls\":10,\"rb\":9,\"rs\":8}\n");
  CHECK(run({"stats", "--word", "21"}).code == 2);
}

TEST_CASE("genpoly") {
  CHECK(run({"genpoly", "--n", "3", "--patterns", "112", "--stat", "lb"}).out == "3 + q\n");
  CHECK(run({"genpoly", "--formula", "MOTZKIN_Q", "--n", "2"}).out == "4 + q\n");
  CHECK(run({"genpoly", "--formula", "MOTZKIN_Q", "--n", "2", "--format", "json"}).out ==
        golden("genpoly_motzkin_n2.json"));
  const Run checked = run({"genpoly", "--n", "3", "--patterns", "112", "--stat", "lb", "--check"});
  CHECK(checked.code == 0);
  CHECK(checked.out == "3 + q\ncheck SUM_GAUSS: pass\n");
  const Run formula_check = run({"genpoly", "--formula", "LS_12K", "--n", "6", "--k", "4", "--check"});
  CHECK(formula_check.code == 0);
  CHECK(formula_check.out.find("check LS_12K: pass") != std::string::npos);
  CHECK(run({"genpoly", "--formula", "C_COEFF", "--k", "5"}).out == "(q)/(1 + q)\n");
  CHECK(run({"genpoly", "--formula", "LS_12K", "--n", "6"}).code == 2);
  CHECK(run({"genpoly", "--n", "3", "--patterns", "1", "--check"}).code == 2);
  CHECK(run({"genpoly", "--n", "3", "--stat", "xx"}).code == 2);
  // same polynomial as the library
  const MultiPoly F = gen_poly(6, PatternSet::parse("1212"));
  CHECK(run({"genpoly", "--n", "6", "--patterns", "1212"}).out == F.str() + "\n");
  CHECK(run({"genpoly", "--n", "6", "--patterns", "1212", "--format", "json"}).out == cli::poly_json(F) + "\n");
}

TEST_CASE("polynomial json schema") {
  CHECK(cli::poly_json(MultiPoly(3) + MultiPoly::var(kQ)) ==
        "{\"vars\":[\"q\",\"r\",\"s\",\"t\"],\"terms\":[{\"e\":[0,0,0,0],\"c\":3},{\"e\":[1,0,0,0],\"c\":1}]}");
  CHECK(cli::poly_json(MultiPoly(0)) == "{\"vars\":[\"q\",\"r\",\"s\",\"t\"],\"terms\":[]}");
}

TEST_CASE("bijection") {
  CHECK(run({"bijection", "--name", "eta", "--input", "12345664331"}).out == "11231411561\n");
  CHECK(run({"bijection", "--name", "beta", "--input", "UbUaDUbDDUbD"}).out == "1234125623786\n");
  CHECK(run({"bijection", "--name", "inc", "--input", "1112221331"}).out == "1112112323\n");
  CHECK(run({"bijection", "--name", "eta", "--input", "11231411561", "--inverse"}).out == "12345664331\n");
  const Run stats = run({"bijection", "--name", "eta", "--input", "12345664331", "--show-stats"});
  CHECK(stats.out == golden("bijection_eta_stats.txt"));
  std::string expected = "11231411561\n";
  for (const auto& l : find_bijection("eta").show_stats("12345664331")) expected += l + "\n";
  CHECK(stats.out == expected);
  CHECK(run({"bijection", "--name", "eta", "--input", "1121"}).code == 2);
  CHECK(run({"bijection", "--name", "nope", "--input", "1"}).code == 2);
  CHECK(run({"bijection", "--list"}).out.find("beta:") != std::string::npos);
}

TEST_CASE("verify") {
  CHECK(run({"verify", "--ids", "NO_SUCH"}).code == 2);
  CHECK(run({"verify", "--n-max", "16"}).code == 3);
  const Run sg = run({"verify", "--ids", "SUM_GAUSS,CARD_FIB", "--n-max", "4", "--format", "json"});
  CHECK(sg.code == 0);
  CHECK(sg.out == golden("verify_small.json"));
  VerifyOptions o;
  o.ids = {"SUM_GAUSS", "CARD_FIB"};
  o.n_max = 4;
  CHECK(sg.out == run_checks(o).json() + "\n");
  const Run lift = run({"verify", "--ids", "EQ_WILF_LB_K2", "--n-max", "6"});
  CHECK(lift.code == 1);
  CHECK(lift.out.find("fail at n=5") != std::string::npos);
}

TEST_CASE("explore") {
  const Run r = run({"explore", "--report", "rb1221", "--n-max", "6"});
  CHECK(r.code == 0);
  CHECK(r.out == golden("explore_rb1221_n6.txt"));
  // row n holds the coefficients of RB_n(1221)
  const auto c = specialize(gen_poly(6, PatternSet::parse("1221")), Stat::rb).coefficients(kQ);
  std::istringstream lines(r.out);
  std::string line, last;
  while (std::getline(lines, line)) last = line;
  std::istringstream cells(last);
  int n = -1;
  cells >> n;
  CHECK(n == 6);
  std::vector<std::int64_t> row;
  for (std::int64_t x; cells >> x;) row.push_back(x);
  CHECK(row == c);
  CHECK(run({"explore", "--report", "other"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"enumerate"}).code == 2);
  CHECK(run({"enumerate", "--n", "x"}).code == 2);
  CHECK(run({"--format", "xml", "enumerate", "--n", "2"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

#include <doctest.h>

#include "oracles.hpp"
#include "rgflab/errors.hpp"
#include "rgflab/statistics.hpp"

using namespace rgflab;

namespace {

MultiPoly q(int e) { return MultiPoly::var(kQ, e); }

}  // namespace

TEST_CASE("letterwise statistics") {
  const Word w = Word::parse("12332412");
  CHECK(stat_letter(w, 4, Stat::lb) == 1);
  CHECK(stat_letter(w, 6, Stat::lb) == 3);
  for (Stat s : {Stat::lb, Stat::ls}) CHECK(stat_letter(w, 0, s) == 0);
  // repeated 3s count once
  CHECK(stat_letter(Word::parse("1332"), 3, Stat::lb) == 1);
}

TEST_CASE("totals") {
  CHECK(stat_total(Word::parse("12332412"), Stat::lb) == 6);
  CHECK(stat_total(Word::parse("123"), Stat::ls) == 3);
  CHECK(stat_total(Word::parse("121"), Stat::rs) == 1);
  CHECK(stat_vector(Word{}) == StatVector{});
  CHECK(stat_monomial({1, 2, 3, 4}) == MultiPoly::monomial({1, 2, 3, 4}));
}

TEST_CASE("parse_stat") {
  CHECK(parse_stat("rb") == Stat::rb);
  CHECK(std::string(stat_name(Stat::rs)) == "rs");
  CHECK_THROWS_AS(parse_stat("xx"), DomainError);
}

TEST_CASE("statistics against the distinct-value oracle and RGF shortcuts, n <= 10") {
  for (int n = 0; n <= 10; ++n) {
    for (const auto& w : enumerate_rgfs(n)) {
      const auto& l = w.letters();
      int ls = 0, lb = 0, mx = 0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        ls += w[i] - 1;
        if (i > 0) lb += mx - w[i] > 0 ? mx - w[i] : 0;
        mx = std::max(mx, w[i]);
        if (n <= 7) {
          REQUIRE(stat_letter(w, i, Stat::lb) == oracle::stat(l, i, true, true));
          REQUIRE(stat_letter(w, i, Stat::ls) == oracle::stat(l, i, true, false));
          REQUIRE(stat_letter(w, i, Stat::rb) == oracle::stat(l, i, false, true));
          REQUIRE(stat_letter(w, i, Stat::rs) == oracle::stat(l, i, false, false));
        }
      }
      REQUIRE(stat_total(w, Stat::ls) == ls);
      REQUIRE(stat_total(w, Stat::lb) == lb);
    }
  }
}

TEST_CASE("gen_poly examples") {
  const MultiPoly F = gen_poly(3, PatternSet::parse("112"));
  CHECK(specialize(F, Stat::lb) == MultiPoly(3) + q(1));
  CHECK(specialize(F, Stat::lb).str() == "3 + q");
  for (int n = 0; n <= 6; ++n) CHECK(gen_poly(n, PatternSet::parse("12")) == MultiPoly(1));
  CHECK(specialize(gen_poly(3, PatternSet::parse("1212")), Stat::rs) == MultiPoly(4) + q(1));
  CHECK_THROWS_AS(gen_poly(16, PatternSet{}), ResourceLimitError);
}

TEST_CASE("gen_poly is the sum of monomials and counts the class, n <= 10") {
  for (const char* V : {"", "112", "1212", "111,1221", "123"}) {
    const PatternSet P = PatternSet::parse(V);
    for (int n = 0; n <= 10; ++n) {
      const MultiPoly F = gen_poly(n, P);
      REQUIRE(F.at_one() == static_cast<std::int64_t>(avoiders(n, P).size()));
      if (n <= 7) {
        MultiPoly direct;
        for (const auto& w : avoiders(n, P)) direct += stat_monomial(stat_vector(w));
        REQUIRE(F == direct);
      }
    }
  }
}

TEST_CASE("gen_poly does not depend on the thread count") {
  AvoidOptions many;
  many.threads = 3;
  CHECK(gen_poly(9, PatternSet::parse("1221"), many) == gen_poly(9, PatternSet::parse("1221")));
}

TEST_CASE("specialize keeps one statistic in q") {
  const MultiPoly m = MultiPoly::monomial({1, 2, 3, 4}, 5);
  CHECK(specialize(m, Stat::lb) == MultiPoly::monomial({1, 0, 0, 0}, 5));
  CHECK(specialize(m, Stat::ls) == MultiPoly::monomial({2, 0, 0, 0}, 5));
  CHECK(specialize(m, Stat::rb) == MultiPoly::monomial({3, 0, 0, 0}, 5));
  CHECK(specialize(m, Stat::rs) == MultiPoly::monomial({4, 0, 0, 0}, 5));
}

TEST_CASE("ls depends only on the multiset of letters") {
  for (const auto& w : enumerate_rgfs(7)) {
    auto sorted = w.letters();
    std::sort(sorted.begin(), sorted.end());
    REQUIRE(stat_total(Word(sorted), Stat::ls) == stat_total(w, Stat::ls));
  }
}

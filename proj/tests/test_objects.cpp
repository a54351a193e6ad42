#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "rgflab/errors.hpp"
#include "rgflab/objects.hpp"

using namespace rgflab;

namespace {

const MotzkinPath kFigure("UbUaDUbDDUbD");

std::int64_t motzkin_number(int n) {
  std::vector<std::int64_t> m{1, 1};
  for (int k = 2; k <= n; ++k) {
    std::int64_t s = m[k - 1];
    for (int j = 0; j <= k - 2; ++j) s += m[j] * m[k - 2 - j];
    m.push_back(s);
  }
  return m[n];
}

}  // namespace

TEST_CASE("partitions and rectangles") {
  const IntegerPartition lam({5, 5, 4, 3, 3});
  CHECK(fits_in(lam, {6, 5}));
  CHECK_FALSE(fits_in(lam, {4, 5}));
  CHECK_FALSE(fits_in(lam, {6, 4}));
  CHECK(complement(lam, {6, 5}) == IntegerPartition({5, 2, 2, 1}));
  CHECK(complement(IntegerPartition(), {2, 3}) == IntegerPartition({3, 3}));
  CHECK_THROWS_AS(complement(lam, {2, 2}), DomainError);
  CHECK(IntegerPartition({2, 1, 0}).str() == "(2,1)");
  CHECK(IntegerPartition().str() == "()");
  CHECK_THROWS_AS(IntegerPartition({1, 2}), DomainError);
}

TEST_CASE("partitions in a rectangle") {
  CHECK(partitions_in({1, 1}).size() == 2);
  std::multiset<int> weights;
  for (const auto& l : partitions_in({2, 2})) weights.insert(l.weight());
  CHECK(weights == std::multiset<int>{0, 1, 2, 2, 3, 4});
  CHECK(partitions_in({0, 4}).size() == 1);
  CHECK(partitions_in({3, 0}).size() == 1);
  for (int r = 0; r <= 5; ++r) {
    for (int l = 0; l <= 5; ++l) {
      const Rectangle box{r, l};
      const auto all = partitions_in(box);
      REQUIRE(static_cast<std::int64_t>(all.size()) == oracle::binom(r + l, l));
      REQUIRE(std::set<IntegerPartition>(all.begin(), all.end()).size() == all.size());
      for (const auto& lam : all) {
        REQUIRE(fits_in(lam, box));
        const auto c = complement(lam, box);
        REQUIRE(complement(c, box) == lam);
        REQUIRE(lam.weight() + c.weight() == r * l);
      }
    }
  }
}

TEST_CASE("delta on distinct parts") {
  CHECK(delta_distinct({3, 1}) == IntegerPartition({2, 1}));
  CHECK(delta_distinct({3, 2, 1, 0}) == IntegerPartition());
  CHECK(delta_distinct({5, 3, 2}) == IntegerPartition({3, 2, 2}));
  CHECK(IntegerPartition({5, 3, 2}).weight() == delta_distinct({5, 3, 2}).weight() + 3);
  CHECK(delta_inverse(IntegerPartition({3, 2, 2}), 3) == std::vector<int>{5, 3, 2});
  CHECK_THROWS_AS(delta_distinct({2, 2}), DomainError);
  // every distinct-part lambda in r x l maps into r x (l-r+1)
  for (int r = 1; r <= 4; ++r) {
    for (int l = r - 1; l <= 6; ++l) {
      for (const auto& mu : partitions_in({r, l - r + 1})) {
        const auto lam = delta_inverse(mu, r);
        REQUIRE(static_cast<int>(lam.size()) == r);
        REQUIRE(lam[0] <= l);
        for (int i = 1; i < r; ++i) REQUIRE(lam[i - 1] > lam[i]);
        REQUIRE(delta_distinct(lam) == mu);
      }
    }
  }
}

TEST_CASE("path statistics on the figure path") {
  CHECK(kFigure.area() == 14);
  CHECK(kFigure.levels() == std::vector<int>{0, 1, 1, 2, 1, 1, 2, 1, 0, 0, 1, 0});
  CHECK(kFigure.path_level() == 10);
  const auto pair = kFigure.pairing();
  CHECK(pair[8] == 0);
  CHECK(pair[4] == 2);
  CHECK(pair[7] == 5);
  CHECK(pair[11] == 9);
  CHECK(kFigure.A_stat(4) == 1);
  CHECK(kFigure.A_stat(7) == 2);
  CHECK(kFigure.A_stat(8) == 5);
  CHECK(kFigure.A_stat(11) == 2);
  CHECK_THROWS_AS(kFigure.A_stat(0), DomainError);
}

TEST_CASE("path validation") {
  CHECK_THROWS_AS(MotzkinPath("D"), DomainError);
  CHECK_THROWS_AS(MotzkinPath("U"), DomainError);
  CHECK_THROWS_AS(MotzkinPath("UHaD"), DomainError);
  CHECK_THROWS_AS(MotzkinPath("UxD"), DomainError);
  CHECK(MotzkinPath("").area() == 0);
}

TEST_CASE("path enumeration") {
  std::vector<std::string> two;
  for (const auto& p : two_colored_paths(2)) two.push_back(p.steps());
  CHECK(std::set<std::string>(two.begin(), two.end()) == std::set<std::string>{"aa", "ab", "ba", "bb", "UD"});
  CHECK(two_colored_paths(0).size() == 1);
  std::vector<std::string> plain;
  for (const auto& p : motzkin_paths(3)) plain.push_back(p.steps());
  CHECK(std::set<std::string>(plain.begin(), plain.end()) == std::set<std::string>{"HHH", "HUD", "UDH", "UHD"});
  for (int n = 0; n <= 10; ++n) {
    REQUIRE(static_cast<std::int64_t>(two_colored_paths(n).size()) == oracle::catalan(n + 1));
    REQUIRE(static_cast<std::int64_t>(motzkin_paths(n).size()) == motzkin_number(n));
  }
}

TEST_CASE("area identities and pairing, n <= 8") {
  for (int n = 0; n <= 8; ++n) {
    for (const auto& P : two_colored_paths(n)) {
      int downs = 0, decomposed = 0;
      const auto pair = P.pairing();
      std::vector<int> used(n, 0);
      for (std::size_t i = 0; i < P.size(); ++i) {
        if (P[i] == 'a') decomposed += P.level(i);
        if (P[i] == 'D') {
          ++downs;
          decomposed += P.A_stat(i) + P.level(i);
          const int u = pair[i];
          REQUIRE(u >= 0);
          REQUIRE(P[u] == 'U');
          REQUIRE(P.level(u) == P.level(i));
          ++used[u];
          // pairs never cross
          for (std::size_t j = 0; j < i; ++j) {
            if (P[j] == 'D') REQUIRE_FALSE((pair[j] < u && u < static_cast<int>(j)));
          }
        }
      }
      for (std::size_t i = 0; i < P.size(); ++i) REQUIRE(used[i] == (P[i] == 'U' ? 1 : 0));
      REQUIRE(P.area() == P.path_level() + downs);
      REQUIRE(P.area() == decomposed);
    }
  }
}

TEST_CASE("rooted unimodal compositions") {
  const auto u = RootedUnimodal::parse("00012[2]22110000");
  CHECK(u.valid());
  CHECK(u.weight() == 11);
  CHECK(u.root == 5);
  CHECK(u.str() == "00012[2]22110000");
  CHECK_FALSE(RootedUnimodal{{0, 1, 1}, 1}.valid());
  CHECK_FALSE(RootedUnimodal{{0, 1, 0}, 0}.valid());
  CHECK_FALSE(RootedUnimodal{{0, 2, 0}, 1}.valid());
  CHECK(rooted_unimodal(2).size() == 2);
  for (int n = 1; n <= 10; ++n) {
    const auto all = rooted_unimodal(n);
    REQUIRE(all.size() == (std::size_t{1} << (n - 1)));
    for (const auto& x : all) REQUIRE(x.valid());
    REQUIRE(std::set<RootedUnimodal>(all.begin(), all.end()).size() == all.size());
  }
}

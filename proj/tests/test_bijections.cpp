#include <doctest.h>

#include <set>

#include "rgflab/bijections.hpp"
#include "rgflab/errors.hpp"
#include "rgflab/polynomial.hpp"
#include "rgflab/statistics.hpp"

using namespace rgflab;

namespace {

Word W(const char* s) { return Word::parse(s); }
const MotzkinPath kFigure("UbUaDUbDDUbD");

}  // namespace

TEST_CASE("psi112") {
  CHECK(psi112(W("1234553221")).str() == "0123[3]32110");
  CHECK(psi112_inverse(RootedUnimodal::parse("001122[2]21000")) == W("123456774222"));
  CHECK(psi112(W("12345")).str() == "0000[0]");
  CHECK(psi112_inverse(RootedUnimodal::parse("0000[0]")) == W("12345"));
  CHECK_THROWS_AS(psi112(W("1121")), DomainError);
  // rs letter by letter
  for (int n = 1; n <= 9; ++n) {
    for (const auto& w : avoiders(n, PatternSet::parse("112"))) {
      const auto u = psi112(w);
      for (std::size_t i = 0; i < w.size(); ++i) REQUIRE(u.values[i] == stat_letter(w, i, Stat::rs));
    }
  }
}

TEST_CASE("phi_unimodal") {
  const auto p = phi_unimodal(RootedUnimodal::parse("001233[3]32210"));
  CHECK(p.lambda == IntegerPartition({5, 5, 4, 3, 3}));
  CHECK(p.box == Rectangle{6, 5});
  CHECK(p.str() == "(5,5,4,3,3) in 6x5");
  CHECK(phi_unimodal(RootedUnimodal{{0, 0, 0, 0}, 2}).lambda == IntegerPartition());
  for (int n = 1; n <= 9; ++n) {
    for (const auto& u : rooted_unimodal(n)) {
      const auto img = phi_unimodal(u);
      REQUIRE(img.box == Rectangle{static_cast<int>(u.root), n - 1 - static_cast<int>(u.root)});
      REQUIRE(phi_unimodal_inverse(img) == u);
      REQUIRE(img.lambda.weight() == u.weight());
    }
  }
}

TEST_CASE("rho112") {
  const auto p = rho112(W("123456633211"));
  CHECK(p.lambda == IntegerPartition({5, 5, 4, 3, 3}));
  CHECK(p.box == Rectangle{6, 5});
  CHECK(rho112(W("1234")).str() == "() in 0x3");
  CHECK(rho112_inverse(p) == W("123456633211"));
}

TEST_CASE("both routes into boxed partitions give sum_t gauss(n-1, t)") {
  for (int n = 1; n <= 9; ++n) {
    MultiPoly expected, via_rho, via_phi;
    for (int t = 0; t <= n - 1; ++t) expected += gaussian(n - 1, t);
    std::set<BoxedPartition> rho_img, phi_img;
    for (const auto& w : avoiders(n, PatternSet::parse("112"))) {
      const auto a = rho112(w);
      const auto b = phi_unimodal(psi112(w));
      via_rho += MultiPoly::var(kQ, a.lambda.weight());
      via_phi += MultiPoly::var(kQ, b.lambda.weight());
      REQUIRE(a.lambda.weight() == stat_total(w, Stat::lb));
      REQUIRE(b.lambda.weight() == stat_total(w, Stat::rs));
      rho_img.insert(a);
      phi_img.insert(b);
    }
    const auto all = boxed_partitions(n);
    CHECK(rho_img == std::set<BoxedPartition>(all.begin(), all.end()));
    CHECK(phi_img == rho_img);
    CHECK(via_rho == expected);
    CHECK(via_phi == expected);
  }
}

TEST_CASE("eta") {
  CHECK(eta(W("12345664331")) == W("11231411561"));
  CHECK(eta(W("12345")) == W("12345"));
  CHECK(eta_inverse(W("11231411561")) == W("12345664331"));
  CHECK_THROWS_AS(eta_inverse(W("1223")), DomainError);
  for (int n = 0; n <= 9; ++n) {
    MultiPoly lhs, rhs;
    for (const auto& w : avoiders(n, PatternSet::parse("112"))) {
      const auto s = stat_vector(w);
      lhs += MultiPoly::monomial({s.lb, s.ls, s.rb, 0});
    }
    for (const auto& v : avoiders(n, PatternSet::parse("122"))) {
      const auto s = stat_vector(v);
      rhs += MultiPoly::monomial({s.lb, s.rb, s.ls, 0});
    }
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("xi and f122_123") {
  CHECK(xi(W("1232211")) == W("1112223"));
  CHECK(xi_inverse(W("1112223")) == W("1232211"));
  CHECK(stat_total(W("1232211"), Stat::ls) == 5);
  CHECK(f122_123(W("1231415")) == W("1221212"));
  CHECK(f122_123(W("1111")) == W("1111"));
  CHECK(f122_123_inverse(W("1221212")) == W("1231415"));
  CHECK(stat_total(W("1231415"), Stat::rs) == stat_total(W("1221212"), Stat::rs));
}

TEST_CASE("psi_motzkin") {
  CHECK(psi_motzkin(kFigure) == W("1234435631781"));
  CHECK(psi_motzkin(MotzkinPath("aaa")) == W("1111"));
  CHECK(psi_motzkin_inverse(W("1234435631781")) == kFigure);
  CHECK(stat_total(W("1234435631781"), Stat::rs) == 14);
}

TEST_CASE("phi_motzkin") {
  CHECK(phi_motzkin(W("11")) == MotzkinPath("UD"));
  CHECK(phi_motzkin(W("1213")) == MotzkinPath("UHDH"));
  CHECK(stat_total(W("1213"), Stat::rs) == 1);
  for (int n = 0; n <= 9; ++n) {
    for (const auto& w : avoiders(n, PatternSet::parse("111,1212"))) {
      const auto P = phi_motzkin(w);
      for (std::size_t i = 0; i < w.size(); ++i) REQUIRE(P.level(i) == stat_letter(w, i, Stat::rs));
    }
  }
}

TEST_CASE("inc") {
  CHECK(inc(W("1112221331")) == W("1112112323"));
  for (int n = 0; n <= 8; ++n) {
    for (const auto& w : avoiders(n, PatternSet::parse("1221"))) REQUIRE(inc(w) == w);
    for (const auto& w : enumerate_rgfs(n)) {
      const Word v = inc(w);
      REQUIRE(!contains(v, W("1221")));
      REQUIRE(left_to_right_maxima(v) == left_to_right_maxima(w));
      REQUIRE(stat_total(v, Stat::lb) == stat_total(w, Stat::lb));
      REQUIRE(stat_total(v, Stat::ls) == stat_total(w, Stat::ls));
    }
  }
  CHECK(inc_restricted(W("1221")) == W("1212"));
  CHECK_THROWS_AS(inc_restricted(W("1212")), DomainError);
}

TEST_CASE("alpha") {
  CHECK(alpha(W("1212344")) == W("123114524"));
  CHECK(alpha(Word{}) == W("11"));
  CHECK(alpha_inverse(W("123114524")) == W("1212344"));
  // the image predicate describes the range exactly
  // 11 breaks (ii), so the predicate covers k >= 1 only
  CHECK_FALSE(in_alpha_image(W("11")));
  for (int k = 1; k <= 7; ++k) {
    std::set<Word> image;
    for (const auto& v : avoiders(k, PatternSet::parse("1221"))) {
      const Word a = alpha(v);
      REQUIRE(image.insert(a).second);
      REQUIRE(alpha_inverse(a) == v);
    }
    for (const auto& w : avoiders(k + 2, PatternSet::parse("1221"))) {
      REQUIRE(in_alpha_image(w) == (image.count(w) == 1));
    }
  }
}

TEST_CASE("beta") {
  CHECK(v_map(kFigure) == W("1234225631786"));
  CHECK(beta(kFigure) == W("1234125623786"));
  CHECK(stat_total(beta(kFigure), Stat::lb) == 14);
  CHECK(beta(MotzkinPath("aaaa")) == W("11111"));
  CHECK(beta_inverse(W("1234125623786")) == kFigure);
}

TEST_CASE("rho_prime and delta") {
  CHECK_THROWS_AS(rho_prime(Word{}), DomainError);
  for (int n = 1; n <= 9; ++n) {
    const auto cod = rho_prime_codomain(n);
    std::set<BoxedPartition> seen;
    for (const auto& w : avoiders(n, PatternSet::parse("111,112"))) {
      const auto p = rho_prime(w);
      REQUIRE(seen.insert(p).second);
      REQUIRE(rho_prime_inverse(p) == w);
    }
    CHECK(seen == std::set<BoxedPartition>(cod.begin(), cod.end()));
  }
  for (int n = 1; n <= 9; ++n) {
    std::set<BoxedPartition> img;
    for (const auto& p : delta_domain(n)) {
      const auto d = delta_boxed(p);
      REQUIRE(delta_boxed_inverse(d) == p);
      img.insert(d);
    }
    const auto cod = delta_codomain(n);
    CHECK(img == std::set<BoxedPartition>(cod.begin(), cod.end()));
  }
}

TEST_CASE("registry battery, n within each entry's range") {
  CHECK(bijections().size() == 13);
  for (const auto& b : bijections()) {
    for (int n = b.n_min; n <= b.n_max; ++n) {
      INFO(b.id << " n=" << n);
      REQUIRE(b.check(n) == std::nullopt);
    }
  }
  CHECK(find_bijection("beta").n_max == 7);
  CHECK_THROWS_AS(find_bijection("nope"), DomainError);
}

TEST_CASE("text-level application") {
  CHECK(find_bijection("eta").apply("12345664331") == "11231411561");
  CHECK(find_bijection("beta").apply("UbUaDUbDDUbD") == "1234125623786");
  CHECK(find_bijection("inc").apply("1112221331") == "1112112323");
  CHECK(find_bijection("psi112").apply_inverse("001122[2]21000") == "123456774222");
  CHECK_THROWS_AS(find_bijection("eta").apply("1121"), DomainError);
  const auto lines = find_bijection("eta").show_stats("12345664331");
  CHECK_FALSE(lines.empty());
}

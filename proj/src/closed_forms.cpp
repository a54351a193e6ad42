#include "rgflab/closed_forms.hpp"

#include <algorithm>

#include "rgflab/objects.hpp"

namespace rgflab {

namespace {

const MultiPoly Q = MultiPoly::var(kQ);
const MultiPoly R = MultiPoly::var(kR);
const MultiPoly S = MultiPoly::var(kS);
const MultiPoly T = MultiPoly::var(kT);

void need(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

MultiPoly qpow(const MultiPoly& x, std::int64_t e) {
  if (e < 0) throw DomainError("negative exponent");
  return x.pow(static_cast<int>(e));
}

// [n]_{p,q} with p -> P and q -> Qv; zero for n <= 0.
MultiPoly pq_int_at(int n, const MultiPoly& P, const MultiPoly& Qv) {
  if (n <= 0) return MultiPoly(0);
  return pq_int(n).substitute({Qv, P, S, T});
}

// Bivariate Gaussian with p -> P and q -> Qv; zero outside 0 <= k <= n.
MultiPoly pq_gauss_at(int n, int k, const MultiPoly& P, const MultiPoly& Qv) {
  if (n < 0 || k < 0 || k > n) return MultiPoly(0);
  return pq_gaussian(n, k).substitute({Qv, P, S, T});
}

std::string increasing(int k) {
  std::string out;
  for (int i = 1; i <= k; ++i) out += (i > 1 && k > 9 ? "." : "") + std::to_string(i);
  return out;
}

std::string ones(int m) { return std::string(static_cast<std::size_t>(m), '1'); }

MultiPoly brute_stat(const Word& v, int n, Stat stat) {
  return specialize(gen_poly(n, PatternSet({v})), stat);
}

bool is_all_ones(const Word& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 1; });
}

// v = 1(u+1): returns u.
std::optional<Word> strip_bar(const Word& v) {
  if (v.size() < 2 || std::count(v.begin(), v.end(), 1) != 1) return std::nullopt;
  std::vector<int> u;
  for (std::size_t i = 1; i < v.size(); ++i) u.push_back(v[i] - 1);
  return Word(std::move(u));
}

MultiPoly ls_class(const Word& v, int j);
MultiPoly rs_class(const Word& v, int j);

MultiPoly ls_class(const Word& v, int j) {
  if (v.size() == 1) return MultiPoly(j == 0 ? 1 : 0);
  if (is_all_ones(v)) return ls_ones(static_cast<int>(v.size()), j);
  if (auto u = strip_bar(v)) return ls_machine(*u, j);
  return brute_stat(v, j, Stat::ls);
}

MultiPoly rs_class(const Word& v, int j) {
  if (v.size() == 1) return MultiPoly(j == 0 ? 1 : 0);
  if (is_all_ones(v)) return rs_ones(static_cast<int>(v.size()), j);
  if (auto u = strip_bar(v)) return rs_machine(*u, j);
  return brute_stat(v, j, Stat::rs);
}

void check_base_pattern(const Word& v) {
  need(!v.empty() && is_rgf(v), "machine pattern must be a nonempty RGF");
}

}  // namespace

std::string FormulaTarget::str() const {
  switch (kind) {
    case Kind::stat: {
      std::string name = stat_name(stat);
      std::transform(name.begin(), name.end(), name.begin(), [](char c) { return c - 'a' + 'A'; });
      return name + "_n(" + patterns + ")";
    }
    case Kind::full: return "F_n(" + patterns + ")";
    case Kind::count: return "#R_n(" + patterns + ")";
    case Kind::ls_degree: return "deg LS_n(" + patterns + ")";
    case Kind::area: return "sum of q^area over M2_n";
  }
  return "?";
}

MultiPoly sum_gauss(int n) {
  need(n >= 1, "SUM_GAUSS needs n >= 1");
  MultiPoly out;
  for (int t = 0; t <= n - 1; ++t) out += gaussian(n - 1, t);
  return out;
}

MultiPoly distinct_prod(int n) {
  need(n >= 0, "DISTINCT_PROD needs n >= 0");
  MultiPoly out(1);
  for (int i = 1; i <= n - 1; ++i) out *= MultiPoly(1) + Q.pow(i);
  return out;
}

MultiPoly binom_shift(int n) {
  need(n >= 0, "BINOM_SHIFT needs n >= 0");
  MultiPoly out(1);
  for (int k = 0; k <= n - 2; ++k) out += MultiPoly(binom(n - 1, k + 1)) * Q.pow(k);
  return out;
}

MultiPoly triang(int n) {
  need(n >= 0, "TRIANG needs n >= 0");
  MultiPoly out;
  for (int m = 0; m <= n; ++m) out += MultiPoly(binom(n - 1, n - m)) * qpow(Q, binom(m, 2));
  return out;
}

namespace {

constexpr int kMultNMin[10] = {0, 0, 0, 1, 1, 0, 2, 1, 1, 2};

}  // namespace

std::string mult_patterns(int index) {
  static const char* names[10] = {"",        "111,112", "111,121", "111,122", "112,121",
                                  "112,122", "112,123", "121,122", "121,123", "122,123"};
  need(index >= 1 && index <= 9, "MULT index must be 1..9");
  return names[index];
}

MultiPoly mult(int index, int n) {
  need(index >= 1 && index <= 9, "MULT index must be 1..9");
  need(n >= kMultNMin[index], "MULT_" + std::to_string(index) + " needs n >= " +
                                   std::to_string(kMultNMin[index]));
  const MultiPoly rs = R * S;
  MultiPoly out;
  switch (index) {
    case 1:
      for (int m = 0; m <= n; ++m) {
        out += qpow(Q * R * T * T, binom(m, 2)) * qpow(rs, binom(n - m, 2)) *
               pq_gauss_at(n - m, m, R, Q * T);
      }
      break;
    case 2:
      for (int m = 0; m <= n; ++m) {
        out += qpow(rs, binom(m, 2) + binom(n - m, 2)) * pq_gauss_at(n - m, m, R, S);
      }
      break;
    case 3:
      out = qpow(rs, binom(n, 2)) + qpow(rs, binom(n - 1, 2)) * pq_int_at(n - 1, S, Q * T);
      break;
    case 4:
      for (int m = 1; m <= n; ++m) out += qpow(R, (m - 1) * (n - m)) * qpow(rs, binom(m, 2));
      break;
    case 5:
      out = qpow(rs, binom(n, 2));
      for (int m = 1; m <= n - 1; ++m) {
        out += qpow(Q, (m - 1) * (n - m)) * qpow(rs, binom(m, 2)) * T.pow(m - 1);
      }
      break;
    case 6:
      out = MultiPoly(1) + R.pow(n - 1) * S + Q * R * S * T * pq_int_at(n - 2, Q, R * T);
      break;
    case 7:
      for (int m = 1; m <= n; ++m) out += qpow(rs, binom(m, 2)) * qpow(S, (m - 1) * (n - m));
      break;
    case 8:
      out = MultiPoly(1) + rs * pq_int_at(n - 1, R, S);
      break;
    case 9:
      out = MultiPoly(1) + R * S.pow(n - 1) + Q * R * S * T * pq_int_at(n - 2, Q, S);
      break;
  }
  return out;
}

MultiPoly ls_machine(const Word& v, int n) {
  check_base_pattern(v);
  need(n >= 0, "n must be nonnegative");
  if (n == 0) return MultiPoly(1);
  MultiPoly out;
  for (int j = 0; j <= n - 1; ++j) out += MultiPoly(binom(n - 1, j)) * Q.pow(j) * ls_class(v, j);
  return out;
}

MultiPoly rs_machine(const Word& v, int n) {
  check_base_pattern(v);
  need(n >= 0, "n must be nonnegative");
  if (n == 0) return MultiPoly(1);
  MultiPoly out;
  for (int j = 0; j <= n - 1; ++j) {
    const MultiPoly base = rs_class(v, j);
    MultiPoly inner;
    for (int k = 0; k <= j; ++k) inner += MultiPoly(binom(n + k - j - 2, k)) * Q.pow(k);
    out += inner * base;
  }
  return out;
}

QRational k_rational(int m, int n) {
  need(m >= 1 && n >= 1, "K needs m >= 1 and n >= 1");
  return QRational(q_int(m + 1).pow(n - 1) - MultiPoly(1), q_int(m));
}

QRational c_coeff(int k) {
  need(k >= 3, "c_k needs k >= 3");
  std::vector<QRational> c(static_cast<std::size_t>(k) + 1);
  for (int i = 3; i <= k; ++i) {
    QRational value(1);
    for (int j = 1; j <= i - 3; ++j) value = value - c[static_cast<std::size_t>(i - j)] / QRational(q_factorial(j));
    c[static_cast<std::size_t>(i)] = value;
  }
  return c[static_cast<std::size_t>(k)];
}

MultiPoly ls_12k(int n, int k) {
  need(k >= 3, "LS_12K needs k >= 3");
  need(n >= 1, "LS_12K needs n >= 1");
  QRational sum(1);
  for (int i = 1; i <= k - 2; ++i) {
    sum = sum + c_coeff(k - i + 1) * k_rational(i, n) / QRational(q_factorial(i - 1));
  }
  return sum.to_polynomial();
}

MultiPoly ls_ones(int m, int n) {
  need(m >= 1, "LS_ONES needs m >= 1");
  need(n >= 0, "n must be nonnegative");
  std::vector<MultiPoly> L(static_cast<std::size_t>(n) + 1);
  L[0] = MultiPoly(1);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= m - 1 && j <= i; ++j) {
      L[static_cast<std::size_t>(i)] +=
          MultiPoly(binom(i - 1, j - 1)) * Q.pow(i - j) * L[static_cast<std::size_t>(i - j)];
    }
  }
  return L[static_cast<std::size_t>(n)];
}

MultiPoly rs_ones(int m, int n) {
  need(m >= 2, "RS_ONES needs m >= 2");
  need(n >= 0, "n must be nonnegative");
  std::vector<MultiPoly> Rv(static_cast<std::size_t>(n) + 1);
  Rv[0] = MultiPoly(1);
  for (int i = 1; i <= n; ++i) {
    MultiPoly x = Rv[static_cast<std::size_t>(i - 1)];
    for (int j = 2; j <= m - 1 && j <= i; ++j) {
      MultiPoly inner;
      for (int k = 0; k <= i - j; ++k) inner += MultiPoly(binom(j + k - 2, k)) * Q.pow(k);
      x += inner * Rv[static_cast<std::size_t>(i - j)];
    }
    Rv[static_cast<std::size_t>(i)] = x;
  }
  return Rv[static_cast<std::size_t>(n)];
}

MultiPoly rs_1212(int n) {
  need(n >= 0, "n must be nonnegative");
  std::vector<MultiPoly> Rv{MultiPoly(1), MultiPoly(1)};
  for (int i = 2; i <= n; ++i) {
    MultiPoly x = MultiPoly(2) * Rv[static_cast<std::size_t>(i - 1)];
    for (int k = 1; k <= i - 2; ++k) {
      x += Q.pow(k) * Rv[static_cast<std::size_t>(k)] * Rv[static_cast<std::size_t>(i - k - 1)];
    }
    Rv.push_back(x);
  }
  return Rv[static_cast<std::size_t>(n)];
}

MultiPoly motzkin_q(int n) {
  need(n >= 0, "n must be nonnegative");
  std::vector<MultiPoly> M{MultiPoly(1)};
  for (int i = 1; i <= n; ++i) {
    MultiPoly x = MultiPoly(2) * M[static_cast<std::size_t>(i - 1)];
    for (int k = 0; k <= i - 2; ++k) {
      x += Q.pow(k + 1) * M[static_cast<std::size_t>(k)] * M[static_cast<std::size_t>(i - k - 2)];
    }
    M.push_back(x);
  }
  return M[static_cast<std::size_t>(n)];
}

MultiPoly motzkin_q_by_area(int n) {
  MultiPoly out;
  for (const auto& p : two_colored_paths(n)) out.add_term({p.area(), 0, 0, 0}, 1);
  return out;
}

MultiPoly rs_111_1212(int n) {
  need(n >= 0, "n must be nonnegative");
  std::vector<MultiPoly> Rv{MultiPoly(1), MultiPoly(1)};
  for (int i = 2; i <= n; ++i) {
    MultiPoly x = Rv[static_cast<std::size_t>(i - 1)];
    for (int k = 0; k <= i - 2; ++k) {
      x += Q.pow(k) * Rv[static_cast<std::size_t>(k)] * Rv[static_cast<std::size_t>(i - k - 2)];
    }
    Rv.push_back(x);
  }
  return Rv[static_cast<std::size_t>(n)];
}

MultiPoly lb_111_1221(int n) {
  need(n >= 0, "n must be nonnegative");
  std::vector<MultiPoly> L{MultiPoly(1), MultiPoly(1)};
  for (int i = 2; i <= n; ++i) {
    MultiPoly x = L[static_cast<std::size_t>(i - 1)] + L[static_cast<std::size_t>(i - 2)];
    for (int k = 1; k <= i - 2; ++k) {
      x += Q.pow(k) * L[static_cast<std::size_t>(k - 1)] * L[static_cast<std::size_t>(i - k - 1)];
    }
    L.push_back(x);
  }
  return L[static_cast<std::size_t>(n)];
}

std::int64_t card_2pow(int n) {
  need(n >= 1, "CARD_2POW needs n >= 1");
  std::int64_t x = 1;
  for (int i = 1; i < n; ++i) x = checked_mul(x, 2);
  return x;
}

std::int64_t card_111(int n) {
  need(n >= 0, "n must be nonnegative");
  std::int64_t total = 0, dfact = 1;  // (2i)!! = 1*3*...*(2i-1)
  for (int i = 0; 2 * i <= n; ++i) {
    if (i > 0) dfact = checked_mul(dfact, 2 * i - 1);
    total = checked_add(total, checked_mul(binom(n, 2 * i), dfact));
  }
  return total;
}

std::int64_t card_fib(int n) {
  need(n >= 0, "n must be nonnegative");
  std::int64_t a = 1, b = 1;
  for (int i = 2; i <= n; ++i) {
    const std::int64_t c = checked_add(a, b);
    a = b;
    b = c;
  }
  return b;
}

std::int64_t card_catalan(int n) {
  need(n >= 0, "n must be nonnegative");
  std::vector<std::int64_t> c{1};
  for (int i = 1; i <= n; ++i) {
    std::int64_t x = 0;
    for (int j = 0; j < i; ++j) {
      x = checked_add(x, checked_mul(c[static_cast<std::size_t>(j)], c[static_cast<std::size_t>(i - 1 - j)]));
    }
    c.push_back(x);
  }
  return c[static_cast<std::size_t>(n)];
}

int deg_ls_12k(int n, int k) {
  need(k >= 3 && n >= k, "DEG_LS_12K needs n >= k >= 3");
  return static_cast<int>(binom(k - 2, 2) + static_cast<std::int64_t>(k - 2) * (n - k + 2));
}

Word lift(const Word& v, int k) {
  need(k >= 0, "lift needs k >= 0");
  std::vector<int> out;
  for (int i = 1; i <= k; ++i) out.push_back(i);
  for (int x : v) out.push_back(x + k);
  return Word(std::move(out));
}

namespace {

FormulaTarget stat_target(std::string patterns, Stat s) {
  return {FormulaTarget::Kind::stat, std::move(patterns), s};
}

FormulaTarget kind_target(FormulaTarget::Kind kind, std::string patterns) {
  return {kind, std::move(patterns), Stat::lb};
}

using Targets = std::vector<FormulaTarget>;

Formula n_formula(std::string id, std::string statement, int n_min, MultiPoly (*f)(int), Targets targets) {
  Formula out;
  out.id = std::move(id);
  out.arity = "n";
  out.statement = std::move(statement);
  out.n_min = n_min;
  out.eval = [f](const FormulaArgs& a) { return f(a.n); };
  out.targets = [targets](const FormulaArgs&) { return targets; };
  return out;
}

Formula count_formula(std::string id, std::string statement, int n_min, std::int64_t (*f)(int),
                      std::vector<std::string> classes) {
  Formula out;
  out.id = std::move(id);
  out.arity = "n";
  out.statement = std::move(statement);
  out.n_min = n_min;
  out.eval = [f](const FormulaArgs& a) { return MultiPoly(f(a.n)); };
  Targets targets;
  for (auto& c : classes) targets.push_back(kind_target(FormulaTarget::Kind::count, std::move(c)));
  out.targets = [targets](const FormulaArgs&) { return targets; };
  return out;
}

// Polynomials of the form sum over (exponent vector) of a small word family.
Formula family_formula(std::string id, std::string statement, int n_min,
                       std::function<MultiPoly(int)> f, Targets targets) {
  Formula out;
  out.id = std::move(id);
  out.arity = "n";
  out.statement = std::move(statement);
  out.n_min = n_min;
  out.eval = [f, n_min, name = out.id](const FormulaArgs& a) {
    need(a.n >= n_min, name + " needs n >= " + std::to_string(n_min));
    return f(a.n);
  };
  out.targets = [targets](const FormulaArgs&) { return targets; };
  return out;
}

MultiPoly p123_1212_lb(int n) {
  MultiPoly out(1);
  for (int k = 0; k <= n - 2; ++k) out += MultiPoly(n - k - 1) * Q.pow(k);
  return out;
}

MultiPoly p123_1212_ls(int n) {
  MultiPoly out(1);
  for (int k = 1; k <= n - 1; ++k) out += MultiPoly(n - k) * Q.pow(k);
  return out;
}

// 12...m k^{n-m} over m in [n], k in [m]; for m = n every k names the same
// word 12...n, so only k = m is kept there.
int k_from(int m, int n) { return m == n ? m : 1; }

MultiPoly p112_1221_f(int n) {
  MultiPoly out;
  for (int m = 1; m <= n; ++m) {
    for (int k = k_from(m, n); k <= m; ++k) {
      out.add_term({(n - m) * (m - k), static_cast<int>(binom(m, 2)) + (n - m) * (k - 1),
                    static_cast<int>(binom(m, 2)), m - k},
                   1);
    }
  }
  return out;
}

MultiPoly p112_1221_lb(int n) {
  MultiPoly out;
  for (int m = 1; m <= n; ++m) {
    for (int k = k_from(m, n); k <= m; ++k) out += Q.pow((n - m) * (m - k));
  }
  return out;
}

MultiPoly p112_1221_ls(int n) {
  MultiPoly out;
  for (int m = 1; m <= n; ++m) {
    for (int k = k_from(m, n); k <= m; ++k) out += qpow(Q, binom(m, 2) + (n - m) * (k - 1));
  }
  return out;
}

MultiPoly p112_1221_rb(int n) {
  MultiPoly out;
  for (int m = 1; m <= n; ++m) out += MultiPoly(m == n ? 1 : m) * qpow(Q, binom(m, 2));
  return out;
}

MultiPoly p112_1221_rs(int n) {
  MultiPoly out;
  for (int m = 1; m <= n; ++m) {
    for (int k = k_from(m, n); k <= m; ++k) out += Q.pow(m == n ? 0 : m - k);
  }
  return out;
}

int chi(bool b) { return b ? 1 : 0; }

MultiPoly p123_1221_f(int n) {
  MultiPoly out(1);
  for (int i = 0; i <= n - 2; ++i) {
    for (int j = 0; i + j <= n - 2; ++j) {
      const int k = n - 2 - i - j;
      out.add_term({j, k + 1, i + 1 + j * chi(k > 0), chi(j > 0)}, 1);
    }
  }
  return out;
}

MultiPoly p123_1221_lb(int n) {
  MultiPoly out(1);
  for (int j = 0; j <= n - 2; ++j) out += MultiPoly(n - j - 1) * Q.pow(j);
  return out;
}

MultiPoly p123_1221_ls(int n) {
  MultiPoly out(1);
  for (int k = 0; k <= n - 2; ++k) out += MultiPoly(n - k - 1) * Q.pow(k + 1);
  return out;
}

MultiPoly p123_1221_rb(int n) {
  MultiPoly out = MultiPoly(1) + Q.pow(n - 1);
  for (int k = 1; k <= n - 2; ++k) out += MultiPoly(k + 1) * Q.pow(k);
  return out;
}

MultiPoly p123_1221_rs(int n) { return MultiPoly(n) + MultiPoly(binom(n - 1, 2)) * Q; }

std::vector<Formula> build_formulas() {
  using K = FormulaTarget::Kind;
  std::vector<Formula> out;

  out.push_back(n_formula("SUM_GAUSS", "LB_n(112) = RS_n(112) = LB_n(122) = sum_t [n-1 choose t]_q", 1,
                          sum_gauss,
                          {stat_target("112", Stat::lb), stat_target("112", Stat::rs),
                           stat_target("122", Stat::lb)}));
  out.push_back(n_formula("DISTINCT_PROD",
                          "LS_n(112) = LS_n(121) = RB_n(121) = RB_n(122) = prod_{i=1}^{n-1} (1+q^i)", 0,
                          distinct_prod,
                          {stat_target("112", Stat::ls), stat_target("121", Stat::ls),
                           stat_target("121", Stat::rb), stat_target("122", Stat::rb)}));
  out.push_back(n_formula("BINOM_SHIFT",
                          "RS_n(122) = LB_n(123) = RS_n(123) = 1 + sum_{k=0}^{n-2} C(n-1,k+1) q^k", 0,
                          binom_shift,
                          {stat_target("122", Stat::rs), stat_target("123", Stat::lb),
                           stat_target("123", Stat::rs)}));
  out.push_back(n_formula("TRIANG", "RB_n(112) = LS_n(122) = sum_m C(n-1,n-m) q^C(m,2)", 0, triang,
                          {stat_target("112", Stat::rb), stat_target("122", Stat::ls)}));

  for (int i = 1; i <= 9; ++i) {
    Formula f;
    f.id = "MULT_" + std::to_string(i);
    f.arity = "n";
    f.statement = "F_n(" + mult_patterns(i) + "; q, r, s, t)";
    f.n_min = kMultNMin[i];
    f.eval = [i](const FormulaArgs& a) { return mult(i, a.n); };
    f.targets = [i](const FormulaArgs&) { return Targets{kind_target(K::full, mult_patterns(i))}; };
    out.push_back(std::move(f));
  }

  {
    Formula f;
    f.id = "LS_MACHINE";
    f.arity = "v,n";
    f.statement = "LS_n(1(v+1)) = sum_j C(n-1,j) q^j LS_j(v)";
    f.eval = [](const FormulaArgs& a) { return ls_machine(Word::parse(a.v), a.n); };
    f.targets = [](const FormulaArgs& a) {
      return Targets{stat_target(lift(Word::parse(a.v), 1).str(), Stat::ls)};
    };
    out.push_back(std::move(f));
  }
  {
    Formula f;
    f.id = "RS_MACHINE";
    f.arity = "v,n";
    f.statement = "RS_n(1(v+1)) = sum_j sum_k C(n+k-j-2,k) q^k RS_j(v)";
    f.eval = [](const FormulaArgs& a) { return rs_machine(Word::parse(a.v), a.n); };
    f.targets = [](const FormulaArgs& a) {
      return Targets{stat_target(lift(Word::parse(a.v), 1).str(), Stat::rs)};
    };
    out.push_back(std::move(f));
  }
  {
    Formula f;
    f.id = "K";
    f.arity = "m,n";
    f.statement = "K_{m,n} = ([m+1]^{n-1} - 1) / [m]";
    f.n_min = 1;
    f.eval_rational = [](const FormulaArgs& a) { return k_rational(a.m, a.n); };
    f.eval = [](const FormulaArgs& a) { return k_rational(a.m, a.n).to_polynomial(); };
    f.targets = [](const FormulaArgs&) { return Targets{}; };
    out.push_back(std::move(f));
  }
  {
    Formula f;
    f.id = "C_COEFF";
    f.arity = "k";
    f.statement = "c_k = 1 - sum_{j=1}^{k-3} c_{k-j} / [j]!";
    f.eval_rational = [](const FormulaArgs& a) { return c_coeff(a.k); };
    f.eval = [](const FormulaArgs& a) { return c_coeff(a.k).to_polynomial(); };
    f.targets = [](const FormulaArgs&) { return Targets{}; };
    out.push_back(std::move(f));
  }
  {
    Formula f;
    f.id = "LS_12K";
    f.arity = "n,k";
    f.statement = "LS_n(12...k) = 1 + sum_{i=1}^{k-2} c_{k-i+1} K_{i,n} / [i-1]!";
    f.n_min = 1;
    f.eval = [](const FormulaArgs& a) { return ls_12k(a.n, a.k); };
    f.targets = [](const FormulaArgs& a) { return Targets{stat_target(increasing(a.k), Stat::ls)}; };
    out.push_back(std::move(f));
  }
  {
    Formula f;
    f.id = "LS_ONES";
    f.arity = "m,n";
    f.statement = "LS_n(1^m) = sum_{j=1}^{m-1} C(n-1,j-1) q^{n-j} LS_{n-j}(1^m)";
    f.eval = [](const FormulaArgs& a) { return ls_ones(a.m, a.n); };
    f.targets = [](const FormulaArgs& a) { return Targets{stat_target(ones(a.m), Stat::ls)}; };
    out.push_back(std::move(f));
  }
  {
    Formula f;
    f.id = "RS_ONES";
    f.arity = "m,n";
    f.statement = "RS_n(1^m) = RS_{n-1}(1^m) + sum_{j=2}^{m-1} sum_k C(j+k-2,k) q^k RS_{n-j}(1^m)";
    f.eval = [](const FormulaArgs& a) { return rs_ones(a.m, a.n); };
    f.targets = [](const FormulaArgs& a) { return Targets{stat_target(ones(a.m), Stat::rs)}; };
    out.push_back(std::move(f));
  }

  out.push_back(n_formula("RS_1212", "RS_n(1212) = 2 RS_{n-1} + sum_{k=1}^{n-2} q^k RS_k RS_{n-k-1}", 0,
                          rs_1212, {stat_target("1212", Stat::rs)}));
  out.push_back(n_formula("MOTZKIN_Q", "M_n(q) = 2 M_{n-1} + sum_{k=0}^{n-2} q^{k+1} M_k M_{n-k-2}", 0,
                          motzkin_q, {kind_target(K::area, "")}));
  out.push_back(n_formula("RS_111_1212",
                          "RS_n(111,1212) = RS_{n-1} + sum_{k=0}^{n-2} q^k RS_k RS_{n-k-2}", 0,
                          rs_111_1212, {stat_target("111,1212", Stat::rs)}));
  out.push_back(n_formula("LB_111_1221", "L_n = L_{n-1} + L_{n-2} + sum_{k=1}^{n-2} q^k L_{k-1} L_{n-k-1}", 0,
                          lb_111_1221, {stat_target("111,1221", Stat::lb)}));

  out.push_back(family_formula("P123_1212_LB", "LB_n(123,1212) = RS_n(123,1212) = 1 + sum (n-k-1) q^k", 0,
                               p123_1212_lb,
                               {stat_target("123,1212", Stat::lb), stat_target("123,1212", Stat::rs)}));
  out.push_back(family_formula("P123_1212_LS", "LS_n(123,1212) = RB_n(123,1212) = 1 + sum (n-k) q^k", 0,
                               p123_1212_ls,
                               {stat_target("123,1212", Stat::ls), stat_target("123,1212", Stat::rb)}));
  out.push_back(family_formula("P112_1221_F", "F_n(112,1221) over 12...m k^{n-m}", 1, p112_1221_f,
                               {kind_target(K::full, "112,1221")}));
  out.push_back(family_formula("P112_1221_LB", "LB_n(112,1221)", 1, p112_1221_lb,
                               {stat_target("112,1221", Stat::lb)}));
  out.push_back(family_formula("P112_1221_LS", "LS_n(112,1221)", 1, p112_1221_ls,
                               {stat_target("112,1221", Stat::ls)}));
  out.push_back(family_formula("P112_1221_RB", "RB_n(112,1221)", 1, p112_1221_rb,
                               {stat_target("112,1221", Stat::rb)}));
  out.push_back(family_formula("P112_1221_RS", "RS_n(112,1221)", 1, p112_1221_rs,
                               {stat_target("112,1221", Stat::rs)}));
  out.push_back(family_formula("P123_1221_F", "F_n(123,1221) over 1^n and 11^i21^j2^k", 2, p123_1221_f,
                               {kind_target(K::full, "123,1221")}));
  out.push_back(family_formula("P123_1221_LB", "LB_n(123,1221)", 2, p123_1221_lb,
                               {stat_target("123,1221", Stat::lb)}));
  out.push_back(family_formula("P123_1221_LS", "LS_n(123,1221)", 2, p123_1221_ls,
                               {stat_target("123,1221", Stat::ls)}));
  out.push_back(family_formula("P123_1221_RB", "RB_n(123,1221)", 2, p123_1221_rb,
                               {stat_target("123,1221", Stat::rb)}));
  out.push_back(family_formula("P123_1221_RS", "RS_n(123,1221) = n + C(n-1,2) q", 2, p123_1221_rs,
                               {stat_target("123,1221", Stat::rs)}));

  out.push_back(count_formula("CARD_2POW", "#R_n(v) = 2^{n-1} for v in {112,121,122,123}", 1, card_2pow,
                              {"112", "121", "122", "123"}));
  out.push_back(count_formula("CARD_111", "#R_n(111) = sum_i C(n,2i) (2i)!!", 0, card_111, {"111"}));
  out.push_back(count_formula("CARD_FIB", "#R_n(111,112) = #R_n(111,121) = f_n", 0, card_fib,
                              {"111,112", "111,121"}));
  out.push_back(count_formula("CARD_CATALAN", "#R_n(1212) = #R_n(1221) = C_n", 0, card_catalan,
                              {"1212", "1221"}));
  {
    Formula f;
    f.id = "DEG_LS_12K";
    f.arity = "n,k";
    f.statement = "LS_n(12...k) is monic of degree C(k-2,2) + (k-2)(n-k+2)";
    f.n_min = 3;
    f.eval = [](const FormulaArgs& a) { return MultiPoly(deg_ls_12k(a.n, a.k)); };
    f.targets = [](const FormulaArgs& a) {
      return Targets{kind_target(K::ls_degree, increasing(a.k))};
    };
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

const std::vector<Formula>& formulas() {
  static const std::vector<Formula> registry = build_formulas();
  return registry;
}

const Formula& find_formula(std::string_view id) {
  for (const auto& f : formulas()) {
    if (f.id == id) return f;
  }
  throw DomainError("unknown formula '" + std::string(id) + "'");
}

MultiPoly evaluate(std::string_view id, const FormulaArgs& args) {
  const Formula& f = find_formula(id);
  if (f.arity.find('n') != std::string::npos) {
    need(args.n >= f.n_min, f.id + " needs n >= " + std::to_string(f.n_min));
  }
  return f.eval(args);
}

std::vector<const Formula*> formulas_for(const PatternSet& V, std::optional<Stat> stat) {
  std::vector<const Formula*> out;
  for (const auto& f : formulas()) {
    if (f.arity != "n") continue;
    for (const auto& t : f.targets({})) {
      if (t.kind == FormulaTarget::Kind::area || t.kind == FormulaTarget::Kind::ls_degree) continue;
      if (PatternSet::parse(t.patterns) != V) continue;
      const bool match = stat ? (t.kind == FormulaTarget::Kind::stat && t.stat == *stat)
                              : t.kind == FormulaTarget::Kind::full;
      if (match) {
        out.push_back(&f);
        break;
      }
    }
  }
  return out;
}

Side substituted_side(std::string label, std::string patterns, std::array<MultiPoly, 4> images) {
  return {std::move(label), [patterns, images](int n, const AvoidOptions& opts) {
            return gen_poly(n, PatternSet::parse(patterns), opts).substitute(images);
          }};
}

Side stat_side(std::string patterns, Stat stat) {
  return {stat_target(patterns, stat).str(), [patterns, stat](int n, const AvoidOptions& opts) {
            return specialize(gen_poly(n, PatternSet::parse(patterns), opts), stat);
          }};
}

namespace {

std::vector<Symmetry> build_symmetries() {
  const MultiPoly one(1);
  const std::array<MultiPoly, 4> id{Q, R, S, T};
  const std::array<MultiPoly, 4> swap_qt{T, R, S, Q};
  const std::array<MultiPoly, 4> swap_rs{Q, S, R, T};
  std::vector<Symmetry> out;
  for (int i : {2, 3, 4, 7, 8}) {
    auto p = mult_patterns(i);
    std::replace(p.begin(), p.end(), ',', '_');
    out.push_back({"SYM_QT_" + p, "F_n(" + mult_patterns(i) + ") is invariant under q <-> t", i, id, i, swap_qt});
  }
  for (int i : {2, 5, 8}) {
    auto p = mult_patterns(i);
    std::replace(p.begin(), p.end(), ',', '_');
    out.push_back({"SYM_RS_" + p, "F_n(" + mult_patterns(i) + ") is invariant under r <-> s", i, id, i, swap_rs});
  }
  out.push_back({"SYM_EQ_111_121", "F_n(111,121; q,r,s,t) = F_n(111,112; s,r,s,1)", 2, id, 1, {S, R, S, one}});
  out.push_back({"SYM_EQ_112_121", "F_n(112,121; q,r,s,t) = F_n(121,122; q,s,r,t)", 4, id, 7, swap_rs});
  out.push_back({"SYM_EQ_112_123", "F_n(112,123; q,r,s,1) = F_n(122,123; q,s,r,1)", 6, {Q, R, S, one}, 9,
                 {Q, S, R, one}});
  return out;
}

}  // namespace

const std::vector<Symmetry>& symmetries() {
  static const std::vector<Symmetry> registry = build_symmetries();
  return registry;
}

bool symmetry_check(std::string_view id, int n_max) {
  for (const auto& s : symmetries()) {
    if (s.id != id) continue;
    for (int n = std::max(kMultNMin[s.lhs], kMultNMin[s.rhs]); n <= n_max; ++n) {
      if (mult(s.lhs, n).substitute(s.lhs_images) != mult(s.rhs, n).substitute(s.rhs_images)) return false;
    }
    return true;
  }
  throw DomainError("unknown symmetry '" + std::string(id) + "'");
}

bool wilf_transport(const Word& v, const Word& w, Stat stat, int k, int n_max, const AvoidOptions& opts) {
  require_rgf(v, "pattern");
  require_rgf(w, "pattern");
  const PatternSet a({lift(v, k)}), b({lift(w, k)});
  for (int n = 0; n <= n_max; ++n) {
    if (specialize(gen_poly(n, a, opts), stat) != specialize(gen_poly(n, b, opts), stat)) return false;
  }
  return true;
}

namespace {

std::vector<Equidistribution> build_equidistributions() {
  const MultiPoly one(1);
  std::vector<Equidistribution> out;
  auto add = [&](std::string id, std::vector<Side> sides, int n_min = 0, int n_max = 9) {
    out.push_back({std::move(id), std::move(sides), n_min, n_max});
  };
  const Side motzkin{"M_{n-1}(q)", [](int n, const AvoidOptions&) { return motzkin_q(n - 1); }};

  add("EQ_LB_RS_112", {stat_side("112", Stat::lb), stat_side("112", Stat::rs)});
  add("EQ_F112_F122", {substituted_side("F_n(112; q,r,s,1)", "112", {Q, R, S, one}),
                       substituted_side("F_n(122; q,s,r,1)", "122", {Q, S, R, one})});
  add("EQ_M_1212_1221",
      {stat_side("1212", Stat::lb), stat_side("1212", Stat::rs), stat_side("1221", Stat::lb), motzkin}, 1);
  add("EQ_LS_1212_1221", {stat_side("1212", Stat::ls), stat_side("1221", Stat::ls)});
  add("EQ_LS_RB_1212", {stat_side("1212", Stat::ls), stat_side("1212", Stat::rb)});
  add("EQ_QR11_1212_1221", {substituted_side("F_n(1212; q,r,1,1)", "1212", {Q, R, one, one}),
                            substituted_side("F_n(1221; q,r,1,1)", "1221", {Q, R, one, one})});
  for (int k = 1; k <= 4; ++k) {
    const std::string o = ones(k), inc = increasing(k);
    add("EQ_QR11_ONES_" + std::to_string(k),
        {substituted_side("F_n(" + o + ",1212; q,r,1,1)", o + ",1212", {Q, R, one, one}),
         substituted_side("F_n(" + o + ",1221; q,r,1,1)", o + ",1221", {Q, R, one, one})});
    add("EQ_QR11_INC_" + std::to_string(k),
        {substituted_side("F_n(" + inc + ",1212; q,r,1,1)", inc + ",1212", {Q, R, one, one}),
         substituted_side("F_n(" + inc + ",1221; q,r,1,1)", inc + ",1221", {Q, R, one, one})});
  }
  add("EQ_LB_111_1212_1221", {stat_side("111,1212", Stat::lb), stat_side("111,1221", Stat::lb)});
  add("EQ_LS_111_1212_1221", {stat_side("111,1212", Stat::ls), stat_side("111,1221", Stat::ls)});
  add("EQ_LB_123_1212_1221", {stat_side("123,1212", Stat::lb), stat_side("123,1212", Stat::rs),
                              stat_side("123,1221", Stat::lb)});
  add("EQ_LS_123_1212_1221", {stat_side("123,1212", Stat::ls), stat_side("123,1212", Stat::rb),
                              stat_side("123,1221", Stat::ls)});

  for (const auto& s : symmetries()) {
    const auto lp = mult_patterns(s.lhs), rp = mult_patterns(s.rhs);
    add("EQ_" + s.id, {substituted_side("F_n(" + lp + ") lhs", lp, s.lhs_images),
                       substituted_side("F_n(" + rp + ") rhs", rp, s.rhs_images)});
  }

  struct Lift {
    const char* name;
    const char* v;
    const char* w;
    Stat stat;
  };
  for (const Lift& l : {Lift{"LB", "112", "122", Stat::lb}, Lift{"LS", "112", "121", Stat::ls},
                        Lift{"RS", "122", "123", Stat::rs}}) {
    for (int k = 1; k <= 3; ++k) {
      const auto a = lift(Word::parse(l.v), k - 1).str(), b = lift(Word::parse(l.w), k - 1).str();
      add(std::string("EQ_WILF_") + l.name + "_K" + std::to_string(k),
          {stat_side(a, l.stat), stat_side(b, l.stat)}, 0, 8);
    }
  }
  return out;
}

}  // namespace

const std::vector<Equidistribution>& equidistributions() {
  static const std::vector<Equidistribution> registry = build_equidistributions();
  return registry;
}

std::optional<SideMismatch> compare_sides(const Equidistribution& e, int n, const AvoidOptions& opts) {
  const MultiPoly first = e.sides.front().eval(n, opts);
  for (std::size_t i = 1; i < e.sides.size(); ++i) {
    MultiPoly other = e.sides[i].eval(n, opts);
    if (other != first) return SideMismatch{i, first, std::move(other)};
  }
  return std::nullopt;
}

}  // namespace rgflab

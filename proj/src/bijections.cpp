#include "rgflab/bijections.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "rgflab/statistics.hpp"

namespace rgflab {

namespace {

const PatternSet& pset(const char* text) {
  // a handful of fixed sets; parsed once each
  static std::mutex mu;
  static std::map<std::string, PatternSet> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(text);
  if (it == cache.end()) it = cache.emplace(text, PatternSet::parse(text)).first;
  return it->second;
}

void require_avoids(const Word& w, const char* patterns) {
  require_rgf(w);
  if (!avoids(w, pset(patterns))) {
    throw DomainError("'" + w.str() + "' is not in R_n(" + std::string(patterns) + ")");
  }
}

std::vector<int> rs_letters(const Word& w) {
  std::vector<int> out;
  for (std::size_t i = 0; i < w.size(); ++i) out.push_back(stat_letter(w, i, Stat::rs));
  return out;
}

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

bool is_first_occurrence(const Word& w, std::size_t i) {
  return std::find(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i), w[i]) ==
         w.begin() + static_cast<std::ptrdiff_t>(i);
}

Word shift(const std::vector<int>& letters, std::size_t from, int delta) {
  std::vector<int> out;
  for (std::size_t i = from; i < letters.size(); ++i) out.push_back(letters[i] + delta);
  return Word(std::move(out));
}

}  // namespace

std::string BoxedPartition::str() const { return lambda.str() + " in " + box.str(); }

BoxedPartition BoxedPartition::parse(std::string_view text) {
  auto fail = [&] { return DomainError("invalid boxed partition '" + std::string(text) + "'"); };
  const auto open = text.find('(');
  const auto close = text.find(')');
  const auto in = text.find(" in ");
  if (open != 0 || close == std::string_view::npos || in == std::string_view::npos || in < close) {
    throw fail();
  }
  std::vector<int> parts;
  std::string_view inner = text.substr(1, close - 1);
  while (!inner.empty()) {
    auto comma = inner.find(',');
    auto token = inner.substr(0, comma);
    int x = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), x);
    if (ec != std::errc() || ptr != token.data() + token.size()) throw fail();
    parts.push_back(x);
    if (comma == std::string_view::npos) break;
    inner.remove_prefix(comma + 1);
  }
  std::string_view box = text.substr(in + 4);
  const auto x = box.find('x');
  if (x == std::string_view::npos) throw fail();
  Rectangle r;
  auto [p1, e1] = std::from_chars(box.data(), box.data() + x, r.rows);
  auto [p2, e2] = std::from_chars(box.data() + x + 1, box.data() + box.size(), r.cols);
  if (e1 != std::errc() || e2 != std::errc() || p1 != box.data() + x ||
      p2 != box.data() + box.size() || r.rows < 0 || r.cols < 0) {
    throw fail();
  }
  BoxedPartition out{IntegerPartition(std::move(parts)), r};
  if (!fits_in(out.lambda, out.box)) throw fail();
  return out;
}

std::vector<BoxedPartition> boxed_partitions(int n) {
  std::vector<BoxedPartition> out;
  for (int a = 0; a <= n - 1; ++a) {
    const Rectangle box{a, n - 1 - a};
    for (auto& p : partitions_in(box)) out.push_back({std::move(p), box});
  }
  return out;
}

RootedUnimodal psi112(const Word& w) {
  require_avoids(w, "112");
  if (w.empty()) throw DomainError("psi112 needs n >= 1");
  const auto first_max = std::max_element(w.begin(), w.end()) - w.begin();
  return RootedUnimodal{rs_letters(w), static_cast<std::size_t>(first_max)};
}

Word psi112_inverse(const RootedUnimodal& u) {
  if (!u.valid()) throw DomainError("'" + u.str() + "' is not a rooted unimodal composition");
  const std::size_t m = u.root;
  std::vector<int> w;
  for (std::size_t i = 0; i <= m; ++i) w.push_back(static_cast<int>(i) + 1);
  for (std::size_t i = m + 1; i < u.values.size(); ++i) {
    // last index in the weakly increasing part holding the same value
    std::size_t l = m + 1;
    for (std::size_t j = 0; j <= m; ++j) {
      if (u.values[j] == u.values[i]) l = j;
    }
    if (l > m) throw DomainError("value " + std::to_string(u.values[i]) + " missing before the root");
    w.push_back(static_cast<int>(l) + 1);
  }
  return Word(std::move(w));
}

BoxedPartition phi_unimodal(const RootedUnimodal& u) {
  if (!u.valid()) throw DomainError("'" + u.str() + "' is not a rooted unimodal composition");
  const int n = static_cast<int>(u.values.size());
  const int m = static_cast<int>(u.root) + 1;
  const Rectangle box{m - 1, n - m};
  std::vector<std::vector<char>> grid(static_cast<std::size_t>(box.rows) + 1,
                                      std::vector<char>(static_cast<std::size_t>(box.cols) + 1, 0));
  for (int i = 2; i <= n - 1; ++i) {
    const int d = i - m;
    const int r0 = std::max(1, 1 - d);
    for (int t = 0; t < u.values[static_cast<std::size_t>(i - 1)]; ++t) {
      const int r = r0 + t, c = r + d;
      if (r > box.rows || c > box.cols) throw DomainError("diagonal leaves the rectangle");
      grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 1;
    }
  }
  std::vector<int> parts;
  for (int r = 1; r <= box.rows; ++r) {
    int len = 0;
    while (len < box.cols && grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(len + 1)]) ++len;
    for (int c = len + 1; c <= box.cols; ++c) {
      if (grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) {
        throw DomainError("diagonals do not form a Young diagram");
      }
    }
    parts.push_back(len);
  }
  return {IntegerPartition(std::move(parts)), box};
}

RootedUnimodal phi_unimodal_inverse(const BoxedPartition& p) {
  if (!fits_in(p.lambda, p.box)) throw DomainError(p.str() + ": partition does not fit");
  const int m = p.box.rows + 1;
  const int n = p.box.rows + p.box.cols + 1;
  RootedUnimodal u{std::vector<int>(static_cast<std::size_t>(n), 0), static_cast<std::size_t>(m - 1)};
  for (int i = 2; i <= n - 1; ++i) {
    const int d = i - m;
    int count = 0;
    for (int r = std::max(1, 1 - d); r <= p.box.rows; ++r) {
      if (r + d <= p.lambda.part(static_cast<std::size_t>(r - 1))) ++count;
    }
    u.values[static_cast<std::size_t>(i - 1)] = count;
  }
  if (!u.valid()) throw DomainError(p.str() + " gives an invalid composition");
  return u;
}

BoxedPartition rho112(const Word& w) {
  require_avoids(w, "112");
  if (w.empty()) throw DomainError("rho112 needs n >= 1");
  const int n = static_cast<int>(w.size());
  const int m = w.max();
  std::vector<int> parts;
  for (int i = n - 1; i >= m; --i) parts.push_back(m - w[static_cast<std::size_t>(i)]);
  return {IntegerPartition(std::move(parts)), Rectangle{n - m, m - 1}};
}

Word rho112_inverse(const BoxedPartition& p) {
  if (!fits_in(p.lambda, p.box)) throw DomainError(p.str() + ": partition does not fit");
  const int m = p.box.cols + 1;
  const int n = p.box.rows + p.box.cols + 1;
  std::vector<int> w;
  for (int i = 1; i <= m; ++i) w.push_back(i);
  for (int pos = m; pos < n; ++pos) w.push_back(m - p.lambda.part(static_cast<std::size_t>(n - pos - 1)));
  return Word(std::move(w));
}

Word eta(const Word& w) {
  require_avoids(w, "112");
  const int m = w.max();
  std::vector<int> ones(static_cast<std::size_t>(m) + 1, 0);
  for (std::size_t i = static_cast<std::size_t>(m); i < w.size(); ++i) ++ones[static_cast<std::size_t>(m - w[i] + 1)];
  std::vector<int> out;
  for (int j = 1; j <= m; ++j) {
    out.push_back(j);
    out.insert(out.end(), static_cast<std::size_t>(ones[static_cast<std::size_t>(j)]), 1);
  }
  return Word(std::move(out));
}

Word eta_inverse(const Word& v) {
  require_avoids(v, "122");
  const int m = v.max();
  std::vector<int> out;
  for (int j = 1; j <= m; ++j) out.push_back(j);
  std::vector<int> ones(static_cast<std::size_t>(m) + 1, 0);
  int current = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (is_first_occurrence(v, i)) {
      current = v[i];
    } else {
      ++ones[static_cast<std::size_t>(current)];  // repeated letters are 1s here
    }
  }
  for (int j = 1; j <= m; ++j) out.insert(out.end(), static_cast<std::size_t>(ones[static_cast<std::size_t>(j)]), m - j + 1);
  return Word(std::move(out));
}

Word xi(const Word& w) {
  require_avoids(w, "112");
  std::vector<int> out = w.letters();
  std::sort(out.begin(), out.end());
  return Word(std::move(out));
}

Word xi_inverse(const Word& v) {
  require_avoids(v, "121");
  const int m = v.max();
  std::vector<int> out, rest;
  for (int j = 1; j <= m; ++j) out.push_back(j);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!is_first_occurrence(v, i)) rest.push_back(v[i]);
  }
  std::sort(rest.rbegin(), rest.rend());
  out.insert(out.end(), rest.begin(), rest.end());
  return Word(std::move(out));
}

Word f122_123(const Word& w) {
  require_avoids(w, "122");
  std::vector<int> out;
  for (int x : w) out.push_back(std::min(x, 2));
  return Word(std::move(out));
}

Word f122_123_inverse(const Word& v) {
  require_avoids(v, "123");
  std::vector<int> out;
  int next = 2;
  for (int x : v) out.push_back(x == 1 ? 1 : next++);
  return Word(std::move(out));
}

Word psi_motzkin(const MotzkinPath& p) {
  if (!p.two_colored()) throw DomainError("psi_motzkin takes a two-colored path");
  const auto pair = p.pairing();
  std::vector<int> w{1};
  int mx = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    switch (p[i]) {
      case 'U':
      case 'b': w.push_back(++mx); break;
      case 'a': w.push_back(w[i]); break;
      case 'D': w.push_back(w[static_cast<std::size_t>(pair[i])]); break;
    }
  }
  return Word(std::move(w));
}

MotzkinPath psi_motzkin_inverse(const Word& w) {
  require_avoids(w, "1212");
  if (w.empty()) throw DomainError("psi_motzkin_inverse needs n >= 1");
  std::string steps;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] == w[i + 1]) {
      steps += 'a';
    } else if (w[i] < w[i + 1]) {
      const bool again = std::find(w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end(), w[i]) != w.end();
      steps += again ? 'U' : 'b';
    } else {
      steps += 'D';
    }
  }
  return MotzkinPath(steps);
}

MotzkinPath phi_motzkin(const Word& w) {
  require_avoids(w, "111,1212");
  std::string steps;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const bool later = std::find(w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end(), w[i]) != w.end();
    if (later) {
      steps += 'U';
    } else {
      steps += is_first_occurrence(w, i) ? 'H' : 'D';
    }
  }
  return MotzkinPath(steps);
}

Word phi_motzkin_inverse(const MotzkinPath& p) {
  if (p.steps().find_first_of("ab") != std::string::npos) {
    throw DomainError("phi_motzkin_inverse takes a plain Motzkin path");
  }
  const auto pair = p.pairing();
  std::vector<int> w;
  int mx = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 'D') {
      w.push_back(w[static_cast<std::size_t>(pair[i])]);
    } else {
      w.push_back(++mx);
    }
  }
  return Word(std::move(w));
}

Word inc(const Word& w) {
  require_rgf(w);
  std::vector<std::size_t> positions;
  std::vector<int> values;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!is_first_occurrence(w, i)) {
      positions.push_back(i);
      values.push_back(w[i]);
    }
  }
  std::sort(values.begin(), values.end());
  std::vector<int> out = w.letters();
  for (std::size_t k = 0; k < positions.size(); ++k) out[positions[k]] = values[k];
  return Word(std::move(out));
}

Word inc_restricted(const Word& w) {
  require_avoids(w, "1212");
  return inc(w);
}

Word inc_restricted_inverse(const Word& v) {
  require_avoids(v, "1221");
  std::vector<int> remaining(static_cast<std::size_t>(v.max()) + 1, 0);
  for (int x : v) ++remaining[static_cast<std::size_t>(x)];
  std::vector<int> out;
  int mx = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] > mx) {
      mx = v[i];
      --remaining[static_cast<std::size_t>(mx)];
      out.push_back(mx);
      continue;
    }
    int x = mx;
    while (x >= 1 && remaining[static_cast<std::size_t>(x)] == 0) --x;
    --remaining[static_cast<std::size_t>(x)];
    out.push_back(x);
  }
  Word w(std::move(out));
  if (!avoids(w, pset("1212")) || inc(w) != v) {
    throw DomainError("no 1212-avoiding preimage for '" + v.str() + "'");
  }
  return w;
}

Word alpha(const Word& v) {
  require_avoids(v, "1221");
  std::vector<int> u{1};
  for (std::size_t i = 0; i < v.size(); ++i) u.push_back(is_first_occurrence(v, i) ? v[i] + 1 : v[i]);
  u.push_back(1);
  return inc(Word(std::move(u)));
}

bool in_alpha_image(const Word& w) {
  if (!is_rgf(w) || !avoids(w, pset("1221"))) return false;
  const std::size_t n = w.size();
  if (n < 2) return false;
  std::vector<char> repeated(n, 0);
  for (std::size_t i = 0; i < n; ++i) repeated[i] = !is_first_occurrence(w, i);
  // (i)
  if (std::count(w.begin(), w.end(), 1) < 2 || !repeated[n - 1]) return false;
  // (ii)
  int mx = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (repeated[i] && w[i] >= mx) return false;
    mx = std::max(mx, w[i]);
  }
  // (iii): every maximal run of first occurrences w_i..w_j framed by repeated
  // letters on both sides has w_{j+1} < w_i - 1
  for (std::size_t i = 1; i < n; ++i) {
    if (repeated[i] || !repeated[i - 1]) continue;
    std::size_t j = i;
    while (j + 1 < n && !repeated[j + 1]) ++j;
    if (j + 1 < n && !(w[j + 1] < w[i] - 1)) return false;
  }
  return true;
}

Word alpha_inverse(const Word& w) {
  if (!in_alpha_image(w)) throw DomainError("'" + w.str() + "' is not in the image of alpha");
  std::vector<std::size_t> positions;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!is_first_occurrence(w, i)) positions.push_back(i);
  }
  // repeated subword 1 r_1 ... r_t of w was r_1 ... r_t 1 in u
  std::vector<int> u = w.letters();
  for (std::size_t k = 0; k + 1 < positions.size(); ++k) u[positions[k]] = w[positions[k + 1]];
  u[positions.back()] = 1;
  std::vector<int> v;
  int mx = 0;
  for (std::size_t i = 1; i + 1 < u.size(); ++i) {
    if (u[i] > mx) {
      mx = u[i];
      v.push_back(u[i] - 1);
    } else {
      v.push_back(u[i]);
    }
  }
  Word out(std::move(v));
  if (!is_rgf(out) || !avoids(out, pset("1221")) || alpha(out) != w) {
    throw DomainError("'" + w.str() + "' is not in the image of alpha");
  }
  return out;
}

Word v_map(const MotzkinPath& p) {
  if (!p.two_colored()) throw DomainError("v_map takes a two-colored path");
  const auto levels = p.levels();
  std::vector<int> v{1};
  int mx = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    switch (p[i]) {
      case 'U':
      case 'b': v.push_back(++mx); break;
      case 'a': v.push_back(mx - levels[i]); break;
      case 'D': v.push_back(mx - p.A_stat(i) - levels[i]); break;
    }
  }
  return Word(std::move(v));
}

Word beta(const MotzkinPath& p) { return inc(v_map(p)); }

std::optional<std::size_t> breaking_letter(const Word& w) {
  for (std::size_t k = w.size(); k-- > 0;) {
    if (is_first_occurrence(w, k)) continue;
    const Word prefix(std::vector<int>(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k) + 1));
    if (in_alpha_image(prefix)) return k;
  }
  return std::nullopt;
}

namespace {

std::string beta_inverse_steps(const Word& w) {
  const std::size_t n = w.size();
  if (n <= 1) return "";
  const auto& L = w.letters();
  if (w[1] == 1) return "a" + beta_inverse_steps(shift(L, 1, 0));
  if (std::count(L.begin(), L.end(), 1) == 1) return "b" + beta_inverse_steps(shift(L, 1, -1));
  const auto k = breaking_letter(w);
  if (!k) throw DomainError("'" + w.str() + "' has no breaking letter");
  const Word prefix(std::vector<int>(L.begin(), L.begin() + static_cast<std::ptrdiff_t>(*k) + 1));
  const int m = prefix.max();
  std::vector<int> rest{1};
  for (std::size_t i = *k + 1; i < n; ++i) rest.push_back(L[i] - (m - 1));
  return "U" + beta_inverse_steps(alpha_inverse(prefix)) + "D" + beta_inverse_steps(Word(std::move(rest)));
}

}  // namespace

MotzkinPath beta_inverse(const Word& w) {
  require_avoids(w, "1221");
  if (w.empty()) throw DomainError("beta_inverse needs n >= 1");
  return MotzkinPath(beta_inverse_steps(w));
}

BoxedPartition rho_prime(const Word& w) {
  require_avoids(w, "111,112");
  if (w.empty()) throw DomainError("rho_prime needs n >= 1");
  const int n = static_cast<int>(w.size());
  const int m = w.max();
  std::vector<int> parts;
  for (int i = n - 1; i >= m; --i) parts.push_back(m - w[static_cast<std::size_t>(i)]);
  return {delta_distinct(parts), Rectangle{n - m, 2 * m - n}};
}

Word rho_prime_inverse(const BoxedPartition& p) {
  if (!fits_in(p.lambda, p.box)) throw DomainError(p.str() + ": partition does not fit");
  const int a = p.box.rows;
  const int m = a + p.box.cols;
  if (m < 1) throw DomainError(p.str() + ": empty rectangle has no preimage");
  const auto lambda = delta_inverse(p.lambda, a);
  std::vector<int> w;
  for (int i = 1; i <= m; ++i) w.push_back(i);
  for (int i = 1; i <= a; ++i) w.push_back(m - lambda[static_cast<std::size_t>(a - i)]);
  return Word(std::move(w));
}

std::vector<BoxedPartition> rho_prime_codomain(int n) {
  std::vector<BoxedPartition> out;
  for (int m = std::max(1, (n + 1) / 2); m <= n; ++m) {
    const Rectangle box{n - m, 2 * m - n};
    for (auto& p : partitions_in(box)) out.push_back({std::move(p), box});
  }
  return out;
}

BoxedPartition delta_boxed(const BoxedPartition& p) {
  const int r = p.box.rows, l = p.box.cols;
  if (!fits_in(p.lambda, p.box) || l < r - 1) throw DomainError(p.str() + " is outside the domain of delta");
  std::vector<int> padded;
  for (int i = 0; i < r; ++i) padded.push_back(p.lambda.part(static_cast<std::size_t>(i)));
  return {delta_distinct(padded), Rectangle{r, l - r + 1}};
}

BoxedPartition delta_boxed_inverse(const BoxedPartition& p) {
  if (!fits_in(p.lambda, p.box)) throw DomainError(p.str() + ": partition does not fit");
  const int r = p.box.rows;
  if (p.box.cols + r - 1 < 0) throw DomainError(p.str() + " has no preimage");
  return {IntegerPartition(delta_inverse(p.lambda, r)), Rectangle{r, p.box.cols + r - 1}};
}

std::vector<BoxedPartition> delta_domain(int n) {
  std::vector<BoxedPartition> out;
  for (int r = 0; r <= n; ++r) {
    const int l = n - r;
    if (l + 1 < r) continue;
    // r-subsets of {0..l}, written decreasingly
    std::vector<int> pick(static_cast<std::size_t>(r));
    std::function<void(int, int)> rec = [&](int idx, int cap) {
      if (idx == r) {
        out.push_back({IntegerPartition(pick), Rectangle{r, l}});
        return;
      }
      for (int x = r - idx - 1; x <= cap; ++x) {
        pick[static_cast<std::size_t>(idx)] = x;
        rec(idx + 1, x - 1);
      }
    };
    rec(0, l);
  }
  return out;
}

std::vector<BoxedPartition> delta_codomain(int n) {
  std::vector<BoxedPartition> out;
  for (int r = 0; r <= n; ++r) {
    const int c = n - 2 * r + 1;
    if (c < 0) continue;
    for (auto& p : partitions_in({r, c})) out.push_back({std::move(p), Rectangle{r, c}});
  }
  return out;
}

namespace {

std::string text(const Word& w) { return w.str(); }
std::string text(const RootedUnimodal& u) { return u.str(); }
std::string text(const MotzkinPath& p) { return p.steps(); }
std::string text(const BoxedPartition& p) { return p.str(); }

template <class T> T parse_as(std::string_view s);
template <> Word parse_as<Word>(std::string_view s) { return Word::parse(s); }
template <> RootedUnimodal parse_as<RootedUnimodal>(std::string_view s) { return RootedUnimodal::parse(s); }
template <> MotzkinPath parse_as<MotzkinPath>(std::string_view s) { return MotzkinPath(std::string(s)); }
template <> BoxedPartition parse_as<BoxedPartition>(std::string_view s) { return BoxedPartition::parse(s); }

struct Transported {
  std::string label;
  std::string source;
  std::string target;
};

template <class D, class C>
struct EntryDef {
  std::string id, domain, codomain, transport;
  int n_min, n_max;
  std::function<std::vector<D>(int)> enumerate_domain;
  std::function<std::vector<C>(int)> enumerate_codomain;
  C (*forward)(const D&);
  D (*inverse)(const C&);
  std::function<std::vector<Transported>(const D&, const C&)> stats;
};

template <class D, class C>
BijectionEntry make_entry(EntryDef<D, C> def) {
  BijectionEntry e;
  e.id = def.id;
  e.domain = def.domain;
  e.codomain = def.codomain;
  e.transport = def.transport;
  e.n_min = def.n_min;
  e.n_max = def.n_max;
  auto forward = def.forward;
  auto inverse = def.inverse;
  e.apply = [forward](std::string_view s) { return text(forward(parse_as<D>(s))); };
  e.apply_inverse = [inverse](std::string_view s) { return text(inverse(parse_as<C>(s))); };
  auto stats = def.stats;
  e.show_stats = [forward, stats](std::string_view s) {
    const D d = parse_as<D>(s);
    const C c = forward(d);
    std::vector<std::string> lines;
    for (const auto& t : stats(d, c)) lines.push_back(t.label + ": " + t.source + " -> " + t.target);
    return lines;
  };
  e.check = [def](int n) -> std::optional<std::string> {
    const auto domain = def.enumerate_domain(n);
    const auto codomain_list = def.enumerate_codomain(n);
    const std::set<C> codomain(codomain_list.begin(), codomain_list.end());
    std::set<C> hit;
    for (const D& d : domain) {
      try {
        const C c = def.forward(d);
        if (!codomain.count(c)) return text(d) + ": image " + text(c) + " is outside the codomain";
        if (!hit.insert(c).second) return text(d) + ": image " + text(c) + " is hit twice";
        const D back = def.inverse(c);
        if (!(back == d)) return text(d) + ": inverse of " + text(c) + " is " + text(back);
        for (const auto& t : def.stats(d, c)) {
          if (t.source != t.target) {
            return text(d) + ": " + t.label + " " + t.source + " != " + t.target;
          }
        }
      } catch (const std::exception& ex) {
        return text(d) + ": " + ex.what();
      }
    }
    if (hit.size() != codomain.size()) {
      for (const C& c : codomain_list) {
        if (!hit.count(c)) return "codomain element " + text(c) + " is never hit";
      }
    }
    return std::nullopt;
  };
  return e;
}

std::function<std::vector<Word>(int)> rgf_class(const char* patterns) {
  return [patterns](int n) { return avoiders(n, pset(patterns)); };
}

std::string num(long x) { return std::to_string(x); }

std::vector<BijectionEntry> build_bijections() {
  std::vector<BijectionEntry> out;

  out.push_back(make_entry(EntryDef<Word, RootedUnimodal>{
      "psi112", "R_n(112)", "A_n", "rs(w_i) = u_i for every i; rs(w) = |u|", 1, 8,
      rgf_class("112"), rooted_unimodal, psi112, psi112_inverse,
      [](const Word& w, const RootedUnimodal& u) {
        return std::vector<Transported>{{"rs(w_i) vs u_i", join(rs_letters(w)), join(u.values)},
                                        {"rs vs |u|", num(stat_total(w, Stat::rs)), num(u.weight())}};
      }}));

  out.push_back(make_entry(EntryDef<RootedUnimodal, BoxedPartition>{
      "phi_unimodal", "A_n", "B_n", "|u| = |lambda|", 1, 8, rooted_unimodal, boxed_partitions,
      phi_unimodal, phi_unimodal_inverse,
      [](const RootedUnimodal& u, const BoxedPartition& p) {
        return std::vector<Transported>{{"|u| vs |lambda|", num(u.weight()), num(p.lambda.weight())}};
      }}));

  out.push_back(make_entry(EntryDef<Word, BoxedPartition>{
      "rho112", "R_n(112)", "B_n", "lb(w) = |lambda|", 1, 8, rgf_class("112"), boxed_partitions,
      rho112, rho112_inverse,
      [](const Word& w, const BoxedPartition& p) {
        return std::vector<Transported>{{"lb vs |lambda|", num(stat_total(w, Stat::lb)), num(p.lambda.weight())}};
      }}));

  out.push_back(make_entry(EntryDef<Word, Word>{
      "eta", "R_n(112)", "R_n(122)", "(lb, ls, rb) -> (lb, rb, ls)", 0, 8, rgf_class("112"),
      rgf_class("122"), eta, eta_inverse,
      [](const Word& w, const Word& v) {
        const auto a = stat_vector(w), b = stat_vector(v);
        return std::vector<Transported>{{"lb vs lb", num(a.lb), num(b.lb)},
                                        {"ls vs rb", num(a.ls), num(b.rb)},
                                        {"rb vs ls", num(a.rb), num(b.ls)}};
      }}));

  out.push_back(make_entry(EntryDef<Word, Word>{
      "xi", "R_n(112)", "R_n(121)", "ls preserved", 0, 8, rgf_class("112"), rgf_class("121"), xi,
      xi_inverse, [](const Word& w, const Word& v) {
        return std::vector<Transported>{{"ls vs ls", num(stat_total(w, Stat::ls)), num(stat_total(v, Stat::ls))}};
      }}));

  out.push_back(make_entry(EntryDef<Word, Word>{
      "f122_123", "R_n(122)", "R_n(123)", "rs preserved", 0, 8, rgf_class("122"), rgf_class("123"),
      f122_123, f122_123_inverse, [](const Word& w, const Word& v) {
        return std::vector<Transported>{{"rs vs rs", num(stat_total(w, Stat::rs)), num(stat_total(v, Stat::rs))}};
      }}));

  out.push_back(make_entry(EntryDef<MotzkinPath, Word>{
      "psi_motzkin", "two-colored Motzkin paths of length n-1", "R_n(1212)", "area(P) = rs(w)", 1, 8,
      [](int n) { return two_colored_paths(n - 1); }, rgf_class("1212"), psi_motzkin,
      psi_motzkin_inverse, [](const MotzkinPath& p, const Word& w) {
        return std::vector<Transported>{{"area vs rs", num(p.area()), num(stat_total(w, Stat::rs))}};
      }}));

  out.push_back(make_entry(EntryDef<Word, MotzkinPath>{
      "phi_motzkin", "R_n(111,1212)", "Motzkin paths of length n", "rs(w_i) = l(s_i) for every i", 0, 8,
      rgf_class("111,1212"), motzkin_paths, phi_motzkin, phi_motzkin_inverse,
      [](const Word& w, const MotzkinPath& p) {
        return std::vector<Transported>{{"rs(w_i) vs l(s_i)", join(rs_letters(w)), join(p.levels())}};
      }}));

  out.push_back(make_entry(EntryDef<Word, Word>{
      "inc", "R_n(1212)", "R_n(1221)", "lb and ls preserved", 0, 8, rgf_class("1212"),
      rgf_class("1221"), inc_restricted, inc_restricted_inverse, [](const Word& w, const Word& v) {
        const auto a = stat_vector(w), b = stat_vector(v);
        return std::vector<Transported>{{"lb vs lb", num(a.lb), num(b.lb)}, {"ls vs ls", num(a.ls), num(b.ls)}};
      }}));

  out.push_back(make_entry(EntryDef<Word, Word>{
      "alpha", "R_n(1221)", "words of R_{n+2}(1221) with properties (i)-(iii)", "none (injection with described image)",
      1, 8, rgf_class("1221"),
      [](int n) {
        std::vector<Word> image;
        for (auto& w : avoiders(n + 2, pset("1221"))) {
          if (in_alpha_image(w)) image.push_back(std::move(w));
        }
        return image;
      },
      alpha, alpha_inverse, [](const Word&, const Word&) { return std::vector<Transported>{}; }}));

  out.push_back(make_entry(EntryDef<MotzkinPath, Word>{
      "beta", "two-colored Motzkin paths of length n-1", "R_n(1221)", "area(R) = lb(w)", 1, 7,
      [](int n) { return two_colored_paths(n - 1); }, rgf_class("1221"), beta, beta_inverse,
      [](const MotzkinPath& p, const Word& w) {
        return std::vector<Transported>{{"area vs lb", num(p.area()), num(stat_total(w, Stat::lb))}};
      }}));

  out.push_back(make_entry(EntryDef<Word, BoxedPartition>{
      "rho_prime", "R_n(111,112)", "C'_n",
      "(lb, ls, rb, rs) = (C(n-m,2)+|mu|, C(m,2)+C(n-m,2)+|mu^c|, C(m,2), 2C(n-m,2)+|mu|)", 1, 8,
      rgf_class("111,112"), rho_prime_codomain, rho_prime, rho_prime_inverse,
      [](const Word& w, const BoxedPartition& p) {
        const long n = static_cast<long>(w.size());
        const long m = p.box.rows + p.box.cols;
        const long mu = p.lambda.weight();
        const long muc = complement(p.lambda, p.box).weight();
        const auto s = stat_vector(w);
        return std::vector<Transported>{
            {"lb", num(s.lb), num(binom(n - m, 2) + mu)},
            {"ls", num(s.ls), num(binom(m, 2) + binom(n - m, 2) + muc)},
            {"rb", num(s.rb), num(binom(m, 2))},
            {"rs", num(s.rs), num(2 * binom(n - m, 2) + mu)}};
      }}));

  out.push_back(make_entry(EntryDef<BoxedPartition, BoxedPartition>{
      "delta", "distinct-part partitions in r x l, r + l = n", "partitions in r x (l-r+1)",
      "|lambda| = |mu| + C(r,2)", 0, 8, delta_domain, delta_codomain, delta_boxed, delta_boxed_inverse,
      [](const BoxedPartition& a, const BoxedPartition& b) {
        return std::vector<Transported>{
            {"|lambda| vs |mu| + C(r,2)", num(a.lambda.weight()), num(b.lambda.weight() + binom(a.box.rows, 2))}};
      }}));

  return out;
}

}  // namespace

const std::vector<BijectionEntry>& bijections() {
  static const std::vector<BijectionEntry> registry = build_bijections();
  return registry;
}

const BijectionEntry& find_bijection(std::string_view id) {
  for (const auto& b : bijections()) {
    if (b.id == id) return b;
  }
  throw DomainError("unknown bijection '" + std::string(id) + "'");
}

}  // namespace rgflab

#include "rgflab/statistics.hpp"

#include <algorithm>
#include <vector>

namespace rgflab {

Stat parse_stat(std::string_view name) {
  if (name == "lb") return Stat::lb;
  if (name == "ls") return Stat::ls;
  if (name == "rb") return Stat::rb;
  if (name == "rs") return Stat::rs;
  throw DomainError("unknown statistic '" + std::string(name) + "'");
}

const char* stat_name(Stat s) {
  switch (s) {
    case Stat::lb: return "lb";
    case Stat::ls: return "ls";
    case Stat::rb: return "rb";
    case Stat::rs: return "rs";
  }
  return "?";
}

int StatVector::get(Stat s) const {
  switch (s) {
    case Stat::lb: return lb;
    case Stat::ls: return ls;
    case Stat::rb: return rb;
    case Stat::rs: return rs;
  }
  return 0;
}

int stat_letter(const Word& w, std::size_t j, Stat which) {
  if (j >= w.size()) throw DomainError("position out of range");
  const bool left = which == Stat::lb || which == Stat::ls;
  const bool bigger = which == Stat::lb || which == Stat::rb;
  std::vector<int> seen;
  const std::size_t from = left ? 0 : j + 1;
  const std::size_t to = left ? j : w.size();
  for (std::size_t i = from; i < to; ++i) {
    if (bigger ? w[i] > w[j] : w[i] < w[j]) seen.push_back(w[i]);
  }
  std::sort(seen.begin(), seen.end());
  return static_cast<int>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

int stat_total(const Word& w, Stat which) {
  int total = 0;
  for (std::size_t j = 0; j < w.size(); ++j) total += stat_letter(w, j, which);
  return total;
}

StatVector stat_vector(const Word& w) {
  // One pass per side: with the set of values present on that side, the
  // distinct counts above and below w_j are rank queries.
  StatVector v;
  const std::size_t n = w.size();
  if (n == 0) return v;
  const int top = w.max();
  std::vector<int> present(static_cast<std::size_t>(top) + 2, 0);
  auto count_below = [&](int x) {
    int c = 0;
    for (int y = 1; y < x; ++y) c += present[static_cast<std::size_t>(y)] > 0;
    return c;
  };
  auto count_above = [&](int x) {
    int c = 0;
    for (int y = x + 1; y <= top; ++y) c += present[static_cast<std::size_t>(y)] > 0;
    return c;
  };
  for (std::size_t j = 0; j < n; ++j) {
    v.lb += count_above(w[j]);
    v.ls += count_below(w[j]);
    ++present[static_cast<std::size_t>(w[j])];
  }
  std::fill(present.begin(), present.end(), 0);
  for (std::size_t j = n; j-- > 0;) {
    v.rb += count_above(w[j]);
    v.rs += count_below(w[j]);
    ++present[static_cast<std::size_t>(w[j])];
  }
  return v;
}

MultiPoly stat_monomial(const StatVector& v) {
  return MultiPoly::monomial({v.lb, v.ls, v.rb, v.rs});
}

MultiPoly gen_poly(int n, const PatternSet& V, const AvoidOptions& opts, WalkCounters* counters) {
  auto parts = walk_avoiders<MultiPoly>(
      n, V, opts,
      [](MultiPoly& acc, const Word& w) {
        const StatVector v = stat_vector(w);
        acc.add_term({v.lb, v.ls, v.rb, v.rs}, 1);
      },
      counters);
  MultiPoly total;
  for (const auto& p : parts) total += p;
  return total;
}

MultiPoly specialize(const MultiPoly& F, Stat which) {
  const int slot = static_cast<int>(which);
  MultiPoly out;
  for (const auto& [e, c] : F.terms()) out.add_term({e[static_cast<std::size_t>(slot)], 0, 0, 0}, c);
  return out;
}

}  // namespace rgflab

#include "rgflab/patterns.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <set>
#include <sstream>

namespace rgflab {

unsigned default_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

namespace {

// Backtracking occurrence search. Pattern letter c is mapped to val[c]; the
// RGF shape of v means new letters arrive as 1, 2, 3, ... so each one only has
// to exceed the previous letter's value. Repeated letters take the leftmost
// matching position, which never loses an occurrence.
class Matcher {
 public:
  Matcher(const std::vector<int>& w, std::size_t wn, const std::vector<int>& v, std::size_t vn,
          int k)
      : w_(w), wn_(wn), v_(v), vn_(vn), val_(k + 1, 0), lo_(k + 1, 1), hi_(k + 1, INT_MAX),
        pos_(vn, 0) {}

  void bound(int letter, int lo, int hi) {
    lo_[letter] = std::max(lo_[letter], lo);
    hi_[letter] = std::min(hi_[letter], hi);
  }

  bool run() { return step(0, 0, 0); }
  const std::vector<std::size_t>& positions() const { return pos_; }

 private:
  bool step(std::size_t pi, std::size_t start, int assigned) {
    if (pi == vn_) return true;
    if (wn_ - start < vn_ - pi) return false;
    const int c = v_[pi];
    if (c <= assigned) {
      const int x = val_[c];
      for (std::size_t j = start; j < wn_; ++j) {
        if (w_[j] == x) {
          pos_[pi] = j;
          return step(pi + 1, j + 1, assigned);
        }
      }
      return false;
    }
    const int low = std::max(lo_[c], c > 1 ? val_[c - 1] + 1 : 1);
    const int high = hi_[c];
    for (std::size_t j = start; j < wn_; ++j) {
      const int x = w_[j];
      if (x < low || x > high) continue;
      if (std::find(w_.begin() + static_cast<std::ptrdiff_t>(start),
                    w_.begin() + static_cast<std::ptrdiff_t>(j), x) !=
          w_.begin() + static_cast<std::ptrdiff_t>(j)) {
        continue;  // same value already tried further left
      }
      val_[c] = x;
      pos_[pi] = j;
      if (step(pi + 1, j + 1, c)) return true;
    }
    return false;
  }

  const std::vector<int>& w_;
  std::size_t wn_;
  const std::vector<int>& v_;
  std::size_t vn_;
  std::vector<int> val_, lo_, hi_;
  std::vector<std::size_t> pos_;
};

std::vector<int> letter_counts(const Word& w) {
  std::vector<int> counts(static_cast<std::size_t>(w.max()) + 1, 0);
  for (int x : w) ++counts[static_cast<std::size_t>(x)];
  return counts;
}

std::size_t initial_run(const Word& w) {
  std::size_t m = 0;
  while (m < w.size() && w[m] == static_cast<int>(m) + 1) ++m;
  return m;
}

bool weakly_increasing(const Word& w) { return std::is_sorted(w.begin(), w.end()); }

bool at_most_twice(const Word& w) {
  for (int c : letter_counts(w)) {
    if (c > 2) return false;
  }
  return true;
}

// w = 12...m followed by a tail that is weakly (strict = false) or strictly
// decreasing.
bool run_then_decreasing(const Word& w, bool strict) {
  const std::size_t m = initial_run(w);
  for (std::size_t i = m + 1; i < w.size(); ++i) {
    if (strict ? w[i] >= w[i - 1] : w[i] > w[i - 1]) return false;
  }
  return true;
}

// Third condition of the 1212 characterization.
bool no_xyxy_condition(const Word& w) {
  const std::size_t n = w.size();
  std::vector<int> prefix_max(n, 0);
  int mx = 0;
  for (std::size_t i = 0; i < n; ++i) prefix_max[i] = mx = std::max(mx, w[i]);
  std::vector<char> seen(static_cast<std::size_t>(w.max()) + 1, 0);
  for (std::size_t ip = 0; ip < n; ++ip) {
    const bool repeated = seen[static_cast<std::size_t>(w[ip])];
    seen[static_cast<std::size_t>(w[ip])] = 1;
    if (!repeated) continue;
    for (std::size_t jp = ip + 1; jp < n; ++jp) {
      if (w[jp] > w[ip] && w[jp] <= prefix_max[ip]) return false;
    }
  }
  return true;
}

bool repeated_letters_weakly_increasing(const Word& w) {
  std::vector<char> seen(static_cast<std::size_t>(w.max()) + 1, 0);
  int last = 0;
  for (int x : w) {
    if (seen[static_cast<std::size_t>(x)]) {
      if (x < last) return false;
      last = x;
    }
    seen[static_cast<std::size_t>(x)] = 1;
  }
  return true;
}

Word run_word(int m) {
  std::vector<int> out;
  for (int i = 1; i <= m; ++i) out.push_back(i);
  return Word(std::move(out));
}

Word concat(std::initializer_list<std::vector<int>> parts) {
  std::vector<int> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return Word(std::move(out));
}

std::vector<int> rep(int letter, int times) {
  return std::vector<int>(static_cast<std::size_t>(std::max(times, 0)), letter);
}

std::vector<int> range(int from, int to) {
  std::vector<int> out;
  for (int i = from; i <= to; ++i) out.push_back(i);
  return out;
}

using Family = std::function<std::vector<Word>(int)>;

// Membership in an explicitly listed family.
std::function<bool(const Word&)> member_of(Family family) {
  return [family = std::move(family)](const Word& w) {
    const int n = static_cast<int>(w.size());
    if (n == 0) return true;
    const auto list = family(n);
    return std::find(list.begin(), list.end(), w) != list.end();
  };
}

// Table entries only describe n >= 3; below that nothing of length 3 fits.
std::function<bool(const Word&)> table_entry(Family family) {
  return [family = std::move(family)](const Word& w) {
    const int n = static_cast<int>(w.size());
    if (n < 3) return true;
    const auto list = family(n);
    return std::find(list.begin(), list.end(), w) != list.end();
  };
}

std::vector<Characterization> build_characterizations() {
  std::vector<Characterization> out;
  auto add = [&](std::string id, std::string patterns, std::function<bool(const Word&)> f) {
    out.push_back({std::move(id), PatternSet::parse(patterns), std::move(f)});
  };

  add("R(111)", "111", at_most_twice);
  add("R(112)", "112", [](const Word& w) { return run_then_decreasing(w, false); });
  add("R(121)", "121", weakly_increasing);
  add("R(122)", "122", [](const Word& w) {
    const auto counts = letter_counts(w);
    for (std::size_t j = 2; j < counts.size(); ++j) {
      if (counts[j] > 1) return false;
    }
    return true;
  });
  add("R(123)", "123", [](const Word& w) { return w.max() <= 2; });

  add("R(111,112)", "111,112", [](const Word& w) { return run_then_decreasing(w, true); });
  add("R(111,121)", "111,121",
      [](const Word& w) { return weakly_increasing(w) && at_most_twice(w); });
  add("R(111,122)", "111,122", member_of([](int n) {
        std::vector<Word> out{run_word(n)};
        for (int i = 1; i < n; ++i) out.push_back(concat({range(1, i), {1}, range(i + 1, n - 1)}));
        return out;
      }));
  add("R(112,121)", "112,121", member_of([](int n) {
        std::vector<Word> out;
        for (int m = 1; m <= n; ++m) out.push_back(concat({range(1, m), rep(m, n - m)}));
        return out;
      }));
  add("R(112,122)", "112,122", member_of([](int n) {
        std::vector<Word> out;
        for (int m = 1; m <= n; ++m) out.push_back(concat({range(1, m), rep(1, n - m)}));
        return out;
      }));
  add("R(112,123)", "112,123", member_of([](int n) {
        std::vector<Word> out;
        for (int i = 0; i < n; ++i) out.push_back(concat({{1}, rep(2, i), rep(1, n - i - 1)}));
        return out;
      }));
  add("R(121,122)", "121,122", member_of([](int n) {
        std::vector<Word> out;
        for (int i = 1; i <= n; ++i) out.push_back(concat({rep(1, i), range(2, n - i + 1)}));
        return out;
      }));
  add("R(121,123)", "121,123", member_of([](int n) {
        std::vector<Word> out;
        for (int i = 1; i <= n; ++i) out.push_back(concat({rep(1, i), rep(2, n - i)}));
        return out;
      }));
  add("R(122,123)", "122,123", member_of([](int n) {
        std::vector<Word> out{Word(rep(1, n))};
        for (int i = 1; i < n; ++i) out.push_back(concat({rep(1, i), {2}, rep(1, n - i - 1)}));
        return out;
      }));

  add("TABLE(111,112,121)", "111,112,121", table_entry([](int n) {
        return std::vector<Word>{run_word(n), concat({range(1, n - 2), rep(n - 1, 2)})};
      }));
  add("TABLE(111,112,122)", "111,112,122", table_entry([](int n) {
        return std::vector<Word>{run_word(n), concat({range(1, n - 1), {1}})};
      }));
  add("TABLE(111,121,122)", "111,121,122", table_entry([](int n) {
        return std::vector<Word>{run_word(n), concat({{1, 1}, range(2, n - 1)})};
      }));
  add("TABLE(112,121,122)", "112,121,122", table_entry([](int n) {
        return std::vector<Word>{run_word(n), Word(rep(1, n))};
      }));
  add("TABLE(112,121,123)", "112,121,123", table_entry([](int n) {
        return std::vector<Word>{Word(rep(1, n)), concat({{1}, rep(2, n - 1)})};
      }));
  add("TABLE(112,122,123)", "112,122,123", table_entry([](int n) {
        return std::vector<Word>{Word(rep(1, n)), concat({{1, 2}, rep(1, n - 2)})};
      }));
  add("TABLE(121,122,123)", "121,122,123", table_entry([](int n) {
        return std::vector<Word>{Word(rep(1, n)), concat({rep(1, n - 1), {2}})};
      }));
  add("TABLE(111,112,121,122)", "111,112,121,122",
      table_entry([](int n) { return std::vector<Word>{run_word(n)}; }));
  add("TABLE(112,121,122,123)", "112,121,122,123",
      table_entry([](int n) { return std::vector<Word>{Word(rep(1, n))}; }));

  add("R(1212)", "1212", no_xyxy_condition);
  add("R(111,1212)", "111,1212",
      [](const Word& w) { return no_xyxy_condition(w) && at_most_twice(w); });
  add("R(1221)", "1221", repeated_letters_weakly_increasing);
  add("R(123,1212)", "123,1212", member_of([](int n) {
        std::vector<Word> out;
        for (int l = 1; l <= n; ++l) {
          for (int i = 0; l + i <= n; ++i) out.push_back(concat({rep(1, l), rep(2, i), rep(1, n - i - l)}));
        }
        return out;
      }));
  add("R(112,1221)", "112,1221", member_of([](int n) {
        std::vector<Word> out;
        for (int m = 1; m <= n; ++m) {
          for (int k = 1; k <= m; ++k) out.push_back(concat({range(1, m), rep(k, n - m)}));
        }
        return out;
      }));
  add("R(123,1221)", "123,1221", member_of([](int n) {
        std::vector<Word> out{Word(rep(1, n))};
        for (int i = 0; i <= n - 2; ++i) {
          for (int j = 0; i + j <= n - 2; ++j) {
            const int k = n - 2 - i - j;
            out.push_back(concat({{1}, rep(1, i), {2}, rep(1, j), rep(2, k)}));
          }
        }
        return out;
      }));
  return out;
}

}  // namespace

PatternSet::PatternSet(std::vector<Word> patterns) : patterns_(std::move(patterns)) {
  for (const auto& p : patterns_) {
    if (p.empty()) throw DomainError("patterns must be nonempty");
    require_rgf(p, "pattern");
  }
  std::sort(patterns_.begin(), patterns_.end(), [](const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  patterns_.erase(std::unique(patterns_.begin(), patterns_.end()), patterns_.end());
}

PatternSet PatternSet::parse(std::string_view text) {
  std::vector<Word> out;
  std::size_t start = 0;
  while (start <= text.size() && !text.empty()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    out.push_back(Word::parse(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return PatternSet(std::move(out));
}

std::vector<Word> PatternSet::redundant() const {
  std::vector<Word> out;
  for (std::size_t i = 0; i < patterns_.size(); ++i) {
    for (std::size_t j = 0; j < patterns_.size(); ++j) {
      if (i != j && contains(patterns_[i], patterns_[j])) {
        out.push_back(patterns_[i]);
        break;
      }
    }
  }
  return out;
}

std::string PatternSet::str() const {
  std::string out;
  for (std::size_t i = 0; i < patterns_.size(); ++i) {
    if (i > 0) out += ',';
    out += patterns_[i].str();
  }
  return out;
}

bool contains(const Word& w, const Word& v, std::vector<std::size_t>* witness) {
  if (v.empty()) {
    if (witness) witness->clear();
    return true;
  }
  const Word sv = standardize(v);
  Matcher m(w.letters(), w.size(), sv.letters(), sv.size(), sv.max());
  if (!m.run()) return false;
  if (witness) *witness = m.positions();
  return true;
}

bool avoids(const Word& w, const PatternSet& V) {
  for (const auto& v : V.patterns()) {
    if (contains(w, v)) return false;
  }
  return true;
}

bool contains_at_end(const Word& w, const Word& v) {
  const std::size_t n = w.size();
  const std::size_t m = v.size();
  if (m == 0) return true;
  if (m > n) return false;
  const int anchor = w[n - 1];
  const int last = v[m - 1];
  const int k = v.max();
  const bool last_repeats = std::find(v.begin(), v.end() - 1, last) != v.end() - 1;
  Matcher matcher(w.letters(), n - 1, v.letters(), m - 1, k);
  if (last_repeats) {
    for (int d = 1; d < last; ++d) matcher.bound(d, 1, anchor - 1);
    matcher.bound(last, anchor, anchor);
    for (int d = last + 1; d <= k; ++d) matcher.bound(d, anchor + 1, INT_MAX);
  } else {
    for (int d = 1; d < last; ++d) matcher.bound(d, 1, anchor - 1);
  }
  return matcher.run();
}

bool extension_avoids(const Word& prefix, const PatternSet& V) {
  for (const auto& v : V.patterns()) {
    if (contains_at_end(prefix, v)) return false;
  }
  return true;
}

bool partition_contains(const SetPartition& sigma, const SetPartition& pi) {
  const int n = sigma.size();
  const int k = pi.size();
  if (k > n) return false;
  std::vector<int> block_of(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t b = 0; b < sigma.blocks().size(); ++b) {
    for (int x : sigma.blocks()[b]) block_of[static_cast<std::size_t>(x)] = static_cast<int>(b);
  }
  // walk the k-subsets T of [n] in lexicographic order
  std::vector<int> T(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) T[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    std::map<int, std::vector<int>> restricted;
    for (int rank = 0; rank < k; ++rank) {
      restricted[block_of[static_cast<std::size_t>(T[static_cast<std::size_t>(rank)])]].push_back(rank + 1);
    }
    std::vector<std::vector<int>> blocks;
    for (auto& [b, elems] : restricted) blocks.push_back(std::move(elems));
    if (SetPartition(std::move(blocks)) == pi) return true;
    int i = k - 1;
    while (i >= 0 && T[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) return false;
    ++T[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) T[static_cast<std::size_t>(j)] = T[static_cast<std::size_t>(j - 1)] + 1;
  }
}

std::vector<Word> avoiders(int n, const PatternSet& V, const AvoidOptions& opts,
                           WalkCounters* counters) {
  auto parts = walk_avoiders<std::vector<Word>>(
      n, V, opts, [](std::vector<Word>& acc, const Word& w) { acc.push_back(w); }, counters);
  std::vector<Word> out;
  for (auto& p : parts) {
    out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  }
  return out;
}

void for_each_avoider(int n, const PatternSet& V, const WordVisitor& visit,
                      const AvoidOptions& opts, WalkCounters* counters) {
  if (opts.threads <= 1) {
    struct None {};
    walk_avoiders<None>(n, V, opts, [&](None&, const Word& w) { visit(w); }, counters);
    return;
  }
  for (const auto& w : avoiders(n, V, opts, counters)) visit(w);
}

std::uint64_t count_avoiders(int n, const PatternSet& V, const AvoidOptions& opts,
                             WalkCounters* counters) {
  auto parts = walk_avoiders<std::uint64_t>(
      n, V, opts, [](std::uint64_t& acc, const Word&) { ++acc; }, counters);
  std::uint64_t total = 0;
  for (auto c : parts) total += c;
  return total;
}

const std::vector<Characterization>& characterizations() {
  static const std::vector<Characterization> registry = build_characterizations();
  return registry;
}

bool characterize(std::string_view class_id, const Word& w) {
  for (const auto& c : characterizations()) {
    if (c.id == class_id) {
      require_rgf(w);
      return c.test(w);
    }
  }
  throw DomainError("unknown characterization '" + std::string(class_id) + "'");
}

ArcDiagram arc_diagram(const SetPartition& sigma) {
  ArcDiagram d{sigma.size(), {}};
  for (const auto& block : sigma.blocks()) {
    for (std::size_t i = 1; i < block.size(); ++i) d.arcs.push_back({block[i - 1], block[i]});
  }
  std::sort(d.arcs.begin(), d.arcs.end());
  return d;
}

ArcDiagram left_arc_diagram(const SetPartition& sigma) {
  ArcDiagram d{sigma.size(), {}};
  for (const auto& block : sigma.blocks()) {
    for (std::size_t i = 1; i < block.size(); ++i) d.arcs.push_back({block.front(), block[i]});
  }
  std::sort(d.arcs.begin(), d.arcs.end());
  return d;
}

bool has_nesting(const ArcDiagram& d) {
  for (const auto& outer : d.arcs) {
    for (const auto& inner : d.arcs) {
      if (outer.a < inner.a && inner.b < outer.b) return true;
    }
  }
  return false;
}

bool has_crossing(const ArcDiagram& d) {
  for (const auto& p : d.arcs) {
    for (const auto& q : d.arcs) {
      if (p.a < q.a && q.a < p.b && p.b < q.b) return true;
    }
  }
  return false;
}

}  // namespace rgflab

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rgflab/parallel.hpp"
#include "rgflab/words.hpp"

namespace rgflab {

// "Subword" means subsequence throughout: w contains v when some, not
// necessarily contiguous, subsequence of w standardizes to v.

// Deduplicated, sorted set of RGF patterns. Patterns that contain another
// member are kept and reported by redundant().
class PatternSet {
 public:
  PatternSet() = default;
  // Throws DomainError if a pattern is empty or not an RGF.
  explicit PatternSet(std::vector<Word> patterns);

  // Comma-separated word literals: "111,1212". The empty string is V = {}.
  static PatternSet parse(std::string_view text);

  const std::vector<Word>& patterns() const { return patterns_; }
  bool empty() const { return patterns_.empty(); }
  std::size_t size() const { return patterns_.size(); }

  // Members that contain some other member.
  std::vector<Word> redundant() const;

  std::string str() const;

  friend bool operator==(const PatternSet&, const PatternSet&) = default;

 private:
  std::vector<Word> patterns_;
};

// True iff w contains v. When `witness` is given and the answer is true it
// receives the 0-based positions of one occurrence.
bool contains(const Word& w, const Word& v, std::vector<std::size_t>* witness = nullptr);

bool avoids(const Word& w, const PatternSet& V);

// True iff w has an occurrence of v using its last position. If w minus its
// last letter avoids v, this decides whether w does.
bool contains_at_end(const Word& w, const Word& v);

// Some restriction of sigma to a subset of [n] standardizes to pi.
// Exhaustive over subsets; meant for small inputs.
bool partition_contains(const SetPartition& sigma, const SetPartition& pi);

struct AvoidOptions {
  EnumerationLimits limits{};
  unsigned threads = 1;
};

// Pruning predicate for walk_rgf_tree: `prefix` minus its last letter is
// known to avoid V.
bool extension_avoids(const Word& prefix, const PatternSet& V);

// Walks R_n(V) with subtree pruning. The generation tree is cut at a fixed
// depth into lexicographically ordered subtrees; subtree i is walked into
// states[i] (default-constructed State) by visit(state, word), possibly on
// several threads. The caller reduces the returned states in order.
template <class State, class Visit>
std::vector<State> walk_avoiders(int n, const PatternSet& V, const AvoidOptions& opts,
                                 Visit&& visit, WalkCounters* counters = nullptr) {
  check_length(n, opts.limits);
  auto accept = [&V](const Word& w) { return extension_avoids(w, V); };
  if (n == 0) {
    std::vector<State> out(1);
    if (counters) ++counters->nodes_visited;
    visit(out[0], Word{});
    return out;
  }
  int depth = 1;
  if (opts.threads > 1) {
    // aim for several subtrees per worker
    while (depth < n && depth < 8 && rgf_prefixes(n, depth).size() < 8u * opts.threads) ++depth;
  }
  std::vector<Word> roots;
  WalkCounters top;
  {
    Word start{1};
    ++top.candidates;
    if (accept(start)) {
      walk_rgf_tree(start, static_cast<std::size_t>(depth), accept,
                    [&](const Word& w) { roots.push_back(w); }, &top);
      // the roots themselves are counted again below
      top.nodes_visited -= roots.size();
    }
  }
  std::vector<State> states(roots.size());
  std::vector<WalkCounters> local(roots.size());
  parallel_for(roots.size(), opts.threads, [&](std::size_t i) {
    Word prefix = roots[i];
    walk_rgf_tree(prefix, static_cast<std::size_t>(n), accept,
                  [&](const Word& w) { visit(states[i], w); }, &local[i]);
  });
  if (counters) {
    counters->nodes_visited += top.nodes_visited;
    counters->candidates += top.candidates;
    for (const auto& c : local) {
      counters->nodes_visited += c.nodes_visited;
      counters->candidates += c.candidates;
    }
  }
  return states;
}

// R_n(V) in lexicographic order. V = {} gives R_n.
std::vector<Word> avoiders(int n, const PatternSet& V, const AvoidOptions& opts = {},
                           WalkCounters* counters = nullptr);

void for_each_avoider(int n, const PatternSet& V, const WordVisitor& visit,
                      const AvoidOptions& opts = {}, WalkCounters* counters = nullptr);

std::uint64_t count_avoiders(int n, const PatternSet& V, const AvoidOptions& opts = {},
                             WalkCounters* counters = nullptr);

// Structural descriptions of avoidance classes, each paired with the pattern
// set it describes.
struct Characterization {
  std::string id;  // "R(112)", "R(111,1212)", "TABLE(111,112,121)", ...
  PatternSet patterns;
  std::function<bool(const Word&)> test;
};

const std::vector<Characterization>& characterizations();

// Throws DomainError for an unknown id or a non-RGF word.
bool characterize(std::string_view class_id, const Word& w);

struct Arc {
  int a;
  int b;
  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Arcs (a, b), a < b, over [n], kept sorted.
struct ArcDiagram {
  int n = 0;
  std::vector<Arc> arcs;
};

// Consecutive elements of each block.
ArcDiagram arc_diagram(const SetPartition& sigma);
// (min B, b) for every other b in B.
ArcDiagram left_arc_diagram(const SetPartition& sigma);

// a < x < y < b
bool has_nesting(const ArcDiagram& d);
// a < x < b < y
bool has_crossing(const ArcDiagram& d);

}  // namespace rgflab

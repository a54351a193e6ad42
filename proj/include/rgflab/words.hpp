#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "rgflab/errors.hpp"

namespace rgflab {

inline constexpr int kDefaultMaxN = 15;

// Ceiling on the length of exhaustively generated words. Bell(15) is about
// 1.38e9, so anything at or above the default is an explicit opt-in.
struct EnumerationLimits {
  int max_n = kDefaultMaxN;

  // Reads RGFLAB_MAX_N when set and valid, otherwise the built-in default.
  static EnumerationLimits from_environment();
};

// Throws ResourceLimitError when n exceeds the ceiling, DomainError when n < 0.
void check_length(int n, const EnumerationLimits& limits);

// A finite sequence of positive integers. Positions are 0-based in the API;
// the text form is a digit string when every letter is at most 9 and a
// dot-separated list ("1.2.3.10") otherwise.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<int> letters);
  explicit Word(std::vector<int> letters);

  static Word parse(std::string_view text);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<int>& letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  // Largest letter, 0 for the empty word.
  int max() const;

  void push_back(int letter);
  void pop_back() { letters_.pop_back(); }

  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<int> letters_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

// w_1 = 1 and every later letter is at most one more than the running maximum.
// The empty word is an RGF.
bool is_rgf(const Word& w);

// Throws DomainError naming `what` unless w is an RGF.
void require_rgf(const Word& w, std::string_view what = "word");

// Order-isomorphic relabelling onto 1..k.
Word standardize(const Word& w);

// 0-based positions i with w_i larger than every earlier letter. For an RGF
// these are exactly the first occurrences of each value.
std::vector<std::size_t> left_to_right_maxima(const Word& w);

// Set partition of [n] in standard form: each block ascending, blocks ordered
// by their minima.
class SetPartition {
 public:
  SetPartition() = default;
  // Normalizes order; throws DomainError unless the blocks partition [n].
  explicit SetPartition(std::vector<std::vector<int>> blocks);

  // "145/2/3"; elements may be comma separated ("1,10/2,3,4,5,6,7,8,9").
  static SetPartition parse(std::string_view text);

  int size() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  std::string str() const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
};

std::ostream& operator<<(std::ostream& os, const SetPartition& p);

// w(sigma): w_i = j iff i lies in the j-th block.
Word partition_to_rgf(const SetPartition& sigma);

// Inverse of partition_to_rgf; throws DomainError for non-RGF input.
SetPartition rgf_to_partition(const Word& w);

// Counters for a walk of the generation tree.
struct WalkCounters {
  std::uint64_t nodes_visited = 0;  // prefixes entered (accepted)
  std::uint64_t candidates = 0;     // extensions proposed, accepted or not
};

// Depth-first walk of the RGF generation tree under `prefix` (itself an RGF),
// extending w_{i+1} over 1..1+max in increasing order so leaves arrive in
// lexicographic order. `accept(word)` sees each freshly extended prefix and may
// prune it; `visit(word)` receives every accepted word of length n.
template <class Accept, class Visit>
void walk_rgf_tree(Word& prefix, std::size_t n, Accept&& accept, Visit&& visit,
                   WalkCounters* counters = nullptr) {
  if (counters) ++counters->nodes_visited;
  if (prefix.size() == n) {
    visit(static_cast<const Word&>(prefix));
    return;
  }
  const int top = prefix.max() + 1;
  for (int letter = 1; letter <= top; ++letter) {
    prefix.push_back(letter);
    if (counters) ++counters->candidates;
    if (accept(static_cast<const Word&>(prefix))) {
      walk_rgf_tree(prefix, n, accept, visit, counters);
    }
    prefix.pop_back();
  }
}

using WordVisitor = std::function<void(const Word&)>;

// Streams R_n in lexicographic order.
void for_each_rgf(int n, const WordVisitor& visit,
                  const EnumerationLimits& limits = {});

std::vector<Word> enumerate_rgfs(int n, const EnumerationLimits& limits = {});

// All RGFs of length min(depth, n) in lexicographic order; the subtrees below
// them partition R_n and can be walked independently.
std::vector<Word> rgf_prefixes(int n, int depth);

}  // namespace rgflab

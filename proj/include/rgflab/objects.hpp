#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "rgflab/errors.hpp"

namespace rgflab {

// Weakly decreasing positive parts; zero parts are stripped on construction.
class IntegerPartition {
 public:
  IntegerPartition() = default;
  // Throws DomainError on negative or increasing parts.
  explicit IntegerPartition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int weight() const;
  // i-th part (0-based), 0 past the end.
  int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  std::string str() const;  // "(5,5,4,3,3)", "()" for the empty partition

  friend bool operator==(const IntegerPartition&, const IntegerPartition&) = default;
  friend auto operator<=>(const IntegerPartition&, const IntegerPartition&) = default;

 private:
  std::vector<int> parts_;
};

struct Rectangle {
  int rows = 0;
  int cols = 0;
  std::string str() const;  // "6x5"
  friend bool operator==(const Rectangle&, const Rectangle&) = default;
  friend auto operator<=>(const Rectangle&, const Rectangle&) = default;
};

bool fits_in(const IntegerPartition& lambda, const Rectangle& beta);
// Requires fits_in. lambda^c_i = cols - lambda_{rows+1-i}.
IntegerPartition complement(const IntegerPartition& lambda, const Rectangle& beta);

// Every lambda inside beta once, in lexicographic order of the part vector
// padded to `rows` entries.
void for_each_partition_in(const Rectangle& beta,
                           const std::function<void(const IntegerPartition&)>& visit);
std::vector<IntegerPartition> partitions_in(const Rectangle& beta);

// (l_1, ..., l_r) with distinct parts, the last possibly zero, goes to
// (l_1 - (r-1), ..., l_r - 0).
IntegerPartition delta_distinct(const std::vector<int>& distinct_parts);
// Inverse given the number of parts r.
std::vector<int> delta_inverse(const IntegerPartition& mu, int r);

// Unimodal u_1..u_n >= 0 with u_1 = u_n = 0, unit steps, and a root at a
// maximum. The root is 0-based here.
struct RootedUnimodal {
  std::vector<int> values;
  std::size_t root = 0;

  bool valid() const;
  int weight() const;
  // Root in brackets: "0123[3]32110"; letters above 9 are dot-separated.
  std::string str() const;
  static RootedUnimodal parse(std::string_view text);

  friend bool operator==(const RootedUnimodal&, const RootedUnimodal&) = default;
  friend auto operator<=>(const RootedUnimodal&, const RootedUnimodal&) = default;
};

// A_n, n >= 1, ordered by values then root.
std::vector<RootedUnimodal> rooted_unimodal(int n);

// Motzkin path over U, D and horizontal steps. Plain paths use H; two-colored
// paths use a and b. Steps are 0-based in the API.
class MotzkinPath {
 public:
  MotzkinPath() = default;
  // Throws DomainError on an unknown step, a dip below the axis, a nonzero end
  // height, or H mixed with a/b.
  explicit MotzkinPath(std::string steps);

  const std::string& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  char operator[](std::size_t i) const { return steps_[i]; }
  bool two_colored() const;

  // Lowest y-coordinate of step i.
  int level(std::size_t i) const;
  std::vector<int> levels() const;
  // l(P): sum of step levels.
  int path_level() const;
  // Area between the path and the axis, half cells under diagonal steps
  // included.
  int area() const;
  // pairing()[i] is the index of the U paired with the D at i; -1 elsewhere.
  std::vector<int> pairing() const;
  // 1 + number of U or b steps strictly between the D at i and its U.
  int A_stat(std::size_t i) const;

  friend bool operator==(const MotzkinPath&, const MotzkinPath&) = default;
  friend auto operator<=>(const MotzkinPath&, const MotzkinPath&) = default;

 private:
  std::string steps_;
};

// Plain Motzkin paths of length n over D, H, U, in lexicographic order.
std::vector<MotzkinPath> motzkin_paths(int n);
// Two-colored paths of length n over D, U, a, b, in lexicographic order.
std::vector<MotzkinPath> two_colored_paths(int n);

}  // namespace rgflab

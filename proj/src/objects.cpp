#include "rgflab/objects.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>

namespace rgflab {

IntegerPartition::IntegerPartition(std::vector<int> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw DomainError("negative part");
    if (i > 0 && parts[i] > parts[i - 1]) throw DomainError("parts must be weakly decreasing");
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  parts_ = std::move(parts);
}

int IntegerPartition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string IntegerPartition::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

std::string Rectangle::str() const { return std::to_string(rows) + "x" + std::to_string(cols); }

bool fits_in(const IntegerPartition& lambda, const Rectangle& beta) {
  return static_cast<int>(lambda.length()) <= beta.rows && lambda.part(0) <= beta.cols;
}

IntegerPartition complement(const IntegerPartition& lambda, const Rectangle& beta) {
  if (!fits_in(lambda, beta)) {
    throw DomainError(lambda.str() + " does not fit in " + beta.str());
  }
  std::vector<int> out;
  for (int i = 0; i < beta.rows; ++i) {
    out.push_back(beta.cols - lambda.part(static_cast<std::size_t>(beta.rows - 1 - i)));
  }
  return IntegerPartition(std::move(out));
}

namespace {

void partitions_rec(std::vector<int>& parts, int rows, int cap,
                    const std::function<void(const IntegerPartition&)>& visit) {
  if (static_cast<int>(parts.size()) == rows) {
    visit(IntegerPartition(parts));
    return;
  }
  for (int x = 0; x <= cap; ++x) {
    parts.push_back(x);
    partitions_rec(parts, rows, x, visit);
    parts.pop_back();
  }
}

}  // namespace

void for_each_partition_in(const Rectangle& beta,
                           const std::function<void(const IntegerPartition&)>& visit) {
  if (beta.rows < 0 || beta.cols < 0) throw DomainError("negative rectangle");
  std::vector<int> parts;
  // padded vectors with a leading part x: smaller x first
  partitions_rec(parts, beta.rows, beta.cols, visit);
}

std::vector<IntegerPartition> partitions_in(const Rectangle& beta) {
  std::vector<IntegerPartition> out;
  for_each_partition_in(beta, [&](const IntegerPartition& p) { out.push_back(p); });
  return out;
}

IntegerPartition delta_distinct(const std::vector<int>& parts) {
  const int r = static_cast<int>(parts.size());
  std::vector<int> out;
  for (int i = 0; i < r; ++i) {
    if (i > 0 && parts[static_cast<std::size_t>(i)] >= parts[static_cast<std::size_t>(i - 1)]) {
      throw DomainError("parts must be strictly decreasing");
    }
    if (parts[static_cast<std::size_t>(i)] < 0) throw DomainError("negative part");
    out.push_back(parts[static_cast<std::size_t>(i)] - (r - 1 - i));
  }
  return IntegerPartition(std::move(out));
}

std::vector<int> delta_inverse(const IntegerPartition& mu, int r) {
  if (static_cast<int>(mu.length()) > r) throw DomainError("too many parts for r");
  std::vector<int> out;
  for (int i = 0; i < r; ++i) out.push_back(mu.part(static_cast<std::size_t>(i)) + (r - 1 - i));
  return out;
}

bool RootedUnimodal::valid() const {
  const std::size_t n = values.size();
  if (n == 0 || root >= n) return false;
  if (values.front() != 0 || values.back() != 0) return false;
  const int mx = *std::max_element(values.begin(), values.end());
  if (values[root] != mx) return false;
  std::size_t i = 0;
  while (i + 1 < n && values[i] <= values[i + 1]) ++i;
  while (i + 1 < n && values[i] >= values[i + 1]) ++i;
  if (i + 1 != n) return false;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    if (values[j] < 0 || std::abs(values[j] - values[j + 1]) > 1) return false;
  }
  return true;
}

int RootedUnimodal::weight() const { return std::accumulate(values.begin(), values.end(), 0); }

std::string RootedUnimodal::str() const {
  const bool digits = values.empty() || *std::max_element(values.begin(), values.end()) <= 9;
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!digits && i > 0) out += '.';
    if (i == root) out += '[';
    out += std::to_string(values[i]);
    if (i == root) out += ']';
  }
  return out;
}

RootedUnimodal RootedUnimodal::parse(std::string_view text) {
  RootedUnimodal u;
  bool have_root = false;
  bool open = false;
  const bool dotted = text.find('.') != std::string_view::npos;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '[') {
      if (open || have_root) throw DomainError("misplaced root marker");
      open = true;
      u.root = u.values.size();
      ++i;
    } else if (c == ']') {
      if (!open || u.values.size() != u.root + 1) throw DomainError("misplaced root marker");
      open = false;
      have_root = true;
      ++i;
    } else if (c == '.' && dotted) {
      ++i;
    } else if (c >= '0' && c <= '9') {
      std::size_t j = i + 1;
      if (dotted) {
        while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
      }
      int value = 0;
      std::from_chars(text.data() + i, text.data() + j, value);
      u.values.push_back(value);
      i = j;
    } else {
      throw DomainError("invalid rooted composition '" + std::string(text) + "'");
    }
  }
  if (!have_root) throw DomainError("rooted composition needs a [root]");
  if (!u.valid()) throw DomainError("'" + std::string(text) + "' is not a rooted unimodal composition");
  return u;
}

std::vector<RootedUnimodal> rooted_unimodal(int n) {
  if (n < 1) throw DomainError("rooted unimodal compositions need n >= 1");
  std::vector<RootedUnimodal> out;
  std::vector<int> values{0};
  // descending = whether the sequence has already stepped down
  std::function<void(bool)> rec = [&](bool descending) {
    const int len = static_cast<int>(values.size());
    const int last = values.back();
    if (len == n) {
      if (last != 0) return;
      const int mx = *std::max_element(values.begin(), values.end());
      for (std::size_t r = 0; r < values.size(); ++r) {
        if (values[r] == mx) out.push_back({values, r});
      }
      return;
    }
    // still need to come back down to 0 in the remaining steps
    for (int d = -1; d <= 1; ++d) {
      const int next = last + d;
      if (next < 0 || next > n - len - 1) continue;
      if (descending && d > 0) continue;
      values.push_back(next);
      rec(descending || d < 0);
      values.pop_back();
    }
  };
  rec(false);
  std::sort(out.begin(), out.end());
  return out;
}

MotzkinPath::MotzkinPath(std::string steps) : steps_(std::move(steps)) {
  int h = 0;
  bool plain = false, colored = false;
  for (char c : steps_) {
    switch (c) {
      case 'U': ++h; break;
      case 'D': --h; break;
      case 'H': plain = true; break;
      case 'a':
      case 'b': colored = true; break;
      default: throw DomainError(std::string("unknown step '") + c + "'");
    }
    if (h < 0) throw DomainError("path '" + steps_ + "' dips below the axis");
  }
  if (h != 0) throw DomainError("path '" + steps_ + "' does not end on the axis");
  if (plain && colored) throw DomainError("path mixes H with a/b steps");
}

bool MotzkinPath::two_colored() const {
  return steps_.find('H') == std::string::npos;
}

std::vector<int> MotzkinPath::levels() const {
  std::vector<int> out;
  int h = 0;
  for (char c : steps_) {
    if (c == 'U') {
      out.push_back(h++);
    } else if (c == 'D') {
      out.push_back(--h);
    } else {
      out.push_back(h);
    }
  }
  return out;
}

int MotzkinPath::level(std::size_t i) const {
  if (i >= steps_.size()) throw DomainError("step index out of range");
  return levels()[i];
}

int MotzkinPath::path_level() const {
  const auto l = levels();
  return std::accumulate(l.begin(), l.end(), 0);
}

int MotzkinPath::area() const {
  // twice the trapezoid area under each step
  int twice = 0, h = 0;
  for (char c : steps_) {
    const int before = h;
    if (c == 'U') ++h;
    if (c == 'D') --h;
    twice += before + h;
  }
  return twice / 2;
}

std::vector<int> MotzkinPath::pairing() const {
  std::vector<int> out(steps_.size(), -1);
  std::vector<int> open;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (steps_[i] == 'U') open.push_back(static_cast<int>(i));
    if (steps_[i] == 'D') {
      out[i] = open.back();
      open.pop_back();
    }
  }
  return out;
}

int MotzkinPath::A_stat(std::size_t i) const {
  if (i >= steps_.size() || steps_[i] != 'D') throw DomainError("A is defined on down steps");
  const int p = pairing()[i];
  int a = 1;
  for (std::size_t j = static_cast<std::size_t>(p) + 1; j < i; ++j) {
    if (steps_[j] == 'U' || steps_[j] == 'b') ++a;
  }
  return a;
}

namespace {

std::vector<MotzkinPath> paths(int n, std::string_view alphabet) {
  if (n < 0) throw DomainError("path length must be nonnegative");
  std::vector<MotzkinPath> out;
  std::string s;
  std::function<void(int)> rec = [&](int h) {
    const int left = n - static_cast<int>(s.size());
    if (left == 0) {
      out.emplace_back(s);
      return;
    }
    for (char c : alphabet) {
      const int next = h + (c == 'U') - (c == 'D');
      if (next < 0 || next > left - 1) continue;
      s.push_back(c);
      rec(next);
      s.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace

std::vector<MotzkinPath> motzkin_paths(int n) { return paths(n, "DHU"); }

std::vector<MotzkinPath> two_colored_paths(int n) { return paths(n, "DUab"); }

}  // namespace rgflab

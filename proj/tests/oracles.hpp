#pragma once

// Brute-force helpers shared by the test suites. Nothing here calls the
// library's own search code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using Letters = std::vector<int>;

// Every sequence over 1..n of length n, filtered by the growth rule.
inline std::vector<Letters> all_rgfs(int n) {
  std::vector<Letters> out;
  Letters w(n, 1);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      int mx = 0;
      for (int x : w) {
        if (x > mx + 1) return;
        mx = std::max(mx, x);
      }
      out.push_back(w);
      return;
    }
    for (int x = 1; x <= n; ++x) {
      w[i] = x;
      rec(i + 1);
    }
  };
  if (n == 0) return {Letters{}};
  rec(0);
  return out;
}

inline std::uint64_t bell(int n) {
  // Bell(m+1) = sum_k C(m,k) Bell(k)
  std::vector<std::uint64_t> b{1};
  for (int m = 0; m < n; ++m) {
    std::uint64_t s = 0, c = 1;
    for (int k = 0; k <= m; ++k) {
      s += c * b[k];
      c = c * (m - k) / (k + 1);
    }
    b.push_back(s);
  }
  return b[n];
}

// Subsequence test by trying every index subset of size |v|.
inline bool contains(const Letters& w, const Letters& v) {
  const int n = static_cast<int>(w.size()), k = static_cast<int>(v.size());
  if (k == 0) return true;
  if (k > n) return false;
  std::vector<int> idx(k);
  std::function<bool(int, int)> rec = [&](int depth, int from) -> bool {
    if (depth == k) {
      for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) {
          const int x = w[idx[a]], y = w[idx[b]];
          if ((x < y) != (v[a] < v[b]) || (x == y) != (v[a] == v[b])) return false;
        }
      }
      return true;
    }
    for (int i = from; i < n; ++i) {
      idx[depth] = i;
      if (rec(depth + 1, i + 1)) return true;
    }
    return false;
  };
  return rec(0, 0);
}

inline bool avoids(const Letters& w, const std::vector<Letters>& V) {
  for (const auto& v : V) {
    if (contains(w, v)) return false;
  }
  return true;
}

// Distinct values left/right of j that are bigger/smaller.
inline int stat(const Letters& w, std::size_t j, bool left, bool bigger) {
  std::vector<int> seen;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if ((left && i < j) || (!left && i > j)) {
      if ((bigger && w[i] > w[j]) || (!bigger && w[i] < w[j])) {
        if (std::find(seen.begin(), seen.end(), w[i]) == seen.end()) seen.push_back(w[i]);
      }
    }
  }
  return static_cast<int>(seen.size());
}

inline std::int64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t c = 1;
  for (int i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
  return c;
}

inline std::int64_t catalan(int n) { return binom(2 * n, n) / (n + 1); }

}  // namespace oracle

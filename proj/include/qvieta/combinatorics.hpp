#pragma once

#include <algorithm>
#include <vector>

namespace qvieta {

// All strictly increasing k-tuples from {1..n}, in lexicographic order.
inline std::vector<std::vector<int>> increasing_tuples(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (depth == k) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v <= n - (k - depth - 1); ++v) {
      cur[static_cast<std::size_t>(depth)] = v;
      self(self, v + 1, depth + 1);
    }
  };
  rec(rec, 1, 0);
  return out;
}

// All compositions of `total` into positive parts of size <= max_part,
// first part varying slowest. 2^{total-1} of them when max_part >= total.
inline std::vector<std::vector<int>> compositions(int total, int max_part) {
  std::vector<std::vector<int>> out;
  if (total == 0) {
    out.push_back({});
    return out;
  }
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = 1; p <= std::min(remaining, max_part); ++p) {
      cur.push_back(p);
      self(self, remaining - p);
      cur.pop_back();
    }
  };
  rec(rec, total);
  return out;
}

}  // namespace qvieta

#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qvieta/block_matrix.hpp"

namespace qvieta {

// Names the inner inverse that did not exist: the quasideterminant of the
// submatrix spanned by (rows, cols) at position (i, j) was undefined or its
// value was singular.
struct FailureSite {
  std::vector<int> rows, cols;
  int i = 0, j = 0;

  std::string describe() const {
    std::ostringstream os;
    os << "inverse of |A[rows={";
    for (std::size_t t = 0; t < rows.size(); ++t) os << (t ? "," : "") << rows[t];
    os << "},cols={";
    for (std::size_t t = 0; t < cols.size(); ++t) os << (t ? "," : "") << cols[t];
    os << "}]|_(" << i << "," << j << ") does not exist";
    return os.str();
  }
};

struct QuasidetResult {
  std::optional<Matrix> value;
  std::optional<FailureSite> failure;
  bool defined() const { return value.has_value(); }
};

// Evaluates the recursive quasideterminant formula
//
//   |A|_pq = a_pq - sum_{i in I-{p}, j in J-{q}} a_pj (|A^{pq}|_ij)^{-1} a_iq
//
// with |A|_pq = a_pq for order 1. Inner results and their inverses are
// memoized on (row label set, col label set, position), so the n^2
// quasideterminants of one matrix share all inner work. Label subsets keep
// the parent's relative order, which makes the memo keys canonical. The
// double sum runs column-major (j outer); with exact arithmetic the order
// cannot change the value, it only pins down the evaluation sequence.
class QuasidetEvaluator {
 public:
  explicit QuasidetEvaluator(const BlockMatrix& a) : a_(a) {}

  QuasidetResult eval(int p, int q) {
    return eval_on(a_.row_labels(), a_.col_labels(), p, q);
  }

  std::size_t memo_size() const { return memo_.size(); }

 private:
  using Key = std::tuple<std::vector<int>, std::vector<int>, int, int>;

  QuasidetResult eval_on(const std::vector<int>& rows, const std::vector<int>& cols,
                         int p, int q) {
    if (rows.size() == 1) return QuasidetResult{a_.entry(p, q), std::nullopt};
    Key key{rows, cols, p, q};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    std::vector<int> subrows = erased(rows, p);
    std::vector<int> subcols = erased(cols, q);

    QuasidetResult result;
    Matrix acc = a_.entry(p, q);
    bool failed = false;
    for (int j : subcols) {
      for (int i : subrows) {
        const auto& inv = inverse_on(subrows, subcols, i, j);
        if (!inv.value) {
          result.failure = inv.failure;
          failed = true;
          break;
        }
        acc -= a_.entry(p, j) * *inv.value * a_.entry(i, q);
      }
      if (failed) break;
    }
    if (!failed) result.value = std::move(acc);
    memo_.emplace(std::move(key), result);
    return result;
  }

  struct InverseEntry {
    std::optional<Matrix> value;
    std::optional<FailureSite> failure;
  };

  const InverseEntry& inverse_on(const std::vector<int>& rows, const std::vector<int>& cols,
                                 int i, int j) {
    Key key{rows, cols, i, j};
    if (auto it = inv_memo_.find(key); it != inv_memo_.end()) return it->second;
    InverseEntry entry;
    QuasidetResult inner = eval_on(rows, cols, i, j);
    if (!inner.defined()) {
      entry.failure = inner.failure;
    } else if (auto inv = inner.value->try_inverse()) {
      entry.value = std::move(*inv);
    } else {
      entry.failure = FailureSite{rows, cols, i, j};
    }
    return inv_memo_.emplace(std::move(key), std::move(entry)).first->second;
  }

  static std::vector<int> erased(const std::vector<int>& labels, int label) {
    std::vector<int> out;
    out.reserve(labels.size() - 1);
    for (int l : labels)
      if (l != label) out.push_back(l);
    return out;
  }

  const BlockMatrix& a_;
  std::map<Key, QuasidetResult> memo_;
  std::map<Key, InverseEntry> inv_memo_;
};

inline QuasidetResult quasidet(const BlockMatrix& a, int p, int q) {
  if (!a.has_row(p) || !a.has_col(q))
    throw std::out_of_range("quasidet: position (" + std::to_string(p) + "," +
                            std::to_string(q) + ") not present");
  QuasidetEvaluator ev(a);
  return ev.eval(p, q);
}

// All n^2 quasideterminants, computed with a shared memo table.
// Per-position failures are recorded in the results, never thrown.
inline std::map<std::pair<int, int>, QuasidetResult> all_quasidets(const BlockMatrix& a) {
  QuasidetEvaluator ev(a);
  std::map<std::pair<int, int>, QuasidetResult> out;
  for (int p : a.row_labels())
    for (int q : a.col_labels()) out.emplace(std::pair{p, q}, ev.eval(p, q));
  return out;
}

// Commutative reduction: for scalar (1x1) entries with det A^{pq} != 0,
// checks |A|_pq * det A^{pq} == (-1)^{p+q} det A, where p and q are the
// 1-based ranks of the labels. Returns nullopt (skip) when the submatrix
// determinant vanishes or the quasideterminant is undefined.
inline std::optional<bool> commutative_reduction_check(const BlockMatrix& a, int p, int q) {
  if (a.dim() != 1)
    throw std::invalid_argument("commutative_reduction_check: entries must be scalars");
  const int n = a.order();
  Matrix full(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      full.at(r, c) = a.entry(a.row_labels()[static_cast<std::size_t>(r)],
                              a.col_labels()[static_cast<std::size_t>(c)]).at(0, 0);
  const Rational det_a = full.det();

  Rational det_sub(1);
  if (n > 1) {
    const BlockMatrix sub = a.submatrix(p, q);
    Matrix subfull(n - 1);
    for (int r = 0; r < n - 1; ++r)
      for (int c = 0; c < n - 1; ++c)
        subfull.at(r, c) = sub.entry(sub.row_labels()[static_cast<std::size_t>(r)],
                                     sub.col_labels()[static_cast<std::size_t>(c)]).at(0, 0);
    det_sub = subfull.det();
  }
  if (det_sub.is_zero()) return std::nullopt;

  const QuasidetResult r = quasidet(a, p, q);
  if (!r.defined()) return std::nullopt;

  const bool even = (a.row_rank(p) + a.col_rank(q)) % 2 == 0;
  const Rational rhs = even ? det_a : -det_a;
  return r.value->at(0, 0) * det_sub == rhs;
}

}  // namespace qvieta

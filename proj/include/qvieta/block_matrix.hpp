#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qvieta/matrix.hpp"

namespace qvieta {

// Square array of ring elements indexed by persistent integer labels.
// Deleting a row and a column never renumbers the survivors, so positions
// like "the row holding x^{n-k}" stay addressable through the recursion.
class BlockMatrix {
 public:
  BlockMatrix(std::vector<int> row_labels, std::vector<int> col_labels,
              std::vector<std::vector<Matrix>> entries)
      : rows_(std::move(row_labels)), cols_(std::move(col_labels)), e_(std::move(entries)) {
    validate();
  }

  // Labels 1..n in grid order.
  static BlockMatrix from_grid(std::vector<std::vector<Matrix>> entries) {
    const int n = static_cast<int>(entries.size());
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = i + 1;
    return BlockMatrix(labels, labels, std::move(entries));
  }

  int order() const { return static_cast<int>(rows_.size()); }
  int dim() const { return e_[0][0].dim(); }

  const std::vector<int>& row_labels() const { return rows_; }
  const std::vector<int>& col_labels() const { return cols_; }

  // 1-based position of a label in the current index list.
  int row_rank(int label) const { return row_pos(label) + 1; }
  int col_rank(int label) const { return col_pos(label) + 1; }

  bool has_row(int label) const {
    return std::find(rows_.begin(), rows_.end(), label) != rows_.end();
  }
  bool has_col(int label) const {
    return std::find(cols_.begin(), cols_.end(), label) != cols_.end();
  }

  const Matrix& entry(int row_label, int col_label) const {
    return e_[static_cast<std::size_t>(row_pos(row_label))]
             [static_cast<std::size_t>(col_pos(col_label))];
  }

  // A^{pq}: row p and column q deleted, all other labels unchanged.
  BlockMatrix submatrix(int p, int q) const {
    const int rp = row_pos(p), cp = col_pos(q);
    if (order() == 1)
      throw std::invalid_argument("BlockMatrix: cannot take submatrix of order 1");
    std::vector<int> rows = rows_, cols = cols_;
    rows.erase(rows.begin() + rp);
    cols.erase(cols.begin() + cp);
    std::vector<std::vector<Matrix>> ent;
    ent.reserve(rows.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (static_cast<int>(r) == rp) continue;
      std::vector<Matrix> row;
      row.reserve(cols.size());
      for (std::size_t c = 0; c < cols_.size(); ++c) {
        if (static_cast<int>(c) == cp) continue;
        row.push_back(e_[r][c]);
      }
      ent.push_back(std::move(row));
    }
    return BlockMatrix(std::move(rows), std::move(cols), std::move(ent));
  }

 private:
  void validate() const {
    if (rows_.empty() || rows_.size() != cols_.size() || e_.size() != rows_.size())
      throw std::invalid_argument("BlockMatrix: index lists and entries must be square");
    for (auto labels : {&rows_, &cols_}) {
      auto sorted = *labels;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("BlockMatrix: duplicate index label");
    }
    const int d = e_[0][0].dim();
    for (const auto& row : e_) {
      if (row.size() != cols_.size())
        throw std::invalid_argument("BlockMatrix: ragged entry grid");
      for (const auto& m : row)
        if (m.dim() != d) throw std::invalid_argument("BlockMatrix: mixed entry dimensions");
    }
  }

  int row_pos(int label) const {
    auto it = std::find(rows_.begin(), rows_.end(), label);
    if (it == rows_.end())
      throw std::out_of_range("BlockMatrix: no row labeled " + std::to_string(label));
    return static_cast<int>(it - rows_.begin());
  }
  int col_pos(int label) const {
    auto it = std::find(cols_.begin(), cols_.end(), label);
    if (it == cols_.end())
      throw std::out_of_range("BlockMatrix: no column labeled " + std::to_string(label));
    return static_cast<int>(it - cols_.begin());
  }

  std::vector<int> rows_, cols_;
  std::vector<std::vector<Matrix>> e_;
};

}  // namespace qvieta

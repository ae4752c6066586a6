#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qvieta/block_matrix.hpp"

namespace qvieta {

// {"dim": d, "entries": [["p/q", ...], ...]}
inline nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (int r = 0; r < m.dim(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < m.dim(); ++c) row.push_back(m.at(r, c).str());
    entries.push_back(std::move(row));
  }
  return {{"dim", m.dim()}, {"entries", std::move(entries)}};
}

inline Matrix matrix_from_entries(const nlohmann::json& entries, int dim) {
  if (!entries.is_array() || static_cast<int>(entries.size()) != dim)
    throw std::invalid_argument("matrix JSON: entries must be a dim x dim array");
  Matrix m(dim);
  for (int r = 0; r < dim; ++r) {
    const auto& row = entries.at(static_cast<std::size_t>(r));
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw std::invalid_argument("matrix JSON: ragged row " + std::to_string(r));
    for (int c = 0; c < dim; ++c)
      m.at(r, c) = Rational::parse(row.at(static_cast<std::size_t>(c)).get<std::string>());
  }
  return m;
}

inline Matrix matrix_from_json(const nlohmann::json& j) {
  const int dim = j.at("dim").get<int>();
  if (dim < 1) throw std::invalid_argument("matrix JSON: dim must be positive");
  return matrix_from_entries(j.at("entries"), dim);
}

// {"order": n, "dim": d, "entries": [[<d x d entry>, ...], ...]};
// labels are implicitly 1..n.
inline nlohmann::json block_matrix_to_json(const BlockMatrix& a) {
  nlohmann::json entries = nlohmann::json::array();
  for (int p : a.row_labels()) {
    nlohmann::json row = nlohmann::json::array();
    for (int q : a.col_labels())
      row.push_back(matrix_to_json(a.entry(p, q)).at("entries"));
    entries.push_back(std::move(row));
  }
  return {{"order", a.order()}, {"dim", a.dim()}, {"entries", std::move(entries)}};
}

inline BlockMatrix block_matrix_from_json(const nlohmann::json& j) {
  const int order = j.at("order").get<int>();
  const int dim = j.at("dim").get<int>();
  if (order < 1 || dim < 1)
    throw std::invalid_argument("block matrix JSON: order and dim must be positive");
  const auto& entries = j.at("entries");
  if (!entries.is_array() || static_cast<int>(entries.size()) != order)
    throw std::invalid_argument("block matrix JSON: entries must be an order x order grid");
  std::vector<std::vector<Matrix>> grid;
  grid.reserve(static_cast<std::size_t>(order));
  for (int r = 0; r < order; ++r) {
    const auto& row = entries.at(static_cast<std::size_t>(r));
    if (!row.is_array() || static_cast<int>(row.size()) != order)
      throw std::invalid_argument("block matrix JSON: ragged row " + std::to_string(r));
    std::vector<Matrix> out_row;
    out_row.reserve(static_cast<std::size_t>(order));
    for (int c = 0; c < order; ++c)
      out_row.push_back(matrix_from_entries(row.at(static_cast<std::size_t>(c)), dim));
    grid.push_back(std::move(out_row));
  }
  return BlockMatrix::from_grid(std::move(grid));
}

}  // namespace qvieta

#include "uhecke/kernel_solve.hpp"

#include <stdexcept>
#include <utility>

namespace uhecke {

std::vector<std::vector<RFunc>> solve_kernel(
    const std::vector<std::vector<RFunc>>& rows) {
  if (rows.empty()) return {};
  const size_t cols = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != cols)
      throw std::invalid_argument("solve_kernel: ragged rows");

  std::vector<std::vector<RFunc>> m = rows;
  std::vector<std::pair<size_t, size_t>> pivots;  // (row, col)
  std::vector<bool> row_used(m.size(), false);
  std::vector<bool> col_pivot(cols, false);

  for (size_t c = 0; c < cols; ++c) {
    size_t pr = m.size();
    for (size_t r = 0; r < m.size(); ++r) {
      if (!row_used[r] && !m[r][c].is_zero()) {
        pr = r;
        break;
      }
    }
    if (pr == m.size()) continue;
    row_used[pr] = true;
    col_pivot[c] = true;
    pivots.emplace_back(pr, c);
    RFunc inv = m[pr][c].inverse();
    for (size_t j = 0; j < cols; ++j) m[pr][j] = m[pr][j] * inv;
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == pr || m[r][c].is_zero()) continue;
      RFunc f = m[r][c];
      for (size_t j = 0; j < cols; ++j) m[r][j] = m[r][j] - f * m[pr][j];
    }
  }

  std::vector<std::vector<RFunc>> basis;
  for (size_t f = 0; f < cols; ++f) {
    if (col_pivot[f]) continue;
    std::vector<RFunc> v(cols, RFunc());
    v[f] = RFunc(Rat(1));
    for (const auto& [pr, pc] : pivots) v[pc] = -m[pr][f];
    basis.push_back(std::move(v));
  }

  for (const auto& v : basis) {
    for (const auto& row : rows) {
      RFunc dot;
      for (size_t j = 0; j < cols; ++j) dot += row[j] * v[j];
      if (!dot.is_zero())
        throw std::logic_error("solve_kernel: post-check failed");
    }
  }
  return basis;
}

}  // namespace uhecke

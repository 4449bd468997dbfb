#include "orbitc/matrix.hpp"

#include <Eigen/Dense>

namespace orbitc {

std::optional<MatQ> invert_exact(const MatQ& m) {
  const int n = m.rows();
  MatQ a = m;
  MatQ inv = MatQ::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!a(r, col).is_zero()) { pivot = r; break; }
    if (pivot < 0) return std::nullopt;
    if (pivot != col)
      for (int k = 0; k < n; ++k) {
        std::swap(a(pivot, k), a(col, k));
        std::swap(inv(pivot, k), inv(col, k));
      }
    const CRat p = a(col, col);
    for (int k = 0; k < n; ++k) {
      a(col, k) = a(col, k) / p;
      inv(col, k) = inv(col, k) / p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const CRat f = a(r, col);
      for (int k = 0; k < n; ++k) {
        a(r, k) -= f * a(col, k);
        inv(r, k) -= f * inv(col, k);
      }
    }
  }
  return inv;
}

int rank_rows_exact(std::vector<std::vector<Rat>>& rows) {
  if (rows.empty()) return 0;
  const size_t cols = rows[0].size();
  size_t top = 0;
  for (size_t col = 0; col < cols && top < rows.size(); ++col) {
    size_t pivot = top;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[top], rows[pivot]);
    const Rat p = rows[top][col];
    for (size_t r = top + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const Rat f = rows[r][col] / p;
      rows[r][col] = 0;
      for (size_t k = col + 1; k < cols; ++k)
        if (rows[top][k] != 0) rows[r][k] -= f * rows[top][k];
    }
    ++top;
  }
  return static_cast<int>(top);
}

int rank_rows_numeric(const std::vector<std::vector<double>>& rows, double rel_tol) {
  if (rows.empty()) return 0;
  Eigen::MatrixXd m(rows.size(), rows[0].size());
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < rows[r].size(); ++c) m(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) <= 0.0) return 0;
  const double cut = rel_tol * sv(0);
  int rank = 0;
  for (int k = 0; k < sv.size(); ++k)
    if (sv(k) > cut) ++rank;
  return rank;
}

}  // namespace orbitc

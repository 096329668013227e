#include "linalg.hpp"

namespace rscover::detail {

std::vector<std::size_t> row_reduce(const Field& F, Matrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < a.cols && row < a.rows; ++c) {
    std::size_t p = row;
    while (p < a.rows && a.at(p, c).value == 0) ++p;
    if (p == a.rows) continue;
    if (p != row)
      for (std::size_t j = 0; j < a.cols; ++j) std::swap(a.at(p, j), a.at(row, j));
    const Elem iv = F.inv(a.at(row, c));
    for (std::size_t j = c; j < a.cols; ++j) a.at(row, j) = F.mul(a.at(row, j), iv);
    for (std::size_t r = 0; r < a.rows; ++r) {
      if (r == row) continue;
      const Elem f = a.at(r, c);
      if (f.value == 0) continue;
      for (std::size_t j = c; j < a.cols; ++j)
        a.at(r, j) = F.sub(a.at(r, j), F.mul(f, a.at(row, j)));
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

std::optional<std::vector<Elem>> solve(const Field& F, const Matrix& a,
                                       const std::vector<Elem>& b) {
  Matrix aug(a.rows, a.cols + 1);
  for (std::size_t r = 0; r < a.rows; ++r) {
    for (std::size_t c = 0; c < a.cols; ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols) = b[r];
  }
  const auto pivots = row_reduce(F, aug);
  if (!pivots.empty() && pivots.back() == a.cols) return std::nullopt;
  std::vector<Elem> x(a.cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, a.cols);
  return x;
}

std::optional<std::vector<Elem>> kernel_vector(const Field& F, Matrix a) {
  const auto pivots = row_reduce(F, a);
  if (pivots.size() == a.cols) return std::nullopt;
  // First free column gets 1; pivot variables follow from the RREF rows.
  std::size_t free_col = 0;
  for (std::size_t r = 0; r <= pivots.size(); ++r, ++free_col)
    if (r == pivots.size() || pivots[r] != free_col) break;
  std::vector<Elem> x(a.cols);
  x[free_col] = F.one();
  for (std::size_t r = 0; r < pivots.size(); ++r)
    x[pivots[r]] = F.neg(a.at(r, free_col));
  return x;
}

}  // namespace rscover::detail

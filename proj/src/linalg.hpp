#ifndef RSCOVER_SRC_LINALG_HPP
#define RSCOVER_SRC_LINALG_HPP

#include <optional>
#include <vector>

#include "rscover/gf.hpp"

namespace rscover::detail {

/// Dense row-major matrix over GF(q).
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Elem> data;

  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  Elem& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  Elem at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Reduces `a` to reduced row echelon form in place and returns the pivot
/// column of each nonzero row.
std::vector<std::size_t> row_reduce(const Field& F, Matrix& a);

/// A solution of A x = b with free variables set to zero, or nothing when the
/// system is inconsistent.
std::optional<std::vector<Elem>> solve(const Field& F, const Matrix& a,
                                       const std::vector<Elem>& b);

/// A nonzero vector in the right kernel of A, or nothing when A has full
/// column rank.
std::optional<std::vector<Elem>> kernel_vector(const Field& F, Matrix a);

}  // namespace rscover::detail

#endif  // RSCOVER_SRC_LINALG_HPP

#ifndef BTRES_RAT_MATRIX_HPP
#define BTRES_RAT_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "btres/rational.hpp"

namespace btres {

// Dense matrix of exact rationals. Row-major, value semantics.
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix zero(std::size_t rows, std::size_t cols) { return RatMatrix(rows, cols); }
  static RatMatrix from_columns(std::size_t dim, const std::vector<RatVec>& cols);
  static RatMatrix row_vector(const RatVec& v);
  static RatMatrix column_vector(const RatVec& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Rat& operator()(std::size_t i, std::size_t j) { return at(i, j); }
  const Rat& operator()(std::size_t i, std::size_t j) const { return at(i, j); }

  RatVec row(std::size_t i) const;
  RatVec column(std::size_t j) const;

  bool is_zero() const;
  bool operator==(const RatMatrix& other) const = default;

  RatMatrix transpose() const;
  RatMatrix operator*(const RatMatrix& rhs) const;
  RatMatrix operator+(const RatMatrix& rhs) const;
  RatMatrix operator-(const RatMatrix& rhs) const;
  RatMatrix scaled(const Rat& c) const;
  RatVec apply(const RatVec& v) const;

  RatMatrix submatrix(const std::vector<std::size_t>& row_idx,
                      const std::vector<std::size_t>& col_idx) const;
  // Stacks rows of `below` under this matrix (column counts must agree).
  RatMatrix vstack(const RatMatrix& below) const;

  std::string to_string() const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> data_;
};

// Reduced row echelon form, exact, with deterministic pivoting (first nonzero
// entry, leftmost column). Returns the RREF and the strictly increasing pivot
// column list.
std::pair<RatMatrix, std::vector<std::size_t>> rref(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

// Basis of the right kernel, read off the RREF free columns in increasing
// column order: the basis vector for free column j has a 1 in slot j.
std::vector<RatVec> kernel_basis(const RatMatrix& m);

// Determinant by exact Gaussian elimination (square input).
Rat determinant(const RatMatrix& m);

// Inverse of a square invertible matrix; throws ValidationError("Singular") otherwise.
RatMatrix inverse(const RatMatrix& m);

// One exact solution of A x = b, or nullopt when inconsistent.
std::optional<RatVec> solve(const RatMatrix& a, const RatVec& b);

// Solves A X = B columnwise; throws ValidationError("Inconsistent") when any
// column has no solution. Used for expressing vectors in a basis.
RatMatrix solve_matrix(const RatMatrix& a, const RatMatrix& b);

Rat dot(const RatVec& a, const RatVec& b);

} // namespace btres

#endif

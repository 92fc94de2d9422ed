#ifndef BTRES_INT_MATRIX_HPP
#define BTRES_INT_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "btres/rat_matrix.hpp"
#include "btres/rational.hpp"

namespace btres {

// Dense matrix of arbitrary-precision integers. Used for psi, normal forms
// and orientation bases; everything rank-related goes through RatMatrix.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const IntMatrix& other) const = default;

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  std::vector<Int> apply(const std::vector<Int>& v) const;

  RatMatrix to_rat() const;
  std::string to_string() const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

// Row-style Hermite normal form: upper echelon, positive pivots, entries
// above each pivot reduced into [0, pivot). Returns H and unimodular U with
// U * M = H.
struct HermiteResult {
  IntMatrix h;
  IntMatrix u;
};
HermiteResult hermite_rows(const IntMatrix& m);

// Column-style Hermite normal form (the transpose convention); columns are a
// canonical ordered basis of the column lattice of M.
IntMatrix hermite_columns(const IntMatrix& m);

// Smith normal form: D = U * M * V with U, V unimodular, D diagonal with
// nonnegative invariant factors d_1 | d_2 | ... . u_inv is the exact inverse
// of u, kept alongside because quotient-group sections need it.
struct SmithResult {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
  IntMatrix u_inv;
  std::vector<Int> invariant_factors; // nonzero diagonal entries
};
SmithResult smith(const IntMatrix& m);

} // namespace btres

#endif

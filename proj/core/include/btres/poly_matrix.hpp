#ifndef BTRES_POLY_MATRIX_HPP
#define BTRES_POLY_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "btres/poly.hpp"
#include "btres/rat_matrix.hpp"

namespace btres {

// Matrix of multivariate rational-coefficient polynomials.
class PolyMatrix {
public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
      : rows_(rows), cols_(cols), nvars_(nvars), data_(rows * cols, Poly(nvars)) {}

  static PolyMatrix identity(std::size_t n, std::size_t nvars);
  // Constant lift of a rational matrix.
  static PolyMatrix from_rat(const RatMatrix& m, std::size_t nvars);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nvars() const { return nvars_; }

  Poly& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Poly& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;
  bool operator==(const PolyMatrix& rhs) const = default;

  PolyMatrix operator*(const PolyMatrix& rhs) const;
  PolyMatrix operator+(const PolyMatrix& rhs) const;
  PolyMatrix operator-(const PolyMatrix& rhs) const;
  PolyMatrix scaled(const Rat& c) const;

  // Entrywise coefficient of the zero exponent vector.
  RatMatrix constant_part() const;
  // Entrywise substitution.
  PolyMatrix substitute(const std::map<std::size_t, Poly>& assignment) const;

  std::string to_string(const std::vector<std::string>& varnames = {}) const;

private:
  std::size_t rows_ = 0, cols_ = 0, nvars_ = 0;
  std::vector<Poly> data_;
};

} // namespace btres

#endif

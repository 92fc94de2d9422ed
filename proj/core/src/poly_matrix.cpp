#include "btres/poly_matrix.hpp"

#include <sstream>

#include "btres/errors.hpp"

namespace btres {

PolyMatrix PolyMatrix::identity(std::size_t n, std::size_t nvars) {
  PolyMatrix m(n, n, nvars);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Poly::constant(nvars, Rat(1));
  return m;
}

PolyMatrix PolyMatrix::from_rat(const RatMatrix& r, std::size_t nvars) {
  PolyMatrix m(r.rows(), r.cols(), nvars);
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j)
      if (r.at(i, j) != 0) m.at(i, j) = Poly::constant(nvars, r.at(i, j));
  return m;
}

bool PolyMatrix::is_zero() const {
  for (const Poly& p : data_)
    if (!p.is_zero()) return false;
  return true;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw ValidationError("Shape", "polynomial matrix product dimension mismatch");
  PolyMatrix p(rows_, rhs.cols_, nvars_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t l = 0; l < cols_; ++l) {
      const Poly& a = at(i, l);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Poly& b = rhs.at(l, j);
        if (!b.is_zero()) p.at(i, j) = p.at(i, j) + a * b;
      }
    }
  return p;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw ValidationError("Shape", "polynomial matrix sum dimension mismatch");
  PolyMatrix s(rows_, cols_, nvars_);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] + rhs.data_[i];
  return s;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw ValidationError("Shape", "polynomial matrix difference dimension mismatch");
  PolyMatrix s(rows_, cols_, nvars_);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] - rhs.data_[i];
  return s;
}

PolyMatrix PolyMatrix::scaled(const Rat& c) const {
  PolyMatrix s(rows_, cols_, nvars_);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i].scaled(c);
  return s;
}

RatMatrix PolyMatrix::constant_part() const {
  RatMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).constant_term();
  return m;
}

PolyMatrix PolyMatrix::substitute(const std::map<std::size_t, Poly>& assignment) const {
  PolyMatrix s(rows_, cols_, nvars_);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i].substitute(assignment);
  return s;
}

std::string PolyMatrix::to_string(const std::vector<std::string>& varnames) const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << at(i, j).to_string(varnames);
    }
    os << '\n';
  }
  return os.str();
}

} // namespace btres

#include "btres/rat_matrix.hpp"

#include <optional>
#include <sstream>

#include "btres/errors.hpp"

namespace btres {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_)
      throw ValidationError("Shape", "ragged initializer for RatMatrix");
    for (long v : r) data_.emplace_back(v);
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_columns(std::size_t dim, const std::vector<RatVec>& cols) {
  RatMatrix m(dim, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != dim)
      throw ValidationError("Shape", "column length mismatch in from_columns");
    for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

RatMatrix RatMatrix::row_vector(const RatVec& v) {
  RatMatrix m(1, v.size());
  for (std::size_t j = 0; j < v.size(); ++j) m.at(0, j) = v[j];
  return m;
}

RatMatrix RatMatrix::column_vector(const RatVec& v) {
  RatMatrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
  return m;
}

RatVec RatMatrix::row(std::size_t i) const {
  RatVec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

RatVec RatMatrix::column(std::size_t j) const {
  RatVec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

bool RatMatrix::is_zero() const {
  for (const Rat& q : data_)
    if (q != 0) return false;
  return true;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw ValidationError("Shape", "matrix product dimension mismatch");
  RatMatrix p(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t l = 0; l < cols_; ++l) {
      const Rat& a = at(i, l);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Rat& b = rhs.at(l, j);
        if (b != 0) p.at(i, j) += a * b;
      }
    }
  return p;
}

RatMatrix RatMatrix::operator+(const RatMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw ValidationError("Shape", "matrix sum dimension mismatch");
  RatMatrix s(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] + rhs.data_[i];
  return s;
}

RatMatrix RatMatrix::operator-(const RatMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw ValidationError("Shape", "matrix difference dimension mismatch");
  RatMatrix s(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] - rhs.data_[i];
  return s;
}

RatMatrix RatMatrix::scaled(const Rat& c) const {
  RatMatrix s(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] * c;
  return s;
}

RatVec RatMatrix::apply(const RatVec& v) const {
  if (v.size() != cols_)
    throw ValidationError("Shape", "matrix-vector dimension mismatch");
  RatVec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && v[j] != 0) out[i] += at(i, j) * v[j];
  return out;
}

RatMatrix RatMatrix::submatrix(const std::vector<std::size_t>& row_idx,
                               const std::vector<std::size_t>& col_idx) const {
  RatMatrix s(row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j)
      s.at(i, j) = at(row_idx[i], col_idx[j]);
  return s;
}

RatMatrix RatMatrix::vstack(const RatMatrix& below) const {
  if (rows_ == 0 && cols_ == 0) return below;
  if (below.rows_ == 0 && below.cols_ == 0) return *this;
  if (cols_ != below.cols_)
    throw ValidationError("Shape", "vstack column mismatch");
  RatMatrix s(rows_ + below.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) s.at(i, j) = at(i, j);
  for (std::size_t i = 0; i < below.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) s.at(rows_ + i, j) = below.at(i, j);
  return s;
}

std::string RatMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << rat_to_string(at(i, j));
    }
    os << '\n';
  }
  return os.str();
}

std::pair<RatMatrix, std::vector<std::size_t>> rref(const RatMatrix& m) {
  RatMatrix r = m;
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < r.cols() && lead < r.rows(); ++col) {
    std::size_t piv = lead;
    while (piv < r.rows() && r.at(piv, col) == 0) ++piv;
    if (piv == r.rows()) continue;
    if (piv != lead)
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r.at(piv, j), r.at(lead, j));
    Rat inv = 1 / r.at(lead, col);
    for (std::size_t j = col; j < r.cols(); ++j) r.at(lead, j) *= inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == lead || r.at(i, col) == 0) continue;
      Rat f = r.at(i, col);
      for (std::size_t j = col; j < r.cols(); ++j) r.at(i, j) -= f * r.at(lead, j);
    }
    pivots.push_back(col);
    ++lead;
  }
  return {std::move(r), std::move(pivots)};
}

std::size_t rank(const RatMatrix& m) { return rref(m).second.size(); }

std::vector<RatVec> kernel_basis(const RatMatrix& m) {
  auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    RatVec v(m.cols());
    v[j] = 1;
    for (std::size_t row = 0; row < pivots.size(); ++row) v[pivots[row]] = -r.at(row, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rat determinant(const RatMatrix& m) {
  if (m.rows() != m.cols())
    throw ValidationError("Shape", "determinant of non-square matrix");
  RatMatrix a = m;
  Rat det = 1;
  const std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a.at(piv, col) == 0) ++piv;
    if (piv == n) return Rat(0);
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
      det = -det;
    }
    det *= a.at(col, col);
    Rat inv = 1 / a.at(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a.at(i, col) == 0) continue;
      Rat f = a.at(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) a.at(i, j) -= f * a.at(col, j);
    }
  }
  return det;
}

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows() != m.cols())
    throw ValidationError("Shape", "inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  auto [r, pivots] = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1)
    throw ValidationError("Singular", "matrix is not invertible");
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.at(i, n + j);
  return inv;
}

std::optional<RatVec> solve(const RatMatrix& a, const RatVec& b) {
  if (b.size() != a.rows())
    throw ValidationError("Shape", "solve dimension mismatch");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  auto [r, pivots] = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  RatVec x(a.cols());
  for (std::size_t row = 0; row < pivots.size(); ++row) x[pivots[row]] = r.at(row, a.cols());
  return x;
}

RatMatrix solve_matrix(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows())
    throw ValidationError("Shape", "solve_matrix dimension mismatch");
  RatMatrix x(a.cols(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    auto sol = solve(a, b.column(j));
    if (!sol)
      throw ValidationError("Inconsistent", "solve_matrix: inconsistent column");
    for (std::size_t i = 0; i < a.cols(); ++i) x.at(i, j) = (*sol)[i];
  }
  return x;
}

Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size())
    throw ValidationError("Shape", "dot dimension mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

} // namespace btres

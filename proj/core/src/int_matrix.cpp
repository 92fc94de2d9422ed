#include "btres/int_matrix.hpp"

#include <sstream>

#include "btres/errors.hpp"

namespace btres {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_)
      throw ValidationError("Shape", "ragged initializer for IntMatrix");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw ValidationError("Shape", "integer matrix product dimension mismatch");
  IntMatrix p(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t l = 0; l < cols_; ++l) {
      if (at(i, l) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        if (rhs.at(l, j) != 0) p.at(i, j) += at(i, l) * rhs.at(l, j);
    }
  return p;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
  if (v.size() != cols_)
    throw ValidationError("Shape", "integer matrix-vector dimension mismatch");
  std::vector<Int> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && v[j] != 0) out[i] += at(i, j) * v[j];
  return out;
}

RatMatrix IntMatrix::to_rat() const {
  RatMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = Rat(at(i, j));
  return m;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << at(i, j).get_str();
    }
    os << '\n';
  }
  return os.str();
}

namespace {

struct RowOps {
  IntMatrix& m;
  IntMatrix& u;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(i, c), m.at(j, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
  }
  void add_row(std::size_t dst, std::size_t src, const Int& f) {
    if (f == 0) return;
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(dst, c) += f * m.at(src, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u.at(dst, c) += f * u.at(src, c);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(i, c) = -m.at(i, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
  }
};

} // namespace

HermiteResult hermite_rows(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  RowOps ops{h, u};

  std::size_t r = 0;
  for (std::size_t col = 0; col < h.cols() && r < h.rows(); ++col) {
    // Chase entries below r in this column to a single gcd pivot.
    for (;;) {
      std::size_t best = h.rows();
      for (std::size_t i = r; i < h.rows(); ++i) {
        if (h.at(i, col) == 0) continue;
        if (best == h.rows() || mpz_cmpabs(h.at(i, col).get_mpz_t(), h.at(best, col).get_mpz_t()) < 0) best = i;
      }
      if (best == h.rows()) break;
      ops.swap_rows(r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h.at(i, col) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(), h.at(r, col).get_mpz_t());
        ops.add_row(i, r, -q);
        if (h.at(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h.at(r, col) == 0) continue;
    if (h.at(r, col) < 0) ops.negate_row(r);
    for (std::size_t i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(), h.at(r, col).get_mpz_t());
      ops.add_row(i, r, -q);
    }
    ++r;
  }
  return {std::move(h), std::move(u)};
}

IntMatrix hermite_columns(const IntMatrix& m) {
  return hermite_rows(m.transpose()).h.transpose();
}

SmithResult smith(const IntMatrix& m) {
  IntMatrix d = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix u_inv = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < d.cols(); ++c) std::swap(d.at(i, c), d.at(j, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
    for (std::size_t r2 = 0; r2 < u_inv.rows(); ++r2) std::swap(u_inv.at(r2, i), u_inv.at(r2, j));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r2 = 0; r2 < d.rows(); ++r2) std::swap(d.at(r2, i), d.at(r2, j));
    for (std::size_t r2 = 0; r2 < v.rows(); ++r2) std::swap(v.at(r2, i), v.at(r2, j));
  };
  // row dst += f * row src; mirrored inversely in u_inv so u * u_inv = id.
  auto add_row = [&](std::size_t dst, std::size_t src, const Int& f) {
    if (f == 0) return;
    for (std::size_t c = 0; c < d.cols(); ++c) d.at(dst, c) += f * d.at(src, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u.at(dst, c) += f * u.at(src, c);
    for (std::size_t r2 = 0; r2 < u_inv.rows(); ++r2) u_inv.at(r2, src) -= f * u_inv.at(r2, dst);
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const Int& f) {
    if (f == 0) return;
    for (std::size_t r2 = 0; r2 < d.rows(); ++r2) d.at(r2, dst) += f * d.at(r2, src);
    for (std::size_t r2 = 0; r2 < v.rows(); ++r2) v.at(r2, dst) += f * v.at(r2, src);
  };
  auto negate_row = [&](std::size_t i) {
    for (std::size_t c = 0; c < d.cols(); ++c) d.at(i, c) = -d.at(i, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
    for (std::size_t r2 = 0; r2 < u_inv.rows(); ++r2) u_inv.at(r2, i) = -u_inv.at(r2, i);
  };

  const std::size_t steps = std::min(d.rows(), d.cols());
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // Locate the minimal-magnitude nonzero entry of the trailing block.
      std::size_t pi = d.rows(), pj = d.cols();
      for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
          if (d.at(i, j) == 0) continue;
          if (pi == d.rows() || mpz_cmpabs(d.at(i, j).get_mpz_t(), d.at(pi, pj).get_mpz_t()) < 0) {
            pi = i;
            pj = j;
          }
        }
      if (pi == d.rows()) { t = steps; break; } // trailing block is zero
      swap_rows(t, pi);
      swap_cols(t, pj);

      bool reduced = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d.at(i, t) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), d.at(i, t).get_mpz_t(), d.at(t, t).get_mpz_t());
        add_row(i, t, -q);
        if (d.at(i, t) != 0) reduced = false;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d.at(t, j) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), d.at(t, j).get_mpz_t(), d.at(t, t).get_mpz_t());
        add_col(j, t, -q);
        if (d.at(t, j) != 0) reduced = false;
      }
      if (!reduced) continue;

      if (d.at(t, t) < 0) negate_row(t);

      // Divisibility: d(t,t) must divide the whole trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < d.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < d.cols() && divides; ++j)
          if (d.at(i, j) % d.at(t, t) != 0) {
            add_row(t, i, Int(1));
            divides = false;
          }
      if (divides) break;
    }
    if (t == steps) break;
  }

  SmithResult out{std::move(d), std::move(u), std::move(v), std::move(u_inv), {}};
  for (std::size_t t = 0; t < std::min(out.d.rows(), out.d.cols()); ++t)
    if (out.d.at(t, t) != 0) out.invariant_factors.push_back(out.d.at(t, t));
  return out;
}

} // namespace btres

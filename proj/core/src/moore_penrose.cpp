#include "btres/moore_penrose.hpp"

#include <algorithm>

#include "btres/errors.hpp"

namespace btres {

RatMatrix mp_inverse(const RatMatrix& a) {
  auto [r, pivots] = rref(a);
  const std::size_t rk = pivots.size();
  if (rk == 0) return RatMatrix(a.cols(), a.rows());

  RatMatrix b(a.rows(), rk); // pivot columns of A
  for (std::size_t j = 0; j < rk; ++j)
    for (std::size_t i = 0; i < a.rows(); ++i) b.at(i, j) = a.at(i, pivots[j]);
  RatMatrix c(rk, a.cols()); // nonzero rows of the RREF
  for (std::size_t i = 0; i < rk; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = r.at(i, j);

  RatMatrix ct = c.transpose();
  RatMatrix bt = b.transpose();
  return ct * inverse(c * ct) * inverse(bt * b) * bt;
}

namespace {

// All size-k subsets of {0..n-1}, lexicographic.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

} // namespace

std::vector<Hedge> enumerate_hedges(const RatMatrix& a, std::size_t max_dim) {
  if (a.rows() > max_dim || a.cols() > max_dim)
    throw ValidationError("TooLarge", "hedge enumeration bound exceeded");
  const std::size_t rk = rank(a);
  std::vector<Hedge> hedges;
  if (rk == 0) return hedges;
  auto row_sets = subsets(a.rows(), rk);
  auto col_sets = subsets(a.cols(), rk);
  for (const auto& s : row_sets)
    for (const auto& t : col_sets) {
      Rat minor = determinant(a.submatrix(s, t));
      if (minor != 0) hedges.push_back({s, t, minor});
    }
  return hedges;
}

RatMatrix hedge_splitting(const RatMatrix& a, const Hedge& hedge) {
  RatMatrix inv = inverse(a.submatrix(hedge.stake_rows, hedge.shrub_cols));
  RatMatrix split(a.cols(), a.rows());
  for (std::size_t ti = 0; ti < hedge.shrub_cols.size(); ++ti)
    for (std::size_t sj = 0; sj < hedge.stake_rows.size(); ++sj)
      split.at(hedge.shrub_cols[ti], hedge.stake_rows[sj]) = inv.at(ti, sj);
  return split;
}

RatMatrix mp_inverse_hedge(const RatMatrix& a, std::size_t max_dim) {
  auto hedges = enumerate_hedges(a, max_dim);
  if (hedges.empty()) return RatMatrix(a.cols(), a.rows());
  Rat delta = 0;
  RatMatrix sum(a.cols(), a.rows());
  for (const Hedge& h : hedges) {
    Rat w = h.minor * h.minor;
    delta += w;
    sum = sum + hedge_splitting(a, h).scaled(w);
  }
  return sum.scaled(1 / delta);
}

Rat mp_entry(const RatMatrix& a, std::size_t i, std::size_t j, std::size_t max_dim) {
  auto hedges = enumerate_hedges(a, max_dim);
  if (hedges.empty()) return Rat(0);
  Rat delta = 0;
  Rat acc = 0;
  for (const Hedge& h : hedges) {
    delta += h.minor * h.minor;
    auto pos_t = std::find(h.shrub_cols.begin(), h.shrub_cols.end(), i);
    auto pos_s = std::find(h.stake_rows.begin(), h.stake_rows.end(), j);
    if (pos_t == h.shrub_cols.end() || pos_s == h.stake_rows.end()) continue;
    std::vector<std::size_t> s_rest, t_rest;
    for (std::size_t r : h.stake_rows)
      if (r != j) s_rest.push_back(r);
    for (std::size_t c : h.shrub_cols)
      if (c != i) t_rest.push_back(c);
    Rat comp = s_rest.empty() ? Rat(1) : determinant(a.submatrix(s_rest, t_rest));
    long par = (pos_t - h.shrub_cols.begin()) + (pos_s - h.stake_rows.begin());
    if (par % 2 != 0) comp = -comp;
    acc += h.minor * comp;
  }
  return acc / delta;
}

bool verify_penrose(const RatMatrix& a, const RatMatrix& p) {
  if (p.rows() != a.cols() || p.cols() != a.rows()) return false;
  RatMatrix ap = a * p;
  RatMatrix pa = p * a;
  return (a * pa == a) && (p * ap == p) && (ap.transpose() == ap) &&
         (pa.transpose() == pa);
}

} // namespace btres

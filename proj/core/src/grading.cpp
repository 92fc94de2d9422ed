#include "btres/grading.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "btres/errors.hpp"

namespace btres {

namespace {

std::string eps_to_string(const std::vector<long>& eps) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (i) os << ',';
    os << eps[i];
  }
  os << ')';
  return os.str();
}

std::set<std::vector<long>> distinct_nonzero_eps(const Stratification& strat) {
  std::set<std::vector<long>> eps_set;
  for (const TorusCell& cell : strat.cells())
    for (const FacetIncidence& inc : strat.facet_lifts(cell.id)) {
      bool nonzero = false;
      for (long e : inc.eps)
        if (e) nonzero = true;
      if (nonzero) eps_set.insert(inc.eps);
    }
  return eps_set;
}

} // namespace

RatVec find_positive_grading(const Stratification& strat) {
  const Quadruple& q = strat.quadruple();
  auto eps_set = distinct_nonzero_eps(strat);

  RatMatrix psi_rat = q.psi.to_rat();
  std::vector<RatVec> ker = kernel_basis(psi_rat); // theta = N u
  const std::size_t m = ker.size();

  if (m == 0) {
    if (eps_set.empty()) return RatVec(q.n, Rat(0));
    throw NoPositiveGradingError(
        "no positive grading: psi^T has full image, offending eps " +
        eps_to_string(*eps_set.begin()));
  }

  std::vector<LinConstraint> cons;
  for (const auto& eps : eps_set) {
    RatVec row(m);
    for (std::size_t j = 0; j < m; ++j) {
      Rat s = 0;
      for (std::size_t i = 0; i < q.n; ++i)
        if (eps[i]) s += Rat(eps[i]) * ker[j][i];
      row[j] = -s; // -(eps . N u) <= -1
    }
    cons.push_back({std::move(row), Rel::le, Rat(-1)});
  }

  auto u = feasible_point(cons, m);
  if (!u) {
    // A single eps inside the row space of psi forces theta . eps = 0.
    for (const auto& eps : eps_set) {
      RatMatrix stacked(psi_rat.rows() + 1, q.n);
      for (std::size_t i = 0; i < psi_rat.rows(); ++i)
        for (std::size_t j = 0; j < q.n; ++j) stacked.at(i, j) = psi_rat.at(i, j);
      for (std::size_t j = 0; j < q.n; ++j) stacked.at(psi_rat.rows(), j) = Rat(eps[j]);
      if (rank(stacked) == rank(psi_rat))
        throw NoPositiveGradingError(
            "no positive grading: eps " + eps_to_string(eps) +
            " lies in the row space of psi, so theta . eps = 0");
    }
    throw NoPositiveGradingError("no positive grading: the eps constraints are jointly infeasible");
  }

  RatVec theta(q.n, Rat(0));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < q.n; ++i) theta[i] += (*u)[j] * ker[j][i];
  return theta;
}

std::size_t BettiTable::total(std::size_t degree) const {
  std::size_t t = 0;
  for (const auto& row : beta)
    if (degree < row.size()) t += row[degree];
  return t;
}

BettiTable betti_table(const std::vector<BMComplex>& classes, std::size_t top_dim) {
  BettiTable table;
  for (const BMComplex& bm : classes) {
    std::vector<std::size_t> row(top_dim + 1);
    for (std::size_t i = 0; i <= top_dim; ++i) {
      std::size_t r_out = i >= 1 ? rank(bm.d(i)) : 0;
      std::size_t r_in = i + 1 <= top_dim ? rank(bm.d(i + 1)) : 0;
      row[i] = bm.size(i) - r_out - r_in;
    }
    table.beta.push_back(std::move(row));
    table.classes.push_back(bm.cls);
  }
  return table;
}

Grading build_grading(const Stratification& strat, const LineBundleComplex& hhl) {
  const Quadruple& q = strat.quadruple();
  const std::size_t k = q.k;

  Grading g;
  g.theta = find_positive_grading(strat);
  g.group = ClassGroup(q.psi);

  // Order classes by their SNF coordinates.
  std::map<ClassId, int> class_index;
  std::vector<ClassId> cell_cls(strat.cells().size());
  for (const TorusCell& cell : strat.cells()) {
    cell_cls[cell.id] = g.group.class_of(cell.bundle_a);
    class_index.emplace(cell_cls[cell.id], 0);
  }
  {
    int next = 0;
    for (auto& [cls, idx] : class_index) idx = next++;
  }

  g.classes.resize(class_index.size());
  for (const auto& [cls, idx] : class_index) {
    g.classes[idx].cls = cls;
    g.classes[idx].class_index = idx;
    g.classes[idx].cells.assign(k + 1, {});
  }

  g.cell_class.assign(strat.cells().size(), -1);
  g.cell_pos.assign(strat.cells().size(), 0);
  for (std::size_t d = 0; d <= k; ++d)
    for (int id : strat.cells_of_dim(d)) {
      int idx = class_index.at(cell_cls[id]);
      g.cell_class[id] = idx;
      g.cell_pos[id] = g.classes[idx].cells[d].size();
      g.classes[idx].cells[d].push_back(id);
    }
  for (BMComplex& bm : g.classes) {
    int some_cell = -1;
    for (const auto& degree_cells : bm.cells)
      if (!degree_cells.empty()) some_cell = degree_cells.front();
    RatVec a(q.n);
    for (std::size_t i = 0; i < q.n; ++i) a[i] = Rat(strat.cell(some_cell).bundle_a[i]);
    bm.theta_grade = dot(g.theta, a);
  }

  // Positions of cells inside the HHL terms.
  std::vector<std::size_t> pos(strat.cells().size());
  for (std::size_t d = 0; d <= k; ++d)
    for (std::size_t j = 0; j < hhl.terms[d].size(); ++j) pos[hhl.terms[d][j].cell] = j;

  for (BMComplex& bm : g.classes) bm.differentials.assign(k, RatMatrix());
  for (std::size_t i = 1; i <= k; ++i) {
    RatMatrix constant = hhl.d(i).constant_part();
    for (BMComplex& bm : g.classes)
      bm.differentials[i - 1] =
          RatMatrix(bm.cells[i - 1].size(), bm.cells[i].size());
    for (std::size_t r = 0; r < constant.rows(); ++r)
      for (std::size_t c = 0; c < constant.cols(); ++c) {
        if (constant.at(r, c) == 0) continue;
        int row_cell = hhl.terms[i - 1][r].cell;
        int col_cell = hhl.terms[i][c].cell;
        if (g.cell_class[row_cell] != g.cell_class[col_cell])
          throw ValidationError(
              "InconsistentGrading",
              "constant entry crosses classes at d_" + std::to_string(i) + "(" +
                  std::to_string(r) + "," + std::to_string(c) + ")");
        BMComplex& bm = g.classes[g.cell_class[row_cell]];
        bm.differentials[i - 1].at(g.cell_pos[row_cell], g.cell_pos[col_cell]) =
            constant.at(r, c);
      }
  }

  g.betti = betti_table(g.classes, k);
  return g;
}

std::vector<RatVec> harmonic_basis(const BMComplex& bm, std::size_t degree) {
  const std::size_t sz = bm.size(degree);
  RatMatrix stacked(0, sz);
  if (degree >= 1 && bm.d(degree).rows() > 0)
    stacked = stacked.vstack(bm.d(degree));
  if (degree + 1 < bm.cells.size() && bm.d(degree + 1).cols() > 0)
    stacked = stacked.vstack(bm.d(degree + 1).transpose());
  if (stacked.rows() == 0) stacked = RatMatrix(1, sz); // zero map
  return kernel_basis(stacked);
}

void validate_harmonic_basis(const BMComplex& bm, std::size_t degree,
                             const std::vector<RatVec>& vectors) {
  const std::size_t sz = bm.size(degree);
  std::vector<RatVec> canonical = harmonic_basis(bm, degree);
  if (vectors.size() != canonical.size())
    throw ValidationError("BadUserBasis",
                          "harmonic basis size mismatch at degree " + std::to_string(degree));
  for (const RatVec& v : vectors) {
    if (v.size() != sz)
      throw ValidationError("BadUserBasis", "harmonic vector has wrong length");
    if (degree >= 1) {
      RatVec img = bm.d(degree).apply(v);
      for (const Rat& q : img)
        if (q != 0)
          throw ValidationError("BadUserBasis", "vector is not a cycle");
    }
    if (degree + 1 < bm.cells.size()) {
      RatVec img = bm.d(degree + 1).transpose().apply(v);
      for (const Rat& q : img)
        if (q != 0)
          throw ValidationError("BadUserBasis", "vector is not coexact-orthogonal");
    }
  }
  if (rank(RatMatrix::from_columns(sz, vectors)) != vectors.size())
    throw ValidationError("BadUserBasis", "harmonic vectors are dependent");
}

} // namespace btres

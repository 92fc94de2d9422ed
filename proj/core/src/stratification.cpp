#include "btres/stratification.hpp"

#include <algorithm>
#include <set>

#include "btres/errors.hpp"

namespace btres {

void Quadruple::validate() const {
  if (n == 0)
    throw ValidationError("Shape", "quadruple needs at least one variable");
  if (k < 1)
    throw ValidationError("Shape", "torus dimension k must be at least 1");
  if (k > 3)
    throw ValidationError("DimensionTooLarge",
                          "torus dimension k = " + std::to_string(k) +
                              " exceeds the supported bound 3");
  if (psi.rows() != k || psi.cols() != n)
    throw ValidationError("Shape", "psi must be a k x n matrix");
  if (rank(psi.to_rat()) != k)
    throw ValidationError("RankDeficient", "psi does not have full rank k");
  if (!variables.empty() && variables.size() != n)
    throw ValidationError("Shape", "variable name count differs from n");
  if (fan) {
    for (const auto& cone : *fan)
      for (int idx : cone)
        if (idx < 1 || static_cast<std::size_t>(idx) > n)
          throw ValidationError("Shape", "fan cone index out of range");
  }
}

std::vector<std::string> Quadruple::variable_names() const {
  if (!variables.empty()) return variables;
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = "x" + std::to_string(i + 1);
  return names;
}

std::vector<long> CellLabel::ceiling() const {
  std::vector<long> a(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i)
    a[i] = entries[i].eq ? entries[i].m : entries[i].m + 1;
  return a;
}

std::vector<long> ceiling_vector(const CellLabel& label) { return label.ceiling(); }

namespace {

RatVec hyperplane_coeffs(const IntMatrix& psi, std::size_t i) {
  RatVec c(psi.rows());
  for (std::size_t j = 0; j < psi.rows(); ++j) c[j] = Rat(psi.at(j, i));
  return c;
}

long pairing(const IntMatrix& psi, const std::vector<long>& lambda, std::size_t i) {
  Int s = 0;
  for (std::size_t j = 0; j < psi.rows(); ++j) s += psi.at(j, i) * lambda[j];
  return to_long(s);
}

CellLabel shifted_label(const IntMatrix& psi, const CellLabel& label,
                        const std::vector<long>& lambda) {
  CellLabel out = label;
  for (std::size_t i = 0; i < out.entries.size(); ++i)
    out.entries[i].m += pairing(psi, lambda, i);
  return out;
}

CellLabel read_label(const IntMatrix& psi, const RatVec& point) {
  CellLabel label;
  label.entries.resize(psi.cols());
  for (std::size_t i = 0; i < psi.cols(); ++i) {
    Rat v = 0;
    for (std::size_t j = 0; j < psi.rows(); ++j)
      if (psi.at(j, i) != 0) v += Rat(psi.at(j, i)) * point[j];
    if (is_integer(v)) {
      label.entries[i] = {true, to_long(Int(v.get_num()))};
    } else {
      label.entries[i] = {false, to_long(floor_int(v))};
    }
  }
  return label;
}

RatMatrix eq_rows(const IntMatrix& psi, const CellLabel& label) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < label.entries.size(); ++i)
    if (label.entries[i].eq) idx.push_back(i);
  RatMatrix m(idx.size(), psi.rows());
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t j = 0; j < psi.rows(); ++j) m.at(r, j) = Rat(psi.at(j, idx[r]));
  return m;
}

std::vector<long> primitive_integer(const RatVec& v) {
  Int lcm = 1;
  for (const Rat& q : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Int> scaled(v.size());
  Int gcd = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rat s = v[i] * Rat(lcm);
    scaled[i] = s.get_num();
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), scaled[i].get_mpz_t());
  }
  std::vector<long> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out[i] = to_long(gcd == 0 ? scaled[i] : Int(scaled[i] / gcd));
  return out;
}

IntMatrix orientation_basis(const IntMatrix& psi, const CellLabel& label) {
  const std::size_t k = psi.rows();
  RatMatrix eqs = eq_rows(psi, label);
  std::vector<RatVec> ker = kernel_basis(eqs.rows() ? eqs : RatMatrix(1, k));
  IntMatrix cols(k, ker.size());
  for (std::size_t j = 0; j < ker.size(); ++j) {
    auto prim = primitive_integer(ker[j]);
    for (std::size_t i = 0; i < k; ++i) cols.at(i, j) = prim[i];
  }
  return hermite_columns(cols);
}

} // namespace

StrictSystem Stratification::label_system(const CellLabel& label) const {
  StrictSystem sys;
  sys.dim = q_.k;
  for (std::size_t i = 0; i < label.entries.size(); ++i) {
    RatVec c = hyperplane_coeffs(q_.psi, i);
    if (label.entries[i].eq) {
      sys.equalities.emplace_back(std::move(c), Rat(label.entries[i].m));
    } else {
      sys.bands.push_back(
          {std::move(c), Rat(label.entries[i].m), Rat(label.entries[i].m + 1)});
    }
  }
  return sys;
}

Stratification Stratification::enumerate(const Quadruple& q) {
  q.validate();
  Stratification s;
  s.q_ = q;
  const std::size_t n = q.n, k = q.k;

  // Offset windows: range of H_i over the closed unit cube padded by 1, so no
  // lift with an interior point in [0,1)^k can be missed.
  std::vector<long> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    Int mn = 0, mx = 0;
    for (std::size_t j = 0; j < k; ++j) {
      const Int& e = q.psi.at(j, i);
      if (e < 0) mn += e;
      if (e > 0) mx += e;
    }
    lo[i] = to_long(mn) - 1;
    hi[i] = to_long(mx) + 1;
  }

  std::set<CellLabel> canonical;
  std::vector<LinConstraint> partial;
  CellLabel label;
  label.entries.resize(n);

  auto canonicalize_leaf = [&]() {
    auto point = feasible_interior_point(s.label_system(label));
    if (!point)
      throw ValidationError("Internal", "enumerated label lost feasibility");
    std::vector<long> lambda(k);
    for (std::size_t j = 0; j < k; ++j) lambda[j] = -to_long(floor_int((*point)[j]));
    canonical.insert(shifted_label(q.psi, label, lambda));
  };

  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      canonicalize_leaf();
      return;
    }
    RatVec c = hyperplane_coeffs(q.psi, i);
    auto iv = linear_range(partial, k, c);
    if (!iv) return;
    for (long m = lo[i]; m <= hi[i]; ++m) {
      bool eq_ok =
          (!iv->has_lo || Rat(m) > iv->lo || (Rat(m) == iv->lo && !iv->lo_strict)) &&
          (!iv->has_hi || Rat(m) < iv->hi || (Rat(m) == iv->hi && !iv->hi_strict));
      if (eq_ok) {
        label.entries[i] = {true, m};
        partial.push_back({c, Rel::eq, Rat(m)});
        self(self, i + 1);
        partial.pop_back();
      }
      // The open band (m, m+1) meets the attained range iff m < sup and
      // m+1 > inf; convexity makes every such branch feasible.
      bool band_ok =
          (!iv->has_hi || Rat(m) < iv->hi) && (!iv->has_lo || Rat(m + 1) > iv->lo);
      if (band_ok) {
        label.entries[i] = {false, m};
        RatVec neg(c.size());
        for (std::size_t j = 0; j < c.size(); ++j) neg[j] = -c[j];
        partial.push_back({neg, Rel::lt, Rat(-m)});
        partial.push_back({c, Rel::lt, Rat(m + 1)});
        self(self, i + 1);
        partial.pop_back();
        partial.pop_back();
      }
    }
  };
  rec(rec, 0);

  struct Pending {
    CellLabel label;
    std::size_t dim;
  };
  std::vector<Pending> pending;
  for (const CellLabel& lab : canonical)
    pending.push_back({lab, k - rank(eq_rows(q.psi, lab))});
  std::stable_sort(pending.begin(), pending.end(),
                   [](const Pending& a, const Pending& b) {
                     if (a.dim != b.dim) return a.dim < b.dim;
                     return a.label < b.label;
                   });

  s.by_dim_.assign(k + 1, {});
  for (Pending& p : pending) {
    TorusCell cell;
    cell.id = static_cast<int>(s.cells_.size());
    cell.dim = p.dim;
    cell.bundle_a = p.label.ceiling();
    cell.orientation = orientation_basis(q.psi, p.label);
    auto point = feasible_interior_point(s.label_system(p.label));
    if (!point)
      throw ValidationError("Internal", "canonical label lost feasibility");
    cell.interior_point = *point;
    cell.label = std::move(p.label);
    s.index_[cell.label] = cell.id;
    s.by_dim_[p.dim].push_back(cell.id);
    s.cells_.push_back(std::move(cell));
  }

  s.build_facets();
  return s;
}

void Stratification::build_facets() {
  const std::size_t n = q_.n, k = q_.k;
  facets_.assign(cells_.size(), {});

  for (const TorusCell& cell : cells_) {
    if (cell.dim == 0) continue;
    std::set<CellLabel> lifts_found;

    for (std::size_t i = 0; i < n; ++i) {
      if (cell.label.entries[i].eq) continue;
      for (long c : {cell.label.entries[i].m, cell.label.entries[i].m + 1}) {
        // Closed face: pin H_i = c, relax the other open bands to closed.
        std::vector<LinConstraint> closed;
        for (std::size_t j = 0; j < n; ++j) {
          RatVec coeff = hyperplane_coeffs(q_.psi, j);
          const LabelEntry& e = cell.label.entries[j];
          if (j == i) {
            closed.push_back({coeff, Rel::eq, Rat(c)});
          } else if (e.eq) {
            closed.push_back({coeff, Rel::eq, Rat(e.m)});
          } else {
            RatVec negc(coeff.size());
            for (std::size_t l = 0; l < coeff.size(); ++l) negc[l] = -coeff[l];
            closed.push_back({negc, Rel::le, Rat(-e.m)});
            closed.push_back({coeff, Rel::le, Rat(e.m + 1)});
          }
        }
        auto point = feasible_point(closed, k);
        if (!point) continue;
        // The FM midpoint is a relative-interior point of the closed face, so
        // the label it reads is the face's own cell label.
        CellLabel lift = read_label(q_.psi, *point);
        if (k - rank(eq_rows(q_.psi, lift)) == cell.dim - 1) lifts_found.insert(lift);
      }
    }

    RatMatrix parent_basis = cell.orientation.to_rat();
    for (const CellLabel& lift : lifts_found) {
      auto [child_id, lambda] = locate(lift);
      const TorusCell& child = cells_[child_id];

      std::vector<long> lift_ceiling = lift.ceiling();
      std::vector<long> eps(n);
      for (std::size_t i = 0; i < n; ++i) {
        eps[i] = cell.bundle_a[i] - lift_ceiling[i];
        if (eps[i] != 0 && eps[i] != 1)
          throw ValidationError("Internal", "ceiling difference outside {0,1}");
      }

      auto lift_point = feasible_interior_point(label_system(lift));
      if (!lift_point)
        throw ValidationError("Internal", "facet lift label infeasible");

      // Outward vector first, then the child's orientation, expressed in the
      // parent's orientation coordinates; the determinant sign is the
      // incidence sign.
      RatMatrix rhs(k, cell.dim);
      for (std::size_t j = 0; j < k; ++j)
        rhs.at(j, 0) = (*lift_point)[j] - cell.interior_point[j];
      for (std::size_t col = 0; col + 1 < cell.dim; ++col)
        for (std::size_t j = 0; j < k; ++j)
          rhs.at(j, col + 1) = Rat(child.orientation.at(j, col));
      RatMatrix coords = solve_matrix(parent_basis, rhs);
      Rat det = determinant(coords);
      if (det == 0)
        throw ValidationError("Internal", "degenerate orientation determinant");

      FacetIncidence inc;
      inc.parent = cell.id;
      inc.child = child_id;
      inc.shift = lambda;
      inc.eps = std::move(eps);
      inc.sign = det > 0 ? 1 : -1;
      facets_[cell.id].push_back(std::move(inc));
    }

    std::sort(facets_[cell.id].begin(), facets_[cell.id].end(),
              [](const FacetIncidence& a, const FacetIncidence& b) {
                if (a.child != b.child) return a.child < b.child;
                return a.shift < b.shift;
              });
  }
}

std::pair<int, std::vector<long>> Stratification::locate(const CellLabel& lift) const {
  auto point = feasible_interior_point(label_system(lift));
  if (!point)
    throw ValidationError("Internal", "locate: infeasible label");
  std::vector<long> lambda(q_.k);
  for (std::size_t j = 0; j < q_.k; ++j) lambda[j] = to_long(floor_int((*point)[j]));
  std::vector<long> neg(lambda.size());
  for (std::size_t j = 0; j < lambda.size(); ++j) neg[j] = -lambda[j];
  CellLabel canon = shifted_label(q_.psi, lift, neg);
  auto it = index_.find(canon);
  if (it == index_.end())
    throw ValidationError("Internal", "locate: label not in stratification");
  return {it->second, lambda};
}

CellLabel Stratification::label_at(const RatVec& point) const {
  if (point.size() != q_.k)
    throw ValidationError("Shape", "point dimension mismatch");
  return read_label(q_.psi, point);
}

int Stratification::cell_at(const RatVec& point) const {
  return locate(label_at(point)).first;
}

long Stratification::euler_characteristic() const {
  long chi = 0;
  for (const TorusCell& c : cells_) chi += (c.dim % 2 == 0) ? 1 : -1;
  return chi;
}

std::string Stratification::cell_name(int id) const {
  static const char letters[] = {'V', 'E', 'F', 'C'};
  const TorusCell& c = cells_.at(id);
  const auto& peers = by_dim_.at(c.dim);
  auto pos = std::find(peers.begin(), peers.end(), id) - peers.begin();
  return std::string(1, letters[c.dim]) + std::to_string(pos + 1);
}

std::optional<int> Stratification::cell_by_name(const std::string& name) const {
  if (name.size() < 2) return std::nullopt;
  std::size_t dim;
  switch (name[0]) {
    case 'V': dim = 0; break;
    case 'E': dim = 1; break;
    case 'F': dim = 2; break;
    case 'C': dim = 3; break;
    default: return std::nullopt;
  }
  if (dim >= by_dim_.size()) return std::nullopt;
  std::size_t idx = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
    idx = idx * 10 + static_cast<std::size_t>(name[i] - '0');
  }
  if (idx < 1 || idx > by_dim_[dim].size()) return std::nullopt;
  return by_dim_[dim][idx - 1];
}

} // namespace btres

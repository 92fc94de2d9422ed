#include "btres/report.hpp"

#include <sstream>

namespace btres {

namespace {

std::string vec_to_string(const std::vector<long>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

std::string point_to_string(const RatVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << rat_to_string(v[i]);
  }
  os << ')';
  return os.str();
}

std::string label_to_string(const CellLabel& label) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < label.entries.size(); ++i) {
    if (i) os << ',';
    const LabelEntry& e = label.entries[i];
    if (e.eq)
      os << 'H' << i + 1 << '=' << e.m;
    else
      os << e.m << "<H" << i + 1 << '<' << e.m + 1;
  }
  os << ')';
  return os.str();
}

void print_poly_matrix(std::ostringstream& os, const PolyMatrix& m,
                       const std::vector<std::string>& names,
                       const std::vector<std::string>& row_labels) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "  ";
    if (i < row_labels.size()) os << row_labels[i] << ": ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << m.at(i, j).to_string(names);
    }
    os << '\n';
  }
}

} // namespace

std::string emit_report_cells(const Stratification& strat, const ClassGroup& group) {
  std::ostringstream os;
  os << "[cells]\n";
  os << "count:";
  for (std::size_t d = 0; d <= strat.top_dim(); ++d)
    os << ' ' << strat.cells_of_dim(d).size();
  os << "\neuler: " << strat.euler_characteristic() << '\n';
  for (const TorusCell& cell : strat.cells()) {
    os << strat.cell_name(cell.id) << " dim=" << cell.dim
       << " label=" << label_to_string(cell.label) << " a=" << vec_to_string(cell.bundle_a)
       << " class=" << group.class_of(cell.bundle_a).to_string()
       << " point=" << point_to_string(cell.interior_point) << '\n';
  }

  os << "[classes]\n";
  std::map<ClassId, std::vector<int>> partition;
  for (const TorusCell& cell : strat.cells())
    partition[group.class_of(cell.bundle_a)].push_back(cell.id);
  for (const auto& [cls, members] : partition) {
    os << cls.to_string() << ':';
    for (int id : members) os << ' ' << strat.cell_name(id);
    os << '\n';
  }
  return os.str();
}

std::string emit_report_hhl(const Stratification& strat, const LineBundleComplex& hhl) {
  std::ostringstream os;
  auto names = strat.quadruple().variable_names();
  os << "[hhl]\n";
  os << "terms:";
  for (std::size_t d = 0; d <= hhl.length; ++d) os << ' ' << hhl.terms[d].size();
  os << '\n';
  for (std::size_t i = 1; i <= hhl.length; ++i) {
    const PolyMatrix& m = hhl.d(i);
    os << "d" << i << ": " << m.rows() << 'x' << m.cols() << " cols=";
    for (std::size_t j = 0; j < hhl.terms[i].size(); ++j) {
      if (j) os << ',';
      os << strat.cell_name(hhl.terms[i][j].cell);
    }
    os << '\n';
    std::vector<std::string> rows;
    for (const Generator& g : hhl.terms[i - 1]) rows.push_back(strat.cell_name(g.cell));
    print_poly_matrix(os, m, names, rows);
  }
  ComplexReport rep = verify_complex(hhl);
  os << "complex: " << (rep.ok ? "d^2 = 0" : rep.message) << '\n';
  return os.str();
}

std::string emit_report_betti(const Grading& grading) {
  std::ostringstream os;
  os << "[betti]\n";
  os << "theta:";
  for (const Rat& t : grading.theta) os << ' ' << rat_to_string(t);
  os << '\n';
  for (std::size_t c = 0; c < grading.classes.size(); ++c) {
    os << "class " << grading.classes[c].cls.to_string() << ':';
    for (std::size_t i = 0; i < grading.betti.beta[c].size(); ++i)
      os << " b" << i << '=' << grading.betti.beta[c][i];
    os << '\n';
  }
  os << "totals:";
  for (std::size_t i = 0; !grading.betti.beta.empty() && i < grading.betti.beta[0].size(); ++i)
    os << ' ' << grading.betti.total(i);
  os << '\n';
  return os.str();
}

std::string emit_report_minres(const Pipeline& pl) {
  std::ostringstream os;
  auto names = pl.quadruple.variable_names();
  os << "[minimal resolution]\n";
  for (std::size_t i = 0; i <= pl.minimal.complex.length; ++i) {
    os << "term " << i << ':';
    if (pl.minimal.complex.terms[i].empty()) os << " 0";
    for (const Generator& g : pl.minimal.complex.terms[i]) {
      os << " O" << pl.grading.classes[g.class_index].cls.to_string() << " a="
         << vec_to_string(g.bundle_a);
    }
    os << '\n';
  }
  for (std::size_t i = 1; i <= pl.minimal.complex.length; ++i) {
    const PolyMatrix& m = pl.minimal.complex.d(i);
    os << "d_min" << i << ": " << m.rows() << 'x' << m.cols() << '\n';
    print_poly_matrix(os, m, names, {});
  }
  os << "minimal: " << (verify_minimality(pl.perturbed.d_min) ? "yes" : "NO") << '\n';
  return os.str();
}

std::string emit_report_identities(const IdentityReport& report) {
  std::ostringstream os;
  os << "[identities]\n";
  for (const auto& item : report.items) {
    os << (item.ok ? "pass" : "FAIL") << ": " << item.name;
    if (!item.ok) os << " (" << item.witness << ')';
    os << '\n';
  }
  os << "all: " << (report.all_ok ? "pass" : "FAIL") << '\n';
  return os.str();
}

std::string emit_report_paths(const Stratification& strat, const PathOracle& oracle,
                              int sigma, int tau,
                              const std::vector<std::string>& varnames) {
  std::ostringstream os;
  os << "[paths " << strat.cell_name(sigma) << " -> " << strat.cell_name(tau) << "]\n";
  auto paths = oracle.enumerate_paths(sigma, tau);
  os << "count: " << paths.size() << '\n';
  for (std::size_t p = 0; p < paths.size(); ++p) {
    const ZigZagPath& path = paths[p];
    os << "path " << p + 1 << " (length " << path.length() << "): ";
    std::size_t hi = 0, mi = 0;
    for (std::size_t c = 0; c < path.cells.size(); ++c) {
      os << strat.cell_name(path.cells[c]);
      if (c + 1 < path.cells.size()) {
        if (c % 2 == 0)
          os << " -(" << path.hhl_weights[hi++].to_string(varnames) << ")-> ";
        else
          os << " =(" << rat_to_string(path.mp_weights[mi++]) << ")=> ";
      }
    }
    os << '\n';
  }
  os << "sigma: " << oracle.sigma_via_paths(sigma, tau).to_string(varnames) << '\n';
  return os.str();
}

std::string emit_matrices_text(const Stratification& strat, const LineBundleComplex& hhl,
                               const std::vector<PolyMatrix>* d_min) {
  std::ostringstream os;
  auto names = strat.quadruple().variable_names();
  for (std::size_t i = 1; i <= hhl.length; ++i) {
    const PolyMatrix& m = hhl.d(i);
    os << "d" << i << ' ' << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (c) os << " | ";
        os << m.at(r, c).to_string(names);
      }
      os << '\n';
    }
  }
  if (d_min) {
    for (std::size_t i = 0; i < d_min->size(); ++i) {
      const PolyMatrix& m = (*d_min)[i];
      os << "dmin" << i + 1 << ' ' << m.rows() << ' ' << m.cols() << '\n';
      for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
          if (c) os << " | ";
          os << m.at(r, c).to_string(names);
        }
        os << '\n';
      }
    }
  }
  return os.str();
}

std::string emit_m2(const Pipeline& pl) {
  std::ostringstream os;
  auto names = pl.quadruple.variable_names();
  const std::size_t n = pl.quadruple.n;
  os << "-- generated by btres; exact matrices over QQ\n";
  os << "R = QQ[";
  for (std::size_t i = 0; i < n; ++i) {
    if (i) os << ',';
    os << names[i];
  }
  os << ", Degrees => {";
  for (std::size_t i = 0; i < n; ++i) {
    if (i) os << ',';
    std::vector<long> e(n, 0);
    e[i] = 1;
    ClassId cls = pl.grading.group.class_of(e);
    os << '{';
    if (cls.free_part.empty()) {
      os << 0;
    } else {
      for (std::size_t j = 0; j < cls.free_part.size(); ++j) {
        if (j) os << ',';
        os << cls.free_part[j];
      }
    }
    os << '}';
  }
  os << "}];\n";

  auto emit_matrix = [&](const std::string& name, const PolyMatrix& m) {
    os << name << " = map(R^" << m.rows() << ", R^" << m.cols() << ", matrix{";
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r) os << ',';
      os << '{';
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (c) os << ',';
        std::string s = m.at(r, c).to_string(names);
        os << (s == "0" ? "0_R" : s);
      }
      os << '}';
    }
    os << "});\n";
  };

  for (std::size_t i = 1; i <= pl.hhl.length; ++i)
    emit_matrix("d" + std::to_string(i), pl.hhl.d(i));
  for (std::size_t i = 1; i + 1 <= pl.hhl.length; ++i)
    os << "assert(d" << i << " * d" << i + 1 << " == 0);\n";
  for (std::size_t i = 1; i <= pl.minimal.complex.length; ++i)
    emit_matrix("dmin" + std::to_string(i), pl.minimal.complex.d(i));
  for (std::size_t i = 1; i + 1 <= pl.minimal.complex.length; ++i)
    os << "assert(dmin" << i << " * dmin" << i + 1 << " == 0);\n";
  return os.str();
}

} // namespace btres

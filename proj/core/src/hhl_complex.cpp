#include "btres/hhl_complex.hpp"

#include "btres/errors.hpp"

namespace btres {

LineBundleComplex build_hhl_complex(const Stratification& strat) {
  const std::size_t k = strat.top_dim();
  const std::size_t n = strat.quadruple().n;

  LineBundleComplex c;
  c.length = k;
  c.nvars = n;
  c.terms.resize(k + 1);

  // Position of each cell inside its degree; cell order is already canonical.
  std::vector<std::size_t> pos(strat.cells().size());
  for (std::size_t d = 0; d <= k; ++d) {
    for (int id : strat.cells_of_dim(d)) {
      pos[id] = c.terms[d].size();
      c.terms[d].push_back({id, strat.cell(id).bundle_a, -1});
    }
  }

  for (std::size_t d = 1; d <= k; ++d) {
    PolyMatrix m(c.terms[d - 1].size(), c.terms[d].size(), n);
    for (std::size_t col = 0; col < c.terms[d].size(); ++col) {
      int sigma = c.terms[d][col].cell;
      for (const FacetIncidence& inc : strat.facet_lifts(sigma)) {
        Exponents e(n);
        for (std::size_t i = 0; i < n; ++i) e[i] = static_cast<int>(inc.eps[i]);
        m.at(pos[inc.child], col) =
            m.at(pos[inc.child], col) + Poly::monomial(n, e, Rat(inc.sign));
      }
    }
    c.differentials.push_back(std::move(m));
  }
  return c;
}

ComplexReport verify_complex(const LineBundleComplex& c) {
  ComplexReport rep;
  for (std::size_t i = 1; i + 1 <= c.length; ++i) {
    PolyMatrix prod = c.d(i) * c.d(i + 1);
    if (prod.is_zero()) continue;
    for (std::size_t r = 0; r < prod.rows(); ++r)
      for (std::size_t col = 0; col < prod.cols(); ++col)
        if (!prod.at(r, col).is_zero()) {
          rep.ok = false;
          rep.degree = i;
          rep.row = r;
          rep.col = col;
          rep.message = "d_" + std::to_string(i) + " * d_" + std::to_string(i + 1) +
                        " has nonzero entry (" + std::to_string(r) + "," +
                        std::to_string(col) + ") = " + prod.at(r, col).to_string();
          return rep;
        }
  }
  return rep;
}

void require_complex(const LineBundleComplex& c) {
  ComplexReport rep = verify_complex(c);
  if (!rep.ok) throw VerificationError("NotAComplex", rep.message);
}

} // namespace btres

#include "btres/zigzag.hpp"

#include "btres/errors.hpp"

namespace btres {

Poly ZigZagPath::weight() const {
  if (hhl_weights.empty()) return Poly();
  Poly w = hhl_weights.front();
  for (std::size_t i = 1; i < hhl_weights.size(); ++i) {
    w = w.scaled(mp_weights[i - 1]);
    w = w * hhl_weights[i];
  }
  return w;
}

PathOracle::PathOracle(const Stratification& strat, const LineBundleComplex& hhl,
                       const Grading& grading, const Contraction& contraction)
    : strat_(strat), hhl_(hhl), grading_(grading), contraction_(contraction) {
  pos_.assign(1, {});
  std::vector<std::size_t> flat(strat.cells().size());
  for (const auto& term : hhl.terms)
    for (std::size_t j = 0; j < term.size(); ++j) flat[term[j].cell] = j;
  pos_[0] = std::move(flat);
}

Poly PathOracle::entry(int sigma, int tau) const {
  const std::size_t d = strat_.cell(sigma).dim;
  return hhl_.d(d).at(pos_[0][tau], pos_[0][sigma]);
}

Rat PathOracle::splitting_entry(int sigma, int tau) const {
  int cls = grading_.cell_class[tau];
  const RatMatrix& kappa = contraction_.blocks[cls][strat_.cell(tau).dim];
  return kappa.at(grading_.cell_pos[sigma], grading_.cell_pos[tau]);
}

PairClass PathOracle::classify_pair(int sigma, int tau) const {
  const TorusCell& s = strat_.cell(sigma);
  const TorusCell& t = strat_.cell(tau);
  if (s.dim != t.dim + 1) return PairClass::not_adjacent;
  bool adjacent = false;
  for (const FacetIncidence& inc : strat_.facet_lifts(sigma))
    if (inc.child == tau) adjacent = true;
  if (!adjacent) return PairClass::not_adjacent;
  return grading_.cell_class[sigma] == grading_.cell_class[tau] ? PairClass::type_ii
                                                                : PairClass::type_i;
}

Poly PathOracle::hhl_weight(int sigma, int tau) const {
  if (classify_pair(sigma, tau) != PairClass::type_i)
    throw ValidationError("NotTypeI", "pair (" + strat_.cell_name(sigma) + "," +
                                          strat_.cell_name(tau) + ") is not type I");
  return entry(sigma, tau);
}

Rat PathOracle::mp_weight(int sigma, int tau) const {
  const TorusCell& s = strat_.cell(sigma);
  const TorusCell& t = strat_.cell(tau);
  if (s.dim != t.dim + 1 || grading_.cell_class[sigma] != grading_.cell_class[tau])
    throw ValidationError("NotTypeII", "pair (" + strat_.cell_name(sigma) + "," +
                                           strat_.cell_name(tau) + ") is not type II");
  return splitting_entry(sigma, tau);
}

std::vector<ZigZagPath> PathOracle::enumerate_paths(int sigma, int tau) const {
  const TorusCell& s = strat_.cell(sigma);
  const TorusCell& t = strat_.cell(tau);
  if (s.dim != t.dim + 1)
    throw ValidationError("Shape", "path endpoints must have adjacent dimensions");

  std::vector<ZigZagPath> out;
  ZigZagPath current;
  current.cells.push_back(sigma);

  const std::size_t d = s.dim;
  auto rec = [&](auto&& self, int top) -> void {
    // Type I steps: every nonzero different-class entry of the column of top.
    for (std::size_t row = 0; row < hhl_.terms[d - 1].size(); ++row) {
      int child = hhl_.terms[d - 1][row].cell;
      if (grading_.cell_class[child] == grading_.cell_class[top]) continue;
      Poly w = hhl_.d(d).at(row, pos_[0][top]);
      if (w.is_zero()) continue;

      current.cells.push_back(child);
      current.hhl_weights.push_back(w);
      if (child == tau) out.push_back(current);

      // Type II continuations: same class one dimension up, nonzero weight.
      int cls = grading_.cell_class[child];
      for (int up : grading_.classes[cls].cells[d]) {
        Rat mp = splitting_entry(up, child);
        if (mp == 0) continue;
        current.cells.push_back(up);
        current.mp_weights.push_back(mp);
        self(self, up);
        current.cells.pop_back();
        current.mp_weights.pop_back();
      }
      current.cells.pop_back();
      current.hhl_weights.pop_back();
    }
  };
  rec(rec, sigma);
  return out;
}

const Poly& PathOracle::sigma_memo(int sigma, int tau) const {
  auto key = std::make_pair(sigma, tau);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  const std::size_t n = hhl_.nvars;
  Poly acc(n);
  const std::size_t d = strat_.cell(sigma).dim;
  if (grading_.cell_class[sigma] != grading_.cell_class[tau]) {
    for (std::size_t row = 0; row < hhl_.terms[d - 1].size(); ++row) {
      int child = hhl_.terms[d - 1][row].cell;
      if (grading_.cell_class[child] == grading_.cell_class[sigma]) continue;
      Poly w = hhl_.d(d).at(row, pos_[0][sigma]);
      if (w.is_zero()) continue;
      if (child == tau) acc = acc + w;
      int cls = grading_.cell_class[child];
      for (int up : grading_.classes[cls].cells[d]) {
        Rat mp = splitting_entry(up, child);
        if (mp == 0) continue;
        const Poly& rest = sigma_memo(up, tau);
        if (rest.is_zero()) continue;
        acc = acc - (w * rest).scaled(mp);
      }
    }
  }
  return memo_.emplace(key, std::move(acc)).first->second;
}

Poly PathOracle::sigma_via_paths(int sigma, int tau) const {
  const TorusCell& s = strat_.cell(sigma);
  const TorusCell& t = strat_.cell(tau);
  if (s.dim != t.dim + 1)
    throw ValidationError("Shape", "path endpoints must have adjacent dimensions");
  return sigma_memo(sigma, tau);
}

PathOracle::CrosscheckReport PathOracle::crosscheck_sigma(const Perturbed& pert) const {
  CrosscheckReport rep;
  for (std::size_t i = 1; i <= hhl_.length; ++i) {
    const PolyMatrix& alg = pert.sigma[i - 1];
    for (std::size_t col = 0; col < alg.cols(); ++col) {
      int sigma = hhl_.terms[i][col].cell;
      for (std::size_t row = 0; row < alg.rows(); ++row) {
        int tau = hhl_.terms[i - 1][row].cell;
        Poly combinatorial = sigma_via_paths(sigma, tau);
        if (!(combinatorial == alg.at(row, col))) {
          rep.ok = false;
          rep.sigma = sigma;
          rep.tau = tau;
          rep.message = "Sigma mismatch at (" + strat_.cell_name(sigma) + " -> " +
                        strat_.cell_name(tau) + "): paths give " +
                        combinatorial.to_string() + ", algebra gives " +
                        alg.at(row, col).to_string();
          return rep;
        }
      }
    }
  }
  return rep;
}

} // namespace btres

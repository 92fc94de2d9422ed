#ifndef BTRES_ZIGZAG_HPP
#define BTRES_ZIGZAG_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "btres/grading.hpp"
#include "btres/hhl_complex.hpp"
#include "btres/perturbation.hpp"
#include "btres/poly.hpp"

namespace btres {

enum class PairClass { type_i, type_ii, not_adjacent };

// Zig-zag path sigma = sigma_0 -> tau_0 -> sigma_1 -> ... -> tau_m = tau:
// each (sigma_j, tau_j) is type I (facet step, strictly theta-decreasing
// class), each (sigma_{j+1}, tau_j) is type II (same class, weight from the
// contraction splitting). Length = number of type II pairs.
struct ZigZagPath {
  std::vector<int> cells; // sigma_0, tau_0, sigma_1, ..., tau_m
  std::vector<Poly> hhl_weights;
  std::vector<Rat> mp_weights;
  std::size_t length() const { return mp_weights.size(); }
  Poly weight() const; // product of all step weights (no sign)
};

// Combinatorial evaluation of Sigma as signed path sums, cross-checking the
// algebraic perturbation engine. Weights for type II steps come from the
// contraction splitting (Moore-Penrose blocks by default, per the pluggable
// weight source).
class PathOracle {
public:
  PathOracle(const Stratification& strat, const LineBundleComplex& hhl,
             const Grading& grading, const Contraction& contraction);

  PairClass classify_pair(int sigma, int tau) const;

  // (tau, sigma) entry of the HHL differential; NotTypeI unless type I.
  Poly hhl_weight(int sigma, int tau) const;

  // Coefficient of sigma in the splitting applied to tau; NotTypeII unless
  // the pair shares a class at adjacent dimensions.
  Rat mp_weight(int sigma, int tau) const;

  // All paths with nonzero step weights; finite because type I steps strictly
  // decrease the theta grade.
  std::vector<ZigZagPath> enumerate_paths(int sigma, int tau) const;

  // Signed path sum: Sigma_{sigma,tau} = sum (-1)^length * weight.
  Poly sigma_via_paths(int sigma, int tau) const;

  struct CrosscheckReport {
    bool ok = true;
    int sigma = -1, tau = -1;
    std::string message;
  };
  // Entrywise comparison of the path sums against the algebraic Sigma.
  CrosscheckReport crosscheck_sigma(const Perturbed& pert) const;

private:
  const Stratification& strat_;
  const LineBundleComplex& hhl_;
  const Grading& grading_;
  const Contraction& contraction_;
  std::vector<std::size_t> pos_; // cell id -> column inside its term
  mutable std::map<std::pair<int, int>, Poly> memo_;

  Poly entry(int sigma, int tau) const; // (tau,sigma) entry of d
  Rat splitting_entry(int sigma, int tau) const;
  const Poly& sigma_memo(int sigma, int tau) const;
};

} // namespace btres

#endif

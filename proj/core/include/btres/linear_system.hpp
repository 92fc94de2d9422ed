#ifndef BTRES_LINEAR_SYSTEM_HPP
#define BTRES_LINEAR_SYSTEM_HPP

#include <optional>
#include <vector>

#include "btres/rational.hpp"

namespace btres {

enum class Rel { eq, le, lt };

// One affine condition: coeff . x REL rhs.
struct LinConstraint {
  RatVec coeff;
  Rel rel = Rel::le;
  Rat rhs;
};

// Equalities plus two-sided strict inequalities, the shape cut out by the
// relative interior of one stratum: lower < coeff . x < upper.
struct StrictSystem {
  std::size_t dim = 0;
  std::vector<std::pair<RatVec, Rat>> equalities;
  struct Band {
    RatVec coeff;
    Rat lower;
    Rat upper;
  };
  std::vector<Band> bands;

  std::vector<LinConstraint> constraints() const;
};

// Exact one-dimensional interval, possibly unbounded on either side.
struct Interval {
  bool has_lo = false, has_hi = false;
  bool lo_strict = false, hi_strict = false;
  Rat lo, hi;

  bool empty() const;
  // Deterministic representative: midpoint when bounded, unit step inward
  // from a single bound, 0 when unconstrained. nullopt when empty.
  std::optional<Rat> pick() const;
};

// Exact feasibility of a mixed strict/non-strict system by Gaussian
// substitution on the equalities followed by Fourier-Motzkin elimination.
// Deterministic: pivots and elimination order depend only on indices, never
// on entry values, which makes the returned point translation-covariant.
// Returns an exact feasible point (relative-interior for closed systems via
// midpoint back-substitution) or nullopt.
std::optional<RatVec> feasible_point(const std::vector<LinConstraint>& constraints,
                                     std::size_t dim);

// Spec surface: interior point of a StrictSystem.
std::optional<RatVec> feasible_interior_point(const StrictSystem& system);

// Exact range of the linear functional c . x over the feasible set.
// nullopt when the system is infeasible.
std::optional<Interval> linear_range(const std::vector<LinConstraint>& constraints,
                                     std::size_t dim, const RatVec& c);

} // namespace btres

#endif

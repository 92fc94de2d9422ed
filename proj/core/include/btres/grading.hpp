#ifndef BTRES_GRADING_HPP
#define BTRES_GRADING_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "btres/class_group.hpp"
#include "btres/hhl_complex.hpp"
#include "btres/rat_matrix.hpp"
#include "btres/stratification.hpp"

namespace btres {

// A rational functional vanishing on im(psi^T) with theta . eps >= 1 for
// every nonzero exponent vector occurring in a facet incidence; the
// certificate that the class filtration is strictly compatible with the
// differential. Throws NoPositiveGradingError when none exists, naming a
// single offending eps when one lies in the row space of psi.
RatVec find_positive_grading(const Stratification& strat);

// Integer chain complex of the cells of one class (the associated graded
// piece); its differentials are the same-class blocks of the constant part
// of the HHL differential.
struct BMComplex {
  ClassId cls;
  int class_index = -1;
  Rat theta_grade;
  std::vector<std::vector<int>> cells;       // per degree 0..k: torus cell ids
  std::vector<RatMatrix> differentials;      // d[i]: degree i+1 -> i? use d()

  const RatMatrix& d(std::size_t i) const { return differentials.at(i - 1); }
  std::size_t size(std::size_t degree) const { return cells.at(degree).size(); }
};

struct BettiTable {
  // beta[class_index][degree]
  std::vector<std::vector<std::size_t>> beta;
  std::vector<ClassId> classes;

  std::size_t total(std::size_t degree) const;
};

// The whole graded structure attached to an HHL complex.
struct Grading {
  ClassGroup group;
  RatVec theta;
  std::vector<BMComplex> classes;            // ordered by ClassId
  std::vector<int> cell_class;               // cell id -> class index
  std::vector<std::size_t> cell_pos;         // position inside (class, degree)
  BettiTable betti;
};

// Computes classes, positive grading, per-class Borel-Moore complexes and the
// Betti table, checking that the constant part of d is block-diagonal with
// respect to the class partition (InconsistentGrading otherwise).
Grading build_grading(const Stratification& strat, const LineBundleComplex& hhl);

// Per-class Betti numbers by exact ranks.
BettiTable betti_table(const std::vector<BMComplex>& classes, std::size_t top_dim);

// Canonical harmonic basis at one degree: RREF kernel of the stacked matrix
// [d_i; d_{i+1}^T].
std::vector<RatVec> harmonic_basis(const BMComplex& bm, std::size_t degree);

// Validates a user-supplied basis: harmonic, independent, correct count.
// Throws ValidationError("BadUserBasis") otherwise.
void validate_harmonic_basis(const BMComplex& bm, std::size_t degree,
                             const std::vector<RatVec>& vectors);

} // namespace btres

#endif

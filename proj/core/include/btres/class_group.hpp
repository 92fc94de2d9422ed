#ifndef BTRES_CLASS_GROUP_HPP
#define BTRES_CLASS_GROUP_HPP

#include <compare>
#include <string>
#include <vector>

#include "btres/int_matrix.hpp"
#include "btres/rational.hpp"

namespace btres {

// Coordinates of a mod im(psi^T) in Smith-normal-form coordinates: the free
// part lives in Z^(n-k), the torsion residues in [0, d_t) for invariant
// factors d_t > 1. Deck-invariant by construction.
struct ClassId {
  std::vector<long> free_part;
  std::vector<long> torsion;

  auto operator<=>(const ClassId&) const = default;
  std::string to_string() const;
};

// The quotient Z^n / im(psi^T), presented by the Smith normal form of psi^T.
class ClassGroup {
public:
  ClassGroup() = default;
  explicit ClassGroup(const IntMatrix& psi);

  std::size_t n() const { return n_; }
  std::size_t free_rank() const { return n_ - rank_; }
  const std::vector<Int>& torsion_factors() const { return torsion_factors_; }

  ClassId class_of(const std::vector<long>& a) const;
  // Deterministic integer section: representative(class_of(a)) maps to the
  // same class as a.
  std::vector<long> representative(const ClassId& id) const;

private:
  std::size_t n_ = 0;
  std::size_t rank_ = 0;
  IntMatrix u_, u_inv_;            // U * psi^T * V = D
  std::vector<Int> diag_;          // invariant factors d_1..d_rank
  std::vector<Int> torsion_factors_; // the d_t > 1
  std::vector<std::size_t> torsion_slots_;
};

} // namespace btres

#endif

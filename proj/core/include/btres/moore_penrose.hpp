#ifndef BTRES_MOORE_PENROSE_HPP
#define BTRES_MOORE_PENROSE_HPP

#include <cstddef>
#include <vector>

#include "btres/rat_matrix.hpp"

namespace btres {

// A hedge for a rank-r matrix: row subset S and column subset T of size r
// whose minor is nonzero (equivalently, C{T} -> im A and im A -> C{S} are
// both isomorphisms).
struct Hedge {
  std::vector<std::size_t> stake_rows;    // S
  std::vector<std::size_t> shrub_cols;    // T
  Rat minor;                              // det A[S,T], nonzero
};

// Exact Moore-Penrose inverse by rank factorization A = B C (pivot columns
// times RREF rows): A+ = C^T (C C^T)^-1 (B^T B)^-1 B^T. Production path.
RatMatrix mp_inverse(const RatMatrix& a);

// Enumerates all hedges; throws ValidationError("TooLarge") beyond the bound.
std::vector<Hedge> enumerate_hedges(const RatMatrix& a, std::size_t max_dim = 8);

// Hedge-splitting matrix of one hedge: inverse of the S x T minor embedded at
// (T rows, S columns); zero elsewhere.
RatMatrix hedge_splitting(const RatMatrix& a, const Hedge& hedge);

// Hedge-formula oracle: A+ = (1/Delta) * sum over hedges of minor^2 times the
// hedge splitting, Delta = sum of squared minors.
RatMatrix mp_inverse_hedge(const RatMatrix& a, std::size_t max_dim = 8);

// Single entry of A+ at (row i, column j) via the signed-minor formula,
// without assembling the whole inverse.
Rat mp_entry(const RatMatrix& a, std::size_t i, std::size_t j, std::size_t max_dim = 8);

// Exact check of the four Penrose identities for the pair (A, P).
bool verify_penrose(const RatMatrix& a, const RatMatrix& p);

} // namespace btres

#endif

#ifndef BTRES_HHL_COMPLEX_HPP
#define BTRES_HHL_COMPLEX_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "btres/poly_matrix.hpp"
#include "btres/stratification.hpp"

namespace btres {

// One generator of a term of a line-bundle complex.
struct Generator {
  int cell = -1;                 // torus cell id; -1 for abstract generators
  std::vector<long> bundle_a;    // twist vector of O(a)
  int class_index = -1;          // filled once the grading is attached
};

// Chain complex of line bundles: terms indexed by homological degree
// 0..length, differential d[i] maps degree i to degree i-1 (so d has
// `length` matrices, d[i] sized |terms[i-1]| x |terms[i]|).
struct LineBundleComplex {
  std::size_t length = 0;
  std::size_t nvars = 0;
  std::vector<std::vector<Generator>> terms; // length+1 entries
  std::vector<PolyMatrix> differentials;     // length entries, d[i]: i+1 -> i? see d()

  const PolyMatrix& d(std::size_t i) const { return differentials.at(i - 1); }
  PolyMatrix& d(std::size_t i) { return differentials.at(i - 1); }
};

// Assembles the HHL complex of a stratification: generators are torus cells
// graded by dimension, the (tau, sigma) entry of d is the sum over facet
// lifts of sign * x^eps.
LineBundleComplex build_hhl_complex(const Stratification& strat);

struct ComplexReport {
  bool ok = true;
  // First failing entry when not a complex.
  std::size_t degree = 0, row = 0, col = 0;
  std::string message;
};

// Checks d_i d_{i+1} = 0 exactly for all i; reports the first failing entry.
ComplexReport verify_complex(const LineBundleComplex& c);

// Same check but throwing VerificationError("NotAComplex") on failure.
void require_complex(const LineBundleComplex& c);

} // namespace btres

#endif

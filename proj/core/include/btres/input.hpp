#ifndef BTRES_INPUT_HPP
#define BTRES_INPUT_HPP

#include <string>
#include <tuple>
#include <vector>

#include "btres/class_group.hpp"
#include "btres/rat_matrix.hpp"
#include "btres/stratification.hpp"

namespace btres {

struct InputOptions {
  std::string contraction = "moore-penrose"; // or a block-file path
  std::string harmonic_basis = "canonical";  // or a basis-file path
  std::vector<std::string> emit = {"report"};

  bool operator==(const InputOptions&) const = default;
};

struct InputSpec {
  Quadruple quadruple;
  InputOptions options;

  bool operator==(const InputSpec& o) const;
};

// Strict JSON parse: unknown keys are rejected, every field is type- and
// range-checked. ParseError carries the byte offset for syntax errors.
// Accepts either the quadruple form {n,k,psi,...} or the embedding form
// {embedding:{rays,cones,sublattice},...}.
InputSpec parse_input(const std::string& text);

// Canonical serialization; parse_input(emit_input(s)) == s for valid specs.
std::string emit_input(const InputSpec& spec);

// Cox-style conversion: ambient rays (d x n, one column per ray), fan cones,
// and a saturated sublattice basis (d x m) for the subvariety. psi is the
// composite of the ray matrix with the SNF quotient map coker(sublattice).
struct EmbeddingSpec {
  IntMatrix rays;        // d x n
  std::vector<std::vector<int>> cones;
  IntMatrix sublattice;  // d x m (m may be zero)
};

Quadruple embedding_to_quadruple(const EmbeddingSpec& e);

// Contraction block files: {"blocks":[{"class":..,"degree":..,"matrix":..}]}.
std::vector<std::tuple<ClassId, std::size_t, RatMatrix>>
parse_contraction_file(const std::string& text);

// Harmonic basis files: {"bases":[{"class":..,"degree":..,"vectors":..}]}.
std::vector<std::tuple<ClassId, std::size_t, std::vector<RatVec>>>
parse_harmonic_file(const std::string& text);

// Plain-text matrix: first line "rows cols", then row-major rational entries.
RatMatrix parse_matrix_text(const std::string& text);

} // namespace btres

#endif

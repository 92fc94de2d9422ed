#ifndef BTRES_STRATIFICATION_HPP
#define BTRES_STRATIFICATION_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "btres/int_matrix.hpp"
#include "btres/linear_system.hpp"
#include "btres/rat_matrix.hpp"

namespace btres {

// Input data: lattice L = Z^n with the standard basis, a subfan of the first
// orthant, a surjection-up-to-finite-index psi: L -> Lambda = Z^k given by
// its k x n matrix (columns are the images b_i of the basis vectors), and an
// optional group tag that is echoed but never used in any computation.
struct Quadruple {
  std::size_t n = 0;
  std::size_t k = 0;
  IntMatrix psi; // k x n
  std::vector<std::string> variables;                  // optional names
  std::optional<std::vector<std::vector<int>>> fan;    // 1-based index subsets
  std::string group;

  // Throws ValidationError("RankDeficient") if rank(psi) < k,
  // ValidationError("DimensionTooLarge") if k > 3, plus shape checks.
  void validate() const;

  std::vector<std::string> variable_names() const;
};

// One coordinate of a cell label: H_i = m (eq) or m < H_i < m+1.
struct LabelEntry {
  bool eq = false;
  long m = 0;

  auto operator<=>(const LabelEntry& o) const {
    // Order by offset, equalities before intervals.
    if (m != o.m) return m <=> o.m;
    return (eq ? 0 : 1) <=> (o.eq ? 0 : 1);
  }
  bool operator==(const LabelEntry&) const = default;
};

struct CellLabel {
  std::vector<LabelEntry> entries;

  auto operator<=>(const CellLabel&) const = default;

  // Ceiling vector: a_i = m_i for eq, m_i + 1 for open intervals.
  std::vector<long> ceiling() const;
};

// Spec surface kept as a free function.
std::vector<long> ceiling_vector(const CellLabel& label);

struct TorusCell {
  int id = -1;
  CellLabel label;      // canonical lift
  std::size_t dim = 0;
  std::vector<long> bundle_a;   // ceiling vector of the canonical lift
  IntMatrix orientation;        // k x dim, columns span the tangent space
  RatVec interior_point;        // canonical FM point, lies in [0,1)^k
};

// One lift incidence: the facet of the canonical parent lift that maps to
// `child` shifted by `shift`. eps is the ceiling difference (always 0/1).
struct FacetIncidence {
  int parent = -1;
  int child = -1;
  std::vector<long> shift; // deck translation lambda in Z^k
  std::vector<long> eps;   // length n, entries in {0,1}
  int sign = 0;
};

class Stratification {
public:
  static Stratification enumerate(const Quadruple& q);

  const Quadruple& quadruple() const { return q_; }
  const std::vector<TorusCell>& cells() const { return cells_; }
  const TorusCell& cell(int id) const { return cells_.at(id); }
  const std::vector<int>& cells_of_dim(std::size_t d) const { return by_dim_.at(d); }
  std::size_t top_dim() const { return q_.k; }

  // All facet lift incidences of one cell, deterministically ordered.
  const std::vector<FacetIncidence>& facet_lifts(int cell_id) const {
    return facets_.at(cell_id);
  }

  // Locates the torus cell of an arbitrary lift label; returns (id, shift)
  // with label = canonical(id) translated by shift.
  std::pair<int, std::vector<long>> locate(const CellLabel& lift) const;

  // Lift label of an arbitrary point of the universal cover, and the torus
  // cell containing its image.
  CellLabel label_at(const RatVec& point) const;
  int cell_at(const RatVec& point) const;

  // Sum over cells of (-1)^dim; zero for every torus stratification.
  long euler_characteristic() const;

  // Display name, e.g. V1 / E3 / F2 (dimension letter + 1-based index).
  std::string cell_name(int id) const;
  std::optional<int> cell_by_name(const std::string& name) const;

  // The constraint system of a label (used by tests and the SVG emitter).
  StrictSystem label_system(const CellLabel& label) const;

private:
  Quadruple q_;
  std::vector<TorusCell> cells_;
  std::vector<std::vector<int>> by_dim_;
  std::vector<std::vector<FacetIncidence>> facets_;
  std::map<CellLabel, int> index_;

  void build_facets();
};

} // namespace btres

#endif

#ifndef BTRES_REPORT_HPP
#define BTRES_REPORT_HPP

#include <string>

#include "btres/class_group.hpp"
#include "btres/perturbation.hpp"
#include "btres/zigzag.hpp"

namespace btres {

// Deterministic plain-text report sections; byte-identical across runs.
std::string emit_report_cells(const Stratification& strat, const ClassGroup& group);
std::string emit_report_hhl(const Stratification& strat, const LineBundleComplex& hhl);
std::string emit_report_betti(const Grading& grading);
std::string emit_report_minres(const Pipeline& pl);
std::string emit_report_identities(const IdentityReport& report);
std::string emit_report_paths(const Stratification& strat, const PathOracle& oracle,
                              int sigma, int tau,
                              const std::vector<std::string>& varnames);

// Plain-text matrix bundle readable by general computer-algebra systems.
std::string emit_matrices_text(const Stratification& strat, const LineBundleComplex& hhl,
                               const std::vector<PolyMatrix>* d_min);

// Macaulay2 script with the graded ring, the HHL differentials, the minimal
// differentials and d^2 = 0 assertions.
std::string emit_m2(const Pipeline& pl);

} // namespace btres

#endif

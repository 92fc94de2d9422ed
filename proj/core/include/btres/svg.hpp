#ifndef BTRES_SVG_HPP
#define BTRES_SVG_HPP

#include <string>

#include "btres/stratification.hpp"

namespace btres {

// Fundamental-domain figure for k = 2: the unit square with the hyperplane
// traces and one label per torus cell at its interior point. Coordinates are
// exact decimals (no binary floating point). Throws for k != 2.
std::string emit_svg(const Stratification& strat);

// Textual circle diagram for k = 1.
std::string emit_circle_diagram(const Stratification& strat);

} // namespace btres

#endif

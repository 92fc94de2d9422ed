#include "btres/svg.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "btres/errors.hpp"

namespace btres {

namespace {

// Exact decimal with three places, round-half-up; avoids binary floats.
std::string dec3(const Rat& q) {
  Rat scaled = q * 1000 + Rat(1, 2);
  Int n = floor_int(scaled);
  bool neg = n < 0;
  if (neg) n = -n;
  Int whole = n / 1000, frac = n % 1000;
  std::ostringstream os;
  if (neg) os << '-';
  os << whole.get_str();
  std::string f = frac.get_str();
  while (f.size() < 3) f.insert(f.begin(), '0');
  while (!f.empty() && f.back() == '0') f.pop_back();
  if (!f.empty()) os << '.' << f;
  return os.str();
}

struct Mapper {
  Rat margin = 60, side = 600;
  std::string x(const Rat& f1) const { return dec3(margin + side * f1); }
  std::string y(const Rat& f2) const { return dec3(margin + side - side * f2); }
};

} // namespace

std::string emit_svg(const Stratification& strat) {
  const Quadruple& q = strat.quadruple();
  if (q.k != 2)
    throw ValidationError("Shape", "svg figures are only drawn for k = 2");

  Mapper map;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" height=\"720\" "
        "viewBox=\"0 0 720 720\">\n";
  os << "  <rect x=\"60\" y=\"60\" width=\"600\" height=\"600\" fill=\"white\" "
        "stroke=\"black\" stroke-width=\"1.5\"/>\n";

  // Hyperplane traces clipped to the unit square.
  for (std::size_t i = 0; i < q.n; ++i) {
    Rat b1 = Rat(q.psi.at(0, i)), b2 = Rat(q.psi.at(1, i));
    if (b1 == 0 && b2 == 0) continue;
    long lo = 0, hi = 0;
    {
      Int mn = 0, mx = 0;
      for (std::size_t j = 0; j < 2; ++j) {
        const Int& e = q.psi.at(j, i);
        if (e < 0) mn += e;
        if (e > 0) mx += e;
      }
      lo = to_long(mn);
      hi = to_long(mx);
    }
    for (long m = lo; m <= hi; ++m) {
      std::set<std::pair<Rat, Rat>> pts;
      auto try_point = [&](const Rat& f1, const Rat& f2) {
        if (f1 >= 0 && f1 <= 1 && f2 >= 0 && f2 <= 1) pts.insert({f1, f2});
      };
      if (b2 != 0) {
        try_point(Rat(0), Rat(m) / b2);
        try_point(Rat(1), (Rat(m) - b1) / b2);
      }
      if (b1 != 0) {
        try_point(Rat(m) / b1, Rat(0));
        try_point((Rat(m) - b2) / b1, Rat(1));
      }
      if (pts.size() < 2) continue;
      auto first = *pts.begin();
      auto last = *pts.rbegin();
      if (first == last) continue;
      os << "  <line x1=\"" << map.x(first.first) << "\" y1=\"" << map.y(first.second)
         << "\" x2=\"" << map.x(last.first) << "\" y2=\"" << map.y(last.second)
         << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }
  }

  for (int id : strat.cells_of_dim(0)) {
    const TorusCell& cell = strat.cell(id);
    os << "  <circle cx=\"" << map.x(cell.interior_point[0]) << "\" cy=\""
       << map.y(cell.interior_point[1]) << "\" r=\"4\" fill=\"black\"/>\n";
  }
  for (const TorusCell& cell : strat.cells()) {
    os << "  <text x=\"" << map.x(cell.interior_point[0]) << "\" y=\""
       << map.y(cell.interior_point[1])
       << "\" font-size=\"16\" fill=\"black\" dx=\"5\" dy=\"-5\">"
       << strat.cell_name(cell.id) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string emit_circle_diagram(const Stratification& strat) {
  if (strat.quadruple().k != 1)
    throw ValidationError("Shape", "circle diagrams are only drawn for k = 1");
  std::vector<int> order;
  for (const TorusCell& cell : strat.cells()) order.push_back(cell.id);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return strat.cell(a).interior_point[0] < strat.cell(b).interior_point[0];
  });
  std::ostringstream os;
  os << "[circle]\n";
  for (int id : order) {
    const TorusCell& cell = strat.cell(id);
    os << strat.cell_name(id) << " at " << rat_to_string(cell.interior_point[0])
       << (cell.dim == 0 ? " (vertex)" : " (arc)") << '\n';
  }
  return os.str();
}

} // namespace btres

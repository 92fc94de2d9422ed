#include <doctest.h>

#include <map>
#include <set>

#include "btres/errors.hpp"
#include "btres/random_quadruple.hpp"
#include "btres/stratification.hpp"
#include "test_util.hpp"

using namespace btres;
using namespace btres::testutil;

TEST_CASE("weighted plane point: cell counts and geometry") {
  Stratification s = Stratification::enumerate(p311());
  CHECK(s.cells_of_dim(0).size() == 3);
  CHECK(s.cells_of_dim(1).size() == 7);
  CHECK(s.cells_of_dim(2).size() == 4);
  CHECK(s.euler_characteristic() == 0);

  auto named = p311_named_cells(s);
  CHECK(named.size() == 14);
  std::set<int> distinct;
  for (const auto& [name, id] : named) distinct.insert(id);
  CHECK(distinct.size() == 14);

  // Ceiling vectors of the published lifts.
  CHECK(s.cell(named["V1"]).bundle_a == std::vector<long>{0, 0, 0});
  CHECK(s.cell(named["E1"]).bundle_a == std::vector<long>{0, 1, 0});
  CHECK(s.cell(named["E2"]).bundle_a == std::vector<long>{1, 1, -1});
  CHECK(s.cell(named["F1"]).bundle_a == std::vector<long>{1, 1, 0});
  CHECK(s.cell(named["F4"]).bundle_a == std::vector<long>{1, 1, -3});
}

TEST_CASE("circle stratifications") {
  {
    Quadruple q;
    q.n = 1;
    q.k = 1;
    q.psi = IntMatrix{{1}};
    Stratification s = Stratification::enumerate(q);
    CHECK(s.cells_of_dim(0).size() == 1);
    CHECK(s.cells_of_dim(1).size() == 1);
  }
  {
    Stratification s = Stratification::enumerate(p1_point());
    CHECK(s.cells_of_dim(0).size() == 1);
    CHECK(s.cells_of_dim(1).size() == 1);
  }
}

TEST_CASE("quadruple validation errors") {
  Quadruple bad;
  bad.n = 2;
  bad.k = 2;
  bad.psi = IntMatrix{{1, 1}, {1, 1}};
  CHECK_THROWS_AS(Stratification::enumerate(bad), ValidationError);
  try {
    Stratification::enumerate(bad);
  } catch (const ValidationError& e) {
    CHECK(e.kind() == "RankDeficient");
  }

  Quadruple big;
  big.n = 4;
  big.k = 4;
  big.psi = IntMatrix::identity(4);
  try {
    Stratification::enumerate(big);
    CHECK(false);
  } catch (const ValidationError& e) {
    CHECK(e.kind() == "DimensionTooLarge");
  }
}

TEST_CASE("facets of the origin triangle carry the published monomials") {
  Stratification s = Stratification::enumerate(p311());
  auto named = p311_named_cells(s);

  // F1 has facet lifts E1 (eps -> x), E2 (eps -> z), E5 (eps -> y).
  std::map<int, std::vector<long>> eps_of;
  for (const FacetIncidence& inc : s.facet_lifts(named["F1"])) {
    CHECK(eps_of.insert({inc.child, inc.eps}).second);
  }
  REQUIRE(eps_of.size() == 3);
  CHECK(eps_of.at(named["E1"]) == std::vector<long>{1, 0, 0});
  CHECK(eps_of.at(named["E2"]) == std::vector<long>{0, 0, 1});
  CHECK(eps_of.at(named["E5"]) == std::vector<long>{0, 1, 0});

  // Vertices have no facets.
  CHECK(s.facet_lifts(named["V1"]).empty());
}

TEST_CASE("unit square cell: each edge appears in two lifts with opposite signs") {
  Stratification s = Stratification::enumerate(plane_identity());
  REQUIRE(s.cells_of_dim(2).size() == 1);
  int face = s.cells_of_dim(2)[0];
  auto incs = s.facet_lifts(face);
  CHECK(incs.size() == 4);
  std::map<int, int> sign_sum, count;
  for (const auto& inc : incs) {
    sign_sum[inc.child] += inc.sign;
    count[inc.child] += 1;
    bool eps_zero = true;
    for (long e : inc.eps) eps_zero &= e == 0;
    bool shift_zero = true;
    for (long l : inc.shift) shift_zero &= l == 0;
    // The lift with zero shift has eps = e_i, the shifted one eps = 0.
    CHECK(eps_zero == !shift_zero);
  }
  for (const auto& [child, cnt] : count) {
    CHECK(cnt == 2);
    CHECK(sign_sum[child] == 0);
  }
}

TEST_CASE("ceiling vectors") {
  CellLabel all_eq;
  all_eq.entries = {{true, 0}, {true, 0}};
  CHECK(ceiling_vector(all_eq) == std::vector<long>{0, 0});
  CellLabel open_square;
  open_square.entries = {{false, 0}, {false, 0}};
  CHECK(ceiling_vector(open_square) == std::vector<long>{1, 1});
}

TEST_CASE("deck shifts move ceilings by psi^T lambda") {
  Stratification s = Stratification::enumerate(p311());
  const Quadruple& q = s.quadruple();
  for (const TorusCell& cell : s.cells())
    for (const FacetIncidence& inc : s.facet_lifts(cell.id)) {
      // eps = a(parent) - a(child lift) must be the ceiling difference with
      // the shift applied: a(child lift) = a(child) + psi^T * shift.
      const TorusCell& child = s.cell(inc.child);
      for (std::size_t i = 0; i < q.n; ++i) {
        long pairing = 0;
        for (std::size_t j = 0; j < q.k; ++j)
          pairing += to_long(q.psi.at(j, i)) * inc.shift[j];
        CHECK(inc.eps[i] == cell.bundle_a[i] - (child.bundle_a[i] + pairing));
        CHECK((inc.eps[i] == 0 || inc.eps[i] == 1));
        if (cell.label.entries[i].eq) CHECK(inc.eps[i] == 0);
      }
    }
}

TEST_CASE("boundary cancellation on random stratifications") {
  QuadrupleGenerator gen(101);
  for (int trial = 0; trial < 8; ++trial) {
    Quadruple q = gen.next();
    Stratification s = Stratification::enumerate(q);
    CHECK(s.euler_characteristic() == 0);

    // Forgetting eps, every k-cell/(k-1)-cell pair contributes signs
    // summing to zero over the closed torus.
    if (q.k < 1) continue;
    std::map<int, long> signed_count;
    for (int id : s.cells_of_dim(q.k))
      for (const FacetIncidence& inc : s.facet_lifts(id)) signed_count[inc.child] += inc.sign;
    for (const auto& [child, total] : signed_count) CHECK(total == 0);
  }
}

TEST_CASE("orientation data is deck-invariant by construction") {
  Stratification s = Stratification::enumerate(p311());
  for (const TorusCell& cell : s.cells()) {
    CHECK(cell.orientation.rows() == 2);
    CHECK(cell.orientation.cols() == cell.dim);
    // Tangent columns annihilate the Eq rows.
    for (std::size_t i = 0; i < cell.label.entries.size(); ++i) {
      if (!cell.label.entries[i].eq) continue;
      for (std::size_t c = 0; c < cell.orientation.cols(); ++c) {
        Int sum = 0;
        for (std::size_t j = 0; j < 2; ++j)
          sum += s.quadruple().psi.at(j, i) * cell.orientation.at(j, c);
        CHECK(sum == 0);
      }
    }
  }
}

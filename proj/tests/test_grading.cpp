#include <doctest.h>

#include <set>

#include "btres/errors.hpp"
#include "btres/grading.hpp"
#include "btres/random_quadruple.hpp"
#include "test_util.hpp"

using namespace btres;
using namespace btres::testutil;

TEST_CASE("class map of the weighted plane: quotient is Z via 3a1+a2+a3") {
  ClassGroup group(p311().psi);
  CHECK(group.free_rank() == 1);
  CHECK(group.torsion_factors().empty());

  auto q = [&](std::vector<long> a) {
    ClassId id = group.class_of(a);
    REQUIRE(id.free_part.size() == 1);
    return id.free_part[0];
  };
  // The functional is determined up to sign; fix it on (0,0,1).
  long unit = q({0, 0, 1});
  CHECK((unit == 1 || unit == -1));
  CHECK(q({1, 0, 0}) == 3 * unit);
  CHECK(q({0, 1, 0}) == unit);
  CHECK(q({1, 1, -3}) == 1 * unit);

  // Deck invariance: a and a + psi^T lambda share a class.
  for (long l1 : {-2L, 0L, 3L})
    for (long l2 : {-1L, 0L, 2L}) {
      std::vector<long> a{2, -1, 4};
      std::vector<long> shifted{a[0] + l1, a[1] + l2, a[2] - 3 * l1 - l2};
      CHECK(group.class_of(a) == group.class_of(shifted));
    }

  // Section maps back to the same class.
  ClassId id = group.class_of({2, -1, 4});
  CHECK(group.class_of(group.representative(id)) == id);
}

TEST_CASE("class partition of the weighted plane matches the published one") {
  Stratification s = Stratification::enumerate(p311());
  LineBundleComplex hhl = build_hhl_complex(s);
  Grading g = build_grading(s, hhl);
  auto named = p311_named_cells(s);

  REQUIRE(g.classes.size() == 5);
  auto cls_of = [&](const std::string& name) { return g.cell_class[named.at(name)]; };
  // S_0 = {V1}; S_-1 = {V3,E1,E4,E7,F4}; S_-2 = {V2,E3,E6,F3};
  // S_-3 = {E2,E5,F2}; S_-4 = {F1}.
  std::set<int> s0{cls_of("V1")};
  std::set<int> sm1{cls_of("V3"), cls_of("E1"), cls_of("E4"), cls_of("E7"), cls_of("F4")};
  std::set<int> sm2{cls_of("V2"), cls_of("E3"), cls_of("E6"), cls_of("F3")};
  std::set<int> sm3{cls_of("E2"), cls_of("E5"), cls_of("F2")};
  std::set<int> sm4{cls_of("F1")};
  CHECK(s0.size() == 1);
  CHECK(sm1.size() == 1);
  CHECK(sm2.size() == 1);
  CHECK(sm3.size() == 1);
  CHECK(sm4.size() == 1);
  std::set<int> all;
  for (auto& part : {s0, sm1, sm2, sm3, sm4}) all.insert(*part.begin());
  CHECK(all.size() == 5);
}

TEST_CASE("surjective psi^T collapses the class group") {
  ClassGroup group(plane_identity().psi);
  CHECK(group.free_rank() == 0);
  CHECK(group.torsion_factors().empty());
  CHECK(group.class_of({5, -7}) == group.class_of({0, 0}));
}

TEST_CASE("torsion quotients are detected") {
  // psi = [2]: Z / 2Z.
  IntMatrix psi{{2}};
  ClassGroup group(psi);
  CHECK(group.free_rank() == 0);
  REQUIRE(group.torsion_factors().size() == 1);
  CHECK(group.torsion_factors()[0] == 2);
  CHECK(group.class_of({1}) == group.class_of({3}));
  CHECK(group.class_of({1}) != group.class_of({2}));
  CHECK(group.class_of(group.representative(group.class_of({1}))) ==
        group.class_of({1}));
}

TEST_CASE("positive grading for the worked examples") {
  {
    Stratification s = Stratification::enumerate(p311());
    RatVec theta = find_positive_grading(s);
    REQUIRE(theta.size() == 3);
    CHECK(theta == RatVec{Rat(3), Rat(1), Rat(1)});
  }
  {
    Stratification s = Stratification::enumerate(p1_point());
    RatVec theta = find_positive_grading(s);
    CHECK(theta == RatVec{Rat(1), Rat(1)});
  }
  {
    Stratification s = Stratification::enumerate(plane_identity());
    CHECK_THROWS_AS(find_positive_grading(s), NoPositiveGradingError);
  }
}

TEST_CASE("Borel-Moore complexes of the weighted plane") {
  Stratification s = Stratification::enumerate(p311());
  LineBundleComplex hhl = build_hhl_complex(s);
  Grading g = build_grading(s, hhl);
  auto named = p311_named_cells(s);

  // Class of F4 in the figure (the O(-1) class) has the 1-3-1 complex.
  const BMComplex& bm = g.classes[g.cell_class[named["F4"]]];
  CHECK(bm.size(0) == 1);
  CHECK(bm.size(1) == 3);
  CHECK(bm.size(2) == 1);
  // d2 = (1,1,1)^T and d1 = (0,1,-1) up to signs.
  int nonzero = 0;
  for (std::size_t r = 0; r < 3; ++r) {
    Rat v = bm.d(2).at(r, 0);
    CHECK((v == 1 || v == -1));
  }
  for (std::size_t c = 0; c < 3; ++c) {
    Rat v = bm.d(1).at(0, c);
    if (v != 0) {
      ++nonzero;
      CHECK((v == 1 || v == -1));
    }
  }
  CHECK(nonzero == 2);
  CHECK((bm.d(1) * bm.d(2)).is_zero());

  // Betti numbers: classes in id order [0],[1],[2],[3],[4].
  REQUIRE(g.betti.beta.size() == 5);
  std::vector<std::vector<std::size_t>> expect{
      {1, 0, 0}, {0, 1, 0}, {0, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK(g.betti.beta == expect);
  CHECK(g.betti.total(0) == 1);
  CHECK(g.betti.total(1) == 2);
  CHECK(g.betti.total(2) == 1);
}

TEST_CASE("harmonic bases") {
  Stratification s = Stratification::enumerate(p311());
  LineBundleComplex hhl = build_hhl_complex(s);
  Grading g = build_grading(s, hhl);
  auto named = p311_named_cells(s);

  {
    const BMComplex& bm = g.classes[g.cell_class[named["F4"]]];
    auto basis = harmonic_basis(bm, 1);
    REQUIRE(basis.size() == 1);
    // The harmonic line for (1,1,1) columns and (0,1,-1)-type rows is spanned
    // by a (-2,1,1)-shaped vector in the published orientation; entries here
    // are determined up to the orientation signs, so check the defining
    // equations instead.
    for (const Rat& v : bm.d(1).apply(basis[0])) CHECK(v == 0);
    for (const Rat& v : bm.d(2).transpose().apply(basis[0])) CHECK(v == 0);
    std::multiset<Rat> mags;
    for (const Rat& v : basis[0]) mags.insert(abs(v));
    CHECK(mags == std::multiset<Rat>{Rat(2), Rat(1), Rat(1)});

    validate_harmonic_basis(bm, 1, basis);
    // A non-cycle vector is rejected.
    CHECK_THROWS_AS(validate_harmonic_basis(bm, 1, {RatVec{1, 0, 0}}), ValidationError);
  }
  {
    // The class of F2 in the figure pairs E2 with E5; its harmonic line is
    // spanned by a (1,-1)-shaped vector.
    const BMComplex& bm = g.classes[g.cell_class[named["F2"]]];
    auto basis = harmonic_basis(bm, 1);
    REQUIRE(basis.size() == 1);
    std::multiset<Rat> mags;
    for (const Rat& v : basis[0]) mags.insert(abs(v));
    CHECK(mags == std::multiset<Rat>{Rat(1), Rat(1)});
  }
  {
    // Exact class (the O(-2) column of the figure) has no homology at all.
    const BMComplex& bm = g.classes[g.cell_class[named["F3"]]];
    CHECK(harmonic_basis(bm, 0).empty());
    CHECK(harmonic_basis(bm, 1).empty());
    CHECK(harmonic_basis(bm, 2).empty());
  }
}

TEST_CASE("hodge rank identity and euler consistency on random instances") {
  QuadrupleGenerator gen(555);
  for (int trial = 0; trial < 6; ++trial) {
    Quadruple q = gen.next_graded();
    Stratification s = Stratification::enumerate(q);
    LineBundleComplex hhl = build_hhl_complex(s);
    Grading g = build_grading(s, hhl);
    for (std::size_t c = 0; c < g.classes.size(); ++c) {
      const BMComplex& bm = g.classes[c];
      long euler_cells = 0, euler_betti = 0;
      for (std::size_t i = 0; i <= q.k; ++i) {
        std::size_t r_out = i >= 1 ? rank(bm.d(i)) : 0;
        std::size_t r_in = i + 1 <= q.k ? rank(bm.d(i + 1)) : 0;
        CHECK(bm.size(i) == r_out + g.betti.beta[c][i] + r_in);
        long sign = i % 2 == 0 ? 1 : -1;
        euler_cells += sign * static_cast<long>(bm.size(i));
        euler_betti += sign * static_cast<long>(g.betti.beta[c][i]);
        // Harmonic vectors are orthogonal to both image spaces.
        for (const auto& v : harmonic_basis(bm, i)) {
          if (i >= 1)
            for (const Rat& w : bm.d(i).apply(v)) CHECK(w == 0);
          if (i + 1 <= q.k)
            for (const Rat& w : bm.d(i + 1).transpose().apply(v)) CHECK(w == 0);
        }
      }
      CHECK(euler_cells == euler_betti);
    }
    // Every nonzero exponent has positive theta pairing.
    for (const TorusCell& cell : s.cells())
      for (const FacetIncidence& inc : s.facet_lifts(cell.id)) {
        Rat pairing = 0;
        bool nonzero = false;
        for (std::size_t i = 0; i < q.n; ++i) {
          if (inc.eps[i]) nonzero = true;
          pairing += g.theta[i] * Rat(inc.eps[i]);
        }
        if (nonzero) CHECK(pairing >= 1);
      }
  }
}

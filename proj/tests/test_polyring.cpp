#include <doctest.h>

#include <random>

#include "btres/poly.hpp"
#include "btres/poly_matrix.hpp"

using namespace btres;

namespace {

// x, y, z in three variables.
Poly var(std::size_t i) { return Poly::variable(3, i); }

Poly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> expo(0, 2);
  Poly p(3);
  for (int t = 0; t < 4; ++t) {
    Exponents e{expo(rng), expo(rng), expo(rng)};
    p.add_term(e, Rat(coef(rng)));
  }
  return p;
}

} // namespace

TEST_CASE("ring operations on the worked examples") {
  Poly y = var(1), z = var(2);
  CHECK(((y - z) + (z - y)).is_zero());

  Poly cube = (y + z) * (y + z) * (y + z);
  Poly expect(3);
  expect.add_term({0, 3, 0}, 1);
  expect.add_term({0, 2, 1}, 3);
  expect.add_term({0, 1, 2}, 3);
  expect.add_term({0, 0, 3}, 1);
  CHECK(cube == expect);

  // -(1/4) z (y+z)^2 from the worked path sum.
  Poly w = (z * (y + z) * (y + z)).scaled(Rat(-1, 4));
  Poly expect2(3);
  expect2.add_term({0, 2, 1}, Rat(-1, 4));
  expect2.add_term({0, 1, 2}, Rat(-1, 2));
  expect2.add_term({0, 0, 3}, Rat(-1, 4));
  CHECK(w == expect2);
}

TEST_CASE("ring axioms hold exactly on random polynomials") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    Poly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("substitution") {
  Poly y = var(1), z = var(2), x = var(0);
  Poly cube = (y + z) * (y + z) * (y + z);
  std::map<std::size_t, Poly> z_to_y{{2, y}};
  Poly eight_y3(3);
  eight_y3.add_term({0, 3, 0}, 8);
  CHECK(cube.substitute(z_to_y) == eight_y3);

  // 2x - (y+z)^3/4 becomes 2x - 2y^3 modulo z -> y.
  Poly f = x.scaled(2) - cube.scaled(Rat(1, 4));
  Poly expect = x.scaled(2) - (y * y * y).scaled(2);
  CHECK(f.substitute(z_to_y) == expect);

  std::map<std::size_t, Poly> all_zero{{0, Poly(3)}, {1, Poly(3)}, {2, Poly(3)}};
  CHECK(f.substitute(all_zero) == Poly::constant(3, f.constant_term()));
}

TEST_CASE("matrix product and constant part") {
  PolyMatrix a(1, 2, 3);
  a.at(0, 0) = var(0) - var(1) * var(1) * var(1); // x - y^3
  a.at(0, 1) = var(1) - var(2);                   // y - z
  PolyMatrix b(2, 1, 3);
  b.at(0, 0) = var(1) - var(2);
  b.at(1, 0) = -var(0) + var(1) * var(1) * var(1);
  CHECK((a * b).is_zero());

  CHECK((a * PolyMatrix::identity(2, 3)) == a);

  PolyMatrix m(1, 2, 3);
  m.at(0, 0) = Poly::monomial(3, {1, 0, 0}, 1) - Poly::constant(3, 1); // x - 1
  m.at(0, 1) = Poly::monomial(3, {0, 2, 1}, Rat(1, 2));
  RatMatrix c = m.constant_part();
  CHECK(c.at(0, 0) == -1);
  CHECK(c.at(0, 1) == 0);
}

TEST_CASE("constant part is multiplicative") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 25; ++trial) {
    PolyMatrix a(2, 3, 3), b(3, 2, 3);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 3; ++j) a.at(i, j) = random_poly(rng);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 2; ++j) b.at(i, j) = random_poly(rng);
    CHECK((a * b).constant_part() == a.constant_part() * b.constant_part());
  }
}

TEST_CASE("canonical text form") {
  Poly x = var(0), y = var(1), z = var(2);
  Poly f = x.scaled(2) - ((y + z) * (y + z) * (y + z)).scaled(Rat(1, 4));
  CHECK(f.to_string({"x", "y", "z"}) ==
        "-1/4*y^3 - 3/4*y^2*z - 3/4*y*z^2 - 1/4*z^3 + 2*x");
  CHECK(Poly(3).to_string() == "0");
  CHECK(Poly::constant(3, Rat(-5, 3)).to_string() == "-5/3");
  CHECK((y - z).to_string({"x", "y", "z"}) == "y - z");
}

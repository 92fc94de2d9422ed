#ifndef BTRES_POLY_HPP
#define BTRES_POLY_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "btres/rational.hpp"

namespace btres {

using Exponents = std::vector<int>;

// Graded lexicographic order on exponent vectors (total degree first).
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Multivariate polynomial over the rationals in a fixed number of variables.
// No zero coefficients are ever stored.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const Rat& c);
  static Poly variable(std::size_t nvars, std::size_t index);
  static Poly monomial(std::size_t nvars, const Exponents& e, const Rat& c);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  const std::map<Exponents, Rat, GrlexLess>& terms() const { return terms_; }

  Rat coefficient(const Exponents& e) const;
  Rat constant_term() const;

  void add_term(const Exponents& e, const Rat& c);

  Poly operator+(const Poly& rhs) const;
  Poly operator-(const Poly& rhs) const;
  Poly operator-() const;
  Poly operator*(const Poly& rhs) const;
  Poly scaled(const Rat& c) const;
  bool operator==(const Poly& rhs) const = default;

  // Substitutes assignment[i] for variable i wherever the map has an entry;
  // unmapped variables stay themselves.
  Poly substitute(const std::map<std::size_t, Poly>& assignment) const;

  // Canonical text: terms in descending graded-lex order, exact rational
  // coefficients, e.g. "2*x - 1/4*y^3". Empty polynomial prints "0".
  std::string to_string(const std::vector<std::string>& varnames = {}) const;

private:
  std::size_t nvars_ = 0;
  std::map<Exponents, Rat, GrlexLess> terms_;
};

} // namespace btres

#endif

#include "btres/poly.hpp"

#include <numeric>
#include <sstream>

#include "btres/errors.hpp"

namespace btres {

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return a < b;
}

Poly Poly::constant(std::size_t nvars, const Rat& c) {
  Poly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t index) {
  Exponents e(nvars, 0);
  e.at(index) = 1;
  return monomial(nvars, e, Rat(1));
}

Poly Poly::monomial(std::size_t nvars, const Exponents& e, const Rat& c) {
  if (e.size() != nvars)
    throw ValidationError("Shape", "monomial exponent vector length mismatch");
  Poly p(nvars);
  p.add_term(e, c);
  return p;
}

Rat Poly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat Poly::constant_term() const { return coefficient(Exponents(nvars_, 0)); }

void Poly::add_term(const Exponents& e, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& rhs) const {
  if (nvars_ != rhs.nvars_)
    throw ValidationError("Shape", "polynomial variable count mismatch");
  Poly out = *this;
  for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
  return out;
}

Poly Poly::operator-(const Poly& rhs) const {
  if (nvars_ != rhs.nvars_)
    throw ValidationError("Shape", "polynomial variable count mismatch");
  Poly out = *this;
  for (const auto& [e, c] : rhs.terms_) out.add_term(e, -c);
  return out;
}

Poly Poly::operator-() const {
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Poly Poly::operator*(const Poly& rhs) const {
  if (nvars_ != rhs.nvars_)
    throw ValidationError("Shape", "polynomial variable count mismatch");
  Poly out(nvars_);
  Exponents e(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : rhs.terms_) {
      for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

Poly Poly::scaled(const Rat& c) const {
  Poly out(nvars_);
  if (c == 0) return out;
  for (const auto& [e, coef] : terms_) out.terms_.emplace(e, coef * c);
  return out;
}

Poly Poly::substitute(const std::map<std::size_t, Poly>& assignment) const {
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) {
    Poly term = Poly::constant(nvars_, c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      auto it = assignment.find(i);
      Poly base = it == assignment.end() ? Poly::variable(nvars_, i) : it->second;
      for (int rep = 0; rep < e[i]; ++rep) term = term * base;
    }
    out = out + term;
  }
  return out;
}

std::string Poly::to_string(const std::vector<std::string>& varnames) const {
  if (terms_.empty()) return "0";
  auto name = [&](std::size_t i) {
    if (i < varnames.size()) return varnames[i];
    return "x" + std::to_string(i + 1);
  };
  std::ostringstream os;
  bool first = true;
  // Descending graded-lex.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << '-';
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool any_var = false;
    for (int exp : e)
      if (exp > 0) any_var = true;
    std::ostringstream vars;
    bool first_var = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!first_var) vars << '*';
      first_var = false;
      vars << name(i);
      if (e[i] > 1) vars << '^' << e[i];
    }
    if (!any_var) {
      os << rat_to_string(a);
    } else if (a == 1) {
      os << vars.str();
    } else {
      os << rat_to_string(a) << '*' << vars.str();
    }
  }
  return os.str();
}

} // namespace btres

#include "btres/linear_system.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <tuple>

#include "btres/errors.hpp"

namespace btres {

std::vector<LinConstraint> StrictSystem::constraints() const {
  std::vector<LinConstraint> out;
  for (const auto& [coeff, rhs] : equalities) out.push_back({coeff, Rel::eq, rhs});
  for (const auto& band : bands) {
    RatVec neg(band.coeff.size());
    for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -band.coeff[i];
    out.push_back({neg, Rel::lt, -band.lower}); // lower < coeff.x
    out.push_back({band.coeff, Rel::lt, band.upper});
  }
  return out;
}

bool Interval::empty() const {
  if (!has_lo || !has_hi) return false;
  if (lo < hi) return false;
  if (lo > hi) return true;
  return lo_strict || hi_strict;
}

std::optional<Rat> Interval::pick() const {
  if (empty()) return std::nullopt;
  if (has_lo && has_hi) {
    if (lo == hi) return lo; // both inclusive, else empty() already
    return (lo + hi) / 2;
  }
  if (has_lo) return lo_strict ? Rat(lo + 1) : lo;
  if (has_hi) return hi_strict ? Rat(hi - 1) : hi;
  return Rat(0);
}

namespace {

constexpr std::size_t kNoVar = static_cast<std::size_t>(-1);

struct WorkCon {
  RatVec a;
  Rel rel;
  Rat b;
};

bool all_zero(const RatVec& v) {
  for (const Rat& q : v)
    if (q != 0) return false;
  return true;
}

// 0 REL b
bool constant_holds(Rel rel, const Rat& b) {
  switch (rel) {
    case Rel::eq: return b == 0;
    case Rel::le: return b >= 0;
    case Rel::lt: return b > 0;
  }
  return false;
}

void normalize(WorkCon& c) {
  for (const Rat& q : c.a) {
    if (q == 0) continue;
    Rat s = abs(q);
    if (s != 1) {
      for (Rat& x : c.a) x /= s;
      c.b /= s;
    }
    return;
  }
}

struct Eliminator {
  std::size_t dim;
  std::size_t keep; // variable excluded from elimination, or kNoVar
  // Pinned variables: x_pivot = expr.a . x + expr.b with expr supported on
  // non-pivot variables only (RREF-style).
  std::map<std::size_t, WorkCon> pinned;
  std::vector<WorkCon> ineqs;
  // Per eliminated variable, the lower/upper bound rows that produced its
  // interval, for midpoint back-substitution. Bound rows are stored as
  // (coeffs on smaller vars, rel, rhs, divisor).
  struct Bound {
    RatVec rest;
    Rat rhs;
    Rat div; // positive
    bool strict;
  };
  struct VarBounds {
    std::size_t var;
    std::vector<Bound> lowers, uppers;
  };
  std::vector<VarBounds> elim_stack;
  bool infeasible = false;

  explicit Eliminator(std::size_t d, std::size_t k) : dim(d), keep(k) {}

  void reduce_by_pinned(WorkCon& c) const {
    for (const auto& [var, expr] : pinned) {
      if (c.a[var] == 0) continue;
      Rat f = c.a[var];
      c.a[var] = 0;
      for (std::size_t j = 0; j < dim; ++j) c.a[j] += f * expr.a[j];
      c.b -= f * expr.b;
    }
  }

  void add_equality(WorkCon eq) {
    reduce_by_pinned(eq);
    std::size_t pivot = kNoVar;
    for (std::size_t j = 0; j < dim; ++j) {
      if (j == keep || eq.a[j] == 0) continue;
      pivot = j;
      break;
    }
    if (pivot == kNoVar) {
      if (keep != kNoVar && eq.a[keep] != 0) {
        // Constraint purely on the kept variable: keep it as two inequalities.
        ineqs.push_back({eq.a, Rel::le, eq.b});
        WorkCon neg{eq.a, Rel::le, -eq.b};
        for (Rat& q : neg.a) q = -q;
        ineqs.push_back(std::move(neg));
        return;
      }
      if (!constant_holds(Rel::eq, eq.b)) infeasible = true;
      return;
    }
    // x_pivot = (b - sum_{j != pivot} a_j x_j) / a_pivot
    WorkCon expr;
    expr.a.assign(dim, Rat(0));
    Rat inv = 1 / eq.a[pivot];
    for (std::size_t j = 0; j < dim; ++j)
      if (j != pivot && eq.a[j] != 0) expr.a[j] = -eq.a[j] * inv;
    expr.b = eq.b * inv;
    // Keep earlier pinned expressions supported on free variables only.
    for (auto& [var, other] : pinned) {
      if (other.a[pivot] == 0) continue;
      Rat f = other.a[pivot];
      other.a[pivot] = 0;
      for (std::size_t j = 0; j < dim; ++j) other.a[j] += f * expr.a[j];
      other.b += f * expr.b;
    }
    pinned.emplace(pivot, std::move(expr));
  }

  void add(const LinConstraint& c) {
    if (c.coeff.size() != dim)
      throw ValidationError("Shape", "constraint dimension mismatch");
    WorkCon w{c.coeff, c.rel, c.rhs};
    if (w.rel == Rel::eq) {
      add_equality(std::move(w));
    } else {
      ineqs.push_back(std::move(w));
    }
  }

  void run() {
    if (infeasible) return;
    for (WorkCon& c : ineqs) reduce_by_pinned(c);

    std::vector<std::size_t> order;
    for (std::size_t v = dim; v-- > 0;) {
      if (v == keep || pinned.count(v)) continue;
      order.push_back(v);
    }

    for (std::size_t v : order) {
      VarBounds vb;
      vb.var = v;
      std::vector<WorkCon> rest;
      std::vector<WorkCon> lows, highs;
      for (WorkCon& c : ineqs) {
        if (c.a[v] == 0) {
          rest.push_back(std::move(c));
        } else if (c.a[v] > 0) {
          highs.push_back(std::move(c));
        } else {
          lows.push_back(std::move(c));
        }
      }
      auto record = [&](const WorkCon& c, bool upper) {
        Bound b;
        b.rest = c.a;
        b.rest[v] = 0;
        b.rhs = c.b;
        b.div = upper ? c.a[v] : -c.a[v];
        b.strict = c.rel == Rel::lt;
        (upper ? vb.uppers : vb.lowers).push_back(std::move(b));
      };
      for (const WorkCon& c : highs) record(c, true);
      for (const WorkCon& c : lows) record(c, false);

      // Cross every lower bound with every upper bound.
      std::vector<WorkCon> next = std::move(rest);
      for (const WorkCon& lo : lows)
        for (const WorkCon& hi : highs) {
          // lo: a.x <= b with a[v] < 0; hi: a'.x <= b' with a'[v] > 0.
          Rat fl = -lo.a[v];
          Rat fh = hi.a[v];
          WorkCon comb;
          comb.a.assign(dim, Rat(0));
          for (std::size_t j = 0; j < dim; ++j)
            comb.a[j] = fh * lo.a[j] + fl * hi.a[j];
          comb.b = fh * lo.b + fl * hi.b;
          comb.rel = (lo.rel == Rel::lt || hi.rel == Rel::lt) ? Rel::lt : Rel::le;
          if (all_zero(comb.a)) {
            if (!constant_holds(comb.rel, comb.b)) {
              infeasible = true;
              return;
            }
            continue;
          }
          normalize(comb);
          next.push_back(std::move(comb));
        }
      dedupe(next);
      ineqs = std::move(next);
      elim_stack.push_back(std::move(vb));
    }

    // What remains involves only `keep` (if any); constants are checked here.
    std::vector<WorkCon> remaining;
    for (WorkCon& c : ineqs) {
      if (all_zero(c.a)) {
        if (!constant_holds(c.rel, c.b)) {
          infeasible = true;
          return;
        }
      } else {
        remaining.push_back(std::move(c));
      }
    }
    ineqs = std::move(remaining);
  }

  static void dedupe(std::vector<WorkCon>& cons) {
    std::vector<WorkCon> out;
    for (WorkCon& c : cons) {
      bool seen = false;
      for (const WorkCon& o : out)
        if (o.rel == c.rel && o.b == c.b && o.a == c.a) {
          seen = true;
          break;
        }
      if (!seen) out.push_back(std::move(c));
    }
    cons = std::move(out);
  }

  Interval interval_for(std::size_t v, const RatVec& partial) const {
    Interval iv;
    auto fold = [&](const Bound& b, bool upper) {
      Rat val = b.rhs;
      for (std::size_t j = 0; j < dim; ++j)
        if (b.rest[j] != 0) val -= b.rest[j] * partial[j];
      val /= b.div;
      if (!upper) val = -val; // dividing by the negative coefficient flips
      if (upper) {
        if (!iv.has_hi || val < iv.hi) {
          iv.has_hi = true;
          iv.hi = val;
          iv.hi_strict = b.strict;
        } else if (val == iv.hi && b.strict) {
          iv.hi_strict = true;
        }
      } else {
        if (!iv.has_lo || val > iv.lo) {
          iv.has_lo = true;
          iv.lo = val;
          iv.lo_strict = b.strict;
        } else if (val == iv.lo && b.strict) {
          iv.lo_strict = true;
        }
      }
    };
    for (const auto& vbs : elim_stack) {
      if (vbs.var != v) continue;
      for (const Bound& b : vbs.lowers) fold(b, false);
      for (const Bound& b : vbs.uppers) fold(b, true);
    }
    return iv;
  }
};

} // namespace

std::optional<RatVec> feasible_point(const std::vector<LinConstraint>& constraints,
                                     std::size_t dim) {
  Eliminator el(dim, kNoVar);
  for (const LinConstraint& c : constraints) {
    el.add(c);
    if (el.infeasible) return std::nullopt;
  }
  el.run();
  if (el.infeasible) return std::nullopt;

  RatVec x(dim, Rat(0));
  // Back-substitute in increasing variable order; bounds for a variable only
  // reference smaller free variables.
  for (auto it = el.elim_stack.rbegin(); it != el.elim_stack.rend(); ++it) {
    Interval iv = el.interval_for(it->var, x);
    auto val = iv.pick();
    if (!val) return std::nullopt;
    x[it->var] = *val;
  }
  // Pinned variables in reverse pin order reference only free variables.
  for (const auto& [var, expr] : el.pinned) {
    Rat val = expr.b;
    for (std::size_t j = 0; j < dim; ++j)
      if (expr.a[j] != 0) val += expr.a[j] * x[j];
    x[var] = val;
  }
  return x;
}

std::optional<RatVec> feasible_interior_point(const StrictSystem& system) {
  return feasible_point(system.constraints(), system.dim);
}

std::optional<Interval> linear_range(const std::vector<LinConstraint>& constraints,
                                     std::size_t dim, const RatVec& c) {
  if (c.size() != dim)
    throw ValidationError("Shape", "linear_range functional dimension mismatch");
  const std::size_t t = dim; // extra variable carrying the functional value
  Eliminator el(dim + 1, t);
  {
    LinConstraint def;
    def.coeff = c;
    def.coeff.push_back(Rat(-1));
    def.rel = Rel::eq;
    def.rhs = 0;
    el.add(def);
  }
  for (const LinConstraint& orig : constraints) {
    LinConstraint ext = orig;
    ext.coeff.push_back(Rat(0));
    el.add(ext);
    if (el.infeasible) return std::nullopt;
  }
  el.run();
  if (el.infeasible) return std::nullopt;

  Interval iv;
  for (const auto& con : el.ineqs) {
    // Each survivor is a bound on t alone.
    Rat a = con.a[t];
    Rat val = con.b / a;
    bool strict = con.rel == Rel::lt;
    if (a > 0) {
      if (!iv.has_hi || val < iv.hi) {
        iv.has_hi = true;
        iv.hi = val;
        iv.hi_strict = strict;
      } else if (val == iv.hi && strict) {
        iv.hi_strict = true;
      }
    } else {
      if (!iv.has_lo || val > iv.lo) {
        iv.has_lo = true;
        iv.lo = val;
        iv.lo_strict = strict;
      } else if (val == iv.lo && strict) {
        iv.lo_strict = true;
      }
    }
  }
  if (iv.empty()) return std::nullopt;
  return iv;
}

} // namespace btres

#ifndef BTRES_RATIONAL_HPP
#define BTRES_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "btres/errors.hpp"

namespace btres {

// All arithmetic in this project is exact. There is no floating point
// anywhere; minimality and d^2 = 0 are exact statements.
using Int = mpz_class;
using Rat = mpq_class;
using RatVec = std::vector<Rat>;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Int floor_int(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Int ceil_int(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Canonical textual form: "p" for integers, "p/q" otherwise.
inline std::string rat_to_string(const Rat& q) {
  return q.get_str();
}

// Parses "p" or "p/q"; throws ParseError on malformed input or zero denominator.
inline Rat parse_rat(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0)
    throw ParseError("malformed rational '" + s + "'");
  if (q.get_den() == 0)
    throw ParseError("zero denominator in rational '" + s + "'");
  q.canonicalize();
  return q;
}

inline long to_long(const Int& z) {
  if (!z.fits_slong_p())
    throw ValidationError("Overflow", "integer out of machine range: " + z.get_str());
  return z.get_si();
}

} // namespace btres

#endif

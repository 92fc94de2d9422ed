#ifndef BTRES_RANDOM_QUADRUPLE_HPP
#define BTRES_RANDOM_QUADRUPLE_HPP

#include <cstdint>
#include <optional>
#include <random>

#include "btres/stratification.hpp"

namespace btres {

// Seeded generator for the randomized property suites: k in {1,2}, n up to 6,
// psi entries in [-3,3], full rank. Instances rejected by the positive
// grading check are reported as nullopt by next_graded().
class QuadrupleGenerator {
public:
  explicit QuadrupleGenerator(std::uint64_t seed) : rng_(seed) {}

  Quadruple next();

  // Next quadruple that admits a positive grading; bails out after
  // max_attempts draws.
  Quadruple next_graded(std::size_t max_attempts = 1000);

private:
  std::mt19937_64 rng_;
};

} // namespace btres

#endif

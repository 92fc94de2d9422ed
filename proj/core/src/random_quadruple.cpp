#include "btres/random_quadruple.hpp"

#include "btres/errors.hpp"
#include "btres/grading.hpp"

namespace btres {

Quadruple QuadrupleGenerator::next() {
  std::uniform_int_distribution<int> coin(1, 2);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (;;) {
    Quadruple q;
    q.k = coin(rng_);
    std::uniform_int_distribution<int> nvars(static_cast<int>(q.k) + 1, 6);
    q.n = nvars(rng_);
    q.psi = IntMatrix(q.k, q.n);
    for (std::size_t i = 0; i < q.k; ++i)
      for (std::size_t j = 0; j < q.n; ++j) q.psi.at(i, j) = entry(rng_);
    if (rank(q.psi.to_rat()) == q.k) return q;
  }
}

Quadruple QuadrupleGenerator::next_graded(std::size_t max_attempts) {
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    Quadruple q = next();
    try {
      Stratification strat = Stratification::enumerate(q);
      find_positive_grading(strat);
      return q;
    } catch (const NoPositiveGradingError&) {
      continue;
    }
  }
  throw ValidationError("Exhausted", "no positivity-passing quadruple found");
}

} // namespace btres

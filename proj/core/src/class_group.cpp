#include "btres/class_group.hpp"

#include <sstream>

#include "btres/errors.hpp"

namespace btres {

std::string ClassId::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < free_part.size(); ++i) {
    if (i) os << ',';
    os << free_part[i];
  }
  if (!torsion.empty()) {
    os << ';';
    for (std::size_t i = 0; i < torsion.size(); ++i) {
      if (i) os << ',';
      os << torsion[i];
    }
  }
  os << ']';
  return os.str();
}

ClassGroup::ClassGroup(const IntMatrix& psi) {
  n_ = psi.cols();
  SmithResult snf = smith(psi.transpose()); // n x k
  u_ = std::move(snf.u);
  u_inv_ = std::move(snf.u_inv);
  rank_ = snf.invariant_factors.size();
  diag_ = snf.invariant_factors;
  for (std::size_t t = 0; t < rank_; ++t)
    if (diag_[t] > 1) {
      torsion_factors_.push_back(diag_[t]);
      torsion_slots_.push_back(t);
    }
}

ClassId ClassGroup::class_of(const std::vector<long>& a) const {
  if (a.size() != n_)
    throw ValidationError("Shape", "class_of vector length mismatch");
  std::vector<Int> av(n_);
  for (std::size_t i = 0; i < n_; ++i) av[i] = a[i];
  std::vector<Int> ua = u_.apply(av);
  ClassId id;
  for (std::size_t t : torsion_slots_) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), ua[t].get_mpz_t(), diag_[t].get_mpz_t());
    id.torsion.push_back(to_long(r));
  }
  for (std::size_t t = rank_; t < n_; ++t) id.free_part.push_back(to_long(ua[t]));
  return id;
}

std::vector<long> ClassGroup::representative(const ClassId& id) const {
  if (id.free_part.size() != free_rank() || id.torsion.size() != torsion_slots_.size())
    throw ValidationError("Shape", "class id shape mismatch");
  std::vector<Int> y(n_);
  for (std::size_t i = 0; i < torsion_slots_.size(); ++i)
    y[torsion_slots_[i]] = id.torsion[i];
  for (std::size_t i = 0; i < id.free_part.size(); ++i) y[rank_ + i] = id.free_part[i];
  std::vector<Int> a = u_inv_.apply(y);
  std::vector<long> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = to_long(a[i]);
  return out;
}

} // namespace btres

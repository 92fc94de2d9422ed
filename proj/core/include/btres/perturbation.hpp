#ifndef BTRES_PERTURBATION_HPP
#define BTRES_PERTURBATION_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "btres/grading.hpp"
#include "btres/hhl_complex.hpp"
#include "btres/poly_matrix.hpp"
#include "btres/stratification.hpp"

namespace btres {

// Splitting blocks kappa per (class, degree): kappa[c][i] maps class-degree-i
// chains to degree i+1. The homotopy used everywhere is h = -kappa; for the
// canonical choice kappa is the Moore-Penrose inverse of the class boundary.
struct Contraction {
  enum class Kind { moore_penrose, user };
  Kind kind = Kind::moore_penrose;
  std::vector<std::vector<RatMatrix>> blocks; // [class][degree 0..k-1]
};

Contraction moore_penrose_contraction(const Grading& grading, std::size_t top_dim);

// Validates user splitting blocks: kappa^2 = 0, d kappa d = d, kappa pi = 0,
// pi kappa = 0, rank pi_i = beta_i with pi = id - d kappa - kappa d. Throws
// ValidationError("InvalidContraction") with the failing identity.
Contraction user_contraction(const Grading& grading, std::size_t top_dim,
                             std::vector<std::vector<RatMatrix>> blocks);

// Per-class-and-degree harmonic representatives used for the small complex.
using HarmonicBases = std::vector<std::vector<std::vector<RatVec>>>; // [class][degree][vec]

// Canonical bases: RREF-kernel harmonic vectors for the Moore-Penrose
// contraction, pivot columns of im(pi) for a user contraction.
HarmonicBases default_bases(const Grading& grading, const Contraction& contraction,
                            std::size_t top_dim);

struct HarmonicGen {
  int class_index = -1;
  std::size_t degree = 0;
  std::size_t index = 0; // position within the class basis at this degree
};

// Base strong deformation retract of the associated graded complex onto its
// homology: maps are rational, the small differential is zero. All five SDR
// axioms are asserted exactly at build time.
struct SDRDatum {
  std::size_t length = 0;
  std::vector<std::vector<HarmonicGen>> hgens; // per degree 0..k
  std::vector<RatMatrix> incl;                 // |C_i| x |H_i|
  std::vector<RatMatrix> proj;                 // |H_i| x |C_i|
  std::vector<RatMatrix> h;                    // h[i]: |C_{i+1}| x |C_i|, i < k
  std::vector<RatMatrix> graded_d;             // constant differentials, use d0()

  const RatMatrix& d0(std::size_t i) const { return graded_d.at(i - 1); }
};

SDRDatum build_base_sdr(const LineBundleComplex& hhl, const Grading& grading,
                        const HarmonicBases& bases, const Contraction& contraction);

// Output of the homological perturbation lemma applied to delta = d - d0.
struct Perturbed {
  std::vector<PolyMatrix> delta;  // degree i -> i-1, i = 1..k
  std::vector<PolyMatrix> sigma;  // delta (h delta)^j summed
  std::vector<PolyMatrix> d_min;  // H_i -> H_{i-1}
  std::vector<PolyMatrix> i_inf;  // |C_i| x |H_i|
  std::vector<PolyMatrix> p_inf;  // |H_i| x |C_i|
  std::vector<PolyMatrix> h_inf;  // |C_{i+1}| x |C_i|
};

// Sums the geometric series Sigma until the next term vanishes; the loop
// bound is the number of distinct theta grades (NonNilpotent beyond it).
Perturbed perturb(const LineBundleComplex& hhl, const Grading& grading,
                  const SDRDatum& sdr);

struct MinimalResolution {
  LineBundleComplex complex;   // abstract generators labeled by class reps
  std::vector<std::vector<HarmonicGen>> hgens;
};

MinimalResolution assemble_minimal(const Grading& grading, const SDRDatum& sdr,
                                   const Perturbed& pert, std::size_t nvars);

// True iff every entry of every differential has zero constant term.
bool verify_minimality(const std::vector<PolyMatrix>& d_min);

struct IdentityReport {
  struct Item {
    std::string name;
    bool ok = true;
    std::string witness;
  };
  std::vector<Item> items;
  bool all_ok = true;

  void add(const std::string& name, bool ok, const std::string& witness = "");
};

// Symbolic check of the perturbed SDR: the five axioms against the full HHL
// differential, both chain-map conditions, d_min^2 = 0, plus the two series
// identities delta*h*Sigma = Sigma*h*delta = Sigma - delta and
// Sigma i p Sigma + Sigma d0 + d0 Sigma = 0.
IdentityReport verify_sdr_perturbed(const LineBundleComplex& hhl, const Grading& grading,
                                    const SDRDatum& sdr, const Perturbed& pert);

// Options and one-call driver for the whole pipeline.
struct PipelineOptions {
  // nullopt: Moore-Penrose. Otherwise user splitting blocks keyed by class id.
  std::optional<std::vector<std::tuple<ClassId, std::size_t, RatMatrix>>> contraction_blocks;
  // User harmonic representatives keyed by class id and degree.
  std::optional<std::vector<std::tuple<ClassId, std::size_t, std::vector<RatVec>>>> harmonic_vectors;
};

struct Pipeline {
  Quadruple quadruple;
  Stratification strat;
  LineBundleComplex hhl;
  Grading grading;
  Contraction contraction;
  HarmonicBases bases;
  SDRDatum sdr;
  Perturbed perturbed;
  MinimalResolution minimal;
};

// Runs stratify -> HHL -> verify -> grading -> SDR -> perturbation -> minimal
// resolution. Throws NoPositiveGradingError for inputs the filtration
// rejects; NotMinimal / NotAComplex are internal-consistency failures.
Pipeline run_pipeline(const Quadruple& q, const PipelineOptions& options = {});

} // namespace btres

#endif

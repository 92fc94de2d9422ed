#include "btres/perturbation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "btres/errors.hpp"
#include "btres/moore_penrose.hpp"

namespace btres {

namespace {

std::string place(int class_index, std::size_t degree) {
  return " (class #" + std::to_string(class_index) + ", degree " +
         std::to_string(degree) + ")";
}

// pi = id - d kappa - kappa d on one class block at one degree.
RatMatrix class_pi(const BMComplex& bm, const std::vector<RatMatrix>& kappa,
                   std::size_t degree, std::size_t k) {
  RatMatrix pi = RatMatrix::identity(bm.size(degree));
  if (degree + 1 <= k) pi = pi - bm.d(degree + 1) * kappa[degree];
  if (degree >= 1) pi = pi - kappa[degree - 1] * bm.d(degree);
  return pi;
}

} // namespace

Contraction moore_penrose_contraction(const Grading& grading, std::size_t top_dim) {
  Contraction c;
  c.kind = Contraction::Kind::moore_penrose;
  for (const BMComplex& bm : grading.classes) {
    std::vector<RatMatrix> blocks;
    for (std::size_t i = 0; i + 1 <= top_dim; ++i) blocks.push_back(mp_inverse(bm.d(i + 1)));
    c.blocks.push_back(std::move(blocks));
  }
  return c;
}

Contraction user_contraction(const Grading& grading, std::size_t top_dim,
                             std::vector<std::vector<RatMatrix>> blocks) {
  if (blocks.size() != grading.classes.size())
    throw ValidationError("InvalidContraction", "contraction block count mismatch");
  for (std::size_t c = 0; c < blocks.size(); ++c) {
    const BMComplex& bm = grading.classes[c];
    if (blocks[c].size() != top_dim)
      throw ValidationError("InvalidContraction", "contraction degree count mismatch");
    for (std::size_t i = 0; i + 1 <= top_dim; ++i)
      if (blocks[c][i].rows() != bm.size(i + 1) || blocks[c][i].cols() != bm.size(i))
        throw ValidationError("InvalidContraction",
                              "contraction block shape mismatch" + place(bm.class_index, i));

    const auto& kappa = blocks[c];
    for (std::size_t i = 0; i + 2 <= top_dim; ++i)
      if (!(kappa[i + 1] * kappa[i]).is_zero())
        throw ValidationError("InvalidContraction", "h^2 != 0" + place(bm.class_index, i));
    for (std::size_t i = 1; i <= top_dim; ++i) {
      RatMatrix dkd = bm.d(i) * kappa[i - 1] * bm.d(i);
      if (!(dkd == bm.d(i)))
        throw ValidationError("InvalidContraction",
                              "d h d != -d" + place(bm.class_index, i));
    }
    for (std::size_t i = 0; i <= top_dim; ++i) {
      RatMatrix pi = class_pi(bm, kappa, i, top_dim);
      if (rank(pi) != grading.betti.beta[c][i])
        throw ValidationError("InvalidContraction",
                              "rank(pi) != Betti number" + place(bm.class_index, i));
      if (i + 1 <= top_dim && !(kappa[i] * pi).is_zero())
        throw ValidationError("InvalidContraction", "h pi != 0" + place(bm.class_index, i));
      if (i >= 1 && !(pi * kappa[i - 1]).is_zero())
        throw ValidationError("InvalidContraction", "pi h != 0" + place(bm.class_index, i));
    }
  }
  Contraction c;
  c.kind = Contraction::Kind::user;
  c.blocks = std::move(blocks);
  return c;
}

HarmonicBases default_bases(const Grading& grading, const Contraction& contraction,
                            std::size_t top_dim) {
  HarmonicBases bases(grading.classes.size());
  for (std::size_t c = 0; c < grading.classes.size(); ++c) {
    const BMComplex& bm = grading.classes[c];
    bases[c].resize(top_dim + 1);
    for (std::size_t i = 0; i <= top_dim; ++i) {
      if (contraction.kind == Contraction::Kind::moore_penrose) {
        bases[c][i] = harmonic_basis(bm, i);
      } else {
        // Pivot columns of im(pi) give the critical-cell representatives.
        RatMatrix pi = class_pi(bm, contraction.blocks[c], i, top_dim);
        auto [r, pivots] = rref(pi);
        for (std::size_t p : pivots) bases[c][i].push_back(pi.column(p));
      }
    }
  }
  return bases;
}

SDRDatum build_base_sdr(const LineBundleComplex& hhl, const Grading& grading,
                        const HarmonicBases& bases, const Contraction& contraction) {
  const std::size_t k = hhl.length;

  SDRDatum sdr;
  sdr.length = k;
  sdr.hgens.resize(k + 1);

  // Global positions of each cell inside its HHL term.
  std::size_t max_cell = 0;
  for (const auto& term : hhl.terms)
    for (const Generator& gen : term) max_cell = std::max(max_cell, std::size_t(gen.cell));
  std::vector<std::size_t> pos(max_cell + 1);
  for (const auto& term : hhl.terms)
    for (std::size_t j = 0; j < term.size(); ++j) pos[term[j].cell] = j;

  for (std::size_t i = 1; i <= k; ++i) sdr.graded_d.push_back(hhl.d(i).constant_part());

  for (std::size_t i = 0; i <= k; ++i) {
    const std::size_t sz = hhl.terms[i].size();
    for (std::size_t c = 0; c < grading.classes.size(); ++c)
      for (std::size_t idx = 0; idx < bases[c][i].size(); ++idx)
        sdr.hgens[i].push_back({static_cast<int>(c), i, idx});
    const std::size_t hsz = sdr.hgens[i].size();

    RatMatrix incl(sz, hsz);
    RatMatrix proj(hsz, sz);
    std::size_t col = 0;
    for (std::size_t c = 0; c < grading.classes.size(); ++c) {
      const BMComplex& bm = grading.classes[c];
      const auto& vecs = bases[c][i];
      if (vecs.empty()) continue;
      if (grading.betti.beta[c][i] != vecs.size())
        throw ValidationError("BadUserBasis",
                              "basis size differs from Betti number" + place(bm.class_index, i));
      std::vector<std::size_t> cell_rows;
      for (int cell : bm.cells[i]) cell_rows.push_back(pos[cell]);

      RatMatrix w = RatMatrix::from_columns(bm.size(i), vecs);
      RatMatrix pi = class_pi(bm, contraction.blocks[c], i, k);
      if (contraction.kind == Contraction::Kind::user) {
        // Representatives must lie in im(pi) for coordinates to be defined.
        if (!(pi * w == w))
          throw ValidationError("BadUserBasis",
                                "basis is not fixed by pi" + place(bm.class_index, i));
      }
      RatMatrix wt = w.transpose();
      RatMatrix p_block = inverse(wt * w) * wt * pi;

      for (std::size_t v = 0; v < vecs.size(); ++v, ++col) {
        for (std::size_t r = 0; r < cell_rows.size(); ++r) {
          incl.at(cell_rows[r], col) = w.at(r, v);
          proj.at(col, cell_rows[r]) = p_block.at(v, r);
        }
      }
    }
    sdr.incl.push_back(std::move(incl));
    sdr.proj.push_back(std::move(proj));
  }

  for (std::size_t i = 0; i + 1 <= k; ++i) {
    RatMatrix h(hhl.terms[i + 1].size(), hhl.terms[i].size());
    for (std::size_t c = 0; c < grading.classes.size(); ++c) {
      const BMComplex& bm = grading.classes[c];
      const RatMatrix& kappa = contraction.blocks[c][i];
      std::vector<std::size_t> rows, cols;
      for (int cell : bm.cells[i + 1]) rows.push_back(pos[cell]);
      for (int cell : bm.cells[i]) cols.push_back(pos[cell]);
      for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t cc = 0; cc < cols.size(); ++cc)
          if (kappa.at(r, cc) != 0) h.at(rows[r], cols[cc]) = -kappa.at(r, cc);
    }
    sdr.h.push_back(std::move(h));
  }

  // The five SDR axioms, exactly, at build time.
  auto fail = [&](const std::string& which, std::size_t degree) {
    throw ValidationError("InvalidContraction",
                          "SDR axiom failed: " + which + " at degree " +
                              std::to_string(degree));
  };
  for (std::size_t i = 0; i <= k; ++i) {
    if (!(sdr.proj[i] * sdr.incl[i] == RatMatrix::identity(sdr.hgens[i].size())))
      fail("p i = id", i);
    RatMatrix rhs = RatMatrix::identity(hhl.terms[i].size());
    if (i + 1 <= k) rhs = rhs + sdr.d0(i + 1) * sdr.h[i];
    if (i >= 1) rhs = rhs + sdr.h[i - 1] * sdr.d0(i);
    if (!(sdr.incl[i] * sdr.proj[i] == rhs)) fail("i p = id + d h + h d", i);
  }
  for (std::size_t i = 0; i + 2 <= k; ++i)
    if (!(sdr.h[i + 1] * sdr.h[i]).is_zero()) fail("h^2 = 0", i);
  for (std::size_t i = 0; i + 1 <= k; ++i) {
    if (!(sdr.h[i] * sdr.incl[i]).is_zero()) fail("h i = 0", i);
    if (!(sdr.proj[i + 1] * sdr.h[i]).is_zero()) fail("p h = 0", i);
  }
  return sdr;
}

Perturbed perturb(const LineBundleComplex& hhl, const Grading& grading,
                  const SDRDatum& sdr) {
  const std::size_t k = hhl.length;
  const std::size_t n = hhl.nvars;

  std::set<Rat> grades;
  for (const BMComplex& bm : grading.classes) grades.insert(bm.theta_grade);
  const std::size_t bound = grades.size() + 1;

  Perturbed out;
  for (std::size_t i = 1; i <= k; ++i)
    out.delta.push_back(hhl.d(i) - PolyMatrix::from_rat(sdr.d0(i), n));

  for (std::size_t i = 1; i <= k; ++i) {
    PolyMatrix hd = PolyMatrix::from_rat(sdr.h[i - 1], n) * out.delta[i - 1];
    PolyMatrix term = out.delta[i - 1];
    PolyMatrix acc = term;
    std::size_t steps = 0;
    for (;;) {
      term = term * hd;
      if (term.is_zero()) break;
      if (++steps > bound)
        throw VerificationError("NonNilpotent",
                                "Sigma series did not terminate at degree " +
                                    std::to_string(i));
      acc = acc + term;
    }
    out.sigma.push_back(std::move(acc));
  }

  std::vector<PolyMatrix> incl, proj, h;
  for (std::size_t i = 0; i <= k; ++i) {
    incl.push_back(PolyMatrix::from_rat(sdr.incl[i], n));
    proj.push_back(PolyMatrix::from_rat(sdr.proj[i], n));
  }
  for (std::size_t i = 0; i + 1 <= k; ++i)
    h.push_back(PolyMatrix::from_rat(sdr.h[i], n));

  for (std::size_t i = 1; i <= k; ++i)
    out.d_min.push_back(proj[i - 1] * out.sigma[i - 1] * incl[i]);
  for (std::size_t i = 0; i <= k; ++i) {
    PolyMatrix ii = incl[i];
    if (i >= 1) ii = ii + h[i - 1] * out.sigma[i - 1] * incl[i];
    out.i_inf.push_back(std::move(ii));
    PolyMatrix pp = proj[i];
    if (i + 1 <= k) pp = pp + proj[i] * out.sigma[i] * h[i];
    out.p_inf.push_back(std::move(pp));
  }
  for (std::size_t i = 0; i + 1 <= k; ++i)
    out.h_inf.push_back(h[i] + h[i] * out.sigma[i] * h[i]);
  return out;
}

MinimalResolution assemble_minimal(const Grading& grading, const SDRDatum& sdr,
                                   const Perturbed& pert, std::size_t nvars) {
  MinimalResolution res;
  res.hgens = sdr.hgens;
  res.complex.length = sdr.length;
  res.complex.nvars = nvars;
  res.complex.terms.resize(sdr.length + 1);
  for (std::size_t i = 0; i <= sdr.length; ++i)
    for (const HarmonicGen& gen : sdr.hgens[i]) {
      Generator g;
      g.cell = -1;
      g.class_index = gen.class_index;
      g.bundle_a = grading.group.representative(grading.classes[gen.class_index].cls);
      res.complex.terms[i].push_back(std::move(g));
    }
  res.complex.differentials = pert.d_min;
  return res;
}

bool verify_minimality(const std::vector<PolyMatrix>& d_min) {
  for (const PolyMatrix& m : d_min)
    if (!m.constant_part().is_zero()) return false;
  return true;
}

void IdentityReport::add(const std::string& name, bool ok, const std::string& witness) {
  items.push_back({name, ok, witness});
  if (!ok) all_ok = false;
}

IdentityReport verify_sdr_perturbed(const LineBundleComplex& hhl, const Grading& grading,
                                    const SDRDatum& sdr, const Perturbed& pert) {
  (void)grading;
  const std::size_t k = hhl.length;
  const std::size_t n = hhl.nvars;
  IdentityReport rep;

  std::vector<PolyMatrix> incl, proj, h, d0;
  for (std::size_t i = 0; i <= k; ++i) {
    incl.push_back(PolyMatrix::from_rat(sdr.incl[i], n));
    proj.push_back(PolyMatrix::from_rat(sdr.proj[i], n));
  }
  for (std::size_t i = 0; i + 1 <= k; ++i) h.push_back(PolyMatrix::from_rat(sdr.h[i], n));
  for (std::size_t i = 1; i <= k; ++i) d0.push_back(PolyMatrix::from_rat(sdr.d0(i), n));

  auto check = [&](const std::string& name, bool ok, std::size_t degree) {
    rep.add(name, ok, ok ? "" : "degree " + std::to_string(degree));
  };

  for (std::size_t i = 0; i <= k; ++i)
    check("p_inf i_inf = id",
          pert.p_inf[i] * pert.i_inf[i] == PolyMatrix::identity(sdr.hgens[i].size(), n),
          i);
  for (std::size_t i = 0; i <= k; ++i) {
    PolyMatrix rhs = PolyMatrix::identity(hhl.terms[i].size(), n);
    if (i + 1 <= k) rhs = rhs + hhl.d(i + 1) * pert.h_inf[i];
    if (i >= 1) rhs = rhs + pert.h_inf[i - 1] * hhl.d(i);
    check("i_inf p_inf = id + d h_inf + h_inf d",
          pert.i_inf[i] * pert.p_inf[i] == rhs, i);
  }
  for (std::size_t i = 0; i + 2 <= k; ++i)
    check("h_inf^2 = 0", (pert.h_inf[i + 1] * pert.h_inf[i]).is_zero(), i);
  for (std::size_t i = 0; i + 1 <= k; ++i) {
    check("h_inf i_inf = 0", (pert.h_inf[i] * pert.i_inf[i]).is_zero(), i);
    check("p_inf h_inf = 0", (pert.p_inf[i + 1] * pert.h_inf[i]).is_zero(), i);
  }
  for (std::size_t i = 1; i <= k; ++i) {
    check("i_inf d_min = d i_inf",
          pert.i_inf[i - 1] * pert.d_min[i - 1] == hhl.d(i) * pert.i_inf[i], i);
    check("p_inf d = d_min p_inf",
          pert.d_min[i - 1] * pert.p_inf[i] == pert.p_inf[i - 1] * hhl.d(i), i);
  }
  for (std::size_t i = 1; i + 1 <= k; ++i)
    check("d_min^2 = 0", (pert.d_min[i - 1] * pert.d_min[i]).is_zero(), i);

  // Series identities behind the lemma.
  for (std::size_t i = 1; i <= k; ++i) {
    PolyMatrix smd = pert.sigma[i - 1] - pert.delta[i - 1];
    check("delta h Sigma = Sigma - delta",
          pert.delta[i - 1] * h[i - 1] * pert.sigma[i - 1] == smd, i);
    check("Sigma h delta = Sigma - delta",
          pert.sigma[i - 1] * h[i - 1] * pert.delta[i - 1] == smd, i);
  }
  for (std::size_t i = 2; i <= k; ++i) {
    PolyMatrix lhs = pert.sigma[i - 2] * incl[i - 1] * proj[i - 1] * pert.sigma[i - 1] +
                     pert.sigma[i - 2] * d0[i - 1] + d0[i - 2] * pert.sigma[i - 1];
    check("Sigma i p Sigma + Sigma d0 + d0 Sigma = 0", lhs.is_zero(), i);
  }
  return rep;
}

Pipeline run_pipeline(const Quadruple& q, const PipelineOptions& options) {
  Pipeline pl;
  pl.quadruple = q;
  pl.strat = Stratification::enumerate(q);
  pl.hhl = build_hhl_complex(pl.strat);
  require_complex(pl.hhl);
  pl.grading = build_grading(pl.strat, pl.hhl);
  const std::size_t k = q.k;

  if (options.contraction_blocks) {
    std::vector<std::vector<RatMatrix>> blocks(pl.grading.classes.size());
    for (std::size_t c = 0; c < pl.grading.classes.size(); ++c) {
      const BMComplex& bm = pl.grading.classes[c];
      for (std::size_t i = 0; i + 1 <= k; ++i)
        blocks[c].push_back(RatMatrix(bm.size(i + 1), bm.size(i)));
    }
    std::map<ClassId, std::size_t> by_id;
    for (std::size_t c = 0; c < pl.grading.classes.size(); ++c)
      by_id[pl.grading.classes[c].cls] = c;
    for (const auto& [cls, degree, block] : *options.contraction_blocks) {
      auto it = by_id.find(cls);
      if (it == by_id.end())
        throw ValidationError("InvalidContraction",
                              "contraction names unknown class " + cls.to_string());
      if (degree >= k)
        throw ValidationError("InvalidContraction", "contraction degree out of range");
      blocks[it->second][degree] = block;
    }
    pl.contraction = user_contraction(pl.grading, k, std::move(blocks));
  } else {
    pl.contraction = moore_penrose_contraction(pl.grading, k);
  }

  pl.bases = default_bases(pl.grading, pl.contraction, k);
  if (options.harmonic_vectors) {
    std::map<ClassId, std::size_t> by_id;
    for (std::size_t c = 0; c < pl.grading.classes.size(); ++c)
      by_id[pl.grading.classes[c].cls] = c;
    for (const auto& [cls, degree, vecs] : *options.harmonic_vectors) {
      auto it = by_id.find(cls);
      if (it == by_id.end())
        throw ValidationError("BadUserBasis", "basis names unknown class " + cls.to_string());
      if (degree > k)
        throw ValidationError("BadUserBasis", "basis degree out of range");
      if (pl.contraction.kind == Contraction::Kind::moore_penrose)
        validate_harmonic_basis(pl.grading.classes[it->second], degree, vecs);
      pl.bases[it->second][degree] = vecs;
    }
  }

  pl.sdr = build_base_sdr(pl.hhl, pl.grading, pl.bases, pl.contraction);
  pl.perturbed = perturb(pl.hhl, pl.grading, pl.sdr);
  pl.minimal = assemble_minimal(pl.grading, pl.sdr, pl.perturbed, q.n);

  for (std::size_t i = 1; i + 1 <= k; ++i)
    if (!(pl.perturbed.d_min[i - 1] * pl.perturbed.d_min[i]).is_zero())
      throw VerificationError("NotAComplex", "d_min^2 != 0 at degree " + std::to_string(i));
  if (!verify_minimality(pl.perturbed.d_min))
    throw VerificationError("NotMinimal", "a minimal differential has a unit entry");
  return pl;
}

} // namespace btres

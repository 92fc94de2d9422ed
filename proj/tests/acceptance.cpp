// Acceptance suite: one pass/fail line per criterion, exact comparisons
// throughout. "Up to signed permutation/scaling" is realized by matching
// cells geometrically, then searching the per-cell sign assignment and
// allowing nonzero rational scalings where stated.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "btres/errors.hpp"
#include "btres/input.hpp"
#include "btres/moore_penrose.hpp"
#include "btres/perturbation.hpp"
#include "btres/random_quadruple.hpp"
#include "btres/zigzag.hpp"
#include "test_util.hpp"

using namespace btres;
using namespace btres::testutil;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const std::string& detail = "") {
  std::cout << "criterion " << criterion << ": " << (ok ? "PASS" : "FAIL");
  if (!detail.empty()) std::cout << "  (" << detail << ")";
  std::cout << std::endl;
  if (!ok) ++g_failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Poly X() { return Poly::variable(3, 0); }
Poly Y() { return Poly::variable(3, 1); }
Poly Z() { return Poly::variable(3, 2); }
Poly C3(long v) { return Poly::constant(3, Rat(v)); }

std::vector<std::vector<Poly>> paper_d1() {
  return {
      {-X(), C3(0), C3(0), C3(1)}, {-Z(), C3(1), C3(0), C3(0)},
      {C3(0), -Z(), C3(1), C3(0)}, {C3(0), C3(0), -Z(), C3(1)},
      {-Y(), C3(1), C3(0), C3(0)}, {C3(0), -Y(), C3(1), C3(0)},
      {C3(0), C3(0), -Y(), C3(1)}};
}

std::vector<std::vector<Poly>> paper_d0() {
  return {{Y() - Z(), X(), C3(0), -Y(), -X(), C3(0), Z()},
          {C3(0), -Y(), C3(1), C3(0), Z(), C3(-1), C3(0)},
          {C3(0), C3(0), -Y(), C3(1), C3(0), Z(), C3(-1)}};
}

std::optional<Rat> proportional(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return std::nullopt;
  if (p.terms().size() != q.terms().size()) return std::nullopt;
  Rat c = p.terms().begin()->second / q.terms().begin()->second;
  if (p == q.scaled(c)) return c;
  return std::nullopt;
}

PolyMatrix reorder(const PolyMatrix& m, const std::vector<std::size_t>& rows,
                   const std::vector<std::size_t>& cols) {
  PolyMatrix out(rows.size(), cols.size(), m.nvars());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out.at(i, j) = m.at(rows[i], cols[j]);
  return out;
}

struct P311 {
  Pipeline pl;
  std::map<std::string, int> named;
  std::vector<int> vcells, ecells, fcells;
  std::vector<std::size_t> vpos, epos, fpos;
  SignMatcher matcher;
  bool matrices_match = false;

  P311() : pl(run_pipeline(p311())), named(p311_named_cells(pl.strat)) {
    std::vector<std::size_t> pos(pl.strat.cells().size());
    for (std::size_t d = 0; d <= 2; ++d)
      for (std::size_t j = 0; j < pl.hhl.terms[d].size(); ++j)
        pos[pl.hhl.terms[d][j].cell] = j;
    for (int i = 1; i <= 3; ++i) {
      vcells.push_back(named["V" + std::to_string(i)]);
      vpos.push_back(pos[vcells.back()]);
    }
    for (int i = 1; i <= 7; ++i) {
      ecells.push_back(named["E" + std::to_string(i)]);
      epos.push_back(pos[ecells.back()]);
    }
    for (int i = 1; i <= 4; ++i) {
      fcells.push_back(named["F" + std::to_string(i)]);
      fpos.push_back(pos[fcells.back()]);
    }
    PolyMatrix our_d1 = reorder(pl.hhl.d(2), epos, fpos);
    PolyMatrix our_d0 = reorder(pl.hhl.d(1), vpos, epos);
    matrices_match = matcher.add_matrix(paper_d1(), our_d1, ecells, fcells) &&
                     matcher.add_matrix(paper_d0(), our_d0, vcells, ecells) &&
                     matcher.solve();
  }

  int sgn(const std::string& name) { return matcher.sign_of(named.at(name)); }

  Rat kappa(const std::string& up, const std::string& down) {
    int u = named.at(up), d = named.at(down);
    int cls = pl.grading.cell_class[d];
    const RatMatrix& k = pl.contraction.blocks[cls][pl.strat.cell(d).dim];
    return k.at(pl.grading.cell_pos[u], pl.grading.cell_pos[d]);
  }
};

void criterion_1(P311& fx) {
  auto start = Clock::now();
  Stratification fresh = Stratification::enumerate(p311());
  double elapsed = seconds_since(start);

  bool ok = fresh.cells_of_dim(0).size() == 3 && fresh.cells_of_dim(1).size() == 7 &&
            fresh.cells_of_dim(2).size() == 4;
  auto cls = [&](const std::string& name) {
    return fx.pl.grading.cell_class[fx.named.at(name)];
  };
  const std::vector<std::vector<std::string>> partition = {
      {"V1"},
      {"V3", "E1", "E4", "E7", "F4"},
      {"V2", "E3", "E6", "F3"},
      {"E2", "E5", "F2"},
      {"F1"}};
  std::set<int> seen;
  for (const auto& part : partition) {
    std::set<int> ids;
    for (const auto& name : part) ids.insert(cls(name));
    ok = ok && ids.size() == 1;
    seen.insert(*ids.begin());
  }
  ok = ok && seen.size() == 5 && fx.pl.grading.classes.size() == 5;
  ok = ok && elapsed < 5.0;
  std::ostringstream os;
  os << "3+7+4 cells, published partition, " << elapsed << " s";
  report(1, ok, os.str());
}

void criterion_2(P311& fx) {
  bool ok = fx.matrices_match;
  ok = ok && (fx.pl.hhl.d(1) * fx.pl.hhl.d(2)).is_zero();
  report(2, ok, "d1, d0 up to signed permutation; d0*d1 = 0");
}

void criterion_3(P311& fx) {
  struct Expect {
    const char* up;
    const char* down;
    Rat value;
  };
  const std::vector<Expect> red = {
      {"F4", "E1", Rat(1, 3)},  {"F4", "E4", Rat(1, 3)},  {"F4", "E7", Rat(1, 3)},
      {"E1", "V3", Rat(0)},     {"E4", "V3", Rat(1, 2)},  {"E7", "V3", Rat(-1, 2)},
      {"F3", "E3", Rat(1, 2)},  {"F3", "E6", Rat(1, 2)},  {"E3", "V2", Rat(1, 2)},
      {"E6", "V2", Rat(-1, 2)}, {"F2", "E2", Rat(1, 2)},  {"F2", "E5", Rat(1, 2)}};
  bool ok = fx.matrices_match;
  for (const auto& e : red) {
    Rat expected = e.value * fx.sgn(e.up) * fx.sgn(e.down);
    if (fx.kappa(e.up, e.down) != expected) ok = false;
  }
  report(3, ok, "Moore-Penrose blocks equal the published red arrows");
}

void criterion_4(P311& fx) {
  auto cls = [&](const std::string& name) {
    return fx.pl.grading.cell_class[fx.named.at(name)];
  };
  const auto& beta = fx.pl.grading.betti.beta;
  bool ok = beta.size() == 5;
  for (std::size_t c = 0; c < beta.size() && ok; ++c)
    for (std::size_t i = 0; i < beta[c].size(); ++i) {
      std::size_t expect = 0;
      if (c == std::size_t(cls("V1")) && i == 0) expect = 1;
      if (c == std::size_t(cls("F4")) && i == 1) expect = 1;
      if (c == std::size_t(cls("F2")) && i == 1) expect = 1;
      if (c == std::size_t(cls("F1")) && i == 2) expect = 1;
      if (beta[c][i] != expect) ok = false;
    }
  ok = ok && fx.pl.grading.betti.total(0) == 1 && fx.pl.grading.betti.total(1) == 2 &&
       fx.pl.grading.betti.total(2) == 1;
  report(4, ok, "Betti table (1,2,1) at the published classes");
}

void criterion_5(P311& fx) {
  // Run with the published harmonic representative (-2,1,1), written in our
  // orientation via the matched signs.
  int cls_idx = fx.pl.grading.cell_class[fx.named.at("F4")];
  const BMComplex& bm = fx.pl.grading.classes[cls_idx];
  RatVec rep_vec(3);
  const std::vector<std::pair<std::string, Rat>> published = {
      {"E1", Rat(-2)}, {"E4", Rat(1)}, {"E7", Rat(1)}};
  for (const auto& [name, coef] : published)
    rep_vec[fx.pl.grading.cell_pos[fx.named.at(name)]] = coef * fx.sgn(name);
  (void)bm;

  PipelineOptions opts;
  opts.harmonic_vectors = {{fx.pl.grading.classes[cls_idx].cls, std::size_t(1), {rep_vec}}};
  Pipeline pl = run_pipeline(p311(), opts);

  Poly lin = Y() - Z();
  Poly cubic = X().scaled(2) - ((Y() + Z()) * (Y() + Z()) * (Y() + Z())).scaled(Rat(1, 4));
  const PolyMatrix& d2 = pl.minimal.complex.d(2);
  const PolyMatrix& d1 = pl.minimal.complex.d(1);

  bool up_ok = (proportional(d2.at(0, 0), lin) && proportional(d2.at(1, 0), cubic)) ||
               (proportional(d2.at(0, 0), cubic) && proportional(d2.at(1, 0), lin));
  bool down_ok = (proportional(d1.at(0, 0), lin) && proportional(d1.at(0, 1), cubic)) ||
                 (proportional(d1.at(0, 0), cubic) && proportional(d1.at(0, 1), lin));

  // Ideal identification: the cubic slot reduces to a multiple of x - y^3
  // under z -> y.
  std::map<std::size_t, Poly> z_to_y{{2, Y()}};
  const Poly& cubic_slot =
      proportional(d2.at(0, 0), cubic) ? d2.at(0, 0) : d2.at(1, 0);
  auto reduced = proportional(cubic_slot.substitute(z_to_y), X() - Y() * Y() * Y());
  bool subst_ok = reduced.has_value() && *reduced != 0;

  report(5, up_ok && down_ok && subst_ok,
         "entries (y-z, 2x-(y+z)^3/4) up to scaling; z->y gives x-y^3");
}

void criterion_6(P311& fx) {
  const std::vector<std::pair<std::string, std::string>> matching = {
      {"V2", "E3"}, {"V3", "E4"}, {"E5", "F2"}, {"E6", "F3"}, {"E7", "F4"}};
  std::map<std::pair<int, std::size_t>, RatMatrix> blocks;
  for (const auto& [dn, un] : matching) {
    int down = fx.named.at(dn), up = fx.named.at(un);
    int cls = fx.pl.grading.cell_class[down];
    const BMComplex& bm = fx.pl.grading.classes[cls];
    std::size_t degree = fx.pl.strat.cell(down).dim;
    auto key = std::make_pair(cls, degree);
    if (!blocks.count(key))
      blocks.emplace(key, RatMatrix(bm.size(degree + 1), bm.size(degree)));
    Rat dent =
        bm.d(degree + 1).at(fx.pl.grading.cell_pos[down], fx.pl.grading.cell_pos[up]);
    blocks.at(key).at(fx.pl.grading.cell_pos[up], fx.pl.grading.cell_pos[down]) =
        1 / dent;
  }
  PipelineOptions opts;
  opts.contraction_blocks = std::vector<std::tuple<ClassId, std::size_t, RatMatrix>>{};
  for (auto& [key, m] : blocks)
    opts.contraction_blocks->emplace_back(fx.pl.grading.classes[key.first].cls,
                                          key.second, std::move(m));
  bool ok = false;
  std::string detail = "Morse matching gives (y-z, x-y^3) up to sign/scaling";
  try {
    Pipeline pl = run_pipeline(p311(), opts);
    Poly lin = Y() - Z();
    Poly xy3 = X() - Y() * Y() * Y();
    const PolyMatrix& d2 = pl.minimal.complex.d(2);
    const PolyMatrix& d1 = pl.minimal.complex.d(1);
    auto pm_one = [&](const Poly& p, const Poly& q) {
      auto c = proportional(p, q);
      return c && (*c == 1 || *c == -1);
    };
    bool up_ok = (pm_one(d2.at(0, 0), lin) && pm_one(d2.at(1, 0), xy3)) ||
                 (pm_one(d2.at(0, 0), xy3) && pm_one(d2.at(1, 0), lin));
    bool down_ok = (pm_one(d1.at(0, 0), lin) && pm_one(d1.at(0, 1), xy3)) ||
                   (pm_one(d1.at(0, 0), xy3) && pm_one(d1.at(0, 1), lin));
    ok = up_ok && down_ok && verify_minimality(pl.perturbed.d_min);
  } catch (const Error& e) {
    detail = e.what();
  }
  report(6, ok, detail);
}

void criterion_7(P311& fx) {
  PathOracle oracle(fx.pl.strat, fx.pl.hhl, fx.pl.grading, fx.pl.contraction);
  int f1 = fx.named.at("F1");

  auto p1 = oracle.enumerate_paths(f1, fx.named.at("E1"));
  int s_f1e1 = fx.sgn("F1") * fx.sgn("E1");
  bool one_ok = p1.size() == 1 &&
                oracle.sigma_via_paths(f1, fx.named.at("E1")) == (-X()).scaled(s_f1e1);

  auto p4 = oracle.enumerate_paths(f1, fx.named.at("E4"));
  Poly expect4 =
      (Z() * (Y() + Z()) * (Y() + Z())).scaled(Rat(-1, 4) * fx.sgn("F1") * fx.sgn("E4"));
  bool four_ok =
      p4.size() == 4 && oracle.sigma_via_paths(f1, fx.named.at("E4")) == expect4;

  auto cc = oracle.crosscheck_sigma(fx.pl.perturbed);
  report(7, one_ok && four_ok && cc.ok,
         "1 path to E1 (-x), 4 paths to E4 (-z(y+z)^2/4), full crosscheck");
}

void criterion_8() {
  auto start = Clock::now();
  QuadrupleGenerator gen(20260810);
  const std::size_t target = 200;
  std::size_t done = 0;
  bool ok = true;
  std::string detail;

  while (done < target && ok) {
    Quadruple q;
    try {
      q = gen.next_graded();
    } catch (const Error& e) {
      ok = false;
      detail = e.what();
      break;
    }
    try {
      Pipeline pl = run_pipeline(q);
      // d^2 = 0 (also asserted inside the pipeline).
      for (std::size_t i = 1; i + 1 <= q.k; ++i)
        if (!(pl.hhl.d(i) * pl.hhl.d(i + 1)).is_zero()) ok = false;
      // Hodge rank identity and Euler consistency per class.
      for (std::size_t c = 0; c < pl.grading.classes.size(); ++c) {
        const BMComplex& bm = pl.grading.classes[c];
        long euler_cells = 0, euler_betti = 0;
        for (std::size_t i = 0; i <= q.k; ++i) {
          std::size_t r_out = i >= 1 ? rank(bm.d(i)) : 0;
          std::size_t r_in = i + 1 <= q.k ? rank(bm.d(i + 1)) : 0;
          if (bm.size(i) != r_out + pl.grading.betti.beta[c][i] + r_in) ok = false;
          long sign = i % 2 == 0 ? 1 : -1;
          euler_cells += sign * static_cast<long>(bm.size(i));
          euler_betti += sign * static_cast<long>(pl.grading.betti.beta[c][i]);
        }
        if (euler_cells != euler_betti) ok = false;
      }
      // The perturbed-SDR identity suite, d_min^2 = 0 and minimality.
      IdentityReport rep = verify_sdr_perturbed(pl.hhl, pl.grading, pl.sdr, pl.perturbed);
      if (!rep.all_ok) ok = false;
      if (!verify_minimality(pl.perturbed.d_min)) ok = false;
      // Combinatorial Sigma equals the algebraic one.
      PathOracle oracle(pl.strat, pl.hhl, pl.grading, pl.contraction);
      if (!oracle.crosscheck_sigma(pl.perturbed).ok) ok = false;
      if (!ok) detail = "failure on psi:\n" + q.psi.to_string();
    } catch (const Error& e) {
      ok = false;
      detail = std::string(e.what()) + " on psi:\n" + q.psi.to_string();
    }
    ++done;
  }
  double elapsed = seconds_since(start);
  ok = ok && elapsed < 300.0;
  std::ostringstream os;
  os << done << " instances, " << elapsed << " s";
  if (!detail.empty()) os << "; " << detail;
  report(8, ok, os.str());
}

void criterion_9() {
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<int> dim(1, 6);
  std::uniform_int_distribution<int> entry(-3, 3);
  bool ok = true;
  const std::size_t target = 200;
  for (std::size_t t = 0; t < target && ok; ++t) {
    std::size_t rows = dim(rng), cols = dim(rng);
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = entry(rng);
    RatMatrix p = mp_inverse(m);
    if (!verify_penrose(m, p)) ok = false;
    if (!(p == mp_inverse_hedge(m))) ok = false;
    for (std::size_t i = 0; i < cols && ok; ++i)
      for (std::size_t j = 0; j < rows; ++j)
        if (mp_entry(m, i, j) != p.at(i, j)) ok = false;
  }
  report(9, ok, "200 random matrices up to 6x6, Penrose + hedge + entry formulas");
}

void criterion_10() {
  bool ok = false;
  try {
    Pipeline pl = run_pipeline(p1_point());
    Poly diff = Poly::variable(2, 0) - Poly::variable(2, 1);
    const Poly& e = pl.minimal.complex.d(1).at(0, 0);
    ok = pl.minimal.complex.terms[0].size() == 1 &&
         pl.minimal.complex.terms[1].size() == 1 && (e == diff || e == -diff);
    // Degrees: O <- O(-1), i.e. the twist class of the degree-1 term pairs to
    // 1 under the quotient functional.
    const auto& cls = pl.grading.classes[pl.minimal.complex.terms[1][0].class_index].cls;
    ok = ok && cls.free_part.size() == 1 && std::abs(cls.free_part[0]) == 1;
  } catch (const Error&) {
    ok = false;
  }
  report(10, ok, "identity point of P^1: 0 -> O(-1) -> O -> 0 with +-(x1-x2)");
}

void criterion_11(const std::string& tool, const std::string& inputs_dir) {
  bool lib_ok = false;
  try {
    run_pipeline(plane_identity());
  } catch (const NoPositiveGradingError&) {
    lib_ok = true;
  }
  // The HHL complex of the rejected input still exists with the Koszul-like
  // entries +-(x_i - 1).
  Stratification s = Stratification::enumerate(plane_identity());
  LineBundleComplex hhl = build_hhl_complex(s);
  Poly x1m1 = Poly::variable(2, 0) - Poly::constant(2, 1);
  Poly x2m1 = Poly::variable(2, 1) - Poly::constant(2, 1);
  int seen = 0;
  for (std::size_t r = 0; r < hhl.d(2).rows(); ++r) {
    const Poly& e = hhl.d(2).at(r, 0);
    if (e == x1m1 || e == -x1m1 || e == x2m1 || e == -x2m1) ++seen;
  }
  lib_ok = lib_ok && seen == 2;

  bool cli_ok = true;
  std::string detail = "library rejection + HHL emission";
  if (!tool.empty()) {
    std::filesystem::path outdir =
        std::filesystem::temp_directory_path() / "btres_acceptance_out";
    std::filesystem::remove_all(outdir);
    std::string cmd = tool + " minres --input " + inputs_dir +
                      "/plane_identity.json --emit report,matrices --out " +
                      outdir.string() + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    cli_ok = code == 4;
    std::ifstream report_file(outdir / "report.txt");
    std::stringstream buf;
    buf << report_file.rdbuf();
    std::string text = buf.str();
    cli_ok = cli_ok && text.find("[hhl]") != std::string::npos &&
             text.find("[rejected]") != std::string::npos;
    detail = "exit code 4 with HHL artifacts still written";
  }
  report(11, lib_ok && cli_ok, detail);
}

} // namespace

int main(int argc, char** argv) {
  std::string tool = argc > 1 ? argv[1] : "";
  std::string inputs = argc > 2 ? argv[2] : "inputs";

  P311 fixture;
  criterion_1(fixture);
  criterion_2(fixture);
  criterion_3(fixture);
  criterion_4(fixture);
  criterion_5(fixture);
  criterion_6(fixture);
  criterion_7(fixture);
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11(tool, inputs);

  if (g_failures) {
    std::cout << g_failures << " criteria FAILED" << std::endl;
    return 1;
  }
  std::cout << "all criteria passed" << std::endl;
  return 0;
}

// Command-line driver: stratifications, HHL complexes, Betti tables, minimal
// resolutions, zig-zag path listings, exact pseudoinverses and symbolic
// verification, over exact rational arithmetic throughout.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "btres/errors.hpp"
#include "btres/input.hpp"
#include "btres/moore_penrose.hpp"
#include "btres/random_quadruple.hpp"
#include "btres/report.hpp"
#include "btres/svg.hpp"
#include "btres/zigzag.hpp"

namespace {

using namespace btres;

struct Cli {
  std::string input;
  std::string contraction;     // overrides the input file when set
  std::string harmonic_basis;  // overrides the input file when set
  std::vector<std::string> emit;
  std::string out_dir;
  std::string pair;
  std::uint64_t seed = 0;
  std::size_t count = 25;
  bool has_seed = false;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("Io", "cannot read file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& dir, const std::string& name,
                const std::string& content) {
  std::filesystem::create_directories(dir);
  std::ofstream out(std::filesystem::path(dir) / name, std::ios::binary);
  if (!out) throw ValidationError("Io", "cannot write file: " + name);
  out << content;
}

void deliver(const Cli& cli, const std::string& name, const std::string& content) {
  if (cli.out_dir.empty())
    std::cout << content;
  else
    write_file(cli.out_dir, name, content);
}

InputSpec load_spec(const Cli& cli) {
  if (cli.input.empty())
    throw ValidationError("Io", "--input FILE is required for this subcommand");
  InputSpec spec = parse_input(slurp(cli.input));
  if (!cli.contraction.empty()) spec.options.contraction = cli.contraction;
  if (!cli.harmonic_basis.empty()) spec.options.harmonic_basis = cli.harmonic_basis;
  if (!cli.emit.empty()) spec.options.emit = cli.emit;
  return spec;
}

PipelineOptions pipeline_options(const InputSpec& spec) {
  PipelineOptions opts;
  const std::string& c = spec.options.contraction;
  if (c != "moore-penrose" && c != "mp")
    opts.contraction_blocks = parse_contraction_file(slurp(c));
  const std::string& h = spec.options.harmonic_basis;
  if (h != "canonical") opts.harmonic_vectors = parse_harmonic_file(slurp(h));
  return opts;
}

bool wants(const InputSpec& spec, const std::string& what) {
  for (const std::string& e : spec.options.emit)
    if (e == what) return true;
  return false;
}

void emit_pipeline_artifacts(const Cli& cli, const InputSpec& spec, const Pipeline& pl) {
  if (wants(spec, "report")) {
    std::string report = emit_report_cells(pl.strat, pl.grading.group) +
                         emit_report_hhl(pl.strat, pl.hhl) + emit_report_betti(pl.grading) +
                         emit_report_minres(pl);
    deliver(cli, "report.txt", report);
  }
  if (wants(spec, "matrices"))
    deliver(cli, "matrices.txt", emit_matrices_text(pl.strat, pl.hhl, &pl.perturbed.d_min));
  if (wants(spec, "m2")) deliver(cli, "resolution.m2", emit_m2(pl));
  if (wants(spec, "svg") && pl.quadruple.k == 2)
    deliver(cli, "stratification.svg", emit_svg(pl.strat));
}

int cmd_stratify(const Cli& cli) {
  InputSpec spec = load_spec(cli);
  Stratification strat = Stratification::enumerate(spec.quadruple);
  ClassGroup group(spec.quadruple.psi);
  deliver(cli, "report.txt", emit_report_cells(strat, group));
  return 0;
}

int cmd_hhl(const Cli& cli) {
  InputSpec spec = load_spec(cli);
  Stratification strat = Stratification::enumerate(spec.quadruple);
  ClassGroup group(spec.quadruple.psi);
  LineBundleComplex hhl = build_hhl_complex(strat);
  require_complex(hhl);
  std::string report = emit_report_cells(strat, group) + emit_report_hhl(strat, hhl);
  deliver(cli, "report.txt", report);
  if (wants(spec, "matrices"))
    deliver(cli, "matrices.txt", emit_matrices_text(strat, hhl, nullptr));
  return 0;
}

int cmd_betti(const Cli& cli) {
  InputSpec spec = load_spec(cli);
  Stratification strat = Stratification::enumerate(spec.quadruple);
  LineBundleComplex hhl = build_hhl_complex(strat);
  require_complex(hhl);
  Grading grading = build_grading(strat, hhl);
  deliver(cli, "report.txt", emit_report_betti(grading));
  return 0;
}

// On rejected inputs the stratification and HHL artifacts are still written.
int cmd_minres(const Cli& cli) {
  InputSpec spec = load_spec(cli);
  try {
    Pipeline pl = run_pipeline(spec.quadruple, pipeline_options(spec));
    emit_pipeline_artifacts(cli, spec, pl);
    return 0;
  } catch (const NoPositiveGradingError& e) {
    Stratification strat = Stratification::enumerate(spec.quadruple);
    ClassGroup group(spec.quadruple.psi);
    LineBundleComplex hhl = build_hhl_complex(strat);
    std::string report = emit_report_cells(strat, group) + emit_report_hhl(strat, hhl) +
                         "[rejected]\n" + e.what() + "\n";
    deliver(cli, "report.txt", report);
    if (wants(spec, "matrices"))
      deliver(cli, "matrices.txt", emit_matrices_text(strat, hhl, nullptr));
    std::cerr << "error [NoPositiveGrading] " << e.what() << "\n";
    return static_cast<int>(errc::no_positive_grading);
  }
}

int cmd_paths(const Cli& cli) {
  InputSpec spec = load_spec(cli);
  auto colon = cli.pair.find(':');
  if (cli.pair.empty() || colon == std::string::npos)
    throw ValidationError("Io", "--pair NAME:NAME is required, e.g. --pair F1:E4");
  Pipeline pl = run_pipeline(spec.quadruple, pipeline_options(spec));
  auto sigma = pl.strat.cell_by_name(cli.pair.substr(0, colon));
  auto tau = pl.strat.cell_by_name(cli.pair.substr(colon + 1));
  if (!sigma || !tau)
    throw ValidationError("Io", "unknown cell name in --pair " + cli.pair);
  PathOracle oracle(pl.strat, pl.hhl, pl.grading, pl.contraction);
  deliver(cli, "paths.txt",
          emit_report_paths(pl.strat, oracle, *sigma, *tau,
                            pl.quadruple.variable_names()));
  return 0;
}

int cmd_mp(const Cli& cli) {
  if (cli.input.empty())
    throw ValidationError("Io", "--input FILE with a plain-text matrix is required");
  RatMatrix a = parse_matrix_text(slurp(cli.input));
  RatMatrix p = mp_inverse(a);
  std::ostringstream os;
  os << p.rows() << ' ' << p.cols() << '\n' << p.to_string();
  deliver(cli, "pseudoinverse.txt", os.str());
  return 0;
}

int verify_one(const Quadruple& q, const PipelineOptions& opts, std::ostream& os) {
  Pipeline pl = run_pipeline(q, opts);
  IdentityReport rep = verify_sdr_perturbed(pl.hhl, pl.grading, pl.sdr, pl.perturbed);
  PathOracle oracle(pl.strat, pl.hhl, pl.grading, pl.contraction);
  auto cc = oracle.crosscheck_sigma(pl.perturbed);
  rep.add("path-sum Sigma = algebraic Sigma", cc.ok, cc.ok ? "" : cc.message);
  rep.add("minimality (zero constant terms)", verify_minimality(pl.perturbed.d_min));
  os << emit_report_identities(rep);
  return rep.all_ok ? 0 : static_cast<int>(errc::verification);
}

int cmd_verify(const Cli& cli) {
  if (cli.has_seed) {
    // Seeded property sweep over random positivity-passing quadruples.
    QuadrupleGenerator gen(cli.seed);
    std::size_t rejected = 0;
    for (std::size_t i = 0; i < cli.count; ++i) {
      Quadruple q;
      for (;;) {
        q = gen.next();
        try {
          Stratification strat = Stratification::enumerate(q);
          find_positive_grading(strat);
          break;
        } catch (const NoPositiveGradingError&) {
          ++rejected;
        }
      }
      std::ostringstream os;
      int rc = verify_one(q, {}, os);
      if (rc != 0) {
        std::cout << "instance " << i << " FAILED\npsi:\n"
                  << q.psi.to_string() << os.str();
        return rc;
      }
    }
    std::cout << "verified " << cli.count << " random instances (seed " << cli.seed
              << ", " << rejected << " rejected for grading)\n";
    return 0;
  }
  InputSpec spec = load_spec(cli);
  std::ostringstream os;
  int rc = verify_one(spec.quadruple, pipeline_options(spec), os);
  deliver(cli, "verify.txt", os.str());
  return rc;
}

int cmd_svg(const Cli& cli) {
  InputSpec spec = load_spec(cli);
  Stratification strat = Stratification::enumerate(spec.quadruple);
  if (spec.quadruple.k == 2) {
    deliver(cli, "stratification.svg", emit_svg(strat));
  } else if (spec.quadruple.k == 1) {
    deliver(cli, "stratification.txt", emit_circle_diagram(strat));
  } else {
    std::cout << "no figure is drawn for k = " << spec.quadruple.k << "\n";
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimal resolutions of toric substacks by line bundles"};
  app.require_subcommand(1);

  Cli cli;
  auto add_common = [&](CLI::App* sub, bool needs_input) {
    auto* opt = sub->add_option("--input", cli.input, "input JSON file");
    if (needs_input) opt->required();
    sub->add_option("--contraction", cli.contraction,
                    "moore-penrose | block file path");
    sub->add_option("--harmonic-basis", cli.harmonic_basis,
                    "canonical | basis file path");
    sub->add_option("--emit", cli.emit, "report,matrices,m2,svg")->delimiter(',');
    sub->add_option("--out", cli.out_dir, "output directory (default: stdout)");
  };

  auto* stratify = app.add_subcommand("stratify", "enumerate the Bondal stratification");
  add_common(stratify, true);
  auto* hhl = app.add_subcommand("hhl", "assemble and check the HHL complex");
  add_common(hhl, true);
  auto* betti = app.add_subcommand("betti", "per-class Betti table");
  add_common(betti, true);
  auto* minres = app.add_subcommand("minres", "compute the minimal resolution");
  add_common(minres, true);
  auto* paths = app.add_subcommand("paths", "zig-zag paths for one cell pair");
  add_common(paths, true);
  paths->add_option("--pair", cli.pair, "cell pair, e.g. F1:E4")->required();
  auto* mp = app.add_subcommand("mp", "exact Moore-Penrose inverse of a matrix");
  mp->add_option("--input", cli.input, "plain-text matrix file")->required();
  mp->add_option("--out", cli.out_dir, "output directory (default: stdout)");
  auto* verify = app.add_subcommand("verify", "symbolic SDR and path-sum checks");
  add_common(verify, false);
  verify->add_option("--seed", cli.seed, "run the seeded random property suite")
      ->trigger_on_parse();
  verify->add_option("--count", cli.count, "number of random instances");
  auto* svg = app.add_subcommand("svg", "fundamental-domain figure (k = 2)");
  add_common(svg, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(btres::errc::parse);
  }
  cli.has_seed = verify->count("--seed") > 0;

  try {
    if (stratify->parsed()) return cmd_stratify(cli);
    if (hhl->parsed()) return cmd_hhl(cli);
    if (betti->parsed()) return cmd_betti(cli);
    if (minres->parsed()) return cmd_minres(cli);
    if (paths->parsed()) return cmd_paths(cli);
    if (mp->parsed()) return cmd_mp(cli);
    if (verify->parsed()) return cmd_verify(cli);
    if (svg->parsed()) return cmd_svg(cli);
  } catch (const btres::Error& e) {
    std::cerr << "error [" << e.kind() << "] " << e.what() << "\n";
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

// superhom: batch front end for the invariant-form complexes.
//
//   superhom betti --algebra so3 --w -10
//   superhom dims --algebra abelian(3) --w-range -1:-6 --format csv
//   superhom goldens
//
// Exit codes: 0 success, 1 mathematical mismatch, 2 configuration or IO error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <thread>

#include "commands.hpp"
#include "superhom/extend.hpp"
#include "superhom/forms.hpp"
#include "superhom/polyforms.hpp"

#ifndef SUPERHOM_GOLDEN_DIR
#define SUPERHOM_GOLDEN_DIR "goldens"
#endif

using namespace superhom;
using namespace superhom::cli;

namespace {

struct Common {
  std::string algebra;
  std::optional<std::string> kappa;
  std::optional<std::string> w;
  std::optional<std::string> w_range;
  std::string format = "text";
  std::optional<std::string> out;
  unsigned jobs = 1;
  std::optional<std::size_t> cap;

  std::vector<int> weights(bool allow_zero) const {
    if (w && w_range) throw ConfigError("give either --w or --w-range");
    if (!w && !w_range) throw ConfigError("--w or --w-range is required");
    auto ws = parse_w_range(w ? *w : *w_range);
    for (int x : ws)
      if (x > 0 || (x == 0 && !allow_zero))
        throw ConfigError("weights must be " + std::string(allow_zero ? "non-positive" : "negative"));
    return ws;
  }
  unsigned job_count() const { return jobs ? jobs : std::max(1u, std::thread::hardware_concurrency()); }
  OutputFormat output_format() const {
    try {
      return parse_format(format);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
};

void add_common(CLI::App* cmd, Common& c, bool weights, bool algebra = true) {
  if (algebra) cmd->add_option("--algebra", c.algebra, "catalog name or structure-constant file")->required();
  if (algebra) cmd->add_option("--kappa", c.kappa, "parameter of the d2 family, nonzero rational");
  if (weights) {
    cmd->add_option("--w", c.w, "weight");
    cmd->add_option("--w-range", c.w_range, "inclusive weight range A:B");
  }
  cmd->add_option("--format", c.format, "text, csv or json");
  cmd->add_option("--out", c.out, "output file (stdout when absent)");
  cmd->add_option("--jobs", c.jobs, "worker threads, 0 = all cores");
  cmd->add_option("--cap", c.cap, "chain basis size limit (SUPERHOM_CAP overrides)");
}

void emit(const Common& c, const std::string& text) {
  if (!c.out) {
    std::cout << text;
    return;
  }
  std::ofstream f(*c.out, std::ios::binary);
  if (!(f << text)) throw ConfigError("cannot write " + *c.out);
}

int cmd_validate(const Common& c) {
  const LieAlgebraSpec spec = resolve_algebra(c.algebra, c.kappa);
  const ValidationReport v = validate(spec);
  std::ostringstream os;
  os << spec.name() << " (dim " << spec.dim() << ")\n";
  os << "jacobi (structure constants): " << v.summary() << '\n';
  bool ok = v.ok;
  if (ok) {
    const FormAlgebra forms(spec);
    const JacobiReport j = check_super_jacobi(forms);
    const JacobiReport a = check_graded_antisymmetry(forms);
    os << "super jacobi (forms): " << (j.ok ? "ok" : j.failure) << " [" << j.checked << " triples]\n";
    os << "graded antisymmetry (forms): " << (a.ok ? "ok" : a.failure) << " [" << a.checked << " pairs]\n";
    ok = j.ok && a.ok;
  }
  os << (ok ? "PASS" : "FAIL") << '\n';
  emit(c, os.str());
  return ok ? kSuccess : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homology of Lie superalgebras of invariant forms"};
  app.require_subcommand(1);

  Common c;
  auto* validate = app.add_subcommand("validate", "check Jacobi for the constants and the form superalgebra");
  add_common(validate, c, false);

  std::string notation = "raw";
  auto* brackets = app.add_subcommand("brackets", "super bracket table of the invariant forms");
  add_common(brackets, c, false);
  brackets->add_option("--notation", notation, "raw or shorthand");

  auto* dims = app.add_subcommand("dims", "chain space dimensions");
  add_common(dims, c, true);

  auto* betti = app.add_subcommand("betti", "dim, rank, kernel and Betti rows");
  add_common(betti, c, true);

  auto* formulas = app.add_subcommand("formulas", "closed-form boundary ranks against computed ranks");
  add_common(formulas, c, true);

  bool no_vectors = false;
  auto* extended = app.add_subcommand("extended", "complex extended by the invariant vector fields");
  add_common(extended, c, true);
  extended->add_flag("--no-vectors", no_vectors, "k = 0 restriction");

  int n = 1;
  std::optional<int> h;
  auto* poly = app.add_subcommand("polyweight", "doubly weighted complex of polynomial forms on R^n");
  add_common(poly, c, true, false);
  poly->add_option("--n", n, "ambient dimension")->check(CLI::Range(1, 3));
  poly->add_option("--secondary", h, "secondary weight")->required()->check(CLI::Range(-1, 1000));
  poly->add_flag("--no-vectors", no_vectors, "forms only");

  int m = 1;
  auto* matrix = app.add_subcommand("matrix", "boundary matrix d_m : C_m -> C_{m-1} as triplets");
  add_common(matrix, c, true);
  matrix->add_option("--m", m, "chain degree")->required()->check(CLI::PositiveNumber);

  GoldenConfig g;
  g.dir = SUPERHOM_GOLDEN_DIR;
  auto* goldens = app.add_subcommand("goldens", "recompute every golden table and compare bytes");
  goldens->add_option("--dir", g.dir, "golden directory with manifest.txt");
  goldens->add_option("--kappa", g.kappa, "rerun the generic d2 entries with this kappa");
  goldens->add_option("--perturb", g.perturb, "add p/q to c^k_ij, 'i j k p/q' 1-based");
  goldens->add_option("--only", g.only, "restrict to one manifest label");
  goldens->add_flag("--write", g.write, "regenerate the golden files");
  goldens->add_option("--jobs", g.jobs, "worker threads, 0 = all cores");
  goldens->add_option("--cap", c.cap, "chain basis size limit (SUPERHOM_CAP overrides)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kSuccess : kConfigError;
  }

  try {
    const std::size_t cap = effective_cap(c.cap);
    if (*validate) return cmd_validate(c);
    if (*goldens) {
      g.cap = cap;
      if (g.jobs == 0) g.jobs = std::max(1u, std::thread::hardware_concurrency());
      return run_goldens(g);
    }
    const OutputFormat fmt = c.output_format();
    if (*brackets) {
      FormNotation nt;
      if (notation == "raw") nt = FormNotation::raw;
      else if (notation == "shorthand") nt = FormNotation::shorthand;
      else throw ConfigError("--notation must be raw or shorthand");
      emit(c, render_brackets(bracket_table(resolve_algebra(c.algebra, c.kappa)), nt, fmt));
      return kSuccess;
    }
    if (*poly) {
      PolyOptions opt;
      opt.include_vectors = !no_vectors;
      opt.cap = cap;
      opt.jobs = c.job_count();
      std::vector<HomologyReport> reps;
      for (int w : c.weights(true)) reps.push_back(double_weight_betti(w, *h, n, opt));
      emit(c, render_homology(reps, fmt));
      return kSuccess;
    }
    const LieAlgebraSpec spec = resolve_algebra(c.algebra, c.kappa);
    if (*dims) {
      emit(c, render_dims(run_dims(spec, c.weights(false), cap), fmt));
    } else if (*betti) {
      emit(c, render_homology(run_betti(spec, c.weights(false), c.job_count(), cap), fmt));
    } else if (*formulas) {
      std::vector<RankFormulaReport> reps;
      for (int w : c.weights(false)) reps.push_back(rank_formula_check(spec, w));
      emit(c, render_rank_formulas(reps, fmt));
      for (const auto& r : reps)
        if (!r.all_match()) return kMismatch;
    } else if (*extended) {
      emit(c, render_homology(run_extended(spec, c.weights(true), !no_vectors, c.job_count(), cap), fmt));
    } else if (*matrix) {
      const auto ws = c.weights(false);
      if (ws.size() != 1) throw ConfigError("matrix takes a single weight");
      FormAlgebra alg(spec);
      EnumerationOptions e;
      e.cap = cap;
      const ChainBasis src = enumerate_chain_basis(alg, m, ws[0], e);
      const ChainBasis dst = enumerate_chain_basis(alg, m - 1, ws[0], e);
      std::ostringstream os;
      write_triplets(os, boundary_matrix(alg, src, dst));
      emit(c, os.str());
    }
    return kSuccess;
  } catch (const ResourceLimitExceeded& e) {
    std::cerr << "superhom: resource cap exceeded: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "superhom: " << e.what() << '\n';
    return kConfigError;
  } catch (const ConfigError& e) {
    std::cerr << "superhom: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::logic_error& e) {
    std::cerr << "superhom: inconsistent result: " << e.what() << '\n';
    return kMismatch;
  } catch (const std::exception& e) {
    std::cerr << "superhom: " << e.what() << '\n';
    return kConfigError;
  }
}

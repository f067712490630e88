#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "commands.hpp"

namespace superhom::cli {

namespace {

struct ManifestEntry {
  std::string file, kind, label, selector, w_range;
  int line = 0;
};

std::vector<ManifestEntry> read_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read golden manifest " + path);
  std::vector<ManifestEntry> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream is(line);
    ManifestEntry e;
    if (!(is >> e.file)) continue;
    std::string extra;
    if (!(is >> e.kind >> e.label >> e.selector >> e.w_range) || (is >> extra))
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected 'file kind label algebra w-range'");
    if (e.kind != "betti" && e.kind != "dims" && e.kind != "extended")
      throw ConfigError(path + ":" + std::to_string(lineno) + ": unknown kind '" + e.kind + "'");
    e.line = lineno;
    out.push_back(std::move(e));
  }
  return out;
}

struct Perturbation {
  int i, j, k;
  Rational delta;
};

Perturbation parse_perturbation(const std::string& text) {
  std::istringstream is(text);
  Perturbation p{};
  std::string v, extra;
  if (!(is >> p.i >> p.j >> p.k >> v) || (is >> extra) || p.i < 1 || p.j < 1 || p.k < 1 || p.i == p.j)
    throw ConfigError("--perturb expects 'i j k p/q' with distinct positive i, j");
  p.delta = parse_rational(v);
  return p;
}

// d2 family members other than the degenerate kappa = -1 one.
bool generic_d2(const std::string& selector) {
  if (selector == "d2n") return true;
  if (selector.rfind("d2(", 0) != 0) return false;
  return catalog(selector) != catalog_d2(-1);
}

std::string compute(const ManifestEntry& e, const GoldenConfig& cfg, const std::optional<Perturbation>& perturb) {
  LieAlgebraSpec spec = (cfg.kappa && generic_d2(e.selector)) ? resolve_algebra("d2", cfg.kappa)
                                                               : resolve_algebra(e.selector, std::nullopt);
  if (perturb && std::max({perturb->i, perturb->j, perturb->k}) <= spec.dim()) {
    const int i = perturb->i - 1, j = perturb->j - 1, k = perturb->k - 1;
    spec.set_constant(i, j, k, spec.constant(i, j, k) + perturb->delta);
  }
  spec = spec.renamed(e.label);
  const auto ws = parse_w_range(e.w_range);
  if (e.kind == "betti") return render_homology(run_betti(spec, ws, cfg.jobs, cfg.cap), OutputFormat::csv);
  if (e.kind == "dims") return render_dims(run_dims(spec, ws, cfg.cap), OutputFormat::csv);
  return render_homology(run_extended(spec, ws, true, cfg.jobs, cfg.cap), OutputFormat::csv);
}

}  // namespace

int run_goldens(const GoldenConfig& cfg) {
  const auto entries = read_manifest(cfg.dir + "/manifest.txt");
  std::optional<Perturbation> perturb;
  if (cfg.perturb) perturb = parse_perturbation(*cfg.perturb);
  if (cfg.kappa && parse_rational(*cfg.kappa) == -1) throw ConfigError("--kappa -1 is the degenerate d2 member");

  if (cfg.only && std::none_of(entries.begin(), entries.end(), [&](const auto& e) { return e.label == *cfg.only; }))
    throw ConfigError("no manifest entry labelled " + *cfg.only);

  std::size_t checked = 0, failed = 0;
  for (const auto& e : entries) {
    if (cfg.only && *cfg.only != e.label) continue;
    const std::string path = cfg.dir + "/" + e.file;
    std::string got;
    try {
      got = compute(e, cfg, perturb);
    } catch (const ResourceLimitExceeded&) {
      throw;
    } catch (const std::invalid_argument&) {
      throw;
    } catch (const std::logic_error& ex) {
      // the perturbed constants need not define a complex
      ++checked;
      ++failed;
      std::cout << "FAIL " << e.file << "\n  " << e.label << ": " << ex.what() << '\n';
      continue;
    }
    if (cfg.write) {
      std::ofstream out(path, std::ios::binary);
      if (!(out << got)) throw ConfigError("cannot write " + path);
      std::cout << "wrote " << e.file << '\n';
      continue;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read golden file " + path);
    std::ostringstream expected;
    expected << in.rdbuf();
    ++checked;
    if (expected.str() == got) {
      std::cout << "ok   " << e.file << '\n';
      continue;
    }
    ++failed;
    std::cout << "FAIL " << e.file << '\n';
    auto diffs = diff_csv(expected.str(), got);
    if (diffs.empty()) std::cout << "  bytes differ outside the table cells\n";
    for (const auto& d : diffs)
      std::cout << "  " << d.key << ' ' << d.field << ": expected " << d.expected << ", got " << d.got << '\n';
  }
  if (cfg.write) return kSuccess;
  std::cout << "goldens: " << checked << " checked, " << failed << " failed\n";
  return failed ? kMismatch : kSuccess;
}

}  // namespace superhom::cli

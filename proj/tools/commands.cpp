#include "commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "superhom/extend.hpp"
#include "superhom/superchain.hpp"

namespace superhom::cli {

LieAlgebraSpec resolve_algebra(const std::string& selector, const std::optional<std::string>& kappa) {
  if (kappa) {
    if (selector != "d2" && selector.rfind("d2(", 0) != 0 && selector != "d2n" && selector != "d2y")
      throw ConfigError("--kappa only applies to the d2 family");
    return catalog_d2(parse_rational(*kappa));
  }
  if (selector == "d2") throw ConfigError("d2 needs --kappa or the form d2(kappa)");
  std::error_code ec;
  if (std::filesystem::is_regular_file(selector, ec)) return load_structure_constants(selector);
  return catalog(selector);
}

std::vector<int> parse_w_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw ConfigError("bad weight '" + s + "' in '" + text + "'");
    return v;
  };
  std::vector<int> out;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      out.push_back(to_int(item));
      continue;
    }
    const int a = to_int(item.substr(0, colon)), b = to_int(item.substr(colon + 1));
    for (int w = a;; w += (b >= a ? 1 : -1)) {
      out.push_back(w);
      if (w == b) break;
    }
  }
  if (out.empty()) throw ConfigError("empty weight range");
  return out;
}

std::size_t effective_cap(std::optional<std::size_t> flag) {
  if (const char* env = std::getenv("SUPERHOM_CAP"); env && *env) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0) throw ConfigError("SUPERHOM_CAP must be a positive integer");
    return static_cast<std::size_t>(v);
  }
  if (flag && *flag == 0) throw ConfigError("--cap must be positive");
  return flag.value_or(0);
}

std::vector<HomologyReport> run_betti(const LieAlgebraSpec& spec, const std::vector<int>& ws, unsigned jobs,
                                      std::size_t cap) {
  FormAlgebra alg(spec);
  ComplexOptions opt;
  opt.jobs = jobs;
  opt.enumeration.cap = cap;
  std::vector<HomologyReport> out;
  for (int w : ws) out.push_back(compute_homology(alg, w, opt));
  return out;
}

std::vector<ChainDims> run_dims(const LieAlgebraSpec& spec, const std::vector<int>& ws, std::size_t cap) {
  FormAlgebra alg(spec);
  EnumerationOptions e;
  e.cap = cap;
  std::vector<ChainDims> out;
  for (int w : ws) {
    ChainDims d;
    d.algebra = spec.name();
    d.w = w;
    d.first_m = w < 0 ? 1 : 0;
    for (int m = d.first_m; m <= std::max(-w, 0); ++m) {
      d.dims.push_back(enumerate_chain_basis(alg, m, w, e).size());
      if (spec.dim() == 3) d.formula.push_back(chain_dim_formula(w, m));
    }
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<HomologyReport> run_extended(const LieAlgebraSpec& spec, const std::vector<int>& ws, bool vectors,
                                         unsigned jobs, std::size_t cap) {
  ExtendedOptions opt;
  opt.allow_vectors = vectors;
  opt.k_split = vectors;
  opt.jobs = jobs;
  opt.cap = cap;
  std::vector<HomologyReport> out;
  for (int w : ws) out.push_back(extended_betti(spec, w, opt));
  return out;
}

}  // namespace superhom::cli

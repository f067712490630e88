#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "superhom/homology.hpp"
#include "superhom/liealg.hpp"
#include "superhom/report_io.hpp"

namespace superhom::cli {

enum ExitCode { kSuccess = 0, kMismatch = 1, kConfigError = 2 };

// A configuration problem that maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Catalog name or path to a structure-constant file. A kappa value selects
// d2(kappa) and is only accepted together with a d2 selector.
LieAlgebraSpec resolve_algebra(const std::string& selector, const std::optional<std::string>& kappa);

// Comma-separated items, each an integer or "A:B" (inclusive, stepping from A towards B).
std::vector<int> parse_w_range(const std::string& text);

// --cap value, overridden by SUPERHOM_CAP when that is set.
std::size_t effective_cap(std::optional<std::size_t> flag);

std::vector<HomologyReport> run_betti(const LieAlgebraSpec& spec, const std::vector<int>& ws, unsigned jobs,
                                      std::size_t cap);
std::vector<ChainDims> run_dims(const LieAlgebraSpec& spec, const std::vector<int>& ws, std::size_t cap);
std::vector<HomologyReport> run_extended(const LieAlgebraSpec& spec, const std::vector<int>& ws, bool vectors,
                                         unsigned jobs, std::size_t cap);

struct GoldenConfig {
  std::string dir;
  std::optional<std::string> kappa;
  std::optional<std::string> perturb;  // "i j k p/q", 1-based, added to c^k_ij
  std::optional<std::string> only;     // manifest label filter
  bool write = false;                  // regenerate instead of comparing
  unsigned jobs = 1;
  std::size_t cap = 0;
};

int run_goldens(const GoldenConfig& cfg);

}  // namespace superhom::cli

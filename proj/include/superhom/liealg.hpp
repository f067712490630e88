#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "superhom/rational.hpp"

namespace superhom {

// Finite-dimensional Lie algebra over Q given by structure constants
// [xi_i, xi_j] = sum_k c^k_{ij} xi_k. Indices are 0-based; only i < j is stored.
class LieAlgebraSpec {
 public:
  using Key = std::array<int, 3>;  // (i, j, k) with i < j

  LieAlgebraSpec(int dim, std::string name);

  int dim() const { return dim_; }
  const std::string& name() const { return name_; }

  // c^k_{ij}; antisymmetric in (i, j), zero on the diagonal.
  Rational constant(int i, int j, int k) const;
  // Sets c^k_{ij} (and implicitly c^k_{ji} = -value).
  void set_constant(int i, int j, int k, const Rational& value);

  const std::map<Key, Rational>& constants() const { return c_; }
  bool is_abelian() const { return c_.empty(); }

  // Every constant multiplied by lambda (lambda != 0).
  LieAlgebraSpec scaled(const Rational& lambda) const;
  LieAlgebraSpec renamed(std::string name) const;

  bool operator==(const LieAlgebraSpec& other) const { return dim_ == other.dim_ && c_ == other.c_; }

 private:
  void check_index(int i) const;

  int dim_;
  std::string name_;
  std::map<Key, Rational> c_;
};

struct JacobiViolation {
  int i, j, k, l;
  Rational residual;
};

struct ValidationReport {
  bool ok = true;
  std::optional<JacobiViolation> violation;
  std::string summary() const;
};

// Ordinary Jacobi identity: first violated (i<j<k, l) in lexicographic order.
ValidationReport validate(const LieAlgebraSpec& spec);

// Catalog lookup: "abelian(n)", "dim2", "so3", "sl2r", "d2(kappa)", "d1n",
// "d1y"; aliases "d3" (so3), "d2y" (d2(-1)), "d2n" (d2(1)).
// Throws std::invalid_argument for unknown names or kappa = 0.
LieAlgebraSpec catalog(std::string_view name);
LieAlgebraSpec catalog_d2(const Rational& kappa);
LieAlgebraSpec catalog_abelian(int n);

// Names of the fixed catalog entries used by the property suites.
std::vector<std::string> catalog_names();

// Line format, 1-based indices:
//   # comment
//   dim N          (optional; otherwise the largest index seen)
//   name IDENT     (optional)
//   i j k p/q      sets c^k_{ij}
// Throws std::invalid_argument with the offending line number.
LieAlgebraSpec parse_structure_constants(std::istream& in, std::string fallback_name = "file");
LieAlgebraSpec load_structure_constants(const std::string& path);
std::string format_structure_constants(const LieAlgebraSpec& spec);

}  // namespace superhom

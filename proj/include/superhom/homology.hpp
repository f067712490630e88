#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superhom/liealg.hpp"
#include "superhom/superchain.hpp"

namespace superhom {

struct HomologyRow {
  int m = 0;
  std::size_t dim = 0;
  std::size_t rank = 0;    // rank of d_m : C_m -> C_{m-1}
  std::size_t kernel = 0;  // dim - rank
  long betti = 0;          // dim - rank d_m - rank d_{m+1}
  std::vector<std::size_t> k_split;  // dims by number of vector factors, when requested
};

struct HomologyReport {
  std::string algebra;
  int w = 0;
  std::optional<int> h;
  std::vector<HomologyRow> rows;
  long euler = 0;

  const HomologyRow* row(int m) const;
  std::vector<long> betti_numbers() const;
  std::vector<std::size_t> dims() const;
  std::vector<std::size_t> kernels() const;
  std::vector<std::size_t> ranks() const;
};

struct ComplexOptions {
  EnumerationOptions enumeration;
  std::optional<int> max_degree;   // upper bound on m; derived from grades when absent
  unsigned jobs = 1;
  bool k_split = false;
  bool check_square_zero = false;  // throws std::logic_error if d_{m-1} d_m != 0
};

// Rows run from m = 0 (only when the empty monomial has the target weights)
// or m = 1 up to the last nonzero chain space.
HomologyReport compute_homology(const GradedAlgebra& alg, int w, const ComplexOptions& opt = {});

HomologyReport betti_row(const LieAlgebraSpec& spec, int w, unsigned jobs = 1);
std::vector<HomologyReport> betti_table(const LieAlgebraSpec& spec, const std::vector<int>& ws, unsigned jobs = 1);

// C(p, q), zero unless 0 <= q <= p.
long binom(long p, long q);

// Closed forms for dim C_m^w on three-dimensional algebras.
long chain_dim_formula(int w, int m);
long chain_dim_formula_cases(int w, int m);

enum class RankFamily { so3, d2_degenerate, d2_generic, d1n, d1y };

// Family implied by a catalog spec (sl2r shares the so3 formula; d2(kappa)
// splits on kappa + 1 = 0). Throws std::invalid_argument for other specs.
RankFamily rank_family(const LieAlgebraSpec& spec);
long rank_formula(RankFamily family, int w, int m);

struct RankFormulaRow {
  int m;
  long formula;
  std::size_t computed;
  bool match;
};

struct RankFormulaReport {
  std::string algebra;
  int w;
  std::vector<RankFormulaRow> rows;
  bool all_match() const;
};

RankFormulaReport rank_formula_check(const LieAlgebraSpec& spec, int w);

}  // namespace superhom

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "superhom/exactla.hpp"
#include "superhom/forms.hpp"
#include "superhom/rational.hpp"

namespace superhom {

using GenId = std::uint32_t;

struct Term {
  GenId gen;
  Rational coeff;
};
using LinearCombination = std::vector<Term>;

enum class GeneratorKind { form, vector, multivector };

struct Generator {
  int grade = 0;
  int secondary = 0;
  GeneratorKind kind = GeneratorKind::form;
  std::string label;
};

inline bool odd_grade(int g) { return g % 2 != 0; }

// A Z-graded Lie superalgebra presented by a homogeneous basis. Generator ids
// are the canonical order: grades non-increasing.
class GradedAlgebra {
 public:
  virtual ~GradedAlgebra() = default;
  virtual const std::string& name() const = 0;
  virtual std::size_t size() const = 0;
  virtual const Generator& generator(GenId g) const = 0;
  virtual LinearCombination bracket(GenId a, GenId b) const = 0;

  int grade(GenId g) const { return generator(g).grade; }
  bool is_odd(GenId g) const { return odd_grade(grade(g)); }
};

class TableAlgebra : public GradedAlgebra {
 public:
  TableAlgebra(std::string name, std::vector<Generator> gens);

  const std::string& name() const override { return name_; }
  std::size_t size() const override { return gens_.size(); }
  const Generator& generator(GenId g) const override { return gens_.at(g); }
  LinearCombination bracket(GenId a, GenId b) const override { return table_.at(a * gens_.size() + b); }

  void set_bracket(GenId a, GenId b, LinearCombination value);

 private:
  std::string name_;
  std::vector<Generator> gens_;
  std::vector<LinearCombination> table_;
};

// Invariant forms of a Lie algebra; generator ids follow form_basis(n).
class FormAlgebra : public TableAlgebra {
 public:
  explicit FormAlgebra(const LieAlgebraSpec& spec);

  const std::vector<IndexMask>& masks() const { return masks_; }
  GenId id_of(IndexMask mask) const { return index_.at(mask); }
  const LieAlgebraSpec& spec() const { return spec_; }

 private:
  LieAlgebraSpec spec_;
  std::vector<IndexMask> masks_;
  std::map<IndexMask, GenId> index_;
};

// Sorted factor list with repeats written out.
struct ChainMonomial {
  std::vector<GenId> factors;

  std::size_t degree() const { return factors.size(); }
  auto operator<=>(const ChainMonomial&) const = default;
  bool operator==(const ChainMonomial&) const = default;
};

struct ChainMonomialHash {
  std::size_t operator()(const ChainMonomial& m) const noexcept;
};

using ChainVector = std::map<ChainMonomial, Rational>;

int weight(const GradedAlgebra& alg, const ChainMonomial& m);
int secondary_weight(const GradedAlgebra& alg, const ChainMonomial& m);
std::string format_monomial(const GradedAlgebra& alg, const ChainMonomial& m);
std::string format_chain(const GradedAlgebra& alg, const ChainVector& v);

struct NormalForm {
  int sign = 0;  // 0 when the product vanishes
  ChainMonomial monomial;
};

// Sorts into canonical order with sign -(-1)^{xy} per adjacent swap.
NormalForm normalize(const GradedAlgebra& alg, std::vector<GenId> factors);

void add_to(ChainVector& v, const ChainMonomial& m, const Rational& c);
void add_to(ChainVector& v, const ChainVector& w, const Rational& c = 1);

// Product of two chains in the super-exterior algebra.
ChainVector chain_wedge(const GradedAlgebra& alg, const ChainVector& a, const ChainVector& b);

class ResourceLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumerationOptions {
  std::optional<int> secondary;             // fixed total secondary weight
  std::function<bool(GenId)> allow;         // generator filter, all when empty
  std::size_t cap = 0;                      // 0 means unlimited
};

class ChainBasis {
 public:
  ChainBasis(int m, int w, std::optional<int> h, std::vector<ChainMonomial> monomials);

  int m() const { return m_; }
  int w() const { return w_; }
  const std::optional<int>& h() const { return h_; }
  std::size_t size() const { return monomials_.size(); }
  const std::vector<ChainMonomial>& monomials() const { return monomials_; }
  const ChainMonomial& operator[](std::size_t i) const { return monomials_[i]; }
  std::optional<std::size_t> index_of(const ChainMonomial& mono) const;

 private:
  int m_, w_;
  std::optional<int> h_;
  std::vector<ChainMonomial> monomials_;
  std::unordered_map<ChainMonomial, std::size_t, ChainMonomialHash> index_;
};

// All monomials of degree m and weight w; requires every admitted grade <= 0.
ChainBasis enumerate_chain_basis(const GradedAlgebra& alg, int m, int w, const EnumerationOptions& opt = {});
// Chain basis of the invariant forms of an n-dimensional algebra.
ChainBasis enumerate_chain_basis(int m, int w, int n);

// Double sum over pairs applied to a factor sequence (not necessarily sorted).
ChainVector boundary_of_sequence(const GradedAlgebra& alg, const std::vector<GenId>& seq);
ChainVector boundary(const GradedAlgebra& alg, const ChainMonomial& m);
// Recursive route: d(A0 ^ rest) = -A0 ^ d(rest) + A0 . rest.
ChainVector boundary_left_action(const GradedAlgebra& alg, const std::vector<GenId>& seq);
// A0 . (A1 ^ ... ^ Am) = sum_i (-1)^{a0 (a1+...+a_{i-1})} A1 ^ ... [[A0, Ai]] ... Am.
ChainVector left_action(const GradedAlgebra& alg, GenId a0, const std::vector<GenId>& rest);
// Induced bracket of two monomials (the expression with A_i removed, B_j bracketed).
ChainVector sz_bracket(const GradedAlgebra& alg, const std::vector<GenId>& a, const std::vector<GenId>& b);

SparseRationalMatrix boundary_matrix(const GradedAlgebra& alg, const ChainBasis& src, const ChainBasis& dst);
SparseRationalMatrix boundary_matrix_left_action(const GradedAlgebra& alg, const ChainBasis& src,
                                                 const ChainBasis& dst);

}  // namespace superhom

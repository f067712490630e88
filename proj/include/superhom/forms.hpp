#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "superhom/liealg.hpp"
#include "superhom/rational.hpp"

namespace superhom {

// Bit i set means sigma^{i} participates; indices listed increasingly.
using IndexMask = std::uint32_t;

constexpr int kMaxFormDim = 24;

inline int mask_size(IndexMask m) { return __builtin_popcount(m); }

// Sign of sigma^a ^ sigma^b relative to sigma^{a|b}; 0 when a and b overlap.
int wedge_sign(IndexMask a, IndexMask b);

// All subsets of {0..n-1} of size k, lexicographic in the sorted index list.
std::vector<IndexMask> subsets_of_size(int n, int k);

struct FormDegree {
  int value = 0;
  int grade() const { return -(1 + value); }
};

class InvariantForm {
 public:
  InvariantForm(int dim, int degree);

  static InvariantForm basis(int dim, IndexMask mask, const Rational& coeff = 1);
  static InvariantForm one(int dim) { return basis(dim, 0); }

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  int grade() const { return FormDegree{degree_}.grade(); }
  const std::map<IndexMask, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(IndexMask mask) const;

  void add_term(IndexMask mask, const Rational& coeff);

  InvariantForm& operator+=(const InvariantForm& o);
  InvariantForm& operator-=(const InvariantForm& o);
  InvariantForm& operator*=(const Rational& s);

  friend InvariantForm operator+(InvariantForm a, const InvariantForm& b) { return a += b; }
  friend InvariantForm operator-(InvariantForm a, const InvariantForm& b) { return a -= b; }
  friend InvariantForm operator*(const Rational& s, InvariantForm a) { return a *= s; }
  friend InvariantForm operator-(InvariantForm a) { return a *= -1; }
  bool operator==(const InvariantForm& o) const {
    return dim_ == o.dim_ && degree_ == o.degree_ && terms_ == o.terms_;
  }

 private:
  void check_compatible(const InvariantForm& o) const;

  int dim_;
  int degree_;
  std::map<IndexMask, Rational> terms_;
};

InvariantForm wedge(const InvariantForm& a, const InvariantForm& b);

// d sigma^i = -sum_{j<k} c^i_{jk} sigma^j ^ sigma^k, extended by graded Leibniz.
InvariantForm exterior_derivative(const InvariantForm& a, const LieAlgebraSpec& spec);

// [[a, b]] = (-1)^{deg a} d(a ^ b).
InvariantForm super_bracket(const InvariantForm& a, const InvariantForm& b, const LieAlgebraSpec& spec);

// Contraction with the invariant vector sum_i x[i] xi_i.
InvariantForm interior_product(const std::vector<Rational>& x, const InvariantForm& a);

enum class FormNotation { raw, shorthand };

// Shorthand applies for n = 2 (V = s1^s2) and n = 3 (w1 = s2^s3, w2 = s3^s1,
// w3 = s1^s2, V = s1^s2^s3); other dimensions fall back to raw.
std::string basis_label(int dim, IndexMask mask, FormNotation notation);
// s with sigma^mask = s * label (w2 = s3^s1 = -s1^s3).
int basis_label_sign(int dim, IndexMask mask, FormNotation notation);
std::string format_form(const InvariantForm& a, FormNotation notation = FormNotation::raw);

// Homogeneous basis in canonical order: degree ascending, subsets lexicographic.
std::vector<IndexMask> form_basis(int dim);

struct BracketTable {
  int dim = 0;
  std::vector<IndexMask> basis;
  std::vector<std::vector<InvariantForm>> entries;  // entries[r][c] = [[basis r, basis c]]
};

BracketTable bracket_table(const LieAlgebraSpec& spec);
// Entry (r, c) expressed against the labelled basis elements.
InvariantForm labelled_entry(const BracketTable& t, std::size_t r, std::size_t c, FormNotation notation);
std::string render_bracket_table(const BracketTable& t, FormNotation notation);

}  // namespace superhom

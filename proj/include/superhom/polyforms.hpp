#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "superhom/forms.hpp"
#include "superhom/homology.hpp"
#include "superhom/superchain.hpp"

namespace superhom {

using Exponent = std::vector<int>;
using Polynomial = std::map<Exponent, Rational>;

int total_degree(const Exponent& a);
// Exponents of total degree d in n variables, lexicographically descending.
std::vector<Exponent> monomials_of_degree(int n, int d);

// sum of c x^alpha dx^A
class PolyForm {
 public:
  using Key = std::pair<Exponent, IndexMask>;

  explicit PolyForm(int n);
  static PolyForm monomial(const Exponent& alpha, IndexMask mask, const Rational& c = 1);

  int n() const { return n_; }
  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Exponent& alpha, IndexMask mask, const Rational& c);

  PolyForm& operator+=(const PolyForm& o);
  PolyForm& operator*=(const Rational& s);
  friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }
  friend PolyForm operator-(PolyForm a, const PolyForm& b) { return a += PolyForm(b) *= -1; }
  friend PolyForm operator*(const Rational& s, PolyForm a) { return a *= s; }
  bool operator==(const PolyForm& o) const { return n_ == o.n_ && terms_ == o.terms_; }

 private:
  int n_;
  std::map<Key, Rational> terms_;
};

// sum of c x^alpha d/dx_i
class PolyVector {
 public:
  using Key = std::pair<Exponent, int>;

  explicit PolyVector(int n);
  static PolyVector monomial(const Exponent& alpha, int i, const Rational& c = 1);

  int n() const { return n_; }
  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Exponent& alpha, int i, const Rational& c);
  Polynomial component(int i) const;

  PolyVector& operator+=(const PolyVector& o);
  PolyVector& operator*=(const Rational& s);
  bool operator==(const PolyVector& o) const { return n_ == o.n_ && terms_ == o.terms_; }

 private:
  int n_;
  std::map<Key, Rational> terms_;
};

using PolyElement = std::variant<PolyVector, PolyForm>;

PolyForm poly_wedge(const PolyForm& a, const PolyForm& b);
PolyForm poly_d(const PolyForm& a);
PolyForm interior_product(const PolyVector& x, const PolyForm& a);
// iota_X d + d iota_X.
PolyForm lie_derivative(const PolyVector& x, const PolyForm& a);
// X(f) dx^A + f sum_r dx^{a_1} .. d(X^{a_r}) .. dx^{a_k}, evaluated term by term.
PolyForm lie_derivative_direct(const PolyVector& x, const PolyForm& a);
PolyVector vector_commutator(const PolyVector& x, const PolyVector& y);
PolyElement poly_bracket(const PolyElement& a, const PolyElement& b);

// (primary, secondary) when the element is nonzero and doubly homogeneous.
std::optional<std::pair<int, int>> double_weight(const PolyElement& e);

std::string format_poly(const PolyElement& e);

struct PolyOptions {
  bool include_vectors = true;
  std::size_t cap = 0;                 // limit on chain basis size, 0 = none
  std::optional<int> max_secondary;    // generator truncation; derived when absent
  std::optional<int> max_degree;       // chain degree bound; derived when absent
  unsigned jobs = 1;
};

// Doubly-homogeneous monomial generators x^alpha dx^A and x^alpha d/dx_i with
// secondary weight at most max_secondary.
class PolyAlgebra : public GradedAlgebra {
 public:
  PolyAlgebra(int n, int max_secondary, bool include_vectors);

  const std::string& name() const override { return name_; }
  std::size_t size() const override { return gens_.size(); }
  const Generator& generator(GenId g) const override { return gens_.at(g); }
  LinearCombination bracket(GenId a, GenId b) const override;

  int n() const { return n_; }
  int max_secondary() const { return max_secondary_; }
  const PolyElement& element(GenId g) const { return elems_.at(g); }
  std::optional<GenId> find(const PolyElement& basis_monomial) const;

 private:
  int n_, max_secondary_;
  std::string name_;
  std::vector<Generator> gens_;
  std::vector<PolyElement> elems_;
  std::map<std::pair<Exponent, int>, GenId> vector_ids_;
  std::map<std::pair<Exponent, IndexMask>, GenId> form_ids_;
  mutable std::mutex cache_mu_;
  mutable std::unordered_map<std::uint64_t, LinearCombination> cache_;
};

// Generator truncation and degree bound that make the (w, h) complex exact.
int poly_secondary_bound(int n, int w, int h, bool include_vectors);
int poly_degree_bound(int n, int w, int h, bool include_vectors);

ChainBasis double_weight_basis(int m, int w, int h, int n, const PolyOptions& opt = {});
HomologyReport double_weight_betti(int w, int h, int n, const PolyOptions& opt = {});

}  // namespace superhom

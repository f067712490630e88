#pragma once

#include <string>
#include <variant>
#include <vector>

#include "superhom/forms.hpp"
#include "superhom/homology.hpp"
#include "superhom/liealg.hpp"
#include "superhom/superchain.hpp"

namespace superhom {

// Left-invariant vector field sum_i coeffs[i] xi_i.
struct InvariantVector {
  std::vector<Rational> coeffs;

  static InvariantVector basis(int dim, int i);
  int dim() const { return static_cast<int>(coeffs.size()); }
  bool is_zero() const;
  bool operator==(const InvariantVector&) const = default;
};

using ExtendedElement = std::variant<InvariantVector, InvariantForm>;

int grade(const ExtendedElement& x);
bool is_zero(const ExtendedElement& x);

InvariantVector lie_bracket(const InvariantVector& x, const InvariantVector& y, const LieAlgebraSpec& spec);

// L_{xi_i} sigma^j = -sum_k c^j_{ik} sigma^k, extended as a derivation.
InvariantForm lie_derivative(const InvariantVector& x, const InvariantForm& a, const LieAlgebraSpec& spec);

// vector/vector: Lie bracket; vector/form: L_x a; form/vector: -L_y a; form/form: super bracket.
ExtendedElement extended_bracket(const ExtendedElement& x, const ExtendedElement& y, const LieAlgebraSpec& spec);

// Vectors xi_1..xi_n (ids 0..n-1, grade 0) followed by the invariant forms.
class ExtendedAlgebra : public TableAlgebra {
 public:
  explicit ExtendedAlgebra(const LieAlgebraSpec& spec);

  int dim() const { return n_; }
  GenId form_id(IndexMask mask) const { return static_cast<GenId>(n_) + forms_.id_of(mask); }
  bool is_vector(GenId g) const { return g < static_cast<GenId>(n_); }

 private:
  int n_;
  FormAlgebra forms_;
};

struct JacobiReport {
  bool ok = true;
  std::size_t checked = 0;
  std::string failure;  // first failing triple, empty when ok
};

// (-1)^{xz}[[X,Y],Z] + (-1)^{yx}[[Y,Z],X] + (-1)^{zy}[[Z,X],Y] = 0 on all basis triples.
JacobiReport check_super_jacobi(const GradedAlgebra& alg);
// [[X,Y]] + (-1)^{xy}[[Y,X]] = 0 on all basis pairs.
JacobiReport check_graded_antisymmetry(const GradedAlgebra& alg);
JacobiReport check_extended_jacobi(const LieAlgebraSpec& spec);

ChainBasis extended_chain_basis(int m, int w, const LieAlgebraSpec& spec);

struct ExtendedOptions {
  bool allow_vectors = true;
  bool k_split = true;
  unsigned jobs = 1;
  std::size_t cap = 0;  // chain basis limit, 0 = none
  bool check_square_zero = false;
};

HomologyReport extended_betti(const LieAlgebraSpec& spec, int w, const ExtendedOptions& opt = {});

// sum_m (-1)^m sum_k C(n,k) dim C_{m-k}^w from the plain form dimensions.
long extended_euler_formula(int n, int w);

// Invariant multivectors Lambda^j g for j >= 1 (grade j - 1) with the
// algebraic Schouten bracket.
TableAlgebra schouten_algebra(const LieAlgebraSpec& spec);

// Negative grades of g, non-negative grades of h, zero cross brackets.
// Throws std::invalid_argument when g has a generator of grade >= 0 or h one
// of grade < 0.
TableAlgebra trivially_long(const GradedAlgebra& g, const GradedAlgebra& h);

}  // namespace superhom

#include "superhom/extend.hpp"

#include <sstream>
#include <stdexcept>

namespace superhom {

InvariantVector InvariantVector::basis(int dim, int i) {
  InvariantVector v{std::vector<Rational>(dim, 0)};
  v.coeffs.at(i) = 1;
  return v;
}

bool InvariantVector::is_zero() const {
  for (const auto& c : coeffs)
    if (sgn(c)) return false;
  return true;
}

int grade(const ExtendedElement& x) {
  if (std::holds_alternative<InvariantVector>(x)) return 0;
  return std::get<InvariantForm>(x).grade();
}

bool is_zero(const ExtendedElement& x) {
  if (auto v = std::get_if<InvariantVector>(&x)) return v->is_zero();
  return std::get<InvariantForm>(x).is_zero();
}

InvariantVector lie_bracket(const InvariantVector& x, const InvariantVector& y, const LieAlgebraSpec& spec) {
  const int n = spec.dim();
  if (x.dim() != n || y.dim() != n) throw std::invalid_argument("vector dimension differs from algebra");
  InvariantVector out{std::vector<Rational>(n, 0)};
  for (const auto& [key, c] : spec.constants()) {
    const auto [i, j, k] = key;
    out.coeffs[k] += c * (x.coeffs[i] * y.coeffs[j] - x.coeffs[j] * y.coeffs[i]);
  }
  return out;
}

InvariantForm lie_derivative(const InvariantVector& x, const InvariantForm& a, const LieAlgebraSpec& spec) {
  const int n = spec.dim();
  if (x.dim() != n || a.dim() != n) throw std::invalid_argument("dimension mismatch in Lie derivative");
  // action[j] = L_x sigma^j as coefficients over sigma^k
  std::vector<std::vector<Rational>> action(n, std::vector<Rational>(n, 0));
  for (int i = 0; i < n; ++i) {
    if (is_zero(x.coeffs[i])) continue;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) action[j][k] -= x.coeffs[i] * spec.constant(i, k, j);
  }
  InvariantForm out(n, a.degree());
  for (const auto& [mask, coeff] : a.terms())
    for (IndexMask rest = mask; rest; rest &= rest - 1) {
      const int j = __builtin_ctz(rest);
      const IndexMask bit = IndexMask(1) << j;
      const IndexMask before = mask & (bit - 1), after = mask & ~(before | bit);
      for (int k = 0; k < n; ++k) {
        if (is_zero(action[j][k])) continue;
        const IndexMask kb = IndexMask(1) << k;
        int s = wedge_sign(before, kb);
        if (!s) continue;
        s *= wedge_sign(before | kb, after);
        if (!s) continue;
        out.add_term(before | kb | after, s * coeff * action[j][k]);
      }
    }
  return out;
}

ExtendedElement extended_bracket(const ExtendedElement& x, const ExtendedElement& y, const LieAlgebraSpec& spec) {
  const auto* xv = std::get_if<InvariantVector>(&x);
  const auto* yv = std::get_if<InvariantVector>(&y);
  if (xv && yv) return lie_bracket(*xv, *yv, spec);
  if (xv) return lie_derivative(*xv, std::get<InvariantForm>(y), spec);
  if (yv) return -lie_derivative(*yv, std::get<InvariantForm>(x), spec);
  return super_bracket(std::get<InvariantForm>(x), std::get<InvariantForm>(y), spec);
}

namespace {

std::vector<Generator> extended_generators(const LieAlgebraSpec& spec) {
  std::vector<Generator> gens;
  for (int i = 0; i < spec.dim(); ++i) gens.push_back({0, 0, GeneratorKind::vector, "x" + std::to_string(i + 1)});
  for (IndexMask m : form_basis(spec.dim()))
    gens.push_back({FormDegree{mask_size(m)}.grade(), 0, GeneratorKind::form,
                    basis_label(spec.dim(), m, FormNotation::raw)});
  return gens;
}

}  // namespace

ExtendedAlgebra::ExtendedAlgebra(const LieAlgebraSpec& spec)
    : TableAlgebra(spec.name(), extended_generators(spec)), n_(spec.dim()), forms_(spec) {
  std::vector<ExtendedElement> elems;
  for (int i = 0; i < n_; ++i) elems.emplace_back(InvariantVector::basis(n_, i));
  for (IndexMask m : forms_.masks()) elems.emplace_back(InvariantForm::basis(n_, m));
  for (GenId a = 0; a < elems.size(); ++a)
    for (GenId b = 0; b < elems.size(); ++b) {
      ExtendedElement v = extended_bracket(elems[a], elems[b], spec);
      LinearCombination lc;
      if (auto vec = std::get_if<InvariantVector>(&v)) {
        for (int k = 0; k < n_; ++k)
          if (sgn(vec->coeffs[k])) lc.push_back({static_cast<GenId>(k), vec->coeffs[k]});
      } else {
        for (const auto& [mask, c] : std::get<InvariantForm>(v).terms()) lc.push_back({form_id(mask), c});
      }
      if (!lc.empty()) set_bracket(a, b, std::move(lc));
    }
}

namespace {

using Dense = std::vector<Rational>;

void accumulate(const GradedAlgebra& alg, Dense& out, const Dense& x, GenId z, bool x_left, const Rational& s) {
  for (GenId g = 0; g < x.size(); ++g) {
    if (is_zero(x[g])) continue;
    for (const auto& t : x_left ? alg.bracket(g, z) : alg.bracket(z, g)) out[t.gen] += s * x[g] * t.coeff;
  }
}

Dense dense_bracket(const GradedAlgebra& alg, GenId a, GenId b) {
  Dense v(alg.size(), 0);
  for (const auto& t : alg.bracket(a, b)) v[t.gen] += t.coeff;
  return v;
}

int sign_of(int x, int y) { return odd_grade(x) && odd_grade(y) ? -1 : 1; }

std::string triple_label(const GradedAlgebra& alg, GenId x, GenId y, GenId z) {
  return "(" + alg.generator(x).label + ", " + alg.generator(y).label + ", " + alg.generator(z).label + ")";
}

}  // namespace

JacobiReport check_super_jacobi(const GradedAlgebra& alg) {
  JacobiReport rep;
  const std::size_t n = alg.size();
  for (GenId x = 0; x < n; ++x)
    for (GenId y = 0; y < n; ++y) {
      Dense xy = dense_bracket(alg, x, y);
      for (GenId z = 0; z < n; ++z) {
        const int gx = alg.grade(x), gy = alg.grade(y), gz = alg.grade(z);
        Dense sum(n, 0);
        accumulate(alg, sum, xy, z, true, sign_of(gx, gz));
        accumulate(alg, sum, dense_bracket(alg, y, z), x, true, sign_of(gy, gx));
        accumulate(alg, sum, dense_bracket(alg, z, x), y, true, sign_of(gz, gy));
        ++rep.checked;
        for (const auto& c : sum)
          if (!is_zero(c)) {
            if (rep.ok) rep.failure = "super Jacobi fails on " + triple_label(alg, x, y, z);
            rep.ok = false;
            break;
          }
      }
    }
  return rep;
}

JacobiReport check_graded_antisymmetry(const GradedAlgebra& alg) {
  JacobiReport rep;
  for (GenId x = 0; x < alg.size(); ++x)
    for (GenId y = 0; y < alg.size(); ++y) {
      Dense s = dense_bracket(alg, x, y);
      const int sg = sign_of(alg.grade(x), alg.grade(y));
      for (const auto& t : alg.bracket(y, x)) s[t.gen] += sg * t.coeff;
      ++rep.checked;
      for (const auto& c : s)
        if (!is_zero(c)) {
          if (rep.ok)
            rep.failure = "graded antisymmetry fails on (" + alg.generator(x).label + ", " + alg.generator(y).label + ")";
          rep.ok = false;
          break;
        }
    }
  return rep;
}

JacobiReport check_extended_jacobi(const LieAlgebraSpec& spec) { return check_super_jacobi(ExtendedAlgebra(spec)); }

ChainBasis extended_chain_basis(int m, int w, const LieAlgebraSpec& spec) {
  return enumerate_chain_basis(ExtendedAlgebra(spec), m, w);
}

HomologyReport extended_betti(const LieAlgebraSpec& spec, int w, const ExtendedOptions& opt) {
  ExtendedAlgebra alg(spec);
  ComplexOptions copt;
  copt.jobs = opt.jobs;
  copt.k_split = opt.k_split;
  copt.enumeration.cap = opt.cap;
  copt.check_square_zero = opt.check_square_zero;
  if (!opt.allow_vectors) {
    const GenId first_form = static_cast<GenId>(spec.dim());
    copt.enumeration.allow = [first_form](GenId g) { return g >= first_form; };
  }
  return compute_homology(alg, w, copt);
}

long extended_euler_formula(int n, int w) {
  FormAlgebra forms(catalog_abelian(n));
  std::vector<long> dims(-w + 1, 0);
  for (int j = 0; j <= -w; ++j) dims[j] = static_cast<long>(enumerate_chain_basis(forms, j, w).size());
  long total = 0;
  for (int k = 0; k <= n; ++k)
    for (int j = 0; j <= -w; ++j) total += ((j + k) % 2 ? -1 : 1) * binom(n, k) * dims[j];
  return total;
}

TableAlgebra schouten_algebra(const LieAlgebraSpec& spec) {
  const int n = spec.dim();
  std::vector<IndexMask> masks;
  std::vector<Generator> gens;
  for (int j = n; j >= 1; --j)
    for (IndexMask m : subsets_of_size(n, j)) {
      masks.push_back(m);
      std::string label;
      for (IndexMask r = m; r; r &= r - 1) label += (label.empty() ? "x" : "^x") + std::to_string(__builtin_ctz(r) + 1);
      gens.push_back({j - 1, 0, GeneratorKind::multivector, label});
    }
  std::map<IndexMask, GenId> index;
  for (GenId i = 0; i < masks.size(); ++i) index[masks[i]] = i;
  TableAlgebra alg(spec.name() + "-multivectors", gens);
  auto positions = [](IndexMask m) {
    std::vector<int> v;
    for (IndexMask r = m; r; r &= r - 1) v.push_back(__builtin_ctz(r));
    return v;
  };
  for (GenId a = 0; a < masks.size(); ++a)
    for (GenId b = 0; b < masks.size(); ++b) {
      // [X_1..X_p, Y_1..Y_q] = sum (-1)^{i+j} [X_i,Y_j] ^ X_1..^X_i..X_p ^ Y_1..^Y_j..Y_q
      std::map<IndexMask, Rational> acc;
      const auto P = positions(masks[a]), Q = positions(masks[b]);
      for (std::size_t i = 0; i < P.size(); ++i)
        for (std::size_t j = 0; j < Q.size(); ++j) {
          const IndexMask restP = masks[a] & ~(IndexMask(1) << P[i]);
          const IndexMask restQ = masks[b] & ~(IndexMask(1) << Q[j]);
          const int s0 = (i + j) % 2 ? -1 : 1;
          for (int k = 0; k < n; ++k) {
            Rational c = spec.constant(P[i], Q[j], k);
            if (is_zero(c)) continue;
            const IndexMask kb = IndexMask(1) << k;
            int s = wedge_sign(kb, restP);
            if (!s) continue;
            s *= wedge_sign(kb | restP, restQ);
            if (!s) continue;
            acc[kb | restP | restQ] += s0 * s * c;
          }
        }
      LinearCombination lc;
      for (const auto& [m, c] : acc)
        if (sgn(c)) lc.push_back({index.at(m), c});
      if (!lc.empty()) alg.set_bracket(a, b, std::move(lc));
    }
  return alg;
}

TableAlgebra trivially_long(const GradedAlgebra& g, const GradedAlgebra& h) {
  for (GenId i = 0; i < g.size(); ++i)
    if (g.grade(i) >= 0) throw std::invalid_argument("grade overlap: first algebra contributes grade >= 0");
  for (GenId i = 0; i < h.size(); ++i)
    if (h.grade(i) < 0) throw std::invalid_argument("grade overlap: second algebra contributes grade < 0");
  std::vector<Generator> gens;
  for (GenId i = 0; i < h.size(); ++i) gens.push_back(h.generator(i));
  for (GenId i = 0; i < g.size(); ++i) gens.push_back(g.generator(i));
  const GenId off = static_cast<GenId>(h.size());
  TableAlgebra alg(g.name() + "+" + h.name(), gens);
  for (GenId a = 0; a < h.size(); ++a)
    for (GenId b = 0; b < h.size(); ++b) alg.set_bracket(a, b, h.bracket(a, b));
  for (GenId a = 0; a < g.size(); ++a)
    for (GenId b = 0; b < g.size(); ++b) {
      LinearCombination lc = g.bracket(a, b);
      for (auto& t : lc) t.gen += off;
      alg.set_bracket(a + off, b + off, std::move(lc));
    }
  return alg;
}

}  // namespace superhom

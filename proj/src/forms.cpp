#include "superhom/forms.hpp"

#include <sstream>
#include <stdexcept>

namespace superhom {

int wedge_sign(IndexMask a, IndexMask b) {
  if (a & b) return 0;
  int inversions = 0;
  for (IndexMask rest = b; rest; rest &= rest - 1) {
    int j = __builtin_ctz(rest);
    IndexMask above = j + 1 >= 32 ? 0u : ~((IndexMask(1) << (j + 1)) - 1);
    inversions += mask_size(a & above);
  }
  return inversions % 2 ? -1 : 1;
}

std::vector<IndexMask> subsets_of_size(int n, int k) {
  std::vector<IndexMask> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    IndexMask m = 0;
    for (int i : idx) m |= IndexMask(1) << i;
    out.push_back(m);
    int p = k - 1;
    while (p >= 0 && idx[p] == n - k + p) --p;
    if (p < 0) break;
    ++idx[p];
    for (int q = p + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
  return out;
}

std::vector<IndexMask> form_basis(int dim) {
  std::vector<IndexMask> out;
  for (int a = 0; a <= dim; ++a) {
    auto s = subsets_of_size(dim, a);
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

InvariantForm::InvariantForm(int dim, int degree) : dim_(dim), degree_(degree) {
  if (dim < 1 || dim > kMaxFormDim) throw std::invalid_argument("form dimension out of range");
  if (degree < 0) throw std::invalid_argument("negative form degree");
}

InvariantForm InvariantForm::basis(int dim, IndexMask mask, const Rational& coeff) {
  InvariantForm f(dim, mask_size(mask));
  f.add_term(mask, coeff);
  return f;
}

Rational InvariantForm::coefficient(IndexMask mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? Rational(0) : it->second;
}

void InvariantForm::add_term(IndexMask mask, const Rational& coeff) {
  if (mask_size(mask) != degree_) throw std::invalid_argument("term degree does not match form degree");
  if (dim_ < 32 && (mask >> dim_)) throw std::invalid_argument("index outside the algebra");
  if (::superhom::is_zero(coeff)) return;
  auto [it, fresh] = terms_.emplace(mask, coeff);
  if (!fresh) {
    it->second += coeff;
    if (::superhom::is_zero(it->second)) terms_.erase(it);
  }
}

void InvariantForm::check_compatible(const InvariantForm& o) const {
  if (dim_ != o.dim_ || degree_ != o.degree_) throw std::invalid_argument("adding forms of different degree");
}

InvariantForm& InvariantForm::operator+=(const InvariantForm& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

InvariantForm& InvariantForm::operator-=(const InvariantForm& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

InvariantForm& InvariantForm::operator*=(const Rational& s) {
  if (::superhom::is_zero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

InvariantForm wedge(const InvariantForm& a, const InvariantForm& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("wedge of forms on different algebras");
  InvariantForm out(a.dim(), a.degree() + b.degree());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms())
      if (int s = wedge_sign(ma, mb)) out.add_term(ma | mb, s * ca * cb);
  return out;
}

namespace {

InvariantForm d_generator(int i, const LieAlgebraSpec& spec) {
  InvariantForm out(spec.dim(), 2);
  for (const auto& [key, v] : spec.constants())
    if (key[2] == i) out.add_term((IndexMask(1) << key[0]) | (IndexMask(1) << key[1]), -v);
  return out;
}

}  // namespace

InvariantForm exterior_derivative(const InvariantForm& a, const LieAlgebraSpec& spec) {
  if (a.dim() != spec.dim()) throw std::invalid_argument("form and algebra dimensions differ");
  const int n = spec.dim();
  InvariantForm out(n, a.degree() + 1);
  if (a.degree() + 1 > n) return out;
  std::vector<InvariantForm> dgen;
  dgen.reserve(n);
  for (int i = 0; i < n; ++i) dgen.push_back(d_generator(i, spec));
  for (const auto& [mask, coeff] : a.terms()) {
    int r = 0;
    for (IndexMask rest = mask; rest; rest &= rest - 1, ++r) {
      int i = __builtin_ctz(rest);
      IndexMask bit = IndexMask(1) << i;
      IndexMask before = mask & (bit - 1);
      IndexMask after = mask & ~(before | bit);
      for (const auto& [dm, dc] : dgen[i].terms()) {
        int s1 = wedge_sign(before, dm);
        if (!s1) continue;
        int s2 = wedge_sign(before | dm, after);
        if (!s2) continue;
        Rational term = coeff * dc * (s1 * s2 * (r % 2 ? -1 : 1));
        out.add_term(before | dm | after, term);
      }
    }
  }
  return out;
}

InvariantForm super_bracket(const InvariantForm& a, const InvariantForm& b, const LieAlgebraSpec& spec) {
  InvariantForm out = exterior_derivative(wedge(a, b), spec);
  if (a.degree() % 2) out *= -1;
  return out;
}

InvariantForm interior_product(const std::vector<Rational>& x, const InvariantForm& a) {
  if (static_cast<int>(x.size()) != a.dim()) throw std::invalid_argument("vector length differs from dimension");
  if (a.degree() == 0) return InvariantForm(a.dim(), 0);
  InvariantForm out(a.dim(), a.degree() - 1);
  for (const auto& [mask, coeff] : a.terms()) {
    int r = 0;
    for (IndexMask rest = mask; rest; rest &= rest - 1, ++r) {
      int i = __builtin_ctz(rest);
      if (is_zero(x[i])) continue;
      out.add_term(mask & ~(IndexMask(1) << i), coeff * x[i] * (r % 2 ? -1 : 1));
    }
  }
  return out;
}

namespace {

std::string raw_label(IndexMask mask) {
  if (!mask) return "1";
  std::string s;
  for (IndexMask rest = mask; rest; rest &= rest - 1) {
    if (!s.empty()) s += '^';
    s += 's' + std::to_string(__builtin_ctz(rest) + 1);
  }
  return s;
}

// Shorthand symbol and the sign relating it to the sorted raw monomial.
std::pair<std::string, int> shorthand(int dim, IndexMask mask) {
  if (mask_size(mask) <= 1) return {raw_label(mask), 1};
  if (dim == 2 && mask == 0b11) return {"V", 1};
  if (dim == 3) {
    switch (mask) {
      case 0b110: return {"w1", 1};
      case 0b101: return {"w2", -1};
      case 0b011: return {"w3", 1};
      case 0b111: return {"V", 1};
      default: break;
    }
  }
  return {raw_label(mask), 1};
}

}  // namespace

std::string basis_label(int dim, IndexMask mask, FormNotation notation) {
  return notation == FormNotation::shorthand ? shorthand(dim, mask).first : raw_label(mask);
}

int basis_label_sign(int dim, IndexMask mask, FormNotation notation) {
  return notation == FormNotation::shorthand ? shorthand(dim, mask).second : 1;
}

std::string format_form(const InvariantForm& a, FormNotation notation) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mask, c0] : a.terms()) {
    auto [label, sign] = notation == FormNotation::shorthand ? shorthand(a.dim(), mask)
                                                             : std::pair<std::string, int>{raw_label(mask), 1};
    Rational c = c0 * sign;
    bool neg = sgn(c) < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (mag != 1 || mask == 0) {
      os << to_string(mag);
      if (mask) os << '*';
    }
    if (mask) os << label;
  }
  return os.str();
}

BracketTable bracket_table(const LieAlgebraSpec& spec) {
  BracketTable t;
  t.dim = spec.dim();
  t.basis = form_basis(spec.dim());
  for (IndexMask r : t.basis) {
    auto& row = t.entries.emplace_back();
    for (IndexMask c : t.basis)
      row.push_back(super_bracket(InvariantForm::basis(t.dim, r), InvariantForm::basis(t.dim, c), spec));
  }
  return t;
}

InvariantForm labelled_entry(const BracketTable& t, std::size_t r, std::size_t c, FormNotation notation) {
  InvariantForm v = t.entries.at(r).at(c);
  v *= basis_label_sign(t.dim, t.basis[r], notation) * basis_label_sign(t.dim, t.basis[c], notation);
  return v;
}

std::string render_bracket_table(const BracketTable& t, FormNotation notation) {
  std::ostringstream os;
  for (std::size_t r = 0; r < t.basis.size(); ++r)
    for (std::size_t c = 0; c < t.basis.size(); ++c)
      os << '[' << basis_label(t.dim, t.basis[r], notation) << ", " << basis_label(t.dim, t.basis[c], notation)
         << "] = " << format_form(labelled_entry(t, r, c, notation), notation) << '\n';
  return os.str();
}

}  // namespace superhom

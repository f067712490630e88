#include "superhom/superchain.hpp"

#include <algorithm>
#include <sstream>

namespace superhom {

TableAlgebra::TableAlgebra(std::string name, std::vector<Generator> gens)
    : name_(std::move(name)), gens_(std::move(gens)), table_(gens_.size() * gens_.size()) {
  for (std::size_t i = 1; i < gens_.size(); ++i)
    if (gens_[i].grade > gens_[i - 1].grade)
      throw std::invalid_argument("generators must be listed with non-increasing grade");
}

void TableAlgebra::set_bracket(GenId a, GenId b, LinearCombination value) {
  if (a >= gens_.size() || b >= gens_.size()) throw std::out_of_range("generator id out of range");
  const int g = gens_[a].grade + gens_[b].grade;
  for (const auto& t : value)
    if (t.gen >= gens_.size() || gens_[t.gen].grade != g)
      throw std::invalid_argument("bracket value breaks grade additivity");
  std::erase_if(value, [](const Term& t) { return is_zero(t.coeff); });
  table_[a * gens_.size() + b] = std::move(value);
}

namespace {

std::vector<Generator> form_generators(const LieAlgebraSpec& spec, const std::vector<IndexMask>& masks) {
  std::vector<Generator> gens;
  for (IndexMask m : masks)
    gens.push_back({FormDegree{mask_size(m)}.grade(), 0, GeneratorKind::form,
                    basis_label(spec.dim(), m, FormNotation::raw)});
  return gens;
}

LinearCombination to_combination(const InvariantForm& f, const std::map<IndexMask, GenId>& index) {
  LinearCombination out;
  for (const auto& [mask, c] : f.terms()) out.push_back({index.at(mask), c});
  return out;
}

}  // namespace

FormAlgebra::FormAlgebra(const LieAlgebraSpec& spec)
    : TableAlgebra(spec.name(), form_generators(spec, form_basis(spec.dim()))),
      spec_(spec),
      masks_(form_basis(spec.dim())) {
  for (GenId i = 0; i < masks_.size(); ++i) index_[masks_[i]] = i;
  for (GenId a = 0; a < masks_.size(); ++a)
    for (GenId b = 0; b < masks_.size(); ++b) {
      auto f = super_bracket(InvariantForm::basis(spec.dim(), masks_[a]), InvariantForm::basis(spec.dim(), masks_[b]),
                             spec);
      if (!f.is_zero()) set_bracket(a, b, to_combination(f, index_));
    }
}

std::size_t ChainMonomialHash::operator()(const ChainMonomial& m) const noexcept {
  std::size_t h = m.factors.size();
  for (GenId g : m.factors) h = h * 1000003u ^ (g + 0x9e3779b9u + (h << 6) + (h >> 2));
  return h;
}

int weight(const GradedAlgebra& alg, const ChainMonomial& m) {
  int w = 0;
  for (GenId g : m.factors) w += alg.grade(g);
  return w;
}

int secondary_weight(const GradedAlgebra& alg, const ChainMonomial& m) {
  int h = 0;
  for (GenId g : m.factors) h += alg.generator(g).secondary;
  return h;
}

std::string format_monomial(const GradedAlgebra& alg, const ChainMonomial& m) {
  if (m.factors.empty()) return "()";
  std::ostringstream os;
  for (std::size_t i = 0; i < m.factors.size();) {
    std::size_t j = i;
    while (j < m.factors.size() && m.factors[j] == m.factors[i]) ++j;
    if (i) os << " & ";
    os << '(' << alg.generator(m.factors[i]).label << ')';
    if (j - i > 1) os << '^' << j - i;
    i = j;
  }
  return os.str();
}

std::string format_chain(const GradedAlgebra& alg, const ChainVector& v) {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : v) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c) << " " << format_monomial(alg, m);
  }
  return os.str();
}

NormalForm normalize(const GradedAlgebra& alg, std::vector<GenId> f) {
  int sign = 1;
  for (std::size_t i = 1; i < f.size(); ++i)
    for (std::size_t j = i; j > 0 && f[j - 1] > f[j]; --j) {
      if (!(alg.is_odd(f[j - 1]) && alg.is_odd(f[j]))) sign = -sign;
      std::swap(f[j - 1], f[j]);
    }
  for (std::size_t i = 1; i < f.size(); ++i)
    if (f[i] == f[i - 1] && !alg.is_odd(f[i])) return {0, {}};
  return {sign, ChainMonomial{std::move(f)}};
}

void add_to(ChainVector& v, const ChainMonomial& m, const Rational& c) {
  if (is_zero(c)) return;
  auto [it, fresh] = v.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (is_zero(it->second)) v.erase(it);
  }
}

void add_to(ChainVector& v, const ChainVector& w, const Rational& c) {
  for (const auto& [m, x] : w) add_to(v, m, x * c);
}

namespace {

void add_normalized(const GradedAlgebra& alg, ChainVector& out, std::vector<GenId> seq, const Rational& c) {
  auto nf = normalize(alg, std::move(seq));
  if (nf.sign) add_to(out, nf.monomial, nf.sign > 0 ? c : Rational(-c));
}

}  // namespace

ChainVector chain_wedge(const GradedAlgebra& alg, const ChainVector& a, const ChainVector& b) {
  ChainVector out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      std::vector<GenId> seq = ma.factors;
      seq.insert(seq.end(), mb.factors.begin(), mb.factors.end());
      add_normalized(alg, out, std::move(seq), ca * cb);
    }
  return out;
}

ChainBasis::ChainBasis(int m, int w, std::optional<int> h, std::vector<ChainMonomial> monomials)
    : m_(m), w_(w), h_(h), monomials_(std::move(monomials)) {
  for (std::size_t i = 0; i < monomials_.size(); ++i)
    if (!index_.emplace(monomials_[i], i).second) throw std::invalid_argument("duplicate monomial in chain basis");
}

std::optional<std::size_t> ChainBasis::index_of(const ChainMonomial& mono) const {
  auto it = index_.find(mono);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

struct Enumerator {
  const GradedAlgebra& alg;
  const EnumerationOptions& opt;
  std::vector<GenId> gens;
  std::vector<int> min_grade, max_grade, min_sec, max_sec;  // suffix bounds
  std::vector<GenId> current;
  std::vector<ChainMonomial> out;

  void run(std::size_t p, int r, int rw, int rh) {
    if (r == 0) {
      if (rw == 0 && (!opt.secondary || rh == 0)) {
        out.push_back(ChainMonomial{current});
        if (opt.cap && out.size() > opt.cap)
          throw ResourceLimitExceeded("chain basis exceeds cap of " + std::to_string(opt.cap) + " monomials");
      }
      return;
    }
    if (p == gens.size()) return;
    if (rw < r * min_grade[p] || rw > r * max_grade[p]) return;
    if (opt.secondary && (rh < r * min_sec[p] || rh > r * max_sec[p])) return;
    const GenId g = gens[p];
    const Generator& gen = alg.generator(g);
    int emax = odd_grade(gen.grade) ? r : std::min(r, 1);
    if (gen.grade < 0) emax = std::min(emax, rw / gen.grade);
    for (int e = emax; e >= 0; --e) {
      for (int k = 0; k < e; ++k) current.push_back(g);
      run(p + 1, r - e, rw - e * gen.grade, rh - e * gen.secondary);
      current.resize(current.size() - e);
    }
  }
};

}  // namespace

ChainBasis enumerate_chain_basis(const GradedAlgebra& alg, int m, int w, const EnumerationOptions& opt) {
  if (m < 0) throw std::invalid_argument("negative chain degree");
  Enumerator en{alg, opt, {}, {}, {}, {}, {}, {}, {}};
  for (GenId g = 0; g < alg.size(); ++g) {
    if (opt.allow && !opt.allow(g)) continue;
    if (alg.grade(g) > 0) throw std::invalid_argument("chain enumeration needs generators of grade <= 0");
    en.gens.push_back(g);
  }
  const std::size_t k = en.gens.size();
  en.min_grade.assign(k + 1, 0);
  en.max_grade.assign(k + 1, 0);
  en.min_sec.assign(k + 1, 0);
  en.max_sec.assign(k + 1, 0);
  for (std::size_t p = k; p-- > 0;) {
    const Generator& g = alg.generator(en.gens[p]);
    bool last = p + 1 == k;
    en.min_grade[p] = last ? g.grade : std::min(g.grade, en.min_grade[p + 1]);
    en.max_grade[p] = last ? g.grade : std::max(g.grade, en.max_grade[p + 1]);
    en.min_sec[p] = last ? g.secondary : std::min(g.secondary, en.min_sec[p + 1]);
    en.max_sec[p] = last ? g.secondary : std::max(g.secondary, en.max_sec[p + 1]);
  }
  if (m == 0) {
    if (w == 0 && (!opt.secondary || *opt.secondary == 0)) en.out.push_back(ChainMonomial{});
  } else if (k > 0) {
    en.run(0, m, w, opt.secondary.value_or(0));
  }
  return ChainBasis(m, w, opt.secondary, std::move(en.out));
}

ChainBasis enumerate_chain_basis(int m, int w, int n) {
  return enumerate_chain_basis(FormAlgebra(catalog_abelian(n)), m, w);
}

ChainVector boundary_of_sequence(const GradedAlgebra& alg, const std::vector<GenId>& seq) {
  ChainVector out;
  const std::size_t len = seq.size();
  std::vector<GenId> next;
  for (std::size_t i = 0; i < len; ++i) {
    int odd_between = 0;
    for (std::size_t j = i + 1; j < len; ++j) {
      int sign = i % 2 ? -1 : 1;
      if (alg.is_odd(seq[i]) && odd_between % 2) sign = -sign;
      for (const auto& t : alg.bracket(seq[i], seq[j])) {
        next = seq;
        next[j] = t.gen;
        next.erase(next.begin() + i);
        add_normalized(alg, out, next, sign * t.coeff);
      }
      if (alg.is_odd(seq[j])) ++odd_between;
    }
  }
  return out;
}

ChainVector boundary(const GradedAlgebra& alg, const ChainMonomial& m) { return boundary_of_sequence(alg, m.factors); }

ChainVector left_action(const GradedAlgebra& alg, GenId a0, const std::vector<GenId>& rest) {
  ChainVector out;
  int odd_before = 0;
  const bool a0_odd = alg.is_odd(a0);
  for (std::size_t i = 0; i < rest.size(); ++i) {
    int sign = a0_odd && odd_before % 2 ? -1 : 1;
    for (const auto& t : alg.bracket(a0, rest[i])) {
      std::vector<GenId> next = rest;
      next[i] = t.gen;
      add_normalized(alg, out, std::move(next), sign * t.coeff);
    }
    if (alg.is_odd(rest[i])) ++odd_before;
  }
  return out;
}

ChainVector boundary_left_action(const GradedAlgebra& alg, const std::vector<GenId>& seq) {
  if (seq.size() < 2) return {};
  const GenId a0 = seq[0];
  std::vector<GenId> rest(seq.begin() + 1, seq.end());
  ChainVector out = left_action(alg, a0, rest);
  for (const auto& [m, c] : boundary_left_action(alg, rest)) {
    std::vector<GenId> next{a0};
    next.insert(next.end(), m.factors.begin(), m.factors.end());
    add_normalized(alg, out, std::move(next), -c);
  }
  return out;
}

ChainVector sz_bracket(const GradedAlgebra& alg, const std::vector<GenId>& a, const std::vector<GenId>& b) {
  ChainVector out;
  std::vector<int> odd_after(a.size() + 1, 0), odd_before(b.size() + 1, 0);
  for (std::size_t i = a.size(); i-- > 0;) odd_after[i] = odd_after[i + 1] + (alg.is_odd(a[i]) ? 1 : 0);
  for (std::size_t j = 0; j < b.size(); ++j) odd_before[j + 1] = odd_before[j] + (alg.is_odd(b[j]) ? 1 : 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      int sign = i % 2 ? -1 : 1;
      if (alg.is_odd(a[i]) && (odd_after[i + 1] + odd_before[j]) % 2) sign = -sign;
      for (const auto& t : alg.bracket(a[i], b[j])) {
        std::vector<GenId> seq(a.begin(), a.begin() + i);
        seq.insert(seq.end(), a.begin() + i + 1, a.end());
        seq.insert(seq.end(), b.begin(), b.begin() + j);
        seq.push_back(t.gen);
        seq.insert(seq.end(), b.begin() + j + 1, b.end());
        add_normalized(alg, out, std::move(seq), sign * t.coeff);
      }
    }
  return out;
}

namespace {

template <class F>
SparseRationalMatrix assemble(const GradedAlgebra& alg, const ChainBasis& src, const ChainBasis& dst, F&& image) {
  if (dst.m() + 1 != src.m()) throw std::invalid_argument("boundary needs bases of degree m and m-1");
  if (dst.w() != src.w() || dst.h() != src.h()) throw std::invalid_argument("boundary bases differ in weight");
  SparseRationalMatrix mat(dst.size(), src.size());
  for (std::size_t c = 0; c < src.size(); ++c)
    for (const auto& [mono, v] : image(src[c])) {
      auto r = dst.index_of(mono);
      if (!r) {
        std::string why = weight(alg, mono) != src.w() ? "weight" : "secondary weight";
        throw std::logic_error("boundary image " + format_monomial(alg, mono) + " leaves the " + why + " space");
      }
      mat.set(*r, c, v);
    }
  return mat;
}

}  // namespace

SparseRationalMatrix boundary_matrix(const GradedAlgebra& alg, const ChainBasis& src, const ChainBasis& dst) {
  return assemble(alg, src, dst, [&](const ChainMonomial& m) { return boundary(alg, m); });
}

SparseRationalMatrix boundary_matrix_left_action(const GradedAlgebra& alg, const ChainBasis& src,
                                                 const ChainBasis& dst) {
  return assemble(alg, src, dst, [&](const ChainMonomial& m) { return boundary_left_action(alg, m.factors); });
}

}  // namespace superhom

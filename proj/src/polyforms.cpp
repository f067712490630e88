#include "superhom/polyforms.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace superhom {

int total_degree(const Exponent& a) { return std::accumulate(a.begin(), a.end(), 0); }

std::vector<Exponent> monomials_of_degree(int n, int d) {
  std::vector<Exponent> out;
  if (d < 0) return out;
  Exponent cur(n, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n - 1) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[i] = e;
      self(self, i + 1, left - e);
    }
  };
  rec(rec, 0, d);
  return out;
}

namespace {

void check_exponent(int n, const Exponent& a) {
  if (static_cast<int>(a.size()) != n) throw std::invalid_argument("exponent length differs from ambient dimension");
  for (int e : a)
    if (e < 0) throw std::invalid_argument("negative exponent");
}

Exponent plus(const Exponent& a, const Exponent& b) {
  Exponent c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

// d/dx_i of c x^alpha, as (exponent, factor); factor 0 when it vanishes.
std::pair<Exponent, int> partial(const Exponent& alpha, int i) {
  if (alpha[i] == 0) return {alpha, 0};
  Exponent b = alpha;
  --b[i];
  return {b, alpha[i]};
}

template <class Map, class Key>
void add_into(Map& m, Key&& key, const Rational& c) {
  if (is_zero(c)) return;
  auto [it, fresh] = m.emplace(std::forward<Key>(key), c);
  if (!fresh) {
    it->second += c;
    if (is_zero(it->second)) m.erase(it);
  }
}

}  // namespace

PolyForm::PolyForm(int n) : n_(n) {
  if (n < 1 || n > kMaxFormDim) throw std::invalid_argument("ambient dimension out of range");
}

PolyForm PolyForm::monomial(const Exponent& alpha, IndexMask mask, const Rational& c) {
  PolyForm f(static_cast<int>(alpha.size()));
  f.add_term(alpha, mask, c);
  return f;
}

void PolyForm::add_term(const Exponent& alpha, IndexMask mask, const Rational& c) {
  check_exponent(n_, alpha);
  if (n_ < 32 && (mask >> n_)) throw std::invalid_argument("form index outside ambient dimension");
  add_into(terms_, Key{alpha, mask}, c);
}

PolyForm& PolyForm::operator+=(const PolyForm& o) {
  if (o.n_ != n_) throw std::invalid_argument("adding forms on different spaces");
  for (const auto& [k, c] : o.terms_) add_into(terms_, Key(k), c);
  return *this;
}

PolyForm& PolyForm::operator*=(const Rational& s) {
  if (::superhom::is_zero(s)) terms_.clear();
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

PolyVector::PolyVector(int n) : n_(n) {
  if (n < 1 || n > kMaxFormDim) throw std::invalid_argument("ambient dimension out of range");
}

PolyVector PolyVector::monomial(const Exponent& alpha, int i, const Rational& c) {
  PolyVector v(static_cast<int>(alpha.size()));
  v.add_term(alpha, i, c);
  return v;
}

void PolyVector::add_term(const Exponent& alpha, int i, const Rational& c) {
  check_exponent(n_, alpha);
  if (i < 0 || i >= n_) throw std::invalid_argument("vector direction out of range");
  add_into(terms_, Key{alpha, i}, c);
}

Polynomial PolyVector::component(int i) const {
  Polynomial p;
  for (const auto& [k, c] : terms_)
    if (k.second == i) p.emplace(k.first, c);
  return p;
}

PolyVector& PolyVector::operator+=(const PolyVector& o) {
  if (o.n_ != n_) throw std::invalid_argument("adding vectors on different spaces");
  for (const auto& [k, c] : o.terms_) add_into(terms_, Key(k), c);
  return *this;
}

PolyVector& PolyVector::operator*=(const Rational& s) {
  if (::superhom::is_zero(s)) terms_.clear();
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

PolyForm poly_wedge(const PolyForm& a, const PolyForm& b) {
  if (a.n() != b.n()) throw std::invalid_argument("wedge of forms on different spaces");
  PolyForm out(a.n());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms())
      if (int s = wedge_sign(ka.second, kb.second)) out.add_term(plus(ka.first, kb.first), ka.second | kb.second, s * ca * cb);
  return out;
}

PolyForm poly_d(const PolyForm& a) {
  PolyForm out(a.n());
  for (const auto& [k, c] : a.terms())
    for (int i = 0; i < a.n(); ++i) {
      auto [beta, f] = partial(k.first, i);
      if (!f) continue;
      const IndexMask bit = IndexMask(1) << i;
      if (int s = wedge_sign(bit, k.second)) out.add_term(beta, bit | k.second, s * f * c);
    }
  return out;
}

PolyForm interior_product(const PolyVector& x, const PolyForm& a) {
  if (x.n() != a.n()) throw std::invalid_argument("dimension mismatch in interior product");
  PolyForm out(a.n());
  for (const auto& [kx, cx] : x.terms()) {
    const int i = kx.second;
    const IndexMask bit = IndexMask(1) << i;
    for (const auto& [ka, ca] : a.terms()) {
      if (!(ka.second & bit)) continue;
      const int pos = mask_size(ka.second & (bit - 1));
      out.add_term(plus(kx.first, ka.first), ka.second & ~bit, (pos % 2 ? -1 : 1) * cx * ca);
    }
  }
  return out;
}

PolyForm lie_derivative(const PolyVector& x, const PolyForm& a) {
  return interior_product(x, poly_d(a)) + poly_d(interior_product(x, a));
}

PolyForm lie_derivative_direct(const PolyVector& x, const PolyForm& a) {
  if (x.n() != a.n()) throw std::invalid_argument("dimension mismatch in Lie derivative");
  const int n = a.n();
  PolyForm out(n);
  for (const auto& [ka, ca] : a.terms()) {
    const auto& [alpha, mask] = ka;
    // X(f) dx^A
    for (const auto& [kx, cx] : x.terms()) {
      auto [beta, f] = partial(alpha, kx.second);
      if (f) out.add_term(plus(kx.first, beta), mask, f * cx * ca);
    }
    // f dx^{a_1} .. d(X^{a_r}) .. dx^{a_k}
    for (IndexMask rest = mask; rest; rest &= rest - 1) {
      const int ar = __builtin_ctz(rest);
      const IndexMask bit = IndexMask(1) << ar;
      const IndexMask before = mask & (bit - 1), after = mask & ~(before | bit);
      for (const auto& [kx, cx] : x.terms()) {
        if (kx.second != ar) continue;
        for (int j = 0; j < n; ++j) {
          auto [beta, f] = partial(kx.first, j);
          if (!f) continue;
          const IndexMask jb = IndexMask(1) << j;
          int s = wedge_sign(before, jb);
          if (!s) continue;
          s *= wedge_sign(before | jb, after);
          if (!s) continue;
          out.add_term(plus(alpha, beta), before | jb | after, s * f * cx * ca);
        }
      }
    }
  }
  return out;
}

PolyVector vector_commutator(const PolyVector& x, const PolyVector& y) {
  if (x.n() != y.n()) throw std::invalid_argument("commutator of vectors on different spaces");
  PolyVector out(x.n());
  auto apply = [&](const PolyVector& a, const PolyVector& b, int sign) {
    for (const auto& [ka, ca] : a.terms())
      for (const auto& [kb, cb] : b.terms()) {
        auto [beta, f] = partial(kb.first, ka.second);
        if (f) out.add_term(plus(ka.first, beta), kb.second, sign * f * ca * cb);
      }
  };
  apply(x, y, 1);
  apply(y, x, -1);
  return out;
}

namespace {

std::optional<int> form_degree(const PolyForm& f) {
  std::optional<int> deg;
  for (const auto& [k, c] : f.terms()) {
    int d = mask_size(k.second);
    if (deg && *deg != d) throw std::invalid_argument("form is not homogeneous in degree");
    deg = d;
  }
  return deg;
}

}  // namespace

PolyElement poly_bracket(const PolyElement& a, const PolyElement& b) {
  const auto* av = std::get_if<PolyVector>(&a);
  const auto* bv = std::get_if<PolyVector>(&b);
  if (av && bv) return vector_commutator(*av, *bv);
  if (av) return lie_derivative(*av, std::get<PolyForm>(b));
  if (bv) return PolyForm(-1 * lie_derivative(*bv, std::get<PolyForm>(a)));
  const auto& fa = std::get<PolyForm>(a);
  PolyForm out = poly_d(poly_wedge(fa, std::get<PolyForm>(b)));
  auto deg = form_degree(fa);
  if (deg && *deg % 2) out *= -1;
  return out;
}

std::optional<std::pair<int, int>> double_weight(const PolyElement& e) {
  std::optional<std::pair<int, int>> wt;
  auto merge = [&](int primary, int secondary) {
    if (wt && (wt->first != primary || wt->second != secondary)) return false;
    wt = {primary, secondary};
    return true;
  };
  if (auto v = std::get_if<PolyVector>(&e)) {
    for (const auto& [k, c] : v->terms())
      if (!merge(0, total_degree(k.first) - 1)) return std::nullopt;
  } else {
    for (const auto& [k, c] : std::get<PolyForm>(e).terms())
      if (!merge(-1 - mask_size(k.second), total_degree(k.first) - 1)) return std::nullopt;
  }
  return wt;
}

namespace {

std::string monomial_label(const Exponent& alpha) {
  std::string s;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (!alpha[i]) continue;
    if (!s.empty()) s += '*';
    s += 'x' + std::to_string(i + 1);
    if (alpha[i] > 1) s += '^' + std::to_string(alpha[i]);
  }
  return s;
}

std::string dx_label(IndexMask mask) {
  std::string s;
  for (IndexMask r = mask; r; r &= r - 1) {
    if (!s.empty()) s += '^';
    s += "dx" + std::to_string(__builtin_ctz(r) + 1);
  }
  return s;
}

std::string join_factors(const std::string& coeff_part, const std::string& rest) {
  if (coeff_part.empty()) return rest.empty() ? "1" : rest;
  if (rest.empty()) return coeff_part;
  return coeff_part + ' ' + rest;
}

}  // namespace

std::string format_poly(const PolyElement& e) {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Rational& c, const std::string& body) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << to_string(c) << ' ';
    os << body;
  };
  if (auto v = std::get_if<PolyVector>(&e)) {
    for (const auto& [k, c] : v->terms()) emit(c, join_factors(monomial_label(k.first), "d" + std::to_string(k.second + 1)));
  } else {
    for (const auto& [k, c] : std::get<PolyForm>(e).terms())
      emit(c, join_factors(monomial_label(k.first), dx_label(k.second)));
  }
  if (first) return "0";
  return os.str();
}

PolyAlgebra::PolyAlgebra(int n, int max_secondary, bool include_vectors)
    : n_(n), max_secondary_(max_secondary) {
  if (n < 1 || n > 8) throw std::invalid_argument("polynomial algebra supports 1 <= n <= 8");
  if (max_secondary < -1) throw std::invalid_argument("secondary weight starts at -1");
  name_ = "R" + std::to_string(n) + (include_vectors ? "" : "-forms");
  if (include_vectors)
    for (int h = -1; h <= max_secondary; ++h)
      for (const auto& alpha : monomials_of_degree(n, h + 1))
        for (int i = 0; i < n; ++i) {
          vector_ids_[{alpha, i}] = static_cast<GenId>(gens_.size());
          std::string label = monomial_label(alpha);
          gens_.push_back({0, h, GeneratorKind::vector, (label.empty() ? "" : label + " ") + "d" + std::to_string(i + 1)});
          elems_.emplace_back(PolyVector::monomial(alpha, i));
        }
  for (int a = 0; a <= n; ++a)
    for (int h = -1; h <= max_secondary; ++h)
      for (const auto& alpha : monomials_of_degree(n, h + 1))
        for (IndexMask mask : subsets_of_size(n, a)) {
          form_ids_[{alpha, mask}] = static_cast<GenId>(gens_.size());
          gens_.push_back({-1 - a, h, GeneratorKind::form, join_factors(monomial_label(alpha), dx_label(mask))});
          elems_.emplace_back(PolyForm::monomial(alpha, mask));
        }
}

std::optional<GenId> PolyAlgebra::find(const PolyElement& e) const {
  if (auto v = std::get_if<PolyVector>(&e)) {
    if (v->terms().size() != 1) return std::nullopt;
    auto it = vector_ids_.find(v->terms().begin()->first);
    if (it == vector_ids_.end()) return std::nullopt;
    return it->second;
  }
  const auto& f = std::get<PolyForm>(e);
  if (f.terms().size() != 1) return std::nullopt;
  auto it = form_ids_.find(f.terms().begin()->first);
  if (it == form_ids_.end()) return std::nullopt;
  return it->second;
}

LinearCombination PolyAlgebra::bracket(GenId a, GenId b) const {
  const std::uint64_t key = (std::uint64_t(a) << 32) | b;
  {
    std::lock_guard lock(cache_mu_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  PolyElement v = poly_bracket(elems_.at(a), elems_.at(b));
  LinearCombination lc;
  auto missing = [&] {
    return std::out_of_range("bracket of " + gens_[a].label + " and " + gens_[b].label +
                             " leaves the truncated generator set");
  };
  if (auto vec = std::get_if<PolyVector>(&v)) {
    for (const auto& [k, c] : vec->terms()) {
      auto it = vector_ids_.find(k);
      if (it == vector_ids_.end()) throw missing();
      lc.push_back({it->second, c});
    }
  } else {
    for (const auto& [k, c] : std::get<PolyForm>(v).terms()) {
      auto it = form_ids_.find(k);
      if (it == form_ids_.end()) throw missing();
      lc.push_back({it->second, c});
    }
  }
  std::lock_guard lock(cache_mu_);
  cache_.emplace(key, lc);
  return lc;
}

int poly_secondary_bound(int n, int w, int h, bool include_vectors) {
  // Every other factor contributes at least -1; only constant forms (at most
  // -w of them) and constant vectors (at most n) do.
  return std::max(-1, h - w + (include_vectors ? n : 0));
}

int poly_degree_bound(int n, int w, int h, bool include_vectors) {
  if (!include_vectors) return -w;
  // forms <= -w, constant and linear vectors <= n + n^2, higher vectors are
  // paid for by factors of secondary weight -1.
  return -w + n + n * n + std::max(0, h - w + n);
}

ChainBasis double_weight_basis(int m, int w, int h, int n, const PolyOptions& opt) {
  if (w > 0) return ChainBasis(m, w, h, {});
  const int hmax = opt.max_secondary ? *opt.max_secondary : poly_secondary_bound(n, w, h, opt.include_vectors);
  PolyAlgebra alg(n, hmax, opt.include_vectors);
  EnumerationOptions e;
  e.secondary = h;
  e.cap = opt.cap;
  return enumerate_chain_basis(alg, m, w, e);
}

HomologyReport double_weight_betti(int w, int h, int n, const PolyOptions& opt) {
  const int hmax = opt.max_secondary ? *opt.max_secondary : poly_secondary_bound(n, w, h, opt.include_vectors);
  PolyAlgebra alg(n, hmax, opt.include_vectors);
  ComplexOptions c;
  c.enumeration.secondary = h;
  c.enumeration.cap = opt.cap;
  c.max_degree = opt.max_degree ? *opt.max_degree : poly_degree_bound(n, w, h, opt.include_vectors);
  c.jobs = opt.jobs;
  c.k_split = opt.include_vectors;
  return compute_homology(alg, w, c);
}

}  // namespace superhom

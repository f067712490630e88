#include "superhom/liealg.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace superhom {

LieAlgebraSpec::LieAlgebraSpec(int dim, std::string name) : dim_(dim), name_(std::move(name)) {
  if (dim < 1) throw std::invalid_argument("Lie algebra dimension must be positive");
}

void LieAlgebraSpec::check_index(int i) const {
  if (i < 0 || i >= dim_)
    throw std::out_of_range("structure constant index " + std::to_string(i) + " out of range");
}

Rational LieAlgebraSpec::constant(int i, int j, int k) const {
  check_index(i);
  check_index(j);
  check_index(k);
  if (i == j) return 0;
  bool flip = i > j;
  auto it = c_.find(flip ? Key{j, i, k} : Key{i, j, k});
  if (it == c_.end()) return 0;
  return flip ? Rational(-it->second) : it->second;
}

void LieAlgebraSpec::set_constant(int i, int j, int k, const Rational& value) {
  check_index(i);
  check_index(j);
  check_index(k);
  if (i == j) {
    if (!is_zero(value)) throw std::invalid_argument("c^k_{ii} must vanish");
    return;
  }
  Key key = i < j ? Key{i, j, k} : Key{j, i, k};
  Rational v = i < j ? value : Rational(-value);
  if (is_zero(v))
    c_.erase(key);
  else
    c_[key] = v;
}

LieAlgebraSpec LieAlgebraSpec::scaled(const Rational& lambda) const {
  if (is_zero(lambda)) throw std::invalid_argument("rescale factor must be nonzero");
  LieAlgebraSpec out(dim_, name_);
  for (const auto& [key, v] : c_) out.c_[key] = v * lambda;
  return out;
}

LieAlgebraSpec LieAlgebraSpec::renamed(std::string name) const {
  LieAlgebraSpec out = *this;
  out.name_ = std::move(name);
  return out;
}

std::string ValidationReport::summary() const {
  if (ok) return "jacobi ok";
  const auto& v = *violation;
  std::ostringstream os;
  os << "jacobi fails at (i,j,k)=(" << v.i + 1 << ',' << v.j + 1 << ',' << v.k + 1 << "), l=" << v.l + 1
     << ", residual " << to_string(v.residual);
  return os.str();
}

ValidationReport validate(const LieAlgebraSpec& spec) {
  const int n = spec.dim();
  ValidationReport report;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Rational r = 0;
          for (int m = 0; m < n; ++m)
            r += spec.constant(i, j, m) * spec.constant(m, k, l) + spec.constant(j, k, m) * spec.constant(m, i, l) +
                 spec.constant(k, i, m) * spec.constant(m, j, l);
          if (!is_zero(r)) {
            report.ok = false;
            report.violation = JacobiViolation{i, j, k, l, r};
            return report;
          }
        }
  return report;
}

// Catalog constants are twice the textbook ones so that d sigma^i reproduces
// the tabulated values (d sigma^i = -2 w^i for so3 and so on).

LieAlgebraSpec catalog_abelian(int n) { return LieAlgebraSpec(n, "abelian(" + std::to_string(n) + ")"); }

LieAlgebraSpec catalog_d2(const Rational& kappa) {
  if (is_zero(kappa)) throw std::invalid_argument("d2(kappa) requires kappa != 0");
  LieAlgebraSpec s(3, "d2(" + to_string(kappa) + ")");
  // [xi_2, xi_3] = kappa xi_2, [xi_3, xi_1] = -xi_1, [xi_1, xi_2] = 0
  s.set_constant(1, 2, 1, 2 * kappa);
  s.set_constant(0, 2, 0, 2);
  return s;
}

namespace {

LieAlgebraSpec make_so3() {
  LieAlgebraSpec s(3, "so3");
  s.set_constant(1, 2, 0, 2);
  s.set_constant(2, 0, 1, 2);
  s.set_constant(0, 1, 2, 2);
  return s;
}

LieAlgebraSpec make_sl2r() {
  LieAlgebraSpec s(3, "sl2r");
  s.set_constant(1, 2, 0, -2);
  s.set_constant(2, 0, 1, 2);
  s.set_constant(0, 1, 2, 2);
  return s;
}

std::optional<std::string_view> parenthesized(std::string_view name, std::string_view head) {
  if (name.size() < head.size() + 2 || name.substr(0, head.size()) != head) return std::nullopt;
  if (name[head.size()] != '(' || name.back() != ')') return std::nullopt;
  return name.substr(head.size() + 1, name.size() - head.size() - 2);
}

}  // namespace

LieAlgebraSpec catalog(std::string_view name) {
  if (name == "so3" || name == "d3") return make_so3();
  if (name == "sl2r") return make_sl2r();
  if (name == "dim2") {
    LieAlgebraSpec s(2, "dim2");
    s.set_constant(0, 1, 0, 2);
    return s;
  }
  if (name == "d1n") {
    LieAlgebraSpec s(3, "d1n");
    s.set_constant(0, 1, 1, 2);
    return s;
  }
  if (name == "d1y") {
    LieAlgebraSpec s(3, "d1y");
    s.set_constant(0, 1, 2, 2);
    return s;
  }
  if (name == "d2y") return catalog_d2(-1);
  if (name == "d2n") return catalog_d2(1);
  if (auto arg = parenthesized(name, "d2")) return catalog_d2(parse_rational(*arg));
  if (auto arg = parenthesized(name, "abelian")) {
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(std::string(*arg), &used);
      if (used != arg->size()) n = 0;
    } catch (const std::exception&) {
      n = 0;
    }
    if (n < 1) throw std::invalid_argument("abelian(n) needs a positive integer n");
    return catalog_abelian(n);
  }
  throw std::invalid_argument("unknown algebra '" + std::string(name) + "'");
}

std::vector<std::string> catalog_names() {
  return {"abelian(2)", "abelian(3)", "dim2", "so3", "sl2r", "d2(-1)", "d2(1)", "d2(2)", "d2(3)", "d1n", "d1y"};
}

LieAlgebraSpec parse_structure_constants(std::istream& in, std::string fallback_name) {
  struct Record {
    int i, j, k;
    Rational v;
    int line;
  };
  std::vector<Record> records;
  int dim = 0, max_index = 0;
  std::string name = std::move(fallback_name);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "dim") {
      if (!(ls >> dim) || dim < 1) fail("bad dim directive");
    } else if (first == "name") {
      if (!(ls >> name)) fail("bad name directive");
    } else {
      Record r{};
      try {
        std::size_t used = 0;
        r.i = std::stoi(first, &used);
        if (used != first.size()) fail("bad index '" + first + "'");
      } catch (const std::logic_error&) {
        fail("bad index '" + first + "'");
      }
      std::string value;
      if (!(ls >> r.j >> r.k >> value)) fail("expected 'i j k p/q'");
      if (r.i < 1 || r.j < 1 || r.k < 1) fail("indices are 1-based");
      if (r.i == r.j) fail("i and j must differ");
      try {
        r.v = parse_rational(value);
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
      std::string extra;
      if (ls >> extra) fail("trailing token '" + extra + "'");
      max_index = std::max({max_index, r.i, r.j, r.k});
      r.line = lineno;
      records.push_back(r);
    }
  }
  if (dim == 0) dim = max_index;
  if (dim == 0) throw std::invalid_argument("no dimension and no constants given");
  LieAlgebraSpec spec(dim, name);
  std::map<LieAlgebraSpec::Key, int> seen;
  for (const auto& r : records) {
    lineno = r.line;
    if (std::max({r.i, r.j, r.k}) > dim) fail("index exceeds declared dim " + std::to_string(dim));
    LieAlgebraSpec::Key key{std::min(r.i, r.j), std::max(r.i, r.j), r.k};
    if (auto [it, fresh] = seen.emplace(key, r.line); !fresh)
      fail("constant c^" + std::to_string(r.k) + "_{" + std::to_string(key[0]) + std::to_string(key[1]) +
           "} already given on line " + std::to_string(it->second));
    spec.set_constant(r.i - 1, r.j - 1, r.k - 1, r.v);
  }
  return spec;
}

LieAlgebraSpec load_structure_constants(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::string stem = path;
  if (auto slash = stem.find_last_of('/'); slash != std::string::npos) stem.erase(0, slash + 1);
  if (auto dot = stem.find('.'); dot != std::string::npos) stem.erase(dot);
  return parse_structure_constants(in, stem);
}

std::string format_structure_constants(const LieAlgebraSpec& spec) {
  std::ostringstream os;
  os << "name " << spec.name() << "\ndim " << spec.dim() << '\n';
  for (const auto& [key, v] : spec.constants())
    os << key[0] + 1 << ' ' << key[1] + 1 << ' ' << key[2] + 1 << ' ' << to_string(v) << '\n';
  return os.str();
}

}  // namespace superhom

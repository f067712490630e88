// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "superhom/extend.hpp"
#include "superhom/homology.hpp"
#include "superhom/polyforms.hpp"

using namespace superhom;

namespace {

// Wall-clock limits in seconds.
constexpr double kDim2Seconds = 1.0;
constexpr double kTablesSeconds = 60.0;
// Exact arithmetic throughout: every comparison is equality.

struct Check {
  bool ok = true;
  std::vector<std::string> notes;
  void fail(const std::string& s) {
    ok = false;
    if (notes.size() < 10) notes.push_back(s);
  }
  void expect(bool cond, const std::string& s) {
    if (!cond) fail(s);
  }
};

template <class T>
std::string row(const std::vector<T>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. dim-2 Betti rows, trimmed to the nonzero chain spaces.
Check criterion1() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  const auto spec = catalog("dim2");
  for (int W = 1; W <= 12; ++W) {
    const auto rep = betti_row(spec, -W);
    std::vector<long> got;
    for (const auto& r : rep.rows)
      if (r.dim > 0) got.push_back(r.betti);
    std::string expect;
    if (W == 1) {
      expect = "(1)";
    } else if (W == 2) {
      expect = "(2,1)";
    } else {
      const int first = (W + 2) / 3;
      const int len = W - first + 1;
      std::vector<long> e(len, 0);
      if (W % 3) e[0] = 1;
      e[len - 2] = e[len - 1] = 1;
      expect = row(e);
    }
    c.expect(row(got) == expect, "w=" + std::to_string(-W) + ": got " + row(got) + ", expected " + expect);
  }
  const double s = seconds_since(t0);
  c.expect(s < kDim2Seconds, "runtime " + std::to_string(s) + " s");
  return c;
}

// 2. chain dimensions of three-dimensional algebras.
Check criterion2() {
  Check c;
  const std::vector<std::vector<std::size_t>> expect = {
      {1}, {3, 1}, {3, 3, 1}, {1, 6, 3, 1}, {0, 10, 6, 3, 1}, {0, 9, 11, 6, 3, 1}};
  for (int W = 1; W <= 6; ++W) {
    std::vector<std::size_t> got;
    for (int m = 1; m <= W; ++m) got.push_back(enumerate_chain_basis(m, -W, 3).size());
    c.expect(got == expect[W - 1], "w=" + std::to_string(-W) + ": got " + row(got));
  }
  return c;
}

// 3. kernel and Betti tables for w in {-3, -5, -10}.
struct TableRow {
  const char* label;
  const char* selector;
  int w;
  std::vector<std::size_t> ker;
  std::vector<long> bet;
};

Check criterion3() {
  Check c;
  const std::vector<TableRow> table = {
      {"d3", "so3", -3, {3, 0, 1}, {0, 0, 1}},
      {"d2y", "d2(-1)", -3, {3, 1, 1}, {1, 1, 1}},
      {"d2n", "d2(1)", -3, {3, 1, 1}, {1, 1, 1}},
      {"d1y", "d1y", -3, {3, 2, 1}, {2, 2, 1}},
      {"d1n", "d1n", -3, {3, 2, 1}, {2, 2, 1}},
      {"d3", "so3", -5, {0, 10, 3, 0, 1}, {0, 7, 0, 0, 1}},
      {"d2y", "d2(-1)", -5, {0, 10, 3, 1, 1}, {0, 7, 1, 1, 1}},
      {"d2n", "d2(1)", -5, {0, 10, 2, 1, 1}, {0, 6, 0, 1, 1}},
      {"d1y", "d1y", -5, {0, 10, 4, 2, 1}, {0, 8, 3, 2, 1}},
      {"d1n", "d1n", -5, {0, 10, 3, 2, 1}, {0, 7, 2, 2, 1}},
      {"d3", "so3", -10, {0, 0, 6, 32, 11, 7, 4, 3, 0, 1}, {0, 0, 0, 16, 0, 0, 1, 0, 0, 1}},
      {"d2y", "d2(-1)", -10, {0, 0, 6, 33, 12, 8, 5, 3, 1, 1}, {0, 0, 1, 18, 2, 2, 2, 1, 1, 1}},
      {"d2n", "d2(1)", -10, {0, 0, 6, 32, 11, 7, 4, 2, 1, 1}, {0, 0, 0, 16, 0, 0, 0, 0, 1, 1}},
      {"d1y", "d1y", -10, {0, 0, 6, 35, 16, 11, 7, 4, 2, 1}, {0, 0, 3, 24, 9, 7, 5, 3, 2, 1}},
      {"d1n", "d1n", -10, {0, 0, 6, 32, 12, 8, 5, 3, 2, 1}, {0, 0, 0, 17, 2, 2, 2, 2, 2, 1}},
  };
  const std::vector<std::vector<std::size_t>> space = {
      {3, 3, 1}, {0, 10, 6, 3, 1}, {0, 0, 6, 38, 27, 18, 11, 6, 3, 1}};
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& t : table) {
    const auto rep = betti_row(catalog(t.selector), t.w);
    const std::string at = std::string(t.label) + " w=" + std::to_string(t.w);
    const auto& dims = space[t.w == -3 ? 0 : t.w == -5 ? 1 : 2];
    c.expect(rep.dims() == dims, at + " dims " + row(rep.dims()));
    c.expect(rep.kernels() == t.ker, at + " ker " + row(rep.kernels()));
    c.expect(rep.betti_numbers() == t.bet, at + " Betti " + row(rep.betti_numbers()));
  }
  const double s = seconds_since(t0);
  c.expect(s < kTablesSeconds, "runtime " + std::to_string(s) + " s");
  return c;
}

// 4. closed dimension formulas against enumeration.
Check criterion4() {
  Check c;
  for (int W = 1; W <= 15; ++W)
    for (int m = 0; m <= W + 1; ++m) {
      const long got = static_cast<long>(enumerate_chain_basis(m, -W, 3).size());
      const std::string at = "w=" + std::to_string(-W) + " m=" + std::to_string(m);
      c.expect(chain_dim_formula(-W, m) == got, at + " binomial form");
      c.expect(chain_dim_formula_cases(-W, m) == got, at + " parity cases");
    }
  return c;
}

// 5. square zero, Jacobi and antisymmetry, two boundary routes.
Check criterion5() {
  Check c;
  for (const auto& name : catalog_names()) {
    const auto spec = catalog(name);
    const FormAlgebra forms(spec);
    ComplexOptions opt;
    opt.check_square_zero = true;
    for (int w = -1; w >= -10; --w) {
      try {
        compute_homology(forms, w, opt);
      } catch (const std::logic_error& e) {
        c.fail(name + " w=" + std::to_string(w) + ": " + e.what());
      }
    }
    const auto j = check_super_jacobi(forms);
    c.expect(j.ok, name + ": " + j.failure);
    const auto a = check_graded_antisymmetry(forms);
    c.expect(a.ok, name + ": " + a.failure);
    const ExtendedAlgebra ext(spec);
    c.expect(check_super_jacobi(ext).ok, name + " extended Jacobi");
    c.expect(check_graded_antisymmetry(ext).ok, name + " extended antisymmetry");
    for (int w = -1; w >= -8; --w)
      for (int m = 1; m <= -w; ++m) {
        const auto src = enumerate_chain_basis(forms, m, w), dst = enumerate_chain_basis(forms, m - 1, w);
        c.expect(boundary_matrix(forms, src, dst) == boundary_matrix_left_action(forms, src, dst),
                 name + " w=" + std::to_string(w) + " m=" + std::to_string(m) + " boundary routes differ");
      }
  }
  return c;
}

// 6. sl2r against so3, and rescaled constants.
Check criterion6() {
  Check c;
  const auto so3 = catalog("so3"), sl2r = catalog("sl2r");
  for (int w = -1; w >= -10; --w)
    c.expect(betti_row(so3, w).betti_numbers() == betti_row(sl2r, w).betti_numbers(),
             "sl2r w=" + std::to_string(w));
  const std::vector<Rational> lambdas = {Rational(2), Rational(-3), Rational(1, 5)};
  for (const auto& name : catalog_names()) {
    const auto spec = catalog(name);
    for (int w = -1; w >= -10; --w) {
      const auto base = betti_row(spec, w).betti_numbers();
      for (const auto& l : lambdas)
        c.expect(betti_row(spec.scaled(l), w).betti_numbers() == base,
                 name + " scaled by " + to_string(l) + " w=" + std::to_string(w));
    }
  }
  return c;
}

// 7. extended complex.
Check criterion7() {
  Check c;
  ExtendedOptions plain;
  plain.allow_vectors = false;
  for (const auto& name : catalog_names()) {
    const auto spec = catalog(name);
    for (int w = -1; w >= -8; --w) {
      const std::string at = name + " w=" + std::to_string(w);
      const auto rep = extended_betti(spec, w);
      c.expect(rep.euler == 0, at + " euler " + std::to_string(rep.euler));
      c.expect(extended_euler_formula(spec.dim(), w) == 0, at + " euler formula");
      const auto base = betti_row(spec, w);
      c.expect(extended_betti(spec, w, plain).betti_numbers() == base.betti_numbers(), at + " forms-only restriction");
      // vector-free part of each chain space is the plain chain space
      for (const auto& r : rep.rows) {
        const auto* p = base.row(r.m);
        const std::size_t plain_dim = p ? p->dim : 0;
        c.expect((r.k_split.empty() ? 0 : r.k_split[0]) == plain_dim, at + " k=0 dims m=" + std::to_string(r.m));
      }
    }
  }
  return c;
}

// 8. polynomial forms on R^n at small weights.
Check criterion8() {
  Check c;
  auto koszul = [](int x, int y) { return (x % 2 && y % 2) ? -1 : 1; };
  auto grade_of = [](const PolyElement& e) {
    if (std::holds_alternative<PolyVector>(e)) return 0;
    const auto& f = std::get<PolyForm>(e);
    return f.is_zero() ? 0 : -1 - mask_size(f.terms().begin()->first.second);
  };
  for (int n = 1; n <= 2; ++n) {
    const PolyAlgebra alg(n, 2, true);
    std::vector<PolyElement> gens;
    for (GenId g = 0; g < alg.size(); ++g) gens.push_back(alg.element(g));
    for (const auto& e : gens) {
      if (const auto* f = std::get_if<PolyForm>(&e)) c.expect(poly_d(poly_d(*f)).is_zero(), "d^2 on " + format_poly(e));
    }
    for (const auto& a : gens)
      for (const auto& b : gens) {
        const auto wa = *double_weight(a), wb = *double_weight(b);
        if (wa.first + wb.first < -4 || wa.second + wb.second > 2) continue;
        const auto v = poly_bracket(a, b);
        const bool zero = std::visit([](const auto& x) { return x.is_zero(); }, v);
        const std::string at = "[" + format_poly(a) + ", " + format_poly(b) + "]";
        if (!zero) {
          const auto wc = double_weight(v);
          c.expect(wc && wc->first == wa.first + wb.first && wc->second == wa.second + wb.second, at + " weight");
        }
        const auto* x = std::get_if<PolyVector>(&a);
        const auto* f = std::get_if<PolyForm>(&b);
        if (x && f) c.expect(lie_derivative(*x, *f) == lie_derivative_direct(*x, *f), at + " Cartan");
        // graded antisymmetry of the generator bracket
        const auto u = poly_bracket(b, a);
        const int s = koszul(grade_of(a), grade_of(b));
        bool anti = false;
        if (auto pv = std::get_if<PolyVector>(&v)) {
          PolyVector t = std::get<PolyVector>(u);
          PolyVector sum = *pv;
          sum += t *= s;
          anti = sum.is_zero();
        } else if (std::holds_alternative<PolyForm>(u)) {
          anti = (std::get<PolyForm>(v) + s * std::get<PolyForm>(u)).is_zero();
        } else {
          anti = zero && std::get<PolyVector>(u).is_zero();
        }
        c.expect(anti, at + " antisymmetry");
      }
  }
  // chain level square zero at n = 1
  for (int w = -1; w >= -4; --w)
    for (int h = -1; h <= 2; ++h) {
      const PolyAlgebra alg(1, poly_secondary_bound(1, w, h, true), true);
      ComplexOptions opt;
      opt.enumeration.secondary = h;
      opt.max_degree = poly_degree_bound(1, w, h, true);
      opt.check_square_zero = true;
      try {
        compute_homology(alg, w, opt);
      } catch (const std::exception& e) {
        c.fail("n=1 w=" + std::to_string(w) + " h=" + std::to_string(h) + ": " + e.what());
      }
    }
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Check()>>> criteria = {
      {"dim-2 Betti rows", criterion1},
      {"n=3 chain dimensions w=-1..-6", criterion2},
      {"kernel and Betti tables at w=-3,-5,-10", criterion3},
      {"dimension formulas for -w <= 15", criterion4},
      {"square zero, super Jacobi, boundary routes", criterion5},
      {"sl2r equals so3, rescaling invariance", criterion6},
      {"extended Euler characteristic and restriction", criterion7},
      {"polynomial forms properties, n <= 2, |w| <= 4, h <= 2", criterion8},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Check c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s criterion %zu: %s (%.2f s)\n", c.ok ? "PASS" : "FAIL", i + 1, criteria[i].first, seconds_since(t0));
    for (const auto& n : c.notes) std::printf("    %s\n", n.c_str());
    if (!c.ok) ++failed;
  }
  std::fflush(stdout);
  return failed ? 1 : 0;
}

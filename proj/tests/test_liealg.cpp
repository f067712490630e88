#include <doctest.h>

#include <sstream>

#include "superhom/liealg.hpp"

using namespace superhom;

TEST_SUITE("liealg") {
  TEST_CASE("antisymmetric lookup") {
    for (const auto& name : catalog_names()) {
      const auto s = catalog(name);
      CAPTURE(name);
      for (int i = 0; i < s.dim(); ++i)
        for (int j = 0; j < s.dim(); ++j)
          for (int k = 0; k < s.dim(); ++k) {
            CHECK(s.constant(i, j, k) == -s.constant(j, i, k));
            if (i == j) CHECK(s.constant(i, j, k) == 0);
          }
    }
    LieAlgebraSpec s(4, "t");
    s.set_constant(3, 1, 0, 5);
    CHECK(s.constant(1, 3, 0) == -5);
    CHECK(s.constants().size() == 1);
    CHECK_THROWS_AS(s.constant(0, 4, 0), std::out_of_range);
    CHECK_THROWS_AS(s.set_constant(2, 2, 0, 1), std::invalid_argument);
  }

  TEST_CASE("every catalog entry satisfies Jacobi") {
    for (const auto& name : catalog_names()) {
      CAPTURE(name);
      CHECK(validate(catalog(name)).ok);
    }
    for (int n = 1; n <= 5; ++n) CHECK(validate(catalog_abelian(n)).ok);
  }

  TEST_CASE("hand-expanded Jacobi violation") {
    // [x1,x2] = x1, [x1,x3] = x2: [[x1,x2],x3] + [[x2,x3],x1] + [[x3,x1],x2]
    // = [x1,x3] + 0 + [-x2,x2] = x2, so the first failure is l = 2 with residual 1.
    LieAlgebraSpec s(3, "bad");
    s.set_constant(0, 1, 0, 1);
    s.set_constant(0, 2, 1, 1);
    const auto r = validate(s);
    REQUIRE_FALSE(r.ok);
    REQUIRE(r.violation);
    CHECK(r.violation->i == 0);
    CHECK(r.violation->j == 1);
    CHECK(r.violation->k == 2);
    CHECK(r.violation->l == 1);
    CHECK(r.violation->residual == 1);
    CHECK(r.summary() == "jacobi fails at (i,j,k)=(1,2,3), l=2, residual 1");
  }

  TEST_CASE("catalog constants") {
    const auto so3 = catalog("so3");
    CHECK(so3.constant(1, 2, 0) == 2);
    CHECK(so3.constant(2, 0, 1) == 2);
    CHECK(so3.constant(0, 1, 2) == 2);
    CHECK(catalog("d3") == so3);

    const auto dim2 = catalog("dim2");
    CHECK(dim2.dim() == 2);
    CHECK(dim2.constant(0, 1, 0) == 2);
    CHECK(dim2.constants().size() == 1);

    const auto d1y = catalog("d1y");
    CHECK(d1y.constant(0, 1, 2) == 2);
    CHECK(d1y.constants().size() == 1);

    const auto d2 = catalog("d2(3/2)");
    CHECK(d2.constant(1, 2, 1) == 3);
    CHECK(d2.constant(2, 0, 0) == -2);
    CHECK(catalog("d2y") == catalog_d2(-1));
    CHECK(catalog("d2n") == catalog_d2(1));

    CHECK(catalog("abelian(3)").is_abelian());
    CHECK(catalog("abelian(3)").dim() == 3);
  }

  TEST_CASE("catalog errors") {
    CHECK_THROWS_AS(catalog("su2"), std::invalid_argument);
    CHECK_THROWS_AS(catalog("d2(0)"), std::invalid_argument);
    CHECK_THROWS_AS(catalog("d2(x)"), std::invalid_argument);
    CHECK_THROWS_AS(catalog("abelian(0)"), std::invalid_argument);
    CHECK_THROWS_AS(catalog_d2(0), std::invalid_argument);
  }

  TEST_CASE("rescaling multiplies every constant") {
    const auto s = catalog("so3").scaled(Rational(-1, 2));
    CHECK(s.constant(1, 2, 0) == -1);
    CHECK(validate(s).ok);
    CHECK_THROWS_AS(catalog("so3").scaled(0), std::invalid_argument);
  }

  TEST_CASE("structure-constant file round trip") {
    for (const auto& name : catalog_names()) {
      const auto s = catalog(name);
      std::istringstream in(format_structure_constants(s));
      const auto back = parse_structure_constants(in);
      CAPTURE(name);
      CHECK(back == s);
      CHECK(back.name() == s.name());
    }
  }

  TEST_CASE("structure-constant file parsing") {
    std::istringstream in("# heisenberg\nname heis\n1 2 3 1/2   # c^3_12\n");
    const auto s = parse_structure_constants(in);
    CHECK(s.name() == "heis");
    CHECK(s.dim() == 3);
    CHECK(s.constant(0, 1, 2) == Rational(1, 2));

    std::istringstream with_dim("dim 4\n1 2 1 1\n");
    CHECK(parse_structure_constants(with_dim).dim() == 4);

    auto fails_at = [](const std::string& text, const std::string& where) {
      std::istringstream is(text);
      try {
        parse_structure_constants(is);
      } catch (const std::invalid_argument& e) {
        return std::string(e.what()).rfind(where, 0) == 0;
      }
      return false;
    };
    CHECK(fails_at("1 2 3\n", "line 1"));
    CHECK(fails_at("# ok\n1 2 3 x\n", "line 2"));
    CHECK(fails_at("1 1 2 1\n", "line 1"));
    CHECK(fails_at("1 2 3 1\n2 1 3 1\n", "line 2"));
    CHECK(fails_at("dim 2\n1 2 3 1\n", "line 2"));
    CHECK(fails_at("0 1 2 1\n", "line 1"));
    CHECK(fails_at("1 2 3 1/0\n", "line 1"));
    CHECK_THROWS_AS(load_structure_constants("/nonexistent/file.txt"), std::runtime_error);
  }
}

#include <doctest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "superhom/extend.hpp"
#include "superhom/report_io.hpp"

using namespace superhom;

namespace {

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_SUITE("report_io") {
  TEST_CASE("format names") {
    CHECK(parse_format("csv") == OutputFormat::csv);
    CHECK(parse_format("json") == OutputFormat::json);
    CHECK(parse_format("text") == OutputFormat::text);
    CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
  }

  TEST_CASE("homology CSV columns") {
    const auto csv = render_homology({betti_row(catalog("so3"), -3)}, OutputFormat::csv);
    const auto l = lines(csv);
    REQUIRE(l.size() == 4);
    CHECK(l[0] == "algebra,w,m,dim,rank,kernel,betti,euler");
    CHECK(l[1].rfind("so3,-3,1,", 0) == 0);
    const auto ext = render_homology({extended_betti(catalog("so3"), -3)}, OutputFormat::csv);
    CHECK(lines(ext)[0].find(",k0") != std::string::npos);
  }

  TEST_CASE("homology JSON mirrors the report") {
    const auto rep = betti_row(catalog("d1y"), -5);
    const auto j = nlohmann::json::parse(render_homology({rep}, OutputFormat::json));
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 1);
    CHECK(j[0]["algebra"] == "d1y");
    CHECK(j[0]["w"] == -5);
    CHECK(j[0]["euler"] == rep.euler);
    CHECK_FALSE(j[0].contains("h"));
    REQUIRE(j[0]["rows"].size() == rep.rows.size());
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
      CHECK(j[0]["rows"][i]["m"] == rep.rows[i].m);
      CHECK(j[0]["rows"][i]["dim"] == rep.rows[i].dim);
      CHECK(j[0]["rows"][i]["rank"] == rep.rows[i].rank);
      CHECK(j[0]["rows"][i]["kernel"] == rep.rows[i].kernel);
      CHECK(j[0]["rows"][i]["betti"] == rep.rows[i].betti);
    }
  }

  TEST_CASE("text output names the block") {
    const auto t = render_homology({betti_row(catalog("so3"), -3)}, OutputFormat::text);
    CHECK(t.find("so3 w=-3") != std::string::npos);
    CHECK(t.find("euler") != std::string::npos);
  }

  TEST_CASE("dims and rank formula tables") {
    ChainDims d{"so3", -3, 1, {3, 3, 1}, {3, 3, 1}};
    const auto l = lines(render_dims({d}, OutputFormat::csv));
    CHECK(l[0] == "algebra,w,m,dim,formula");
    CHECK(l[1] == "so3,-3,1,3,3");
    const auto rf = render_rank_formulas({rank_formula_check(catalog("d1y"), -4)}, OutputFormat::csv);
    CHECK(lines(rf)[0] == "algebra,w,m,formula,computed,match");
    CHECK(nlohmann::json::parse(render_dims({d}, OutputFormat::json)).is_array());
  }

  TEST_CASE("bracket CSV") {
    const auto csv = render_brackets(bracket_table(catalog("so3")), FormNotation::shorthand, OutputFormat::csv);
    const auto l = lines(csv);
    CHECK(l[0] == "a,b,value");
    CHECK(l.size() == 1 + 64);
  }

  TEST_CASE("diff locates changed cells") {
    const std::string a = "algebra,w,m,dim\nso3,-5,1,3\nso3,-5,2,6\n";
    CHECK(diff_csv(a, a).empty());
    const auto d = diff_csv(a, "algebra,w,m,dim\nso3,-5,1,3\nso3,-5,2,7\n");
    REQUIRE(d.size() == 1);
    CHECK(d[0].key == "algebra=so3 w=-5 m=2");
    CHECK(d[0].field == "dim");
    CHECK(d[0].expected == "6");
    CHECK(d[0].got == "7");
    const auto missing = diff_csv(a, "algebra,w,m,dim\nso3,-5,1,3\n");
    REQUIRE(missing.size() == 1);
    CHECK(missing[0].field == "row");
    CHECK(diff_csv(a, "algebra,w,m,rank\nso3,-5,1,3\n").at(0).field == "header");
  }

  TEST_CASE("output does not depend on the job count") {
    for (const std::string name : {"so3", "d2(2)", "d1n"}) {
      std::vector<HomologyReport> serial, parallel;
      for (int w = -3; w >= -9; --w) {
        serial.push_back(betti_row(catalog(name), w, 1));
        parallel.push_back(betti_row(catalog(name), w, 4));
      }
      for (auto fmt : {OutputFormat::csv, OutputFormat::json, OutputFormat::text})
        CHECK(render_homology(serial, fmt) == render_homology(parallel, fmt));
    }
  }
}

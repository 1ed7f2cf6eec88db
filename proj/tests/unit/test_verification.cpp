#include "affinefloer/render_svg.hpp"
#include "affinefloer/verification.hpp"

#include <doctest.h>

#include <regex>

using namespace affinefloer;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("suites pass at small bounds") {
  VerifyBounds b;
  b.max_degree = 3;
  b.max_total_degree = 6;
  b.max_k = 5;
  b.max = 3;
  b.max_r = 4;
  b.wrapped_degree = 2;
  for (const auto& name : suite_names()) {
    CAPTURE(name);
    const auto result = run_suite(name, b);
    CHECK(result.passed());
    for (const auto& c : result.checks) {
      CAPTURE(c.name);
      CHECK(c.cases > 0);
      CHECK(c.failures == 0);
    }
  }
}

TEST_CASE("suite arguments") {
  VerifyBounds b;
  CHECK_THROWS_AS(run_suite("everything", b), std::invalid_argument);
  b.max_degree = 40;
  CHECK_THROWS_AS(run_suite("ring", b), std::invalid_argument);
  b = {};
  b.tol = 0;
  CHECK_THROWS_AS(run_suite("numeric", b), std::invalid_argument);
}

TEST_CASE("report json") {
  const auto check = check_hilbert(5);
  const auto j = to_json(check);
  CHECK(j["passed"] == true);
  CHECK(j["cases"] == 6);
  SuiteResult empty{"none", {}};
  CHECK_FALSE(empty.passed());
  CHECK(to_json(SuiteResult{"x", {check}})["passed"] == true);
}

TEST_CASE("svg rendering") {
  RenderOptions base;
  const auto plain = render_svg(cp2_model(), base);
  CHECK(plain.rfind("<?xml", 0) == 0);
  CHECK(plain.find("</svg>") != std::string::npos);
  CHECK(count(plain, "class=\"point\"") == 0);
  CHECK(count(plain, "class=\"singularity\"") == 1);
  CHECK(count(plain, "class=\"cut\"") == 1);

  RenderOptions points;
  points.points_d = 4;
  CHECK(count(render_svg(cp2_model(), points), "class=\"point\"") == 15);
  CHECK(count(render_svg(dp6_model(), points), "class=\"singularity\"") == 2);

  RenderOptions tri;
  tri.triangle = build_triangle({-2, 0, 2}, {2, 0, 2}, 1);
  REQUIRE(tri.triangle);
  const auto svg = render_svg(cp2_model(), tri);
  CHECK(svg.find("bend (0, -1/4)") != std::string::npos);
  CHECK(count(svg, "class=\"leg\"") >= 2);
  CHECK(count(svg, "class=\"disk\"") == tri.triangle->disks.size());
  CHECK(svg.find("multiplicity 2") != std::string::npos);
  // every numeric attribute is finite
  CHECK_FALSE(std::regex_search(svg, std::regex("nan|inf")));
}

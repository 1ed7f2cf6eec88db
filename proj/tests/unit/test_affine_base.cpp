#include "affinefloer/affine_base.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

using namespace affinefloer;

namespace {

std::size_t count_axiom(const std::vector<Violation>& vs, Axiom axiom) {
  return std::count_if(vs.begin(), vs.end(), [&](const Violation& v) { return v.axiom == axiom; });
}

}  // namespace

TEST_CASE("cp2 boundary slopes") {
  const auto m = cp2_model();
  CHECK(m.top.slopes() == std::vector<Rational>{0});
  CHECK(m.bottom.slopes() == std::vector<Rational>{Rational(-1, 2), Rational(1, 2)});
  CHECK(m.bottom.slope_jump_at(0) == 1);
  CHECK(validate(m).empty());
}

TEST_CASE("validate flags a doubled slope jump") {
  auto m = cp2_model();
  m.bottom.vertices = {{-1, 0}, {0, -1}, {1, 0}};
  const auto vs = validate(m);
  REQUIRE(vs.size() == 1);
  CHECK(vs[0].axiom == Axiom::MonodromyConsistency);
}

TEST_CASE("validate flags an interior corner") {
  auto m = cp2_model();
  m.top.vertices = {{-1, 0}, {Rational(1, 2), 0}, {1, Rational(1, 4)}};
  m.corner_right = false;
  const auto vs = validate(m);
  CHECK(count_axiom(vs, Axiom::CornersAtExtremes) == 1);
  CHECK(vs.size() == 1);
}

TEST_CASE("validate catches misplaced singularities and bad shapes") {
  auto m = cp2_model();
  m.singularities[0].xi_pos = Rational(-1, 2);  // on the bottom boundary
  CHECK(count_axiom(validate(m), Axiom::SingularityPlacement) == 1);

  m = cp2_model();
  m.top.vertices = {{1, 0}, {-1, 0}};
  CHECK(count_axiom(validate(m), Axiom::PolylineShape) >= 1);

  m = cp2_model();
  m.corner_left = false;
  CHECK(count_axiom(validate(m), Axiom::CornerFlags) == 1);

  m = cp2_model();
  m.singularities[0].eta_pos = Rational(1, 3);
  m.bottom.vertices = {{-1, 0}, {Rational(1, 3), Rational(-2, 3)}, {1, Rational(-1, 3)}};
  CHECK(count_axiom(validate(m), Axiom::IntegralAffine) == 1);
}

TEST_CASE("fractional points of cp2") {
  const auto m = cp2_model();
  const auto one = fractional_points(m, 1);
  CHECK(one == std::vector<FractionalPoint>{{-1, 0, 1}, {0, 0, 1}, {1, 0, 1}});
  CHECK(fractional_points(m, 4).size() == 15);
  CHECK(fractional_points(m, 2).size() == 6);
  CHECK(fractional_points(m, 0) == std::vector<FractionalPoint>{{0, 0, 0}});
  CHECK_THROWS_AS(fractional_points(m, -1), std::invalid_argument);
  CHECK(count_points(m, 0) == 1);
  for (const auto& q : fractional_points(m, 7)) {
    const auto c = coordinates(m, q);
    CHECK(c.eta == Rational(q.a, 7));
    CHECK(c.xi == Rational(-q.i, 7));
  }
}

TEST_CASE("hilbert polynomial and scan oracle") {
  const auto m = cp2_model();
  for (std::int64_t d = 0; d <= 50; ++d) {
    CHECK(fractional_points(m, d).size() == static_cast<std::size_t>((d + 2) * (d + 1) / 2));
  }
  for (std::int64_t d = 0; d <= 20; ++d) CHECK(count_points(m, d) == fractional_points(m, d).size());
}

TEST_CASE("enumeration is sorted, unique and inside B") {
  for (const auto& m : {cp2_model(), dp6_model(), dp6_model(2, 1, 3, 2)}) {
    REQUIRE(validate(m).empty());
    for (std::int64_t d = 1; d <= 20; ++d) {
      const auto pts = fractional_points(m, d);
      CHECK(std::is_sorted(pts.begin(), pts.end()));
      CHECK(std::set<FractionalPoint>(pts.begin(), pts.end()).size() == pts.size());
      CHECK(count_points(m, d) == pts.size());
      for (const auto& q : pts) {
        CHECK(is_admissible(m, q));
        CHECK(m.contains(coordinates(m, q)));
      }
    }
  }
}

TEST_CASE("dp6 geometry") {
  const auto m = dp6_model();
  CHECK(m.singularities.size() == 2);
  CHECK(m.bottom.slopes() == std::vector<Rational>{-1, 0, 1});
  CHECK_FALSE(m.corner_left);
  CHECK_FALSE(m.corner_right);
}

TEST_CASE("monodromy shear") {
  const Singularity s{0, Rational(-1, 4), 1};
  CHECK(monodromy_shear(s, 1) == IntMatrix2{{{{1, 0}, {1, 1}}}});
  CHECK(monodromy_shear(s, 0) == IntMatrix2::identity());
  CHECK(monodromy_shear(s, -1) * monodromy_shear(s, 1) == IntMatrix2::identity());
  const Singularity s2{0, Rational(-1, 4), 2};
  for (int j = -5; j <= 5; ++j) {
    for (int k = -5; k <= 5; ++k) {
      CHECK(monodromy_shear(s, j) * monodromy_shear(s, k) == monodromy_shear(s, j + k));
      CHECK(monodromy_shear(s2, j) * monodromy_shear(s2, k) == monodromy_shear(s2, j + k));
    }
  }
}

TEST_CASE("singularity height does not affect the points") {
  const auto reference = fractional_points(cp2_model(), 9);
  for (int num = 1; num < 10; ++num) {
    const auto m = cp2_model(Rational(-num, 20));
    REQUIRE(validate(m).empty());
    CHECK(fractional_points(m, 9) == reference);
  }
  CHECK_FALSE(validate(cp2_model(Rational(1, 10))).empty());
}

TEST_CASE("json round trip") {
  for (const auto& m : {cp2_model(), dp6_model(1, 2, 1, 2)}) {
    const auto back = manifold_from_json(to_json(m));
    CHECK(to_json(back) == to_json(m));
    CHECK(fractional_points(back, 5) == fractional_points(m, 5));
  }
  CHECK_THROWS_AS(manifold_from_json(nlohmann::json::parse(R"({"eta_min":"0"})")),
                  std::invalid_argument);
  auto j = to_json(cp2_model());
  j["top"][0][1] = "1/0";
  CHECK_THROWS_AS(manifold_from_json(j), std::invalid_argument);
}

TEST_CASE("dp6 right facet may collapse to a corner") {
  const auto corner = dp6_model(2, 1, 3, 1);
  CHECK(corner.corner_right);
  CHECK(validate(corner).empty());
  CHECK(!dp6_model(1, 2, 1, 2).corner_right);
  CHECK(validate(dp6_model(1, 2, 1, 2)).empty());
  CHECK_THROWS_AS(dp6_model(3, 1, 5, 1), std::invalid_argument);
}

#include "affinefloer/tropical_counts.hpp"

#include <doctest.h>

#include <cstdlib>
#include <stdexcept>

using namespace affinefloer;

TEST_CASE("the multiplicity two triangle") {
  const FractionalPoint x2{-2, 0, 2};
  const FractionalPoint z2{2, 0, 2};
  const auto t = build_triangle(x2, z2, 1);
  REQUIRE(t.has_value());
  CHECK(t->k == 2);
  CHECK(t->s == 1);
  CHECK(t->multiplicity == 2);
  REQUIRE(t->bend.has_value());
  CHECK(*t->bend == RationalPoint{0, Rational(-1, 4)});
  CHECK(t->root_point == RationalPoint{0, Rational(-1, 4)});
  CHECK(t->u2.pieces.back().tangent_end == RationalVector{-2, Rational(-1, 2)});
  CHECK(t->u1.pieces.back().tangent_end == RationalVector{2, Rational(1, 2)});
  CHECK(check_balancing(*t));
  CHECK(tropical_structure_constant(x2, z2, 1) == 2);
}

TEST_CASE("straight and empty cases") {
  const auto t = build_triangle({1, 0, 1}, {1, 0, 1}, 0);
  REQUIRE(t.has_value());
  CHECK_FALSE(t->bend.has_value());
  CHECK(t->multiplicity == 1);
  CHECK(t->disks.empty());
  CHECK(check_balancing(*t));
  CHECK_FALSE(build_triangle({1, 0, 1}, {1, 0, 1}, 1).has_value());
  CHECK_FALSE(build_triangle({-2, 0, 2}, {2, 0, 2}, 5).has_value());
  CHECK(tropical_structure_constant({0, 0, 1}, {0, 0, 1}, 0) == 1);
  CHECK_THROWS_AS(build_triangle({3, 0, 1}, {0, 0, 1}, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_triangle({0, 0, 1}, {0, 0, 1}, 0, Rational(1, 5)), std::invalid_argument);
}

TEST_CASE("perturbed disk count breaks balancing") {
  auto t = build_triangle({-2, 0, 2}, {2, 0, 2}, 1);
  REQUIRE(t.has_value());
  REQUIRE(t->disks.size() == 1);
  t->disks[0].count += 1;
  CHECK_FALSE(check_balancing(*t));
  auto u = build_triangle({-2, 0, 2}, {2, 0, 2}, 1);
  u->u2.pieces.back().tangent_end.xi += 1;
  CHECK_FALSE(check_balancing(*u));
}

TEST_CASE("bend point agrees with the closed form") {
  // a <= 0 <= b, a + b >= 0: x = (0, (-aj + bi + bs) / (ma - nb))
  for (std::int64_t n = 1; n <= 5; ++n) {
    for (std::int64_t m = 1; m <= 5; ++m) {
      for (const auto& p : cp2_index_range(n)) {
        for (const auto& q : cp2_index_range(m)) {
          if (!(p.a < 0 && q.a > 0 && p.a + q.a >= 0)) continue;
          for (std::int64_t s = 0; s <= -p.a; ++s) {
            const Rational closed = ratio(-p.a * q.i + q.a * p.i + q.a * s, m * p.a - n * q.a);
            CHECK(bend_point(p, q, p.i + q.i + s) == RationalPoint{0, closed});
          }
        }
      }
    }
  }
}

TEST_CASE("tropical counts equal the triangle product") {
  const FloerAlgebra algebra(cp2_model());
  std::size_t built = 0;
  for (std::int64_t n = 1; n <= 4; ++n) {
    for (std::int64_t m = 1; m <= 4; ++m) {
      for (const auto& p : cp2_index_range(n)) {
        for (const auto& q : cp2_index_range(m)) {
          const auto product = algebra.mu2({n, n + m, q}, {0, n, p});
          for (std::int64_t h = 0; 2 * h <= n + m; ++h) {
            CHECK(tropical_structure_constant(p, q, h) == product.coefficient(p.a + q.a, h));
            for (const auto& xi : {Rational(-1, 4), Rational(-1, 100), Rational(-49, 100)}) {
              if (const auto t = build_triangle(p, q, h, xi)) {
                CHECK(check_balancing(*t));
                CHECK(t->multiplicity == product.coefficient(p.a + q.a, h));
                ++built;
              }
            }
          }
        }
      }
    }
  }
  CHECK(built > 0);
}

TEST_CASE("placement of the singularity") {
  CHECK(singularity_position_invariance({-2, 0, 2}, {2, 0, 2}, 1));
  const auto below = build_triangle_with({-5, 0, 5}, {5, 0, 5}, 2, Placement::Below);
  const auto above = build_triangle_with({-5, 0, 5}, {5, 0, 5}, 2, Placement::Above);
  REQUIRE(below);
  REQUIRE(above);
  CHECK(below->disks.at(0).count == 2);
  CHECK(above->disks.at(0).count == 3);
  CHECK(above->through_cut);
  CHECK(below->multiplicity == 10);
  CHECK(above->multiplicity == 10);
  for (std::int64_t k = 0; k <= 10; ++k) {
    for (std::int64_t extra = 0; extra <= 2; ++extra) {
      const FractionalPoint p{-k, 0, k + extra + (k == 0)};
      const FractionalPoint q{k + extra, 0, k + extra + 1};
      for (std::int64_t s = -1; s <= k + 1; ++s) CHECK(singularity_position_invariance(p, q, s));
      CHECK(singularity_position_invariance(q, p, 0));
    }
  }
}

TEST_CASE("partition identity") {
  CHECK(classP_partition_constant({2}, 1) == 2);
  CHECK(classP_partition_constant({1, 1}, 1) == 2);
  for (std::int64_t s = 0; s <= 6; ++s) CHECK(classP_partition_constant({3, 2, 1}, s) == binomial(6, s));
  CHECK(classP_partition_constant({}, 0) == 1);
  CHECK(classP_partition_constant({}, 1) == 0);
  CHECK_THROWS_AS(classP_partition_constant({1}, -1), std::invalid_argument);
}

TEST_CASE("partition identity by direct enumeration") {
  // compositions of total <= 12 into parts k_i >= 0 with up to 4 parts
  std::vector<std::vector<std::int64_t>> lists{{}};
  for (int depth = 0; depth < 4; ++depth) {
    auto grown = lists;
    for (const auto& l : lists) {
      std::int64_t used = 0;
      for (auto v : l) used += v;
      for (std::int64_t k = 0; used + k <= 12; ++k) {
        auto next = l;
        next.push_back(k);
        if (next.size() == static_cast<std::size_t>(depth + 1)) grown.push_back(next);
      }
    }
    lists = grown;
  }
  for (const auto& l : lists) {
    std::int64_t total = 0;
    for (auto v : l) total += v;
    for (std::int64_t s = 0; s <= total + 1; ++s) {
      // brute force: iterate all (s_i) with 0 <= s_i <= k_i
      Integer brute = 0;
      std::vector<std::int64_t> pick(l.size(), 0);
      while (true) {
        std::int64_t sum = 0;
        Integer prod = 1;
        for (std::size_t t = 0; t < l.size(); ++t) {
          sum += pick[t];
          prod *= binomial(l[t], pick[t]);
        }
        if (sum == s) brute += prod;
        std::size_t pos = 0;
        while (pos < l.size() && pick[pos] == l[pos]) pick[pos++] = 0;
        if (pos == l.size()) break;
        ++pick[pos];
      }
      CHECK(classP_partition_constant(l, s) == brute);
      CHECK(brute == binomial(total, s));
    }
  }
}

TEST_CASE("partition counts reproduce products on two singularities") {
  const auto m = dp6_model();
  const FloerAlgebra algebra(m);
  for (std::int64_t n = 1; n <= 3; ++n) {
    for (std::int64_t mm = 1; mm <= 3; ++mm) {
      for (const auto& p : fractional_points(m, n)) {
        for (const auto& q : fractional_points(m, mm)) {
          const auto product = algebra.mu2({n, n + mm, q}, {0, n, p});
          for (const auto& [key, c] : product.terms()) {
            CHECK(classP_structure_constant(m, p, q, key.second) == c);
          }
        }
      }
    }
  }
}

TEST_CASE("triangle json") {
  const auto t = build_triangle({-2, 0, 2}, {2, 0, 2}, 1);
  const auto j = to_json(*t);
  CHECK(j["multiplicity"] == 2);
  CHECK(j["bend"][1] == "-1/4");
  CHECK(j["legs"].size() == 2);
  CHECK(nlohmann::json::parse(j.dump()) == j);
}

#include "affinefloer/wrapped_floer.hpp"

#include "affinefloer/floer_algebra.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace affinefloer;

namespace {

constexpr ComplementCase kCases[] = {ComplementCase::L, ComplementCase::C, ComplementCase::D};

// Recovers the center of F(P) = c + t (P - c) from a single image point:
// c = (F(P) - t P) / (1 - t).
std::pair<Rational, Rational> fixed_point(const ExtendedPoint& q, const ExtendedPoint& image) {
  const Rational t = ratio(q.d, image.d);
  const Rational pe = ratio(q.a, q.d), px = ratio(-q.i, q.d);
  const Rational fe = ratio(image.a, image.d), fx = ratio(-image.i, image.d);
  return {(fe - t * pe) / (1 - t), (fx - t * px) / (1 - t)};
}

}  // namespace

TEST_CASE("windowed bases") {
  CHECK(wrapped_basis(ComplementCase::D, 1, {1, 2}).size() == 15);
  for (const auto& q : wrapped_basis(ComplementCase::L, 1, {3, 3})) CHECK(q.i >= 0);
  std::vector<std::int64_t> depths;
  for (const auto& q : wrapped_basis(ComplementCase::C, 1, {0, 5})) depths.push_back(q.i);
  CHECK(depths == std::vector<std::int64_t>{-5, -4, -3, -2, -1, 0});
  CHECK(is_valid(ComplementCase::C, {-3, -2, 0}));  // floor(-3/2) = -2
  CHECK(!is_valid(ComplementCase::C, {-3, -1, 0}));
  CHECK_THROWS_AS(wrapped_basis(ComplementCase::D, 1, {-1, 0}), std::invalid_argument);
}

TEST_CASE("wrapped product examples") {
  const auto d = wrapped_product(ComplementCase::D, {1, 1, 1}, {-1, 0, 1});
  CHECK(d.terms.size() == 2);
  CHECK(d.coefficient(0, 1) == 1);
  CHECK(d.coefficient(0, 2) == 1);
  const auto l = wrapped_product(ComplementCase::L, {0, 0, 1}, {0, 2, 1});
  CHECK(l.terms.size() == 1);
  CHECK(l.coefficient(0, 2) == 1);
  for (const auto c : kCases) {
    for (const auto& q : wrapped_basis(c, 2, {3, 3})) {
      const auto prod = wrapped_product(c, q, e_element(c, 0));
      CHECK(prod.terms.size() == 1);
      CHECK(prod.coefficient(q.a, q.i) == 1);
    }
  }
  CHECK_THROWS_AS(wrapped_product(ComplementCase::L, {0, -1, 1}, {0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(wrapped_product(ComplementCase::D, {2, 2, 1}, {2, 2, 1}, Window{3, 5}), WindowTooSmall);
  CHECK_NOTHROW(wrapped_product(ComplementCase::D, {2, 2, 1}, {2, 2, 1}, Window{4, 5}));
}

TEST_CASE("rational functions") {
  CHECK(rational_function(ComplementCase::L, {0, 1, 0}) == LaurentElement{0, -2, 1, 0});
  CHECK(rational_function(ComplementCase::C, {0, -1, 0}) == LaurentElement{0, 2, -1, 0});
  CHECK(rational_function(ComplementCase::D, {0, 0, 0}) == LaurentElement{0, 0, 0, 0});
  CHECK(to_string(rational_function(ComplementCase::L, {0, 1, 0})) == "y^-2 p");
  CHECK(to_string(rational_function(ComplementCase::D, {-2, 0, 1})) == "x^2 y^-1");
  for (const auto c : kCases) {
    for (std::int64_t d = -3; d <= 4; ++d) {
      for (const auto& q : wrapped_basis(c, d, {5, 5})) {
        const auto f = rational_function(c, q);
        CHECK(is_allowed(c, f));
        CHECK(point_of(c, f) == q);
      }
    }
  }
  CHECK_THROWS_AS(point_of(ComplementCase::L, {0, 2, -1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(point_of(ComplementCase::C, {0, -2, 1, 0}), std::invalid_argument);
}

TEST_CASE("e elements") {
  CHECK(to_string(rational_function(ComplementCase::L, e_element(ComplementCase::L, 1))) == "y");
  CHECK(to_string(rational_function(ComplementCase::C, e_element(ComplementCase::C, 2))) == "p");
  CHECK(to_string(rational_function(ComplementCase::D, e_element(ComplementCase::D, 3))) == "y p");
  CHECK_THROWS_AS(e_element(ComplementCase::C, 3), std::invalid_argument);
  CHECK_THROWS_AS(e_element(ComplementCase::D, -3), std::invalid_argument);
  for (const auto c : kCases) {
    const auto step = wrap_step(c);
    for (std::int64_t r = 0; r <= 6; r += step) {
      for (std::int64_t r2 = 0; r2 <= 6; r2 += step) {
        const auto f = rational_function(c, e_element(c, r));
        const auto g = rational_function(c, e_element(c, r2));
        CHECK(rational_function(c, e_element(c, r + r2)) == LaurentElement{0, f.y + g.y, f.p + g.p, r + r2});
        const auto prod = wrapped_product(c, e_element(c, r2), e_element(c, r));
        const auto e = e_element(c, r + r2);
        CHECK(prod.terms.size() == 1);
        CHECK(prod.coefficient(e.a, e.i) == 1);
      }
    }
  }
}

TEST_CASE("wrapped product equals localized multiplication") {
  for (const auto c : kCases) {
    for (std::int64_t n = -2; n <= 4; ++n) {
      for (std::int64_t m = -2; m <= 4; ++m) {
        for (const auto& q1 : wrapped_basis(c, n, {3, 3})) {
          for (const auto& q2 : wrapped_basis(c, m, {3, 3})) {
            CHECK(wrapped_product(c, q2, q1) == localized_product(c, q2, q1));
          }
        }
      }
    }
  }
}

TEST_CASE("compact indices reproduce the triangle product") {
  const FloerAlgebra algebra(cp2_model());
  for (const auto c : kCases) {
    for (std::int64_t n = 1; n <= 4; ++n) {
      for (std::int64_t m = 1; m <= 4; ++m) {
        for (const auto& p : cp2_index_range(n)) {
          for (const auto& q : cp2_index_range(m)) {
            const auto wrapped = wrapped_product(c, {q.a, q.i, m}, {p.a, p.i, n}, Window{n + m, n + m});
            const auto compact = algebra.mu2({n, n + m, q}, {0, n, p});
            CHECK(wrapped.terms == compact.terms());
          }
        }
      }
    }
  }
}

TEST_CASE("continuation maps are dilations") {
  CHECK(dilation_center(ComplementCase::L) == std::pair<Rational, Rational>{0, 0});
  CHECK(dilation_center(ComplementCase::C) == std::pair<Rational, Rational>{0, Rational(-1, 2)});
  CHECK(dilation_center(ComplementCase::D) == std::pair<Rational, Rational>{0, Rational(-1, 3)});
  CHECK(continuation_image(ComplementCase::L, {2, 1, 3}, 1) == ExtendedPoint{2, 1, 4});
  for (const auto c : kCases) {
    const auto step = wrap_step(c);
    for (std::int64_t n = 1; n <= 4; ++n) {
      for (std::int64_t r = step; r <= 6; r += step) {
        const auto map = continuation_map(c, 2, 2 + n, r, {4, 4});
        CHECK(map.size() == wrapped_basis(c, n, {4, 4}).size());
        for (const auto& [q, image] : map) {
          CHECK(image == continuation_image(c, q, r));
          const auto prod = wrapped_product(c, q, e_element(c, r));
          CHECK(prod.coefficient(image.a, image.i) == 1);
          CHECK(embedded_coordinates(image) == dilation_image(c, q, r));
          CHECK(fixed_point(q, image) == dilation_center(c));
        }
      }
    }
  }
  CHECK_THROWS_AS(continuation_map(ComplementCase::L, 2, 2, 1, {1, 1}), std::invalid_argument);
}

TEST_CASE("continuation maps form a directed system") {
  for (const auto c : kCases) {
    const auto step = wrap_step(c);
    for (std::int64_t r = 0; r <= 6; r += step) {
      for (std::int64_t r2 = 0; r2 <= 6; r2 += step) {
        for (std::int64_t n = 1; n <= 3; ++n) {
          for (const auto& q : wrapped_basis(c, n, {3, 3})) {
            CHECK(continuation_image(c, continuation_image(c, q, r), r2) == continuation_image(c, q, r + r2));
          }
        }
      }
    }
  }
}

TEST_CASE("wrapped sum json") {
  const auto sum = wrapped_product(ComplementCase::D, {1, 1, 1}, {-1, 0, 1});
  const auto j = to_json(sum);
  CHECK(j["case"] == "D");
  CHECK(wrapped_sum_from_json(j) == sum);
  CHECK(parse_case("c") == ComplementCase::C);
  CHECK_THROWS_AS(parse_case("Q"), std::invalid_argument);
}

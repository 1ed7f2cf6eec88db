#include "affinefloer/homotopy_words.hpp"

#include "affinefloer/floer_algebra.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace affinefloer;

TEST_CASE("free reduction") {
  const auto ab = concat(word_alpha(1), word_beta(1));
  CHECK(free_reduce(concat(ab, inverse(ab))).empty());
  const auto w = concat(concat(word_alpha(2), word_beta(1)), word_alpha(-1));
  CHECK(free_reduce(w) == w);
  CHECK(free_reduce(concat(word_alpha(3), word_alpha(-1))) == word_alpha(2));
  // cancellation cascades through the middle
  const auto nested = concat(concat(word_beta(2), ab), concat(inverse(ab), word_beta(-2)));
  CHECK(is_trivial(nested));
  CHECK(to_string(w) == "a^2 b a^-1");
  CHECK(to_string(FreeWord{}) == "1");
}

TEST_CASE("triangle words") {
  CHECK(is_trivial(triangle_word(0, 0, 0, 0, {0})));
  CHECK_FALSE(is_trivial(triangle_word(0, 0, 1, 1, {1, -1})));
  CHECK(is_trivial(triangle_word(0, 0, 0, 1, {1, -1})));
  CHECK(output_depth(0, 0, 1, {1, -1}) == 0);
  CHECK_THROWS_AS(triangle_word(0, 0, 0, 2, {1, -1}), std::invalid_argument);
}

TEST_CASE("admissibility rule") {
  CHECK(is_admissible({0}));
  CHECK(is_admissible({1, 0, -1}));
  CHECK(is_admissible({1, -1, 1, -1}));
  CHECK_FALSE(is_admissible({-1, 1}));
  CHECK_FALSE(is_admissible({1, 1, -1}));
  CHECK_FALSE(is_admissible({1, 0}));
  CHECK_FALSE(is_admissible({2, -2}));
}

TEST_CASE("enumeration examples") {
  CHECK(enumerate_admissible(0) == std::vector<DeltaSequence>{{0}});
  CHECK(enumerate_admissible(2) ==
        std::vector<DeltaSequence>{{0, 0, 0}, {0, 1, -1}, {1, -1, 0}, {1, 0, -1}});
  CHECK(enumerate_admissible(5).size() == 32);
  CHECK(brute_force_admissible(2, 2) == enumerate_admissible(2));
  CHECK(brute_force_admissible(0, 3) == std::vector<DeltaSequence>{{0}});
  CHECK(brute_force_admissible(4, 1) == enumerate_admissible(4));
  CHECK_THROWS_AS(enumerate_admissible(-1), std::invalid_argument);
  CHECK_THROWS_AS(brute_force_admissible(2, 0), std::invalid_argument);
}

TEST_CASE("word triviality characterises admissibility up to k = 8") {
  for (std::int64_t k = 0; k <= 8; ++k) {
    const auto listed = enumerate_admissible(k);
    CHECK(listed.size() == (std::size_t{1} << k));
    CHECK(brute_force_admissible(k, 2) == listed);
    for (const auto& delta : listed) {
      CHECK(is_admissible(delta));
      CHECK(is_trivial(triangle_word(3, 1, output_depth(3, 1, k, delta), k, delta)));
    }
  }
}

TEST_CASE("homotopy counts are binomial") {
  CHECK(homotopy_count(2, 0, 0, 1) == 2);
  CHECK(homotopy_count(3, 0, 0, 5) == 0);
  for (std::int64_t k = 0; k <= 8; ++k) {
    CHECK(homotopy_count(k, 2, 1, 3) == 1);
    std::uint64_t total = 0;
    for (std::int64_t h = -2; h <= k + 5; ++h) {
      const auto c = homotopy_count(k, 1, 2, h);
      CHECK(Integer(c) == binomial(k, h - 3));
      total += c;
    }
    CHECK(total == (std::uint64_t{1} << k));
  }
}

TEST_CASE("homotopy counts match the triangle product") {
  const FloerAlgebra algebra(cp2_model());
  for (std::int64_t n = 1; n <= 5; ++n) {
    for (std::int64_t m = 1; m <= 5; ++m) {
      for (const auto& p : cp2_index_range(n)) {
        for (const auto& q : cp2_index_range(m)) {
          const auto out = algebra.mu2({n, n + m, q}, {0, n, p});
          const auto k = k_value_cp2(p.a, q.a);
          for (std::int64_t h = 0; 2 * h <= n + m; ++h) {
            CHECK(Integer(homotopy_count(k, p.i, q.i, h)) == out.coefficient(p.a + q.a, h));
          }
        }
      }
    }
  }
}

#include "affinefloer/coordinate_ring.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace affinefloer;

namespace {

HomogeneousPolynomial mono(std::int64_t x, std::int64_t y, std::int64_t z, Integer c = 1) {
  return HomogeneousPolynomial::monomial({x, y, z}, c);
}

HomogeneousPolynomial random_poly(std::mt19937& rng, std::int64_t d) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  HomogeneousPolynomial p(d);
  for (std::int64_t x = 0; x <= d; ++x) {
    for (std::int64_t z = 0; x + z <= d; ++z) p.add({x, d - x - z, z}, coeff(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("q monomials") {
  CHECK(q_monomial({0, 0, 1}) == mono(0, 1, 0));
  CHECK(q_monomial({0, 1, 2}) == mono(1, 0, 1) + mono(0, 2, 0, -1));
  CHECK(q_monomial({-2, 1, 4}) == mono(3, 0, 1) + mono(2, 2, 0, -1));
  CHECK(q_monomial({3, 0, 3}) == mono(0, 0, 3));
  CHECK_THROWS_AS(q_monomial({0, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(q_monomial({2, 0, 1}), std::invalid_argument);
}

TEST_CASE("multiply") {
  CHECK(multiply(mono(1, 0, 0), mono(0, 0, 1)) == mono(1, 0, 1));
  const auto p = p_polynomial();
  CHECK(multiply(p, p) == mono(2, 0, 2) + mono(1, 2, 1, -2) + mono(0, 4, 0));
  const auto zero = multiply(p, HomogeneousPolynomial(3));
  CHECK(zero.is_zero());
  CHECK(zero.degree() == 5);
  CHECK_THROWS_AS(mono(1, 0, 0) + mono(0, 0, 2), std::invalid_argument);
}

TEST_CASE("multiply is commutative and associative") {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_poly(rng, trial % 4);
    const auto b = random_poly(rng, (trial / 4) % 3 + 1);
    const auto c = random_poly(rng, trial % 3);
    CHECK(multiply(a, b) == multiply(b, a));
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
  }
}

TEST_CASE("expansion examples") {
  const auto xz = expand_in_qbasis(mono(1, 0, 1));
  CHECK(xz == QExpansion{{{0, 0, 2}, 1}, {{0, 1, 2}, 1}});
  const auto xz3 = expand_in_qbasis(mono(3, 0, 3));
  CHECK(xz3 == QExpansion{{{0, 0, 6}, 1}, {{0, 1, 6}, 3}, {{0, 2, 6}, 3}, {{0, 3, 6}, 1}});
  CHECK(expand_in_qbasis(HomogeneousPolynomial(4)).empty());
}

TEST_CASE("(xz)^k expands binomially") {
  for (std::int64_t k = 0; k <= 10; ++k) {
    QExpansion expected;
    for (std::int64_t s = 0; s <= k; ++s) expected[{0, s, 2 * k}] = binomial(k, s);
    CHECK(expand_in_qbasis(mono(k, 0, k)) == expected);
  }
}

TEST_CASE("round trip and dimensions") {
  for (std::int64_t d = 0; d <= 10; ++d) {
    for (const auto& idx : qbasis(d)) CHECK(expand_in_qbasis(q_monomial(idx)) == QExpansion{{idx, 1}});
  }
  for (std::int64_t d = 0; d <= 20; ++d) {
    const auto expected = static_cast<std::size_t>((d + 2) * (d + 1) / 2);
    CHECK(qbasis(d).size() == expected);
    std::size_t monomials = 0;
    for (std::int64_t x = 0; x <= d; ++x) monomials += static_cast<std::size_t>(d - x + 1);
    CHECK(monomials == expected);
  }
}

TEST_CASE("expansion reconstructs random polynomials") {
  std::mt19937 rng(7);
  for (std::int64_t d = 0; d <= 8; ++d) {
    const auto poly = random_poly(rng, d);
    HomogeneousPolynomial rebuilt(d);
    for (const auto& [idx, c] : expand_in_qbasis(poly)) rebuilt += c * q_monomial(idx);
    CHECK(rebuilt == poly);
  }
}

TEST_CASE("ring matches the triangle product") {
  const auto small = verify_iso(2);
  CHECK(small.ok());
  CHECK(small.products_checked == 81);  // (3 + 6)^2
  const auto report = verify_iso(4);
  CHECK(report.ok());
  CHECK_THROWS_AS(verify_iso(0), std::invalid_argument);
}

TEST_CASE("json and printing") {
  const auto p = multiply(p_polynomial(), mono(0, 0, 1, 5));
  CHECK(polynomial_from_json(to_json(p)) == p);
  CHECK(polynomial_from_json(nlohmann::json::array(), 3) == HomogeneousPolynomial(3));
  CHECK(to_string(p_polynomial()) == "xz - y^2");
  CHECK(to_string(HomogeneousPolynomial(2)) == "0");
  CHECK_THROWS_AS(polynomial_from_json(nlohmann::json::parse(R"([{"x":1}])")), std::invalid_argument);
}

#pragma once

// Homogeneous coordinate ring C[x, y, z] of the projective plane with the
// basis Q_{a,i} built from p = xz - y^2:
//
//   Q_{a,i} = x^{-a} p^i y^{d+a-2i}   (a <= 0)
//   Q_{a,i} = z^{a}  p^i y^{d-a-2i}   (a > 0)

#include "affinefloer/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace affinefloer {

struct Monomial {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t z = 0;

  std::int64_t degree() const { return x + y + z; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Element of C[x,y,z]_d with integer coefficients. The zero polynomial keeps
/// its degree so that products and comparisons stay graded.
class HomogeneousPolynomial {
 public:
  explicit HomogeneousPolynomial(std::int64_t degree = 0);
  static HomogeneousPolynomial monomial(const Monomial& m, const Integer& c = 1);

  std::int64_t degree() const { return degree_; }
  const std::map<Monomial, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const Monomial& m) const;

  /// Throws std::invalid_argument for a monomial of the wrong degree or with a
  /// negative exponent.
  void add(const Monomial& m, const Integer& c);

  HomogeneousPolynomial& operator+=(const HomogeneousPolynomial& other);
  friend HomogeneousPolynomial operator+(HomogeneousPolynomial a, const HomogeneousPolynomial& b) {
    return a += b;
  }
  friend HomogeneousPolynomial operator*(const Integer& c, const HomogeneousPolynomial& p);
  friend bool operator==(const HomogeneousPolynomial&, const HomogeneousPolynomial&) = default;

 private:
  std::int64_t degree_;
  std::map<Monomial, Integer> terms_;
};

struct QBasisIndex {
  std::int64_t a = 0;
  std::int64_t i = 0;
  std::int64_t d = 0;

  friend auto operator<=>(const QBasisIndex&, const QBasisIndex&) = default;
};

using QExpansion = std::map<QBasisIndex, Integer>;

bool is_valid(const QBasisIndex& idx);

/// All valid indices of degree d, sorted.
std::vector<QBasisIndex> qbasis(std::int64_t d);

HomogeneousPolynomial multiply(const HomogeneousPolynomial& lhs, const HomogeneousPolynomial& rhs);
HomogeneousPolynomial power(const HomogeneousPolynomial& base, std::int64_t exponent);

/// p = xz - y^2
HomogeneousPolynomial p_polynomial();

/// Throws std::invalid_argument for an invalid index.
HomogeneousPolynomial q_monomial(const QBasisIndex& idx);

/// Exact coordinates of poly in the Q-basis. Solved over the rationals one
/// column grade (x exponent minus z exponent) at a time; throws
/// std::logic_error if a block is singular or a coefficient is not integral.
QExpansion expand_in_qbasis(const HomogeneousPolynomial& poly);

struct IsoMismatch {
  QBasisIndex lhs;
  QBasisIndex rhs;
  std::string detail;
};

struct IsoReport {
  std::int64_t n_max = 0;
  std::uint64_t products_checked = 0;
  std::vector<IsoMismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
};

/// Compares Q_{a,i} Q_{b,j} with mu2(q_{b,j}, q_{a,i}) on the single-singularity
/// model for every pair of degrees n, m <= n_max.
IsoReport verify_iso(std::int64_t n_max);

nlohmann::json to_json(const HomogeneousPolynomial& poly);
/// Degree is read off the terms; an empty list is the zero polynomial of
/// degree `empty_degree`.
HomogeneousPolynomial polynomial_from_json(const nlohmann::json& json, std::int64_t empty_degree = 0);

std::string to_string(const HomogeneousPolynomial& poly);

}  // namespace affinefloer

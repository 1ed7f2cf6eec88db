#pragma once

// Degree-zero Floer cohomology HF(L(d1), L(d2)) with its basis of fractional
// integral points, and the triangle product
//
//   mu2(q_{b,j}, q_{a,i}) = sum_{s=0}^{k} binom(k, s) q_{a+b, i+j+s}
//
// where k counts the critical values covered by the triangle in the base of
// the Lefschetz fibration.

#include "affinefloer/affine_base.hpp"
#include "affinefloer/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <utility>
#include <vector>

#include <json.hpp>

namespace affinefloer {

/// A generator of HF(L(d1), L(d2)); point.d == d2 - d1.
struct BasisVector {
  std::int64_t d1 = 0;
  std::int64_t d2 = 0;
  FractionalPoint point;

  friend auto operator<=>(const BasisVector&, const BasisVector&) = default;
};

BasisVector basis_vector(std::int64_t d1, std::int64_t d2, std::int64_t a, std::int64_t i);

/// Integer combination of basis vectors sharing (d1, d2). Zero coefficients
/// are never stored.
class FormalSum {
 public:
  using Key = std::pair<std::int64_t, std::int64_t>;  // (a, i)

  FormalSum(std::int64_t d1, std::int64_t d2);
  static FormalSum of(const BasisVector& q, const Integer& coefficient = 1);

  std::int64_t d1() const { return d1_; }
  std::int64_t d2() const { return d2_; }
  std::int64_t denominator() const { return d2_ - d1_; }

  void add(std::int64_t a, std::int64_t i, const Integer& coefficient);
  Integer coefficient(std::int64_t a, std::int64_t i) const;
  const std::map<Key, Integer>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  BasisVector basis(const Key& key) const { return {d1_, d2_, {key.first, key.second, denominator()}}; }

  FormalSum& operator+=(const FormalSum& other);
  friend FormalSum operator+(FormalSum lhs, const FormalSum& rhs) { return lhs += rhs; }
  friend FormalSum operator*(const Integer& scalar, const FormalSum& sum);
  friend bool operator==(const FormalSum&, const FormalSum&) = default;

 private:
  std::int64_t d1_;
  std::int64_t d2_;
  std::map<Key, Integer> terms_;
};

struct CriticalCover {
  std::vector<std::int64_t> per_singularity;

  std::int64_t total() const;
};

/// k for the single-singularity model: min(|a|, |b|) when a and b have
/// strictly opposite signs, zero otherwise.
std::int64_t k_value_cp2(std::int64_t a, std::int64_t b);

/// Closed-form index set of the single-singularity model:
/// a in [-n, n], i in [0, floor((n - |a|) / 2)].
std::vector<FractionalPoint> cp2_index_range(std::int64_t n);

/// Lifts the base paths of L(0), L(n), L(n+m) to the universal cover of the
/// base annulus, where L(d) through column a/d is the line height = a - d*eta,
/// and counts the critical values {c} x (Z + 1/2) strictly inside the
/// triangle's cross-section at each singular column c (times multiplicity).
/// q1 = q_{a,i} with q1.d = n, q2 = q_{b,j} with q2.d = m.
CriticalCover critical_cover_classP(const ClassPManifold& manifold, const FractionalPoint& q1,
                                    const FractionalPoint& q2);

class FloerAlgebra {
 public:
  /// Throws std::invalid_argument listing the violated axioms.
  explicit FloerAlgebra(ClassPManifold manifold);

  const ClassPManifold& manifold() const { return manifold_; }

  /// Basis of HF(L(d1), L(d2)); d1 == d2 yields the unit only.
  std::vector<FractionalPoint> index_range(std::int64_t d1, std::int64_t d2) const;
  bool is_admissible(const BasisVector& q) const;

  /// q1 in HF(L(d1), L(d2)), q2 in HF(L(d2), L(d3)); result in HF(L(d1), L(d3)).
  FormalSum mu2(const BasisVector& q2, const BasisVector& q1) const;

  /// x . y = (-1)^{|x|} mu2(y, x); every generator sits in degree 0.
  FormalSum ring_product(const FormalSum& x, const FormalSum& y) const;

  FormalSum unit(std::int64_t d) const;

 private:
  struct DepthCache {
    std::shared_mutex mutex;
    std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> depth;  // (d, a)
  };

  std::int64_t column_depth(std::int64_t a, std::int64_t d) const;

  ClassPManifold manifold_;
  std::shared_ptr<DepthCache> cache_ = std::make_shared<DepthCache>();
};

nlohmann::json to_json(const FormalSum& sum);
FormalSum formal_sum_from_json(const nlohmann::json& json);

/// Integers travel as JSON numbers when they fit in 64 bits, strings otherwise.
nlohmann::json integer_to_json(const Integer& value);
Integer integer_from_json(const nlohmann::json& json);

}  // namespace affinefloer

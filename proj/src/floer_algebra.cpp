#include "affinefloer/floer_algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace affinefloer {

BasisVector basis_vector(std::int64_t d1, std::int64_t d2, std::int64_t a, std::int64_t i) {
  return {d1, d2, {a, i, d2 - d1}};
}

FormalSum::FormalSum(std::int64_t d1, std::int64_t d2) : d1_(d1), d2_(d2) {
  if (d2 < d1) throw std::invalid_argument("HF(L(d1), L(d2)) needs d1 <= d2");
}

FormalSum FormalSum::of(const BasisVector& q, const Integer& coefficient) {
  FormalSum sum(q.d1, q.d2);
  sum.add(q.point.a, q.point.i, coefficient);
  return sum;
}

void FormalSum::add(std::int64_t a, std::int64_t i, const Integer& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace({a, i}, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer FormalSum::coefficient(std::int64_t a, std::int64_t i) const {
  auto it = terms_.find({a, i});
  return it == terms_.end() ? Integer(0) : it->second;
}

FormalSum& FormalSum::operator+=(const FormalSum& other) {
  if (other.d1_ != d1_ || other.d2_ != d2_) {
    throw std::invalid_argument("cannot add sums from different morphism spaces");
  }
  for (const auto& [key, c] : other.terms_) add(key.first, key.second, c);
  return *this;
}

FormalSum operator*(const Integer& scalar, const FormalSum& sum) {
  FormalSum out(sum.d1_, sum.d2_);
  for (const auto& [key, c] : sum.terms_) out.add(key.first, key.second, scalar * c);
  return out;
}

std::int64_t CriticalCover::total() const {
  return std::accumulate(per_singularity.begin(), per_singularity.end(), std::int64_t{0});
}

std::int64_t k_value_cp2(std::int64_t a, std::int64_t b) {
  if ((a < 0 && b > 0) || (a > 0 && b < 0)) return std::min(std::llabs(a), std::llabs(b));
  return 0;
}

std::vector<FractionalPoint> cp2_index_range(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("denominator must be nonnegative");
  if (n == 0) return {FractionalPoint{0, 0, 0}};
  std::vector<FractionalPoint> out;
  for (std::int64_t a = -n; a <= n; ++a) {
    for (std::int64_t i = 0; i <= (n - std::llabs(a)) / 2; ++i) out.push_back({a, i, n});
  }
  return out;
}

namespace {

struct CoverPoint {
  Rational eta;
  Rational height;
};

// Heights at which the boundary of the triangle meets the vertical line eta = c.
std::vector<Rational> cross_section(const std::array<CoverPoint, 3>& tri, const Rational& c) {
  std::vector<Rational> hits;
  for (int k = 0; k < 3; ++k) {
    const auto& u = tri[k];
    const auto& v = tri[(k + 1) % 3];
    const Rational lo = std::min(u.eta, v.eta);
    const Rational hi = std::max(u.eta, v.eta);
    if (c < lo || c > hi) continue;
    if (u.eta == v.eta) {
      hits.push_back(u.height);
      hits.push_back(v.height);
    } else {
      hits.push_back(u.height + (v.height - u.height) * (c - u.eta) / (v.eta - u.eta));
    }
  }
  return hits;
}

// #{t in Z : lo < t + 1/2 < hi}
std::int64_t half_integers_inside(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) return 0;
  const Rational half(1, 2);
  const Integer count = ceil(hi - half) - floor(lo - half) - 1;
  return count > 0 ? to_int64(count) : 0;
}

}  // namespace

namespace {

CriticalCover critical_cover_unchecked(const ClassPManifold& manifold, const FractionalPoint& q1,
                                       const FractionalPoint& q2) {
  CriticalCover cover;
  cover.per_singularity.assign(manifold.singularities.size(), 0);
  if (q1.d == 0 || q2.d == 0) return cover;
  const std::int64_t n = q1.d;
  const std::int64_t m = q2.d;
  const Rational b_eta = ratio(q2.a, m);
  const std::array<CoverPoint, 3> tri{{
      {ratio(q1.a, n), 0},                         // L(0) meets L(n)
      {b_eta, Rational(q1.a) - n * b_eta},         // L(n) meets L(n+m)
      {ratio(q1.a + q2.a, n + m), 0},              // L(n+m) meets L(0)
  }};
  for (std::size_t s = 0; s < manifold.singularities.size(); ++s) {
    const auto& sing = manifold.singularities[s];
    const auto hits = cross_section(tri, sing.eta_pos);
    if (hits.empty()) continue;
    const auto [lo, hi] = std::minmax_element(hits.begin(), hits.end());
    cover.per_singularity[s] = sing.multiplicity * half_integers_inside(*lo, *hi);
  }
  return cover;
}

}  // namespace

CriticalCover critical_cover_classP(const ClassPManifold& manifold, const FractionalPoint& q1,
                                    const FractionalPoint& q2) {
  if (!is_admissible(manifold, q1) || !is_admissible(manifold, q2)) {
    throw std::invalid_argument("inadmissible index for critical cover");
  }
  return critical_cover_unchecked(manifold, q1, q2);
}

namespace {

std::string describe(const std::vector<Violation>& violations) {
  std::string text;
  for (const auto& v : violations) {
    if (!text.empty()) text += "; ";
    text += to_string(v.axiom) + " at " + v.location + ": " + v.message;
  }
  return text;
}

bool is_unit(const BasisVector& q) { return q.d1 == q.d2; }

}  // namespace

FloerAlgebra::FloerAlgebra(ClassPManifold manifold) : manifold_(std::move(manifold)) {
  const auto violations = validate(manifold_);
  if (!violations.empty()) throw std::invalid_argument("invalid instance: " + describe(violations));
}

std::vector<FractionalPoint> FloerAlgebra::index_range(std::int64_t d1, std::int64_t d2) const {
  if (d2 < d1) throw std::invalid_argument("index range needs d1 <= d2");
  return fractional_points(manifold_, d2 - d1);
}

std::int64_t FloerAlgebra::column_depth(std::int64_t a, std::int64_t d) const {
  const std::pair key{d, a};
  {
    std::shared_lock lock(cache_->mutex);
    if (auto it = cache_->depth.find(key); it != cache_->depth.end()) return it->second;
  }
  const auto depth = max_depth(manifold_, a, d);
  std::unique_lock lock(cache_->mutex);
  cache_->depth.emplace(key, depth);
  return depth;
}

bool FloerAlgebra::is_admissible(const BasisVector& q) const {
  if (q.d2 < q.d1 || q.point.d != q.d2 - q.d1) return false;
  if (q.point.d == 0) return q.point.a == 0 && q.point.i == 0;
  return q.point.i >= 0 && q.point.i <= column_depth(q.point.a, q.point.d);
}

FormalSum FloerAlgebra::mu2(const BasisVector& q2, const BasisVector& q1) const {
  if (q1.d2 != q2.d1) throw std::invalid_argument("mu2 inputs are not composable");
  if (!is_admissible(q1) || !is_admissible(q2)) throw std::invalid_argument("inadmissible mu2 input");
  if (is_unit(q1)) return FormalSum::of({q1.d1, q2.d2, q2.point});
  if (is_unit(q2)) return FormalSum::of({q1.d1, q2.d2, q1.point});

  const auto k = critical_cover_unchecked(manifold_, q1.point, q2.point).total();
  const auto& p = q1.point;
  const auto& q = q2.point;
  FormalSum out(q1.d1, q2.d2);
  for (std::int64_t s = 0; s <= k; ++s) {
    const BasisVector term{q1.d1, q2.d2, {p.a + q.a, p.i + q.i + s, p.d + q.d}};
    if (!is_admissible(term)) {
      throw std::domain_error("triangle output q_{" + std::to_string(term.point.a) + "," +
                              std::to_string(term.point.i) + "} leaves B");
    }
    out.add(term.point.a, term.point.i, binomial(k, s));
  }
  return out;
}

FormalSum FloerAlgebra::ring_product(const FormalSum& x, const FormalSum& y) const {
  if (x.d2() != y.d1()) throw std::invalid_argument("ring_product factors are not composable");
  FormalSum out(x.d1(), y.d2());
  for (const auto& [kx, cx] : x.terms()) {
    for (const auto& [ky, cy] : y.terms()) {
      out += (cx * cy) * mu2(y.basis(ky), x.basis(kx));
    }
  }
  return out;
}

FormalSum FloerAlgebra::unit(std::int64_t d) const { return FormalSum::of({d, d, {0, 0, 0}}); }

nlohmann::json integer_to_json(const Integer& value) {
  if (value <= std::numeric_limits<std::int64_t>::max() &&
      value >= std::numeric_limits<std::int64_t>::min()) {
    return value.convert_to<std::int64_t>();
  }
  return value.str();
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer");
}

nlohmann::json to_json(const FormalSum& sum) {
  nlohmann::json j;
  j["d1"] = sum.d1();
  j["d2"] = sum.d2();
  j["terms"] = nlohmann::json::array();
  for (const auto& [key, c] : sum.terms()) {
    j["terms"].push_back({{"a", key.first}, {"i", key.second}, {"c", integer_to_json(c)}});
  }
  return j;
}

FormalSum formal_sum_from_json(const nlohmann::json& j) {
  try {
    FormalSum sum(j.at("d1").get<std::int64_t>(), j.at("d2").get<std::int64_t>());
    for (const auto& t : j.at("terms")) {
      sum.add(t.at("a").get<std::int64_t>(), t.at("i").get<std::int64_t>(),
              integer_from_json(t.at("c")));
    }
    return sum;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed formal sum: ") + e.what());
  }
}

}  // namespace affinefloer

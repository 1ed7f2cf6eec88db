#include "affinefloer/coordinate_ring.hpp"

#include "affinefloer/floer_algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace affinefloer {

HomogeneousPolynomial::HomogeneousPolynomial(std::int64_t degree) : degree_(degree) {
  if (degree < 0) throw std::invalid_argument("polynomial degree must be nonnegative");
}

HomogeneousPolynomial HomogeneousPolynomial::monomial(const Monomial& m, const Integer& c) {
  HomogeneousPolynomial p(m.degree());
  p.add(m, c);
  return p;
}

Integer HomogeneousPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

void HomogeneousPolynomial::add(const Monomial& m, const Integer& c) {
  if (m.x < 0 || m.y < 0 || m.z < 0) throw std::invalid_argument("negative exponent");
  if (m.degree() != degree_) throw std::invalid_argument("monomial degree does not match polynomial");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

HomogeneousPolynomial& HomogeneousPolynomial::operator+=(const HomogeneousPolynomial& other) {
  if (other.degree_ != degree_) throw std::invalid_argument("cannot add polynomials of different degree");
  for (const auto& [m, c] : other.terms_) add(m, c);
  return *this;
}

HomogeneousPolynomial operator*(const Integer& c, const HomogeneousPolynomial& p) {
  HomogeneousPolynomial out(p.degree_);
  for (const auto& [m, coeff] : p.terms_) out.add(m, c * coeff);
  return out;
}

bool is_valid(const QBasisIndex& idx) {
  return idx.d >= 0 && std::llabs(idx.a) <= idx.d && idx.i >= 0 && 2 * idx.i <= idx.d - std::llabs(idx.a);
}

std::vector<QBasisIndex> qbasis(std::int64_t d) {
  if (d < 0) throw std::invalid_argument("degree must be nonnegative");
  std::vector<QBasisIndex> out;
  for (std::int64_t a = -d; a <= d; ++a) {
    for (std::int64_t i = 0; 2 * i <= d - std::llabs(a); ++i) out.push_back({a, i, d});
  }
  return out;
}

HomogeneousPolynomial multiply(const HomogeneousPolynomial& lhs, const HomogeneousPolynomial& rhs) {
  HomogeneousPolynomial out(lhs.degree() + rhs.degree());
  for (const auto& [m1, c1] : lhs.terms()) {
    for (const auto& [m2, c2] : rhs.terms()) out.add({m1.x + m2.x, m1.y + m2.y, m1.z + m2.z}, c1 * c2);
  }
  return out;
}

HomogeneousPolynomial power(const HomogeneousPolynomial& base, std::int64_t exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  auto result = HomogeneousPolynomial::monomial({0, 0, 0});
  for (std::int64_t k = 0; k < exponent; ++k) result = multiply(result, base);
  return result;
}

HomogeneousPolynomial p_polynomial() {
  HomogeneousPolynomial p(2);
  p.add({1, 0, 1}, 1);
  p.add({0, 2, 0}, -1);
  return p;
}

HomogeneousPolynomial q_monomial(const QBasisIndex& idx) {
  if (!is_valid(idx)) throw std::invalid_argument("invalid Q-basis index");
  const auto abs_a = std::llabs(idx.a);
  const Monomial prefix = idx.a <= 0 ? Monomial{abs_a, idx.d - abs_a - 2 * idx.i, 0}
                                     : Monomial{0, idx.d - abs_a - 2 * idx.i, abs_a};
  return multiply(HomogeneousPolynomial::monomial(prefix), power(p_polynomial(), idx.i));
}

QExpansion expand_in_qbasis(const HomogeneousPolynomial& poly) {
  const auto d = poly.degree();
  // Q_{a,i} is x^{i-a} y^{d+|a|-2i} z^i plus terms with smaller min(x, z), and
  // a = z - x is constant on it, so peeling the monomial of largest min(x, z)
  // is exact back-substitution over Z.
  std::vector<HomogeneousPolynomial> p_powers{HomogeneousPolynomial::monomial({0, 0, 0})};
  HomogeneousPolynomial rest = poly;
  QExpansion out;
  while (!rest.is_zero()) {
    const Monomial* lead = nullptr;
    for (const auto& [m, c] : rest.terms()) {
      if (!lead || std::min(m.x, m.z) > std::min(lead->x, lead->z)) lead = &m;
    }
    const QBasisIndex idx{lead->z - lead->x, std::min(lead->x, lead->z), d};
    const Integer c = rest.coefficient(*lead);
    while (static_cast<std::int64_t>(p_powers.size()) <= idx.i) {
      p_powers.push_back(multiply(p_powers.back(), p_polynomial()));
    }
    const auto abs_a = std::llabs(idx.a);
    const Monomial prefix = idx.a <= 0 ? Monomial{abs_a, d - abs_a - 2 * idx.i, 0}
                                       : Monomial{0, d - abs_a - 2 * idx.i, abs_a};
    rest += (-c) * multiply(HomogeneousPolynomial::monomial(prefix), p_powers[idx.i]);
    out.emplace(idx, c);
  }
  return out;
}

IsoReport verify_iso(std::int64_t n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  const FloerAlgebra algebra(cp2_model());
  IsoReport report;
  report.n_max = n_max;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    for (std::int64_t m = 1; m <= n_max; ++m) {
      for (const auto& p : qbasis(n)) {
        const auto qp = q_monomial(p);
        for (const auto& q : qbasis(m)) {
          ++report.products_checked;
          const auto ring = expand_in_qbasis(multiply(qp, q_monomial(q)));
          const auto floer = algebra.mu2(basis_vector(n, n + m, q.a, q.i), basis_vector(0, n, p.a, p.i));
          QExpansion from_floer;
          for (const auto& [key, c] : floer.terms()) from_floer.emplace(QBasisIndex{key.first, key.second, n + m}, c);
          if (ring != from_floer) {
            std::ostringstream detail;
            detail << "ring has " << ring.size() << " terms, mu2 has " << from_floer.size();
            report.mismatches.push_back({p, q, detail.str()});
          }
        }
      }
    }
  }
  return report;
}

nlohmann::json to_json(const HomogeneousPolynomial& poly) {
  auto j = nlohmann::json::array();
  for (const auto& [m, c] : poly.terms()) {
    j.push_back({{"x", m.x}, {"y", m.y}, {"z", m.z}, {"c", integer_to_json(c)}});
  }
  return j;
}

HomogeneousPolynomial polynomial_from_json(const nlohmann::json& j, std::int64_t empty_degree) {
  try {
    if (!j.is_array()) throw std::invalid_argument("polynomial must be a JSON list");
    if (j.empty()) return HomogeneousPolynomial(empty_degree);
    const auto& first = j.front();
    HomogeneousPolynomial p(first.at("x").get<std::int64_t>() + first.at("y").get<std::int64_t>() +
                            first.at("z").get<std::int64_t>());
    for (const auto& t : j) {
      p.add({t.at("x").get<std::int64_t>(), t.at("y").get<std::int64_t>(), t.at("z").get<std::int64_t>()},
            integer_from_json(t.at("c")));
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed polynomial: ") + e.what());
  }
}

std::string to_string(const HomogeneousPolynomial& poly) {
  if (poly.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest x power first reads most naturally.
  for (auto it = poly.terms().rbegin(); it != poly.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool constant = m.degree() == 0;
    if (mag != 1 || constant) out << mag;
    for (const auto& [name, e] : {std::pair{'x', m.x}, std::pair{'y', m.y}, std::pair{'z', m.z}}) {
      if (e == 0) continue;
      out << name;
      if (e > 1) out << "^" << e;
    }
  }
  return out.str();
}

}  // namespace affinefloer

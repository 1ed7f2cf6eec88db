#include "affinefloer/wrapped_floer.hpp"

#include "affinefloer/floer_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace affinefloer {

std::int64_t wrap_step(ComplementCase c) {
  switch (c) {
    case ComplementCase::L: return 1;
    case ComplementCase::C: return 2;
    case ComplementCase::D: return 3;
  }
  return 1;
}

std::string to_string(ComplementCase c) {
  switch (c) {
    case ComplementCase::L: return "L";
    case ComplementCase::C: return "C";
    case ComplementCase::D: return "D";
  }
  return "?";
}

ComplementCase parse_case(const std::string& text) {
  if (text.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(text[0]))) {
      case 'L': return ComplementCase::L;
      case 'C': return ComplementCase::C;
      case 'D': return ComplementCase::D;
    }
  }
  throw std::invalid_argument("unknown complement case '" + text + "'");
}

bool is_valid(ComplementCase c, const ExtendedPoint& q) {
  switch (c) {
    case ComplementCase::L: return q.i >= 0;
    case ComplementCase::C: return q.i <= floor_div(q.d - std::llabs(q.a), 2);
    case ComplementCase::D: return true;
  }
  return false;
}

bool Window::contains(const ExtendedPoint& q) const {
  return std::llabs(q.a) <= a_max && std::llabs(q.i) <= i_max;
}

std::vector<ExtendedPoint> wrapped_basis(ComplementCase c, std::int64_t d, const Window& window) {
  if (window.a_max < 0 || window.i_max < 0) throw std::invalid_argument("window bounds must be nonnegative");
  std::vector<ExtendedPoint> out;
  for (std::int64_t a = -window.a_max; a <= window.a_max; ++a) {
    for (std::int64_t i = -window.i_max; i <= window.i_max; ++i) {
      if (is_valid(c, {a, i, d})) out.push_back({a, i, d});
    }
  }
  return out;
}

void WrappedSum::add(std::int64_t a, std::int64_t i, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace({a, i}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

Integer WrappedSum::coefficient(std::int64_t a, std::int64_t i) const {
  auto it = terms.find({a, i});
  return it == terms.end() ? Integer(0) : it->second;
}

namespace {

std::string describe(const ExtendedPoint& q) {
  std::ostringstream out;
  out << "q_{" << q.a << "," << q.i << "}@" << q.d;
  return out.str();
}

}  // namespace

WrappedSum wrapped_product(ComplementCase c, const ExtendedPoint& q2, const ExtendedPoint& q1,
                           const std::optional<Window>& window) {
  if (!is_valid(c, q1) || !is_valid(c, q2)) {
    throw std::invalid_argument("index invalid for case " + to_string(c));
  }
  const auto k = k_value_cp2(q1.a, q2.a);
  WrappedSum out{c, q1.d + q2.d, {}};
  for (std::int64_t s = 0; s <= k; ++s) {
    const ExtendedPoint term{q1.a + q2.a, q1.i + q2.i + s, q1.d + q2.d};
    if (!is_valid(c, term)) throw std::logic_error("wrapped product left the case's index range");
    if (window && !window->contains(term)) throw WindowTooSmall("output " + describe(term) + " is outside the window");
    out.add(term.a, term.i, binomial(k, s));
  }
  return out;
}

bool is_allowed(ComplementCase c, const LaurentElement& f) {
  if (std::llabs(f.a) + f.y + 2 * f.p != f.d) return false;
  switch (c) {
    case ComplementCase::L: return f.p >= 0;
    case ComplementCase::C: return f.y >= 0;
    case ComplementCase::D: return true;
  }
  return false;
}

LaurentElement rational_function(ComplementCase c, const ExtendedPoint& q) {
  if (!is_valid(c, q)) throw std::invalid_argument("index invalid for case " + to_string(c));
  return {q.a, q.d - std::llabs(q.a) - 2 * q.i, q.i, q.d};
}

ExtendedPoint point_of(ComplementCase c, const LaurentElement& f) {
  if (!is_allowed(c, f)) throw std::invalid_argument("Laurent monomial not allowed in case " + to_string(c));
  return {f.a, f.p, f.d};
}

std::string to_string(const LaurentElement& f) {
  std::ostringstream out;
  bool any = false;
  auto factor = [&](const char* name, std::int64_t e) {
    if (e == 0) return;
    if (any) out << " ";
    out << name;
    if (e != 1) out << "^" << e;
    any = true;
  };
  factor("x", f.x_exponent());
  factor("z", f.z_exponent());
  factor("y", f.y);
  factor("p", f.p);
  if (!any) out << "1";
  return out.str();
}

ExtendedPoint e_element(ComplementCase c, std::int64_t r) {
  const auto step = wrap_step(c);
  if (r < 0 || r % step != 0) {
    throw std::invalid_argument("r must be a nonnegative multiple of " + std::to_string(step));
  }
  switch (c) {
    case ComplementCase::L: return {0, 0, r};
    case ComplementCase::C: return {0, r / 2, r};
    case ComplementCase::D: return {0, r / 3, r};
  }
  return {};
}

ExtendedPoint continuation_image(ComplementCase c, const ExtendedPoint& q, std::int64_t r) {
  const auto product = wrapped_product(c, e_element(c, r), q);
  if (product.terms.size() != 1 || product.terms.begin()->second != 1) {
    throw std::logic_error("multiplication by e_r is not a basis map");
  }
  const auto& [key, coeff] = *product.terms.begin();
  return {key.first, key.second, product.d};
}

std::map<ExtendedPoint, ExtendedPoint> continuation_map(ComplementCase c, std::int64_t d1, std::int64_t d2,
                                                        std::int64_t r, const Window& window) {
  if (d2 - d1 <= 0) throw std::invalid_argument("continuation maps need d2 > d1");
  std::map<ExtendedPoint, ExtendedPoint> out;
  for (const auto& q : wrapped_basis(c, d2 - d1, window)) out.emplace(q, continuation_image(c, q, r));
  return out;
}

std::pair<Rational, Rational> dilation_center(ComplementCase c) {
  const auto e = e_element(c, wrap_step(c));
  return {0, ratio(-e.i, e.d)};
}

std::pair<Rational, Rational> embedded_coordinates(const ExtendedPoint& q) {
  if (q.d <= 0) throw std::invalid_argument("embedding needs a positive denominator");
  return {ratio(q.a, q.d), ratio(-q.i, q.d)};
}

std::pair<Rational, Rational> dilation_image(ComplementCase c, const ExtendedPoint& q, std::int64_t r) {
  if (q.d + r <= 0) throw std::invalid_argument("dilation needs d + r > 0");
  const auto [ce, cx] = dilation_center(c);
  const auto [pe, px] = embedded_coordinates(q);
  const Rational factor = ratio(q.d, q.d + r);
  return {ce + factor * (pe - ce), cx + factor * (px - cx)};
}

namespace {

// f * s^R for the smallest R making every exponent nonnegative, where s is
// y, p or yp by case.
std::pair<HomogeneousPolynomial, std::int64_t> clear_denominator(ComplementCase c, const LaurentElement& f) {
  std::int64_t shift = 0;
  switch (c) {
    case ComplementCase::L: shift = std::max<std::int64_t>(0, -f.y); break;
    case ComplementCase::C: shift = std::max<std::int64_t>(0, -f.p); break;
    case ComplementCase::D: shift = std::max<std::int64_t>({0, -f.y, -f.p}); break;
  }
  const std::int64_t y = f.y + (c == ComplementCase::C ? 0 : shift);
  const std::int64_t p = f.p + (c == ComplementCase::L ? 0 : shift);
  if (y < 0 || p < 0) throw std::invalid_argument("Laurent monomial not allowed in this case");
  const auto prefix = HomogeneousPolynomial::monomial({f.x_exponent(), y, f.z_exponent()});
  return {multiply(prefix, power(p_polynomial(), p)), shift};
}

}  // namespace

WrappedSum localized_product(ComplementCase c, const ExtendedPoint& q2, const ExtendedPoint& q1) {
  const auto [f1, r1] = clear_denominator(c, rational_function(c, q1));
  const auto [f2, r2] = clear_denominator(c, rational_function(c, q2));
  const auto r = r1 + r2;
  WrappedSum out{c, q1.d + q2.d, {}};
  for (const auto& [idx, coeff] : expand_in_qbasis(multiply(f1, f2))) {
    // divide Q_{a,i} of degree D by s^r
    const std::int64_t i = c == ComplementCase::L ? idx.i : idx.i - r;
    const std::int64_t d = idx.d - r * wrap_step(c);
    if (d != out.d) throw std::logic_error("degree mismatch after clearing denominators");
    out.add(idx.a, i, coeff);
  }
  return out;
}

nlohmann::json to_json(const WrappedSum& sum) {
  nlohmann::json j;
  j["case"] = to_string(sum.kase);
  j["d1"] = 0;
  j["d2"] = sum.d;
  j["terms"] = nlohmann::json::array();
  for (const auto& [key, c] : sum.terms) {
    j["terms"].push_back({{"a", key.first}, {"i", key.second}, {"c", integer_to_json(c)}});
  }
  return j;
}

WrappedSum wrapped_sum_from_json(const nlohmann::json& j) {
  try {
    WrappedSum sum{parse_case(j.at("case").get<std::string>()),
                   j.at("d2").get<std::int64_t>() - j.at("d1").get<std::int64_t>(),
                   {}};
    for (const auto& t : j.at("terms")) {
      sum.add(t.at("a").get<std::int64_t>(), t.at("i").get<std::int64_t>(), integer_from_json(t.at("c")));
    }
    return sum;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed wrapped sum: ") + e.what());
  }
}

}  // namespace affinefloer

#include "affinefloer/rational.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace affinefloer {

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) {
    throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  }
  Integer value = 0;
  for (; pos < text.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    }
    value = value * 10 + (text[pos] - '0');
  }
  return negative ? Integer(-value) : value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational ratio(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("zero denominator");
  return Rational(Integer(num), Integer(den));
}

Rational parse_rational(std::string_view text) {
  const std::string_view body = trim(text);
  const auto slash = body.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(body, text));
  }
  const Integer num = parse_integer(trim(body.substr(0, slash)), text);
  const Integer den = parse_integer(trim(body.substr(slash + 1)), text);
  if (den == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

std::string to_string(const Rational& value) {
  const Integer den = boost::multiprecision::denominator(value);
  const Integer num = boost::multiprecision::numerator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Integer floor(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  Integer q = num / den;  // truncates toward zero; den > 0
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

Integer ceil(const Rational& value) { return -floor(-value); }

bool is_integral(const Rational& value) { return boost::multiprecision::denominator(value) == 1; }

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  if (b == 0) throw std::domain_error("floor_div by zero");
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Integer binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Integer result = 1;
  for (std::int64_t t = 1; t <= k; ++t) {
    result = result * (n - k + t) / t;
  }
  return result;
}

std::int64_t to_int64(const Integer& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("integer does not fit in 64 bits: " + value.str());
  }
  return value.convert_to<std::int64_t>();
}

}  // namespace affinefloer

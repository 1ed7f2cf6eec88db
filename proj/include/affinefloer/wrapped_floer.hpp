#pragma once

// Wrapped Floer cohomology of the sections L(d) in the complements of a line
// (L), a conic (C), and both (D). Generators q_{a,i} live in columns a of the
// completed base; the depth i is unbounded below the compact range in case L,
// above it in case C and in both directions in case D. Each generator
// corresponds to the Laurent monomial x^{-a} p^i y^{d+a-2i} (a <= 0) or
// z^a p^i y^{d-a-2i} (a > 0).

#include "affinefloer/coordinate_ring.hpp"
#include "affinefloer/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace affinefloer {

enum class ComplementCase { L, C, D };

/// 1, 2, 3: wrapping levels must be multiples of this.
std::int64_t wrap_step(ComplementCase c);
std::string to_string(ComplementCase c);
/// Accepts "L", "C", "D" (any case); throws std::invalid_argument otherwise.
ComplementCase parse_case(const std::string& text);

struct ExtendedPoint {
  std::int64_t a = 0;
  std::int64_t i = 0;
  std::int64_t d = 0;

  friend auto operator<=>(const ExtendedPoint&, const ExtendedPoint&) = default;
};

/// Depth rule of the case; a and d are arbitrary integers.
bool is_valid(ComplementCase c, const ExtendedPoint& q);

struct Window {
  std::int64_t a_max = 0;
  std::int64_t i_max = 0;

  bool contains(const ExtendedPoint& q) const;
};

class WindowTooSmall : public std::range_error {
 public:
  using std::range_error::range_error;
};

/// Valid points with |a| <= a_max and |i| <= i_max, sorted by (a, i).
std::vector<ExtendedPoint> wrapped_basis(ComplementCase c, std::int64_t d, const Window& window);

struct WrappedSum {
  ComplementCase kase = ComplementCase::D;
  std::int64_t d = 0;
  std::map<std::pair<std::int64_t, std::int64_t>, Integer> terms;  // (a, i)

  void add(std::int64_t a, std::int64_t i, const Integer& c);
  Integer coefficient(std::int64_t a, std::int64_t i) const;
  friend bool operator==(const WrappedSum&, const WrappedSum&) = default;
};

/// sum_s binom(k, s) q_{a+b, i+j+s} in degree n + m, where q1 = q_{a,i} has
/// degree n and q2 = q_{b,j} degree m. With a window, any output outside it
/// raises WindowTooSmall. Invalid inputs raise std::invalid_argument.
WrappedSum wrapped_product(ComplementCase c, const ExtendedPoint& q2, const ExtendedPoint& q1,
                           const std::optional<Window>& window = std::nullopt);

/// x^{max(-a,0)} z^{max(a,0)} y^y p^p of degree d = |a| + y + 2p.
struct LaurentElement {
  std::int64_t a = 0;
  std::int64_t y = 0;
  std::int64_t p = 0;
  std::int64_t d = 0;

  std::int64_t x_exponent() const { return a < 0 ? -a : 0; }
  std::int64_t z_exponent() const { return a > 0 ? a : 0; }
  friend bool operator==(const LaurentElement&, const LaurentElement&) = default;
};

/// Sign pattern allowed by the case: p >= 0 in L, y >= 0 in C.
bool is_allowed(ComplementCase c, const LaurentElement& f);

LaurentElement rational_function(ComplementCase c, const ExtendedPoint& q);
ExtendedPoint point_of(ComplementCase c, const LaurentElement& f);
std::string to_string(const LaurentElement& f);

/// The generator at the minimum of the wrapping Hamiltonian at level r:
/// y^r, p^{r/2} or (yp)^{r/3}. Throws std::invalid_argument unless r is a
/// nonnegative multiple of the wrap step.
ExtendedPoint e_element(ComplementCase c, std::int64_t r);

/// Image of q under multiplication by e_r.
ExtendedPoint continuation_image(ComplementCase c, const ExtendedPoint& q, std::int64_t r);

/// continuation_image on every point of the windowed basis of degree
/// d2 - d1 > 0.
std::map<ExtendedPoint, ExtendedPoint> continuation_map(ComplementCase c, std::int64_t d1, std::int64_t d2,
                                                        std::int64_t r, const Window& window);

/// Fixed point of the continuation dilation: (0, 0), (0, -1/2), (0, -1/3).
std::pair<Rational, Rational> dilation_center(ComplementCase c);

/// Completed-base coordinates (a/d, -i/d); d > 0.
std::pair<Rational, Rational> embedded_coordinates(const ExtendedPoint& q);

/// Dilation by d/(d + r) about the case's center applied to q's coordinates.
std::pair<Rational, Rational> dilation_image(ComplementCase c, const ExtendedPoint& q, std::int64_t r);

/// Independent route: clear denominators by powers of y, p or yp, multiply
/// honest polynomials, expand in the Q-basis and shift back.
WrappedSum localized_product(ComplementCase c, const ExtendedPoint& q2, const ExtendedPoint& q1);

nlohmann::json to_json(const WrappedSum& sum);
WrappedSum wrapped_sum_from_json(const nlohmann::json& json);

}  // namespace affinefloer

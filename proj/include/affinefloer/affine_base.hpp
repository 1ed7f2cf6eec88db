#pragma once

// Singular integral affine polygons with focus-focus singularities whose
// monodromy-invariant directions are all vertical, drawn in the chart where
// every branch cut runs straight down from its singularity. In that chart the
// top boundary is an honest straight-facet polyline and the bottom boundary
// absorbs the shear of each cut as an apparent slope jump.

#include "affinefloer/rational.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace affinefloer {

struct RationalPoint {
  Rational eta;
  Rational xi;

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

struct Singularity {
  Rational eta_pos;
  Rational xi_pos;
  int multiplicity = 1;
};

/// Piecewise-linear graph xi(eta) through its vertices.
struct BoundaryPolyline {
  std::vector<RationalPoint> vertices;

  std::vector<Rational> slopes() const;
  /// Linear interpolation; throws std::out_of_range outside the vertex span.
  Rational value_at(const Rational& eta) const;
  /// Slope on the right minus slope on the left at an interior vertex eta;
  /// zero when eta is not a vertex.
  Rational slope_jump_at(const Rational& eta) const;
};

struct ClassPManifold {
  Rational eta_min;
  Rational eta_max;
  std::vector<Singularity> singularities;  // sorted by eta_pos
  BoundaryPolyline top;
  BoundaryPolyline bottom;
  bool corner_left = false;
  bool corner_right = false;

  bool contains(const RationalPoint& p) const;
};

/// A point of B((1/d)Z): column a (eta = a/d) and depth i counted down from
/// the topmost lattice point of that column. d = 0 is the unit convention.
struct FractionalPoint {
  std::int64_t a = 0;
  std::int64_t i = 0;
  std::int64_t d = 0;

  friend auto operator<=>(const FractionalPoint&, const FractionalPoint&) = default;
};

enum class Axiom {
  PolylineShape,          // too few vertices, non-increasing eta, wrong span
  SingularityPlacement,   // outside the open eta range or not strictly inside B
  IntegralAffine,         // cut translation not integral
  MonodromyConsistency,   // slope jumps at singular columns
  CornersAtExtremes,      // class-P condition (5)
  NonDegenerate,          // bottom < top in the interior
  CornerFlags,            // declared corners disagree with the geometry
};

std::string to_string(Axiom axiom);

struct Violation {
  Axiom axiom;
  std::string location;
  std::string message;
};

std::vector<Violation> validate(const ClassPManifold& manifold);

/// The base of the torus fibration on the complement of a conic and a line:
/// eta in [-1, 1], top facet xi = 0, bottom facets of slope -1/2 and +1/2
/// meeting at (0, -1/2), one simple singularity on eta = 0.
ClassPManifold cp2_model(const Rational& singularity_xi = Rational(-1, 4));

/// Four-sided instance with two vertical facets and two simple singularities.
/// The widths are the affine lengths of the three eta-intervals cut out by
/// the singular columns; `height` is the length of the left vertical facet.
/// The right facet has length height + width_left - width_right, which must
/// be nonnegative; at zero the right end is a corner.
ClassPManifold dp6_model(std::int64_t width_left = 1, std::int64_t width_middle = 1,
                         std::int64_t width_right = 1, std::int64_t height = 1);

/// Chart coordinates of a fractional point. The unit (d = 0) maps to (0, 0).
RationalPoint coordinates(const ClassPManifold& manifold, const FractionalPoint& q);

/// Largest admissible depth in column a of B((1/d)Z), or -1 when the column
/// eta = a/d misses B. Requires d > 0.
std::int64_t max_depth(const ClassPManifold& manifold, std::int64_t a, std::int64_t d);

/// True when q indexes an existing point of B((1/d)Z).
bool is_admissible(const ClassPManifold& manifold, const FractionalPoint& q);

/// B((1/d)Z) column by column, sorted by (a, i). Throws
/// std::invalid_argument for d < 0; d = 0 gives the single unit point.
std::vector<FractionalPoint> fractional_points(const ClassPManifold& manifold, std::int64_t d);

/// Independent count by scanning every lattice candidate of the bounding box.
std::uint64_t count_points(const ClassPManifold& manifold, std::int64_t d);

struct IntMatrix2 {
  std::array<std::array<std::int64_t, 2>, 2> m{};

  static IntMatrix2 identity() { return {{{{1, 0}, {0, 1}}}}; }
  IntMatrix2 operator*(const IntMatrix2& other) const;
  friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;
};

/// Counterclockwise monodromy of the tangent bundle raised to `turns`:
/// [[1, 0], [multiplicity * turns, 1]] acting on (eta, xi) columns.
IntMatrix2 monodromy_shear(const Singularity& singularity, std::int64_t turns);

// Instance files: rationals travel as "p/q" strings.
nlohmann::json to_json(const ClassPManifold& manifold);
ClassPManifold manifold_from_json(const nlohmann::json& json);

}  // namespace affinefloer

#pragma once

// Tropical triangles on the single-singularity model. Legs obey
// tangent(end) - tangent(start) = weight * (end - start); a leg crossing the
// singular column may bend there after simple disks from the singularity are
// attached.

#include "affinefloer/affine_base.hpp"
#include "affinefloer/floer_algebra.hpp"
#include "affinefloer/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

namespace affinefloer {

struct RationalVector {
  Rational eta;
  Rational xi;

  friend bool operator==(const RationalVector&, const RationalVector&) = default;
};

RationalVector operator-(const RationalPoint& lhs, const RationalPoint& rhs);
RationalVector operator+(const RationalVector& lhs, const RationalVector& rhs);
RationalVector operator-(const RationalVector& lhs, const RationalVector& rhs);
RationalVector operator*(const Rational& c, const RationalVector& v);

/// Shear of the singular column applied to a tangent crossing the cut.
/// Left-to-right crossings use [[1,0],[1,1]], right-to-left its inverse.
RationalVector cross_cut(const RationalVector& tangent);

struct LegPiece {
  RationalPoint start;
  RationalPoint end;
  RationalVector tangent_start;
  RationalVector tangent_end;
};

struct TropicalLeg {
  std::int64_t weight = 0;
  std::vector<LegPiece> pieces;  // consecutive; the first starts at an input
};

struct DiskAttachment {
  RationalPoint point;  // on the singular column
  std::int64_t count = 0;
  int direction = 1;    // disks propagate along direction * (0, 1)
  bool through_cut = false;
  int leg = 1;
};

enum class Placement { Below, Above };

struct TropicalTriangle {
  FractionalPoint q1;
  FractionalPoint q2;
  FractionalPoint root;
  RationalPoint root_point;
  TropicalLeg u1;
  TropicalLeg u2;
  std::optional<RationalPoint> bend;
  int crossing_leg = 0;  // 0 when neither leg meets the singular column
  bool through_cut = false;
  std::vector<DiskAttachment> disks;
  std::int64_t k = 0;
  std::int64_t s = 0;
  Integer multiplicity = 0;
  Rational singularity_xi;
};

/// The unique triangle from q1 = q_{a,i} (denominator n) and q2 = q_{b,j}
/// (denominator m) to q_{a+b,h}, or nothing. Throws std::invalid_argument for
/// inputs outside B or a singularity not strictly inside B.
std::optional<TropicalTriangle> build_triangle(const FractionalPoint& q1, const FractionalPoint& q2,
                                               std::int64_t h,
                                               const Rational& singularity_xi = Rational(-1, 4));

/// Same, with the singularity placed on the given side of the bend point.
std::optional<TropicalTriangle> build_triangle_with(const FractionalPoint& q1, const FractionalPoint& q2,
                                                    std::int64_t h, Placement placement);

/// Bend point on the singular column for opposite-sign inputs: the crossing
/// leg continues along the line through the other input and the root.
RationalPoint bend_point(const FractionalPoint& q1, const FractionalPoint& q2, std::int64_t h);

bool check_balancing(const TropicalTriangle& triangle);

Integer tropical_structure_constant(const FractionalPoint& q1, const FractionalPoint& q2, std::int64_t h);

/// Sum over s_1 + ... + s_r = s of prod binom(k_i, s_i).
Integer classP_partition_constant(const std::vector<std::int64_t>& k_list, std::int64_t s);

/// Partition count for a general class-P instance, using the critical cover.
Integer classP_structure_constant(const ClassPManifold& manifold, const FractionalPoint& q1,
                                  const FractionalPoint& q2, std::int64_t h);

/// Both placements of the singularity give balanced triangles of equal
/// multiplicity (or neither exists).
bool singularity_position_invariance(const FractionalPoint& q1, const FractionalPoint& q2, std::int64_t h);

nlohmann::json to_json(const TropicalTriangle& triangle);

}  // namespace affinefloer

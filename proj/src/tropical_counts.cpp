#include "affinefloer/tropical_counts.hpp"

#include <stdexcept>

namespace affinefloer {

RationalVector operator-(const RationalPoint& lhs, const RationalPoint& rhs) {
  return {lhs.eta - rhs.eta, lhs.xi - rhs.xi};
}
RationalVector operator+(const RationalVector& lhs, const RationalVector& rhs) {
  return {lhs.eta + rhs.eta, lhs.xi + rhs.xi};
}
RationalVector operator-(const RationalVector& lhs, const RationalVector& rhs) {
  return {lhs.eta - rhs.eta, lhs.xi - rhs.xi};
}
RationalVector operator*(const Rational& c, const RationalVector& v) { return {c * v.eta, c * v.xi}; }

namespace {

int rational_sign(const Rational& r) { return (r > 0) - (r < 0); }

bool opposite_signs(std::int64_t a, std::int64_t b) { return (a < 0 && b > 0) || (a > 0 && b < 0); }

LegPiece straight_piece(const RationalPoint& start, const RationalPoint& end, const RationalVector& tangent,
                        std::int64_t weight) {
  return {start, end, tangent, tangent + Rational(weight) * (end - start)};
}

// Model with the singularity at the requested height; inputs must lie in it.
ClassPManifold model_for(const Rational& singularity_xi) {
  auto m = cp2_model(singularity_xi);
  if (!validate(m).empty()) throw std::invalid_argument("singularity must lie strictly inside B");
  return m;
}

void require_inputs(const ClassPManifold& m, const FractionalPoint& q1, const FractionalPoint& q2) {
  if (q1.d <= 0 || q2.d <= 0) throw std::invalid_argument("tropical triangles need positive denominators");
  if (!is_admissible(m, q1) || !is_admissible(m, q2)) throw std::invalid_argument("input outside B");
}

// Leg 1 or 2 meets the singular column away from its input; 0 otherwise.
int crossing_leg_of(const FractionalPoint& q1, const FractionalPoint& q2) {
  if (!opposite_signs(q1.a, q2.a)) return 0;
  const auto root_a = q1.a + q2.a;
  if (root_a == 0) return q1.a < 0 ? 1 : 2;
  return (root_a > 0) == (q1.a < 0) ? 1 : 2;
}

std::optional<TropicalTriangle> construct(const ClassPManifold& m, const FractionalPoint& q1,
                                          const FractionalPoint& q2, std::int64_t h,
                                          std::optional<Placement> forced) {
  require_inputs(m, q1, q2);
  TropicalTriangle t;
  t.q1 = q1;
  t.q2 = q2;
  t.root = {q1.a + q2.a, h, q1.d + q2.d};
  t.k = k_value_cp2(q1.a, q2.a);
  t.s = h - (q1.i + q2.i);
  t.singularity_xi = m.singularities.front().xi_pos;
  if (!is_admissible(m, t.root)) return std::nullopt;
  if (t.s < 0 || t.s > t.k) return std::nullopt;

  const auto p1 = coordinates(m, q1);
  const auto p2 = coordinates(m, q2);
  t.root_point = coordinates(m, t.root);
  t.u1.weight = q1.d;
  t.u2.weight = q2.d;
  t.crossing_leg = crossing_leg_of(q1, q2);

  if (t.crossing_leg == 0) {
    t.u1.pieces.push_back(straight_piece(p1, t.root_point, {0, 0}, q1.d));
    t.u2.pieces.push_back(straight_piece(p2, t.root_point, {0, 0}, q2.d));
    t.multiplicity = 1;
    if (!check_balancing(t)) throw std::logic_error("straight triangle fails to balance");
    return t;
  }

  TropicalLeg& crossing = t.crossing_leg == 1 ? t.u1 : t.u2;
  TropicalLeg& other = t.crossing_leg == 1 ? t.u2 : t.u1;
  const auto& start = t.crossing_leg == 1 ? p1 : p2;
  const auto& other_start = t.crossing_leg == 1 ? p2 : p1;

  const auto x = bend_point(q1, q2, h);
  t.bend = x;
  other.pieces.push_back(straight_piece(other_start, t.root_point, {0, 0}, other.weight));
  const auto left = straight_piece(start, x, {0, 0}, crossing.weight);

  // Balancing at the root fixes the tangent leaving the bend.
  const RationalVector target = Rational(-1) * other.pieces.back().tangent_end;
  const RationalVector right = target - Rational(crossing.weight) * (t.root_point - x);
  const auto k_det = left.tangent_end.eta < 0 ? -left.tangent_end.eta : left.tangent_end.eta;
  if (k_det != t.k) throw std::logic_error("attachment count disagrees with the critical cover");

  const Placement placement =
      forced ? *forced : (t.singularity_xi <= x.xi ? Placement::Below : Placement::Above);
  t.through_cut = placement == Placement::Above;
  DiskAttachment disk{x, 0, 1, t.through_cut, t.crossing_leg};
  RationalVector correction;
  if (placement == Placement::Below) {
    disk.count = t.s;
    disk.direction = 1;
    correction = right - left.tangent_end;
  } else {
    disk.count = t.k - t.s;
    disk.direction = -1;
    correction = right - cross_cut(left.tangent_end);
  }
  if (correction != RationalVector{0, Rational(disk.direction * disk.count)}) {
    throw std::logic_error("bend correction is not a multiple of the disk direction");
  }
  if (disk.count > 0) t.disks.push_back(disk);

  crossing.pieces.push_back(left);
  crossing.pieces.push_back(straight_piece(x, t.root_point, right, crossing.weight));
  t.multiplicity = binomial(t.k, disk.count);
  if (!check_balancing(t)) throw std::logic_error("constructed triangle fails to balance");
  return t;
}

}  // namespace

RationalVector cross_cut(const RationalVector& tangent) {
  const int direction = rational_sign(tangent.eta);
  return {tangent.eta, tangent.xi + direction * tangent.eta};
}

RationalPoint bend_point(const FractionalPoint& q1, const FractionalPoint& q2, std::int64_t h) {
  if (!opposite_signs(q1.a, q2.a)) throw std::invalid_argument("bend point needs opposite-sign columns");
  const auto m = cp2_model();
  const FractionalPoint root{q1.a + q2.a, h, q1.d + q2.d};
  const auto r = coordinates(m, root);
  const auto other = coordinates(m, crossing_leg_of(q1, q2) == 1 ? q2 : q1);
  if (r.eta == 0) return r;
  return {0, other.xi + (r.xi - other.xi) * (0 - other.eta) / (r.eta - other.eta)};
}

std::optional<TropicalTriangle> build_triangle(const FractionalPoint& q1, const FractionalPoint& q2,
                                               std::int64_t h, const Rational& singularity_xi) {
  return construct(model_for(singularity_xi), q1, q2, h, std::nullopt);
}

std::optional<TropicalTriangle> build_triangle_with(const FractionalPoint& q1, const FractionalPoint& q2,
                                                    std::int64_t h, Placement placement) {
  return construct(model_for(Rational(-1, 4)), q1, q2, h, placement);
}

bool check_balancing(const TropicalTriangle& t) {
  for (const TropicalLeg* leg : {&t.u1, &t.u2}) {
    if (leg->pieces.empty() || leg->weight <= 0) return false;
    if (leg->pieces.front().tangent_start != RationalVector{0, 0}) return false;
    for (const auto& piece : leg->pieces) {
      if (piece.tangent_end - piece.tangent_start != Rational(leg->weight) * (piece.end - piece.start)) {
        return false;
      }
    }
    if (leg->pieces.back().end != t.root_point) return false;
  }
  if (t.u1.pieces.back().tangent_end + t.u2.pieces.back().tangent_end != RationalVector{0, 0}) return false;

  // Every junction between pieces sits on the singular column and changes
  // the tangent by the disks attached there, after the cut if crossed.
  for (int index : {1, 2}) {
    const auto& leg = index == 1 ? t.u1 : t.u2;
    for (std::size_t p = 1; p < leg.pieces.size(); ++p) {
      const auto& before = leg.pieces[p - 1];
      const auto& after = leg.pieces[p];
      if (before.end != after.start || before.end.eta != 0) return false;
      RationalVector expected = t.through_cut ? cross_cut(before.tangent_end) : before.tangent_end;
      for (const auto& disk : t.disks) {
        if (disk.leg != index || disk.point != before.end) continue;
        if (disk.count <= 0 || (disk.direction != 1 && disk.direction != -1)) return false;
        if (disk.through_cut != t.through_cut) return false;
        expected = expected + RationalVector{0, Rational(disk.direction * disk.count)};
      }
      if (after.tangent_start != expected) return false;
    }
  }
  return true;
}

Integer tropical_structure_constant(const FractionalPoint& q1, const FractionalPoint& q2, std::int64_t h) {
  const auto t = build_triangle(q1, q2, h);
  return t ? t->multiplicity : Integer(0);
}

Integer classP_partition_constant(const std::vector<std::int64_t>& k_list, std::int64_t s) {
  if (s < 0) throw std::invalid_argument("s must be nonnegative");
  // ways[t] = number of weighted placements using the singularities seen so far
  std::vector<Integer> ways(static_cast<std::size_t>(s) + 1, 0);
  ways[0] = 1;
  for (const auto k : k_list) {
    if (k < 0) throw std::invalid_argument("k_i must be nonnegative");
    std::vector<Integer> next(ways.size(), 0);
    for (std::size_t t = 0; t < ways.size(); ++t) {
      if (ways[t] == 0) continue;
      for (std::int64_t si = 0; si <= k && t + si < ways.size(); ++si) next[t + si] += ways[t] * binomial(k, si);
    }
    ways = std::move(next);
  }
  return ways[static_cast<std::size_t>(s)];
}

Integer classP_structure_constant(const ClassPManifold& manifold, const FractionalPoint& q1,
                                  const FractionalPoint& q2, std::int64_t h) {
  const auto cover = critical_cover_classP(manifold, q1, q2);
  const auto s = h - (q1.i + q2.i);
  if (s < 0) return 0;
  return classP_partition_constant(cover.per_singularity, s);
}

bool singularity_position_invariance(const FractionalPoint& q1, const FractionalPoint& q2, std::int64_t h) {
  const auto below = build_triangle_with(q1, q2, h, Placement::Below);
  const auto above = build_triangle_with(q1, q2, h, Placement::Above);
  if (!below || !above) return !below && !above;
  return check_balancing(*below) && check_balancing(*above) && below->multiplicity == above->multiplicity &&
         below->disks.size() <= 1 && above->disks.size() <= 1;
}

namespace {

nlohmann::json point_json(const RationalPoint& p) { return {to_string(p.eta), to_string(p.xi)}; }

nlohmann::json leg_json(const TropicalLeg& leg) {
  nlohmann::json vertices = nlohmann::json::array();
  nlohmann::json tangents = nlohmann::json::array();
  vertices.push_back(point_json(leg.pieces.front().start));
  for (const auto& piece : leg.pieces) {
    vertices.push_back(point_json(piece.end));
    tangents.push_back({to_string(piece.tangent_end.eta), to_string(piece.tangent_end.xi)});
  }
  return {{"weight", leg.weight}, {"vertices", vertices}, {"tangents_at_ends", tangents}};
}

nlohmann::json index_json(const FractionalPoint& q) { return {{"a", q.a}, {"i", q.i}, {"d", q.d}}; }

}  // namespace

nlohmann::json to_json(const TropicalTriangle& t) {
  nlohmann::json j;
  j["inputs"] = {index_json(t.q1), index_json(t.q2)};
  j["root"] = index_json(t.root);
  j["root_point"] = point_json(t.root_point);
  j["legs"] = {leg_json(t.u1), leg_json(t.u2)};
  j["bend"] = t.bend ? point_json(*t.bend) : nlohmann::json(nullptr);
  j["singularity_xi"] = to_string(t.singularity_xi);
  j["disks"] = nlohmann::json::array();
  for (const auto& d : t.disks) {
    j["disks"].push_back({{"point", point_json(d.point)},
                          {"count", d.count},
                          {"direction", {0, d.direction}},
                          {"through_cut", d.through_cut},
                          {"leg", d.leg}});
  }
  j["k"] = t.k;
  j["s"] = t.s;
  j["multiplicity"] = integer_to_json(t.multiplicity);
  return j;
}

}  // namespace affinefloer

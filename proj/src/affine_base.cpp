#include "affinefloer/affine_base.hpp"

#include <algorithm>
#include <stdexcept>

namespace affinefloer {

std::vector<Rational> BoundaryPolyline::slopes() const {
  std::vector<Rational> out;
  for (std::size_t k = 1; k < vertices.size(); ++k) {
    const auto& p = vertices[k - 1];
    const auto& q = vertices[k];
    out.push_back((q.xi - p.xi) / (q.eta - p.eta));
  }
  return out;
}

Rational BoundaryPolyline::value_at(const Rational& eta) const {
  if (vertices.empty() || eta < vertices.front().eta || eta > vertices.back().eta) {
    throw std::out_of_range("eta " + to_string(eta) + " outside polyline span");
  }
  auto it = std::lower_bound(vertices.begin(), vertices.end(), eta,
                             [](const RationalPoint& v, const Rational& e) { return v.eta < e; });
  if (it->eta == eta) return it->xi;
  const auto& q = *it;
  const auto& p = *(it - 1);
  return p.xi + (q.xi - p.xi) * (eta - p.eta) / (q.eta - p.eta);
}

Rational BoundaryPolyline::slope_jump_at(const Rational& eta) const {
  for (std::size_t k = 1; k + 1 < vertices.size(); ++k) {
    if (vertices[k].eta == eta) {
      const auto s = slopes();
      return s[k] - s[k - 1];
    }
  }
  return 0;
}

bool ClassPManifold::contains(const RationalPoint& p) const {
  if (p.eta < eta_min || p.eta > eta_max) return false;
  return bottom.value_at(p.eta) <= p.xi && p.xi <= top.value_at(p.eta);
}

std::string to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::PolylineShape: return "polyline-shape";
    case Axiom::SingularityPlacement: return "singularity-placement";
    case Axiom::IntegralAffine: return "integral-affine";
    case Axiom::MonodromyConsistency: return "monodromy-consistency";
    case Axiom::CornersAtExtremes: return "class-P(5) corners-at-extremes";
    case Axiom::NonDegenerate: return "non-degenerate";
    case Axiom::CornerFlags: return "corner-flags";
  }
  return "unknown";
}

namespace {

std::string at_eta(const Rational& eta) { return "eta=" + to_string(eta); }

bool check_polyline(const BoundaryPolyline& line, const std::string& name,
                    const ClassPManifold& m, std::vector<Violation>& out) {
  const auto& v = line.vertices;
  if (v.size() < 2) {
    out.push_back({Axiom::PolylineShape, name, "needs at least two vertices"});
    return false;
  }
  bool ok = true;
  for (std::size_t k = 1; k < v.size(); ++k) {
    if (!(v[k - 1].eta < v[k].eta)) {
      out.push_back({Axiom::PolylineShape, name + " " + at_eta(v[k].eta),
                     "vertices must be strictly increasing in eta"});
      ok = false;
    }
  }
  if (v.front().eta != m.eta_min || v.back().eta != m.eta_max) {
    out.push_back({Axiom::PolylineShape, name, "polyline must span [eta_min, eta_max]"});
    ok = false;
  }
  return ok;
}

Rational singular_multiplicity_at(const ClassPManifold& m, const Rational& eta) {
  Rational total = 0;
  for (const auto& s : m.singularities) {
    if (s.eta_pos == eta) total += s.multiplicity;
  }
  return total;
}

}  // namespace

std::vector<Violation> validate(const ClassPManifold& m) {
  std::vector<Violation> out;
  if (!(m.eta_min < m.eta_max)) {
    out.push_back({Axiom::PolylineShape, "eta range", "eta_min must be below eta_max"});
    return out;
  }
  const bool top_ok = check_polyline(m.top, "top", m, out);
  const bool bottom_ok = check_polyline(m.bottom, "bottom", m, out);
  if (!top_ok || !bottom_ok) return out;

  // Interior breakpoints of either polyline plus the midpoints between them
  // witness bottom < top on the whole open interval.
  std::vector<Rational> breaks;
  for (const auto& p : m.top.vertices) breaks.push_back(p.eta);
  for (const auto& p : m.bottom.vertices) breaks.push_back(p.eta);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  std::vector<Rational> probes;
  for (std::size_t k = 0; k < breaks.size(); ++k) {
    if (k > 0 && k + 1 < breaks.size()) probes.push_back(breaks[k]);
    if (k + 1 < breaks.size()) probes.push_back((breaks[k] + breaks[k + 1]) / 2);
  }
  for (const auto& eta : probes) {
    if (!(m.bottom.value_at(eta) < m.top.value_at(eta))) {
      out.push_back({Axiom::NonDegenerate, at_eta(eta), "bottom boundary must lie below top"});
    }
  }
  for (const Rational& eta : {m.eta_min, m.eta_max}) {
    if (m.bottom.value_at(eta) > m.top.value_at(eta)) {
      out.push_back({Axiom::NonDegenerate, at_eta(eta), "boundaries cross at the vertical side"});
    }
  }

  const bool left_meets = m.top.value_at(m.eta_min) == m.bottom.value_at(m.eta_min);
  const bool right_meets = m.top.value_at(m.eta_max) == m.bottom.value_at(m.eta_max);
  if (left_meets != m.corner_left) {
    out.push_back({Axiom::CornerFlags, "left", "corner flag disagrees with the boundary"});
  }
  if (right_meets != m.corner_right) {
    out.push_back({Axiom::CornerFlags, "right", "corner flag disagrees with the boundary"});
  }

  for (std::size_t k = 0; k < m.singularities.size(); ++k) {
    const auto& s = m.singularities[k];
    const std::string where = "singularity " + std::to_string(k) + " " + at_eta(s.eta_pos);
    if (k > 0 && m.singularities[k - 1].eta_pos > s.eta_pos) {
      out.push_back({Axiom::SingularityPlacement, where, "singularities must be sorted by eta"});
    }
    if (s.multiplicity < 1) {
      out.push_back({Axiom::SingularityPlacement, where, "multiplicity must be positive"});
    }
    if (!(m.eta_min < s.eta_pos && s.eta_pos < m.eta_max)) {
      out.push_back({Axiom::SingularityPlacement, where, "must lie strictly inside the eta range"});
      continue;
    }
    if (!(m.bottom.value_at(s.eta_pos) < s.xi_pos && s.xi_pos < m.top.value_at(s.eta_pos))) {
      out.push_back({Axiom::SingularityPlacement, where, "must lie strictly between the boundaries"});
    }
    if (!is_integral(s.eta_pos * s.multiplicity)) {
      out.push_back({Axiom::IntegralAffine, where,
                     "the cut gluing (eta, xi) -> (eta, xi + m(eta - c)) needs m*c integral"});
    }
  }

  // Slope jumps: the top never bends in the interior, the bottom bends by the
  // total multiplicity at each singular column and nowhere else.
  for (std::size_t k = 1; k + 1 < m.top.vertices.size(); ++k) {
    const auto& eta = m.top.vertices[k].eta;
    if (m.top.slope_jump_at(eta) == 0) continue;
    if (singular_multiplicity_at(m, eta) != 0) {
      out.push_back({Axiom::MonodromyConsistency, "top " + at_eta(eta),
                     "top boundary must be straight across a singular column"});
    } else {
      out.push_back({Axiom::CornersAtExtremes, "top " + at_eta(eta), "interior corner"});
    }
  }
  std::vector<Rational> singular_etas;
  for (const auto& s : m.singularities) singular_etas.push_back(s.eta_pos);
  singular_etas.erase(std::unique(singular_etas.begin(), singular_etas.end()), singular_etas.end());
  for (const auto& eta : singular_etas) {
    if (!(m.eta_min < eta && eta < m.eta_max)) continue;
    const Rational jump = m.bottom.slope_jump_at(eta);
    const Rational expected = singular_multiplicity_at(m, eta);
    if (jump != expected) {
      out.push_back({Axiom::MonodromyConsistency, "bottom " + at_eta(eta),
                     "slope jump " + to_string(jump) + " but the cut shear is " +
                         to_string(expected)});
    }
  }
  for (std::size_t k = 1; k + 1 < m.bottom.vertices.size(); ++k) {
    const auto& eta = m.bottom.vertices[k].eta;
    if (singular_multiplicity_at(m, eta) != 0) continue;
    if (m.bottom.slope_jump_at(eta) != 0) {
      out.push_back({Axiom::CornersAtExtremes, "bottom " + at_eta(eta), "interior corner"});
    }
  }
  return out;
}

ClassPManifold cp2_model(const Rational& singularity_xi) {
  ClassPManifold m;
  m.eta_min = -1;
  m.eta_max = 1;
  m.singularities = {Singularity{0, singularity_xi, 1}};
  m.top.vertices = {{-1, 0}, {1, 0}};
  m.bottom.vertices = {{-1, 0}, {0, Rational(-1, 2)}, {1, 0}};
  m.corner_left = true;
  m.corner_right = true;
  return m;
}

ClassPManifold dp6_model(std::int64_t w0, std::int64_t w1, std::int64_t w2, std::int64_t height) {
  if (w0 <= 0 || w1 <= 0 || w2 <= 0 || height <= 0) {
    throw std::invalid_argument("dp6 widths and height must be positive");
  }
  // right vertical facet has length height + w0 - w2
  if (w2 > height + w0) throw std::invalid_argument("dp6 needs width_right <= height + width_left");
  const Rational c1 = w0;
  const Rational c2 = w0 + w1;
  const Rational end = w0 + w1 + w2;
  const Rational floor_xi = -height - w0;
  ClassPManifold m;
  m.eta_min = 0;
  m.eta_max = end;
  m.singularities = {Singularity{c1, floor_xi / 2, 1}, Singularity{c2, floor_xi / 2, 1}};
  m.top.vertices = {{0, 0}, {end, 0}};
  m.bottom.vertices = {{0, -height}, {c1, floor_xi}, {c2, floor_xi}, {end, floor_xi + w2}};
  m.corner_right = w2 == height + w0;
  return m;
}

RationalPoint coordinates(const ClassPManifold& m, const FractionalPoint& q) {
  if (q.d == 0) return {0, 0};
  const Rational eta = ratio(q.a, q.d);
  const Integer top_index = floor(m.top.value_at(eta) * q.d);
  return {eta, Rational(top_index - q.i) / q.d};
}

std::int64_t max_depth(const ClassPManifold& m, std::int64_t a, std::int64_t d) {
  if (d <= 0) throw std::invalid_argument("column depth needs a positive denominator");
  const Rational eta = ratio(a, d);
  if (eta < m.eta_min || eta > m.eta_max) return -1;
  return to_int64(floor(m.top.value_at(eta) * d) - ceil(m.bottom.value_at(eta) * d));
}

bool is_admissible(const ClassPManifold& m, const FractionalPoint& q) {
  if (q.d < 0) return false;
  if (q.d == 0) return q.a == 0 && q.i == 0;
  return q.i >= 0 && q.i <= max_depth(m, q.a, q.d);
}

std::vector<FractionalPoint> fractional_points(const ClassPManifold& m, std::int64_t d) {
  if (d < 0) throw std::invalid_argument("denominator must be nonnegative");
  if (d == 0) return {FractionalPoint{0, 0, 0}};
  std::vector<FractionalPoint> out;
  const auto a_lo = to_int64(ceil(m.eta_min * d));
  const auto a_hi = to_int64(floor(m.eta_max * d));
  for (std::int64_t a = a_lo; a <= a_hi; ++a) {
    const auto depth = max_depth(m, a, d);
    for (std::int64_t i = 0; i <= depth; ++i) out.push_back({a, i, d});
  }
  return out;
}

std::uint64_t count_points(const ClassPManifold& m, std::int64_t d) {
  if (d < 0) throw std::invalid_argument("denominator must be nonnegative");
  if (d == 0) return 1;
  Rational lo = m.bottom.vertices.front().xi;
  Rational hi = m.top.vertices.front().xi;
  for (const auto& p : m.bottom.vertices) lo = std::min(lo, p.xi);
  for (const auto& p : m.top.vertices) hi = std::max(hi, p.xi);
  const auto a_lo = to_int64(floor(m.eta_min * d));
  const auto a_hi = to_int64(ceil(m.eta_max * d));
  const auto b_lo = to_int64(floor(lo * d));
  const auto b_hi = to_int64(ceil(hi * d));
  std::uint64_t count = 0;
  for (std::int64_t a = a_lo; a <= a_hi; ++a) {
    for (std::int64_t b = b_lo; b <= b_hi; ++b) {
      if (m.contains({ratio(a, d), ratio(b, d)})) ++count;
    }
  }
  return count;
}

IntMatrix2 IntMatrix2::operator*(const IntMatrix2& o) const {
  IntMatrix2 r;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j];
    }
  }
  return r;
}

IntMatrix2 monodromy_shear(const Singularity& s, std::int64_t turns) {
  return {{{{1, 0}, {s.multiplicity * turns, 1}}}};
}

namespace {

nlohmann::json polyline_json(const BoundaryPolyline& line) {
  auto arr = nlohmann::json::array();
  for (const auto& p : line.vertices) arr.push_back({to_string(p.eta), to_string(p.xi)});
  return arr;
}

Rational rational_field(const nlohmann::json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw std::invalid_argument("expected a rational encoded as a \"p/q\" string");
}

BoundaryPolyline polyline_from_json(const nlohmann::json& j) {
  BoundaryPolyline line;
  for (const auto& v : j) {
    if (!v.is_array() || v.size() != 2) {
      throw std::invalid_argument("polyline vertices must be [eta, xi] pairs");
    }
    line.vertices.push_back({rational_field(v[0]), rational_field(v[1])});
  }
  return line;
}

}  // namespace

nlohmann::json to_json(const ClassPManifold& m) {
  nlohmann::json j;
  j["eta_min"] = to_string(m.eta_min);
  j["eta_max"] = to_string(m.eta_max);
  j["singularities"] = nlohmann::json::array();
  for (const auto& s : m.singularities) {
    j["singularities"].push_back(
        {{"eta", to_string(s.eta_pos)}, {"xi", to_string(s.xi_pos)}, {"mult", s.multiplicity}});
  }
  j["top"] = polyline_json(m.top);
  j["bottom"] = polyline_json(m.bottom);
  j["corners"] = {{"left", m.corner_left}, {"right", m.corner_right}};
  return j;
}

ClassPManifold manifold_from_json(const nlohmann::json& j) {
  try {
    ClassPManifold m;
    m.eta_min = rational_field(j.at("eta_min"));
    m.eta_max = rational_field(j.at("eta_max"));
    for (const auto& s : j.at("singularities")) {
      m.singularities.push_back({rational_field(s.at("eta")), rational_field(s.at("xi")),
                                 s.value("mult", 1)});
    }
    m.top = polyline_from_json(j.at("top"));
    m.bottom = polyline_from_json(j.at("bottom"));
    const auto& corners = j.at("corners");
    m.corner_left = corners.at("left").get<bool>();
    m.corner_right = corners.at("right").get<bool>();
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed instance: ") + e.what());
  }
}

}  // namespace affinefloer

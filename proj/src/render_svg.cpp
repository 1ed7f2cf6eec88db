#include "affinefloer/render_svg.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace affinefloer {

namespace {

class Canvas {
 public:
  Canvas(const ClassPManifold& m, double width) : width_(width) {
    eta0_ = m.eta_min.convert_to<double>();
    const double eta1 = m.eta_max.convert_to<double>();
    double lo = 0, hi = 0;
    for (const auto* line : {&m.top, &m.bottom}) {
      for (const auto& v : line->vertices) {
        lo = std::min(lo, v.xi.convert_to<double>());
        hi = std::max(hi, v.xi.convert_to<double>());
      }
    }
    xi_top_ = hi;
    scale_ = (width - 2 * kMargin) / std::max(eta1 - eta0_, 1e-9);
    height_ = (hi - lo) * scale_ + 2 * kMargin;
  }

  double x(const Rational& eta) const { return kMargin + (eta.convert_to<double>() - eta0_) * scale_; }
  double y(const Rational& xi) const { return kMargin + (xi_top_ - xi.convert_to<double>()) * scale_; }
  double width() const { return width_; }
  double height() const { return height_; }

 private:
  static constexpr double kMargin = 40;
  double width_, height_ = 0, scale_ = 1, eta0_ = 0, xi_top_ = 0;
};

std::string label(const RationalPoint& p) { return "(" + to_string(p.eta) + ", " + to_string(p.xi) + ")"; }

}  // namespace

std::string render_svg(const ClassPManifold& manifold, const RenderOptions& options) {
  const Canvas c(manifold, options.width_px);
  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << c.width() << "\" height=\""
      << c.height() << "\" viewBox=\"0 0 " << c.width() << " " << c.height() << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  out << "<polygon class=\"base\" fill=\"#eef3fb\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
  for (const auto& v : manifold.top.vertices) out << c.x(v.eta) << "," << c.y(v.xi) << " ";
  for (auto it = manifold.bottom.vertices.rbegin(); it != manifold.bottom.vertices.rend(); ++it) {
    out << c.x(it->eta) << "," << c.y(it->xi) << " ";
  }
  out << "\"/>\n";

  for (const auto& s : manifold.singularities) {
    const auto floor_xi = manifold.bottom.value_at(s.eta_pos);
    out << "<line class=\"cut\" x1=\"" << c.x(s.eta_pos) << "\" y1=\"" << c.y(s.xi_pos) << "\" x2=\""
        << c.x(s.eta_pos) << "\" y2=\"" << c.y(floor_xi) << "\" stroke=\"gray\" stroke-dasharray=\"5,4\"/>\n";
    const double sx = c.x(s.eta_pos), sy = c.y(s.xi_pos);
    out << "<path class=\"singularity\" d=\"M" << sx - 5 << "," << sy - 5 << " L" << sx + 5 << "," << sy + 5
        << " M" << sx - 5 << "," << sy + 5 << " L" << sx + 5 << "," << sy - 5
        << "\" stroke=\"crimson\" stroke-width=\"2\"/>\n";
  }

  if (options.points_d) {
    for (const auto& q : fractional_points(manifold, *options.points_d)) {
      const auto p = coordinates(manifold, q);
      out << "<circle class=\"point\" cx=\"" << c.x(p.eta) << "\" cy=\"" << c.y(p.xi)
          << "\" r=\"3.5\" fill=\"navy\"><title>q_{" << q.a << "," << q.i << "} " << label(p)
          << "</title></circle>\n";
    }
  }

  if (options.triangle) {
    const auto& t = *options.triangle;
    for (const auto* leg : {&t.u1, &t.u2}) {
      for (const auto& piece : leg->pieces) {
        out << "<line class=\"leg\" x1=\"" << c.x(piece.start.eta) << "\" y1=\"" << c.y(piece.start.xi)
            << "\" x2=\"" << c.x(piece.end.eta) << "\" y2=\"" << c.y(piece.end.xi)
            << "\" stroke=\"darkgreen\" stroke-width=\"2.5\"/>\n";
      }
    }
    for (const auto& d : t.disks) {
      const auto& s = manifold.singularities.front();
      out << "<line class=\"disk\" x1=\"" << c.x(s.eta_pos) << "\" y1=\"" << c.y(t.singularity_xi) << "\" x2=\""
          << c.x(d.point.eta) << "\" y2=\"" << c.y(d.point.xi)
          << "\" stroke=\"darkorange\" stroke-width=\"2\"><title>" << d.count << " disks</title></line>\n";
    }
    if (t.bend) {
      out << "<circle class=\"bend\" cx=\"" << c.x(t.bend->eta) << "\" cy=\"" << c.y(t.bend->xi)
          << "\" r=\"4\" fill=\"darkgreen\"><title>bend " << label(*t.bend) << "</title></circle>\n";
    }
    out << "<circle class=\"root\" cx=\"" << c.x(t.root_point.eta) << "\" cy=\"" << c.y(t.root_point.xi)
        << "\" r=\"5\" fill=\"none\" stroke=\"darkgreen\" stroke-width=\"2\"><title>root "
        << label(t.root_point) << "</title></circle>\n";
    out << "<text x=\"10\" y=\"20\" font-family=\"sans-serif\" font-size=\"13\">multiplicity "
        << t.multiplicity.str() << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace affinefloer

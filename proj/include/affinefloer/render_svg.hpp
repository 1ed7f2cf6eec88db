#pragma once

// Static SVG 1.1 drawings of B with its singularities and downward cuts,
// optionally overlaid with fractional points or one tropical triangle.

#include "affinefloer/affine_base.hpp"
#include "affinefloer/tropical_counts.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace affinefloer {

struct RenderOptions {
  std::optional<std::int64_t> points_d;
  std::optional<TropicalTriangle> triangle;
  double width_px = 640;
};

/// Points carry class="point", triangle legs class="leg", disks class="disk".
std::string render_svg(const ClassPManifold& manifold, const RenderOptions& options);

}  // namespace affinefloer

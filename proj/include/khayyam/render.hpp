#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "khayyam/core.hpp"

namespace khayyam {

struct RenderOptions {
  int width_px = 800;
  int height_px = 800;
  bool show_hidden = true;
  int samples_per_branch = 256;  // at least 16
  double margin_factor = 1.2;
};

// Role colors.
inline constexpr std::string_view kColorSegment = "#1f77b4";   // b and c
inline constexpr std::string_view kColorL = "#2ca02c";         // l
inline constexpr std::string_view kColorA = "#ff7f0e";         // a
inline constexpr std::string_view kColorDiameter = "#9467bd";  // diameter of a diameter hyperbola
inline constexpr std::string_view kColorSolution = "#d62728";  // the root x
inline constexpr std::string_view kColorInk = "#000000";       // axes, curves, companion y
inline constexpr std::string_view kDashPattern = "6 3";

struct Viewport {
  double xmin = 0.0;
  double xmax = 0.0;
  double ymin = 0.0;
  double ymax = 0.0;

  bool contains(Point2 p, double slack = 0.0) const {
    return p.x >= xmin - slack && p.x <= xmax + slack && p.y >= ymin - slack && p.y <= ymax + slack;
  }
};

/// World to screen: uniform scale, y axis pointing up.
struct ViewTransform {
  Viewport view;
  double scale = 1.0;

  Point2 to_screen(Point2 p) const { return {(p.x - view.xmin) * scale, (view.ymax - p.y) * scale}; }
  Point2 to_world(Point2 s) const { return {view.xmin + s.x / scale, view.ymax - s.y / scale}; }
};

/// A role-colored segment in world coordinates; lane shifts it off the axis
/// by that many pixels so overlapping segments stay visible.
struct RoleSegment {
  std::string role;  ///< "b", "c", "l", "a", "diameter", "solution", "companion"
  std::string_view color;
  Point2 from;
  Point2 to;
  double lane_px = 0.0;
  bool dashed = false;
};

std::vector<RoleSegment> role_segments(const SolveReport& report);

/// Bounding box of parameter segments, conic vertices and centers, and
/// intersection points, scaled by margin_factor and widened to the canvas
/// aspect ratio. Throws EmptyViewport if nothing finite remains.
Viewport compute_viewport(const SolveReport& report, const RenderOptions& opts);

ViewTransform make_transform(const Viewport& view, const RenderOptions& opts);

/// Polyline runs of the conic inside the viewport, sampled parametrically on
/// its principal axes (cos/sin for circles, cosh/sinh for hyperbolas, the free
/// coordinate for parabolas) with `samples` points per branch.
std::vector<std::vector<Point2>> sample_conic(const ImplicitConic& conic, const Viewport& view,
                                              int samples);

/// Standalone SVG 1.1 document (svg, g, path and line elements only).
/// Byte-identical for identical inputs.
std::string render_svg(const SolveReport& report, const RenderOptions& opts = {});

}  // namespace khayyam

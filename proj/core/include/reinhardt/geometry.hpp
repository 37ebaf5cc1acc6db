#pragma once
/*
 * Geometric realization of a composition: the star polygon of unit chords
 * (unit diameter scale), the inscribed equilateral polygon obtained by
 * subdividing each boundary arc, and the closure residual that witnesses the
 * Reinhardt condition geometrically.
 */

#include <span>
#include <string>
#include <vector>

#include "reinhardt/composition.hpp"

namespace reinhardt {

struct Vec2 {
  double x = 0;
  double y = 0;
};

struct PolygonRealization {
  int n = 0;
  std::vector<int> parts;
  std::vector<Vec2> star_vertices;     // r points, consecutive ones 1 apart
  std::vector<Vec2> polygon_vertices;  // n points in boundary order
  double closure_residual = 0;         // |path end - path start|
  std::vector<double> side_lengths;    // n consecutive distances
};

// Builds the star path with heading change pi - k_i*pi/n at vertex i (first
// vertex at the origin, first heading along +x) and inscribes the polygon by
// cutting each radius-1 arc into k_i equal subarcs. Non-Reinhardt inputs are
// allowed; they show up as a nonzero closure residual.
PolygonRealization realize(const Composition& c);

struct RenderStyle {
  bool show_polygon = true;
  bool show_chords = false;  // star-polygon segments
  bool show_arcs = false;    // circular boundary arcs
  double stroke_width = 1.5;
  int canvas_size = 600;
};

// Deterministic SVG 1.1 document; throws std::invalid_argument on non-finite
// coordinates.
std::string render_svg(const PolygonRealization& rz, const RenderStyle& style = {});

// Distance between the farthest pair of points.
double max_pairwise_distance(std::span<const Vec2> pts);

// Width (smallest distance between parallel supporting lines) of a convex
// polygon given in boundary order, by rotating calipers.
double min_width(std::span<const Vec2> pts);

// All cross products of consecutive edges have one sign.
bool convex_position(std::span<const Vec2> pts);

}  // namespace reinhardt

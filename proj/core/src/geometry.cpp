#include "reinhardt/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace reinhardt {

namespace {

constexpr double kPi = std::numbers::pi;

Vec2 rotate_about(const Vec2& center, const Vec2& point, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  const double dx = point.x - center.x, dy = point.y - center.y;
  return {center.x + c * dx - s * dy, center.y + s * dx + c * dy};
}

double distance(const Vec2& a, const Vec2& b) { return std::hypot(a.x - b.x, a.y - b.y); }

double cross(const Vec2& o, const Vec2& a, const Vec2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace

PolygonRealization realize(const Composition& c) {
  const int n = c.n();
  const int r = c.part_count();
  const auto& parts = c.parts();

  PolygonRealization rz;
  rz.n = n;
  rz.parts = parts;

  // Star path: unit steps, heading change pi - k*pi/n on arrival at a vertex.
  // Heading j is pi*(j*n - sum(parts[1..j]))/n, evaluated from the integer
  // numerator so the error does not accumulate; positions use compensated
  // sums, keeping side lengths equal to ~1 ulp.
  rz.star_vertices.resize(r);
  rz.star_vertices[0] = {0.0, 0.0};
  double x = 0.0, y = 0.0, cx = 0.0, cy = 0.0;
  auto add = [](double& sum, double& comp, double v) {
    double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  };
  long long turned = 0;  // sum of parts[1..j]
  for (int j = 0; j < r; ++j) {
    const double heading = kPi * (static_cast<double>(j) * n - turned) / n;
    add(x, cx, std::cos(heading));
    add(y, cy, std::sin(heading));
    if (j + 1 < r) {
      rz.star_vertices[j + 1] = {x + cx, y + cy};
      turned += parts[j + 1];
    }
  }
  rz.closure_residual = std::hypot(x + cx, y + cy);

  // Boundary arcs step through the star vertices two at a time: the arc from
  // v_{2m} to v_{2m+2} is centered on v_{2m+1} and spans its vertex angle
  // parts[2m+1]*pi/n, cut into that many equal subarcs.
  rz.polygon_vertices.reserve(n);
  for (int m = 0; m < r; ++m) {
    const int start_idx = (2 * m) % r;
    const int center_idx = (2 * m + 1) % r;
    const int end_idx = (2 * m + 2) % r;
    const Vec2 center = rz.star_vertices[center_idx];
    const Vec2 start = rz.star_vertices[start_idx];
    const Vec2 end = rz.star_vertices[end_idx];
    const int k = parts[center_idx];
    // Signed sweep measured from the realized points, so unclosed stars still
    // produce a drawable (if degenerate) polygon.
    const double ax = start.x - center.x, ay = start.y - center.y;
    const double bx = end.x - center.x, by = end.y - center.y;
    const double sweep = std::atan2(ax * by - ay * bx, ax * bx + ay * by);
    for (int j = 0; j < k; ++j)
      rz.polygon_vertices.push_back(rotate_about(center, start, sweep * j / k));
  }

  rz.side_lengths.resize(n);
  for (int i = 0; i < n; ++i)
    rz.side_lengths[i] =
        distance(rz.polygon_vertices[i], rz.polygon_vertices[(i + 1) % n]);
  return rz;
}

double max_pairwise_distance(std::span<const Vec2> pts) {
  double best = 0.0;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      best = std::max(best, distance(pts[i], pts[j]));
  return best;
}

bool convex_position(std::span<const Vec2> pts) {
  const size_t n = pts.size();
  if (n < 3) return false;
  int sign = 0;
  for (size_t i = 0; i < n; ++i) {
    double c = cross(pts[i], pts[(i + 1) % n], pts[(i + 2) % n]);
    if (c == 0.0) continue;
    int s = c > 0 ? 1 : -1;
    if (sign == 0) sign = s;
    if (s != sign) return false;
  }
  return sign != 0;
}

double min_width(std::span<const Vec2> pts) {
  const size_t n = pts.size();
  if (n < 3) throw std::invalid_argument("min_width: need at least 3 points");
  std::vector<Vec2> poly(pts.begin(), pts.end());
  double area2 = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const Vec2 &a = poly[i], &b = poly[(i + 1) % n];
    area2 += a.x * b.y - b.x * a.y;
  }
  if (area2 < 0) std::reverse(poly.begin(), poly.end());

  // Rotating calipers: the farthest vertex from each edge advances
  // monotonically as the edge advances.
  auto edge_dist = [&](size_t e, size_t v) {
    const Vec2 &a = poly[e], &b = poly[(e + 1) % n];
    const double len = distance(a, b);
    return std::abs(cross(a, b, poly[v])) / len;
  };
  double best = std::numeric_limits<double>::infinity();
  size_t far = 1;
  for (size_t e = 0; e < n; ++e) {
    while (edge_dist(e, (far + 1) % n) > edge_dist(e, far)) far = (far + 1) % n;
    best = std::min(best, edge_dist(e, far));
  }
  return best;
}

namespace {

std::string fmt(double v) {
  // Normalize negative zero so output is byte-stable.
  if (v == 0.0) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

struct Transform {
  double scale = 1.0, tx = 0.0, ty = 0.0;
  Vec2 apply(const Vec2& p) const { return {p.x * scale + tx, -p.y * scale + ty}; }
};

}  // namespace

std::string render_svg(const PolygonRealization& rz, const RenderStyle& style) {
  for (const Vec2& p : rz.polygon_vertices)
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw std::invalid_argument("render_svg: non-finite polygon coordinates");
  for (const Vec2& p : rz.star_vertices)
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw std::invalid_argument("render_svg: non-finite star coordinates");

  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  bool first = true;
  auto extend = [&](const Vec2& p) {
    if (first) {
      min_x = max_x = p.x;
      min_y = max_y = p.y;
      first = false;
    } else {
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, p.y);
      max_y = std::max(max_y, p.y);
    }
  };
  for (const Vec2& p : rz.polygon_vertices) extend(p);
  for (const Vec2& p : rz.star_vertices) extend(p);
  if (first) throw std::invalid_argument("render_svg: nothing to draw");

  const double canvas = style.canvas_size;
  const double margin = canvas * 0.05;
  const double span = std::max({max_x - min_x, max_y - min_y, 1e-12});
  Transform tr;
  tr.scale = (canvas - 2 * margin) / span;
  tr.tx = margin - min_x * tr.scale + (canvas - 2 * margin - (max_x - min_x) * tr.scale) / 2;
  tr.ty = canvas - margin + min_y * tr.scale -
          (canvas - 2 * margin - (max_y - min_y) * tr.scale) / 2;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << style.canvas_size << "\" height=\"" << style.canvas_size << "\" viewBox=\"0 0 "
      << style.canvas_size << " " << style.canvas_size << "\">\n";

  const std::string sw = fmt(style.stroke_width);
  const int r = static_cast<int>(rz.star_vertices.size());

  if (style.show_arcs && r >= 3) {
    svg << "  <g id=\"arcs\" fill=\"none\" stroke=\"#888888\" stroke-width=\"" << sw
        << "\">\n";
    const double radius = tr.scale;  // unit radius in canvas units
    for (int m = 0; m < r; ++m) {
      const Vec2 center = rz.star_vertices[(2 * m + 1) % r];
      const Vec2 start = rz.star_vertices[(2 * m) % r];
      const Vec2 end = rz.star_vertices[(2 * m + 2) % r];
      const double ax = start.x - center.x, ay = start.y - center.y;
      const double bx = end.x - center.x, by = end.y - center.y;
      const double sweep = std::atan2(ax * by - ay * bx, ax * bx + ay * by);
      const Vec2 s = tr.apply(start), e = tr.apply(end);
      // y is flipped, so a positive mathematical sweep is SVG sweep flag 0.
      svg << "    <path d=\"M " << fmt(s.x) << " " << fmt(s.y) << " A " << fmt(radius)
          << " " << fmt(radius) << " 0 0 " << (sweep > 0 ? 0 : 1) << " " << fmt(e.x) << " "
          << fmt(e.y) << "\"/>\n";
    }
    svg << "  </g>\n";
  }

  if (style.show_polygon && !rz.polygon_vertices.empty()) {
    svg << "  <g id=\"polygon\" fill=\"none\" stroke=\"#000000\" stroke-width=\"" << sw
        << "\">\n    <path d=\"";
    for (size_t i = 0; i < rz.polygon_vertices.size(); ++i) {
      const Vec2 p = tr.apply(rz.polygon_vertices[i]);
      svg << (i == 0 ? "M " : " L ") << fmt(p.x) << " " << fmt(p.y);
    }
    svg << " Z\"/>\n  </g>\n";
  }

  if (style.show_chords && r >= 2) {
    svg << "  <g id=\"chords\" stroke=\"#c02020\" stroke-width=\"" << sw << "\">\n";
    for (int j = 0; j < r; ++j) {
      const Vec2 a = tr.apply(rz.star_vertices[j]);
      const Vec2 b = tr.apply(rz.star_vertices[(j + 1) % r]);
      svg << "    <line x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(a.y) << "\" x2=\""
          << fmt(b.x) << "\" y2=\"" << fmt(b.y) << "\"/>\n";
    }
    svg << "  </g>\n";
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace reinhardt

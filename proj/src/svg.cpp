#include "tropbal/svg.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <sstream>
#include <utility>

namespace tropbal {

namespace {

constexpr double kCanvas = 400.0;
constexpr double kMargin = 20.0;

std::string num(double v) {
  if (v == 0.0) v = 0.0;  // drop negative zero
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

struct Point {
  double x, y;
};

// Liang-Barsky clip of p + t*d, t in [0, tmax], against the box.
std::optional<std::pair<Point, Point>> clip(Point p, Point d, double tmax, const PlotBox& box) {
  double t0 = 0.0, t1 = tmax;
  const double lo[2] = {box.xmin, box.ymin};
  const double hi[2] = {box.xmax, box.ymax};
  const double pp[2] = {p.x, p.y};
  const double dd[2] = {d.x, d.y};
  for (int k = 0; k < 2; ++k) {
    if (dd[k] == 0.0) {
      if (pp[k] < lo[k] || pp[k] > hi[k]) return std::nullopt;
      continue;
    }
    double ta = (lo[k] - pp[k]) / dd[k];
    double tb = (hi[k] - pp[k]) / dd[k];
    if (ta > tb) std::swap(ta, tb);
    t0 = std::max(t0, ta);
    t1 = std::min(t1, tb);
  }
  if (t0 > t1 || !std::isfinite(t1)) return std::nullopt;
  return std::make_pair(Point{p.x + t0 * d.x, p.y + t0 * d.y}, Point{p.x + t1 * d.x, p.y + t1 * d.y});
}

}  // namespace

std::string render_svg(const TropicalCurve& curve, const PlotBox& box) {
  if (curve.dimension() != 2) throw InvalidInput("only planar curves can be plotted");
  if (!(box.xmax > box.xmin) || !(box.ymax > box.ymin)) throw InvalidInput("empty plot box");

  const double sx = (kCanvas - 2 * kMargin) / (box.xmax - box.xmin);
  const double sy = (kCanvas - 2 * kMargin) / (box.ymax - box.ymin);
  auto px = [&](double x) { return kMargin + (x - box.xmin) * sx; };
  auto py = [&](double y) { return kCanvas - kMargin - (y - box.ymin) * sy; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(kCanvas)
      << "\" height=\"" << num(kCanvas) << "\" viewBox=\"0 0 " << num(kCanvas) << " "
      << num(kCanvas) << "\">\n"
      << "  <defs>\n"
      << "    <marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" "
         "markerHeight=\"6\" orient=\"auto\">\n"
      << "      <polygon points=\"0,0 10,5 0,10\" fill=\"black\"/>\n"
      << "    </marker>\n"
      << "  </defs>\n"
      << "  <rect x=\"0\" y=\"0\" width=\"" << num(kCanvas) << "\" height=\"" << num(kCanvas)
      << "\" fill=\"white\"/>\n";

  out << "  <g id=\"axes\" stroke=\"gray\" stroke-width=\"1\" stroke-dasharray=\"2,3\">\n";
  if (box.ymin <= 0.0 && 0.0 <= box.ymax) {
    out << "    <line x1=\"" << num(px(box.xmin)) << "\" y1=\"" << num(py(0)) << "\" x2=\""
        << num(px(box.xmax)) << "\" y2=\"" << num(py(0)) << "\"/>\n";
  }
  if (box.xmin <= 0.0 && 0.0 <= box.xmax) {
    out << "    <line x1=\"" << num(px(0)) << "\" y1=\"" << num(py(box.ymin)) << "\" x2=\""
        << num(px(0)) << "\" y2=\"" << num(py(box.ymax)) << "\"/>\n";
  }
  out << "  </g>\n";

  std::ostringstream labels;
  out << "  <g id=\"edges\" stroke=\"black\" stroke-width=\"2\" fill=\"none\">\n";
  const auto& edges = curve.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& edge = edges[e];
    const RatVec& a = curve.vertices()[edge.ends[0]];
    const Point p{a[0].get_d(), a[1].get_d()};
    std::optional<std::pair<Point, Point>> seg;
    if (edge.is_ray()) {
      const Point d{static_cast<double>(edge.direction[0]), static_cast<double>(edge.direction[1])};
      // Any finite tmax past the box works; use a bound covering it.
      const double reach = std::abs(p.x) + std::abs(p.y) + (box.xmax - box.xmin) +
                           (box.ymax - box.ymin) + std::abs(box.xmin) + std::abs(box.ymin) +
                           std::abs(box.xmax) + std::abs(box.ymax);
      seg = clip(p, d, reach, box);
    } else {
      const RatVec& b = curve.vertices()[edge.ends[1]];
      seg = clip(p, Point{b[0].get_d() - p.x, b[1].get_d() - p.y}, 1.0, box);
    }
    out << "    <path id=\"edge-" << e << "\" d=\"";
    if (seg) {
      out << "M " << num(px(seg->first.x)) << " " << num(py(seg->first.y)) << " L "
          << num(px(seg->second.x)) << " " << num(py(seg->second.y));
    }
    out << "\"";
    if (edge.is_ray()) out << " marker-end=\"url(#arrow)\"";
    out << "/>\n";
    if (seg && edge.weight > 1) {
      const double mx = px((seg->first.x + seg->second.x) / 2) + 6.0;
      const double my = py((seg->first.y + seg->second.y) / 2) - 6.0;
      labels << "    <text x=\"" << num(mx) << "\" y=\"" << num(my) << "\">" << edge.weight
             << "</text>\n";
    }
  }
  out << "  </g>\n";
  out << "  <g id=\"weights\" font-family=\"sans-serif\" font-size=\"14\" fill=\"black\">\n"
      << labels.str() << "  </g>\n";

  out << "  <g id=\"vertices\" fill=\"black\">\n";
  for (const auto& v : curve.vertices()) {
    const double x = v[0].get_d(), y = v[1].get_d();
    if (x < box.xmin || x > box.xmax || y < box.ymin || y > box.ymax) continue;
    out << "    <circle cx=\"" << num(px(x)) << "\" cy=\"" << num(py(y)) << "\" r=\"3\"/>\n";
  }
  out << "  </g>\n</svg>\n";
  return out.str();
}

}  // namespace tropbal

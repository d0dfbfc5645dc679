#include "tropbal/newton.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>

namespace tropbal {

namespace {

std::string point_str(const LatticePoint& p) {
  return "(" + std::to_string(p[0]) + "," + std::to_string(p[1]) + ")";
}

struct Lifted {
  LatticePoint a;
  Rational height;
};

std::vector<Lifted> lifted_support(const LaurentPolynomialK& f) {
  if (f.dimension() != 2) {
    throw InvalidInput("curve extraction needs a bivariate polynomial, got " +
                       std::to_string(f.dimension()) + " variables");
  }
  if (f.is_zero()) throw InvalidInput("zero polynomial has no tropical curve");
  const TropicalPolynomial g = tropicalize_poly(f);
  std::vector<Lifted> out;
  for (const auto& piece : g.pieces()) {
    out.push_back({{piece.a[0], piece.a[1]}, piece.c});
  }
  return out;
}

// Ray along the outer normal of the clockwise hull edge p -> q.
std::pair<IntVec, std::int64_t> outer_normal(const LatticePoint& p, const LatticePoint& q) {
  const IntVec u{p[1] - q[1], q[0] - p[0]};
  const std::int64_t w = content(u);
  return {primitive_vector(u), w};
}

// Collinear support: the subdivision is a subdivision of a segment and the
// curve is a family of parallel lines, each a vertex with two opposite rays.
TropicalCurve line_arrangement(const std::vector<Lifted>& pts, const NewtonPolygon& poly) {
  const LatticePoint origin = poly.hull[0];
  const IntVec d = primitive_vector(IntVec{poly.hull[1][0] - origin[0], poly.hull[1][1] - origin[1]});
  const Rational norm2 = make_rational(d[0] * d[0] + d[1] * d[1]);
  const std::size_t axis = d[0] != 0 ? 0 : 1;

  std::vector<std::pair<std::int64_t, Rational>> lifted;
  for (const auto& p : pts) lifted.emplace_back((p.a[axis] - origin[axis]) / d[axis], p.height);
  std::sort(lifted.begin(), lifted.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });

  std::vector<std::pair<std::int64_t, Rational>> chain;
  for (const auto& pt : lifted) {
    while (chain.size() >= 2) {
      const auto& [s1, c1] = chain[chain.size() - 2];
      const auto& [s2, c2] = chain.back();
      // Pop unless chain.back() lies strictly above the chord to pt.
      const Rational turn = make_rational(s2 - s1) * (pt.second - c1) -
                            (c2 - c1) * make_rational(pt.first - s1);
      if (turn >= 0) {
        chain.pop_back();
      } else {
        break;
      }
    }
    chain.push_back(pt);
  }

  const IntVec normal{-d[1], d[0]};
  const IntVec opposite{d[1], -d[0]};
  std::vector<RatVec> vertices;
  std::vector<CurveEdge> edges;
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    const auto& [si, ci] = chain[k];
    const auto& [sj, cj] = chain[k + 1];
    const Rational level = (ci - cj) / make_rational(sj - si);
    const Rational scale = level / norm2;
    vertices.push_back({scale * make_rational(d[0]), scale * make_rational(d[1])});
    const std::size_t v = vertices.size() - 1;
    edges.push_back({{v}, normal, sj - si});
    edges.push_back({{v}, opposite, sj - si});
  }
  return TropicalCurve(2, std::move(vertices), std::move(edges));
}

std::optional<RatVec> tie_point(const Lifted& p, const Lifted& q, const Lifted& r) {
  const std::int64_t e1x = q.a[0] - p.a[0], e1y = q.a[1] - p.a[1];
  const std::int64_t e2x = r.a[0] - p.a[0], e2y = r.a[1] - p.a[1];
  const std::int64_t det = e1x * e2y - e1y * e2x;
  if (det == 0) return std::nullopt;
  const Rational r1 = p.height - q.height;
  const Rational r2 = p.height - r.height;
  const Rational inv = Rational(1) / make_rational(det);
  return RatVec{(r1 * make_rational(e2y) - r2 * make_rational(e1y)) * inv,
                (r2 * make_rational(e1x) - r1 * make_rational(e2x)) * inv};
}

TropicalCurve subdivision_dual(const std::vector<Lifted>& pts) {
  std::vector<AffinePiece> pieces;
  for (const auto& p : pts) pieces.push_back({{p.a[0], p.a[1]}, p.height});
  const TropicalPolynomial g(2, pieces);
  // g's pieces are sorted by exponent; re-read them so indices agree.
  std::vector<LatticePoint> support;
  for (const auto& piece : g.pieces()) support.push_back({piece.a[0], piece.a[1]});

  // Each 2-cell of the upper hull is the argmax set at its dual vertex, so
  // scanning tie points of non-collinear triples finds every cell.
  std::map<RatVec, std::vector<LatticePoint>> cells;
  const auto& gp = g.pieces();
  auto lifted_at = [&](std::size_t k) {
    return Lifted{support[k], gp[k].c};
  };
  for (std::size_t i = 0; i < gp.size(); ++i) {
    for (std::size_t j = i + 1; j < gp.size(); ++j) {
      for (std::size_t k = j + 1; k < gp.size(); ++k) {
        auto x = tie_point(lifted_at(i), lifted_at(j), lifted_at(k));
        if (!x || cells.count(*x)) continue;
        const Evaluation ev = eval(g, *x);
        if (!std::binary_search(ev.argmax.begin(), ev.argmax.end(), i)) continue;
        std::vector<LatticePoint> cell;
        for (auto idx : ev.argmax) cell.push_back(support[idx]);
        cells.emplace(std::move(*x), std::move(cell));
      }
    }
  }

  std::vector<RatVec> vertices;
  using SegmentKey = std::pair<LatticePoint, LatticePoint>;
  struct Side {
    std::size_t vertex;
    IntVec direction;
    std::int64_t weight;
  };
  std::map<SegmentKey, std::vector<Side>> sides;
  for (const auto& [x, cell_points] : cells) {
    const std::size_t v = vertices.size();
    vertices.push_back(x);
    const NewtonPolygon cell = newton_polygon(cell_points);
    const auto& h = cell.hull;
    for (std::size_t k = 0; k < h.size(); ++k) {
      const LatticePoint& p = h[k];
      const LatticePoint& q = h[(k + 1) % h.size()];
      auto [dir, w] = outer_normal(p, q);
      sides[std::minmax(p, q)].push_back({v, std::move(dir), w});
    }
  }

  std::vector<CurveEdge> edges;
  for (const auto& [segment, list] : sides) {
    if (list.size() == 1) {
      edges.push_back({{list[0].vertex}, list[0].direction, list[0].weight});
    } else if (list.size() == 2) {
      edges.push_back({{list[0].vertex, list[1].vertex}, list[0].direction, list[0].weight});
    } else {
      throw std::logic_error("subdivision edge " + point_str(segment.first) + "-" +
                             point_str(segment.second) + " bounds more than two cells");
    }
  }
  return TropicalCurve(2, std::move(vertices), std::move(edges));
}

}  // namespace

NewtonPolygon newton_polygon(std::vector<LatticePoint> support) {
  if (support.empty()) throw InvalidInput("Newton polygon of an empty support");
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());

  NewtonPolygon poly;
  poly.support = support;
  if (support.size() == 1) {
    poly.hull = support;
    return poly;
  }

  // Andrew's monotone chain, strict turns only, counterclockwise.
  std::vector<LatticePoint> ccw(2 * support.size());
  std::size_t k = 0;
  for (const auto& p : support) {
    while (k >= 2 && cross(ccw[k - 2], ccw[k - 1], p) <= 0) --k;
    ccw[k++] = p;
  }
  for (std::size_t i = support.size() - 1, lower = k + 1; i-- > 0;) {
    const auto& p = support[i];
    while (k >= lower && cross(ccw[k - 2], ccw[k - 1], p) <= 0) --k;
    ccw[k++] = p;
  }
  ccw.resize(k - 1);

  // Reverse to clockwise while keeping the smallest point first.
  poly.hull.push_back(ccw[0]);
  for (std::size_t i = ccw.size(); i-- > 1;) poly.hull.push_back(ccw[i]);
  return poly;
}

NewtonPolygon newton_polygon(const LaurentPolynomialK& f) {
  if (f.dimension() != 2) throw InvalidInput("Newton polygon needs a bivariate polynomial");
  if (f.is_zero()) throw InvalidInput("Newton polygon of the zero polynomial");
  std::vector<LatticePoint> support;
  for (const auto& [e, c] : f.terms()) support.push_back({e[0], e[1]});
  return newton_polygon(std::move(support));
}

TropicalCurve::TropicalCurve(std::size_t n, std::vector<RatVec> vertices,
                             std::vector<CurveEdge> edges)
    : n_(n) {
  if (n == 0) throw InvalidInput("curve dimension must be positive");
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (vertices[v].size() != n) {
      throw InvalidInput("vertices[" + std::to_string(v) + "] has dimension " +
                         std::to_string(vertices[v].size()) + ", expected " + std::to_string(n));
    }
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto& edge = edges[e];
    const std::string where = "edges[" + std::to_string(e) + "]";
    if (edge.ends.size() != 1 && edge.ends.size() != 2) {
      throw InvalidInput(where + ".ends must list one or two vertices");
    }
    for (auto idx : edge.ends) {
      if (idx >= vertices.size()) throw InvalidInput(where + ".ends refers to a missing vertex");
    }
    if (edge.direction.size() != n) throw InvalidInput(where + ".dir has the wrong dimension");
    if (!is_primitive(edge.direction)) throw InvalidInput(where + ".dir is not primitive");
    if (edge.weight < 1) throw InvalidInput(where + ".weight must be a positive integer");
    if (edge.ends.size() == 2) {
      const RatVec& a = vertices[edge.ends[0]];
      const RatVec& b = vertices[edge.ends[1]];
      RatVec diff(n), back(n);
      for (std::size_t i = 0; i < n; ++i) {
        diff[i] = b[i] - a[i];
        back[i] = a[i] - b[i];
      }
      Rational t;
      if (is_nonneg_multiple(diff, edge.direction, &t) && t > 0) {
        // as given
      } else if (is_nonneg_multiple(back, edge.direction, &t) && t > 0) {
        std::swap(edge.ends[0], edge.ends[1]);
      } else {
        throw InvalidInput(where + ".dir is not parallel to its endpoints' difference");
      }
    }
  }

  std::vector<std::size_t> order(vertices.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t l, std::size_t r) { return vertices[l] < vertices[r]; });
  std::vector<std::size_t> remap(vertices.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    remap[order[i]] = i;
    vertices_.push_back(std::move(vertices[order[i]]));
    if (i > 0 && vertices_[i] == vertices_[i - 1]) throw InvalidInput("duplicate vertex");
  }

  for (auto& edge : edges) {
    for (auto& idx : edge.ends) idx = remap[idx];
    if (edge.ends.size() == 2 && edge.ends[0] > edge.ends[1]) {
      std::swap(edge.ends[0], edge.ends[1]);
      for (auto& x : edge.direction) x = -x;
    }
  }
  auto second_end = [](const CurveEdge& e) { return e.ends.size() == 2 ? e.ends[1] : 0; };
  std::sort(edges.begin(), edges.end(), [&](const CurveEdge& l, const CurveEdge& r) {
    const std::size_t ls = l.ends.size(), rs = r.ends.size();
    const std::size_t l2 = second_end(l), r2 = second_end(r);
    return std::tie(l.ends[0], l.direction, ls, l2) < std::tie(r.ends[0], r.direction, rs, r2);
  });
  for (auto& edge : edges) {
    if (!edges_.empty() && edges_.back().ends == edge.ends &&
        edges_.back().direction == edge.direction) {
      edges_.back().weight += edge.weight;
    } else {
      edges_.push_back(std::move(edge));
    }
  }
}

bool TropicalCurve::contains(std::span<const Rational> x) const {
  if (x.size() != n_) throw InvalidInput("point dimension does not match curve");
  for (const auto& v : vertices_) {
    if (std::equal(v.begin(), v.end(), x.begin())) return true;
  }
  RatVec u(n_);
  for (const auto& edge : edges_) {
    const RatVec& base = vertices_[edge.ends[0]];
    for (std::size_t i = 0; i < n_; ++i) u[i] = x[i] - base[i];
    Rational t;
    if (!is_nonneg_multiple(u, edge.direction, &t)) continue;
    if (edge.is_ray()) return true;
    Rational length;
    RatVec span(n_);
    const RatVec& tip = vertices_[edge.ends[1]];
    for (std::size_t i = 0; i < n_; ++i) span[i] = tip[i] - base[i];
    is_nonneg_multiple(span, edge.direction, &length);
    if (t <= length) return true;
  }
  return false;
}

TropicalCurve conical_tropicalization(const LaurentPolynomialK& f) {
  const std::vector<Lifted> pts = lifted_support(f);
  for (const auto& p : pts) {
    if (p.height != pts.front().height) {
      throw InvalidInput("coefficient valuations differ; the tropicalization is not conical "
                         "(use the dual construction)");
    }
  }
  std::vector<LatticePoint> support;
  for (const auto& p : pts) support.push_back(p.a);
  const NewtonPolygon poly = newton_polygon(std::move(support));

  std::vector<CurveEdge> rays;
  const auto& h = poly.hull;
  if (h.size() >= 2) {
    for (std::size_t k = 0; k < h.size(); ++k) {
      auto [dir, w] = outer_normal(h[k], h[(k + 1) % h.size()]);
      rays.push_back({{0}, std::move(dir), w});
    }
  }
  return TropicalCurve(2, {RatVec{Rational(0), Rational(0)}}, std::move(rays));
}

TropicalCurve dual_tropicalization(const LaurentPolynomialK& f) {
  const std::vector<Lifted> pts = lifted_support(f);
  if (pts.size() < 2) throw InvalidInput("a monomial has an empty corner locus");
  std::vector<LatticePoint> support;
  for (const auto& p : pts) support.push_back(p.a);
  const NewtonPolygon poly = newton_polygon(std::move(support));
  if (poly.hull.size() == 2) return line_arrangement(pts, poly);
  return subdivision_dual(pts);
}

}  // namespace tropbal

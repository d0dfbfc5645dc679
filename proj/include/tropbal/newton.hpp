#pragma once

// Planar tropical curves from bivariate polynomials: the Newton polygon,
// the conical (constant-coefficient) recipe, and the general construction
// dual to the regular subdivision induced by coefficient valuations.

#include "tropbal/lattice.hpp"
#include "tropbal/troppoly.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace tropbal {

struct NewtonPolygon {
  /// Sorted, distinct support points.
  std::vector<LatticePoint> support;
  /// Extreme points in clockwise order, starting from the lexicographically
  /// smallest one. A segment hull has two entries, a point hull one.
  std::vector<LatticePoint> hull;
};

NewtonPolygon newton_polygon(std::vector<LatticePoint> support);
NewtonPolygon newton_polygon(const LaurentPolynomialK& f);

/// An edge of a tropical curve. A ray has one endpoint; a bounded edge has
/// two and its direction points from ends[0] towards ends[1].
struct CurveEdge {
  std::vector<std::size_t> ends;
  IntVec direction;
  std::int64_t weight = 1;

  bool is_ray() const { return ends.size() == 1; }

  friend bool operator==(const CurveEdge&, const CurveEdge&) = default;
};

/// Weighted one-dimensional polyhedral complex in R^n.
///
/// The constructor validates and canonicalizes: vertices sorted
/// lexicographically, bounded edges oriented from the lower vertex index,
/// edges sorted by (first end, direction), and edges with identical
/// support merged by adding weights. Bounded edges given with a reversed
/// direction are accepted and flipped.
class TropicalCurve {
 public:
  TropicalCurve(std::size_t n, std::vector<RatVec> vertices, std::vector<CurveEdge> edges);

  std::size_t dimension() const { return n_; }
  const std::vector<RatVec>& vertices() const { return vertices_; }
  const std::vector<CurveEdge>& edges() const { return edges_; }

  /// Exact membership of x in the union of vertices, rays and segments.
  bool contains(std::span<const Rational> x) const;

  friend bool operator==(const TropicalCurve&, const TropicalCurve&) = default;

 private:
  std::size_t n_;
  std::vector<RatVec> vertices_;
  std::vector<CurveEdge> edges_;
};

/// Constant-valuation case: one vertex at the origin and one ray per edge
/// of the Newton polygon, pointing along its outer normal, weighted by the
/// edge's lattice length. Throws if coefficient valuations differ.
TropicalCurve conical_tropicalization(const LaurentPolynomialK& f);

/// Corner locus of tropicalize_poly(f) as a weighted complex: one vertex per
/// 2-cell of the regular subdivision, one bounded edge per interior edge,
/// one ray per boundary edge. Requires n = 2 and at least two support
/// points.
TropicalCurve dual_tropicalization(const LaurentPolynomialK& f);

}  // namespace tropbal

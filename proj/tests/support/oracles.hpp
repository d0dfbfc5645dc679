#pragma once

// Independent reference computations. Nothing here calls eval(), the hull
// code or the curve constructions; only val() and exact arithmetic.

#include "support/builders.hpp"
#include "tropbal/newton.hpp"

#include <map>
#include <numeric>
#include <optional>
#include <string>

namespace tropbal::testing {

/// Number of monomials of f attaining max_a (<a, x> - val(coeff_a)).
inline std::size_t brute_tie_count(const LaurentPolynomialK& f, const RatVec& x) {
  std::optional<Rational> best;
  std::size_t ties = 0;
  for (const auto& [a, c] : f.terms()) {
    Rational v = -val(c).value();
    for (std::size_t i = 0; i < a.size(); ++i) v += Rational(static_cast<long>(a[i])) * x[i];
    if (!best || v > *best) {
      best = v;
      ties = 1;
    } else if (v == *best) {
      ++ties;
    }
  }
  return ties;
}

inline bool brute_on_corner(const LaurentPolynomialK& f, const RatVec& x) {
  return brute_tie_count(f, x) >= 2;
}

/// Rational grid {lo + k/denom} in both coordinates, inclusive.
inline std::vector<RatVec> grid(std::int64_t lo, std::int64_t hi, std::int64_t denom) {
  std::vector<RatVec> pts;
  for (std::int64_t i = lo * denom; i <= hi * denom; ++i) {
    for (std::int64_t j = lo * denom; j <= hi * denom; ++j) {
      pts.push_back({make_rational(i, denom), make_rational(j, denom)});
    }
  }
  return pts;
}

struct GridReport {
  std::size_t checked = 0;
  std::size_t corner_points = 0;
  std::size_t discrepancies = 0;
  std::string first;
};

/// Compares brute-force corner-locus membership with exact membership in
/// the curve at every grid point.
inline GridReport compare_on_grid(const LaurentPolynomialK& f, const TropicalCurve& curve,
                                  const std::vector<RatVec>& pts) {
  GridReport r;
  for (const auto& x : pts) {
    ++r.checked;
    const bool corner = brute_on_corner(f, x);
    if (corner) ++r.corner_points;
    if (corner != curve.contains(x)) {
      if (r.discrepancies++ == 0) {
        r.first = "(" + format_rational(x[0]) + ", " + format_rational(x[1]) + ") corner=" +
                  (corner ? "yes" : "no");
      }
    }
  }
  return r;
}

/// Vertices plus a few rational points on every edge.
inline std::vector<RatVec> edge_samples(const TropicalCurve& c) {
  std::vector<RatVec> out(c.vertices().begin(), c.vertices().end());
  for (const auto& e : c.edges()) {
    const RatVec& a = c.vertices()[e.ends[0]];
    std::vector<Rational> ts;
    RatVec span(c.dimension());
    if (e.is_ray()) {
      ts = {make_rational(1, 3), Rational(1), make_rational(7, 2)};
      for (std::size_t i = 0; i < span.size(); ++i) span[i] = make_rational(e.direction[i]);
    } else {
      ts = {make_rational(1, 3), make_rational(1, 2), make_rational(5, 6)};
      const RatVec& b = c.vertices()[e.ends[1]];
      for (std::size_t i = 0; i < span.size(); ++i) span[i] = b[i] - a[i];
    }
    for (const auto& t : ts) {
      RatVec p(a);
      for (std::size_t i = 0; i < p.size(); ++i) p[i] += t * span[i];
      out.push_back(std::move(p));
    }
  }
  return out;
}

/// Rays of a conical tropical curve by brute force: for every primitive
/// direction d with entries in [-range, range], the face of the support
/// maximizing <a, d> is an edge iff it has two or more points, and its
/// lattice length is the ray weight.
inline std::map<IntVec, std::int64_t> conical_rays_oracle(const std::vector<LatticePoint>& support,
                                                          std::int64_t range) {
  std::map<IntVec, std::int64_t> rays;
  for (std::int64_t dx = -range; dx <= range; ++dx) {
    for (std::int64_t dy = -range; dy <= range; ++dy) {
      if (std::gcd(dx, dy) != 1) continue;
      std::optional<std::int64_t> best;
      std::vector<LatticePoint> face;
      for (const auto& p : support) {
        const std::int64_t v = p[0] * dx + p[1] * dy;
        if (!best || v > *best) {
          best = v;
          face.assign(1, p);
        } else if (v == *best) {
          face.push_back(p);
        }
      }
      if (face.size() < 2) continue;
      std::sort(face.begin(), face.end());
      rays[{dx, dy}] = std::gcd(face.back()[0] - face.front()[0], face.back()[1] - face.front()[1]);
    }
  }
  return rays;
}

inline std::map<IntVec, std::int64_t> ray_weights(const TropicalCurve& c) {
  std::map<IntVec, std::int64_t> out;
  for (const auto& e : c.edges()) {
    if (e.is_ray()) out[e.direction] += e.weight;
  }
  return out;
}

}  // namespace tropbal::testing

#include "tropbal/lattice.hpp"

#include <numeric>

namespace tropbal {

std::int64_t content(std::span<const std::int64_t> v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  return g;
}

bool is_primitive(std::span<const std::int64_t> v) { return content(v) == 1; }

IntVec primitive_vector(std::span<const std::int64_t> v) {
  const std::int64_t g = content(v);
  if (g == 0) throw InvalidInput("zero vector has no primitive direction");
  IntVec out(v.begin(), v.end());
  for (auto& x : out) x /= g;
  return out;
}

std::int64_t lattice_length(const LatticePoint& p, const LatticePoint& q) {
  const std::array<std::int64_t, 2> d{q[0] - p[0], q[1] - p[1]};
  return content(d);
}

std::int64_t cross(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

bool is_nonneg_multiple(std::span<const Rational> u, std::span<const std::int64_t> d,
                        Rational* scale) {
  if (u.size() != d.size()) return false;
  // Pick the scale from the first nonzero entry of d, then check every entry.
  Rational t = 0;
  bool found = false;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] != 0) {
      t = u[i] / make_rational(d[i]);
      found = true;
      break;
    }
  }
  if (!found) return false;
  if (t < 0) return false;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (u[i] != t * make_rational(d[i])) return false;
  }
  if (scale) *scale = t;
  return true;
}

}  // namespace tropbal

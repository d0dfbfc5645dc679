#pragma once

// Rays, fans, torus-bundle descriptors and the divisor-class algebra of a
// toric variety bundle pi: Y -> B.
//
// The base B is represented only through a rank-r lattice of base classes
// and its pairing with the curve class beta = pi_*[Z]. The horizontal
// divisors D_rho and the pulled-back classes pi^*gamma generate the divisor
// group, subject to one relation per fiber basis vector e_i:
//
//     sum_rho <e_i, v_rho> D_rho = pi^* c_1(L_i).

#include "tropbal/rational.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <vector>

namespace tropbal {

/// Primitive nonzero integer vector spanning a ray of a fan.
class Ray {
 public:
  /// Throws InvalidInput unless v is primitive.
  explicit Ray(IntVec v);

  const IntVec& v() const { return v_; }
  std::size_t dimension() const { return v_.size(); }
  /// <e_i, v>, the i-th coordinate.
  std::int64_t coord(std::size_t i) const { return v_.at(i); }

  friend bool operator==(const Ray&, const Ray&) = default;
  friend auto operator<=>(const Ray&, const Ray&) = default;

 private:
  IntVec v_;
};

/// w / gcd(w). Throws on the zero vector.
Ray primitive(const IntVec& w);

/// Ordered, duplicate-free list of rays in Z^n. Completeness and
/// smoothness of a full fan are not checked.
class Fan1Skeleton {
 public:
  Fan1Skeleton(std::size_t n, std::vector<Ray> rays);

  std::size_t dimension() const { return n_; }
  const std::vector<Ray>& rays() const { return rays_; }
  bool contains(const Ray& r) const;

 private:
  std::size_t n_;
  std::vector<Ray> rays_;
};

/// n line bundles L_1..L_n on the base, each given by the coordinates of
/// c_1(L_i) in a rank-r lattice of base classes.
struct BundleDescriptor {
  std::size_t n = 0;
  std::size_t r = 0;
  std::vector<IntVec> chern;

  BundleDescriptor(std::size_t n, std::size_t r, std::vector<IntVec> chern);

  /// c_1(L_i) . beta.
  std::int64_t chern_pairing(std::size_t i, const IntVec& beta) const;
};

/// beta = pi_*[Z] in coordinates dual to the base lattice.
struct CurveClassData {
  IntVec beta;
};

/// sum_rho horiz[rho] D_rho + pi^*(base). Zero horizontal coefficients are
/// never stored.
struct DivisorClass {
  std::map<Ray, std::int64_t> horiz;
  IntVec base;

  DivisorClass() = default;
  DivisorClass(std::map<Ray, std::int64_t> horiz, IntVec base);

  std::int64_t coefficient(const Ray& r) const;

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator*(std::int64_t k, const DivisorClass& d);

/// The class sum_rho <e_i, v_rho> D_rho - pi^* c_1(L_i), which vanishes in
/// the divisor group. `i` is zero-based.
DivisorClass relation(const BundleDescriptor& bundle, const Fan1Skeleton& fan, std::size_t i);

/// Indices into fan.rays() of the n rays whose coefficients reduce() clears.
///
/// Rays are scanned in fan order and taken greedily while they stay linearly
/// independent. If that basis is not unimodular, the lexicographically first
/// unimodular n-subset is used instead, when one exists.
std::vector<std::size_t> pivot_rays(const Fan1Skeleton& fan);

/// Normal form modulo the relations: pivot-ray coefficients become zero and
/// everything else is carried by non-pivot rays and the base vector.
/// Throws if the rays do not span, or if the pivot basis has index > 1 and
/// the required multiples of the relations are not integral.
DivisorClass reduce(const DivisorClass& d, const BundleDescriptor& bundle, const Fan1Skeleton& fan);

/// sum_rho d.horiz[rho] * w_rho + d.base . beta, using D_rho . Z = w_rho and
/// pi^*gamma . Z = gamma . beta. Missing weights count as zero.
std::int64_t intersect_curve(const DivisorClass& d, const std::map<Ray, std::int64_t>& weights,
                             const CurveClassData& beta);

}  // namespace tropbal

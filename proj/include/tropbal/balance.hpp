#pragma once

#include "tropbal/fanbundle.hpp"
#include "tropbal/newton.hpp"

#include <map>
#include <vector>

namespace tropbal {

/// rho -> omega_rho >= 0. Rays without an entry have weight zero.
struct WeightFunction {
  std::map<Ray, std::int64_t> entries;

  std::int64_t at(const Ray& r) const;

  friend bool operator==(const WeightFunction&, const WeightFunction&) = default;
};

/// Residual of a balancing equation, one coordinate per basis vector e_i.
struct DefectVector {
  IntVec coords;

  bool balanced() const;

  friend bool operator==(const DefectVector&, const DefectVector&) = default;
};

/// Per vertex (same indexing as curve.vertices()), the sum of w_e * v_e over
/// incident edges, each oriented away from the vertex.
std::vector<DefectVector> local_balance(const TropicalCurve& curve);

/// coords[i] = sum_rho (v_rho)_i w_rho - c_1(L_i) . beta, evaluated as the
/// pairing of relation(i) with the curve.
DefectVector bundle_balance(const WeightFunction& weights, const BundleDescriptor& bundle,
                            const Fan1Skeleton& fan, const CurveClassData& beta);

/// Both sides of the bundle balancing equations, computed directly from the
/// ray coordinates and the Chern pairings.
struct BalancingSides {
  IntVec weighted_sum;  // sum_rho w_rho v_rho
  IntVec chern_side;    // (c_1(L_i) . beta)_i
};

BalancingSides balancing_sides(const WeightFunction& weights, const BundleDescriptor& bundle,
                               const Fan1Skeleton& fan, const CurveClassData& beta);

/// Every weight function with all w_rho in [0, bound] that balances, in
/// lexicographic order of (w_rho) listed in fan order. Each result carries an
/// entry for every fan ray, zeros included.
std::vector<WeightFunction> solve_weights(const BundleDescriptor& bundle, const Fan1Skeleton& fan,
                                          const CurveClassData& beta, std::int64_t bound);

}  // namespace tropbal

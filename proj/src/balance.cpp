#include "tropbal/balance.hpp"

#include <algorithm>
#include <string>

namespace tropbal {

namespace {

void check_weights(const WeightFunction& weights, const Fan1Skeleton& fan) {
  for (const auto& [ray, w] : weights.entries) {
    if (w < 0) throw InvalidInput("weights must be nonnegative");
    if (!fan.contains(ray)) throw InvalidInput("weight given for a ray outside the fan");
  }
}

void check_shapes(const BundleDescriptor& bundle, const Fan1Skeleton& fan,
                  const CurveClassData& beta) {
  if (fan.dimension() != bundle.n) throw InvalidInput("fan dimension does not match bundle rank");
  if (beta.beta.size() != bundle.r) {
    throw InvalidInput("beta has length " + std::to_string(beta.beta.size()) +
                       ", expected picard_rank " + std::to_string(bundle.r));
  }
}

}  // namespace

std::int64_t WeightFunction::at(const Ray& r) const {
  auto it = entries.find(r);
  return it == entries.end() ? 0 : it->second;
}

bool DefectVector::balanced() const {
  return std::all_of(coords.begin(), coords.end(), [](std::int64_t x) { return x == 0; });
}

std::vector<DefectVector> local_balance(const TropicalCurve& curve) {
  const std::size_t n = curve.dimension();
  std::vector<DefectVector> out(curve.vertices().size(), DefectVector{IntVec(n, 0)});
  for (const auto& edge : curve.edges()) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::int64_t step = edge.weight * edge.direction[i];
      out[edge.ends[0]].coords[i] += step;
      if (!edge.is_ray()) out[edge.ends[1]].coords[i] -= step;
    }
  }
  return out;
}

DefectVector bundle_balance(const WeightFunction& weights, const BundleDescriptor& bundle,
                            const Fan1Skeleton& fan, const CurveClassData& beta) {
  check_shapes(bundle, fan, beta);
  check_weights(weights, fan);
  DefectVector d{IntVec(bundle.n, 0)};
  for (std::size_t i = 0; i < bundle.n; ++i) {
    d.coords[i] = intersect_curve(relation(bundle, fan, i), weights.entries, beta);
  }
  return d;
}

BalancingSides balancing_sides(const WeightFunction& weights, const BundleDescriptor& bundle,
                               const Fan1Skeleton& fan, const CurveClassData& beta) {
  check_shapes(bundle, fan, beta);
  check_weights(weights, fan);
  BalancingSides s{IntVec(bundle.n, 0), IntVec(bundle.n, 0)};
  for (const auto& [ray, w] : weights.entries) {
    for (std::size_t i = 0; i < bundle.n; ++i) s.weighted_sum[i] += w * ray.coord(i);
  }
  for (std::size_t i = 0; i < bundle.n; ++i) s.chern_side[i] = bundle.chern_pairing(i, beta.beta);
  return s;
}

std::vector<WeightFunction> solve_weights(const BundleDescriptor& bundle, const Fan1Skeleton& fan,
                                          const CurveClassData& beta, std::int64_t bound) {
  check_shapes(bundle, fan, beta);
  if (bound < 0) throw InvalidInput("bound must be nonnegative");
  const auto& rays = fan.rays();
  const std::size_t m = rays.size();
  const std::size_t n = bundle.n;

  IntVec target(n);
  for (std::size_t i = 0; i < n; ++i) target[i] = bundle.chern_pairing(i, beta.beta);

  // reach_lo/hi[k][i]: range of sum over rays k.. of w * (v)_i.
  std::vector<IntVec> reach_lo(m + 1, IntVec(n, 0)), reach_hi(m + 1, IntVec(n, 0));
  for (std::size_t k = m; k-- > 0;) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::int64_t c = rays[k].coord(i) * bound;
      reach_lo[k][i] = reach_lo[k + 1][i] + std::min<std::int64_t>(0, c);
      reach_hi[k][i] = reach_hi[k + 1][i] + std::max<std::int64_t>(0, c);
    }
  }

  std::vector<WeightFunction> out;
  IntVec w(m, 0);
  IntVec partial(n, 0);
  auto feasible = [&](std::size_t k) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::int64_t need = target[i] - partial[i];
      if (need < reach_lo[k][i] || need > reach_hi[k][i]) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, std::size_t k) -> void {
    if (!feasible(k)) return;
    if (k == m) {
      WeightFunction f;
      for (std::size_t j = 0; j < m; ++j) f.entries[rays[j]] = w[j];
      out.push_back(std::move(f));
      return;
    }
    for (std::int64_t x = 0; x <= bound; ++x) {
      w[k] = x;
      for (std::size_t i = 0; i < n; ++i) partial[i] += x * rays[k].coord(i);
      self(self, k + 1);
      for (std::size_t i = 0; i < n; ++i) partial[i] -= x * rays[k].coord(i);
    }
    w[k] = 0;
  };
  search(search, 0);
  return out;
}

}  // namespace tropbal

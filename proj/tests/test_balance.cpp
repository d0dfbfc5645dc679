#include "support/builders.hpp"
#include "tropbal/balance.hpp"

#include <doctest.h>

#include <functional>
#include <set>

using namespace tropbal;
using namespace tropbal::testing;

namespace {

const Ray kPlus{IntVec{1}};
const Ray kMinus{IntVec{-1}};

Fan1Skeleton p1_fan() { return Fan1Skeleton(1, {kPlus, kMinus}); }

WeightFunction p1_weights(std::int64_t plus, std::int64_t minus) {
  return WeightFunction{{{kPlus, plus}, {kMinus, minus}}};
}

// Box enumeration without pruning, for cross-checking solve_weights.
void for_each_box_point(const Fan1Skeleton& fan, std::int64_t bound,
                        const std::function<void(const WeightFunction&)>& fn) {
  const std::size_t m = fan.rays().size();
  IntVec w(m, 0);
  while (true) {
    WeightFunction f;
    for (std::size_t j = 0; j < m; ++j) f.entries[fan.rays()[j]] = w[j];
    fn(f);
    std::size_t k = m;
    while (k > 0 && w[k - 1] == bound) w[--k] = 0;
    if (k == 0) return;
    ++w[k - 1];
  }
}

}  // namespace

TEST_CASE("local balance of the running example") {
  const auto c = conical_tropicalization(example_curve());
  const auto d = local_balance(c);
  REQUIRE(d.size() == 1);
  CHECK(d[0].coords == IntVec{0, 0});
  CHECK(d[0].balanced());
}

TEST_CASE("two perpendicular rays are unbalanced") {
  const TropicalCurve c(2, {point({q(0), q(0)})}, {{{0}, {1, 0}, 1}, {{0}, {0, 1}, 1}});
  const auto d = local_balance(c);
  CHECK(d[0].coords == IntVec{1, 1});
  CHECK_FALSE(d[0].balanced());
}

TEST_CASE("bounded edges count outward at both ends") {
  const auto f = poly(2, {{{1, 0}, cst(1)}, {{0, 1}, cst(1)}, {{1, 1}, cst(1)}, {{0, 0}, tpow(q(1))}});
  const auto d = local_balance(dual_tropicalization(f));
  REQUIRE(d.size() == 2);
  CHECK(d[0].coords == IntVec{0, 0});
  CHECK(d[1].coords == IntVec{0, 0});

  const TropicalCurve seg(2, {point({q(0), q(0)}), point({q(3), q(0)})}, {{{0, 1}, {1, 0}, 2}});
  const auto s = local_balance(seg);
  CHECK(s[0].coords == IntVec{2, 0});
  CHECK(s[1].coords == IntVec{-2, 0});
}

TEST_CASE("local balance of random dual tropicalizations vanishes") {
  Random rng(0xb0b);
  const std::vector<Rational> vals{q(0), q(1), q(-3, 2), q(2, 3), q(5)};
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = random_polynomial(rng, rng.support(rng.integer(2, 10), -6, 6), vals);
    for (const auto& d : local_balance(dual_tropicalization(f))) CHECK(d.balanced());
  }
}

TEST_CASE("Hirzebruch bundle balance") {
  const BundleDescriptor b(1, 1, {{2}});
  CHECK(bundle_balance(p1_weights(3, 1), b, p1_fan(), {{1}}).balanced());
  const DefectVector off = bundle_balance(p1_weights(3, 2), b, p1_fan(), {{1}});
  CHECK(off.coords == IntVec{-1});
  CHECK_FALSE(off.balanced());
}

TEST_CASE("trivial bundle recovers classical balancing") {
  const Fan1Skeleton fan(2, {Ray({-1, 0}), Ray({1, 2}), Ray({0, -1})});
  const BundleDescriptor trivial(2, 1, {{0}, {0}});
  const WeightFunction w{{{Ray({-1, 0}), 1}, {Ray({1, 2}), 1}, {Ray({0, -1}), 2}}};
  const DefectVector d = bundle_balance(w, trivial, fan, {{1}});
  CHECK(d.coords == IntVec{0, 0});
  CHECK(d.balanced());
}

TEST_CASE("beta = 0 degenerates to the classical condition") {
  const BundleDescriptor b(1, 1, {{5}});
  CHECK(bundle_balance(p1_weights(2, 2), b, p1_fan(), {{0}}).balanced());
  CHECK(bundle_balance(p1_weights(2, 1), b, p1_fan(), {{0}}).coords == IntVec{1});
}

TEST_CASE("bundle balance validates shapes") {
  const BundleDescriptor b(1, 1, {{1}});
  CHECK_THROWS_AS(bundle_balance(p1_weights(1, 0), b, p1_fan(), {{1, 0}}), InvalidInput);
  CHECK_THROWS_AS(bundle_balance(p1_weights(-1, 0), b, p1_fan(), {{1}}), InvalidInput);
  const WeightFunction foreign{{{Ray({1, 0}), 1}}};
  CHECK_THROWS_AS(bundle_balance(foreign, b, p1_fan(), {{1}}), InvalidInput);
  CHECK_THROWS_AS(bundle_balance(p1_weights(1, 0), BundleDescriptor(2, 1, {{1}, {1}}), p1_fan(), {{1}}),
                  InvalidInput);
}

TEST_CASE("solve_weights examples") {
  const CurveClassData beta{{1}};
  auto as_pairs = [](const std::vector<WeightFunction>& sols) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (const auto& w : sols) out.emplace_back(w.at(kPlus), w.at(kMinus));
    return out;
  };
  using Pairs = std::vector<std::pair<std::int64_t, std::int64_t>>;
  CHECK(as_pairs(solve_weights(BundleDescriptor(1, 1, {{2}}), p1_fan(), beta, 3)) ==
        Pairs{{2, 0}, {3, 1}});
  CHECK(as_pairs(solve_weights(BundleDescriptor(1, 1, {{0}}), p1_fan(), beta, 1)) ==
        Pairs{{0, 0}, {1, 1}});
  CHECK(solve_weights(BundleDescriptor(1, 1, {{-1}}), Fan1Skeleton(1, {kPlus}), beta, 3).empty());
  CHECK_THROWS_AS(solve_weights(BundleDescriptor(1, 1, {{0}}), p1_fan(), beta, -1), InvalidInput);
}

TEST_CASE("solve_weights returns full-domain entries in lexicographic order") {
  const Fan1Skeleton fan(2, {Ray({1, 0}), Ray({0, 1}), Ray({-1, -1})});
  const BundleDescriptor b(2, 1, {{1}, {0}});
  const auto sols = solve_weights(b, fan, {{1}}, 4);
  REQUIRE(!sols.empty());
  for (std::size_t k = 0; k < sols.size(); ++k) {
    CHECK(sols[k].entries.size() == 3);
    if (k > 0) {
      IntVec prev, cur;
      for (const auto& r : fan.rays()) {
        prev.push_back(sols[k - 1].at(r));
        cur.push_back(sols[k].at(r));
      }
      CHECK(prev < cur);
    }
  }
}

TEST_CASE("solve_weights matches exhaustive enumeration") {
  Random rng(0x5017e);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = rng.integer(1, 2), r = rng.integer(1, 2);
    const Fan1Skeleton fan = random_fan(rng, n, 2);
    const BundleDescriptor b = random_bundle(rng, n, r);
    CurveClassData beta{IntVec(r)};
    for (auto& x : beta.beta) x = rng.integer(-1, 2);
    const std::int64_t bound = 3;
    const auto sols = solve_weights(b, fan, beta, bound);
    std::vector<WeightFunction> brute;
    for_each_box_point(fan, bound, [&](const WeightFunction& w) {
      if (bundle_balance(w, b, fan, beta).balanced()) brute.push_back(w);
    });
    CHECK(sols.size() == brute.size());
    std::set<IntVec> found, expected;
    for (const auto& w : sols) {
      IntVec v;
      for (const auto& ray : fan.rays()) v.push_back(w.at(ray));
      found.insert(v);
    }
    for (const auto& w : brute) {
      IntVec v;
      for (const auto& ray : fan.rays()) v.push_back(w.at(ray));
      expected.insert(v);
    }
    CHECK(found == expected);
  }
}

TEST_CASE("direct sums agree with the relation pairing") {
  Random rng(0xd1ec7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = rng.integer(1, 3), r = rng.integer(1, 2);
    const Fan1Skeleton fan = random_fan(rng, n, 3);
    const BundleDescriptor b = random_bundle(rng, n, r);
    const WeightFunction w = random_weights(rng, fan, 6);
    CurveClassData beta{IntVec(r)};
    for (auto& x : beta.beta) x = rng.integer(-3, 3);
    const DefectVector d = bundle_balance(w, b, fan, beta);
    const BalancingSides s = balancing_sides(w, b, fan, beta);
    for (std::size_t i = 0; i < n; ++i) CHECK(d.coords[i] == s.weighted_sum[i] - s.chern_side[i]);
  }
}

TEST_CASE("scaling weights and beta preserves balancedness") {
  Random rng(0x5ca1e);
  for (int trial = 0; trial < 40; ++trial) {
    const Fan1Skeleton fan = random_fan(rng, 2, 1);
    const BundleDescriptor b = random_bundle(rng, 2, 1);
    const CurveClassData beta{{rng.integer(0, 2)}};
    for (const auto& w : solve_weights(b, fan, beta, 2)) {
      for (std::int64_t m = 1; m <= 3; ++m) {
        WeightFunction scaled = w;
        for (auto& [ray, x] : scaled.entries) x *= m;
        CHECK(bundle_balance(scaled, b, fan, {{m * beta.beta[0]}}).balanced());
      }
    }
  }
}

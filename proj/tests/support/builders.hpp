#pragma once

// Test-only helpers for writing series, polynomials and random instances
// compactly.

#include "tropbal/balance.hpp"
#include "tropbal/lattice.hpp"
#include "tropbal/puiseux.hpp"
#include "tropbal/troppoly.hpp"

#include <algorithm>
#include <initializer_list>
#include <random>
#include <set>
#include <string>
#include <utility>

namespace tropbal::testing {

inline Rational q(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

/// Series from (coefficient, exponent) pairs.
inline PuiseuxSeries series(std::initializer_list<std::pair<Rational, Rational>> terms) {
  PuiseuxSeries s;
  for (const auto& [c, e] : terms) s = s + PuiseuxSeries::monomial(c, e);
  return s;
}

inline PuiseuxSeries cst(std::int64_t c) { return PuiseuxSeries::constant(q(c)); }

/// c * t^e
inline PuiseuxSeries tpow(const Rational& e, const Rational& c = Rational(1)) {
  return PuiseuxSeries::monomial(c, e);
}

struct Term {
  IntVec exponent;
  PuiseuxSeries coeff;
};

inline LaurentPolynomialK poly(std::size_t n, std::initializer_list<Term> terms) {
  LaurentPolynomialK f(n);
  for (const auto& t : terms) f.add_term(t.exponent, t.coeff);
  return f;
}

/// z1^2 + z2 - 1, the running example.
inline LaurentPolynomialK example_curve() {
  return poly(2, {{{2, 0}, cst(1)}, {{0, 1}, cst(1)}, {{0, 0}, cst(-1)}});
}

inline std::string describe(const LaurentPolynomialK& f) {
  std::string out;
  for (const auto& [e, c] : f.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(c) + ")*z^[";
    for (std::size_t i = 0; i < e.size(); ++i) out += (i ? "," : "") + std::to_string(e[i]);
    out += "]";
  }
  return out;
}

inline RatVec point(std::initializer_list<Rational> xs) { return RatVec(xs); }

class Random {
 public:
  explicit Random(std::uint64_t seed) : gen_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen_);
  }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(std::int64_t num_range, std::int64_t max_den) {
    return make_rational(integer(-num_range, num_range), integer(1, max_den));
  }
  Rational nonzero_rational(std::int64_t num_range, std::int64_t max_den) {
    std::int64_t n = 0;
    while (n == 0) n = integer(-num_range, num_range);
    return make_rational(n, integer(1, max_den));
  }

  /// Up to max_terms terms, exponents p/q with |p| <= 6, q <= 3.
  PuiseuxSeries series(std::size_t max_terms, bool allow_zero = true) {
    while (true) {
      PuiseuxSeries s;
      const std::size_t k = integer(allow_zero ? 0 : 1, static_cast<std::int64_t>(max_terms));
      for (std::size_t i = 0; i < k; ++i) {
        s = s + PuiseuxSeries::monomial(nonzero_rational(5, 3), rational(6, 3));
      }
      if (allow_zero || !s.is_zero()) return s;
    }
  }

  /// 1 or a small nonzero constant plus positive-valuation terms.
  PuiseuxSeries unit() {
    PuiseuxSeries u = PuiseuxSeries::constant(nonzero_rational(7, 4));
    const std::size_t extra = integer(0, 3);
    for (std::size_t i = 0; i < extra; ++i) {
      u = u + PuiseuxSeries::monomial(nonzero_rational(5, 3), make_rational(integer(1, 8), integer(1, 3)));
    }
    return u;
  }

  /// Distinct lattice points in [lo, hi]^2.
  std::vector<LatticePoint> support(std::size_t count, std::int64_t lo, std::int64_t hi) {
    std::set<LatticePoint> pts;
    while (pts.size() < count) pts.insert({integer(lo, hi), integer(lo, hi)});
    return {pts.begin(), pts.end()};
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

/// Polynomial with the given support and coefficients c * t^v, v drawn from
/// `valuations` (or 0 for all terms when `valuations` is empty).
inline LaurentPolynomialK random_polynomial(Random& rng, const std::vector<LatticePoint>& support,
                                            const std::vector<Rational>& valuations) {
  LaurentPolynomialK f(2);
  for (const auto& p : support) {
    const Rational v = valuations.empty()
                           ? Rational(0)
                           : valuations[rng.integer(0, static_cast<std::int64_t>(valuations.size()) - 1)];
    f.add_term({p[0], p[1]}, PuiseuxSeries::monomial(rng.nonzero_rational(5, 1), v));
  }
  return f;
}

}  // namespace tropbal::testing

namespace tropbal::testing {

/// A fan containing e_1..e_n and -(e_1+...+e_n), plus up to `extra`
/// random primitive rays with entries in [-2, 2].
inline Fan1Skeleton random_fan(Random& rng, std::size_t n, std::size_t extra) {
  std::vector<Ray> rays;
  auto add = [&](IntVec v) {
    Ray r(std::move(v));
    if (std::find(rays.begin(), rays.end(), r) == rays.end()) rays.push_back(std::move(r));
  };
  const auto lead = rng.integer(0, static_cast<std::int64_t>(extra));
  for (std::int64_t k = 0; k < lead; ++k) {
    IntVec v(n);
    do {
      for (auto& x : v) x = rng.integer(-2, 2);
    } while (content(v) != 1);
    add(v);
  }
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    add(e);
  }
  add(IntVec(n, -1));
  for (std::size_t k = lead; k < extra; ++k) {
    IntVec v(n);
    do {
      for (auto& x : v) x = rng.integer(-2, 2);
    } while (content(v) != 1);
    add(v);
  }
  return Fan1Skeleton(n, std::move(rays));
}

inline BundleDescriptor random_bundle(Random& rng, std::size_t n, std::size_t r) {
  std::vector<IntVec> chern(n, IntVec(r));
  for (auto& c : chern) {
    for (auto& x : c) x = rng.integer(-3, 3);
  }
  return BundleDescriptor(n, r, std::move(chern));
}

inline WeightFunction random_weights(Random& rng, const Fan1Skeleton& fan, std::int64_t bound) {
  WeightFunction w;
  for (const auto& ray : fan.rays()) w.entries[ray] = rng.integer(0, bound);
  return w;
}

inline DivisorClass random_divisor(Random& rng, const Fan1Skeleton& fan, std::size_t r) {
  std::map<Ray, std::int64_t> horiz;
  for (const auto& ray : fan.rays()) horiz[ray] = rng.integer(-4, 4);
  IntVec base(r);
  for (auto& x : base) x = rng.integer(-4, 4);
  return DivisorClass(std::move(horiz), std::move(base));
}

}  // namespace tropbal::testing

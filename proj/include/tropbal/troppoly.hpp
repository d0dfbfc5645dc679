#pragma once

#include "tropbal/puiseux.hpp"
#include "tropbal/rational.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace tropbal {

/// One affine piece x -> <a, x> + c of a max-plus polynomial.
struct AffinePiece {
  IntVec a;
  Rational c;

  friend bool operator==(const AffinePiece&, const AffinePiece&) = default;
};

/// Max-plus polynomial g(x) = max_k (<a_k, x> + c_k).
///
/// Pieces are kept sorted by exponent vector. Duplicate exponents are merged
/// by keeping the larger constant.
class TropicalPolynomial {
 public:
  TropicalPolynomial(std::size_t n, std::vector<AffinePiece> pieces);

  std::size_t dimension() const { return n_; }
  const std::vector<AffinePiece>& pieces() const { return pieces_; }

  friend bool operator==(const TropicalPolynomial&, const TropicalPolynomial&) = default;

 private:
  std::size_t n_;
  std::vector<AffinePiece> pieces_;
};

/// Laurent polynomial in n variables with Puiseux-series coefficients.
class LaurentPolynomialK {
 public:
  using TermMap = std::map<IntVec, PuiseuxSeries>;

  explicit LaurentPolynomialK(std::size_t n);
  LaurentPolynomialK(std::size_t n, TermMap terms);

  /// Adds coeff * z^exponent; coefficients that cancel to zero are dropped.
  LaurentPolynomialK& add_term(const IntVec& exponent, const PuiseuxSeries& coeff);

  std::size_t dimension() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Substitutes a K-point. Negative exponents require the matching
  /// coordinate to be a monomial.
  PuiseuxSeries evaluate(std::span<const PuiseuxSeries> z) const;

  friend bool operator==(const LaurentPolynomialK&, const LaurentPolynomialK&) = default;

 private:
  std::size_t n_;
  TermMap terms_;
};

struct Evaluation {
  Rational value;
  /// Indices into TropicalPolynomial::pieces() attaining the maximum, ascending.
  std::vector<std::size_t> argmax;
};

/// Pieces (a, -val(coefficient at a)) over the support of f.
TropicalPolynomial tropicalize_poly(const LaurentPolynomialK& f);

Evaluation eval(const TropicalPolynomial& g, std::span<const Rational> x);

/// True iff the maximum at x is attained by at least two pieces.
bool on_corner_locus(const TropicalPolynomial& g, std::span<const Rational> x);

/// A K-point of a torus bundle written in one local trivialization: an
/// opaque chart label, base coordinates, and the fiber coordinates z_i.
struct BundlePoint {
  std::size_t chart = 0;
  RatVec base;
  std::vector<PuiseuxSeries> fiber;
};

/// (-val(z_1), ..., -val(z_n)). Throws if some z_i is zero.
RatVec val_map(std::span<const PuiseuxSeries> fiber);
RatVec val_map(const BundlePoint& p);

/// Rewrites p in another chart: each fiber coordinate is multiplied by the
/// transition factor h_i(b), which must be nonzero of valuation zero.
BundlePoint change_chart(const BundlePoint& p, std::size_t chart,
                         std::span<const PuiseuxSeries> transition);

}  // namespace tropbal

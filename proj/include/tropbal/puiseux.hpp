#pragma once

#include "tropbal/rational.hpp"

#include <map>

namespace tropbal {

/// Finite Puiseux series sum_q a_q t^q over the rationals.
///
/// Only finitely many terms are stored, so the exponent set is automatically
/// bounded below with finitely many denominators. The term map never holds a
/// zero coefficient; two series are equal iff their term maps are equal.
class PuiseuxSeries {
 public:
  /// exponent -> coefficient, ordered by increasing exponent.
  using TermMap = std::map<Rational, Rational>;

  PuiseuxSeries() = default;
  explicit PuiseuxSeries(TermMap terms);

  static PuiseuxSeries constant(const Rational& c);
  static PuiseuxSeries monomial(const Rational& coeff, const Rational& exponent);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  /// Coefficient of the lowest-order term. Throws on the zero series.
  const Rational& leading_coefficient() const;

  /// Integer power. Negative exponents are allowed only for monomials,
  /// the sole units of the finite-support ring.
  PuiseuxSeries pow(std::int64_t k) const;

  friend PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator-(const PuiseuxSeries& a);
  friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b) = default;

 private:
  TermMap terms_;
};

/// Exponent of the leading term; +infinity for the zero series.
ExtRational val(const PuiseuxSeries& s);

PuiseuxSeries add(const PuiseuxSeries& a, const PuiseuxSeries& b);
PuiseuxSeries mul(const PuiseuxSeries& a, const PuiseuxSeries& b);

/// Human-readable form such as "3*t^(1/2) - t^2", mostly for diagnostics.
std::string to_string(const PuiseuxSeries& s);

}  // namespace tropbal

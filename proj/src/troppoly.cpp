#include "tropbal/troppoly.hpp"

#include <algorithm>
#include <string>

namespace tropbal {

TropicalPolynomial::TropicalPolynomial(std::size_t n, std::vector<AffinePiece> pieces) : n_(n) {
  if (n == 0) throw InvalidInput("tropical polynomial dimension must be positive");
  if (pieces.empty()) throw InvalidInput("tropical polynomial needs at least one piece");
  std::map<IntVec, Rational> merged;
  for (auto& p : pieces) {
    if (p.a.size() != n) {
      throw InvalidInput("piece exponent has length " + std::to_string(p.a.size()) +
                         ", expected " + std::to_string(n));
    }
    auto [it, inserted] = merged.try_emplace(p.a, p.c);
    if (!inserted && p.c > it->second) it->second = p.c;
  }
  pieces_.reserve(merged.size());
  for (auto& [a, c] : merged) pieces_.push_back({a, c});
}

LaurentPolynomialK::LaurentPolynomialK(std::size_t n) : n_(n) {
  if (n == 0) throw InvalidInput("polynomial dimension must be positive");
}

LaurentPolynomialK::LaurentPolynomialK(std::size_t n, TermMap terms) : LaurentPolynomialK(n) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPolynomialK& LaurentPolynomialK::add_term(const IntVec& exponent,
                                                 const PuiseuxSeries& coeff) {
  if (exponent.size() != n_) {
    throw InvalidInput("exponent has length " + std::to_string(exponent.size()) + ", expected " +
                       std::to_string(n_));
  }
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) it->second = it->second + coeff;
  if (it->second.is_zero()) terms_.erase(it);
  return *this;
}

PuiseuxSeries LaurentPolynomialK::evaluate(std::span<const PuiseuxSeries> z) const {
  if (z.size() != n_) throw InvalidInput("point dimension does not match polynomial");
  PuiseuxSeries sum;
  for (const auto& [e, c] : terms_) {
    PuiseuxSeries term = c;
    for (std::size_t i = 0; i < n_; ++i) {
      if (e[i] != 0) term = term * z[i].pow(e[i]);
    }
    sum = sum + term;
  }
  return sum;
}

TropicalPolynomial tropicalize_poly(const LaurentPolynomialK& f) {
  if (f.is_zero()) throw InvalidInput("cannot tropicalize the zero polynomial");
  std::vector<AffinePiece> pieces;
  pieces.reserve(f.terms().size());
  for (const auto& [e, c] : f.terms()) pieces.push_back({e, Rational(-val(c).value())});
  return TropicalPolynomial(f.dimension(), std::move(pieces));
}

Evaluation eval(const TropicalPolynomial& g, std::span<const Rational> x) {
  if (x.size() != g.dimension()) {
    throw InvalidInput("point has dimension " + std::to_string(x.size()) + ", polynomial has " +
                       std::to_string(g.dimension()));
  }
  Evaluation out;
  const auto& pieces = g.pieces();
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    Rational v = pieces[k].c;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (pieces[k].a[i] != 0) v += make_rational(pieces[k].a[i]) * x[i];
    }
    if (out.argmax.empty() || v > out.value) {
      out.value = v;
      out.argmax.assign(1, k);
    } else if (v == out.value) {
      out.argmax.push_back(k);
    }
  }
  return out;
}

bool on_corner_locus(const TropicalPolynomial& g, std::span<const Rational> x) {
  return eval(g, x).argmax.size() >= 2;
}

RatVec val_map(std::span<const PuiseuxSeries> fiber) {
  RatVec out;
  out.reserve(fiber.size());
  for (std::size_t i = 0; i < fiber.size(); ++i) {
    if (fiber[i].is_zero()) {
      throw InvalidInput("fiber coordinate " + std::to_string(i) +
                         " is zero; the point is not in the torus bundle");
    }
    out.push_back(-val(fiber[i]).value());
  }
  return out;
}

RatVec val_map(const BundlePoint& p) { return val_map(p.fiber); }

BundlePoint change_chart(const BundlePoint& p, std::size_t chart,
                         std::span<const PuiseuxSeries> transition) {
  if (transition.size() != p.fiber.size()) {
    throw InvalidInput("transition has " + std::to_string(transition.size()) +
                       " factors for a rank " + std::to_string(p.fiber.size()) + " bundle");
  }
  BundlePoint out{chart, p.base, {}};
  out.fiber.reserve(p.fiber.size());
  for (std::size_t i = 0; i < transition.size(); ++i) {
    if (val(transition[i]) != ExtRational(Rational(0))) {
      throw InvalidInput("transition factor " + std::to_string(i) + " is not a unit");
    }
    out.fiber.push_back(transition[i] * p.fiber[i]);
  }
  return out;
}

}  // namespace tropbal

#include "tropbal/puiseux.hpp"

#include <stdexcept>

namespace tropbal {

namespace {

void accumulate(PuiseuxSeries::TermMap& terms, const Rational& exp, const Rational& coeff) {
  auto [it, inserted] = terms.try_emplace(exp, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
  } else if (coeff == 0) {
    terms.erase(it);
  }
}

}  // namespace

PuiseuxSeries::PuiseuxSeries(TermMap terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

PuiseuxSeries PuiseuxSeries::constant(const Rational& c) { return monomial(c, Rational(0)); }

PuiseuxSeries PuiseuxSeries::monomial(const Rational& coeff, const Rational& exponent) {
  return PuiseuxSeries(TermMap{{exponent, coeff}});
}

const Rational& PuiseuxSeries::leading_coefficient() const {
  if (terms_.empty()) throw std::logic_error("leading coefficient of the zero series");
  return terms_.begin()->second;
}

PuiseuxSeries PuiseuxSeries::pow(std::int64_t k) const {
  if (k < 0) {
    if (!is_monomial()) {
      throw InvalidInput("negative power of a non-monomial Puiseux series " + to_string(*this));
    }
    const auto& [e, c] = *terms_.begin();
    Rational inv_c = 1 / c;
    PuiseuxSeries base = monomial(inv_c, -e);
    return base.pow(-k);
  }
  PuiseuxSeries result = constant(Rational(1));
  PuiseuxSeries base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  PuiseuxSeries::TermMap terms = a.terms_;
  for (const auto& [e, c] : b.terms_) accumulate(terms, e, c);
  PuiseuxSeries out;
  out.terms_ = std::move(terms);
  return out;
}

PuiseuxSeries operator-(const PuiseuxSeries& a) {
  PuiseuxSeries out = a;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a + (-b); }

PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  PuiseuxSeries::TermMap terms;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) accumulate(terms, Rational(ea + eb), Rational(ca * cb));
  }
  PuiseuxSeries out;
  out.terms_ = std::move(terms);
  return out;
}

ExtRational val(const PuiseuxSeries& s) {
  if (s.is_zero()) return ExtRational::infinity();
  return ExtRational(s.terms().begin()->first);
}

PuiseuxSeries add(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a + b; }
PuiseuxSeries mul(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a * b; }

std::string to_string(const PuiseuxSeries& s) {
  if (s.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : s.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    const bool unit = mag == 1;
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (!unit) out += mag.get_str() + "*";
    out += "t";
    if (e != 1) out += is_integer(e) ? "^" + e.get_str() : "^(" + e.get_str() + ")";
  }
  return out;
}

}  // namespace tropbal

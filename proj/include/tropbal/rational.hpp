#pragma once

// Exact rational scalars, extended rationals (with +infinity) and the
// integer/rational vector aliases shared by every module.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tropbal {

/// Arbitrary precision rational, always kept in lowest terms with a
/// positive denominator.
using Rational = mpq_class;

using IntVec = std::vector<std::int64_t>;
using RatVec = std::vector<Rational>;

/// Raised for malformed input: wrong dimensions, bad strings, violated
/// preconditions. The CLI maps it to exit status 2.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Parses "p/q" or "p" (optional leading '-'). No decimals, no spaces.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" rendering; integers render as "p/1".
std::string format_rational(const Rational& q);

bool is_integer(const Rational& q);

/// Converts an integral rational to int64, throwing if it is not integral
/// or does not fit.
std::int64_t to_int64(const Rational& q);

RatVec to_rational(const IntVec& v);

/// A rational or +infinity. +infinity compares above every rational and
/// absorbs addition.
class ExtRational {
 public:
  ExtRational() : infinite_(true) {}
  ExtRational(Rational value) : infinite_(false), value_(std::move(value)) {}  // NOLINT

  static ExtRational infinity() { return ExtRational(); }

  bool is_infinite() const { return infinite_; }

  /// Finite value; throws std::logic_error on +infinity.
  const Rational& value() const;

  friend bool operator==(const ExtRational& a, const ExtRational& b);
  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b);
  friend ExtRational operator+(const ExtRational& a, const ExtRational& b);

 private:
  bool infinite_;
  Rational value_;
};

std::string format_ext_rational(const ExtRational& q);
std::ostream& operator<<(std::ostream& os, const ExtRational& q);

}  // namespace tropbal

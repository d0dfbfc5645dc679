#pragma once

#include "tropbal/rational.hpp"

#include <array>
#include <cstdint>
#include <span>

namespace tropbal {

using LatticePoint = std::array<std::int64_t, 2>;

/// gcd of the absolute values of the entries (0 for the zero vector).
std::int64_t content(std::span<const std::int64_t> v);

bool is_primitive(std::span<const std::int64_t> v);

/// v divided by its content. Throws on the zero vector.
IntVec primitive_vector(std::span<const std::int64_t> v);

/// Lattice length of the segment between two lattice points.
std::int64_t lattice_length(const LatticePoint& p, const LatticePoint& q);

/// Cross product (b - a) x (c - a); positive for a counterclockwise turn.
std::int64_t cross(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c);

/// True iff u is a nonnegative rational multiple of the integer vector d.
/// If `scale` is non-null it receives that multiple.
bool is_nonneg_multiple(std::span<const Rational> u, std::span<const std::int64_t> d,
                        Rational* scale = nullptr);

}  // namespace tropbal

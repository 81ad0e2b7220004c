#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "puiseux/numerical_monoid.hpp"
#include "puiseux/rational.hpp"

namespace puiseux {

// A finitely generated Puiseux monoid written as scale * N, N a numerical
// monoid. With L the lcm of the generator denominators and g the gcd of the
// integers L * g_i, scale = g / L and x -> x / scale is an isomorphism onto N.
struct CanonicalFG {
  Rat scale;
  BigInt lcm_den;   // L
  BigInt gcd_num;   // g
  // L * g_i / g, sorted and deduplicated (not necessarily minimal).
  std::vector<BigInt> reduced_generators;
  // Present when the multiplicity is small enough to tabulate.
  std::optional<NumericalMonoid> nm;

  bool has_numerical_monoid() const { return nm.has_value(); }
  // Throws InputError when the numerical monoid is out of reach.
  const NumericalMonoid& monoid() const;

  // x / scale when it is an integer.
  std::optional<BigInt> coordinate(const Rat& x) const;

  bool contains(const Rat& x) const;

  // scale * minimal generators of N: the atoms of the monoid.
  std::vector<Rat> atoms() const;

  // scale * frobenius(N): the largest element of scale * N0 outside the
  // monoid (negative, -scale, when the monoid is scale * N0).
  SignedRat frobenius() const;
};

CanonicalFG canonicalize(const std::vector<Rat>& gens);

// Multiplicity bound for building the numerical monoid inside canonicalize.
inline constexpr std::int64_t kCanonicalMultiplicityCap = std::int64_t{1} << 22;

}  // namespace puiseux

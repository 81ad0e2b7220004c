#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "puiseux/monoid_spec.hpp"
#include "puiseux/rational.hpp"

namespace puiseux {

// Largest power of a prime allowed in denominators; `infinite` wins over value.
struct Exponent {
  unsigned value = 0;
  bool infinite = false;

  static Exponent finite(unsigned e) { return {e, false}; }
  static Exponent unbounded() { return {0, true}; }
  bool allows(unsigned e) const { return infinite || e <= value; }
  std::string str() const { return infinite ? "inf" : std::to_string(value); }
  bool operator==(const Exponent&) const = default;
};

enum class GroupKind { kCyclicScaled, kLocalizedScaled, kUnknown };

// A subgroup of (Q, +).
//   kCyclicScaled:    q * Z.
//   kLocalizedScaled: n * Z[1/d : d allowed], where d is allowed iff every
//                     prime power p^e exactly dividing d has e within the
//                     exponent listed for p (or `other_primes` if unlisted).
struct GroupDescription {
  GroupKind kind = GroupKind::kUnknown;
  Rat q;
  BigInt n = 1;
  std::map<BigInt, Exponent> exponents;
  Exponent other_primes;
  std::string reason;  // set for kUnknown

  // Throws InputError for kUnknown, or when a denominator cannot be factored.
  bool contains(const SignedRat& x) const;
  // Whether d is an allowed denominator (kLocalizedScaled only).
  bool allows_denominator(const BigInt& d) const;
  std::string str() const;
};

GroupDescription difference_group(const MonoidSpec& spec);

// The root closure gp(M) ∩ Q>=0.
struct ClosureDescription {
  GroupDescription group;

  bool contains(const Rat& x) const { return group.contains(SignedRat(x)); }
  // First k generators n/d of the closure, d allowed, in increasing d. For a
  // cyclic group q*Z this is the single generator q.
  std::vector<Rat> generators(std::size_t k) const;
};

// Throws InputError when the difference group is Unknown.
ClosureDescription root_closure(const MonoidSpec& spec);

enum class GpDensityKind { kDenseNotFG, kNowhereDenseFG, kUnknown };

struct GpDensityResult {
  GpDensityKind kind = GpDensityKind::kUnknown;
  // kDenseNotFG: positive closure elements, strictly decreasing; the last is
  // below the requested bound.
  std::vector<Rat> witnesses;
  // kNowhereDenseFG: closure is step * N0.
  Rat step;
  std::string rule;
};

std::string_view gp_density_name(GpDensityKind k);

// Density of gp(M) in R (equivalently of the closure in R>=0).
GpDensityResult gp_density(const MonoidSpec& spec, const Rat& witness_below = Rat(BigInt(1), BigInt(1000000)));

enum class ConductorKind { kEqualsM, kEmpty, kTail, kUnknown };

struct ConductorResult {
  ConductorKind kind = ConductorKind::kUnknown;
  // kTail: the conductor is {x in M : x >= sigma}; sigma = scale * f(N).
  Rat sigma;
  // kTail: least element of the conductor, scale * (f(N) + 1).
  Rat minimum;
  std::string rule;
  std::string reason;  // set for kUnknown
};

std::string_view conductor_name(ConductorKind k);

ConductorResult conductor(const MonoidSpec& spec);

// Whether the monoid equals its root closure, decided from the family alone.
bool structurally_root_closed(const MonoidSpec& spec);

}  // namespace puiseux

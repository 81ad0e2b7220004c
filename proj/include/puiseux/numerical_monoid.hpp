#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace puiseux {

// A cofinite submonoid of (N0, +), held by its minimal generating set.
//
// The Apery set with respect to the smallest generator m and the Frobenius
// number are computed once at construction; the value is immutable
// afterwards. Membership of x is apery[x mod m] <= x.
class NumericalMonoid {
 public:
  // Generators are deduplicated and sorted; redundant ones are dropped.
  // Throws InputError if the list is empty, contains a value < 1, or has
  // gcd != 1 (the caller divides out the gcd first).
  static NumericalMonoid from_generators(std::span<const std::int64_t> gens);

  const std::vector<std::int64_t>& minimal_generators() const { return gens_; }
  std::int64_t multiplicity() const { return gens_.front(); }

  // Apery set w.r.t. the multiplicity.
  const std::vector<std::int64_t>& apery() const { return apery_; }

  // Apery set w.r.t. an arbitrary element m of the monoid.
  std::vector<std::int64_t> apery_set(std::int64_t m) const;

  // Largest integer not in the monoid; -1 for N0 itself.
  std::int64_t frobenius() const { return frobenius_; }

  // Least c with c + N0 contained in the monoid, i.e. frobenius() + 1.
  std::int64_t conductor() const { return frobenius_ + 1; }

  bool contains(std::int64_t x) const;

  // Gaps (nonnegative integers outside the monoid), ascending.
  std::vector<std::int64_t> gaps() const;

 private:
  NumericalMonoid() = default;

  std::vector<std::int64_t> gens_;
  std::vector<std::int64_t> apery_;
  std::int64_t frobenius_ = -1;
};

// Upper bound on the multiplicity accepted by from_generators; callers use it
// to decide whether a canonical numerical monoid is within reach.
inline constexpr std::int64_t kMaxMultiplicity = std::int64_t{1} << 23;

}  // namespace puiseux

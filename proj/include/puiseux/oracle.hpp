#pragma once

// Brute-force ground truth. Everything here trades speed for obviousness and
// shares no search code with the fast paths it is used to check.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "puiseux/atoms.hpp"
#include "puiseux/monoid_spec.hpp"
#include "puiseux/rational.hpp"

namespace puiseux {

inline constexpr std::size_t kDefaultEnumerationCap = 5'000'000;
inline constexpr std::size_t kAllGenerators = std::numeric_limits<std::size_t>::max();

struct Enumeration {
  std::vector<Rat> elements;  // M' ∩ [0, T], ascending, M' the truncation
  Rat T;
  std::size_t generator_count = 0;  // generators of the truncation
  BigInt max_coefficient = 0;       // floor(T / smallest generator used)
  // Every generator left out of the truncation exceeds T, so elements is
  // exactly M ∩ [0, T].
  bool complete = false;

  bool contains(const Rat& x) const;  // x <= T required
};

// All sums of the first `depth` generators (kAllGenerators: the whole family,
// which must be finite) that are <= T. Throws InputError("budget ...") when
// more than `cap` elements would be produced.
Enumeration enumerate(const MonoidSpec& spec, const Rat& T, std::size_t depth,
                      std::size_t cap = kDefaultEnumerationCap);

// The same over an explicit generator list; complete is set to true.
Enumeration enumerate_generators(const std::vector<Rat>& gens, const Rat& T,
                                 std::size_t cap = kDefaultEnumerationCap);

// Elements in (0, T] with no decomposition u + v into nonzero elements.
// Requires a complete enumeration.
std::vector<Rat> naive_atoms(const Enumeration& e);

// Z(x) over `atom_list` by bottom-up tabulation on the enumerated elements;
// sorted. Requires a complete enumeration, x <= T, and every atom <= x listed.
std::vector<Factorization> naive_factorizations(const Enumeration& e,
                                                const std::vector<Rat>& atom_list,
                                                const Rat& x);

}  // namespace puiseux

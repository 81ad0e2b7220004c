#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "puiseux/monoid_spec.hpp"
#include "puiseux/rational.hpp"

namespace puiseux {

struct FactorPart {
  Rat atom;
  std::int64_t multiplicity = 0;
  auto operator<=>(const FactorPart&) const = default;
};

// A formal sum of atoms. Parts are listed by descending atom, multiplicities
// are positive, and length is the sum of the multiplicities.
struct Factorization {
  std::vector<FactorPart> parts;
  std::int64_t length = 0;

  Rat value() const;
  std::string str() const;  // "2*3 + 3" style; "0" when empty
  auto operator<=>(const Factorization&) const = default;
};

enum class AtomicityKind { kAtomic, kAntimatter, kNotAtomic, kUnknown };

struct AtomicityVerdict {
  AtomicityKind kind = AtomicityKind::kUnknown;
  // Ascending. For finitely generated monoids with a finite generator list
  // this is the whole minimal generating set; otherwise the first `limit`.
  std::vector<Rat> atoms_shown;
  // More atoms exist beyond atoms_shown.
  bool truncated = false;
  std::string rule;
};

std::string_view atomicity_name(AtomicityKind k);

// Atoms of the described monoid, at most `limit` of them (limit >= 1),
// except that a FiniteGenerators spec always reports its full atom set.
AtomicityVerdict atoms(const MonoidSpec& spec, std::int64_t limit,
                       std::int64_t budget = 1'000'000);

struct FactorizationSet {
  std::vector<Factorization> items;  // canonical (DFS) order
  // False when the node budget ran out; items is then a subset of Z(x).
  bool complete = true;
  // Atoms that were searched over, descending.
  std::vector<Rat> atoms_used;
};

// Z(x). Throws InputError for antimatter monoids, for families whose atoms
// below x are not finitely enumerable, and for negative budgets.
FactorizationSet factorizations(const MonoidSpec& spec, const Rat& x,
                                std::int64_t budget);

struct LengthSet {
  std::set<std::int64_t> lengths;
  bool complete = true;
};

LengthSet length_set(const MonoidSpec& spec, const Rat& x, std::int64_t budget);

// Z(x) over an explicit atom list by depth-first search with descending
// atoms and multiplicity bound floor(remaining / atom).
FactorizationSet factor_over(std::vector<Rat> atoms, const Rat& x, std::int64_t budget);

}  // namespace puiseux

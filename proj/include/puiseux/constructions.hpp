#pragma once

// Executable versions of the example monoids: the atomically dense
// construction, Cantor endpoint shifts and the increasing catalog.

#include <cstdint>
#include <string_view>
#include <vector>

#include "puiseux/monoid_spec.hpp"
#include "puiseux/rational.hpp"

namespace puiseux {

// First `count` terms of a deterministic enumeration of positive rationals
// whose underlying set is dense in R>=0.
//   kCalkinWilf: 1, 1/2, 2, 1/3, 3/2, 2/3, 3, ... (every positive rational
//                exactly once).
//   kDyadic:     level t lists the dyadic rationals j/2^t in (0, t+1] not
//                listed before, ascending: 1, 1/2, 3/2, 2, 1/4, 3/4, ...
std::vector<Rat> seed_sequence(SeedSequence seed, std::size_t count);

SeedSequence parse_seed(std::string_view name);
std::string_view seed_name(SeedSequence seed);

struct DenseAtomEntry {
  std::int64_t k = 0;
  Rat target;           // r_k
  std::int64_t prime = 0;  // p_k
  unsigned exponent = 0;   // n_k
  BigInt numerator;        // m_k
  Rat atom;                // m_k / p_k^n_k
  Rat error;               // |r_k - atom|
};

struct DenseAtomsOutput {
  std::vector<DenseAtomEntry> entries;
  MonoidSpec spec;
};

// For k = 1..count: p_k is the k-th prime, n_k the least n with p_k^n > 2k,
// m_k = round(r_k p_k^n_k) moved to m_k + 1 when p_k | m_k and to 1 when the
// rounding gives 0.
DenseAtomsOutput build_dense_atoms(std::int64_t count, SeedSequence seed);

// Exponent n_k used for the k-th prime.
unsigned dense_atom_exponent(std::int64_t k, std::int64_t prime);

// Endpoints of the 2^depth intervals left after `depth` middle-third
// removals from [0, 1], ascending; 2^(depth+1) values a/3^depth.
std::vector<Rat> cantor_endpoints(int depth);

struct CantorOutput {
  MonoidSpec spec;
  std::vector<Rat> generators;  // 1 + E_depth, ascending
};

CantorOutput build_cantor_shift(int depth);

// Catalog forms accepted by build_increasing.
enum class IncreasingForm { kAffine, kHarmonic, kPrimeReciprocal, kGeometric };

IncreasingForm parse_increasing_form(std::string_view name);

struct IncreasingParams {
  IncreasingForm form = IncreasingForm::kAffine;
  // Affine: offset, step. Harmonic / prime-reciprocal: shift, scale.
  // Geometric: first = ratio (second unused).
  Rat first;
  Rat second;
  std::vector<Rat> prefix;
  // First tail index; default is the least admissible index (0 for affine,
  // 1 otherwise) whose term is positive and exceeds the prefix.
  std::optional<std::int64_t> start;
};

// Builds a validated increasing spec with bounded/limit metadata filled in.
// The geometric form (ratio > 1, no prefix) maps onto the Geometric family.
MonoidSpec build_increasing(const IncreasingParams& params);

}  // namespace puiseux

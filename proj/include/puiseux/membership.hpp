#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "puiseux/monoid_spec.hpp"
#include "puiseux/rational.hpp"

namespace puiseux {

enum class Membership { kIn, kOut, kUnknown };

// Why a verdict could not be decided: which truncation was searched.
struct UndecidedReason {
  std::string code;  // "truncated_search", "search_budget", "factorization"
  std::int64_t generator_depth = 0;
  std::int64_t node_budget = 0;
  std::string detail;
};

struct MemberResult {
  Membership verdict = Membership::kUnknown;
  // Set for kUnknown.
  UndecidedReason reason;
  // Human-readable note on how the verdict was reached.
  std::string method;
};

// Membership of x in the monoid generated by a finite list of positive
// rationals. Exact through the canonical numerical monoid when it is within
// reach, otherwise by a pruned coefficient search limited to `budget` nodes.
MemberResult finite_member(const std::vector<Rat>& gens, const Rat& x,
                           std::int64_t budget);

// Membership in a described monoid; see the per-family notes in the source.
MemberResult spec_member(const MonoidSpec& spec, const Rat& x, std::int64_t budget);

std::string_view membership_name(Membership m);

}  // namespace puiseux

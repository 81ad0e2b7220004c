#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "puiseux/monoid_spec.hpp"
#include "puiseux/rational.hpp"

namespace puiseux {

enum class DensityClass { kDense, kEventuallyDenseNotDense, kNowhereDense, kUnknown };

std::string_view density_class_name(DensityClass c);

struct DensityVerdict {
  DensityClass cls = DensityClass::kUnknown;
  std::string rule;  // "D1".."D6" followed by a description
  std::string note;
  // kDense: strictly decreasing generators tending to 0.
  std::vector<Rat> decreasing_witness;
  // kNowhereDense for finitely generated monoids: every element lies in
  // step * Z, so each point of M is isolated at distance step.
  std::optional<Rat> lattice_step;
};

// First matching rule of a fixed table; never consults probes.
DensityVerdict classify_density(const MonoidSpec& spec);

enum class ProbeOutcome { kEpsDense, kGapWitness, kInconclusive };

std::string_view probe_outcome_name(ProbeOutcome o);

struct ProbeReport {
  Rat lo;
  Rat hi;
  Rat epsilon;
  ProbeOutcome result = ProbeOutcome::kInconclusive;
  // Largest open gap in [lo, hi] between consecutive points, lo and hi
  // counting as points. For kGapWitness this gap contains no element of M.
  Rat gap_lo;
  Rat gap_hi;
  std::size_t elements_found = 0;
  std::size_t generator_depth = 0;
  BigInt max_coefficient = 0;
  bool complete = false;  // enumeration equals M ∩ [0, hi]
};

// Gap analysis of an explicit point set on [lo, hi]. `complete` states that
// the points are all of the set being probed within [lo, hi].
ProbeReport probe_points(const std::vector<Rat>& points, const Rat& lo, const Rat& hi,
                         const Rat& epsilon, bool complete);

// Enumerates M ∩ [0, hi] through the oracle and reports on [lo, hi].
// `budget` is the enumeration element cap (must be positive). With no
// `depth`, finite families use every generator and infinite ones try
// generator depths 1, 2, 4, ... up to 64 until the result is definite or the
// cap is hit.
ProbeReport probe_density(const MonoidSpec& spec, const Rat& lo, const Rat& hi,
                          const Rat& epsilon, std::int64_t budget,
                          std::optional<std::size_t> depth = std::nullopt);

// Probe on (n r, n s) for n = 1..n_max.
std::vector<ProbeReport> eventual_window_check(const MonoidSpec& spec, const Rat& r,
                                               const Rat& s, std::int64_t n_max,
                                               const Rat& epsilon, std::int64_t budget,
                                               std::optional<std::size_t> depth = std::nullopt);

struct IsolationEntry {
  Rat element;
  Rat radius;  // distance to the next element above
};

struct IsolationReport {
  std::vector<IsolationEntry> entries;
  std::size_t generator_depth = 0;
  // Set when the report is about the monoid generated by the first
  // `generator_depth` generators rather than M itself.
  bool truncated = false;
};

// For each element e <= T that has a larger element <= T, the gap to the
// next one. Without `depth` the enumeration of M up to T must be complete
// (else InputError "cannot certify isolation"); with `depth` the monoid
// generated by the first `depth` generators is used. `budget` is the
// enumeration element cap.
IsolationReport right_isolation(const MonoidSpec& spec, const Rat& T, std::int64_t budget,
                                std::optional<std::size_t> depth = std::nullopt);

}  // namespace puiseux

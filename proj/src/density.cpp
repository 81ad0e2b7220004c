#include "puiseux/density.hpp"

#include <algorithm>

#include "puiseux/canonical.hpp"
#include "puiseux/oracle.hpp"

namespace puiseux {

namespace {

constexpr std::size_t kWitnessLength = 20;
constexpr std::size_t kMaxProbeDepth = 64;
constexpr std::size_t kMaxIncreasingBelow = 100'000;

DensityVerdict verdict(DensityClass c, std::string rule, std::string note = {}) {
  DensityVerdict v;
  v.cls = c;
  v.rule = std::move(rule);
  v.note = std::move(note);
  return v;
}

std::vector<Rat> running_minima(const std::vector<Rat>& values) {
  std::vector<Rat> out;
  for (const Rat& v : values) {
    if (out.empty() || v < out.back()) out.push_back(v);
  }
  return out;
}

bool is_increasing_family(const MonoidSpec& spec) {
  if (spec.as<IncreasingSequence>()) return true;
  const auto* g = spec.as<Geometric>();
  return g && Rat(1) < g->ratio;
}

// Number of generators <= T of an increasing stream.
std::size_t increasing_count_below(const MonoidSpec& spec, const Rat& T) {
  for (std::size_t k = 64; k <= kMaxIncreasingBelow; k *= 2) {
    const auto gens = generator_stream(spec, k);
    if (gens.size() < k || T < gens.back()) {
      return static_cast<std::size_t>(
          std::upper_bound(gens.begin(), gens.end(), T) - gens.begin());
    }
  }
  throw InputError("cannot certify isolation: more than " +
                   std::to_string(kMaxIncreasingBelow) + " generators below T");
}

ProbeReport probe_enumeration(const Enumeration& e, const Rat& lo, const Rat& hi,
                              const Rat& epsilon) {
  ProbeReport r = probe_points(e.elements, lo, hi, epsilon, e.complete);
  r.generator_depth = e.generator_count;
  r.max_coefficient = e.max_coefficient;
  return r;
}

}  // namespace

std::string_view density_class_name(DensityClass c) {
  switch (c) {
    case DensityClass::kDense: return "Dense";
    case DensityClass::kEventuallyDenseNotDense: return "EventuallyDenseNotDense";
    case DensityClass::kNowhereDense: return "NowhereDense";
    case DensityClass::kUnknown: return "Unknown";
  }
  return "Unknown";
}

std::string_view probe_outcome_name(ProbeOutcome o) {
  switch (o) {
    case ProbeOutcome::kEpsDense: return "EpsDense";
    case ProbeOutcome::kGapWitness: return "GapWitness";
    case ProbeOutcome::kInconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

DensityVerdict classify_density(const MonoidSpec& spec) {
  // D1: 0 is a limit point of the generating set.
  if (spec.as<UnitFractionPowers>() ||
      (spec.as<Geometric>() && spec.as<Geometric>()->ratio < Rat(1))) {
    auto v = verdict(DensityClass::kDense, "D1 0 is a limit point of the generating set");
    v.decreasing_witness = generator_stream(spec, kWitnessLength);
    return v;
  }
  if (const auto* d = spec.as<DenseAtoms>()) {
    auto v = verdict(DensityClass::kDense, "D1 0 is a limit point of the generating set",
                     "atoms approximate arbitrarily small seed targets");
    v.decreasing_witness = running_minima(generator_stream(spec, static_cast<std::size_t>(d->count)));
    return v;
  }
  // D2: finitely generated, not increasing.
  if (spec.as<FiniteGenerators>() ||
      (spec.as<PrimeReciprocalShift>() && spec.as<PrimeReciprocalShift>()->max_prime)) {
    auto v = verdict(DensityClass::kNowhereDense,
                     "D2 finitely generated: isomorphic to a numerical monoid");
    v.lattice_step = canonicalize(*finite_generating_set(spec)).scale;
    return v;
  }
  // D3: strictly increasing generating sequence.
  if (is_increasing_family(spec)) {
    auto v = verdict(DensityClass::kNowhereDense,
                     "D3 generated by an increasing sequence: nowhere dense");
    if (auto fg = finite_generating_set(spec)) v.lattice_step = canonicalize(*fg).scale;
    return v;
  }
  // D4: Cantor endpoint shift at finite depth.
  if (const auto* c = spec.as<CantorShift>()) {
    auto v = verdict(DensityClass::kNowhereDense,
                     "D4 Cantor shift at finite depth: finitely generated, hence nowhere dense",
                     "limit object (depth -> infinity) is EventuallyDenseNotDense: dense in [2,4], "
                     "not dense since every generator is >= 1; depth " + std::to_string(c->depth));
    v.lattice_step = canonicalize(*finite_generating_set(spec)).scale;
    return v;
  }
  // D5: 1 + 1/p over all primes.
  if (spec.as<PrimeReciprocalShift>()) {
    return verdict(DensityClass::kUnknown, "D5 1 + 1/p over all primes: no classification rule",
                   "1 is a limit point from the right; use probe on windows near integers");
  }
  return verdict(DensityClass::kUnknown, "D6 no rule applies");
}

ProbeReport probe_points(const std::vector<Rat>& points, const Rat& lo, const Rat& hi,
                         const Rat& epsilon, bool complete) {
  if (!(lo < hi)) throw InputError("probe interval needs lo < hi");
  if (epsilon.is_zero()) throw InputError("epsilon must be positive");
  std::vector<Rat> inside;
  for (const Rat& p : points) {
    if (lo <= p && p <= hi) inside.push_back(p);
  }
  std::sort(inside.begin(), inside.end());
  inside.erase(std::unique(inside.begin(), inside.end()), inside.end());

  ProbeReport r;
  r.lo = lo;
  r.hi = hi;
  r.epsilon = epsilon;
  r.elements_found = inside.size();
  r.complete = complete;
  std::vector<Rat> marks;
  marks.reserve(inside.size() + 2);
  marks.push_back(lo);
  marks.insert(marks.end(), inside.begin(), inside.end());
  marks.push_back(hi);
  Rat best;
  for (std::size_t i = 1; i < marks.size(); ++i) {
    const Rat width = marks[i].minus(marks[i - 1]);
    if (best < width) {
      best = width;
      r.gap_lo = marks[i - 1];
      r.gap_hi = marks[i];
    }
  }
  if (best <= epsilon) {
    r.result = ProbeOutcome::kEpsDense;
  } else {
    r.result = complete ? ProbeOutcome::kGapWitness : ProbeOutcome::kInconclusive;
  }
  return r;
}

ProbeReport probe_density(const MonoidSpec& spec, const Rat& lo, const Rat& hi,
                          const Rat& epsilon, std::int64_t budget,
                          std::optional<std::size_t> depth) {
  if (budget <= 0) throw InputError("probe budget must be positive");
  const auto cap = static_cast<std::size_t>(budget);
  if (depth || family_size(spec)) {
    const std::size_t d = depth.value_or(kAllGenerators);
    return probe_enumeration(enumerate(spec, hi, d, cap), lo, hi, epsilon);
  }
  std::optional<ProbeReport> last;
  for (std::size_t d = 1; d <= kMaxProbeDepth; d *= 2) {
    try {
      last = probe_enumeration(enumerate(spec, hi, d, cap), lo, hi, epsilon);
    } catch (const InputError&) {
      if (!last) throw;
      break;
    }
    if (last->result != ProbeOutcome::kInconclusive) break;
  }
  return *last;
}

std::vector<ProbeReport> eventual_window_check(const MonoidSpec& spec, const Rat& r,
                                               const Rat& s, std::int64_t n_max,
                                               const Rat& epsilon, std::int64_t budget,
                                               std::optional<std::size_t> depth) {
  if (n_max < 1) throw InputError("n_max must be at least 1");
  std::vector<ProbeReport> out;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    out.push_back(probe_density(spec, r * Rat(n), s * Rat(n), epsilon, budget, depth));
  }
  return out;
}

IsolationReport right_isolation(const MonoidSpec& spec, const Rat& T, std::int64_t budget,
                                std::optional<std::size_t> depth) {
  if (budget <= 0) throw InputError("isolation budget must be positive");
  const auto cap = static_cast<std::size_t>(budget);
  IsolationReport report;
  Enumeration e;
  if (depth) {
    e = enumerate_generators(generator_stream(spec, *depth), T, cap);
    report.truncated = !family_size(spec) || *family_size(spec) > *depth;
  } else if (family_size(spec)) {
    e = enumerate(spec, T, kAllGenerators, cap);
  } else if (stream_order(spec) == StreamOrder::kIncreasing) {
    e = enumerate(spec, T, std::max<std::size_t>(increasing_count_below(spec, T), 1), cap);
  } else {
    e = enumerate(spec, T, 1, cap);
  }
  if (!e.complete) {
    throw InputError("cannot certify isolation: enumeration up to " + T.str() +
                     " is incomplete (generators of arbitrarily small size or accumulating "
                     "below T were omitted)");
  }
  report.generator_depth = e.generator_count;
  for (std::size_t i = 0; i + 1 < e.elements.size(); ++i) {
    report.entries.push_back({e.elements[i], e.elements[i + 1].minus(e.elements[i])});
  }
  return report;
}

}  // namespace puiseux

#include "puiseux/closures.hpp"

#include <queue>
#include <set>

#include "puiseux/canonical.hpp"
#include "puiseux/constructions.hpp"
#include "puiseux/primes.hpp"

namespace puiseux {

namespace {

constexpr std::size_t kMaxWitnesses = 200;

unsigned valuation(BigInt& d, const BigInt& p) {
  unsigned v = 0;
  while (d % p == 0) {
    d /= p;
    ++v;
  }
  return v;
}

GroupDescription cyclic(const Rat& q) {
  GroupDescription g;
  g.kind = GroupKind::kCyclicScaled;
  g.q = q;
  return g;
}

GroupDescription localized(std::map<BigInt, Exponent> exps, Exponent other) {
  GroupDescription g;
  g.kind = GroupKind::kLocalizedScaled;
  g.n = 1;
  g.exponents = std::move(exps);
  g.other_primes = other;
  return g;
}

GroupDescription unknown_group(std::string why) {
  GroupDescription g;
  g.reason = std::move(why);
  return g;
}

std::map<BigInt, Exponent> unbounded_over_primes_of(const BigInt& b) {
  std::map<BigInt, Exponent> out;
  for (const auto& [p, e] : factorize(b)) out[p] = Exponent::unbounded();
  return out;
}

std::int64_t next_prime_at_least(std::int64_t n) {
  while (!is_prime(n)) ++n;
  return n;
}

// Appends positive values while they strictly decrease; true once one is
// below `bound`.
struct WitnessSink {
  const Rat& bound;
  std::vector<Rat>& out;
  bool push(const Rat& w) {
    if (w.is_zero()) return false;
    if (out.empty() || w < out.back()) out.push_back(w);
    return out.back() < bound || out.size() >= kMaxWitnesses;
  }
};

std::vector<Rat> witness_stream(const MonoidSpec& spec, const Rat& bound) {
  std::vector<Rat> out;
  WitnessSink sink{bound, out};
  if (const auto* u = spec.as<UnitFractionPowers>()) {
    const Rat step(BigInt(1), BigInt(static_cast<long>(u->base)));
    for (Rat w = step; !sink.push(w); w = w * step) {
    }
  } else if (const auto* g = spec.as<Geometric>()) {
    const Rat step(BigInt(1), g->ratio.den());
    for (Rat w = step; !sink.push(w); w = w * step) {
    }
  } else if (spec.as<PrimeReciprocalShift>()) {
    // (1 + 1/p) - 1 = 1/p.
    for (std::int64_t n = 2;; n *= 2) {
      if (sink.push(Rat(BigInt(1), BigInt(static_cast<long>(next_prime_at_least(n)))))) break;
    }
  } else if (const auto* d = spec.as<DenseAtoms>()) {
    (void)d;
    // 1/p_k^{n_k} lies in the closure for every k.
    for (std::int64_t k = 1;; k *= 2) {
      const std::int64_t p = first_primes(static_cast<std::size_t>(k)).back();
      if (sink.push(Rat(1) / Rat(BigInt(static_cast<long>(p))).pow(dense_atom_exponent(k, p)))) break;
    }
  } else if (const auto* inc = spec.as<IncreasingSequence>()) {
    // Consecutive tail differences are positive elements of gp(M).
    for (std::int64_t k = std::max<std::int64_t>(inc->tail.start, 1);; k *= 2) {
      const SignedRat diff = tail_term(inc->tail, k + 1) - tail_term(inc->tail, k);
      if (sink.push(diff.to_rat())) break;
    }
  }
  return out;
}

}  // namespace

bool GroupDescription::allows_denominator(const BigInt& d) const {
  if (kind != GroupKind::kLocalizedScaled) throw InputError("not a localized group");
  BigInt rest = d;
  for (const auto& [p, e] : exponents) {
    if (!e.allows(valuation(rest, p))) return false;
  }
  if (rest == 1 || other_primes.infinite) return true;
  if (other_primes.value == 0) return false;
  for (const auto& [p, e] : factorize(rest)) {
    if (e > other_primes.value) return false;
  }
  return true;
}

bool GroupDescription::contains(const SignedRat& x) const {
  switch (kind) {
    case GroupKind::kCyclicScaled: {
      const SignedRat r = x / SignedRat(q);
      return r.den() == 1;
    }
    case GroupKind::kLocalizedScaled: {
      const SignedRat r = x / SignedRat(Rat(n));
      return allows_denominator(r.den());
    }
    case GroupKind::kUnknown:
      break;
  }
  throw InputError("difference group unknown: " + reason);
}

std::string GroupDescription::str() const {
  switch (kind) {
    case GroupKind::kCyclicScaled:
      return q.str() + "*Z";
    case GroupKind::kLocalizedScaled: {
      std::string s = n.get_str() + "*Z[1/d : ";
      bool first = true;
      for (const auto& [p, e] : exponents) {
        if (!first) s += ", ";
        first = false;
        s += p.get_str() + "^" + e.str();
      }
      if (other_primes.infinite || other_primes.value > 0) {
        if (!first) s += ", ";
        s += "other primes^" + other_primes.str();
      }
      return s + "]";
    }
    case GroupKind::kUnknown:
      break;
  }
  return "Unknown";
}

GroupDescription difference_group(const MonoidSpec& spec) {
  if (auto fg = finite_generating_set(spec)) return cyclic(canonicalize(*fg).scale);
  if (const auto* u = spec.as<UnitFractionPowers>()) {
    return localized(unbounded_over_primes_of(BigInt(static_cast<long>(u->base))), {});
  }
  if (const auto* g = spec.as<Geometric>()) {
    // 1 is a generator, so the numerator gcd is 1; denominators are d(r)^n.
    return localized(unbounded_over_primes_of(g->ratio.den()), {});
  }
  if (spec.as<PrimeReciprocalShift>()) {
    // Sums of 1 and 1 + 1/p have squarefree denominators; 1/p = (1 + 1/p) - 1.
    return localized({}, Exponent::finite(1));
  }
  if (spec.as<DenseAtoms>()) {
    std::map<BigInt, Exponent> exps;
    // p_k > 2k from k = 5 on, so only the first four primes get exponent 2.
    for (long p : {2L, 3L, 5L, 7L}) exps[BigInt(p)] = Exponent::finite(2);
    return localized(std::move(exps), Exponent::finite(1));
  }
  if (const auto* inc = spec.as<IncreasingSequence>()) {
    if (inc->tail.form == TailForm::kHarmonic) {
      // Contains scale/(k(k+1)) for all large k, hence scale/N for every N.
      return localized({}, Exponent::unbounded());
    }
    return unknown_group("prime-indexed tail: group generated by the differences has no closed form here");
  }
  return unknown_group("family not covered");
}

std::vector<Rat> ClosureDescription::generators(std::size_t k) const {
  if (group.kind == GroupKind::kCyclicScaled) return {group.q};
  if (group.kind == GroupKind::kUnknown) throw InputError("closure unknown: " + group.reason);
  std::vector<Rat> out;
  const Rat n(group.n);
  if (!group.other_primes.infinite && group.other_primes.value == 0) {
    // Finitely many primes: smooth numbers in increasing order.
    std::priority_queue<BigInt, std::vector<BigInt>, std::greater<>> heap;
    std::set<BigInt> seen{BigInt(1)};
    heap.push(BigInt(1));
    while (out.size() < k && !heap.empty()) {
      const BigInt d = heap.top();
      heap.pop();
      out.push_back(n / Rat(d));
      for (const auto& [p, e] : group.exponents) {
        const BigInt next = d * p;
        if (group.allows_denominator(next) && seen.insert(next).second) heap.push(next);
      }
    }
    return out;
  }
  for (BigInt d = 1; out.size() < k; ++d) {
    if (group.allows_denominator(d)) out.push_back(n / Rat(d));
  }
  return out;
}

ClosureDescription root_closure(const MonoidSpec& spec) {
  ClosureDescription c{difference_group(spec)};
  if (c.group.kind == GroupKind::kUnknown) throw InputError("closure unknown: " + c.group.reason);
  return c;
}

std::string_view gp_density_name(GpDensityKind k) {
  switch (k) {
    case GpDensityKind::kDenseNotFG: return "GroupDenseInR_ClosureDenseInRplus";
    case GpDensityKind::kNowhereDenseFG: return "NowhereDense_FG";
    case GpDensityKind::kUnknown: return "Unknown";
  }
  return "Unknown";
}

GpDensityResult gp_density(const MonoidSpec& spec, const Rat& witness_below) {
  if (witness_below.is_zero()) throw InputError("witness bound must be positive");
  GpDensityResult r;
  if (auto fg = finite_generating_set(spec)) {
    r.kind = GpDensityKind::kNowhereDenseFG;
    r.step = canonicalize(*fg).scale;
    r.rule = "G1 finitely generated: gp(M) = scale*Z and the closure is scale*N0";
    return r;
  }
  r.witnesses = witness_stream(spec, witness_below);
  if (r.witnesses.empty()) {
    r.rule = "G3 no witness construction for this family";
    return r;
  }
  r.kind = GpDensityKind::kDenseNotFG;
  r.rule = "G2 not finitely generated: gp(M) is dense in R and the closure accumulates at 0";
  return r;
}

std::string_view conductor_name(ConductorKind k) {
  switch (k) {
    case ConductorKind::kEqualsM: return "EqualsM";
    case ConductorKind::kEmpty: return "Empty";
    case ConductorKind::kTail: return "Tail";
    case ConductorKind::kUnknown: return "Unknown";
  }
  return "Unknown";
}

bool structurally_root_closed(const MonoidSpec& spec) {
  if (spec.as<UnitFractionPowers>()) return true;
  if (const auto* g = spec.as<Geometric>(); g && g->ratio < Rat(1)) return g->ratio.num() == 1;
  if (auto fg = finite_generating_set(spec)) {
    return canonicalize(*fg).reduced_generators.front() == 1;
  }
  return false;
}

ConductorResult conductor(const MonoidSpec& spec) {
  ConductorResult r;
  if (structurally_root_closed(spec)) {
    r.kind = ConductorKind::kEqualsM;
    r.rule = "R1 root-closed: the conductor is the closure, which is M";
    return r;
  }
  if (auto fg = finite_generating_set(spec)) {
    const CanonicalFG c = canonicalize(*fg);
    if (!c.has_numerical_monoid()) {
      r.rule = "R2 finitely generated";
      r.reason = "numerical monoid out of reach (multiplicity " +
                 c.reduced_generators.front().get_str() + ")";
      return r;
    }
    const std::int64_t f = c.monoid().frobenius();
    r.kind = ConductorKind::kTail;
    r.sigma = c.scale * Rat(f);
    r.minimum = c.scale * Rat(f + 1);
    r.rule = "R2 finitely generated: conductor is M>=sigma with sigma = scale*f(N)";
    return r;
  }
  if (spec.as<IncreasingSequence>() || spec.as<Geometric>()) {
    if (spec.as<Geometric>() && spec.as<Geometric>()->ratio < Rat(1)) {
      r.rule = "R5 no rule applies";
      r.reason = "supremum of the closure minus M is not determined for ratio below 1 with numerator > 1";
      return r;
    }
    r.kind = ConductorKind::kEmpty;
    r.rule = "R3 increasing and not finitely generated: the conductor is empty";
    return r;
  }
  if (spec.as<PrimeReciprocalShift>()) {
    r.kind = ConductorKind::kEmpty;
    r.rule = "R4 1 + 1/p over all primes: the conductor is empty";
    return r;
  }
  r.rule = "R5 no rule applies";
  r.reason = "family not covered by the conductor rule table";
  return r;
}

}  // namespace puiseux

#include "puiseux/constructions.hpp"

#include <algorithm>
#include <set>

#include "puiseux/primes.hpp"

namespace puiseux {

std::vector<Rat> seed_sequence(SeedSequence seed, std::size_t count) {
  std::vector<Rat> out;
  out.reserve(count);
  if (seed == SeedSequence::kCalkinWilf) {
    Rat q(1);
    while (out.size() < count) {
      out.push_back(q);
      // q' = 1 / (2 floor(q) - q + 1)
      const SignedRat denom = SignedRat(Rat(BigInt(2 * q.floor() + 1))) - SignedRat(q);
      q = Rat(1) / denom.to_rat();
    }
    return out;
  }
  std::set<Rat> seen;
  for (unsigned t = 0; out.size() < count; ++t) {
    const BigInt scale = BigInt(1) << t;
    const BigInt last = BigInt(t + 1) * scale;
    for (BigInt j = 1; j <= last && out.size() < count; ++j) {
      Rat x(j, scale);
      if (seen.insert(x).second) out.push_back(x);
    }
  }
  return out;
}

SeedSequence parse_seed(std::string_view name) {
  if (name == "calkin_wilf") return SeedSequence::kCalkinWilf;
  if (name == "dyadic") return SeedSequence::kDyadic;
  throw InputError("unknown seed sequence \"" + std::string(name) + "\"");
}

std::string_view seed_name(SeedSequence seed) {
  return seed == SeedSequence::kCalkinWilf ? "calkin_wilf" : "dyadic";
}

unsigned dense_atom_exponent(std::int64_t k, std::int64_t prime) {
  unsigned n = 1;
  BigInt power = prime;
  while (power <= 2 * k) {
    power *= prime;
    ++n;
  }
  return n;
}

DenseAtomsOutput build_dense_atoms(std::int64_t count, SeedSequence seed) {
  if (count < 1) throw InputError("dense_atoms count must be at least 1");
  DenseAtomsOutput out;
  const auto targets = seed_sequence(seed, static_cast<std::size_t>(count));
  const auto primes = first_primes(static_cast<std::size_t>(count));
  out.entries.reserve(targets.size());
  for (std::int64_t k = 1; k <= count; ++k) {
    DenseAtomEntry e;
    e.k = k;
    e.target = targets[k - 1];
    e.prime = primes[k - 1];
    e.exponent = dense_atom_exponent(k, e.prime);
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(e.prime), e.exponent);
    BigInt m = (e.target * Rat(power)).round_half_up();
    if (m == 0) {
      m = 1;
    } else if (m % e.prime == 0) {
      m += 1;
    }
    e.numerator = m;
    e.atom = Rat(m, power);
    e.error = (e.target - e.atom).abs().to_rat();
    out.entries.push_back(std::move(e));
  }
  out.spec = MonoidSpec{DenseAtoms{count, seed}};
  return out;
}

std::vector<Rat> cantor_endpoints(int depth) {
  if (depth < 1) throw InputError("cantor depth must be at least 1");
  BigInt denom;
  mpz_ui_pow_ui(denom.get_mpz_t(), 3, static_cast<unsigned long>(depth));
  // Left endpoints have base-3 digits in {0, 2}.
  std::vector<BigInt> lefts{BigInt(0)};
  for (int level = 0; level < depth; ++level) {
    std::vector<BigInt> next;
    next.reserve(lefts.size() * 2);
    for (const BigInt& a : lefts) {
      next.push_back(3 * a);
      next.push_back(3 * a + 2);
    }
    lefts = std::move(next);
  }
  std::vector<Rat> out;
  out.reserve(lefts.size() * 2);
  for (const BigInt& a : lefts) {
    out.emplace_back(a, denom);
    out.emplace_back(BigInt(a + 1), denom);
  }
  std::sort(out.begin(), out.end());
  return out;
}

CantorOutput build_cantor_shift(int depth) {
  CantorOutput out;
  for (const Rat& e : cantor_endpoints(depth)) out.generators.push_back(Rat(1) + e);
  out.spec = MonoidSpec{CantorShift{depth}};
  out.spec.validate();
  return out;
}

IncreasingForm parse_increasing_form(std::string_view name) {
  if (name == "affine") return IncreasingForm::kAffine;
  if (name == "harmonic") return IncreasingForm::kHarmonic;
  if (name == "prime_reciprocal") return IncreasingForm::kPrimeReciprocal;
  if (name == "geometric") return IncreasingForm::kGeometric;
  throw InputError("unknown increasing form \"" + std::string(name) + "\"");
}

MonoidSpec build_increasing(const IncreasingParams& params) {
  if (params.form == IncreasingForm::kGeometric) {
    if (!params.prefix.empty()) throw InputError("geometric form takes no prefix");
    if (!(params.first > Rat(1))) throw InputError("increasing geometric ratio must exceed 1");
    MonoidSpec s{Geometric{params.first}};
    s.validate();
    return s;
  }
  if (params.second.is_zero()) throw InputError("tail step/scale must be positive");

  IncreasingSequence inc;
  inc.prefix = params.prefix;
  inc.tail.first = params.first;
  inc.tail.second = params.second;
  switch (params.form) {
    case IncreasingForm::kAffine: inc.tail.form = TailForm::kAffine; break;
    case IncreasingForm::kHarmonic: inc.tail.form = TailForm::kHarmonic; break;
    default: inc.tail.form = TailForm::kPrimeReciprocal; break;
  }
  inc.bounded = inc.tail.form != TailForm::kAffine;
  if (inc.bounded) inc.limit = inc.tail.first;

  if (params.start) {
    inc.tail.start = *params.start;
  } else {
    const std::int64_t lowest = inc.tail.form == TailForm::kAffine ? 0 : 1;
    const SignedRat floor_value = inc.prefix.empty() ? SignedRat(0) : SignedRat(inc.prefix.back());
    if (inc.bounded && !(floor_value < SignedRat(inc.tail.first))) {
      throw InputError("prefix reaches the tail limit; no tail term can follow");
    }
    std::int64_t k = lowest;
    // Bounded tails approach their limit from below, so this terminates.
    for (;; ++k) {
      inc.tail.start = k;
      const SignedRat term = inc.tail.form == TailForm::kAffine
          ? SignedRat(inc.tail.first + inc.tail.second * Rat(k))
          : SignedRat(inc.tail.first) -
                inc.tail.second / Rat(inc.tail.form == TailForm::kHarmonic
                                          ? k
                                          : first_primes(k).back());
      if (term.sign() > 0 && floor_value < term) break;
    }
  }
  MonoidSpec s{inc};
  s.validate();
  return s;
}

}  // namespace puiseux

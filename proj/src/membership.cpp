#include "puiseux/membership.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "puiseux/canonical.hpp"
#include "puiseux/constructions.hpp"
#include "puiseux/primes.hpp"

namespace puiseux {

namespace {

constexpr std::int64_t kMaxSearchGenerators = 100'000;

MemberResult in(std::string method) { return {Membership::kIn, {}, std::move(method)}; }
MemberResult out(std::string method) { return {Membership::kOut, {}, std::move(method)}; }
MemberResult unknown(UndecidedReason why) {
  return {Membership::kUnknown, std::move(why), "undecided"};
}

struct BudgetExhausted {};

// Depth-first coefficient search over generators sorted descending. Each
// level first checks that the remainder lies in the group spanned by the
// generators still available.
class CoefficientSearch {
 public:
  CoefficientSearch(std::vector<Rat> gens, std::int64_t budget)
      : gens_(std::move(gens)), budget_(budget) {
    std::sort(gens_.rbegin(), gens_.rend());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    steps_.resize(gens_.size());
    BigInt l = 1;
    BigInt g = 0;
    for (std::size_t i = gens_.size(); i-- > 0;) {
      const BigInt new_l = lcm(l, gens_[i].den());
      g = g * (new_l / l);
      g = gcd(g, gens_[i].num() * (new_l / gens_[i].den()));
      l = new_l;
      steps_[i] = Rat(g, l);
    }
  }

  // nullopt when the node budget ran out.
  std::optional<bool> run(const Rat& target) {
    nodes_ = 0;
    try {
      return search(0, target);
    } catch (const BudgetExhausted&) {
      return std::nullopt;
    }
  }

 private:
  bool search(std::size_t i, const Rat& rem) {
    if (rem.is_zero()) return true;
    if (i == gens_.size()) return false;
    if (++nodes_ > budget_) throw BudgetExhausted{};
    if (!(rem / steps_[i]).is_integer()) return false;
    const BigInt top = (rem / gens_[i]).floor();
    for (BigInt c = top; c >= 0; --c) {
      if (search(i + 1, rem.minus(gens_[i] * Rat(c)))) return true;
    }
    return false;
  }

  std::vector<Rat> gens_;
  std::vector<Rat> steps_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
};

// True when every prime factor of n divides base.
bool smooth_over(BigInt n, const BigInt& base) {
  for (;;) {
    const BigInt g = gcd(n, base);
    if (g == 1) return n == 1;
    n /= g;
  }
}

MemberResult unit_fraction_member(const UnitFractionPowers& u, const Rat& x) {
  // The monoid is the nonnegative cone of Z[1/b].
  if (smooth_over(x.den(), BigInt(static_cast<long>(u.base)))) {
    return in("denominator divides a power of the base");
  }
  return out("denominator has a prime not dividing the base");
}

MemberResult geometric_member(const MonoidSpec& spec, const Geometric& g,
                              const Rat& x, std::int64_t budget) {
  if (g.ratio > Rat(1)) {
    // Generators r^n increase; only those <= x can appear.
    std::vector<Rat> below;
    Rat p(1);
    while (p <= x) {
      below.push_back(p);
      p = p * g.ratio;
    }
    if (below.empty()) return out("every generator exceeds x");
    return finite_member(below, x, budget);
  }
  const BigInt& b = g.ratio.den();
  if (!smooth_over(x.den(), b)) {
    return out("x lies outside Z[1/" + b.get_str() + "], which contains the monoid");
  }
  if (g.ratio.num() == 1) return in("monoid equals the nonnegative cone of Z[1/" + b.get_str() + "]");

  // Search truncations <r^0, ..., r^N> starting where x's denominator first
  // divides b^N.
  std::int64_t first = 0;
  for (BigInt power = 1; power % x.den() != 0; power *= b) ++first;
  const std::int64_t extra = std::clamp<std::int64_t>(budget / 1000, 4, 12);
  const std::int64_t last = first + extra;
  for (std::int64_t n = std::max<std::int64_t>(first, 1); n <= last; ++n) {
    const auto gens = generator_stream(spec, static_cast<std::size_t>(n + 1));
    const auto r = finite_member(gens, x, budget);
    if (r.verdict == Membership::kIn) {
      return in("certificate over the first " + std::to_string(n + 1) + " generators");
    }
  }
  return unknown({"truncated_search", last + 1, budget,
                  "no representation over generators r^0..r^" + std::to_string(last)});
}

MemberResult increasing_member(const MonoidSpec& spec, const IncreasingSequence& inc,
                               const Rat& x, std::int64_t budget) {
  if (inc.bounded && *inc.limit <= x) {
    const auto depth = std::clamp<std::int64_t>(budget / 100, 8, 256);
    const auto gens = generator_stream(spec, static_cast<std::size_t>(depth));
    const auto r = finite_member(gens, x, budget);
    if (r.verdict == Membership::kIn) return in("certificate over a generator prefix");
    return unknown({"truncated_search", depth, budget,
                    "x is at or beyond the limit " + inc.limit->str() +
                        "; infinitely many generators lie below x"});
  }
  std::vector<Rat> below;
  for (const Rat& q : inc.prefix) {
    if (q <= x) below.push_back(q);
  }
  for (std::int64_t k = inc.tail.start;; ++k) {
    const Rat t = tail_term(inc.tail, k);
    if (x < t) break;
    below.push_back(t);
    if (static_cast<std::int64_t>(below.size()) > kMaxSearchGenerators) {
      return unknown({"truncated_search", kMaxSearchGenerators, budget,
                      "too many generators below x"});
    }
  }
  if (below.empty()) return out("every generator exceeds x");
  return finite_member(below, x, budget);
}

MemberResult prime_shift_member(const Rat& x, std::int64_t budget) {
  if (x < Rat(1)) return out("every nonzero element is at least 1");
  // A generator 1 + 1/p with multiplicity c contributes c/p. If p does not
  // divide c then p divides den(x); otherwise c >= p and the term is at
  // least p + 1 <= x. Only these primes can occur.
  std::map<BigInt, unsigned> den_primes;
  try {
    den_primes = factorize(x.den());
  } catch (const InputError& e) {
    return unknown({"factorization", 0, budget, e.what()});
  }
  std::set<std::int64_t> usable;
  for (const auto& [p, e] : den_primes) {
    if (e > 1) return out("a squared prime divides the denominator of x");
    if (!p.fits_slong_p()) return unknown({"factorization", 0, budget, "prime too large"});
    usable.insert(p.get_si());
  }
  const BigInt bound = x.floor() - 1;
  if (bound >= 2) {
    if (bound > kMaxSearchGenerators) {
      return unknown({"truncated_search", kMaxSearchGenerators, budget, "x too large"});
    }
    for (std::int64_t p : primes_up_to(bound.get_si())) usable.insert(p);
  }
  std::vector<Rat> gens{Rat(1)};
  for (std::int64_t p : usable) gens.push_back(Rat(1) + Rat(BigInt(1), BigInt(static_cast<long>(p))));
  return finite_member(gens, x, budget);
}

// Exponent bound on p in denominators of the dense-atoms difference group.
unsigned dense_prime_bound(std::int64_t p) {
  // p_k > 2k for k >= 5, so every prime from 11 on gets exponent 1.
  if (p >= 11) return 1;
  const auto primes = primes_up_to(p);
  return dense_atom_exponent(static_cast<std::int64_t>(primes.size()), p);
}

MemberResult dense_atoms_member(const MonoidSpec& spec, const DenseAtoms& d,
                                const Rat& x, std::int64_t budget) {
  try {
    for (const auto& [p, e] : factorize(x.den())) {
      if (!p.fits_slong_p() || e > dense_prime_bound(p.get_si())) {
        return out("denominator exceeds every allowed prime power");
      }
    }
  } catch (const InputError&) {
    // fall through to the search
  }
  std::vector<Rat> below;
  for (const Rat& a : generator_stream(spec, static_cast<std::size_t>(d.count))) {
    if (a <= x) below.push_back(a);
  }
  if (!below.empty()) {
    const auto r = finite_member(below, x, budget);
    if (r.verdict == Membership::kIn) return in("certificate over materialized atoms");
  }
  return unknown({"truncated_search", d.count, budget,
                  "no representation over the first " + std::to_string(d.count) + " atoms"});
}

}  // namespace

std::string_view membership_name(Membership m) {
  switch (m) {
    case Membership::kIn: return "In";
    case Membership::kOut: return "Out";
    case Membership::kUnknown: return "Unknown";
  }
  return "Unknown";
}

MemberResult finite_member(const std::vector<Rat>& gens, const Rat& x,
                           std::int64_t budget) {
  if (x.is_zero()) return in("identity element");
  const CanonicalFG c = canonicalize(gens);
  const auto coord = c.coordinate(x);
  if (!coord) return out("x is not a multiple of the scale " + c.scale.str());
  if (c.has_numerical_monoid()) {
    return c.contains(x) ? in("Apery set of the canonical numerical monoid")
                         : out("Apery set of the canonical numerical monoid");
  }
  CoefficientSearch search(gens, budget);
  const auto found = search.run(x);
  if (!found) {
    return unknown({"search_budget", static_cast<std::int64_t>(gens.size()), budget,
                    "coefficient search exhausted its node budget"});
  }
  return *found ? in("coefficient search") : out("exhaustive coefficient search");
}

MemberResult spec_member(const MonoidSpec& spec, const Rat& x, std::int64_t budget) {
  if (x.is_zero()) return in("identity element");
  if (auto fg = finite_generating_set(spec)) return finite_member(*fg, x, budget);
  if (const auto* u = spec.as<UnitFractionPowers>()) return unit_fraction_member(*u, x);
  if (const auto* g = spec.as<Geometric>()) return geometric_member(spec, *g, x, budget);
  if (const auto* inc = spec.as<IncreasingSequence>()) return increasing_member(spec, *inc, x, budget);
  if (spec.as<PrimeReciprocalShift>()) return prime_shift_member(x, budget);
  if (const auto* d = spec.as<DenseAtoms>()) return dense_atoms_member(spec, *d, x, budget);
  return unknown({"unsupported", 0, budget, "no membership procedure for this family"});
}

}  // namespace puiseux

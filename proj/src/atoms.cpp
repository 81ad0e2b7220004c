#include "puiseux/atoms.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include "puiseux/canonical.hpp"
#include "puiseux/membership.hpp"
#include "puiseux/primes.hpp"

namespace puiseux {

namespace {

constexpr std::int64_t kMaxAtomsBelow = 100'000;

struct BudgetExhausted {};

// Depth-first enumeration of nonnegative integer solutions of
// sum c_i * w_i = target, w strictly decreasing.
class IntegerFactorSearch {
 public:
  IntegerFactorSearch(std::vector<std::int64_t> weights, std::int64_t budget)
      : w_(std::move(weights)), suffix_gcd_(w_.size() + 1, 0), budget_(budget) {
    for (std::size_t i = w_.size(); i-- > 0;) {
      suffix_gcd_[i] = std::gcd(suffix_gcd_[i + 1], w_[i]);
    }
    coeff_.assign(w_.size(), 0);
  }

  // Returns false when the budget ran out.
  bool run(std::int64_t target, std::vector<std::vector<std::int64_t>>& out) {
    out_ = &out;
    nodes_ = 0;
    try {
      search(0, target);
      return true;
    } catch (const BudgetExhausted&) {
      return false;
    }
  }

 private:
  void search(std::size_t i, std::int64_t rem) {
    if (rem == 0) {
      std::fill(coeff_.begin() + static_cast<std::ptrdiff_t>(i), coeff_.end(), 0);
      out_->push_back(coeff_);
      return;
    }
    if (i == w_.size()) return;
    if (++nodes_ > budget_) throw BudgetExhausted{};
    if (rem % suffix_gcd_[i] != 0) return;
    for (std::int64_t c = rem / w_[i]; c >= 0; --c) {
      coeff_[i] = c;
      search(i + 1, rem - c * w_[i]);
    }
    coeff_[i] = 0;
  }

  std::vector<std::int64_t> w_;
  std::vector<std::int64_t> suffix_gcd_;
  std::vector<std::int64_t> coeff_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  std::vector<std::vector<std::int64_t>>* out_ = nullptr;
};

std::int64_t to_int64(const BigInt& v, const char* what) {
  if (!v.fits_slong_p()) throw InputError(std::string(what) + " out of reach");
  return v.get_si();
}

// Atoms among a strictly increasing generator list: g_k is an atom iff it is
// not in the monoid generated by g_1..g_{k-1}.
struct FilterResult {
  std::vector<Rat> atoms;
  bool undecided = false;
};

FilterResult increasing_filter(const std::vector<Rat>& gens, std::size_t want,
                               std::int64_t budget) {
  FilterResult r;
  std::vector<Rat> before;
  BigInt den_lcm = 1;
  for (const Rat& g : gens) {
    if (r.atoms.size() >= want) break;
    bool atom;
    if (before.empty() || den_lcm % g.den() != 0) {
      atom = true;  // outside the group generated by the earlier terms
    } else {
      const auto m = finite_member(before, g, budget);
      if (m.verdict == Membership::kUnknown) r.undecided = true;
      atom = m.verdict != Membership::kIn;
    }
    if (atom) r.atoms.push_back(g);
    before.push_back(g);
    den_lcm = lcm(den_lcm, g.den());
  }
  return r;
}

std::vector<Rat> fg_atoms(const std::vector<Rat>& gens, std::int64_t budget) {
  const CanonicalFG c = canonicalize(gens);
  if (c.has_numerical_monoid()) return c.atoms();
  auto sorted = gens;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const auto f = increasing_filter(sorted, sorted.size(), budget);
  if (f.undecided) throw InputError("atom filter exceeded its budget");
  return f.atoms;
}

AtomicityVerdict atomic(std::vector<Rat> all, std::size_t limit, bool more, std::string rule) {
  AtomicityVerdict v;
  v.kind = AtomicityKind::kAtomic;
  v.truncated = more || all.size() > limit;
  if (all.size() > limit) all.resize(limit);
  v.atoms_shown = std::move(all);
  v.rule = std::move(rule);
  return v;
}

// Primes p for which 1 + 1/p can occur in a factorization of x: either p
// divides d(x), or the multiplicity is a multiple of p and then p + 1 <= x.
std::vector<Rat> prime_shift_atoms_below(const Rat& x) {
  std::set<std::int64_t> usable;
  for (const auto& [p, e] : factorize(x.den())) usable.insert(to_int64(p, "prime"));
  const BigInt bound = x.floor() - 1;
  if (bound >= 2) {
    if (bound > kMaxAtomsBelow) throw InputError("too many atoms below x");
    for (std::int64_t p : primes_up_to(bound.get_si())) usable.insert(p);
  }
  std::vector<Rat> out;
  if (Rat(1) <= x) out.push_back(Rat(1));
  for (std::int64_t p : usable) {
    const Rat a = Rat(1) + Rat(BigInt(1), BigInt(static_cast<long>(p)));
    if (a <= x) out.push_back(a);
  }
  return out;
}

// Atoms <= x of a family whose atoms below any bound are finitely many.
std::vector<Rat> atoms_below(const MonoidSpec& spec, const Rat& x, std::int64_t budget) {
  if (auto fg = finite_generating_set(spec)) {
    std::vector<Rat> out;
    for (const Rat& a : fg_atoms(*fg, budget)) {
      if (a <= x) out.push_back(a);
    }
    return out;
  }
  if (spec.as<UnitFractionPowers>()) throw InputError("no atoms: the monoid is antimatter");
  if (const auto* g = spec.as<Geometric>()) {
    if (g->ratio < Rat(1)) {
      if (g->ratio.num() == 1) throw InputError("no atoms: the monoid is antimatter");
      throw InputError("atom set unknown for geometric ratio below 1 with numerator > 1");
    }
  }
  if (spec.as<PrimeReciprocalShift>()) return prime_shift_atoms_below(x);
  if (spec.as<DenseAtoms>()) {
    throw InputError("atoms of the dense-atoms monoid accumulate below x; factorizations not enumerable");
  }
  if (const auto* inc = spec.as<IncreasingSequence>()) {
    if (inc->bounded && *inc->limit <= x) {
      throw InputError("infinitely many atoms lie below x (x is at or beyond the limit " +
                       inc->limit->str() + ")");
    }
  }
  // Increasing streams: only generators <= x matter.
  std::vector<Rat> gens;
  for (std::size_t k = 64;; k *= 2) {
    gens = generator_stream(spec, k);
    if (gens.size() < k || x < gens.back()) break;
    if (k > static_cast<std::size_t>(kMaxAtomsBelow)) throw InputError("too many generators below x");
  }
  while (!gens.empty() && x < gens.back()) gens.pop_back();
  const auto f = increasing_filter(gens, gens.size(), budget);
  if (f.undecided) throw InputError("atom filter exceeded its budget");
  return f.atoms;
}

}  // namespace

Rat Factorization::value() const {
  Rat total;
  for (const auto& p : parts) total += p.atom * Rat(p.multiplicity);
  return total;
}

std::string Factorization::str() const {
  if (parts.empty()) return "0";
  std::string s;
  for (const auto& p : parts) {
    if (!s.empty()) s += " + ";
    if (p.multiplicity != 1) s += std::to_string(p.multiplicity) + "*";
    s += p.atom.str();
  }
  return s;
}

std::string_view atomicity_name(AtomicityKind k) {
  switch (k) {
    case AtomicityKind::kAtomic: return "Atomic";
    case AtomicityKind::kAntimatter: return "Antimatter";
    case AtomicityKind::kNotAtomic: return "NotAtomic";
    case AtomicityKind::kUnknown: return "Unknown";
  }
  return "Unknown";
}

AtomicityVerdict atoms(const MonoidSpec& spec, std::int64_t limit, std::int64_t budget) {
  if (limit < 1) throw InputError("atom limit must be at least 1");
  const auto cap = static_cast<std::size_t>(limit);

  if (const auto* f = spec.as<FiniteGenerators>()) {
    return atomic(fg_atoms(f->generators, budget), std::numeric_limits<std::size_t>::max(),
                  false, "A1 finitely generated: atoms are the minimal generators");
  }
  if (auto fg = finite_generating_set(spec)) {
    return atomic(fg_atoms(*fg, budget), cap, false,
                  "A1 finitely generated: atoms are the minimal generators");
  }
  if (spec.as<UnitFractionPowers>()) {
    AtomicityVerdict v;
    v.kind = AtomicityKind::kAntimatter;
    v.rule = "A2 antimatter: 1/b^n = b * (1/b^(n+1))";
    return v;
  }
  if (const auto* g = spec.as<Geometric>(); g && g->ratio < Rat(1)) {
    AtomicityVerdict v;
    if (g->ratio.num() == 1) {
      v.kind = AtomicityKind::kAntimatter;
      v.rule = "A2 antimatter: r^n = b * r^(n+1) for r = 1/b";
    } else {
      v.kind = AtomicityKind::kUnknown;
      v.rule = "A5 no criterion available for geometric ratio below 1 with numerator > 1";
    }
    return v;
  }
  if (spec.as<PrimeReciprocalShift>()) {
    // Every generator is below 2, and every sum of two nonzero elements is >= 2.
    return atomic(generator_stream(spec, cap), cap, true,
                  "A3 every generator is an atom: generators lie in [1, 2)");
  }
  if (spec.as<DenseAtoms>()) {
    return atomic(generator_stream(spec, cap), cap, true,
                  "A4 atoms are the generators: their prime-power denominators are pairwise coprime "
                  "and not divisible by the prime at the numerator");
  }
  // Increasing streams (non-affine increasing tails, geometric r > 1).
  const std::size_t window = std::max<std::size_t>(cap * 4, 64);
  const auto gens = generator_stream(spec, window);
  const auto f = increasing_filter(gens, cap, budget);
  if (f.undecided) {
    AtomicityVerdict v;
    v.kind = AtomicityKind::kAtomic;
    v.atoms_shown = f.atoms;
    v.truncated = true;
    v.rule = "A3 increasing generators: atomic; some atom checks exceeded the budget";
    return v;
  }
  return atomic(f.atoms, cap, true, "A3 increasing generators: a_k is an atom iff a_k is not in <a_1..a_(k-1)>");
}

FactorizationSet factor_over(std::vector<Rat> atom_list, const Rat& x, std::int64_t budget) {
  if (budget < 0) throw InputError("budget must be nonnegative");
  std::sort(atom_list.rbegin(), atom_list.rend());
  atom_list.erase(std::unique(atom_list.begin(), atom_list.end()), atom_list.end());
  while (!atom_list.empty() && x < atom_list.front()) atom_list.erase(atom_list.begin());

  FactorizationSet out;
  out.atoms_used = atom_list;
  if (x.is_zero()) {
    out.items.push_back({});
    return out;
  }
  if (atom_list.empty()) return out;

  BigInt den = x.den();
  for (const Rat& a : atom_list) den = lcm(den, a.den());
  std::vector<std::int64_t> weights;
  for (const Rat& a : atom_list) weights.push_back(to_int64(a.num() * (den / a.den()), "atom"));
  const std::int64_t target = to_int64(x.num() * (den / x.den()), "element");

  std::vector<std::vector<std::int64_t>> solutions;
  IntegerFactorSearch search(weights, budget);
  out.complete = search.run(target, solutions);
  for (const auto& coeff : solutions) {
    Factorization z;
    for (std::size_t i = 0; i < coeff.size(); ++i) {
      if (coeff[i] == 0) continue;
      z.parts.push_back({atom_list[i], coeff[i]});
      z.length += coeff[i];
    }
    out.items.push_back(std::move(z));
  }
  return out;
}

FactorizationSet factorizations(const MonoidSpec& spec, const Rat& x, std::int64_t budget) {
  if (x.is_zero()) {
    FactorizationSet out;
    out.items.push_back({});
    return out;
  }
  return factor_over(atoms_below(spec, x, budget), x, budget);
}

LengthSet length_set(const MonoidSpec& spec, const Rat& x, std::int64_t budget) {
  const auto z = factorizations(spec, x, budget);
  LengthSet out;
  out.complete = z.complete;
  for (const auto& f : z.items) out.lengths.insert(f.length);
  return out;
}

}  // namespace puiseux

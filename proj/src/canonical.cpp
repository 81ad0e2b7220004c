#include "puiseux/canonical.hpp"

#include <algorithm>

namespace puiseux {

const NumericalMonoid& CanonicalFG::monoid() const {
  if (!nm) {
    throw InputError("canonical numerical monoid out of reach (multiplicity " +
                     reduced_generators.front().get_str() + ")");
  }
  return *nm;
}

std::optional<BigInt> CanonicalFG::coordinate(const Rat& x) const {
  const Rat q = x / scale;
  if (!q.is_integer()) return std::nullopt;
  return q.num();
}

bool CanonicalFG::contains(const Rat& x) const {
  const auto c = coordinate(x);
  if (!c) return false;
  const auto& n = monoid();
  if (*c > n.frobenius()) return true;
  return n.contains(c->get_si());
}

std::vector<Rat> CanonicalFG::atoms() const {
  std::vector<Rat> out;
  for (std::int64_t a : monoid().minimal_generators()) out.push_back(scale * Rat(a));
  return out;
}

SignedRat CanonicalFG::frobenius() const {
  return SignedRat(scale) * SignedRat(monoid().frobenius());
}

CanonicalFG canonicalize(const std::vector<Rat>& gens) {
  if (gens.empty()) throw InputError("cannot canonicalize an empty generator list");
  CanonicalFG c;
  c.lcm_den = 1;
  for (const Rat& q : gens) {
    if (q.is_zero()) throw InputError("generators must be positive");
    c.lcm_den = lcm(c.lcm_den, q.den());
  }
  std::vector<BigInt> scaled;
  c.gcd_num = 0;
  for (const Rat& q : gens) {
    scaled.push_back(q.num() * (c.lcm_den / q.den()));
    c.gcd_num = gcd(c.gcd_num, scaled.back());
  }
  for (BigInt& h : scaled) h /= c.gcd_num;
  std::sort(scaled.begin(), scaled.end());
  scaled.erase(std::unique(scaled.begin(), scaled.end()), scaled.end());
  c.reduced_generators = scaled;
  c.scale = Rat(c.gcd_num, c.lcm_den);

  if (scaled.front() <= kCanonicalMultiplicityCap) {
    std::vector<std::int64_t> small;
    bool fits = true;
    for (const BigInt& h : scaled) {
      if (!h.fits_slong_p()) {
        fits = false;
        break;
      }
      small.push_back(h.get_si());
    }
    if (fits) c.nm = NumericalMonoid::from_generators(small);
  }
  return c;
}

}  // namespace puiseux

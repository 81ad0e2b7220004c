#include "puiseux/numerical_monoid.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "puiseux/rational.hpp"

namespace puiseux {

namespace {

constexpr std::int64_t kUnreached = std::numeric_limits<std::int64_t>::max();

// Round-robin relaxation: folds generator `a` into the residue table `table`
// (least reachable value per residue class modulo table.size()).
void add_generator(std::vector<std::int64_t>& table, std::int64_t a) {
  const auto m = static_cast<std::int64_t>(table.size());
  const std::int64_t d = std::gcd(a, m);
  for (std::int64_t r = 0; r < d; ++r) {
    std::int64_t best = kUnreached;
    for (std::int64_t q = r; q < m; q += d) best = std::min(best, table[q]);
    if (best == kUnreached) continue;
    for (std::int64_t step = 0; step < m / d; ++step) {
      best += a;
      auto& slot = table[best % m];
      best = std::min(best, slot);
      slot = best;
    }
  }
}

std::vector<std::int64_t> residue_table(std::int64_t m,
                                        std::span<const std::int64_t> gens) {
  std::vector<std::int64_t> table(static_cast<std::size_t>(m), kUnreached);
  table[0] = 0;
  for (std::int64_t a : gens) {
    if (a % m != 0) add_generator(table, a);
  }
  return table;
}

}  // namespace

NumericalMonoid NumericalMonoid::from_generators(std::span<const std::int64_t> gens) {
  if (gens.empty()) throw InputError("numerical monoid needs at least one generator");
  std::vector<std::int64_t> sorted(gens.begin(), gens.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.front() < 1) throw InputError("generators must be positive integers");
  std::int64_t g = 0;
  for (std::int64_t a : sorted) g = std::gcd(g, a);
  if (g != 1) {
    throw InputError("not cofinite: generators have gcd " + std::to_string(g));
  }
  const std::int64_t m = sorted.front();
  if (m > kMaxMultiplicity) {
    throw InputError("multiplicity " + std::to_string(m) + " exceeds supported bound");
  }

  NumericalMonoid nm;
  nm.gens_.push_back(m);
  nm.apery_.assign(static_cast<std::size_t>(m), kUnreached);
  nm.apery_[0] = 0;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    const std::int64_t a = sorted[i];
    if (nm.apery_[a % m] <= a) continue;  // a is a sum of smaller generators
    nm.gens_.push_back(a);
    add_generator(nm.apery_, a);
  }
  nm.frobenius_ = *std::max_element(nm.apery_.begin(), nm.apery_.end()) - m;
  return nm;
}

std::vector<std::int64_t> NumericalMonoid::apery_set(std::int64_t m) const {
  if (m < 1 || !contains(m)) {
    throw InputError("Apery set requires a positive element of the monoid");
  }
  if (m == multiplicity()) return apery_;
  return residue_table(m, gens_);
}

bool NumericalMonoid::contains(std::int64_t x) const {
  if (x < 0) throw InputError("membership is defined for nonnegative integers");
  return apery_[static_cast<std::size_t>(x % multiplicity())] <= x;
}

std::vector<std::int64_t> NumericalMonoid::gaps() const {
  std::vector<std::int64_t> out;
  for (std::int64_t x = 1; x <= frobenius_; ++x) {
    if (!contains(x)) out.push_back(x);
  }
  return out;
}

}  // namespace puiseux

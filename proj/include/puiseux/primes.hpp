#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "puiseux/rational.hpp"

namespace puiseux {

// All primes <= limit, ascending.
std::vector<std::int64_t> primes_up_to(std::int64_t limit);

// The first `count` primes.
std::vector<std::int64_t> first_primes(std::size_t count);

bool is_prime(std::int64_t n);

// Prime factorization of n >= 1. Trial division up to 10^6; a cofactor that
// survives is accepted as prime only when it is below 10^12, otherwise
// InputError is thrown (factorization out of reach).
std::map<BigInt, unsigned> factorize(const BigInt& n);

}  // namespace puiseux

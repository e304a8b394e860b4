#pragma once

#include <utility>
#include <vector>

#include "pp3/rational.hpp"

namespace pp3 {

bool is_prime(const BigInt& n);

/// Prime factorization of |n|, n != 0, sorted by prime. Trial division
/// backed by Brent's rho for the cofactor; fine for the sizes this
/// library meets (norms of desk-scale field elements).
std::vector<std::pair<BigInt, long>> factor_integer(const BigInt& n);

/// Primes p <= bound, ascending.
std::vector<long> primes_up_to(long bound);

}  // namespace pp3

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <vector>

namespace conntop {

// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime_u64(std::uint64_t n);

// Prime factorization of n >= 1 by trial division (inputs here are small:
// moduli, multipliers, group orders).
std::map<std::uint64_t, std::uint32_t> factorize_u64(std::uint64_t n);

// p-adic valuation of m (m >= 1).
std::uint32_t valuation(std::uint64_t m, std::uint64_t p);

// Factored positive integer; the identity is the empty map.
using Factored = std::map<std::uint64_t, std::uint32_t>;

mpz_class factored_value(const Factored& f);

// All divisors of the factored integer, ascending.
std::vector<Factored> divisors(const Factored& f, std::size_t max_count);

}  // namespace conntop

#include "conntop/numeric.hpp"

#include <algorithm>

#include "conntop/errors.hpp"

namespace conntop {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set is deterministic for all n < 3.3 * 10^24.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::map<std::uint64_t, std::uint32_t> factorize_u64(std::uint64_t n) {
  if (n == 0) throw Error("factorize_u64: zero has no factorization");
  std::map<std::uint64_t, std::uint32_t> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

std::uint32_t valuation(std::uint64_t m, std::uint64_t p) {
  std::uint32_t v = 0;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

mpz_class factored_value(const Factored& f) {
  std::uint64_t total_exp = 0;
  for (const auto& [p, k] : f) total_exp += k;
  if (total_exp > (1ull << 22)) throw TooLarge("factored value too large to materialize");
  mpz_class r = 1;
  for (const auto& [p, k] : f) {
    mpz_class pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), k);
    r *= pk;
  }
  return r;
}

std::vector<Factored> divisors(const Factored& f, std::size_t max_count) {
  std::size_t count = 1;
  for (const auto& [p, k] : f) {
    count *= (static_cast<std::size_t>(k) + 1);
    if (count > max_count) throw TooLarge("divisors: divisor count exceeds limit");
  }
  std::vector<Factored> out;
  out.push_back({});
  for (const auto& [p, k] : f) {
    std::vector<Factored> next;
    next.reserve(out.size() * (k + 1));
    for (const auto& d : out) {
      for (std::uint32_t j = 0; j <= k; ++j) {
        Factored e = d;
        if (j > 0) e[p] = j;
        next.push_back(std::move(e));
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const Factored& a, const Factored& b) {
    return factored_value(a) < factored_value(b);
  });
  return out;
}

}  // namespace conntop

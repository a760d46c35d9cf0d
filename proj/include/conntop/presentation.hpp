#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "conntop/cardinal.hpp"
#include "conntop/errors.hpp"

namespace conntop {

// A finite or cofinite set of primes.
struct PrimeSet {
  bool cofinite = false;
  // Members when finite, excluded primes when cofinite. Sorted, duplicate-free.
  std::vector<std::uint64_t> primes;

  static PrimeSet finite(std::vector<std::uint64_t> members);
  static PrimeSet cofinite_excluding(std::vector<std::uint64_t> excluded);

  bool contains(std::uint64_t p) const;
  bool operator==(const PrimeSet& o) const { return cofinite == o.cofinite && primes == o.primes; }
  std::string str() const;
};

enum class BlockKind : std::uint8_t { Cyclic, Prufer, IntZ, RatQ, Tower, Soc };

// A primitive direct-sum block:
//   Cyclic(p,k)  Z(p^k)
//   Prufer(p)    Z(p^inf)
//   IntZ         Z
//   RatQ         Q
//   Tower(p)     L(p) = sum over n of Z(p^n)
//   Soc(E)       sum of Z(p) over all primes p outside the finite set E
class Block {
 public:
  static Block cyclic(std::uint64_t p, std::uint32_t k);  // InvalidPrime
  static Block prufer(std::uint64_t p);
  static Block integers();
  static Block rationals();
  static Block tower(std::uint64_t p);
  static Block soc(std::vector<std::uint64_t> excluded);

  BlockKind kind() const { return kind_; }
  std::uint64_t prime() const;   // Cyclic/Prufer/Tower
  std::uint32_t power() const;   // Cyclic
  const std::vector<std::uint64_t>& soc_excluded() const;

  // Every non-cyclic block is unbounded as a group.
  bool is_unbounded() const { return kind_ != BlockKind::Cyclic; }

  bool operator==(const Block& o) const;
  bool operator!=(const Block& o) const { return !(*this == o); }
  bool operator<(const Block& o) const;  // canonical term order

  std::string str() const;

 private:
  Block(BlockKind k, std::uint64_t p, std::uint32_t pow) : kind_(k), p_(p), k_(pow) {}
  BlockKind kind_;
  std::uint64_t p_ = 0;
  std::uint32_t k_ = 0;
  std::vector<std::uint64_t> excluded_;  // Soc only
};

struct Term {
  Block block;
  Cardinal mult;
  bool operator==(const Term& o) const { return block == o.block && mult == o.mult; }
};

// Normal form: sorted, merged, zero-free list of terms. Equality of normal
// forms is the isomorphism relation for this block class.
class Presentation {
 public:
  Presentation() = default;  // trivial group

  static Presentation normalize(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool trivial() const { return terms_.empty(); }

  bool operator==(const Presentation& o) const { return terms_ == o.terms_; }
  bool operator!=(const Presentation& o) const { return !(*this == o); }

  std::string str() const;

 private:
  std::vector<Term> terms_;
};

// CRT split of Z(n) into prime-power cyclic blocks; n >= 2 (InvalidModulus).
std::vector<Block> crt_split(std::uint64_t n);

Presentation direct_sum(const Presentation& a, const Presentation& b);

Cardinal cardinality(const Presentation& g);

// Finite exponent as an exact integer, or nullopt for unbounded groups.
// The trivial group has exponent 1.
std::optional<mpz_class> exponent(const Presentation& g);

}  // namespace conntop

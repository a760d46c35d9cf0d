#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "conntop/cardinal.hpp"
#include "conntop/numeric.hpp"
#include "conntop/presentation.hpp"

namespace conntop {

// mG = {mg : g in G}. InvalidMultiplier for m == 0. The factored form takes m
// as its prime valuations, which sidesteps any size limit on m.
Presentation multiply(std::uint64_t m, const Presentation& g);
Presentation multiply(const Factored& m, const Presentation& g);

// G[m] = {g in G : mg = 0}.
Presentation m_torsion(std::uint64_t m, const Presentation& g);
Presentation m_torsion(const Factored& m, const Presentation& g);

// t(G): the torsion subgroup.
Presentation torsion_part(const Presentation& g);

// t_p(G): the p-torsion part.
Presentation p_component(std::uint64_t p, const Presentation& g);

// Primes with non-trivial p-component.
PrimeSet prime_support(const Presentation& g);

// Free rank, p-ranks and their combined total. A cofinite socle block gives
// all but finitely many primes the same rank; those primes are carried by
// tail_value/tail_excluded instead of being listed.
struct RankProfile {
  Cardinal r0;
  std::vector<std::pair<std::uint64_t, Cardinal>> rp;  // listed primes, sorted
  std::optional<Cardinal> tail_value;                  // rank at unlisted primes outside tail_excluded
  std::vector<std::uint64_t> tail_excluded;
  Cardinal r;  // r0 + sum of all p-ranks

  Cardinal rank_at(std::uint64_t p) const;
};

RankProfile rank_profile(const Presentation& g);

// Exponent of the cyclic sub-sum in factored form (empty map = 1). This is
// the multiplier witnessing the divisible weight and divisible rank minima.
Factored cyclic_exponent_valuations(const Presentation& g);

}  // namespace conntop

#include "conntop/structure_ops.hpp"

#include <algorithm>
#include <map>

namespace conntop {

namespace {
Factored factor_multiplier(std::uint64_t m) {
  if (m == 0) throw InvalidMultiplier("multiplier must be >= 1");
  return factorize_u64(m);
}

std::uint32_t valuation_of(const Factored& m, std::uint64_t p) {
  auto it = m.find(p);
  return it == m.end() ? 0 : it->second;
}
}  // namespace

Presentation multiply(std::uint64_t m, const Presentation& g) {
  return multiply(factor_multiplier(m), g);
}

Presentation multiply(const Factored& m, const Presentation& g) {
  std::vector<Term> out;
  for (const auto& t : g.terms()) {
    switch (t.block.kind()) {
      case BlockKind::Cyclic: {
        std::uint32_t v = valuation_of(m, t.block.prime());
        if (t.block.power() > v) {
          out.push_back({Block::cyclic(t.block.prime(), t.block.power() - v), t.mult});
        }
        break;
      }
      case BlockKind::Prufer:
      case BlockKind::IntZ:
      case BlockKind::RatQ:
      case BlockKind::Tower:
        out.push_back(t);
        break;
      case BlockKind::Soc: {
        std::vector<std::uint64_t> excluded = t.block.soc_excluded();
        for (const auto& [p, k] : m) excluded.push_back(p);
        out.push_back({Block::soc(std::move(excluded)), t.mult});
        break;
      }
    }
  }
  return Presentation::normalize(std::move(out));
}

Presentation m_torsion(std::uint64_t m, const Presentation& g) {
  return m_torsion(factor_multiplier(m), g);
}

Presentation m_torsion(const Factored& m, const Presentation& g) {
  std::vector<Term> out;
  for (const auto& t : g.terms()) {
    switch (t.block.kind()) {
      case BlockKind::Cyclic: {
        std::uint32_t v = valuation_of(m, t.block.prime());
        if (v > 0) out.push_back({Block::cyclic(t.block.prime(), std::min(t.block.power(), v)), t.mult});
        break;
      }
      case BlockKind::Prufer: {
        std::uint32_t v = valuation_of(m, t.block.prime());
        if (v > 0) out.push_back({Block::cyclic(t.block.prime(), v), t.mult});
        break;
      }
      case BlockKind::Tower: {
        // L(p)[p^v] = Z(p) + ... + Z(p^(v-1)) + Z(p^v)^(w)
        std::uint32_t v = valuation_of(m, t.block.prime());
        if (v > 0) {
          for (std::uint32_t j = 1; j < v; ++j) {
            out.push_back({Block::cyclic(t.block.prime(), j), t.mult});
          }
          out.push_back({Block::cyclic(t.block.prime(), v), cprod(t.mult, Cardinal::omega())});
        }
        break;
      }
      case BlockKind::Soc: {
        const auto& excluded = t.block.soc_excluded();
        for (const auto& [p, k] : m) {
          if (!std::binary_search(excluded.begin(), excluded.end(), p)) {
            out.push_back({Block::cyclic(p, 1), t.mult});
          }
        }
        break;
      }
      case BlockKind::IntZ:
      case BlockKind::RatQ:
        break;  // torsion-free
    }
  }
  return Presentation::normalize(std::move(out));
}

Presentation torsion_part(const Presentation& g) {
  std::vector<Term> out;
  for (const auto& t : g.terms()) {
    if (t.block.kind() != BlockKind::IntZ && t.block.kind() != BlockKind::RatQ) out.push_back(t);
  }
  return Presentation::normalize(std::move(out));
}

Presentation p_component(std::uint64_t p, const Presentation& g) {
  std::vector<Term> out;
  for (const auto& t : g.terms()) {
    switch (t.block.kind()) {
      case BlockKind::Cyclic:
      case BlockKind::Prufer:
      case BlockKind::Tower:
        if (t.block.prime() == p) out.push_back(t);
        break;
      case BlockKind::Soc: {
        const auto& excluded = t.block.soc_excluded();
        if (!std::binary_search(excluded.begin(), excluded.end(), p)) {
          out.push_back({Block::cyclic(p, 1), t.mult});
        }
        break;
      }
      case BlockKind::IntZ:
      case BlockKind::RatQ:
        break;
    }
  }
  return Presentation::normalize(std::move(out));
}

PrimeSet prime_support(const Presentation& g) {
  std::vector<std::uint64_t> listed;
  const std::vector<std::uint64_t>* soc_excluded = nullptr;
  for (const auto& t : g.terms()) {
    switch (t.block.kind()) {
      case BlockKind::Cyclic:
      case BlockKind::Prufer:
      case BlockKind::Tower:
        listed.push_back(t.block.prime());
        break;
      case BlockKind::Soc:
        soc_excluded = &t.block.soc_excluded();
        break;
      case BlockKind::IntZ:
      case BlockKind::RatQ:
        break;
    }
  }
  if (!soc_excluded) return PrimeSet::finite(std::move(listed));
  std::sort(listed.begin(), listed.end());
  std::vector<std::uint64_t> still_excluded;
  std::set_difference(soc_excluded->begin(), soc_excluded->end(), listed.begin(), listed.end(),
                      std::back_inserter(still_excluded));
  return PrimeSet::cofinite_excluding(std::move(still_excluded));
}

Cardinal RankProfile::rank_at(std::uint64_t p) const {
  for (const auto& [q, v] : rp) {
    if (q == p) return v;
  }
  if (tail_value && !std::binary_search(tail_excluded.begin(), tail_excluded.end(), p)) {
    return *tail_value;
  }
  return Cardinal::zero();
}

RankProfile rank_profile(const Presentation& g) {
  RankProfile out;
  out.r0 = Cardinal::zero();
  std::map<std::uint64_t, Cardinal> per_prime;
  std::optional<Cardinal> soc_mult;
  std::vector<std::uint64_t> soc_excluded;

  for (const auto& t : g.terms()) {
    switch (t.block.kind()) {
      case BlockKind::IntZ:
      case BlockKind::RatQ:
        out.r0 = csum(out.r0, t.mult);
        break;
      case BlockKind::Cyclic:
      case BlockKind::Prufer: {
        auto& v = per_prime.try_emplace(t.block.prime(), Cardinal::zero()).first->second;
        v = csum(v, t.mult);
        break;
      }
      case BlockKind::Tower: {
        // Each tower copy carries countably many independent socle elements.
        auto& v = per_prime.try_emplace(t.block.prime(), Cardinal::zero()).first->second;
        v = csum(v, cprod(t.mult, Cardinal::omega()));
        break;
      }
      case BlockKind::Soc:
        soc_mult = t.mult;
        soc_excluded = t.block.soc_excluded();
        break;
    }
  }

  Cardinal total = out.r0;
  for (auto& [p, v] : per_prime) {
    if (soc_mult && !std::binary_search(soc_excluded.begin(), soc_excluded.end(), p)) {
      v = csum(v, *soc_mult);
    }
    total = csum(total, v);
    out.rp.emplace_back(p, v);
  }
  if (soc_mult) {
    out.tail_value = *soc_mult;
    out.tail_excluded = std::move(soc_excluded);
    // Infinitely many primes carry rank tail_value.
    total = csum(total, cprod(Cardinal::omega(), *soc_mult));
  }
  out.r = total;
  return out;
}

Factored cyclic_exponent_valuations(const Presentation& g) {
  Factored f;
  for (const auto& t : g.terms()) {
    if (t.block.kind() == BlockKind::Cyclic) {
      auto& k = f[t.block.prime()];
      k = std::max(k, t.block.power());
    }
  }
  return f;
}

}  // namespace conntop

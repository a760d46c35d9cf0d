#include "conntop/finite_oracle.hpp"

#include <algorithm>
#include <numeric>

#include "conntop/numeric.hpp"

namespace conntop {
namespace oracle {

std::vector<std::uint64_t> ConcreteGroup::decode(std::uint64_t index) const {
  std::vector<std::uint64_t> coords(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    coords[i] = index % factors[i];
    index /= factors[i];
  }
  return coords;
}

std::uint64_t ConcreteGroup::encode(const std::vector<std::uint64_t>& coords) const {
  std::uint64_t index = 0;
  for (std::size_t i = factors.size(); i-- > 0;) {
    index = index * factors[i] + coords[i];
  }
  return index;
}

std::uint64_t ConcreteGroup::scale(std::uint64_t m, std::uint64_t index) const {
  std::vector<std::uint64_t> coords = decode(index);
  for (std::size_t i = 0; i < factors.size(); ++i) coords[i] = (m % factors[i]) * coords[i] % factors[i];
  return encode(coords);
}

ConcreteGroup make_group(std::vector<std::uint64_t> factors, std::uint64_t max_order) {
  ConcreteGroup g;
  for (auto n : factors) {
    if (n < 2) throw Error("make_group: factors must be >= 2");
    if (g.order > max_order / n) throw TooLarge("group order exceeds bound");
    g.order *= n;
  }
  g.factors = std::move(factors);
  return g;
}

ConcreteGroup realize(const Presentation& g, std::uint64_t max_order) {
  std::vector<std::uint64_t> factors;
  for (const auto& t : g.terms()) {
    if (t.block.kind() != BlockKind::Cyclic || t.mult.is_infinite()) {
      throw NotFinite("presentation is not a finite group: " + t.block.str() + "^" + t.mult.str());
    }
    const mpz_class& n = t.mult.fin_value();
    if (!n.fits_ulong_p() || n.get_ui() > max_order) throw TooLarge("multiplicity too large");
    std::uint64_t pk = 1;
    for (std::uint32_t i = 0; i < t.block.power(); ++i) {
      if (pk > max_order / t.block.prime()) throw TooLarge("factor exceeds bound");
      pk *= t.block.prime();
    }
    for (unsigned long i = 0; i < n.get_ui(); ++i) factors.push_back(pk);
  }
  return make_group(std::move(factors), max_order);
}

ElementSet all_elements(const ConcreteGroup& g) {
  ElementSet s;
  s.elems.resize(g.order);
  std::iota(s.elems.begin(), s.elems.end(), 0);
  return s;
}

ElementSet image_mG(std::uint64_t m, const ConcreteGroup& g) {
  std::vector<std::uint64_t> out;
  out.reserve(g.order);
  for (std::uint64_t x = 0; x < g.order; ++x) out.push_back(g.scale(m, x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return ElementSet{std::move(out)};
}

ElementSet kernel_m(std::uint64_t m, const ConcreteGroup& g) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < g.order; ++x) {
    if (g.scale(m, x) == 0) out.push_back(x);
  }
  return ElementSet{std::move(out)};
}

namespace {
// {p x : x in s}, deduplicated.
std::vector<std::uint64_t> scale_set(const ConcreteGroup& g, std::uint64_t p,
                                     const std::vector<std::uint64_t>& s) {
  std::vector<std::uint64_t> out;
  out.reserve(s.size());
  for (auto x : s) out.push_back(g.scale(p, x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t count_p_torsion(const ConcreteGroup& g, std::uint64_t p,
                              const std::vector<std::uint64_t>& s) {
  std::uint64_t n = 0;
  for (auto x : s) {
    if (g.scale(p, x) == 0) ++n;
  }
  return n;
}
}  // namespace

Presentation iso_type(const ConcreteGroup& g, const ElementSet& s) {
  std::vector<Term> terms;
  for (const auto& [p, unused] : factorize_u64(s.size())) {
    std::vector<std::uint64_t> layer = s.elems;
    std::uint64_t prev = count_p_torsion(g, p, layer);
    std::uint32_t i = 1;
    while (prev > 1) {
      layer = scale_set(g, p, layer);
      std::uint64_t cur = count_p_torsion(g, p, layer);
      // alpha_{p,i} = log_p(prev / cur)
      std::uint64_t ratio = prev / cur;
      std::uint32_t alpha = 0;
      while (ratio > 1) {
        if (ratio % p != 0) throw Error("iso_type: torsion layer ratio is not a power of p");
        ratio /= p;
        ++alpha;
      }
      if (alpha > 0) terms.push_back({Block::cyclic(p, i), Cardinal::fin(alpha)});
      prev = cur;
      ++i;
    }
  }
  return Presentation::normalize(std::move(terms));
}

Presentation iso_type(const ConcreteGroup& g) { return iso_type(g, all_elements(g)); }

namespace {
// Multisets of powers p^1..p^e with exponents summing to e (partitions of e).
void partitions_rec(std::uint32_t remaining, std::uint32_t max_part,
                    std::vector<std::uint32_t>& cur,
                    std::vector<std::vector<std::uint32_t>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (std::uint32_t part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::uint32_t>> partitions(std::uint32_t e) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cur;
  partitions_rec(e, e, cur, out);
  return out;
}
}  // namespace

std::vector<std::vector<std::uint64_t>> factor_multisets_of_order(std::uint64_t n) {
  std::vector<std::vector<std::uint64_t>> acc{{}};
  for (const auto& [p, e] : factorize_u64(n)) {
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& part : partitions(e)) {
      std::vector<std::uint64_t> powers;
      for (auto k : part) {
        std::uint64_t pk = 1;
        for (std::uint32_t i = 0; i < k; ++i) pk *= p;
        powers.push_back(pk);
      }
      for (const auto& base : acc) {
        auto combined = base;
        combined.insert(combined.end(), powers.begin(), powers.end());
        next.push_back(std::move(combined));
      }
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace oracle
}  // namespace conntop

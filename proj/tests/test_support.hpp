#pragma once

#include <cstdint>
#include <vector>

#include "conntop/cardinal.hpp"
#include "conntop/hm_sim.hpp"
#include "conntop/presentation.hpp"

namespace conntop {
namespace testsupport {

// splitmix64; deterministic across platforms.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return next() % n; }
  bool chance(unsigned pct) { return below(100) < pct; }
};

struct CorpusOptions {
  bool bounded_only = false;
  // c+ multiplicities, restricted to cyclic terms so that every invariant
  // comparison stays inside the decidable fragment.
  bool allow_succ = true;
  // Keep the cyclic-part exponent a divisor of 24 (so the full n-scan up to
  // 64 covers the attaining multiplier).
  bool small_exponent = false;
  bool allow_trivial = true;
  std::size_t max_terms = 5;
};

Presentation random_presentation(Rng& rng, const CorpusOptions& opt);
std::vector<Presentation> make_corpus(std::size_t count, std::uint64_t seed,
                                      const CorpusOptions& opt = {});

// The direct sum of sigma copies of g: every multiplicity absorbs sigma.
Presentation power_sigma(const Presentation& g, const Cardinal& sigma);

hm::Elem random_elem(Rng& rng, const hm::BaseGroup& base);
hm::StepFunction random_step_function(Rng& rng, const hm::BaseGroup& base,
                                      std::size_t max_pieces = 6);

}  // namespace testsupport
}  // namespace conntop

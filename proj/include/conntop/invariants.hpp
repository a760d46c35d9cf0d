#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "conntop/cardinal.hpp"
#include "conntop/presentation.hpp"
#include "conntop/structure_ops.hpp"

namespace conntop {

// Ulm-Kaplanski invariants of a bounded non-trivial group.
struct UKTable {
  struct PerPrime {
    std::uint64_t p;
    std::vector<Cardinal> alpha;   // alpha[i-1] is the multiplicity of Z(p^i)
    std::uint32_t leading_index;   // m_p
    const Cardinal& leading() const { return alpha.back(); }
  };
  std::vector<PerPrime> primes;  // sorted by p
};

// Raises NotBounded / TrivialGroup. Cross-checks |k_p G| against the leading
// invariant for every prime before returning.
UKTable uk_invariants(const Presentation& g);

// w_d(G) = min |nG| and r_d(G) = min r(nG), both attained at the exponent of
// the cyclic sub-sum: multiplying further never changes the cardinality or
// rank of a non-cyclic block.
Cardinal divisible_weight(const Presentation& g);
Cardinal divisible_rank(const Presentation& g);

struct MGroupDecision {
  bool is_m_group;
  std::optional<mpz_class> witness_m;   // on false: m with 0 < |mG| ... < c
  std::optional<Cardinal> witness_card; // |mG| for the witness
};

// Markov's condition: every mG is trivial or of size >= c. Bounded groups
// are scanned over the divisors of their exponent; unbounded groups reduce
// to w_d(G) >= c.
MGroupDecision is_m_group(const Presentation& g);

// Admitting a connected group topology is equivalent to being an M-group.
bool admits_connected_topology(const Presentation& g);

bool is_w_divisible(const Presentation& g);  // w_d(G) = |G|
bool is_r_divisible(const Presentation& g);  // r_d(G) = r(G)

// A witness family of |G|-many unbounded direct summands.
struct SnbCertificate {
  enum class Kind {
    BlockCopies,        // one term's copies, multiplicity = |G|
    TowerTails,         // one tower split into w infinite tail classes
    SocPrimePartition,  // socle primes split into w infinite classes
  };
  Kind kind;
  Block block;
  Cardinal index;  // |I| = |G|
  std::string description;
};

struct SnbDecision {
  bool strongly_unbounded;
  std::optional<SnbCertificate> certificate;
};

SnbDecision is_strongly_unbounded(const Presentation& g);
bool verify_snb_certificate(const Presentation& g, const SnbCertificate& cert);

// G isomorphic to the direct sum of sigma copies of itself; sigma infinite.
bool is_sigma_homogeneous(const Presentation& g, const Cardinal& sigma);

struct TorusEmbeddingCheck {
  bool embeddable;
  std::string reason;
};

// Dense embeddability into T^kappa for kappa >= c, in the log-free form
// kappa <= 2^w_d(G) and |G| <= 2^kappa.
TorusEmbeddingCheck check_torus_embedding(const Presentation& g, const Cardinal& kappa);

struct InvariantReport {
  Cardinal cardinality;
  std::optional<mpz_class> exponent;  // nullopt = infinite
  RankProfile rank_profile;
  Cardinal w_d;
  Cardinal r_d;
  std::optional<UKTable> uk;  // bounded non-trivial groups only
  bool m_group = false;
  bool w_divisible = false;
  bool r_divisible = false;
  bool strongly_unbounded = false;
  std::optional<mpz_class> m_group_witness;
};

InvariantReport invariant_report(const Presentation& g);

}  // namespace conntop

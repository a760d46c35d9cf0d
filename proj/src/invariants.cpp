#include "conntop/invariants.hpp"

#include <algorithm>
#include <map>

#include "conntop/numeric.hpp"

namespace conntop {

UKTable uk_invariants(const Presentation& g) {
  if (g.trivial()) throw TrivialGroup("trivial group has no Ulm-Kaplanski invariants");
  std::map<std::uint64_t, std::vector<Cardinal>> per_prime;
  for (const auto& t : g.terms()) {
    if (t.block.kind() != BlockKind::Cyclic) {
      throw NotBounded("Ulm-Kaplanski invariants require a group of finite exponent");
    }
    auto& alpha = per_prime[t.block.prime()];
    if (alpha.size() < t.block.power()) alpha.resize(t.block.power(), Cardinal::zero());
    alpha[t.block.power() - 1] = csum(alpha[t.block.power() - 1], t.mult);
  }

  UKTable table;
  for (auto& [p, alpha] : per_prime) {
    table.primes.push_back({p, std::move(alpha), static_cast<std::uint32_t>(0)});
    auto& row = table.primes.back();
    row.leading_index = static_cast<std::uint32_t>(row.alpha.size());
  }

  // |k_p G| must match the leading invariant: p^alpha when finite, alpha
  // when infinite.
  Factored k = cyclic_exponent_valuations(g);
  for (const auto& row : table.primes) {
    Factored kp = k;
    if (--kp[row.p] == 0) kp.erase(row.p);
    Cardinal observed = cardinality(multiply(kp, g));
    const Cardinal& lead = row.leading();
    Cardinal expected = lead;
    if (lead.is_finite()) {
      mpz_class v;
      if (!lead.fin_value().fits_ulong_p()) throw TooLarge("leading invariant too large");
      mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(row.p), lead.fin_value().get_ui());
      expected = Cardinal::fin(v);
    }
    if (!(observed == expected)) {
      throw Error("internal: |k_p G| disagrees with the leading invariant at p=" +
                  std::to_string(row.p));
    }
  }
  return table;
}

Cardinal divisible_weight(const Presentation& g) {
  return cardinality(multiply(cyclic_exponent_valuations(g), g));
}

Cardinal divisible_rank(const Presentation& g) {
  return rank_profile(multiply(cyclic_exponent_valuations(g), g)).r;
}

MGroupDecision is_m_group(const Presentation& g) {
  if (g.trivial()) return {true, std::nullopt, std::nullopt};
  if (exponent(g)) {
    // Bounded: mG = dG for d = gcd(m, exponent), so the divisors suffice.
    Factored k = cyclic_exponent_valuations(g);
    for (const auto& d : divisors(k, 200000)) {
      Presentation mg = multiply(d, g);
      if (mg.trivial()) continue;
      Cardinal card = cardinality(mg);
      if (!ge(card, Cardinal::continuum())) {
        return {false, factored_value(d), card};
      }
    }
    return {true, std::nullopt, std::nullopt};
  }
  Cardinal wd = divisible_weight(g);
  if (ge(wd, Cardinal::continuum())) return {true, std::nullopt, std::nullopt};
  return {false, factored_value(cyclic_exponent_valuations(g)), wd};
}

bool admits_connected_topology(const Presentation& g) { return is_m_group(g).is_m_group; }

bool is_w_divisible(const Presentation& g) {
  return eq(divisible_weight(g), cardinality(g));
}

bool is_r_divisible(const Presentation& g) {
  return eq(divisible_rank(g), rank_profile(g).r);
}

SnbDecision is_strongly_unbounded(const Presentation& g) {
  if (g.trivial()) return {false, std::nullopt};
  if (!ge(divisible_rank(g), Cardinal::omega())) return {false, std::nullopt};
  if (!is_w_divisible(g)) return {false, std::nullopt};

  Cardinal size = cardinality(g);
  // An unbounded term carrying the full cardinality: its copies are the family.
  for (const auto& t : g.terms()) {
    if (t.block.is_unbounded() && compare(t.mult, size) == Ordering::EQ) {
      SnbCertificate cert{SnbCertificate::Kind::BlockCopies, t.block, size,
                          "the " + size.str() + " copies of " + t.block.str() +
                              ", each unbounded, are independent summands"};
      return {true, std::move(cert)};
    }
  }
  // Otherwise |G| = w: split a single tower into infinitely many tails, or
  // the socle primes into infinitely many infinite classes.
  for (const auto& t : g.terms()) {
    if (t.block.kind() == BlockKind::Tower) {
      SnbCertificate cert{SnbCertificate::Kind::TowerTails, t.block, size,
                          "partition the summands Z(p^n) of " + t.block.str() +
                              " into w infinite classes; each class sum is unbounded"};
      return {true, std::move(cert)};
    }
  }
  for (const auto& t : g.terms()) {
    if (t.block.kind() == BlockKind::Soc) {
      SnbCertificate cert{SnbCertificate::Kind::SocPrimePartition, t.block, size,
                          "partition the socle primes of " + t.block.str() +
                              " into w infinite classes; each class carries elements of "
                              "unbounded order"};
      return {true, std::move(cert)};
    }
  }
  throw Error("internal: strongly unbounded group without a witness family");
}

bool verify_snb_certificate(const Presentation& g, const SnbCertificate& cert) {
  if (!eq(cert.index, cardinality(g))) return false;
  switch (cert.kind) {
    case SnbCertificate::Kind::BlockCopies:
      if (!cert.block.is_unbounded()) return false;
      for (const auto& t : g.terms()) {
        if (t.block == cert.block && compare(t.mult, cert.index) == Ordering::EQ) return true;
      }
      return false;
    case SnbCertificate::Kind::TowerTails:
      if (!eq(cert.index, Cardinal::omega())) return false;
      for (const auto& t : g.terms()) {
        if (t.block == cert.block && t.block.kind() == BlockKind::Tower) return true;
      }
      return false;
    case SnbCertificate::Kind::SocPrimePartition:
      if (!eq(cert.index, Cardinal::omega())) return false;
      for (const auto& t : g.terms()) {
        if (t.block == cert.block && t.block.kind() == BlockKind::Soc) return true;
      }
      return false;
  }
  return false;
}

bool is_sigma_homogeneous(const Presentation& g, const Cardinal& sigma) {
  if (!sigma.is_infinite()) throw PreconditionFailed("sigma must be infinite");
  for (const auto& t : g.terms()) {
    auto ge_sigma = tri_le(sigma, t.mult);
    if (!ge_sigma) {
      throw UndecidableComparison("cannot decide " + t.mult.str() + " >= " + sigma.str() +
                                  " in ZFC");
    }
    if (!*ge_sigma) return false;
  }
  return true;
}

TorusEmbeddingCheck check_torus_embedding(const Presentation& g, const Cardinal& kappa) {
  if (kappa.is_succ()) {
    throw SuccNotSupported("torus exponent " + kappa.str() + " is outside the cardinal fragment");
  }
  if (!ge(kappa, Cardinal::continuum())) {
    throw KappaTooSmall("torus exponent must be at least c");
  }
  Cardinal wd = divisible_weight(g);
  if (!le(kappa, exp2(wd))) {
    return {false, "kappa = " + kappa.str() + " exceeds 2^w_d(G) = " + exp2(wd).str()};
  }
  if (!le(cardinality(g), exp2(kappa))) {
    return {false, "|G| = " + cardinality(g).str() + " exceeds 2^kappa = " + exp2(kappa).str()};
  }
  return {true, "log kappa <= w_d(G) <= |G| <= 2^kappa"};
}

InvariantReport invariant_report(const Presentation& g) {
  InvariantReport rep;
  rep.cardinality = cardinality(g);
  rep.exponent = exponent(g);
  rep.rank_profile = rank_profile(g);
  rep.w_d = divisible_weight(g);
  rep.r_d = divisible_rank(g);
  if (rep.exponent && !g.trivial()) rep.uk = uk_invariants(g);
  MGroupDecision m = is_m_group(g);
  rep.m_group = m.is_m_group;
  rep.m_group_witness = m.witness_m;
  rep.w_divisible = is_w_divisible(g);
  rep.r_divisible = is_r_divisible(g);
  rep.strongly_unbounded = is_strongly_unbounded(g).strongly_unbounded;
  return rep;
}

}  // namespace conntop

#include <doctest.h>

#include "conntop/dsl.hpp"
#include "conntop/finite_oracle.hpp"
#include "conntop/invariants.hpp"
#include "test_support.hpp"

using namespace conntop;
using dsl::parse;

TEST_CASE("divisible weight") {
  CHECK(divisible_weight(parse("Z(2)^c + Z^w")) == Cardinal::omega());
  CHECK(divisible_weight(parse("Z")) == Cardinal::omega());  // Z is w-divisible
  CHECK(divisible_weight(parse("Z(4)^c")) == Cardinal::one());
  // scan: |nG| >= w_d for every n <= 64, with equality at the cyclic exponent
  for (const char* s : {"Z(2)^c + Z^w", "Z(4)^c + L(2)", "Z(8) + Z(9) + Q^c", "Soc(P\\{2})^w"}) {
    Presentation g = parse(s);
    Cardinal wd = divisible_weight(g);
    for (std::uint64_t n = 1; n <= 64; ++n) {
      CHECK(tri_le(wd, cardinality(multiply(n, g))) == true);
    }
    CHECK(cardinality(multiply(cyclic_exponent_valuations(g), g)) == wd);
  }
}

TEST_CASE("divisible rank") {
  CHECK(divisible_rank(parse("Z + Z(2)^c")) == Cardinal::one());
  CHECK(divisible_rank(parse("L(2)")) == Cardinal::omega());
  CHECK(divisible_rank(parse("Z(8)^2^c")) == Cardinal::zero());
  // the tower keeps full p-rank at every level
  for (std::uint64_t n = 0; n <= 6; ++n) {
    Presentation g = multiply(1ull << n, parse("L(2)"));
    CHECK(rank_profile(g).rank_at(2) == Cardinal::omega());
  }
  // rank scan mirrors the weight scan
  for (const char* s : {"Z + Z(2)^c", "L(2) + Z(9)", "Q^w + Z(2^3)^c"}) {
    Presentation g = parse(s);
    Cardinal rd = divisible_rank(g);
    for (std::uint64_t n = 1; n <= 64; ++n) {
      CHECK(tri_le(rd, rank_profile(multiply(n, g)).r) == true);
    }
  }
}

TEST_CASE("Ulm-Kaplanski invariants") {
  UKTable uk = uk_invariants(parse("Z(2)^3 + Z(4)^c + Z(3)^w"));
  REQUIRE(uk.primes.size() == 2);
  CHECK(uk.primes[0].p == 2);
  CHECK(uk.primes[0].alpha == std::vector<Cardinal>{Cardinal::fin(3), Cardinal::continuum()});
  CHECK(uk.primes[0].leading_index == 2);
  CHECK(uk.primes[0].leading() == Cardinal::continuum());
  CHECK(uk.primes[1].p == 3);
  CHECK(uk.primes[1].leading_index == 1);
  CHECK(uk.primes[1].leading() == Cardinal::omega());
  // |4G| = |Z(3)^w| = w matches the leading invariant at 3
  CHECK(cardinality(multiply(4, parse("Z(2)^3 + Z(4)^c + Z(3)^w"))) == Cardinal::omega());

  UKTable small = uk_invariants(parse("Z(8)"));
  CHECK(small.primes[0].leading_index == 3);
  CHECK(small.primes[0].leading() == Cardinal::one());
  // oracle: 4 * Z(8) has exactly 2 = p^1 elements
  CHECK(oracle::image_mG(4, oracle::make_group({8})).size() == 2);

  // absent layers are zero
  UKTable gap = uk_invariants(parse("Z(2) + Z(8)"));
  CHECK(gap.primes[0].alpha ==
        std::vector<Cardinal>{Cardinal::one(), Cardinal::zero(), Cardinal::one()});

  CHECK_THROWS_AS((void)uk_invariants(parse("Z^w")), NotBounded);
  CHECK_THROWS_AS((void)uk_invariants(Presentation()), TrivialGroup);
}

TEST_CASE("Markov condition") {
  MGroupDecision d = is_m_group(parse("Z(2)^c + Z(4)^3"));
  CHECK(!d.is_m_group);
  CHECK(*d.witness_m == 2);
  CHECK(*d.witness_card == Cardinal::fin(8));

  CHECK(is_m_group(parse("Z(2)^w + Z^c")).is_m_group);
  CHECK(is_m_group(Presentation()).is_m_group);
  CHECK(is_m_group(parse("Z(4)^c")).is_m_group);
  CHECK(is_m_group(parse("Z(2)^c+")).is_m_group);  // c+ >= c is a theorem
  CHECK(admits_connected_topology(parse("Z(2)^w + Z^c")));
  CHECK(!admits_connected_topology(parse("Z(2)^c + Z(4)^3")));
  // finite non-trivial groups fail at m = 1 (the zero subgroup has small index)
  MGroupDecision fin = is_m_group(parse("Z(2)"));
  CHECK(!fin.is_m_group);
  CHECK(*fin.witness_m == 1);
  // the aleph-1 multiplicity runs into the continuum hypothesis
  CHECK_THROWS_AS((void)is_m_group(parse("Z(2)^w+")), UndecidableComparison);
}

TEST_CASE("w- and r-divisibility") {
  CHECK(is_w_divisible(parse("Z")));
  CHECK(!is_w_divisible(parse("Z(2)^c")));
  CHECK(is_w_divisible(parse("Z(2)^w + Z^c")));
  CHECK(is_r_divisible(parse("Q^c")));
  CHECK(!is_r_divisible(parse("Z + Z(2)")));
  CHECK(is_r_divisible(parse("Z")));
}

TEST_CASE("strongly unbounded groups and their witness families") {
  CHECK(!is_strongly_unbounded(parse("Z")).strongly_unbounded);

  SnbDecision tower = is_strongly_unbounded(parse("L(2)"));
  CHECK(tower.strongly_unbounded);
  REQUIRE(tower.certificate.has_value());
  CHECK(tower.certificate->kind == SnbCertificate::Kind::TowerTails);
  CHECK(verify_snb_certificate(parse("L(2)"), *tower.certificate));

  SnbDecision soc = is_strongly_unbounded(parse("Soc(P)"));
  CHECK(soc.strongly_unbounded);
  REQUIRE(soc.certificate.has_value());
  CHECK(soc.certificate->kind == SnbCertificate::Kind::SocPrimePartition);
  CHECK(verify_snb_certificate(parse("Soc(P)"), *soc.certificate));

  SnbDecision copies = is_strongly_unbounded(parse("Z^c"));
  CHECK(copies.strongly_unbounded);
  REQUIRE(copies.certificate.has_value());
  CHECK(copies.certificate->kind == SnbCertificate::Kind::BlockCopies);
  CHECK(verify_snb_certificate(parse("Z^c"), *copies.certificate));

  // a certificate for the wrong group fails verification
  CHECK(!verify_snb_certificate(parse("Z^w"), *copies.certificate));
}

TEST_CASE("sigma-homogeneity") {
  CHECK(is_sigma_homogeneous(Presentation(), Cardinal::continuum()));
  CHECK(is_sigma_homogeneous(parse("Z(4)^2^c + Q^c"), Cardinal::continuum()));
  CHECK(!is_sigma_homogeneous(parse("Z(2)^5"), Cardinal::omega()));
  CHECK_THROWS_AS((void)is_sigma_homogeneous(parse("Z"), Cardinal::fin(3)), PreconditionFailed);
  // c+ against 2^c is the open link
  CHECK_THROWS_AS((void)is_sigma_homogeneous(parse("Z(2)^c+"), Cardinal::beth(2)),
                  UndecidableComparison);
  // agreement with the literal definition G = G^(sigma)
  testsupport::Rng rng(17);
  for (int i = 0; i < 300; ++i) {
    Presentation g = testsupport::random_presentation(rng, {.allow_succ = false});
    for (const Cardinal& sigma : {Cardinal::omega(), Cardinal::continuum(), Cardinal::beth(2)}) {
      CHECK(is_sigma_homogeneous(g, sigma) == (testsupport::power_sigma(g, sigma) == g));
    }
  }
}

TEST_CASE("torus embeddings") {
  CHECK(check_torus_embedding(parse("Z^c"), Cardinal::continuum()).embeddable);
  TorusEmbeddingCheck bad = check_torus_embedding(parse("Z(2)^c"), Cardinal::continuum());
  CHECK(!bad.embeddable);
  CHECK(bad.reason.find("w_d") != std::string::npos);
  CHECK_THROWS_AS((void)check_torus_embedding(parse("Z"), Cardinal::omega()), KappaTooSmall);
  CHECK_THROWS_AS((void)check_torus_embedding(parse("Z"), Cardinal::succ_of_beth(1)),
                  SuccNotSupported);
  // too big for the target
  CHECK(!check_torus_embedding(parse("Z^2^2^c"), Cardinal::continuum()).embeddable);
}

namespace {
struct Flags {
  Cardinal size, wd, rd, r;
  bool w_div, r_div, snb;
};

Flags flags_of(const Presentation& g) {
  Flags f{cardinality(g), divisible_weight(g), divisible_rank(g), rank_profile(g).r, false, false,
          false};
  f.w_div = is_w_divisible(g);
  f.r_div = is_r_divisible(g);
  f.snb = is_strongly_unbounded(g).strongly_unbounded;
  return f;
}
}  // namespace

TEST_CASE("the divisibility lemma suite holds corpus-wide") {
  auto corpus = testsupport::make_corpus(500, 20260810, {});
  std::size_t violations = 0;
  for (const auto& g : corpus) {
    Flags f = flags_of(g);
    bool rd_infinite = ge(f.rd, Cardinal::omega());
    bool uncountable = gt(f.size, Cardinal::omega());

    // strongly unbounded groups are w-divisible, of full divisible rank and weight
    if (f.snb && !(f.w_div && eq(f.rd, f.wd) && eq(f.wd, f.size) && f.r_div && rd_infinite)) {
      ++violations;
    }
    // r-divisible of infinite divisible rank implies w-divisible
    if (f.r_div && rd_infinite && !f.w_div) ++violations;
    // uncountable w-divisible implies r-divisible
    if (uncountable && f.w_div && !f.r_div) ++violations;
    // uncountable: strongly unbounded iff w-divisible
    if (uncountable && f.snb != f.w_div) ++violations;
    // countable: strongly unbounded iff infinite divisible rank
    if (!uncountable && f.snb != rd_infinite) ++violations;
    // r_d < w_d exactly when r_d is finite
    if (lt(f.rd, f.wd) != f.rd.is_finite()) ++violations;
    // groups of finite exponent have trivial divisible weight and rank
    if (exponent(g) && !(f.wd == Cardinal::one() && f.rd == Cardinal::zero())) ++violations;
    // the multiple attaining w_d is a w-divisible subgroup
    if (!is_w_divisible(multiply(cyclic_exponent_valuations(g), g))) ++violations;
    // w_d and r_d really are minima: no multiplier undercuts them
    for (std::uint64_t n = 1; n <= 24; ++n) {
      Presentation ng = multiply(n, g);
      if (tri_le(f.wd, cardinality(ng)) != true) ++violations;
      if (tri_le(f.rd, rank_profile(ng).r) != true) ++violations;
    }
    // strongly unbounded certificates verify
    SnbDecision snb = is_strongly_unbounded(g);
    if (snb.strongly_unbounded && !verify_snb_certificate(g, *snb.certificate)) ++violations;
  }
  CHECK(violations == 0);
}

TEST_CASE("divisible weight distributes over direct sums as a supremum") {
  testsupport::Rng rng(18);
  std::size_t violations = 0;
  for (int i = 0; i < 250; ++i) {
    Presentation a = testsupport::random_presentation(rng, {});
    Presentation b = testsupport::random_presentation(rng, {});
    Presentation g = direct_sum(a, b);
    if (!(divisible_weight(g) == csup({divisible_weight(a), divisible_weight(b)}))) ++violations;
    // G is w-divisible iff a full-size summand is
    bool via_parts = (is_w_divisible(a) && eq(cardinality(g), cardinality(a))) ||
                     (is_w_divisible(b) && eq(cardinality(g), cardinality(b)));
    if (is_w_divisible(g) != via_parts) ++violations;
  }
  CHECK(violations == 0);
}

TEST_CASE("leading-invariant test agrees with the divisor scan on bounded groups") {
  auto corpus = testsupport::make_corpus(300, 424242, {.bounded_only = true});
  std::size_t violations = 0;
  for (const auto& g : corpus) {
    if (g.trivial()) continue;
    bool leading_ok = true;
    for (const auto& row : uk_invariants(g).primes) {
      if (!ge(row.leading(), Cardinal::continuum())) leading_ok = false;
    }
    if (leading_ok != is_m_group(g).is_m_group) ++violations;
  }
  CHECK(violations == 0);
}

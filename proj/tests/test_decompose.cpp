#include <doctest.h>

#include "conntop/decompose.hpp"
#include "conntop/dsl.hpp"
#include "test_support.hpp"

using namespace conntop;
using dsl::parse;

TEST_CASE("bounded/w-divisible split") {
  auto [k, m] = split_bounded_wdiv(parse("Z(4)^c + Q^w"));
  CHECK(k == parse("Z(4)^c"));
  CHECK(m == parse("Q^w"));
  auto [k2, m2] = split_bounded_wdiv(parse("Z(2)^3"));
  CHECK(k2 == parse("Z(2)^3"));
  CHECK(m2 == Presentation());
  auto [k3, m3] = split_bounded_wdiv(parse("L(5)"));
  CHECK(k3 == Presentation());
  CHECK(m3 == parse("L(5)"));
  CHECK(is_w_divisible(m3));
}

TEST_CASE("splitting a bounded group at sigma") {
  auto [l, n] = split_sigma(parse("Z(2)^5 + Z(4)^2^c"), Cardinal::succ_of_beth(1));
  CHECK(l == parse("Z(2)^5"));
  CHECK(n == parse("Z(4)^2^c"));

  auto [l2, n2] = split_sigma(Presentation(), Cardinal::omega());
  CHECK(l2 == Presentation());
  CHECK(n2 == Presentation());

  auto [l3, n3] = split_sigma(parse("Z(3)^w"), Cardinal::omega());
  CHECK(l3 == Presentation());
  CHECK(n3 == parse("Z(3)^w"));

  CHECK_THROWS_AS(split_sigma(parse("Z"), Cardinal::omega()), NotBounded);
  // |L| < sigma and N sigma-homogeneous, corpus-wide
  auto corpus = testsupport::make_corpus(200, 77, {.bounded_only = true});
  for (const auto& g : corpus) {
    for (const Cardinal& sigma : {Cardinal::omega(), Cardinal::continuum()}) {
      auto [small, large] = split_sigma(g, sigma);
      CHECK(direct_sum(small, large) == g);
      CHECK(lt(cardinality(small), sigma));
      CHECK(is_sigma_homogeneous(large, sigma));
    }
  }
}

TEST_CASE("homogeneous split") {
  auto [n, h] = homogeneous_split(parse("Z(2)^5 + Z(4)^2^c + Z^c"), Cardinal::continuum());
  CHECK(n == parse("Z(4)^2^c"));
  CHECK(h == parse("Z(2)^5 + Z^c"));
  CHECK(cardinality(h) == Cardinal::continuum());

  auto [n2, h2] = homogeneous_split(parse("Q^c"), Cardinal::continuum());
  CHECK(n2 == Presentation());
  CHECK(h2 == parse("Q^c"));

  CHECK_THROWS_AS(homogeneous_split(parse("Z(2)^c"), Cardinal::continuum()), PreconditionFailed);

  auto corpus = testsupport::make_corpus(250, 78, {});
  for (const auto& g : corpus) {
    for (const Cardinal& sigma : {Cardinal::omega(), Cardinal::continuum()}) {
      if (!ge(divisible_weight(g), sigma)) continue;
      auto [nn, hh] = homogeneous_split(g, sigma);
      CHECK(direct_sum(nn, hh) == g);
      CHECK(exponent(nn).has_value());
      CHECK(is_sigma_homogeneous(nn, sigma.succ()));
      CHECK(is_w_divisible(hh));
      CHECK(eq(cardinality(hh), divisible_weight(g)));
    }
  }
}

TEST_CASE("homogeneous w-divisible subgroup") {
  CHECK(homogeneous_wdiv_subgroup(parse("Z^c + Z(2)^5")) == parse("Z^c"));
  CHECK(homogeneous_wdiv_subgroup(parse("Soc(P)^c")) == parse("Soc(P)^c"));
  CHECK_THROWS_AS((void)homogeneous_wdiv_subgroup(parse("Z(2)^c")), PreconditionFailed);
  CHECK_THROWS_AS((void)homogeneous_wdiv_subgroup(parse("L(2)")), PreconditionFailed);  // size w < c

  // above c the subgroup keeps every large term
  CHECK(homogeneous_wdiv_subgroup(parse("Z(2)^2^c + Z^2^c + Q^w")) == parse("Z(2)^2^c + Z^2^c"));

  auto corpus = testsupport::make_corpus(300, 79, {});
  for (const auto& g : corpus) {
    if (!is_w_divisible(g) || !ge(cardinality(g), Cardinal::continuum())) continue;
    Presentation h = homogeneous_wdiv_subgroup(g);
    CHECK(is_sigma_homogeneous(h, Cardinal::continuum()));
    CHECK(is_w_divisible(h));
    CHECK(eq(cardinality(h), cardinality(g)));
  }
}

TEST_CASE("finite rank decomposition") {
  FiniteRankDecomposition d = finite_rank_decomposition(parse("Z^2 + Z(3^inf) + Z(4)^c"));
  CHECK(d.torsion_free == parse("Z^2"));
  CHECK(d.divisible_torsion == parse("Z(3^inf)"));
  CHECK(d.bounded == parse("Z(4)^c"));
  CHECK(divisible_rank(parse("Z^2 + Z(3^inf) + Z(4)^c")) == Cardinal::fin(3));

  FiniteRankDecomposition b = finite_rank_decomposition(parse("Z(8)^w"));
  CHECK(b.torsion_free == Presentation());
  CHECK(b.divisible_torsion == Presentation());
  CHECK(b.bounded == parse("Z(8)^w"));
  CHECK(divisible_rank(parse("Z(8)^w")) == Cardinal::zero());

  CHECK_THROWS_AS((void)finite_rank_decomposition(parse("L(2)")), PreconditionFailed);

  auto corpus = testsupport::make_corpus(300, 80, {});
  for (const auto& g : corpus) {
    if (!divisible_rank(g).is_finite()) continue;
    FiniteRankDecomposition fr = finite_rank_decomposition(g);
    CHECK(direct_sum(direct_sum(fr.torsion_free, fr.divisible_torsion), fr.bounded) == g);
    CHECK(divisible_rank(g) ==
          csum(rank_profile(fr.torsion_free).r0, rank_profile(fr.divisible_torsion).r));
  }
}

TEST_CASE("the HM group absorbs c into every multiplicity") {
  CHECK(hm_symbolic(parse("Z(2)")) == parse("Z(2)^c"));
  CHECK(hm_symbolic(Presentation()) == Presentation());
  CHECK(hm_symbolic(parse("Z^2^c")) == parse("Z^2^c"));

  auto corpus = testsupport::make_corpus(300, 81, {});
  for (const auto& g : corpus) {
    Presentation hm = hm_symbolic(g);
    CHECK(hm == testsupport::power_sigma(g, Cardinal::continuum()));
    CHECK(hm_symbolic(hm) == hm);  // idempotent
    if (!g.trivial()) CHECK(is_sigma_homogeneous(hm, Cardinal::continuum()));
  }
  testsupport::Rng rng(82);
  for (int i = 0; i < 150; ++i) {
    Presentation a = testsupport::random_presentation(rng, {});
    Presentation b = testsupport::random_presentation(rng, {});
    CHECK(hm_symbolic(direct_sum(a, b)) == direct_sum(hm_symbolic(a), hm_symbolic(b)));
  }
}

TEST_CASE("plans: refusal, bounded leaf, full tree") {
  PlanOutcome refusal = plan_connected_topology(parse("Z(2)^c + Z(4)^3"));
  CHECK(!refusal.admits);
  CHECK(*refusal.witness_m == 2);
  CHECK(verify_plan(refusal, parse("Z(2)^c + Z(4)^3")));

  PlanOutcome kirku = plan_connected_topology(parse("Z(2)^c"));
  REQUIRE(kirku.admits);
  REQUIRE(kirku.certificate.has_value());
  CHECK(kirku.certificate->children.size() == 1);
  CHECK(kirku.certificate->children[0].rule == "kirku-topology");
  CHECK(verify_plan(kirku, parse("Z(2)^c")));

  Presentation g = parse("Z(2)^5 + Z(4)^2^c + Z^c");
  PlanOutcome full = plan_connected_topology(g);
  REQUIRE(full.admits);
  const PlanStep& root = *full.certificate;
  CHECK(root.rule == "markov-criterion");
  REQUIRE(root.children.size() == 1);
  const PlanStep& split = root.children[0];
  CHECK(split.rule == "homogeneous-split");
  CHECK(split.outputs[0] == parse("Z(4)^2^c"));
  CHECK(split.outputs[1] == parse("Z(2)^5 + Z^c"));
  REQUIRE(split.children.size() == 2);
  CHECK(split.children[0].rule == "hm-topology");
  const PlanStep& branch = split.children[1];
  CHECK(branch.rule == "w-divisible-branch");
  REQUIRE(branch.children.size() == 1);
  const PlanStep& hwds = branch.children[0];
  CHECK(hwds.rule == "homogeneous-wdiv-subgroup");
  CHECK(hwds.outputs[0] == parse("Z^c"));
  CHECK(hwds.param("tau") == "c");
  REQUIRE(hwds.children.size() == 1);
  const PlanStep& torus = hwds.children[0];
  CHECK(torus.rule == "torus-embedding");
  CHECK(torus.param("kappa") == "2^c");
  REQUIRE(torus.children.size() == 1);
  const PlanStep& extension = torus.children[0];
  CHECK(extension.rule == "embedding-extension");
  REQUIRE(extension.children.size() == 1);
  CHECK(extension.children[0].rule == "dense-subgroup-of-hm-torus");
  for (const PlanStep* step : {&hwds, &torus, &extension, &extension.children[0]}) {
    for (const auto& c : step->checks) CHECK(c.passed);
  }
  CHECK(verify_plan(full, g));
  CHECK(!verify_plan(full, parse("Z^c")));  // wrong group

  PlanOutcome trivial = plan_connected_topology(Presentation());
  CHECK(trivial.admits);
  CHECK(verify_plan(trivial, Presentation()));
}

TEST_CASE("plans at the edge of the cardinal fragment") {
  // Z^(c+) is an M-group, but its plan needs the torus exponent 2^(c+),
  // which is outside the decidable tower.
  CHECK(is_m_group(parse("Z^c+")).is_m_group);
  CHECK_THROWS_AS((void)plan_connected_topology(parse("Z^c+")), SuccNotSupported);
  // bounded groups with successor multiplicities stay inside the fragment
  PlanOutcome bounded = plan_connected_topology(parse("Z(2)^c+"));
  REQUIRE(bounded.admits);
  CHECK(bounded.certificate->children[0].rule == "kirku-topology");
  CHECK(verify_plan(bounded, parse("Z(2)^c+")));
}

TEST_CASE("tampered certificates fail verification") {
  Presentation g = parse("Z(2)^5 + Z(4)^2^c + Z^c");
  PlanOutcome full = plan_connected_topology(g);
  REQUIRE(full.admits);
  // claim a different split output
  PlanOutcome forged = full;
  forged.certificate->children[0].outputs[1] = parse("Z^c");
  CHECK(!verify_plan(forged, g));
  // flip a stored check
  PlanOutcome flipped = plan_connected_topology(g);
  flipped.certificate->children[0].checks[0].passed = false;
  CHECK(!verify_plan(flipped, g));
}

TEST_CASE("component realization plans") {
  Presentation g = parse("Z(2)^5 + Z^c");
  Presentation h = parse("Z^c");
  PlanOutcome comp = plan_component(g, h);
  REQUIRE(comp.admits);
  CHECK(comp.certificate->rule == "open-subgroup-component");
  CHECK(comp.certificate->children.size() == 2);
  CHECK(comp.certificate->children[1].rule == "open-subgroup-remark");
  CHECK(verify_plan(comp, g));

  PlanOutcome bad = plan_component(g, parse("Z(2)^5"));
  CHECK(!bad.admits);  // the subgroup is not an M-group
  CHECK(verify_plan(bad, parse("Z(2)^5")));  // the witness concerns the subgroup
  CHECK_THROWS_AS((void)plan_component(g, parse("Q^w")), PreconditionFailed);
}

namespace {
void collect_leaves(const PlanStep& step, std::vector<std::string>& out) {
  if (step.is_leaf()) {
    out.push_back(step.rule);
    return;
  }
  for (const auto& child : step.children) collect_leaves(child, out);
}
}  // namespace

TEST_CASE("plans succeed exactly on M-groups, corpus-wide") {
  auto corpus = testsupport::make_corpus(300, 83, {});
  std::size_t violations = 0;
  for (const auto& g : corpus) {
    PlanOutcome outcome = plan_connected_topology(g);
    if (outcome.admits != is_m_group(g).is_m_group) ++violations;
    if (!verify_plan(outcome, g)) ++violations;
    if (outcome.admits) {
      // every leaf is one of the three topology constructions
      std::vector<std::string> leaves;
      collect_leaves(*outcome.certificate, leaves);
      for (const auto& rule : leaves) {
        if (rule != "kirku-topology" && rule != "hm-topology" &&
            rule != "dense-subgroup-of-hm-torus") {
          ++violations;
        }
      }
    }
  }
  CHECK(violations == 0);
}

TEST_CASE("decomposition outputs recombine corpus-wide") {
  auto corpus = testsupport::make_corpus(300, 84, {});
  std::size_t violations = 0;
  for (const auto& g : corpus) {
    auto [k, m] = split_bounded_wdiv(g);
    if (!(direct_sum(k, m) == g)) ++violations;
    if (!exponent(k)) ++violations;
    if (!is_w_divisible(m)) ++violations;
  }
  CHECK(violations == 0);
}

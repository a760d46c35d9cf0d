#include "conntop/decompose.hpp"

#include <algorithm>

#include "conntop/dsl.hpp"
#include "conntop/numeric.hpp"

namespace conntop {

std::pair<Presentation, Presentation> split_bounded_wdiv(const Presentation& g) {
  std::vector<Term> bounded, rest;
  for (const auto& t : g.terms()) {
    (t.block.kind() == BlockKind::Cyclic ? bounded : rest).push_back(t);
  }
  return {Presentation::normalize(std::move(bounded)), Presentation::normalize(std::move(rest))};
}

std::pair<Presentation, Presentation> split_sigma(const Presentation& k, const Cardinal& sigma) {
  if (!exponent(k)) throw NotBounded("split requires a group of finite exponent");
  if (!sigma.is_infinite()) throw PreconditionFailed("sigma must be infinite");
  std::vector<Term> small, large;
  for (const auto& t : k.terms()) {
    auto below = tri_lt(t.mult, sigma);
    if (!below) {
      throw UndecidableComparison("cannot decide " + t.mult.str() + " < " + sigma.str() +
                                  " in ZFC");
    }
    (*below ? small : large).push_back(t);
  }
  return {Presentation::normalize(std::move(small)), Presentation::normalize(std::move(large))};
}

std::pair<Presentation, Presentation> homogeneous_split(const Presentation& g,
                                                        const Cardinal& sigma) {
  if (!sigma.is_infinite()) throw PreconditionFailed("sigma must be infinite");
  if (!ge(divisible_weight(g), sigma)) {
    throw PreconditionFailed("w_d(G) = " + divisible_weight(g).str() + " is below sigma = " +
                             sigma.str());
  }
  auto [k, m] = split_bounded_wdiv(g);
  auto [l, n] = split_sigma(k, sigma.succ());
  return {n, direct_sum(l, m)};
}

Presentation homogeneous_wdiv_subgroup(const Presentation& g) {
  if (!is_w_divisible(g)) throw PreconditionFailed("group is not w-divisible");
  const Cardinal c = Cardinal::continuum();
  Cardinal size = cardinality(g);
  if (!ge(size, c)) throw PreconditionFailed("|G| = " + size.str() + " is below c");

  if (gt(size, c)) {
    std::vector<Term> keep;
    for (const auto& t : g.terms()) {
      auto at_least_c = tri_le(c, t.mult);
      if (!at_least_c) {
        throw UndecidableComparison("cannot decide " + t.mult.str() + " >= c in ZFC");
      }
      if (*at_least_c) keep.push_back(t);
    }
    return Presentation::normalize(std::move(keep));
  }

  // |G| = c: one unbounded term of multiplicity c carries the size. A block
  // power is preferred; the socle power is the remaining possibility.
  for (const auto& t : g.terms()) {
    if (t.block.is_unbounded() && t.block.kind() != BlockKind::Soc && t.mult == c) {
      return Presentation::normalize({t});
    }
  }
  for (const auto& t : g.terms()) {
    if (t.block.kind() == BlockKind::Soc && t.mult == c) {
      return Presentation::normalize({t});
    }
  }
  throw Error("internal: w-divisible group of size c without a homogeneous witness term");
}

FiniteRankDecomposition finite_rank_decomposition(const Presentation& g) {
  Cardinal rd = divisible_rank(g);
  if (!rd.is_finite()) {
    throw PreconditionFailed("divisible rank " + rd.str() + " is infinite");
  }
  std::vector<Term> free_part, divisible, bounded;
  for (const auto& t : g.terms()) {
    switch (t.block.kind()) {
      case BlockKind::IntZ:
      case BlockKind::RatQ:
        free_part.push_back(t);
        break;
      case BlockKind::Prufer:
        divisible.push_back(t);
        break;
      case BlockKind::Cyclic:
        bounded.push_back(t);
        break;
      case BlockKind::Tower:
      case BlockKind::Soc:
        throw Error("internal: finite divisible rank with an unbounded-rank block");
    }
  }
  FiniteRankDecomposition out{Presentation::normalize(std::move(free_part)),
                              Presentation::normalize(std::move(divisible)),
                              Presentation::normalize(std::move(bounded))};
  Cardinal expected = csum(rank_profile(out.torsion_free).r0, rank_profile(out.divisible_torsion).r);
  if (!(rd == expected)) throw Error("internal: r_d disagrees with r0(G0) + r(D)");
  return out;
}

Presentation hm_symbolic(const Presentation& g) {
  std::vector<Term> terms;
  for (const auto& t : g.terms()) {
    terms.push_back({t.block, cprod(t.mult, Cardinal::continuum())});
  }
  return Presentation::normalize(std::move(terms));
}

// --- Certificate planner -----------------------------------------------------

std::string PlanStep::param(const std::string& key) const {
  for (const auto& [k, v] : params) {
    if (k == key) return v;
  }
  throw Error("plan step " + rule + " has no parameter " + key);
}

namespace {

PlanCheck check(std::string name, bool passed, std::string detail = "") {
  return PlanCheck{std::move(name), std::move(detail), passed};
}

bool leading_uk_at_least_c(const Presentation& g) {
  for (const auto& row : uk_invariants(g).primes) {
    if (!ge(row.leading(), Cardinal::continuum())) return false;
  }
  return true;
}

// Is h a sub-sum of g? Every term of h must sit inside a matching term of g.
bool sub_sum_of(const Presentation& h, const Presentation& g) {
  for (const auto& th : h.terms()) {
    bool found = false;
    for (const auto& tg : g.terms()) {
      if (tg.block == th.block) {
        auto fits = tri_le(th.mult, tg.mult);
        found = fits && *fits;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::vector<PlanCheck> checks_markov_criterion(const PlanStep& s) {
  const Presentation& g = s.inputs.at(0);
  const std::string branch = s.param("branch");
  std::vector<PlanCheck> out;
  if (branch == "trivial") {
    out.push_back(check("group-is-trivial", g.trivial()));
  } else if (branch == "bounded") {
    out.push_back(check("m-group-divisor-scan", is_m_group(g).is_m_group,
                        "every divisor m of the exponent gives mG trivial or |mG| >= c"));
    out.push_back(check("leading-uk-at-least-c", leading_uk_at_least_c(g),
                        "all leading Ulm-Kaplanski invariants are at least c"));
  } else if (branch == "unbounded") {
    out.push_back(check("infinite-exponent", !exponent(g).has_value()));
    out.push_back(check("w_d-at-least-c", ge(divisible_weight(g), Cardinal::continuum()),
                        "w_d(G) = " + divisible_weight(g).str()));
  } else {
    out.push_back(check("known-branch", false, "unknown branch " + branch));
  }
  return out;
}

std::vector<PlanCheck> checks_kirku(const PlanStep& s) {
  const Presentation& g = s.inputs.at(0);
  std::vector<PlanCheck> out;
  if (g.trivial()) {
    out.push_back(check("group-is-trivial", true,
                        "the only topology on the trivial group is pathwise connected"));
    return out;
  }
  out.push_back(check("finite-exponent", exponent(g).has_value()));
  out.push_back(check("leading-uk-at-least-c", leading_uk_at_least_c(g),
                      "pathwise connected, locally pathwise connected topology exists"));
  return out;
}

std::vector<PlanCheck> checks_homogeneous_split(const PlanStep& s) {
  const Presentation& g = s.inputs.at(0);
  const Presentation& n = s.outputs.at(0);
  const Presentation& h = s.outputs.at(1);
  Cardinal sigma = dsl::parse_cardinal(s.param("sigma"));
  std::vector<PlanCheck> out;
  out.push_back(check("w_d-at-least-sigma", ge(divisible_weight(g), sigma)));
  out.push_back(check("recombines-to-input", direct_sum(n, h) == g));
  out.push_back(check("summand-bounded", exponent(n).has_value()));
  out.push_back(check("summand-sigma-plus-homogeneous", is_sigma_homogeneous(n, sigma.succ())));
  out.push_back(check("complement-w-divisible", is_w_divisible(h)));
  out.push_back(check("complement-size-equals-w_d", eq(cardinality(h), divisible_weight(g))));
  return out;
}

std::vector<PlanCheck> checks_hm_topology(const PlanStep& s) {
  const Presentation& n = s.inputs.at(0);
  std::vector<PlanCheck> out;
  out.push_back(check("c-homogeneous", is_sigma_homogeneous(n, Cardinal::continuum()),
                      "HM(N) is pathwise connected and algebraically N^(c) = N"));
  return out;
}

std::vector<PlanCheck> checks_wdiv_branch(const PlanStep& s) {
  const Presentation& h = s.inputs.at(0);
  std::vector<PlanCheck> out;
  out.push_back(check("w-divisible", is_w_divisible(h)));
  out.push_back(check("size-at-least-c", ge(cardinality(h), Cardinal::continuum())));
  return out;
}

std::vector<PlanCheck> checks_homogeneous_wdiv_subgroup(const PlanStep& s) {
  const Presentation& h = s.inputs.at(0);
  const Presentation& sub = s.outputs.at(0);
  Cardinal tau = dsl::parse_cardinal(s.param("tau"));
  std::vector<PlanCheck> out;
  out.push_back(check("subgroup-of-input", sub_sum_of(sub, h)));
  out.push_back(check("subgroup-c-homogeneous", is_sigma_homogeneous(sub, Cardinal::continuum())));
  out.push_back(check("subgroup-w-divisible", is_w_divisible(sub)));
  out.push_back(check("subgroup-size-equals-input", eq(cardinality(sub), cardinality(h))));
  out.push_back(check("tau-is-subgroup-size", cardinality(sub) == tau));
  return out;
}

std::vector<PlanCheck> checks_torus_embedding(const PlanStep& s) {
  const Presentation& sub = s.inputs.at(0);
  Cardinal tau = dsl::parse_cardinal(s.param("tau"));
  Cardinal kappa = dsl::parse_cardinal(s.param("kappa"));
  std::vector<PlanCheck> out;
  out.push_back(check("kappa-is-2^tau", exp2(tau) == kappa));
  auto torus = check_torus_embedding(sub, kappa);
  out.push_back(check("dense-in-torus", torus.embeddable, torus.reason));
  return out;
}

std::vector<PlanCheck> checks_embedding_extension(const PlanStep& s) {
  const Presentation& h = s.inputs.at(0);     // ambient group
  const Presentation& sub = s.inputs.at(1);   // carries the dense HM image
  Cardinal tau = dsl::parse_cardinal(s.param("tau"));
  Cardinal kappa = dsl::parse_cardinal(s.param("kappa"));
  std::vector<PlanCheck> out;
  // r_p(HM(T^kappa)) >= kappa for every p, so tau < kappa pins both rank
  // hypotheses of the extension lemma.
  out.push_back(check("subgroup-rank-at-most-tau", le(rank_profile(sub).r, tau),
                      "r_p(H') <= r(H') <= tau"));
  out.push_back(check("ambient-rank-at-most-tau", le(rank_profile(h).r, tau),
                      "r_p(H) <= r(H) <= tau"));
  out.push_back(check("tau-below-kappa", lt(tau, kappa),
                      "tau < kappa <= r_p(HM(T^kappa)) for all p"));
  return out;
}

std::vector<PlanCheck> checks_dense_hm_leaf(const PlanStep& s) {
  const Presentation& h = s.inputs.at(0);
  Cardinal kappa = dsl::parse_cardinal(s.param("kappa"));
  std::vector<PlanCheck> out;
  out.push_back(check("dp-connected-witness", !kappa.is_finite() && !h.trivial(),
                      "HM of the dense torus subgroup is a dense pathwise connected "
                      "subgroup of the image"));
  return out;
}

std::vector<PlanCheck> checks_open_subgroup(const PlanStep& s) {
  const Presentation& g = s.inputs.at(0);
  const Presentation& h = s.inputs.at(1);
  std::vector<PlanCheck> out;
  out.push_back(check("component-is-sub-sum", sub_sum_of(h, g)));
  return out;
}

std::vector<PlanCheck> checks_open_subgroup_remark(const PlanStep& s) {
  const Presentation& g = s.inputs.at(0);
  const Presentation& h = s.inputs.at(1);
  std::vector<PlanCheck> out;
  out.push_back(check("clopen-subgroup-is-component", sub_sum_of(h, g),
                      "the topology making H open has H as its connected component"));
  return out;
}

PlanStep make_step(std::string rule, std::vector<Presentation> inputs,
                   std::vector<Presentation> outputs,
                   std::vector<std::pair<std::string, std::string>> params) {
  PlanStep s;
  s.rule = std::move(rule);
  s.inputs = std::move(inputs);
  s.outputs = std::move(outputs);
  s.params = std::move(params);
  s.checks = evaluate_step_checks(s);
  return s;
}

}  // namespace

std::vector<PlanCheck> evaluate_step_checks(const PlanStep& step) {
  if (step.rule == "markov-criterion") return checks_markov_criterion(step);
  if (step.rule == "kirku-topology") return checks_kirku(step);
  if (step.rule == "homogeneous-split") return checks_homogeneous_split(step);
  if (step.rule == "hm-topology") return checks_hm_topology(step);
  if (step.rule == "w-divisible-branch") return checks_wdiv_branch(step);
  if (step.rule == "homogeneous-wdiv-subgroup") return checks_homogeneous_wdiv_subgroup(step);
  if (step.rule == "torus-embedding") return checks_torus_embedding(step);
  if (step.rule == "embedding-extension") return checks_embedding_extension(step);
  if (step.rule == "dense-subgroup-of-hm-torus") return checks_dense_hm_leaf(step);
  if (step.rule == "open-subgroup-component") return checks_open_subgroup(step);
  if (step.rule == "open-subgroup-remark") return checks_open_subgroup_remark(step);
  throw Error("unknown plan rule " + step.rule);
}

PlanOutcome plan_connected_topology(const Presentation& g) {
  MGroupDecision decision = is_m_group(g);
  if (!decision.is_m_group) {
    return PlanOutcome{false, std::nullopt, decision.witness_m, decision.witness_card};
  }

  if (g.trivial() || exponent(g)) {
    PlanStep root = make_step("markov-criterion", {g}, {g},
                              {{"branch", g.trivial() ? "trivial" : "bounded"}});
    root.children.push_back(make_step("kirku-topology", {g}, {g}, {}));
    return PlanOutcome{true, std::move(root), std::nullopt, std::nullopt};
  }

  const Cardinal c = Cardinal::continuum();
  PlanStep root = make_step("markov-criterion", {g}, {g}, {{"branch", "unbounded"}});

  auto [n, h] = homogeneous_split(g, c);
  PlanStep split = make_step("homogeneous-split", {g}, {n, h},
                             {{"sigma", c.str()}, {"sigma_plus", c.succ().str()}});

  split.children.push_back(make_step("hm-topology", {n}, {n}, {}));

  // The w-divisible branch is a chain of steps ending in the dp-connected
  // leaf, mirroring the order in which the hypotheses are consumed.
  Presentation sub = homogeneous_wdiv_subgroup(h);
  Cardinal tau = cardinality(sub);
  Cardinal kappa = exp2(tau);
  PlanStep leaf = make_step("dense-subgroup-of-hm-torus", {h}, {h}, {{"kappa", kappa.str()}});
  PlanStep extension = make_step("embedding-extension", {h, sub}, {h},
                                 {{"tau", tau.str()}, {"kappa", kappa.str()}});
  extension.children.push_back(std::move(leaf));
  PlanStep torus = make_step("torus-embedding", {sub}, {sub},
                             {{"tau", tau.str()}, {"kappa", kappa.str()}});
  torus.children.push_back(std::move(extension));
  PlanStep hwds = make_step("homogeneous-wdiv-subgroup", {h}, {sub}, {{"tau", tau.str()}});
  hwds.children.push_back(std::move(torus));
  PlanStep branch = make_step("w-divisible-branch", {h}, {h}, {});
  branch.children.push_back(std::move(hwds));

  split.children.push_back(std::move(branch));
  root.children.push_back(std::move(split));
  return PlanOutcome{true, std::move(root), std::nullopt, std::nullopt};
}

PlanOutcome plan_component(const Presentation& g, const Presentation& h) {
  if (!sub_sum_of(h, g)) {
    throw PreconditionFailed("the component candidate is not a sub-sum of the group");
  }
  PlanOutcome inner = plan_connected_topology(h);
  if (!inner.admits) return inner;
  PlanStep root = make_step("open-subgroup-component", {g, h}, {h}, {});
  root.children.push_back(std::move(*inner.certificate));
  root.children.push_back(make_step("open-subgroup-remark", {g, h}, {h}, {}));
  inner.certificate = std::move(root);
  return inner;
}

namespace {

// Factor a witness multiplier against the primes appearing in g, so that
// verification works even when the multiplier itself is a huge integer.
Factored factor_witness(const mpz_class& m, const Presentation& g) {
  std::vector<std::uint64_t> ps;
  for (const auto& t : g.terms()) {
    switch (t.block.kind()) {
      case BlockKind::Cyclic:
      case BlockKind::Prufer:
      case BlockKind::Tower:
        ps.push_back(t.block.prime());
        break;
      case BlockKind::Soc:
        ps.insert(ps.end(), t.block.soc_excluded().begin(), t.block.soc_excluded().end());
        break;
      default:
        break;
    }
  }
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  mpz_class rest = m;
  Factored f;
  for (auto p : ps) {
    while (mpz_divisible_ui_p(rest.get_mpz_t(), static_cast<unsigned long>(p))) {
      rest /= static_cast<unsigned long>(p);
      ++f[p];
    }
  }
  if (rest != 1) {
    if (!rest.fits_ulong_p()) throw TooLarge("witness multiplier too large to factor");
    for (const auto& [p, k] : factorize_u64(rest.get_ui())) f[p] += k;
  }
  return f;
}

bool reverify_step(const PlanStep& step) {
  std::vector<PlanCheck> fresh = evaluate_step_checks(step);
  if (fresh.size() != step.checks.size()) return false;
  for (std::size_t i = 0; i < fresh.size(); ++i) {
    if (fresh[i].name != step.checks[i].name) return false;
    if (!fresh[i].passed || !step.checks[i].passed) return false;
  }
  // Wiring: children consume this step's outputs.
  if (step.rule == "homogeneous-split") {
    if (step.children.size() != 2) return false;
    if (step.children[0].inputs.at(0) != step.outputs.at(0)) return false;
    if (step.children[1].inputs.at(0) != step.outputs.at(1)) return false;
  }
  if (step.rule == "homogeneous-wdiv-subgroup") {
    if (step.children.size() != 1) return false;
    if (step.children[0].inputs.at(0) != step.outputs.at(0)) return false;
  }
  if (step.rule == "open-subgroup-component") {
    if (step.children.size() != 2) return false;
    if (step.children[0].inputs.at(0) != step.inputs.at(1)) return false;
    if (step.children[1].rule != "open-subgroup-remark") return false;
  }
  for (const auto& child : step.children) {
    if (!reverify_step(child)) return false;
  }
  return true;
}

}  // namespace

bool verify_plan(const PlanOutcome& outcome, const Presentation& g) {
  if (outcome.admits) {
    if (!outcome.certificate) return false;
    const PlanStep& root = *outcome.certificate;
    if (root.inputs.empty() || root.inputs.front() != g) return false;
    return reverify_step(root);
  }
  if (!outcome.witness_m) return false;
  Presentation mg = multiply(factor_witness(*outcome.witness_m, g), g);
  if (mg.trivial()) return false;
  return lt(cardinality(mg), Cardinal::continuum());
}

}  // namespace conntop

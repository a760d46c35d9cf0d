#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conntop/invariants.hpp"
#include "conntop/presentation.hpp"

namespace conntop {

// G = K + M with K the bounded torsion part (cyclic terms) and M w-divisible.
std::pair<Presentation, Presentation> split_bounded_wdiv(const Presentation& g);

// Bounded K = L + N with |L| < sigma and N sigma-homogeneous: terms split by
// multiplicity below / at-least sigma. NotBounded for groups of infinite
// exponent; UndecidableComparison propagates from the multiplicity tests.
std::pair<Presentation, Presentation> split_sigma(const Presentation& k, const Cardinal& sigma);

// G = N + H with N bounded sigma+-homogeneous and H w-divisible of size
// w_d(G). Requires w_d(G) >= sigma (PreconditionFailed).
std::pair<Presentation, Presentation> homogeneous_split(const Presentation& g,
                                                        const Cardinal& sigma);

// A c-homogeneous w-divisible subgroup of full size inside a w-divisible
// group of size >= c. Above c this is the sub-sum of terms with multiplicity
// >= c; at exactly c it is a single unbounded term of multiplicity c (a block
// power, or the socle power when only the socle carries the size).
Presentation homogeneous_wdiv_subgroup(const Presentation& g);

// G = G0 + D + B for groups of finite divisible rank: torsion-free part,
// divisible torsion part, bounded part, with r_d = r0(G0) + r(D).
struct FiniteRankDecomposition {
  Presentation torsion_free;
  Presentation divisible_torsion;
  Presentation bounded;
};
FiniteRankDecomposition finite_rank_decomposition(const Presentation& g);

// The underlying group of HM(G): every multiplicity absorbs c.
Presentation hm_symbolic(const Presentation& g);

// --- Certificate planner -----------------------------------------------------

struct PlanCheck {
  std::string name;
  std::string detail;
  bool passed = false;
};

// One inference step. Leaves (no children) name the topology construction:
// "kirku-topology", "hm-topology" or "dense-subgroup-of-hm-torus".
struct PlanStep {
  std::string rule;
  std::vector<Presentation> inputs;
  std::vector<Presentation> outputs;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<PlanCheck> checks;
  std::vector<PlanStep> children;

  bool is_leaf() const { return children.empty(); }
  std::string param(const std::string& key) const;  // Error if absent
};

struct PlanOutcome {
  bool admits = false;
  std::optional<PlanStep> certificate;   // when admits
  std::optional<mpz_class> witness_m;    // when refused
  std::optional<Cardinal> witness_card;  // |mG| for the witness
};

// Decides the connected-topology question and, on success, emits the full
// tree of lemma applications with every precondition stored as a re-checkable
// predicate. On failure returns the witness multiplier.
PlanOutcome plan_connected_topology(const Presentation& g);

// Realizing H as the connected component of a topology on G: plan for H plus
// the open-subgroup step.
PlanOutcome plan_component(const Presentation& g, const Presentation& h);

// Recomputes every stored check of every step from the step's own data and
// confirms the certificate belongs to g. For refusals, confirms the witness.
bool verify_plan(const PlanOutcome& outcome, const Presentation& g);

// Recompute the checks a step of this rule would carry; used by verify_plan.
std::vector<PlanCheck> evaluate_step_checks(const PlanStep& step);

}  // namespace conntop

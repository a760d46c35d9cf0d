// Command-line front end: invariant reports, decision procedures,
// decompositions, topology plans, oracle cross-checks and HM scenarios.
//
// Exit codes: 0 = computed (even when the decision is "false"),
//             2 = precondition violated or undecidable in ZFC,
//             3 = parse error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>

#include "conntop/decompose.hpp"
#include "conntop/dsl.hpp"
#include "conntop/finite_oracle.hpp"
#include "conntop/hm_sim.hpp"
#include "conntop/invariants.hpp"
#include "conntop/json_io.hpp"

using namespace conntop;

namespace {

struct SplitMix {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

hm::Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      mpz_class whole(s);
      return hm::Rat(whole);
    }
    hm::Rat r(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw SyntaxError("invalid rational '" + s + "'", 0);
  }
}

hm::BaseGroup parse_base(const std::string& s) {
  if (s == "circle") return hm::BaseGroup::circle();
  if (s.size() > 1 && (s[0] == 'z' || s[0] == 'Z')) {
    std::uint64_t n = std::stoull(s.substr(1));
    if (n >= 2) return hm::BaseGroup::finite({n});
  }
  throw SyntaxError("unknown base group '" + s + "' (use z<n> or circle)", 0);
}

hm::StepFunction random_step_function(SplitMix& rng, const hm::BaseGroup& base) {
  std::size_t pieces = 1 + rng.below(6);
  std::vector<hm::Rat> cuts;
  for (std::size_t i = 0; i + 1 < pieces; ++i) {
    long den = static_cast<long>(2 + rng.below(23));
    long num = static_cast<long>(1 + rng.below(static_cast<std::uint64_t>(den - 1)));
    hm::Rat q(num, den);
    q.canonicalize();
    cuts.push_back(std::move(q));
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<hm::Elem> values;
  for (std::size_t i = 0; i <= cuts.size(); ++i) {
    if (base.kind == hm::BaseGroup::Kind::Finite) {
      values.push_back(hm::make_finite_elem(base, rng.below(base.order())));
    } else {
      long den = static_cast<long>(2 + rng.below(23));
      hm::Rat q(static_cast<long>(rng.below(static_cast<std::uint64_t>(den))), den);
      q.canonicalize();
      values.push_back(hm::make_circle_elem(q));
    }
  }
  return hm::StepFunction::from_pieces(base, std::move(cuts), std::move(values));
}

void emit(bool json_mode, const Json& j, const std::string& text) {
  if (json_mode) {
    std::cout << j.dump(2) << std::endl;
  } else {
    std::cout << text << std::endl;
  }
}

int run_invariants(const std::string& expr, bool json_mode) {
  Presentation g = dsl::parse(expr);
  InvariantReport rep = invariant_report(g);
  if (json_mode) {
    Json j;
    j["group"] = dsl::print(g);
    j["terms"] = to_json(g)["terms"];
    j.update(to_json(rep));
    std::cout << j.dump(2) << std::endl;
    return 0;
  }
  std::cout << "group:               " << dsl::print(g) << "\n";
  std::cout << "cardinality:         " << rep.cardinality.str() << "\n";
  std::cout << "exponent:            " << (rep.exponent ? rep.exponent->get_str() : "inf") << "\n";
  std::cout << "rank r0:             " << rep.rank_profile.r0.str() << "\n";
  for (const auto& [p, v] : rep.rank_profile.rp) {
    std::cout << "rank r_" << p << ":            " << v.str() << "\n";
  }
  if (rep.rank_profile.tail_value) {
    std::cout << "rank r_p (cofinite): " << rep.rank_profile.tail_value->str() << "\n";
  }
  std::cout << "rank r:              " << rep.rank_profile.r.str() << "\n";
  std::cout << "w_d:                 " << rep.w_d.str() << "\n";
  std::cout << "r_d:                 " << rep.r_d.str() << "\n";
  if (rep.uk) {
    for (const auto& row : rep.uk->primes) {
      std::cout << "uk leading at " << row.p << ":     alpha_{" << row.p << ","
                << row.leading_index << "} = " << row.leading().str() << "\n";
    }
  }
  std::cout << "m-group:             " << (rep.m_group ? "true" : "false");
  if (rep.m_group_witness) std::cout << " (witness m=" << rep.m_group_witness->get_str() << ")";
  std::cout << "\n";
  std::cout << "w-divisible:         " << (rep.w_divisible ? "true" : "false") << "\n";
  std::cout << "r-divisible:         " << (rep.r_divisible ? "true" : "false") << "\n";
  std::cout << "strongly-unbounded:  " << (rep.strongly_unbounded ? "true" : "false") << "\n";
  return 0;
}

int run_decide(const std::string& predicate, const std::string& expr, const std::string& sigma,
               const std::string& kappa, bool json_mode) {
  Presentation g = dsl::parse(expr);
  if (predicate == "m-group" || predicate == "connected-topology") {
    MGroupDecision d = is_m_group(g);
    std::string text = d.is_m_group ? "true" : "false";
    if (!d.is_m_group) {
      text += " (witness m=" + d.witness_m->get_str() + ", |" + d.witness_m->get_str() +
              "G|=" + d.witness_card->str() + ")";
    }
    emit(json_mode, to_json(d), text);
    return 0;
  }
  if (predicate == "w-divisible") {
    bool v = is_w_divisible(g);
    emit(json_mode, Json{{"w_divisible", v}}, v ? "true" : "false");
    return 0;
  }
  if (predicate == "r-divisible") {
    bool v = is_r_divisible(g);
    emit(json_mode, Json{{"r_divisible", v}}, v ? "true" : "false");
    return 0;
  }
  if (predicate == "strongly-unbounded") {
    SnbDecision d = is_strongly_unbounded(g);
    std::string text = d.strongly_unbounded ? "true" : "false";
    if (d.certificate) text += " (" + d.certificate->description + ")";
    emit(json_mode, to_json(d), text);
    return 0;
  }
  if (predicate == "sigma-homogeneous") {
    bool v = is_sigma_homogeneous(g, dsl::parse_cardinal(sigma));
    emit(json_mode, Json{{"sigma", sigma}, {"sigma_homogeneous", v}}, v ? "true" : "false");
    return 0;
  }
  if (predicate == "torus-embedding") {
    TorusEmbeddingCheck t = check_torus_embedding(g, dsl::parse_cardinal(kappa));
    emit(json_mode, to_json(t),
         std::string(t.embeddable ? "true" : "false") + " (" + t.reason + ")");
    return 0;
  }
  throw SyntaxError("unknown predicate '" + predicate + "'", 0);
}

int run_decompose(const std::string& mode, const std::string& expr, const std::string& sigma,
                  bool json_mode) {
  Presentation g = dsl::parse(expr);
  if (mode == "bounded-wdiv") {
    auto [k, m] = split_bounded_wdiv(g);
    emit(json_mode, Json{{"bounded", dsl::print(k)}, {"w_divisible", dsl::print(m)}},
         "K = " + dsl::print(k) + "\nM = " + dsl::print(m));
    return 0;
  }
  if (mode == "sigma") {
    auto [l, n] = split_sigma(g, dsl::parse_cardinal(sigma));
    emit(json_mode,
         Json{{"sigma", sigma}, {"small", dsl::print(l)}, {"homogeneous", dsl::print(n)}},
         "L = " + dsl::print(l) + "\nN = " + dsl::print(n));
    return 0;
  }
  if (mode == "homogeneous") {
    auto [n, h] = homogeneous_split(g, dsl::parse_cardinal(sigma));
    emit(json_mode,
         Json{{"sigma", sigma}, {"homogeneous", dsl::print(n)}, {"w_divisible", dsl::print(h)}},
         "N = " + dsl::print(n) + "\nH = " + dsl::print(h));
    return 0;
  }
  if (mode == "homogeneous-wdiv") {
    Presentation h = homogeneous_wdiv_subgroup(g);
    emit(json_mode, Json{{"subgroup", dsl::print(h)}}, "H = " + dsl::print(h));
    return 0;
  }
  if (mode == "finite-rank") {
    FiniteRankDecomposition d = finite_rank_decomposition(g);
    emit(json_mode,
         Json{{"torsion_free", dsl::print(d.torsion_free)},
              {"divisible_torsion", dsl::print(d.divisible_torsion)},
              {"bounded", dsl::print(d.bounded)}},
         "G0 = " + dsl::print(d.torsion_free) + "\nD = " + dsl::print(d.divisible_torsion) +
             "\nB = " + dsl::print(d.bounded));
    return 0;
  }
  if (mode == "hm-symbolic") {
    Presentation h = hm_symbolic(g);
    emit(json_mode, Json{{"hm", dsl::print(h)}}, "HM(G) = " + dsl::print(h));
    return 0;
  }
  throw SyntaxError("unknown decomposition mode '" + mode + "'", 0);
}

void print_plan_text(const PlanStep& step, int depth) {
  std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  std::cout << pad << step.rule;
  if (!step.outputs.empty()) {
    std::cout << " -> ";
    for (std::size_t i = 0; i < step.outputs.size(); ++i) {
      if (i) std::cout << " ; ";
      std::cout << dsl::print(step.outputs[i]);
    }
  }
  std::cout << "\n";
  for (const auto& c : step.checks) {
    std::cout << pad << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name << "\n";
  }
  for (const auto& child : step.children) print_plan_text(child, depth + 1);
}

int run_plan(const std::string& expr, bool json_mode) {
  Presentation g = dsl::parse(expr);
  PlanOutcome outcome = plan_connected_topology(g);
  if (json_mode) {
    Json j = to_json(outcome);
    j["verified"] = verify_plan(outcome, g);
    std::cout << j.dump(2) << std::endl;
    return 0;
  }
  if (!outcome.admits) {
    std::cout << "no connected group topology: witness m=" << outcome.witness_m->get_str()
              << ", |mG|=" << outcome.witness_card->str() << " < c" << std::endl;
    return 0;
  }
  std::cout << "admits a connected group topology\n";
  print_plan_text(*outcome.certificate, 0);
  std::cout << "re-verified: " << (verify_plan(outcome, g) ? "true" : "false") << std::endl;
  return 0;
}

int run_oracle_check(const std::string& expr, std::uint64_t max_m, bool json_mode) {
  Presentation g = dsl::parse(expr);
  oracle::ConcreteGroup cg = oracle::realize(g);
  Json rows = Json::array();
  bool all_ok = true;
  for (std::uint64_t m = 1; m <= max_m; ++m) {
    Presentation image = oracle::iso_type(cg, oracle::image_mG(m, cg));
    Presentation kernel = oracle::iso_type(cg, oracle::kernel_m(m, cg));
    bool ok = image == multiply(m, g) && kernel == m_torsion(m, g);
    all_ok = all_ok && ok;
    rows.push_back(Json{{"m", m},
                        {"image", dsl::print(image)},
                        {"kernel", dsl::print(kernel)},
                        {"matches", ok}});
    if (!json_mode) {
      std::cout << "m=" << m << "  mG=" << dsl::print(image) << "  G[m]=" << dsl::print(kernel)
                << "  " << (ok ? "ok" : "MISMATCH") << "\n";
    }
  }
  if (json_mode) {
    std::cout << Json{{"group", dsl::print(g)}, {"order", cg.order}, {"rows", rows},
                      {"all_match", all_ok}}
                     .dump(2)
              << std::endl;
  } else {
    std::cout << (all_ok ? "all symbolic results match the oracle" : "MISMATCHES FOUND")
              << std::endl;
  }
  return 0;
}

int run_hm_path(const std::string& base_name, const std::string& eps_s, std::uint64_t samples,
                std::uint64_t seed, const std::string& csv, bool json_mode) {
  hm::BaseGroup base = parse_base(base_name);
  hm::Rat eps = parse_rat(eps_s);
  if (eps <= 0) throw PreconditionFailed("eps must be positive");
  SplitMix rng{seed};
  // draw a function, then cut it down until it lies inside the ball
  hm::StepFunction h = random_step_function(rng, base);
  hm::StepFunction zero(base);
  if (!(mu_diff(h, zero) < eps)) {
    hm::Rat s = eps * hm::Rat(7, 8);
    h = hm::truncate(h, s < 1 ? s : hm::Rat(7, 8));
  }
  hm::PathCheckReport report = hm::ball_path_check(h, eps, samples);
  if (!csv.empty()) {
    std::ofstream out(csv);
    out << "s,mu_diff\n";
    for (std::uint64_t k = 0; k <= samples; ++k) {
      hm::Rat s(static_cast<long>(k), static_cast<long>(samples));
      s.canonicalize();
      out << s.get_str() << "," << mu_diff(hm::truncate(h, s), zero).get_str() << "\n";
    }
  }
  Json j{{"scenario", "path"},
         {"base", base_name},
         {"eps", eps.get_str()},
         {"ball_measure", mu_diff(h, zero).get_str()},
         {"passed", report.passed},
         {"max_deviation", report.max_deviation.get_str()},
         {"samples_checked", report.samples_checked},
         {"pairs_checked", report.pairs_checked}};
  emit(json_mode, j,
       std::string("path check ") + (report.passed ? "passed" : "FAILED") + " (" +
           std::to_string(report.samples_checked) + " samples, " +
           std::to_string(report.pairs_checked) + " pairs, max deviation " +
           report.max_deviation.get_str() + ")");
  return 0;
}

int run_hm_density(std::uint64_t n, const std::string& eps_s, std::uint64_t seed, bool json_mode) {
  hm::Rat eps = parse_rat(eps_s);
  SplitMix rng{seed};
  hm::StepFunction f = random_step_function(rng, hm::BaseGroup::circle());
  hm::DensityResult r = hm::density_approx(f, n, eps);
  Json j{{"scenario", "density"},
         {"N", n},
         {"eps", eps.get_str()},
         {"kyfan", r.error.get_str()},
         {"bound", r.bound.get_str()},
         {"within_eps", r.within_eps}};
  emit(json_mode, j,
       "rounded into (1/" + std::to_string(n) + ")Z/Z: kyfan distance " + r.error.get_str() +
           " <= bound " + r.bound.get_str());
  return 0;
}

int run_hm_metrics(const std::string& base_name, std::uint64_t trials, std::uint64_t seed,
                   bool json_mode) {
  hm::BaseGroup base = parse_base(base_name);
  SplitMix rng{seed};
  std::uint64_t failures = 0;
  for (std::uint64_t i = 0; i < trials; ++i) {
    hm::StepFunction a = random_step_function(rng, base);
    hm::StepFunction b = random_step_function(rng, base);
    hm::StepFunction c = random_step_function(rng, base);
    bool ok = mu_diff(a, b) == mu_diff(b, a) && kyfan(a, b) == kyfan(b, a) &&
              mu_diff(a, c) <= mu_diff(a, b) + mu_diff(b, c) &&
              kyfan(a, c) <= kyfan(a, b) + kyfan(b, c) &&
              mu_diff(sf_add(a, c), sf_add(b, c)) == mu_diff(a, b) &&
              kyfan(sf_add(a, c), sf_add(b, c)) == kyfan(a, b) &&
              ((mu_diff(a, b) == 0) == sf_eq(a, b));
    if (!ok) ++failures;
  }
  Json j{{"scenario", "metrics"},
         {"base", base_name},
         {"trials", trials},
         {"failures", failures}};
  emit(json_mode, j,
       std::to_string(trials) + " random triples, " + std::to_string(failures) +
           " metric-axiom failures");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symbolic decision engine for abelian group presentations"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json_mode = false;
  std::uint64_t seed = 0;
  app.add_flag("--json", json_mode, "emit JSON reports");
  app.add_option("--seed", seed, "seed for randomized scenarios");

  std::string expr, predicate, mode, sigma = "c", kappa = "c", scenario;
  std::string base_name = "circle", eps = "1/4", csv;
  std::uint64_t max_m = 24, samples = 100, big_n = 8, trials = 200;

  auto* inv = app.add_subcommand("invariants", "full invariant report");
  inv->add_option("expr", expr)->required();

  auto* dec = app.add_subcommand("decide", "decision procedures");
  dec->add_option("predicate", predicate,
                  "m-group | connected-topology | w-divisible | r-divisible | "
                  "strongly-unbounded | sigma-homogeneous | torus-embedding")
      ->required();
  dec->add_option("expr", expr)->required();
  dec->add_option("--sigma", sigma, "cardinal for sigma-homogeneous");
  dec->add_option("--kappa", kappa, "torus exponent for torus-embedding");

  auto* dcp = app.add_subcommand("decompose", "constructive decompositions");
  dcp->add_option("mode", mode,
                  "bounded-wdiv | sigma | homogeneous | homogeneous-wdiv | finite-rank | "
                  "hm-symbolic")
      ->required();
  dcp->add_option("expr", expr)->required();
  dcp->add_option("--sigma", sigma, "cardinal for the sigma splits");

  auto* plan = app.add_subcommand("plan", "connected-topology certificate");
  plan->add_option("expr", expr)->required();

  auto* oc = app.add_subcommand("oracle-check", "element-level cross-check on a finite group");
  oc->add_option("expr", expr)->required();
  oc->add_option("--max-m", max_m, "check all m up to this bound");

  auto* hm_cmd = app.add_subcommand("hm", "Hartman-Mycielski simulator scenarios");
  hm_cmd->add_option("scenario", scenario, "path | density | metrics")->required();
  hm_cmd->add_option("--base", base_name, "z<n> or circle");
  hm_cmd->add_option("--eps", eps, "rational like 1/3");
  hm_cmd->add_option("--samples", samples, "grid points for path checks");
  hm_cmd->add_option("--n", big_n, "subgroup index N for density");
  hm_cmd->add_option("--trials", trials, "random triples for metrics");
  hm_cmd->add_option("--csv", csv, "write a (s, mu_diff) trace");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 3;
  }

  try {
    if (inv->parsed()) return run_invariants(expr, json_mode);
    if (dec->parsed()) return run_decide(predicate, expr, sigma, kappa, json_mode);
    if (dcp->parsed()) return run_decompose(mode, expr, sigma, json_mode);
    if (plan->parsed()) return run_plan(expr, json_mode);
    if (oc->parsed()) return run_oracle_check(expr, max_m, json_mode);
    if (hm_cmd->parsed()) {
      if (scenario == "path") return run_hm_path(base_name, eps, samples, seed, csv, json_mode);
      if (scenario == "density") return run_hm_density(big_n, eps, seed, json_mode);
      if (scenario == "metrics") return run_hm_metrics(base_name, trials, seed, json_mode);
      throw SyntaxError("unknown hm scenario '" + scenario + "'", 0);
    }
  } catch (const SyntaxError& e) {
    std::cerr << "parse error: " << e.what() << std::endl;
    return 3;
  } catch (const InvalidModulus& e) {
    std::cerr << "parse error: " << e.what() << std::endl;
    return 3;
  } catch (const InvalidPrime& e) {
    std::cerr << "parse error: " << e.what() << std::endl;
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  }
  return 0;
}

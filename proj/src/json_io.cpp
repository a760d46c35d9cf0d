#include "conntop/json_io.hpp"

namespace conntop {

Json to_json(const Presentation& g) {
  Json terms = Json::array();
  for (const auto& t : g.terms()) {
    terms.push_back({{"block", t.block.str()}, {"mult", t.mult.str()}});
  }
  return Json{{"terms", std::move(terms)}};
}

Json to_json(const RankProfile& rp) {
  Json per_prime = Json::object();
  for (const auto& [p, v] : rp.rp) per_prime[std::to_string(p)] = v.str();
  Json tail;
  if (rp.tail_value) {
    tail = Json{{"value", rp.tail_value->str()}, {"excluded", rp.tail_excluded}};
  }
  return Json{{"r0", rp.r0.str()}, {"rp", std::move(per_prime)}, {"soc_tail", std::move(tail)},
              {"r", rp.r.str()}};
}

Json to_json(const UKTable& uk) {
  Json out = Json::object();
  for (const auto& row : uk.primes) {
    Json alpha = Json::array();
    for (const auto& a : row.alpha) alpha.push_back(a.str());
    out[std::to_string(row.p)] = Json{{"alpha", std::move(alpha)},
                                      {"leading_index", row.leading_index},
                                      {"leading", row.leading().str()}};
  }
  return out;
}

Json to_json(const InvariantReport& rep) {
  Json out;
  out["cardinality"] = rep.cardinality.str();
  out["exponent"] = rep.exponent ? Json(rep.exponent->get_str()) : Json("inf");
  out["rank_profile"] = to_json(rep.rank_profile);
  out["w_d"] = rep.w_d.str();
  out["r_d"] = rep.r_d.str();
  out["uk"] = rep.uk ? to_json(*rep.uk) : Json();
  out["flags"] = Json{{"m_group", rep.m_group},
                      {"w_divisible", rep.w_divisible},
                      {"r_divisible", rep.r_divisible},
                      {"strongly_unbounded", rep.strongly_unbounded}};
  if (rep.m_group_witness) out["m_group_witness"] = rep.m_group_witness->get_str();
  return out;
}

Json to_json(const MGroupDecision& d) {
  Json out{{"m_group", d.is_m_group}};
  if (d.witness_m) out["witness_m"] = d.witness_m->get_str();
  if (d.witness_card) out["witness_card"] = d.witness_card->str();
  return out;
}

Json to_json(const SnbDecision& d) {
  Json out{{"strongly_unbounded", d.strongly_unbounded}};
  if (d.certificate) {
    const char* kind = nullptr;
    switch (d.certificate->kind) {
      case SnbCertificate::Kind::BlockCopies:
        kind = "block-copies";
        break;
      case SnbCertificate::Kind::TowerTails:
        kind = "tower-tails";
        break;
      case SnbCertificate::Kind::SocPrimePartition:
        kind = "soc-prime-partition";
        break;
    }
    out["certificate"] = Json{{"kind", kind},
                              {"block", d.certificate->block.str()},
                              {"index", d.certificate->index.str()},
                              {"description", d.certificate->description}};
  }
  return out;
}

Json to_json(const TorusEmbeddingCheck& c) {
  return Json{{"embeddable", c.embeddable}, {"reason", c.reason}};
}

Json to_json(const PlanStep& step) {
  Json inputs = Json::array();
  for (const auto& g : step.inputs) inputs.push_back(g.str());
  Json outputs = Json::array();
  for (const auto& g : step.outputs) outputs.push_back(g.str());
  Json params = Json::object();
  for (const auto& [k, v] : step.params) params[k] = v;
  Json checks = Json::array();
  for (const auto& c : step.checks) {
    Json jc{{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) jc["detail"] = c.detail;
    checks.push_back(std::move(jc));
  }
  Json children = Json::array();
  for (const auto& child : step.children) children.push_back(to_json(child));
  return Json{{"lemma", step.rule},   {"inputs", std::move(inputs)},
              {"outputs", std::move(outputs)}, {"params", std::move(params)},
              {"checks", std::move(checks)},   {"children", std::move(children)}};
}

Json to_json(const PlanOutcome& outcome) {
  Json out{{"admits_connected_topology", outcome.admits}};
  if (outcome.certificate) out["certificate"] = to_json(*outcome.certificate);
  if (outcome.witness_m) out["witness_m"] = outcome.witness_m->get_str();
  if (outcome.witness_card) out["witness_card"] = outcome.witness_card->str();
  return out;
}

}  // namespace conntop

#pragma once

#include <json.hpp>

#include "conntop/decompose.hpp"
#include "conntop/invariants.hpp"
#include "conntop/presentation.hpp"
#include "conntop/structure_ops.hpp"

namespace conntop {

using Json = nlohmann::ordered_json;

Json to_json(const Presentation& g);
Json to_json(const RankProfile& rp);
Json to_json(const UKTable& uk);
Json to_json(const InvariantReport& rep);
Json to_json(const MGroupDecision& d);
Json to_json(const SnbDecision& d);
Json to_json(const TorusEmbeddingCheck& c);
Json to_json(const PlanStep& step);
Json to_json(const PlanOutcome& outcome);

}  // namespace conntop

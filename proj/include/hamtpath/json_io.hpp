#pragma once

#include <json.hpp>

#include "hamtpath/lp.hpp"
#include "hamtpath/oracle.hpp"
#include "hamtpath/pruning.hpp"
#include "hamtpath/search.hpp"
#include "hamtpath/timegraph.hpp"

// JSON encodings shared by the CLI, the findings writer and the reports.
// Rationals are "p/q" strings, edges are [from, to, layer] triples, edge
// lists follow canonical order. Object keys serialize sorted, so identical
// values dump to identical bytes.
namespace hamtpath {

nlohmann::json to_json(const EdgeId& e);
nlohmann::json to_json(const TimeGraph& g);
nlohmann::json to_json(const Flow& f);
nlohmann::json to_json(const LPInstance& lp);
nlohmann::json to_json(const FeasibilityResult& r);
nlohmann::json to_json(const OracleResult& r);
nlohmann::json to_json(const PruneReport& r);
nlohmann::json to_json(const GeneratorSpec& s);
nlohmann::json to_json(const Discrepancy& d);
nlohmann::json to_json(const CampaignReport& r);

// Inverse of to_json(GeneratorSpec) for --spec files.
GeneratorSpec generator_spec_from_json(const nlohmann::json& j);

}  // namespace hamtpath

#pragma once

#include <nlohmann/json.hpp>

#include "scott/bf_table.hpp"
#include "scott/ksystem.hpp"
#include "scott/net_family.hpp"
#include "scott/strategy.hpp"

namespace scott {

// Strategy certificate:
// { "game": "ef"|"approx", "owner": 1|2, "pair": {"a": [...], "b": [...]},
//   "budget": "n"|"omega", "resolved_budget": n,
//   "schedule": {"base": "q", "ratio": "r"} (approx only),
//   "atomic_witness": [i, j] (depth-0 Player-1 only),
//   "tree": nested nodes or null }
// Player-2 nodes: {"branches": [{"ordinal", "side", "point", "reply",
// "child"}...]}; Player-1 nodes: {"move": {...}, "replies": [{"reply",
// "child"}...]}. Lazy positional strategies cannot be serialized.
nlohmann::json strategy_to_json(const Strategy& st);
Strategy strategy_from_json(const nlohmann::json& doc);

nlohmann::json outcome_to_json(const GameOutcome& out);

// { "depth": k, "phi": [[[z, image]...] per level], "nets": {...},
//   "pair": {"a": [...], "b": [...]} }
nlohmann::json ksystem_to_json(const KSystem& system, const NetFamily& nets);
KSystem ksystem_from_json(const nlohmann::json& doc);

nlohmann::json ksystem_violations_to_json(
    const std::vector<KSystemViolation>& report);

nlohmann::json search_result_to_json(const KSystemSearchResult& result,
                                     const NetFamily& nets);

nlohmann::json isometry_to_json(const IsometryMap& iso);

nlohmann::json space_rank_to_json(const SpaceRankCertificate& cert);

}  // namespace scott

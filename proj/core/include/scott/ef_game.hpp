#pragma once

#include <nlohmann/json.hpp>

#include "scott/metric_space.hpp"
#include "scott/rank_value.hpp"
#include "scott/strategy.hpp"

namespace scott {

// Solves the back-and-forth game at a finite budget, or at the symbolic
// omega budget resolved through the stabilized relation level. Player 2
// wins iff the accumulated point pairing can be kept exactly
// distance-preserving for the whole budget. Returns the winner together
// with a materialized strategy tree for that winner.
GameOutcome solve_ef_game(const MetricSpace& space, const PointTuple& a,
                          const PointTuple& b, RankValue alpha);

// A lazy Player-2 strategy for a pair related at every level: replies
// positionally with the lowest point keeping the extended pair related
// at every level, so it wins at any finite budget without a tree.
Strategy lazy_p2_strategy(const MetricSpace& space, const PointTuple& a,
                          const PointTuple& b);

struct ReplayResult {
  int winner = 2;
  nlohmann::json transcript;
};

// Plays a stored strategy against a scripted opponent. For a Player-1
// strategy the script is an array of reply points; for a Player-2
// strategy it is an array of {"ordinal", "side", "point"} moves ending
// with ordinal 0. Illegal or incomplete scripts raise ValidationError
// naming the offending index. Works for both game kinds.
ReplayResult replay_game(const MetricSpace& space, const Strategy& strategy,
                         const nlohmann::json& script);

struct OppositionReport {
  bool sound = false;
  std::uint64_t lines = 0;
  nlohmann::json failure;  // null when sound
};

// Replays a strategy against every opponent line at its resolved
// budget: checks the tree is total, ordinals decrease, sides follow the
// game's schedule, and the owner wins every completed line.
OppositionReport exhaustive_opposition(const MetricSpace& space,
                                       const Strategy& strategy);

}  // namespace scott

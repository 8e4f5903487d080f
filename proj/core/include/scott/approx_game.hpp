#pragma once

#include <vector>

#include "scott/metric_space.hpp"
#include "scott/rank_value.hpp"
#include "scott/strategy.hpp"

namespace scott {

// Solves the tolerance game: Player 1 plays a point on the side fixed
// by round parity (left on even rounds, right on odd rounds) together
// with a shrinking ordinal; Player 2 answers on the other side and wins
// iff every played round satisfies the strict index-weighted error
// bounds against the anchors and against the other rounds. Budget 0 is
// an immediate vacuous Player-2 win. Omega budgets are resolved at the
// stabilization budget below.
GameOutcome solve_approx_game(const MetricSpace& space, const PointTuple& a,
                              const PointTuple& b, RankValue alpha,
                              const ToleranceSchedule& f);

bool approx_related(const MetricSpace& space, const PointTuple& a,
                    const PointTuple& b, RankValue alpha,
                    const ToleranceSchedule& f);

// A finite budget past which the winner cannot change: enough rounds
// for the tolerance to drop below half the minimum distance gap plus
// one full left-side sweep of the space. Surviving it forces an exact
// self-isometry, which then wins every budget.
int approx_stabilization_budget(const MetricSpace& space,
                                const ToleranceSchedule& f);

// Least finite budget at which some schedule in the family defeats
// Player 2, or Infinity when none does up to its stabilization budget.
// This is an upper bound on the rank over all admissible schedules: a
// witnessing schedule certifies the bound, but the full class is not
// searched.
RankValue metric_rank_upper(const MetricSpace& space, const PointTuple& a,
                            const PointTuple& b,
                            const std::vector<ToleranceSchedule>& family);

}  // namespace scott

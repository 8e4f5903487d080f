#pragma once

#include <vector>

#include "scott/metric_space.hpp"
#include "scott/rank_value.hpp"

namespace scott::oracle {

// Independent brute-force reference implementations. These deliberately
// share no logic with the main analysis modules (their own distance
// comparison, their own recursion) so that agreement tests against them
// are meaningful. Caps are hard errors, never silent truncation.

// All distance-preserving permutations, lexicographic order.
std::vector<std::vector<int>> enumerate_autoisometries(
    const MetricSpace& space, int cap = 8);

// True iff some autoisometry sends a_i to b_i for all i.
bool exists_autoisometry_mapping(const MetricSpace& space, const PointTuple& a,
                                 const PointTuple& b, int cap = 8);

// Naive unmemoized recursive evaluation of the back-and-forth relations
// (repeats allowed). Returns the least failing level, or Infinity once
// the pair is still related at a level where the whole hierarchy is
// verified stationary. Caps: |M| <= 5, |a| <= 3, budget_cap <= 5.
RankValue brute_scott_rank_pair(const MetricSpace& space, const PointTuple& a,
                                const PointTuple& b, int budget_cap = 5);

}  // namespace scott::oracle

#pragma once

#include <nlohmann/json.hpp>
#include <vector>

#include "scott/metric_space.hpp"
#include "scott/rank_value.hpp"
#include "scott/strategy.hpp"

namespace scott {

// Fixed-point computation of the back-and-forth relations. Level 0 is
// exact distance agreement; level n+1 relates a pair iff both one-point
// extension conditions hold at level n. Tables are computed over
// duplicate-free tuples of every length up to |M| simultaneously,
// because the successor step at length p consults length p+1; a
// per-length fixed point would be unsound. Tuples with repeated points
// collapse onto their duplicate-free subtuple (a repeat forces the
// matching reply exactly).
class BackAndForthTable {
 public:
  // p_max only limits what to_json exports; ranks are computed for all
  // lengths regardless. Requires 1 <= p_max and |M| <= 7.
  static BackAndForthTable compute(const MetricSpace& space, int p_max = 0);

  const MetricSpace& space() const { return space_; }
  int p_max() const { return p_max_; }

  // Least n with identical relations at levels n and n+1, all lengths.
  int stabilization_level() const { return stabilization_; }

  // Least level at which the pair is unrelated; Infinity if related at
  // the stabilized level. Accepts tuples with repeats and the empty
  // pair (always Infinity).
  RankValue rank_pair(const PointTuple& a, const PointTuple& b) const;

  // { "p": n, "pairs": [ {"a", "b", "rank"} ... ], "stabilization": n }
  // over ordered duplicate-free pairs of length p, lexicographic.
  nlohmann::json to_json(int p) const;

 private:
  BackAndForthTable(MetricSpace space) : space_(std::move(space)) {}

  MetricSpace space_;
  int p_max_ = 1;
  int stabilization_ = 0;
  // tuples_[p]: duplicate-free p-tuples in lexicographic order;
  // rank_[p][ia * |tuples_[p]| + ib]: first failing level, -1 = never.
  std::vector<std::vector<PointTuple>> tuples_;
  std::vector<std::vector<int>> rank_;
};

struct SpaceRankCertificate {
  RankValue rank = RankValue::finite(1);  // sup of tuple ranks + 1
  PointTuple argmax_a;  // tuple attaining the sup (empty tuple allowed)
  PointTuple argmax_b;  // partner realizing the tuple's rank
  RankValue pair_rank = RankValue::finite(0);  // rank of the argmax pair
  int stabilization = 0;
};

RankValue scott_rank_pair(const MetricSpace& space, const PointTuple& a,
                          const PointTuple& b);

SpaceRankCertificate scott_rank_space(const MetricSpace& space);
SpaceRankCertificate scott_rank_space(const BackAndForthTable& table);

// Player-1 strategy tree defeating every reply in the depth-n game,
// where Finite(n) is the pair's rank. Rejects Infinity pairs.
Strategy distinguishing_strategy(const MetricSpace& space, const PointTuple& a,
                                 const PointTuple& b);
Strategy distinguishing_strategy(const BackAndForthTable& table,
                                 const PointTuple& a, const PointTuple& b);

}  // namespace scott

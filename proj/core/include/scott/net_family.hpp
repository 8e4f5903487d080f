#pragma once

#include <vector>

#include "scott/metric_space.hpp"

namespace scott {

// Nested greedy nets A_0 <= A_1 <= ... where A_n covers the space with
// open balls of radius 2^-n. On a finite space the nets reach the full
// point set at terminal_depth; levels past the stored prefix are the
// full set and are answered without being materialized.
class NetFamily {
 public:
  NetFamily(std::vector<std::vector<int>> nets, int terminal_depth,
            int n_points);

  // Net at level n (n >= 0). Levels past the stored prefix are only
  // available when the stored prefix reaches terminal depth.
  const std::vector<int>& net(int n) const;

  int stored_depth() const { return static_cast<int>(nets_.size()) - 1; }
  int terminal_depth() const { return terminal_depth_; }
  int n_points() const { return n_points_; }

  // Open-ball covering radius at level n.
  static Rational radius(int n) { return Rational::pow2_neg(n); }

 private:
  std::vector<std::vector<int>> nets_;
  int terminal_depth_;
  int n_points_;
};

// Greedy lowest-index-first construction: each level starts from the
// previous one and adds the lowest-index uncovered point until the
// strict 2^-n covering condition holds. Stored levels stop at
// min(max_depth, terminal_depth).
NetFamily build_net_family(const MetricSpace& space, int max_depth);

}  // namespace scott

#include "scott/net_family.hpp"

#include <algorithm>

#include "scott/errors.hpp"

namespace scott {

NetFamily::NetFamily(std::vector<std::vector<int>> nets, int terminal_depth,
                     int n_points)
    : nets_(std::move(nets)), terminal_depth_(terminal_depth),
      n_points_(n_points) {
  if (nets_.empty()) throw ValidationError("net family needs level 0");
}

const std::vector<int>& NetFamily::net(int n) const {
  if (n < 0) throw ValidationError("net level must be >= 0");
  if (n < static_cast<int>(nets_.size())) return nets_[n];
  if (static_cast<int>(nets_.back().size()) == n_points_) return nets_.back();
  throw ValidationError("net family truncated below requested level " +
                        std::to_string(n));
}

namespace {

bool covered(const MetricSpace& space, const std::vector<int>& net, int point,
             const Rational& radius) {
  for (int z : net) {
    if (space.dist(point, z) < radius) return true;
  }
  return false;
}

// Extends `net` in place until every point lies strictly within `radius`
// of some member, always adding the lowest-index uncovered point.
void greedy_cover(const MetricSpace& space, std::vector<int>& net,
                  const Rational& radius) {
  for (;;) {
    int uncovered = -1;
    for (int p = 0; p < space.size(); ++p) {
      if (!covered(space, net, p, radius)) {
        uncovered = p;
        break;
      }
    }
    if (uncovered < 0) return;
    net.push_back(uncovered);
  }
}

}  // namespace

NetFamily build_net_family(const MetricSpace& space, int max_depth) {
  if (max_depth < 0) throw ValidationError("net depth must be >= 0");
  require_valid_metric(space);
  const int n_points = space.size();

  std::vector<std::vector<int>> nets;
  std::vector<int> current;
  int terminal = -1;
  for (int n = 0;; ++n) {
    greedy_cover(space, current, NetFamily::radius(n));
    std::vector<int> sorted = current;
    std::sort(sorted.begin(), sorted.end());
    bool full = static_cast<int>(sorted.size()) == n_points;
    if (n <= max_depth) nets.push_back(sorted);
    if (full) {
      terminal = n;
      break;
    }
  }
  return NetFamily(std::move(nets), terminal, n_points);
}

}  // namespace scott

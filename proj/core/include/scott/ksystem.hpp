#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scott/metric_space.hpp"
#include "scott/net_family.hpp"
#include "scott/strategy.hpp"

namespace scott {

// A depth-k coherent family of self-maps of the nested nets: phi[n]
// maps the level-n net into itself, approximately respects distances to
// the anchor tuples and between levels, and its image covers the space
// with balls of radius twice the net radius.
struct KSystem {
  int depth = 0;
  // phi[n] is aligned with nets.net(n): phi[n][i] is the image of the
  // i-th net point, as (net point, image point).
  std::vector<std::vector<std::pair<int, int>>> phi;
  PointTuple a, b;
};

struct KSystemViolation {
  int clause = 0;  // 1: range, 2: anchors, 3: coherence, 4: covering
  int level_m = -1, level_n = -1;
  int y = -1, z = -1;
  Rational lhs, rhs;  // the two compared quantities
  std::string message;
};

// Covering radius of clause 4 at level n: twice the net radius (2 at
// level 0).
Rational covering_radius(int n);

// Empty report iff the candidate satisfies all four clauses. Shape
// mismatches (maps not defined exactly on the stated nets) throw.
std::vector<KSystemViolation> verify_k_system(const MetricSpace& space,
                                              const NetFamily& nets,
                                              const KSystem& candidate);

struct KSystemSearchResult {
  bool found = false;
  KSystem system;          // meaningful iff found
  int max_depth_reached = -1;  // deepest fully assigned valid level
  std::uint64_t nodes = 0;
};

// Depth-first enumeration of level maps in lexicographic order (net
// point index, then image index); returns the least system of depth k
// or an exhaustion certificate with the deepest level reached.
KSystemSearchResult search_k_system(const MetricSpace& space,
                                    const PointTuple& a, const PointTuple& b,
                                    const NetFamily& nets, int k);

// Plays a winning Player-2 strategy against the enumeration of the
// depth-k net on the left (ordinals L, L-1, ..., 1 with L the net size,
// one round reserved), snaps each reply to the closest net point within
// the net radius, and returns the resulting system. The strategy must
// win at budget >= L + 1; a lost line or a failed verification reports
// an invalid certificate.
KSystem strategy_to_k_system(const MetricSpace& space, const PointTuple& a,
                             const PointTuple& b, const NetFamily& nets,
                             const Strategy& p2_strategy, int k);

struct IsometryMap {
  std::vector<int> map;  // image of every point index
  bool distance_preserving = false;
  bool bijective = false;
  bool carries_pair = false;
};

// Least depth at which the covering radius drops below half the
// minimum distance gap, making snapped images unique and all the
// system's approximate equalities exact.
int snap_depth(const MetricSpace& space);

// Reads an exact self-isometry off a system at snap depth over the full
// point set; all three flags re-checked by exhaustive comparison.
IsometryMap system_to_isometry(const MetricSpace& space, const PointTuple& a,
                               const PointTuple& b, const NetFamily& nets,
                               const KSystem& system);

// Streams every point through a winning Player-2 strategy, round-robin
// on alternating sides (point j/2 on the left at even rounds, (j-1)/2
// on the right at odd rounds), and reads the total map off the
// transcript. The strategy must win at budget >= 2|M|.
IsometryMap strategy_stream_isometry(const MetricSpace& space,
                                     const PointTuple& a, const PointTuple& b,
                                     const Strategy& p2_strategy);

}  // namespace scott

#include "scott/ksystem.hpp"

#include <algorithm>

#include "scott/errors.hpp"

namespace scott {
namespace {

void check_anchors(const MetricSpace& space, const PointTuple& a,
                   const PointTuple& b) {
  if (a.size() != b.size()) throw ValidationError("tuple length mismatch");
  for (int x : a)
    if (x < 0 || x >= space.size())
      throw ValidationError("tuple index out of range");
  for (int x : b)
    if (x < 0 || x >= space.size())
      throw ValidationError("tuple index out of range");
}

void check_shape(const NetFamily& nets, const KSystem& candidate) {
  if (candidate.depth < 0 ||
      static_cast<int>(candidate.phi.size()) != candidate.depth + 1)
    throw ValidationError("system level count does not match its depth");
  for (int n = 0; n <= candidate.depth; ++n) {
    const auto& net = nets.net(n);
    if (candidate.phi[n].size() != net.size())
      throw ValidationError("level " + std::to_string(n) +
                            " map size does not match the net");
    for (size_t i = 0; i < net.size(); ++i)
      if (candidate.phi[n][i].first != net[i])
        throw ValidationError("level " + std::to_string(n) +
                              " map domain does not match the net");
  }
}

std::string rat2(const Rational& lhs, const Rational& rhs) {
  return lhs.to_string() + " vs " + rhs.to_string();
}

}  // namespace

Rational covering_radius(int n) {
  return n == 0 ? Rational(2) : Rational::pow2_neg(n - 1);
}

std::vector<KSystemViolation> verify_k_system(const MetricSpace& space,
                                              const NetFamily& nets,
                                              const KSystem& candidate) {
  check_anchors(space, candidate.a, candidate.b);
  check_shape(nets, candidate);
  std::vector<KSystemViolation> out;
  const int k = candidate.depth;
  for (int n = 0; n <= k; ++n) {
    const auto& net = nets.net(n);
    const Rational eps_n = NetFamily::radius(n);
    for (const auto& [z, w] : candidate.phi[n]) {
      if (w < 0 || w >= space.size() ||
          std::find(net.begin(), net.end(), w) == net.end()) {
        out.push_back({1, -1, n, -1, z, Rational(w), Rational(0),
                       "clause 1 at level " + std::to_string(n) + ": image of " +
                           std::to_string(z) + " is not a net point"});
        continue;
      }
      for (size_t i = 0; i < candidate.a.size(); ++i) {
        const Rational lhs =
            (space.dist(candidate.a[i], z) - space.dist(candidate.b[i], w))
                .abs();
        if (!(lhs < eps_n)) {
          out.push_back({2, -1, n, candidate.a[i], z, lhs, eps_n,
                         "clause 2 at level " + std::to_string(n) +
                             ", anchor " + std::to_string(i) + ", point " +
                             std::to_string(z) + ": " + rat2(lhs, eps_n)});
        }
      }
      for (int m = 0; m <= n; ++m) {
        const Rational bound = NetFamily::radius(m) + eps_n;
        for (const auto& [y, v] : candidate.phi[m]) {
          const Rational lhs = (space.dist(y, z) - space.dist(v, w)).abs();
          if (!(lhs < bound)) {
            out.push_back({3, m, n, y, z, lhs, bound,
                           "clause 3 at levels " + std::to_string(m) + "," +
                               std::to_string(n) + ", points " +
                               std::to_string(y) + "," + std::to_string(z) +
                               ": " + rat2(lhs, bound)});
          }
        }
      }
    }
    const Rational cover = covering_radius(n);
    for (int x = 0; x < space.size(); ++x) {
      bool covered = false;
      Rational best;
      bool have_best = false;
      for (const auto& [z, w] : candidate.phi[n]) {
        if (w < 0 || w >= space.size()) continue;
        const Rational d = space.dist(x, w);
        if (!have_best || d < best) {
          best = d;
          have_best = true;
        }
        if (d < cover) {
          covered = true;
          break;
        }
      }
      if (!covered) {
        out.push_back({4, -1, n, -1, x, best, cover,
                       "clause 4 at level " + std::to_string(n) + ": point " +
                           std::to_string(x) + " uncovered, " +
                           rat2(best, cover)});
      }
    }
  }
  return out;
}

namespace {

struct Search {
  const MetricSpace& space;
  const PointTuple& a;
  const PointTuple& b;
  const NetFamily& nets;
  int k;
  std::vector<std::vector<std::pair<int, int>>> phi;
  KSystemSearchResult result;

  bool anchors_ok(int n, int z, int w) const {
    const Rational eps = NetFamily::radius(n);
    for (size_t i = 0; i < a.size(); ++i)
      if (!((space.dist(a[i], z) - space.dist(b[i], w)).abs() < eps))
        return false;
    return true;
  }

  bool coherence_ok(int n, int z, int w) const {
    const Rational eps_n = NetFamily::radius(n);
    for (int m = 0; m <= n && m < static_cast<int>(phi.size()); ++m) {
      const Rational bound = NetFamily::radius(m) + eps_n;
      for (const auto& [y, v] : phi[m])
        if (!((space.dist(y, z) - space.dist(v, w)).abs() < bound))
          return false;
    }
    return true;
  }

  bool covering_ok(int n) const {
    const Rational cover = covering_radius(n);
    for (int x = 0; x < space.size(); ++x) {
      bool covered = false;
      for (const auto& [z, w] : phi[n])
        if (space.dist(x, w) < cover) {
          covered = true;
          break;
        }
      if (!covered) return false;
    }
    return true;
  }

  bool assign(int n, size_t i) {
    const auto& net = nets.net(n);
    if (i == net.size()) {
      if (!covering_ok(n)) return false;
      result.max_depth_reached = std::max(result.max_depth_reached, n);
      if (n == k) return true;
      phi.push_back({});
      if (assign(n + 1, 0)) return true;
      phi.pop_back();
      return false;
    }
    const int z = net[i];
    for (int w : net) {
      ++result.nodes;
      if (!anchors_ok(n, z, w) || !coherence_ok(n, z, w)) continue;
      phi[n].push_back({z, w});
      if (assign(n, i + 1)) return true;
      phi[n].pop_back();
    }
    return false;
  }
};

}  // namespace

KSystemSearchResult search_k_system(const MetricSpace& space,
                                    const PointTuple& a, const PointTuple& b,
                                    const NetFamily& nets, int k) {
  check_anchors(space, a, b);
  if (k < 0) throw ValidationError("system depth must be >= 0");
  Search s{space, a, b, nets, k};
  s.phi.push_back({});
  s.result.found = s.assign(0, 0);
  if (s.result.found) {
    s.result.system = KSystem{k, s.phi, a, b};
  }
  return s.result;
}

namespace {

// Walks a Player-2 tree along a fixed sequence of Player-1 moves and
// returns the replies.
std::vector<int> play_line(const Strategy& st,
                           const std::vector<Move>& moves) {
  if (st.kind != GameKind::Ef || st.owner != 2)
    throw ValidationError("a winning Player-2 strategy is required");
  std::vector<int> replies;
  if (st.chooser) {
    PointTuple left = st.a, right = st.b;
    for (const Move& mv : moves) {
      const int reply = st.chooser(left, right, mv.side, mv.point);
      (mv.side == Side::Left ? left : right).push_back(mv.point);
      (mv.side == Side::Left ? right : left).push_back(reply);
      replies.push_back(reply);
    }
    return replies;
  }
  const StrategyNode* node = st.root.get();
  for (const Move& mv : moves) {
    if (node == nullptr)
      throw ValidationError("strategy does not cover the required line");
    const StrategyNode::Branch* branch = nullptr;
    for (const auto& br : node->branches)
      if (br.p1 == mv) branch = &br;
    if (branch == nullptr)
      throw ValidationError("strategy does not cover the required line");
    replies.push_back(branch->reply);
    node = branch->child.get();
  }
  return replies;
}

void require_line_exact(const MetricSpace& space, const PointTuple& a,
                        const PointTuple& b,
                        const std::vector<std::pair<int, int>>& pairs) {
  std::vector<std::pair<int, int>> all;
  for (size_t i = 0; i < a.size(); ++i) all.push_back({a[i], b[i]});
  all.insert(all.end(), pairs.begin(), pairs.end());
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j)
      if (space.dist(all[i].first, all[j].first) !=
          space.dist(all[i].second, all[j].second))
        throw ValidationError("strategy loses a line: invalid certificate");
}

}  // namespace

KSystem strategy_to_k_system(const MetricSpace& space, const PointTuple& a,
                             const PointTuple& b, const NetFamily& nets,
                             const Strategy& p2_strategy, int k) {
  check_anchors(space, a, b);
  if (p2_strategy.a != a || p2_strategy.b != b)
    throw ValidationError("strategy anchors do not match the pair");
  const auto& net_k = nets.net(k);
  const int L = static_cast<int>(net_k.size());
  if (p2_strategy.resolved_budget < L + 1)
    throw ValidationError("strategy budget below net size + 1");

  // Player 1 enumerates the depth-k net on the left with ordinals
  // L, L-1, ..., 1; the unused ordinal-0 round backs the covering
  // clause, which is verified directly below.
  std::vector<Move> moves;
  for (int i = 0; i < L; ++i)
    moves.push_back(Move{L - i, Side::Left, net_k[i]});
  const std::vector<int> replies = play_line(p2_strategy, moves);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < L; ++i) pairs.push_back({net_k[i], replies[i]});
  require_line_exact(space, a, b, pairs);

  KSystem system;
  system.depth = k;
  system.a = a;
  system.b = b;
  system.phi.resize(k + 1);
  for (int n = 0; n <= k; ++n) {
    const Rational eps = NetFamily::radius(n);
    for (int z : nets.net(n)) {
      const auto it = std::find(net_k.begin(), net_k.end(), z);
      if (it == net_k.end())
        throw InternalError("net levels are not nested");
      const int d = replies[it - net_k.begin()];
      int snapped = -1;
      for (int w : nets.net(n))
        if (space.dist(d, w) < eps) {
          snapped = w;
          break;
        }
      if (snapped < 0)
        throw InternalError("reply cannot be snapped to the net");
      system.phi[n].push_back({z, snapped});
    }
  }
  const auto report = verify_k_system(space, nets, system);
  if (!report.empty())
    throw ValidationError("strategy loses a line: invalid certificate (" +
                          report.front().message + ")");
  return system;
}

int snap_depth(const MetricSpace& space) {
  if (space.size() == 1) return 0;
  const Rational half_gap = min_distance_gap(space).min_gap / Rational(2);
  int n = 0;
  while (!(covering_radius(n) < half_gap)) ++n;
  return n;
}

namespace {

IsometryMap certify(const MetricSpace& space, const PointTuple& a,
                    const PointTuple& b, std::vector<int> map) {
  IsometryMap iso;
  iso.map = std::move(map);
  const int n = space.size();
  iso.distance_preserving = true;
  for (int x = 0; iso.distance_preserving && x < n; ++x)
    for (int y = 0; iso.distance_preserving && y < n; ++y)
      iso.distance_preserving =
          space.dist(x, y) == space.dist(iso.map[x], iso.map[y]);
  std::vector<bool> hit(n, false);
  iso.bijective = true;
  for (int x = 0; x < n; ++x) {
    if (iso.map[x] < 0 || iso.map[x] >= n || hit[iso.map[x]]) {
      iso.bijective = false;
      break;
    }
    hit[iso.map[x]] = true;
  }
  iso.carries_pair = true;
  for (size_t i = 0; iso.carries_pair && i < a.size(); ++i)
    iso.carries_pair = iso.map[a[i]] == b[i];
  return iso;
}

}  // namespace

IsometryMap system_to_isometry(const MetricSpace& space, const PointTuple& a,
                               const PointTuple& b, const NetFamily& nets,
                               const KSystem& system) {
  check_anchors(space, a, b);
  check_shape(nets, system);
  const int n_star = system.depth;
  const int n = space.size();
  if (static_cast<int>(nets.net(n_star).size()) != n)
    throw ValidationError("snap depth net does not reach the full point set");
  Rational threshold = covering_radius(n_star);
  if (n > 1) {
    const Rational half_gap = min_distance_gap(space).min_gap / Rational(2);
    if (!(threshold < half_gap))
      throw ValidationError("depth insufficient for the snap threshold");
    threshold = half_gap;
  }
  std::vector<int> map(n, -1);
  for (const auto& [z, w] : system.phi[n_star]) {
    int snapped = -1;
    for (int x = 0; x < n; ++x) {
      if (space.dist(w, x) < threshold) {
        if (snapped >= 0) throw InternalError("ambiguous snap");
        snapped = x;
      }
    }
    if (snapped < 0) throw InternalError("no point within the snap threshold");
    map[z] = snapped;
  }
  return certify(space, a, b, std::move(map));
}

IsometryMap strategy_stream_isometry(const MetricSpace& space,
                                     const PointTuple& a, const PointTuple& b,
                                     const Strategy& p2_strategy) {
  check_anchors(space, a, b);
  if (p2_strategy.a != a || p2_strategy.b != b)
    throw ValidationError("strategy anchors do not match the pair");
  const int n = space.size();
  if (p2_strategy.resolved_budget < 2 * n)
    throw ValidationError("strategy budget below twice the point count");

  // Every point passes through the left side at an even round and the
  // right side at an odd round, so the transcript's left-to-right
  // pairing is total and onto.
  std::vector<Move> moves;
  for (int j = 0; j < 2 * n; ++j) {
    const int point = j % 2 == 0 ? j / 2 : (j - 1) / 2;
    moves.push_back(
        Move{2 * n - 1 - j, j % 2 == 0 ? Side::Left : Side::Right, point});
  }
  const std::vector<int> replies = play_line(p2_strategy, moves);
  std::vector<std::pair<int, int>> pairs;
  for (int j = 0; j < 2 * n; ++j) {
    if (moves[j].side == Side::Left)
      pairs.push_back({moves[j].point, replies[j]});
    else
      pairs.push_back({replies[j], moves[j].point});
  }
  require_line_exact(space, a, b, pairs);
  std::vector<int> map(n, -1);
  for (const auto& [l, r] : pairs) {
    if (map[l] >= 0 && map[l] != r)
      throw ValidationError("strategy loses a line: invalid certificate");
    map[l] = r;
  }
  for (int x = 0; x < n; ++x)
    if (map[x] < 0) throw InternalError("streamed map is not total");
  return certify(space, a, b, std::move(map));
}

}  // namespace scott

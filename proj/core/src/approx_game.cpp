#include "scott/approx_game.hpp"

#include <map>
#include <memory>
#include <utility>

#include "scott/errors.hpp"

namespace scott {
namespace {

constexpr std::uint64_t kBranchCap = 1ull << 22;

void check_tuples(const MetricSpace& space, const PointTuple& a,
                  const PointTuple& b) {
  if (a.size() != b.size()) throw ValidationError("tuple length mismatch");
  for (int x : a)
    if (x < 0 || x >= space.size())
      throw ValidationError("tuple index out of range");
  for (int x : b)
    if (x < 0 || x >= space.size())
      throw ValidationError("tuple index out of range");
}

struct ApproxSolver {
  const MetricSpace& space;
  const ToleranceSchedule& f;
  const PointTuple& a;
  const PointTuple& b;
  int n;
  // When twice the largest tolerance sits at or below the minimum gap
  // between distance values, every strict bound forces exact equality,
  // the round index stops mattering, and positions collapse to the set
  // of played pairs plus the parity of the round count.
  bool exact;
  std::vector<std::pair<int, int>> rounds;  // (left, right) per round
  std::map<std::pair<std::uint64_t, int>, bool> exact_memo;
  std::map<std::vector<int>, bool> loose_memo;
  std::uint64_t explored = 0;
  std::uint64_t branches = 0;

  // The candidate round (c on the left, d on the right) keeps every
  // bound involving it satisfiable for good: bounds never loosen later.
  bool cond(int c, int d) const {
    const int j = static_cast<int>(rounds.size());
    if (exact) {
      for (size_t i = 0; i < a.size(); ++i)
        if (space.dist(a[i], c) != space.dist(b[i], d)) return false;
      for (const auto& [p, q] : rounds)
        if (space.dist(p, c) != space.dist(q, d)) return false;
      return true;
    }
    const Rational fj = f.at(j);
    for (size_t i = 0; i < a.size(); ++i) {
      const Rational diff = space.dist(a[i], c) - space.dist(b[i], d);
      if (!(diff.abs() < fj)) return false;
    }
    for (int i = 0; i < j; ++i) {
      const Rational diff =
          space.dist(rounds[i].first, c) - space.dist(rounds[i].second, d);
      if (!(diff.abs() < f.at(i) + fj)) return false;
    }
    return true;
  }

  bool left_to_play() const { return rounds.size() % 2 == 0; }

  std::uint64_t mask() const {
    std::uint64_t m = 0;
    for (const auto& [c, d] : rounds) m |= 1ull << (c * n + d);
    return m;
  }

  // Player 2 survives m further rounds. Only the largest next ordinal
  // needs checking: surviving a longer remainder implies surviving a
  // shorter one.
  bool win(int m) {
    std::vector<int> loose_key;
    std::pair<std::uint64_t, int> exact_key;
    if (exact) {
      exact_key = {mask(), 2 * m + static_cast<int>(rounds.size() % 2)};
      if (auto it = exact_memo.find(exact_key); it != exact_memo.end())
        return it->second;
    } else {
      loose_key.push_back(m);
      for (const auto& [c, d] : rounds) {
        loose_key.push_back(c);
        loose_key.push_back(d);
      }
      if (auto it = loose_memo.find(loose_key); it != loose_memo.end())
        return it->second;
    }
    ++explored;
    const bool left = left_to_play();
    bool all_ok = true;
    for (int x = 0; all_ok && x < n; ++x) {
      bool found = false;
      for (int y = 0; !found && y < n; ++y) {
        const int c = left ? x : y;
        const int d = left ? y : x;
        if (!cond(c, d)) continue;
        if (m == 1) {
          found = true;
          break;
        }
        rounds.push_back({c, d});
        found = win(m - 1);
        rounds.pop_back();
      }
      all_ok = found;
    }
    if (exact)
      exact_memo[exact_key] = all_ok;
    else
      loose_memo[std::move(loose_key)] = all_ok;
    return all_ok;
  }

  void bump_branches() {
    if (++branches > kBranchCap)
      throw ValidationError("strategy tree exceeds the materialization cap");
  }

  Side side_now() const { return left_to_play() ? Side::Left : Side::Right; }

  std::unique_ptr<StrategyNode> p2_tree(int m) {
    auto node = std::make_unique<StrategyNode>();
    const bool left = left_to_play();
    for (int k = 0; k < m; ++k) {
      for (int x = 0; x < n; ++x) {
        int reply = -1;
        for (int y = 0; reply < 0 && y < n; ++y) {
          const int c = left ? x : y;
          const int d = left ? y : x;
          if (!cond(c, d)) continue;
          if (k == 0) {
            reply = y;
            break;
          }
          rounds.push_back({c, d});
          if (win(k)) reply = y;
          rounds.pop_back();
        }
        if (reply < 0)
          throw InternalError("no surviving reply at a winning position");
        bump_branches();
        StrategyNode::Branch br{Move{k, side_now(), x}, reply, nullptr};
        if (k > 0) {
          const int c = left ? x : reply;
          const int d = left ? reply : x;
          rounds.push_back({c, d});
          br.child = p2_tree(k);
          rounds.pop_back();
        }
        node->branches.push_back(std::move(br));
      }
    }
    return node;
  }

  std::unique_ptr<StrategyNode> zero_node() {
    auto node = std::make_unique<StrategyNode>();
    node->move = Move{0, side_now(), 0};
    for (int y = 0; y < n; ++y) node->replies.push_back({y, nullptr});
    branches += n;
    return node;
  }

  std::unique_ptr<StrategyNode> p1_tree(int m) {
    const bool left = left_to_play();
    for (int k = 0; k < m; ++k) {
      for (int x = 0; x < n; ++x) {
        bool defeats = true;
        for (int y = 0; defeats && y < n; ++y) {
          const int c = left ? x : y;
          const int d = left ? y : x;
          if (!cond(c, d)) continue;
          if (k == 0) {
            defeats = false;
            break;
          }
          rounds.push_back({c, d});
          if (win(k)) defeats = false;
          rounds.pop_back();
        }
        if (!defeats) continue;
        auto node = std::make_unique<StrategyNode>();
        node->move = Move{k, side_now(), x};
        for (int y = 0; y < n; ++y) {
          bump_branches();
          const int c = left ? x : y;
          const int d = left ? y : x;
          if (k == 0) {
            node->replies.push_back({y, nullptr});
          } else if (!cond(c, d)) {
            // A bound is already violated for good; end the game.
            rounds.push_back({c, d});
            node->replies.push_back({y, zero_node()});
            rounds.pop_back();
          } else {
            rounds.push_back({c, d});
            node->replies.push_back({y, p1_tree(k)});
            rounds.pop_back();
          }
        }
        return node;
      }
    }
    throw InternalError("no defeating move at a Player-1-winning position");
  }
};

ApproxSolver make_solver(const MetricSpace& space, const PointTuple& a,
                         const PointTuple& b, const ToleranceSchedule& f) {
  const int n = space.size();
  bool exact = n == 1;
  if (n > 1 && n <= 8) {
    const Rational g = min_distance_gap(space).min_gap;
    exact = !(g < f.at(0) * Rational(2));
  }
  return ApproxSolver{space, f, a, b, n, exact};
}

}  // namespace

int approx_stabilization_budget(const MetricSpace& space,
                                const ToleranceSchedule& f) {
  const int n = space.size();
  if (n == 1) return 2;
  const Rational g = min_distance_gap(space).min_gap;
  int j0 = 0;
  while (g < f.at(j0) * Rational(2)) ++j0;
  return j0 + 2 * n;
}

GameOutcome solve_approx_game(const MetricSpace& space, const PointTuple& a,
                              const PointTuple& b, RankValue alpha,
                              const ToleranceSchedule& f) {
  check_tuples(space, a, b);
  if (!alpha.is_finite() && !alpha.is_omega())
    throw ValidationError("budget must be finite or omega");
  ApproxSolver solver = make_solver(space, a, b, f);
  const int resolved = alpha.is_omega() ? approx_stabilization_budget(space, f)
                                        : alpha.value();
  const bool p2_wins = resolved == 0 || solver.win(resolved);

  GameOutcome out;
  out.winner = p2_wins ? 2 : 1;
  Strategy st;
  st.kind = GameKind::Approx;
  st.owner = out.winner;
  st.a = a;
  st.b = b;
  st.budget = alpha;
  st.resolved_budget = resolved;
  st.schedule = f;
  if (p2_wins) {
    if (resolved > 0) st.root = solver.p2_tree(resolved);
  } else {
    st.root = solver.p1_tree(resolved);
  }
  out.strategy = std::move(st);
  out.explored_states = solver.explored;
  return out;
}

bool approx_related(const MetricSpace& space, const PointTuple& a,
                    const PointTuple& b, RankValue alpha,
                    const ToleranceSchedule& f) {
  check_tuples(space, a, b);
  if (!alpha.is_finite() && !alpha.is_omega())
    throw ValidationError("budget must be finite or omega");
  ApproxSolver solver = make_solver(space, a, b, f);
  const int resolved = alpha.is_omega() ? approx_stabilization_budget(space, f)
                                        : alpha.value();
  return resolved == 0 || solver.win(resolved);
}

RankValue metric_rank_upper(const MetricSpace& space, const PointTuple& a,
                            const PointTuple& b,
                            const std::vector<ToleranceSchedule>& family) {
  if (family.empty()) throw ValidationError("schedule family must be nonempty");
  check_tuples(space, a, b);
  int best = -1;
  for (const ToleranceSchedule& f : family) {
    ApproxSolver solver = make_solver(space, a, b, f);
    const int cap = approx_stabilization_budget(space, f);
    for (int mu = 1; mu <= cap && (best < 0 || mu < best); ++mu) {
      if (!solver.win(mu)) {
        best = mu;
        break;
      }
    }
  }
  return best < 0 ? RankValue::infinity() : RankValue::finite(best);
}

}  // namespace scott

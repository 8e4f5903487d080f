#include "scott/ef_game.hpp"

#include <limits>
#include <map>
#include <memory>
#include <utility>

#include "scott/bf_table.hpp"
#include "scott/errors.hpp"

namespace scott {
namespace {

constexpr std::uint64_t kBranchCap = 1ull << 22;

// One completed round: the point standing on each side, in play order.
struct RoundPair {
  int left;
  int right;
};

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

std::string side_name(Side s) { return s == Side::Left ? "left" : "right"; }

// Winner of a fully played line under the strategy's own game kind.
int line_winner(const MetricSpace& space, const Strategy& st,
                const std::vector<RoundPair>& rounds) {
  if (st.kind == GameKind::Ef) {
    std::vector<std::pair<int, int>> pairs;
    for (size_t i = 0; i < st.a.size(); ++i) pairs.push_back({st.a[i], st.b[i]});
    for (const auto& r : rounds) pairs.push_back({r.left, r.right});
    for (size_t i = 0; i < pairs.size(); ++i)
      for (size_t j = i + 1; j < pairs.size(); ++j)
        if (space.dist(pairs[i].first, pairs[j].first) !=
            space.dist(pairs[i].second, pairs[j].second))
          return 1;
    return 2;
  }
  if (!st.schedule) throw InternalError("approx strategy without a schedule");
  const ToleranceSchedule& f = *st.schedule;
  const int k = static_cast<int>(rounds.size());
  for (int j = 0; j < k; ++j) {
    for (size_t i = 0; i < st.a.size(); ++i) {
      const Rational diff = space.dist(st.a[i], rounds[j].left) -
                            space.dist(st.b[i], rounds[j].right);
      if (!(diff.abs() < f.at(j))) return 1;
    }
  }
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const Rational diff = space.dist(rounds[i].left, rounds[j].left) -
                            space.dist(rounds[i].right, rounds[j].right);
      if (!(diff.abs() < f.at(i) + f.at(j))) return 1;
    }
  }
  return 2;
}

struct EfSolver {
  const MetricSpace& space;
  int n;
  std::vector<std::pair<int, int>> pairs;  // anchors plus current rounds
  std::map<std::pair<std::uint64_t, int>, bool> memo;
  std::uint64_t explored = 0;
  std::uint64_t branches = 0;

  std::uint64_t bit(int c, int d) const {
    return 1ull << (c * n + d);
  }

  // The new pair keeps the pairing exactly distance-preserving.
  bool extend_ok(int c, int d) const {
    for (const auto& [p, q] : pairs)
      if (space.dist(c, p) != space.dist(d, q)) return false;
    return true;
  }

  // Player 2 survives m further rounds from the current pairing. The
  // pairing is a set: repeated moves force repeated replies and do not
  // grow the state, and only the largest next ordinal needs checking
  // because surviving a longer remainder implies surviving a shorter
  // one.
  bool win(std::uint64_t mask, int m) {
    const auto key = std::make_pair(mask, m);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    ++explored;
    bool all_ok = true;
    for (int side = 0; all_ok && side < 2; ++side) {
      for (int x = 0; all_ok && x < n; ++x) {
        bool found = false;
        for (int y = 0; !found && y < n; ++y) {
          const int c = side == 0 ? x : y;
          const int d = side == 0 ? y : x;
          if (!extend_ok(c, d)) continue;
          if (m == 1) {
            found = true;
            break;
          }
          pairs.push_back({c, d});
          found = win(mask | bit(c, d), m - 1);
          pairs.pop_back();
        }
        all_ok = found;
      }
    }
    memo[key] = all_ok;
    return all_ok;
  }

  void bump_branches() {
    if (++branches > kBranchCap)
      throw ValidationError("strategy tree exceeds the materialization cap");
  }

  std::unique_ptr<StrategyNode> p2_tree(std::uint64_t mask, int m) {
    auto node = std::make_unique<StrategyNode>();
    for (int k = 0; k < m; ++k) {
      for (int side = 0; side < 2; ++side) {
        for (int x = 0; x < n; ++x) {
          int reply = -1;
          for (int y = 0; reply < 0 && y < n; ++y) {
            const int c = side == 0 ? x : y;
            const int d = side == 0 ? y : x;
            if (!extend_ok(c, d)) continue;
            if (k == 0) {
              reply = y;
              break;
            }
            pairs.push_back({c, d});
            if (win(mask | bit(c, d), k)) reply = y;
            pairs.pop_back();
          }
          if (reply < 0)
            throw InternalError("no surviving reply at a winning position");
          bump_branches();
          StrategyNode::Branch br{
              Move{k, side == 0 ? Side::Left : Side::Right, x}, reply, nullptr};
          if (k > 0) {
            const int c = side == 0 ? x : reply;
            const int d = side == 0 ? reply : x;
            pairs.push_back({c, d});
            br.child = p2_tree(mask | bit(c, d), k);
            pairs.pop_back();
          }
          node->branches.push_back(std::move(br));
        }
      }
    }
    return node;
  }

  std::unique_ptr<StrategyNode> zero_node() {
    auto node = std::make_unique<StrategyNode>();
    node->move = Move{0, Side::Left, 0};
    for (int y = 0; y < n; ++y) node->replies.push_back({y, nullptr});
    branches += n;
    return node;
  }

  std::unique_ptr<StrategyNode> p1_tree(std::uint64_t mask, int m) {
    // Lowest winning ordinal first, then lowest point, left before
    // right: reproducible certificates.
    for (int k = 0; k < m; ++k) {
      for (int side = 0; side < 2; ++side) {
        for (int x = 0; x < n; ++x) {
          bool defeats = true;
          for (int y = 0; defeats && y < n; ++y) {
            const int c = side == 0 ? x : y;
            const int d = side == 0 ? y : x;
            if (!extend_ok(c, d)) continue;
            if (k == 0) {
              defeats = false;
              break;
            }
            pairs.push_back({c, d});
            if (win(mask | bit(c, d), k)) defeats = false;
            pairs.pop_back();
          }
          if (!defeats) continue;
          auto node = std::make_unique<StrategyNode>();
          node->move = Move{k, side == 0 ? Side::Left : Side::Right, x};
          for (int y = 0; y < n; ++y) {
            bump_branches();
            const int c = side == 0 ? x : y;
            const int d = side == 0 ? y : x;
            if (k == 0) {
              node->replies.push_back({y, nullptr});
            } else if (!extend_ok(c, d)) {
              // Pairing already broken; run the clock out immediately.
              node->replies.push_back({y, zero_node()});
            } else {
              pairs.push_back({c, d});
              node->replies.push_back({y, p1_tree(mask | bit(c, d), k)});
              pairs.pop_back();
            }
          }
          return node;
        }
      }
    }
    throw InternalError("no defeating move at a Player-1-winning position");
  }
};

void attach_atomic_witness(const MetricSpace& space, Strategy& st) {
  for (size_t i = 0; i < st.a.size(); ++i)
    for (size_t j = 0; j < st.a.size(); ++j)
      if (space.dist(st.a[i], st.a[j]) != space.dist(st.b[i], st.b[j])) {
        st.atomic_witness = {static_cast<int>(i), static_cast<int>(j)};
        return;
      }
  throw InternalError("atomic loss without a distance mismatch");
}

}  // namespace

GameOutcome solve_ef_game(const MetricSpace& space, const PointTuple& a,
                          const PointTuple& b, RankValue alpha) {
  check_tuples(space, a, b);
  const int n = space.size();
  if (n > 8) throw ValidationError("game solver capped at 8 points");
  if (!alpha.is_finite() && !alpha.is_omega())
    throw ValidationError("budget must be finite or omega");

  EfSolver solver{space, n};
  for (size_t i = 0; i < a.size(); ++i) solver.pairs.push_back({a[i], b[i]});
  const bool anchors_ok = atomic_related(space, a, b);

  bool p2_wins;
  int resolved;
  if (alpha.is_omega()) {
    // The relations stop changing at a finite level; Player 2 wins the
    // omega game iff the pair is still related there.
    const auto table = BackAndForthTable::compute(space);
    const RankValue rank = table.rank_pair(a, b);
    p2_wins = rank.is_infinity();
    resolved = p2_wins ? std::max(1, table.stabilization_level())
                       : std::max(1, rank.value());
  } else {
    resolved = alpha.value();
    p2_wins = anchors_ok && (resolved == 0 || solver.win(0, resolved));
  }

  GameOutcome out;
  out.winner = p2_wins ? 2 : 1;
  Strategy st;
  st.kind = GameKind::Ef;
  st.owner = out.winner;
  st.a = a;
  st.b = b;
  st.budget = alpha;
  st.resolved_budget = resolved;
  if (p2_wins) {
    if (resolved > 0) st.root = solver.p2_tree(0, resolved);
  } else if (alpha.is_finite() && resolved == 0) {
    attach_atomic_witness(space, st);
  } else if (!anchors_ok) {
    // The anchor pairing is already broken; end the game immediately.
    st.root = solver.zero_node();
  } else {
    st.root = solver.p1_tree(0, resolved);
  }
  out.strategy = std::move(st);
  out.explored_states = solver.explored;
  return out;
}

Strategy lazy_p2_strategy(const MetricSpace& space, const PointTuple& a,
                          const PointTuple& b) {
  check_tuples(space, a, b);
  auto table = std::make_shared<const BackAndForthTable>(
      BackAndForthTable::compute(space));
  if (!table->rank_pair(a, b).is_infinity())
    throw ValidationError("pair is not related at every level");
  Strategy st;
  st.kind = GameKind::Ef;
  st.owner = 2;
  st.a = a;
  st.b = b;
  st.budget = RankValue::omega();
  st.resolved_budget = std::numeric_limits<int>::max();
  const int n = space.size();
  st.chooser = [table, n](const PointTuple& left, const PointTuple& right,
                          Side side, int point) {
    PointTuple l = left, r = right;
    (side == Side::Left ? l : r).push_back(point);
    PointTuple& other = side == Side::Left ? r : l;
    for (int y = 0; y < n; ++y) {
      other.push_back(y);
      if (table->rank_pair(l, r).is_infinity()) return y;
      other.pop_back();
    }
    throw InternalError("no level-preserving reply exists");
  };
  return st;
}

namespace {

nlohmann::json round_json(const Move& mv, int reply) {
  return {{"ordinal", mv.ordinal},
          {"side", side_name(mv.side)},
          {"point", mv.point},
          {"reply", reply}};
}

Side parity_side(size_t round) {
  return round % 2 == 0 ? Side::Left : Side::Right;
}

}  // namespace

ReplayResult replay_game(const MetricSpace& space, const Strategy& strategy,
                         const nlohmann::json& script) {
  if (!script.is_array()) throw ValidationError("script must be a JSON array");
  const int n = space.size();
  check_tuples(space, strategy.a, strategy.b);
  std::vector<RoundPair> rounds;
  nlohmann::json transcript = nlohmann::json::array();

  if (strategy.owner == 1) {
    const StrategyNode* node = strategy.root.get();
    size_t idx = 0;
    while (node != nullptr) {
      if (!node->move) throw InternalError("strategy node without a move");
      if (idx >= script.size())
        throw ValidationError("script ended before the game (round " +
                              std::to_string(idx) + ")");
      if (!script[idx].is_number_integer())
        throw ValidationError("illegal scripted move at index " +
                              std::to_string(idx) + ": expected a point");
      const int reply = script[idx].get<int>();
      if (reply < 0 || reply >= n)
        throw ValidationError("illegal scripted move at index " +
                              std::to_string(idx) + ": point out of range");
      const Move& mv = *node->move;
      const StrategyNode::ReplyEdge* edge = nullptr;
      for (const auto& e : node->replies)
        if (e.reply == reply) edge = &e;
      if (edge == nullptr)
        throw InternalError("strategy missing a reply branch");
      rounds.push_back(mv.side == Side::Left ? RoundPair{mv.point, reply}
                                             : RoundPair{reply, mv.point});
      transcript.push_back(round_json(mv, reply));
      node = edge->child.get();
      ++idx;
    }
    if (idx != script.size())
      throw ValidationError("script continues after the game ended at index " +
                            std::to_string(idx));
    return {line_winner(space, strategy, rounds), transcript};
  }

  const StrategyNode* node = strategy.root.get();
  int bound = strategy.resolved_budget;
  bool ended = (node == nullptr);
  for (size_t idx = 0; idx < script.size(); ++idx) {
    const auto& e = script[idx];
    const std::string at = " at index " + std::to_string(idx);
    if (ended)
      throw ValidationError("script continues after ordinal 0" + at);
    if (!e.is_object() || !e.contains("ordinal") || !e.contains("side") ||
        !e.contains("point"))
      throw ValidationError(
          "illegal scripted move" + at +
          ": expected {\"ordinal\", \"side\", \"point\"}");
    const int k = e.at("ordinal").get<int>();
    const std::string sname = e.at("side").get<std::string>();
    const int x = e.at("point").get<int>();
    if (sname != "left" && sname != "right")
      throw ValidationError("illegal scripted move" + at + ": bad side");
    const Side side = sname == "left" ? Side::Left : Side::Right;
    if (k < 0 || k >= bound)
      throw ValidationError("illegal scripted move" + at +
                            ": ordinal must be below " + std::to_string(bound));
    if (x < 0 || x >= n)
      throw ValidationError("illegal scripted move" + at +
                            ": point out of range");
    if (strategy.kind == GameKind::Approx && side != parity_side(idx))
      throw ValidationError("illegal scripted move" + at +
                            ": side schedule fixes " +
                            side_name(parity_side(idx)) + " here");
    const Move mv{k, side, x};
    const StrategyNode::Branch* branch = nullptr;
    for (const auto& br : node->branches)
      if (br.p1 == mv) branch = &br;
    if (branch == nullptr)
      throw InternalError("strategy missing a branch for a legal move");
    rounds.push_back(side == Side::Left ? RoundPair{x, branch->reply}
                                        : RoundPair{branch->reply, x});
    transcript.push_back(round_json(mv, branch->reply));
    node = branch->child.get();
    bound = k;
    ended = (k == 0);
  }
  if (!ended && strategy.resolved_budget > 0)
    throw ValidationError("script must end with an ordinal-0 move");
  return {line_winner(space, strategy, rounds), transcript};
}

namespace {

struct OppositionWalker {
  const MetricSpace& space;
  const Strategy& st;
  int n;
  OppositionReport rep;
  std::vector<RoundPair> rounds;
  nlohmann::json line = nlohmann::json::array();

  void fail(const std::string& reason) {
    if (!rep.failure.is_null()) return;
    rep.sound = false;
    rep.failure = {{"reason", reason}, {"line", line}};
  }

  bool failed() const { return !rep.failure.is_null(); }

  void finish_line(int required_winner) {
    ++rep.lines;
    if (line_winner(space, st, rounds) != required_winner)
      fail("owner loses this line");
  }

  void walk_p1(const StrategyNode* node, int bound) {
    if (failed()) return;
    if (node == nullptr) {
      finish_line(1);
      return;
    }
    if (!node->move) {
      fail("strategy node without a move");
      return;
    }
    const Move& mv = *node->move;
    if (mv.ordinal < 0 || mv.ordinal >= bound) {
      fail("ordinal does not decrease");
      return;
    }
    if (mv.point < 0 || mv.point >= n) {
      fail("move point out of range");
      return;
    }
    if (st.kind == GameKind::Approx && mv.side != parity_side(rounds.size())) {
      fail("side schedule violated");
      return;
    }
    std::vector<bool> seen(n, false);
    for (const auto& e : node->replies) {
      if (e.reply < 0 || e.reply >= n || seen[e.reply]) {
        fail("malformed reply set");
        return;
      }
      seen[e.reply] = true;
    }
    for (int y = 0; y < n; ++y)
      if (!seen[y]) {
        fail("strategy not total: missing reply " + std::to_string(y));
        return;
      }
    for (const auto& e : node->replies) {
      if (failed()) return;
      rounds.push_back(mv.side == Side::Left ? RoundPair{mv.point, e.reply}
                                             : RoundPair{e.reply, mv.point});
      line.push_back(round_json(mv, e.reply));
      if (e.child == nullptr) {
        if (mv.ordinal != 0)
          fail("game ends before ordinal 0");
        else
          finish_line(1);
      } else {
        if (mv.ordinal == 0)
          fail("continuation after ordinal 0");
        else
          walk_p1(e.child.get(), mv.ordinal);
      }
      rounds.pop_back();
      if (!failed()) line.erase(line.size() - 1);
    }
  }

  void walk_p2(const StrategyNode* node, int m) {
    if (failed()) return;
    if (m == 0 || node == nullptr) {
      if (m != 0) {
        fail("strategy not total: missing subtree");
        return;
      }
      finish_line(2);
      return;
    }
    for (int k = 0; k < m; ++k) {
      for (int s = 0; s < 2; ++s) {
        const Side side = s == 0 ? Side::Left : Side::Right;
        if (st.kind == GameKind::Approx && side != parity_side(rounds.size()))
          continue;
        for (int x = 0; x < n; ++x) {
          if (failed()) return;
          const Move mv{k, side, x};
          const StrategyNode::Branch* branch = nullptr;
          for (const auto& br : node->branches)
            if (br.p1 == mv) branch = &br;
          if (branch == nullptr) {
            line.push_back(round_json(mv, -1));
            fail("strategy not total: no branch for this move");
            return;
          }
          if (branch->reply < 0 || branch->reply >= n) {
            fail("reply out of range");
            return;
          }
          rounds.push_back(side == Side::Left
                               ? RoundPair{x, branch->reply}
                               : RoundPair{branch->reply, x});
          line.push_back(round_json(mv, branch->reply));
          if (k == 0) {
            if (branch->child != nullptr)
              fail("continuation after ordinal 0");
            else
              finish_line(2);
          } else {
            walk_p2(branch->child.get(), k);
          }
          rounds.pop_back();
          if (!failed()) line.erase(line.size() - 1);
        }
      }
    }
  }
};

}  // namespace

OppositionReport exhaustive_opposition(const MetricSpace& space,
                                       const Strategy& strategy) {
  check_tuples(space, strategy.a, strategy.b);
  OppositionWalker w{space, strategy, space.size()};
  w.rep.sound = true;
  if (strategy.owner == 1) {
    if (strategy.root == nullptr)
      w.finish_line(1);
    else
      w.walk_p1(strategy.root.get(),
                std::max(1, strategy.resolved_budget));
  } else {
    w.walk_p2(strategy.root.get(), strategy.resolved_budget);
  }
  return w.rep;
}

}  // namespace scott

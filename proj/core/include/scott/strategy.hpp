#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "scott/metric_space.hpp"
#include "scott/rank_value.hpp"
#include "scott/tolerance.hpp"

namespace scott {

enum class Side { Left, Right };

enum class GameKind { Ef, Approx };

// One Player-1 move: a shrinking ordinal plus a point played on one side.
// In the approximation game the side is fixed by move parity and is
// carried here redundantly for replay checking.
struct Move {
  int ordinal = 0;
  Side side = Side::Left;
  int point = 0;

  bool operator==(const Move&) const = default;
};

// A strategy tree node. For a Player-2 strategy, `branches` maps every
// legal Player-1 move to the chosen reply and the continuation. For a
// Player-1 strategy, `move` is the chosen move and `replies` maps each
// opponent reply point to the continuation (empty continuation = the
// game ended with that reply).
struct StrategyNode {
  struct Branch {
    Move p1;
    int reply = 0;
    std::unique_ptr<StrategyNode> child;  // null after a 0-ordinal move
  };
  struct ReplyEdge {
    int reply = 0;
    std::unique_ptr<StrategyNode> child;  // null when the game has ended
  };

  // Player-2 owner.
  std::vector<Branch> branches;

  // Player-1 owner.
  std::optional<Move> move;
  std::vector<ReplyEdge> replies;
};

// Positional Player-2 reply rule: receives the full left and right
// sequences played so far (anchors first) and Player 1's move, returns
// the reply point. Used instead of a materialized tree when the budget
// would make the tree astronomically large.
using P2Chooser = std::function<int(const PointTuple& left,
                                    const PointTuple& right, Side p1_side,
                                    int p1_point)>;

struct Strategy {
  GameKind kind = GameKind::Ef;
  int owner = 2;  // 1 or 2
  PointTuple a, b;
  RankValue budget = RankValue::finite(0);
  // Finite budget the tree is materialized for (equals budget when the
  // budget is finite, the stabilization resolution when it is omega).
  int resolved_budget = 0;
  std::optional<ToleranceSchedule> schedule;  // approx games only
  std::shared_ptr<StrategyNode> root;
  // Witness indices for a depth-0 atomic mismatch (Player-1 strategies).
  std::optional<std::pair<int, int>> atomic_witness;
  // Lazy positional rule; consulted by extraction and replay when set.
  P2Chooser chooser;
};

struct GameOutcome {
  int winner = 2;
  Strategy strategy;
  std::uint64_t explored_states = 0;
};

}  // namespace scott

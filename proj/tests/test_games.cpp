#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "scott/approx_game.hpp"
#include "scott/bf_table.hpp"
#include "scott/certificates.hpp"
#include "scott/ef_game.hpp"
#include "scott/errors.hpp"
#include "scott/oracle.hpp"

using namespace scott;
using scott::testing::load_fixture;
using scott::testing::make_space;
using nlohmann::json;

TEST_CASE("finite-budget winner tracks the pair rank") {
  // Player 2 survives n rounds exactly when the rank exceeds n.
  for (const char* name : {"path3", "square", "line"}) {
    auto s = load_fixture(name);
    auto t = BackAndForthTable::compute(s);
    const int n = s.size();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int budget = 0; budget <= 3; ++budget) {
          auto out = solve_ef_game(s, {i}, {j}, RankValue::finite(budget));
          bool p2 = t.rank_pair({i}, {j}) > RankValue::finite(budget);
          CHECK(out.winner == (p2 ? 2 : 1));
          CHECK(out.strategy.owner == out.winner);
        }
      }
    }
  }
}

TEST_CASE("budget zero is decided by the anchors alone") {
  auto s = load_fixture("path3");
  CHECK(solve_ef_game(s, {0, 1}, {2, 1}, RankValue::finite(0)).winner == 2);
  auto out = solve_ef_game(s, {0, 2}, {0, 1}, RankValue::finite(0));
  CHECK(out.winner == 1);
  REQUIRE(out.strategy.atomic_witness.has_value());
  auto [wi, wj] = *out.strategy.atomic_witness;
  CHECK(s.dist(0, 2) != s.dist(out.strategy.b[wi], out.strategy.b[wj]));
}

TEST_CASE("omega budgets resolve through the stabilized relation") {
  auto s = load_fixture("path3");
  auto far = solve_ef_game(s, {0}, {2}, RankValue::omega());
  CHECK(far.winner == 2);
  CHECK(far.strategy.budget == RankValue::omega());
  CHECK(far.strategy.resolved_budget >= 1);
  auto near = solve_ef_game(s, {0}, {1}, RankValue::omega());
  CHECK(near.winner == 1);
}

TEST_CASE("frozen example: distinguishing the path endpoints") {
  auto s = load_fixture("path3");
  auto out = solve_ef_game(s, {0}, {1}, RankValue::finite(1));
  CHECK(out.winner == 1);
  CHECK(out.explored_states == 1);
  REQUIRE(out.strategy.root != nullptr);
  REQUIRE(out.strategy.root->move.has_value());
  CHECK(out.strategy.root->move->ordinal == 0);
  CHECK(out.strategy.root->move->side == Side::Left);
  CHECK(out.strategy.root->move->point == 2);
}

TEST_CASE("winning strategies defeat exhaustive opposition") {
  auto s = load_fixture("path3");
  for (auto alpha : {RankValue::finite(1), RankValue::finite(2)}) {
    for (auto [i, j] : std::vector<std::pair<int, int>>{{0, 1}, {0, 2}}) {
      auto out = solve_ef_game(s, {i}, {j}, alpha);
      auto rep = exhaustive_opposition(s, out.strategy);
      CHECK(rep.sound);
      CHECK(rep.lines > 0);
      CHECK(rep.failure.is_null());
    }
  }
}

TEST_CASE("a corrupted strategy is caught with a named line") {
  auto s = load_fixture("path3");
  auto out = solve_ef_game(s, {0}, {2}, RankValue::finite(2));
  REQUIRE(out.winner == 2);
  // Send the reply to the first branch somewhere wrong.
  REQUIRE(!out.strategy.root->branches.empty());
  auto& br = out.strategy.root->branches.front();
  br.reply = (br.reply + 1) % s.size();
  auto rep = exhaustive_opposition(s, out.strategy);
  CHECK(!rep.sound);
  CHECK(!rep.failure.is_null());
  CHECK(rep.failure.contains("reason"));
}

TEST_CASE("scripted replay of both owners") {
  auto s = load_fixture("path3");
  SUBCASE("player 1 script is a list of replies") {
    auto out = solve_ef_game(s, {0}, {1}, RankValue::finite(1));
    auto res = replay_game(s, out.strategy, json::array({1}));
    CHECK(res.winner == 1);
    CHECK(res.transcript.is_array());
    CHECK_THROWS_AS(replay_game(s, out.strategy, json::array({9})),
                    ValidationError);
    CHECK_THROWS_AS(replay_game(s, out.strategy, json::array()),
                    ValidationError);
  }
  SUBCASE("player 2 script is a move list ending at ordinal 0") {
    auto out = solve_ef_game(s, {0}, {2}, RankValue::finite(2));
    json script = json::array();
    script.push_back({{"ordinal", 1}, {"side", "left"}, {"point", 1}});
    script.push_back({{"ordinal", 0}, {"side", "right"}, {"point", 0}});
    auto res = replay_game(s, out.strategy, script);
    CHECK(res.winner == 2);
    json bad = json::array();
    bad.push_back({{"ordinal", 2}, {"side", "left"}, {"point", 1}});
    CHECK_THROWS_AS(replay_game(s, out.strategy, bad), ValidationError);
  }
}

TEST_CASE("distinguishing strategies win for every finite pair") {
  for (const char* name : {"path3", "line"}) {
    auto s = load_fixture(name);
    auto t = BackAndForthTable::compute(s);
    for (int i = 0; i < s.size(); ++i) {
      for (int j = 0; j < s.size(); ++j) {
        auto r = t.rank_pair({i}, {j});
        if (!r.is_finite()) {
          CHECK_THROWS_AS(distinguishing_strategy(t, {i}, {j}),
                          ValidationError);
          continue;
        }
        auto st = distinguishing_strategy(t, {i}, {j});
        CHECK(st.owner == 1);
        CHECK(st.budget == r);
        auto rep = exhaustive_opposition(s, st);
        CHECK(rep.sound);
      }
    }
  }
}

TEST_CASE("lazy positional strategies win without a tree") {
  auto s = load_fixture("square");
  auto st = lazy_p2_strategy(s, {0}, {2});
  CHECK(st.owner == 2);
  CHECK(st.chooser != nullptr);
  CHECK(st.root == nullptr);
  auto p3 = load_fixture("path3");
  CHECK_THROWS_AS(lazy_p2_strategy(p3, {0}, {1}), ValidationError);
}

TEST_CASE("tolerance game on the path endpoints") {
  auto s = load_fixture("path3");
  ToleranceSchedule tight(Rational(1, 4), Rational(1, 2));
  ToleranceSchedule loose(Rational(4), Rational(1, 2));

  CHECK(approx_related(s, {0}, {1}, RankValue::finite(0), tight));
  CHECK(!approx_related(s, {0}, {1}, RankValue::finite(1), tight));
  CHECK(approx_related(s, {0}, {1}, RankValue::finite(1), loose));
  CHECK(approx_related(s, {0}, {2}, RankValue::omega(), tight));

  auto out = solve_approx_game(s, {0}, {1}, RankValue::finite(1), tight);
  CHECK(out.winner == 1);
  auto rep = exhaustive_opposition(s, out.strategy);
  CHECK(rep.sound);

  auto out2 = solve_approx_game(s, {0}, {2}, RankValue::finite(2), tight);
  CHECK(out2.winner == 2);
  auto rep2 = exhaustive_opposition(s, out2.strategy);
  CHECK(rep2.sound);
}

TEST_CASE("looser schedules only help the survivor") {
  auto s = load_fixture("line");
  ToleranceSchedule f(Rational(1, 16), Rational(1, 2));
  ToleranceSchedule g(Rational(1, 4), Rational(1, 2));  // f(j) <= g(j)
  for (int i = 0; i < s.size(); ++i) {
    for (int j = 0; j < s.size(); ++j) {
      for (int budget = 0; budget <= 2; ++budget) {
        if (approx_related(s, {i}, {j}, RankValue::finite(budget), f)) {
          CHECK(approx_related(s, {i}, {j}, RankValue::finite(budget), g));
        }
      }
    }
  }
}

TEST_CASE("rank upper bound from the schedule family") {
  auto s = load_fixture("path3");
  std::vector<ToleranceSchedule> family = {
      ToleranceSchedule(Rational(1, 4), Rational(1, 2)),
      ToleranceSchedule(Rational(1, 16), Rational(1, 2))};
  CHECK(metric_rank_upper(s, {0}, {1}, family) == RankValue::finite(1));
  CHECK(metric_rank_upper(s, {0}, {2}, family) == RankValue::infinity());

  // the pair rank never exceeds the upper bound
  for (const char* name : {"path3", "square", "line"}) {
    auto sp = load_fixture(name);
    auto t = BackAndForthTable::compute(sp);
    for (int i = 0; i < sp.size(); ++i) {
      for (int j = 0; j < sp.size(); ++j) {
        CHECK(t.rank_pair({i}, {j}) <= metric_rank_upper(sp, {i}, {j}, family));
      }
    }
  }
}

TEST_CASE("stabilization budget bounds the winner flip") {
  auto s = load_fixture("path3");
  ToleranceSchedule f(Rational(1, 4), Rational(1, 2));
  int sb = approx_stabilization_budget(s, f);
  CHECK(sb >= 2 * s.size());
  // survival at the stabilization budget persists at larger ones
  if (approx_related(s, {0}, {2}, RankValue::finite(sb), f)) {
    CHECK(approx_related(s, {0}, {2}, RankValue::finite(sb + 1), f));
  }
}

TEST_CASE("strategy certificates round trip through json") {
  auto s = load_fixture("path3");
  for (auto alpha : {RankValue::finite(2), RankValue::omega()}) {
    auto out = solve_ef_game(s, {0}, {2}, alpha);
    auto doc = strategy_to_json(out.strategy);
    auto back = strategy_from_json(doc);
    CHECK(strategy_to_json(back) == doc);
    auto rep = exhaustive_opposition(s, back);
    CHECK(rep.sound);
  }
  ToleranceSchedule f(Rational(1, 4), Rational(1, 2));
  auto out = solve_approx_game(s, {0}, {1}, RankValue::finite(1), f);
  auto doc = strategy_to_json(out.strategy);
  auto back = strategy_from_json(doc);
  CHECK(strategy_to_json(back) == doc);
  CHECK(back.schedule.has_value());
  CHECK(*back.schedule == f);

  CHECK_THROWS_AS(strategy_to_json(lazy_p2_strategy(s, {0}, {2})),
                  ValidationError);
}

TEST_CASE("outcome export carries winner and state count") {
  auto s = load_fixture("path3");
  auto out = solve_ef_game(s, {0}, {1}, RankValue::finite(1));
  auto doc = outcome_to_json(out);
  CHECK(doc["winner"] == 1);
  CHECK(doc["explored_states"] == 1);
  CHECK(doc["strategy"]["owner"] == 1);
}

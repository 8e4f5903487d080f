#include <cstdlib>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "scott/bf_table.hpp"
#include "scott/errors.hpp"
#include "scott/oracle.hpp"
#include "scott/rank_value.hpp"

using namespace scott;
using scott::testing::load_fixture;
using scott::testing::make_space;

TEST_CASE("rank value ordering and parsing") {
  CHECK(RankValue::finite(0) < RankValue::finite(1));
  CHECK(RankValue::finite(100) < RankValue::omega());
  CHECK(RankValue::omega() < RankValue::infinity());
  CHECK(RankValue::finite(2).successor() == RankValue::finite(3));
  CHECK(RankValue::parse("17") == RankValue::finite(17));
  CHECK(RankValue::parse("omega") == RankValue::omega());
  CHECK(RankValue::parse("inf") == RankValue::infinity());
  CHECK(RankValue::infinity().to_string() == "inf");
  CHECK_THROWS_AS(RankValue::parse("-1"), ValidationError);
  CHECK_THROWS_AS(RankValue::parse("x"), ValidationError);
  CHECK_THROWS_AS(RankValue::omega().successor(), ValidationError);
  CHECK_THROWS_AS(RankValue::infinity().value(), ValidationError);
}

TEST_CASE("pair ranks on the three-point path") {
  auto s = load_fixture("path3");
  auto t = BackAndForthTable::compute(s);
  CHECK(t.stabilization_level() == 1);
  CHECK(t.rank_pair({0}, {1}) == RankValue::finite(1));
  CHECK(t.rank_pair({0}, {2}) == RankValue::infinity());
  CHECK(t.rank_pair({1}, {1}) == RankValue::infinity());
  CHECK(t.rank_pair({0, 1}, {2, 1}) == RankValue::infinity());
  // (0,1) and (1,0) agree at level 0 but only the left side has a point
  // at distance 2 from the second coordinate
  CHECK(t.rank_pair({0, 1}, {1, 0}) == RankValue::finite(1));
  CHECK(t.rank_pair({}, {}) == RankValue::infinity());
}

TEST_CASE("pair ranks on the square and the rigid line") {
  auto sq = load_fixture("square");
  auto tq = BackAndForthTable::compute(sq);
  CHECK(tq.stabilization_level() == 0);
  for (int i = 1; i < 4; ++i) {
    CHECK(tq.rank_pair({0}, {i}) == RankValue::infinity());
  }
  CHECK(tq.rank_pair({0, 1}, {0, 2}) == RankValue::finite(0));

  auto ln = load_fixture("line");
  auto tl = BackAndForthTable::compute(ln);
  CHECK(tl.stabilization_level() == 1);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i == j) continue;
      CHECK(tl.rank_pair({i}, {j}) == RankValue::finite(1));
    }
  }
}

TEST_CASE("duplicate tuples collapse onto their distinct core") {
  auto s = load_fixture("path3");
  auto t = BackAndForthTable::compute(s);
  CHECK(t.rank_pair({0, 0}, {2, 2}) == t.rank_pair({0}, {2}));
  CHECK(t.rank_pair({0, 1, 0}, {2, 1, 2}) == t.rank_pair({0, 1}, {2, 1}));
  // mismatched repeat patterns fail at level 0
  CHECK(t.rank_pair({0, 0}, {0, 1}) == RankValue::finite(0));
  CHECK_THROWS_AS(t.rank_pair({0}, {0, 1}), ValidationError);
}

TEST_CASE("levels form equivalence relations on distinct tuples") {
  for (const char* name : {"path3", "line"}) {
    auto s = load_fixture(name);
    auto t = BackAndForthTable::compute(s);
    const int n = s.size();
    auto above = [&](const PointTuple& a, const PointTuple& b, int lvl) {
      return t.rank_pair(a, b) > RankValue::finite(lvl);
    };
    for (int lvl = 0; lvl <= t.stabilization_level(); ++lvl) {
      for (int i = 0; i < n; ++i) {
        CHECK(above({i}, {i}, lvl));
        for (int j = 0; j < n; ++j) {
          CHECK(above({i}, {j}, lvl) == above({j}, {i}, lvl));
          for (int k = 0; k < n; ++k) {
            if (above({i}, {j}, lvl) && above({j}, {k}, lvl)) {
              CHECK(above({i}, {k}, lvl));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("space rank certificates match the frozen fixtures") {
  auto p3 = scott_rank_space(load_fixture("path3"));
  CHECK(p3.rank == RankValue::finite(2));
  CHECK(p3.argmax_a == PointTuple{0});
  CHECK(p3.argmax_b == PointTuple{1});
  CHECK(p3.pair_rank == RankValue::finite(1));
  CHECK(p3.stabilization == 1);

  auto sq = scott_rank_space(load_fixture("square"));
  CHECK(sq.rank == RankValue::finite(1));
  CHECK(sq.argmax_a == PointTuple{0, 1});
  CHECK(sq.argmax_b == PointTuple{0, 2});
  CHECK(sq.pair_rank == RankValue::finite(0));
  CHECK(sq.stabilization == 0);

  auto ln = scott_rank_space(load_fixture("line"));
  CHECK(ln.rank == RankValue::finite(2));
  CHECK(ln.pair_rank == RankValue::finite(1));

  auto single = scott_rank_space(
      MetricSpace({"only"}, {{Rational(0)}}));
  CHECK(single.rank == RankValue::finite(1));
  CHECK(single.argmax_a.empty());
  CHECK(single.pair_rank == RankValue::finite(0));
}

TEST_CASE("ranks are invariant under relabeling") {
  auto s = load_fixture("line");
  std::vector<int> perm = {3, 0, 2, 1};
  auto r = s.relabeled(perm);
  auto ts = BackAndForthTable::compute(s);
  auto tr = BackAndForthTable::compute(r);
  CHECK(ts.stabilization_level() == tr.stabilization_level());
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      CHECK(ts.rank_pair({i}, {j}) == tr.rank_pair({perm[i]}, {perm[j]}));
      for (int k = 0; k < 4; ++k) {
        for (int l = 0; l < 4; ++l) {
          if (i == k || j == l) continue;
          CHECK(ts.rank_pair({i, k}, {j, l}) ==
                tr.rank_pair({perm[i], perm[k]}, {perm[j], perm[l]}));
        }
      }
    }
  }
  CHECK(scott_rank_space(s).rank == scott_rank_space(r).rank);
}

TEST_CASE("table export shape") {
  auto s = load_fixture("path3");
  auto t = BackAndForthTable::compute(s, 2);
  auto doc = t.to_json(1);
  CHECK(doc["p"] == 1);
  CHECK(doc["stabilization"] == 1);
  CHECK(doc["pairs"].size() == 9);
  bool saw = false;
  for (const auto& e : doc["pairs"]) {
    if (e["a"] == nlohmann::json::array({0}) &&
        e["b"] == nlohmann::json::array({2})) {
      CHECK(e["rank"] == "inf");
      saw = true;
    }
  }
  CHECK(saw);
  CHECK(t.to_json(3)["pairs"].size() == 36);
  CHECK_THROWS_AS(t.to_json(4), ValidationError);
  CHECK_THROWS_AS(t.to_json(0), ValidationError);
}

TEST_CASE("table agrees with the brute-force oracle") {
  auto spaces = std::vector<MetricSpace>{
      load_fixture("path3"), load_fixture("square"), load_fixture("line"),
      make_space({{"0", "1", "1", "2"},
                  {"1", "0", "2", "1"},
                  {"1", "2", "0", "1"},
                  {"2", "1", "1", "0"}})};
  for (const auto& s : spaces) {
    auto t = BackAndForthTable::compute(s);
    const int n = s.size();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        CHECK(t.rank_pair({i}, {j}) ==
              oracle::brute_scott_rank_pair(s, {i}, {j}));
        for (int k = 0; k < n; ++k) {
          for (int l = 0; l < n; ++l) {
            CHECK(t.rank_pair({i, k}, {j, l}) ==
                  oracle::brute_scott_rank_pair(s, {i, k}, {j, l}));
          }
        }
      }
    }
  }
}

TEST_CASE("oracle autoisometries on the fixtures") {
  auto p3 = oracle::enumerate_autoisometries(load_fixture("path3"));
  REQUIRE(p3.size() == 2);
  CHECK(p3[0] == std::vector<int>{0, 1, 2});
  CHECK(p3[1] == std::vector<int>{2, 1, 0});

  CHECK(oracle::enumerate_autoisometries(load_fixture("square")).size() == 8);
  CHECK(oracle::enumerate_autoisometries(load_fixture("line")).size() == 1);

  auto s = load_fixture("path3");
  CHECK(oracle::exists_autoisometry_mapping(s, {0}, {2}));
  CHECK(!oracle::exists_autoisometry_mapping(s, {0}, {1}));
  CHECK(oracle::exists_autoisometry_mapping(s, {0, 1}, {2, 1}));
}

TEST_CASE("oracle caps are hard errors") {
  std::vector<std::vector<Rational>> d(9, std::vector<Rational>(9));
  std::vector<std::string> labels;
  for (int i = 0; i < 9; ++i) {
    labels.push_back("q" + std::to_string(i));
    for (int j = 0; j < 9; ++j) {
      d[i][j] = i == j ? Rational(0) : Rational(std::abs(i - j));
    }
  }
  MetricSpace big(labels, d);
  CHECK_THROWS_AS(oracle::enumerate_autoisometries(big), ValidationError);
  CHECK_THROWS_AS(oracle::brute_scott_rank_pair(big, {0}, {1}),
                  ValidationError);
  auto s = load_fixture("line");
  CHECK_THROWS_AS(oracle::brute_scott_rank_pair(s, {0, 1, 2, 3}, {0, 1, 2, 3}),
                  ValidationError);
}

TEST_CASE("table size cap") {
  std::vector<std::vector<Rational>> d(8, std::vector<Rational>(8));
  std::vector<std::string> labels;
  for (int i = 0; i < 8; ++i) {
    labels.push_back("q" + std::to_string(i));
    for (int j = 0; j < 8; ++j) {
      d[i][j] = i == j ? Rational(0) : Rational(std::abs(i - j));
    }
  }
  MetricSpace big(labels, d);
  CHECK_THROWS_AS(BackAndForthTable::compute(big), ValidationError);
}

#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "scott/bf_table.hpp"
#include "scott/certificates.hpp"
#include "scott/ef_game.hpp"
#include "scott/errors.hpp"
#include "scott/ksystem.hpp"
#include "scott/net_family.hpp"

using namespace scott;
using scott::testing::load_fixture;
using scott::testing::make_space;

namespace {

KSystem identity_system(const NetFamily& nets, int depth, PointTuple a) {
  KSystem sys;
  sys.depth = depth;
  sys.a = a;
  sys.b = a;
  for (int n = 0; n <= depth; ++n) {
    std::vector<std::pair<int, int>> level;
    for (int z : nets.net(n)) level.push_back({z, z});
    sys.phi.push_back(std::move(level));
  }
  return sys;
}

}  // namespace

TEST_CASE("covering radius schedule") {
  CHECK(covering_radius(0) == Rational(2));
  CHECK(covering_radius(1) == Rational(1));
  CHECK(covering_radius(3) == Rational(1, 4));
}

TEST_CASE("the identity is a system at every depth") {
  for (const char* name : {"path3", "square", "line"}) {
    auto s = load_fixture(name);
    auto nets = build_net_family(s, 4);
    for (int k = 0; k <= 4; ++k) {
      auto sys = identity_system(nets, k, {0});
      CHECK(verify_k_system(s, nets, sys).empty());
    }
  }
}

TEST_CASE("violations name the failing clause") {
  auto s = load_fixture("path3");
  auto nets = build_net_family(s, 3);

  SUBCASE("anchor clause") {
    // identity map but anchors (0) -> (1): |d(0,z) - d(1,z)| can reach 1
    auto sys = identity_system(nets, 2, {0});
    sys.b = {1};
    auto rep = verify_k_system(s, nets, sys);
    REQUIRE(!rep.empty());
    bool clause2 = false;
    for (const auto& v : rep) {
      if (v.clause == 2) clause2 = true;
    }
    CHECK(clause2);
  }
  SUBCASE("covering clause") {
    // map everything to point 0: image no longer covers at small radius
    auto sys = identity_system(nets, 3, {0});
    for (auto& level : sys.phi) {
      for (auto& e : level) e.second = 0;
    }
    auto rep = verify_k_system(s, nets, sys);
    REQUIRE(!rep.empty());
    bool clause4 = false;
    for (const auto& v : rep) {
      if (v.clause == 4) clause4 = true;
    }
    CHECK(clause4);
  }
  SUBCASE("shape mismatch throws") {
    auto sys = identity_system(nets, 2, {0});
    sys.phi[1].pop_back();
    CHECK_THROWS_AS(verify_k_system(s, nets, sys), ValidationError);
  }
}

TEST_CASE("search finds systems exactly for infinite-rank pairs") {
  auto s = load_fixture("path3");
  auto nets = build_net_family(s, 3);

  auto hit = search_k_system(s, {0}, {2}, nets, 3);
  CHECK(hit.found);
  CHECK(hit.max_depth_reached == 3);
  CHECK(verify_k_system(s, nets, hit.system).empty());
  CHECK(hit.nodes > 0);

  auto miss = search_k_system(s, {0}, {1}, nets, 3);
  CHECK(!miss.found);
  CHECK(miss.max_depth_reached == -1);

  auto sq = load_fixture("square");
  auto sq_nets = build_net_family(sq, 3);
  for (int k = 0; k <= 3; ++k) {
    CHECK(search_k_system(sq, {0}, {1}, sq_nets, k).found);
  }
}

TEST_CASE("frozen search counters") {
  auto s = load_fixture("path3");
  auto nets = build_net_family(s, 3);
  auto miss = search_k_system(s, {0}, {1}, nets, 3);
  CHECK(miss.nodes == 12);
}

TEST_CASE("a winning strategy projects onto a system at every depth") {
  auto s = load_fixture("path3");
  auto nets = build_net_family(s, 3);
  auto st = lazy_p2_strategy(s, {0}, {2});
  for (int k = 0; k <= 3; ++k) {
    auto sys = strategy_to_k_system(s, {0}, {2}, nets, st, k);
    CHECK(sys.depth == k);
    CHECK(verify_k_system(s, nets, sys).empty());
  }
}

TEST_CASE("systems at snap depth yield certified isometries") {
  auto s = load_fixture("path3");
  auto nets = build_net_family(s, snap_depth(s));
  auto st = lazy_p2_strategy(s, {0}, {2});
  auto sys = strategy_to_k_system(s, {0}, {2}, nets, st, snap_depth(s));
  auto iso = system_to_isometry(s, {0}, {2}, nets, sys);
  CHECK(iso.map == std::vector<int>{2, 1, 0});
  CHECK(iso.distance_preserving);
  CHECK(iso.bijective);
  CHECK(iso.carries_pair);
}

TEST_CASE("streaming extraction reads off a total isometry") {
  auto s = load_fixture("path3");
  auto iso = strategy_stream_isometry(s, {0}, {2},
                                      lazy_p2_strategy(s, {0}, {2}));
  CHECK(iso.map == std::vector<int>{2, 1, 0});
  CHECK(iso.distance_preserving);
  CHECK(iso.bijective);
  CHECK(iso.carries_pair);

  auto sq = load_fixture("square");
  auto iq = strategy_stream_isometry(sq, {0}, {1},
                                     lazy_p2_strategy(sq, {0}, {1}));
  CHECK(iq.map == std::vector<int>{1, 0, 3, 2});
  CHECK(iq.distance_preserving);
  CHECK(iq.bijective);
  CHECK(iq.carries_pair);
}

TEST_CASE("extraction rejects strategies with too little budget") {
  auto s = load_fixture("path3");
  auto out = solve_ef_game(s, {0}, {2}, RankValue::finite(1));
  REQUIRE(out.winner == 2);
  CHECK_THROWS_AS(strategy_stream_isometry(s, {0}, {2}, out.strategy),
                  ValidationError);
  auto nets = build_net_family(s, 3);
  CHECK_THROWS_AS(strategy_to_k_system(s, {0}, {2}, nets, out.strategy, 3),
                  ValidationError);
}

TEST_CASE("k-system json round trip") {
  auto s = load_fixture("square");
  auto nets = build_net_family(s, 2);
  auto res = search_k_system(s, {0}, {2}, nets, 2);
  REQUIRE(res.found);
  auto doc = ksystem_to_json(res.system, nets);
  auto back = ksystem_from_json(doc);
  CHECK(back.depth == res.system.depth);
  CHECK(back.phi == res.system.phi);
  CHECK(back.a == res.system.a);
  CHECK(back.b == res.system.b);
  CHECK(verify_k_system(s, nets, back).empty());

  auto sr = search_result_to_json(res, nets);
  CHECK(sr["found"] == true);
  CHECK(sr["max_depth_reached"] == 2);
}

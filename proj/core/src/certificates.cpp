#include "scott/certificates.hpp"

#include "scott/errors.hpp"
#include "scott/json_io.hpp"

namespace scott {
namespace {

std::string side_name(Side s) { return s == Side::Left ? "left" : "right"; }

Side parse_side(const nlohmann::json& j) {
  const std::string s = j.get<std::string>();
  if (s == "left") return Side::Left;
  if (s == "right") return Side::Right;
  throw ValidationError("side must be \"left\" or \"right\"");
}

nlohmann::json node_to_json(const StrategyNode& node, int owner) {
  if (owner == 2) {
    nlohmann::json branches = nlohmann::json::array();
    for (const auto& br : node.branches) {
      branches.push_back(
          {{"ordinal", br.p1.ordinal},
           {"side", side_name(br.p1.side)},
           {"point", br.p1.point},
           {"reply", br.reply},
           {"child", br.child ? node_to_json(*br.child, owner)
                              : nlohmann::json(nullptr)}});
    }
    return {{"branches", branches}};
  }
  if (!node.move) throw InternalError("Player-1 node without a move");
  nlohmann::json replies = nlohmann::json::array();
  for (const auto& e : node.replies) {
    replies.push_back({{"reply", e.reply},
                       {"child", e.child ? node_to_json(*e.child, owner)
                                         : nlohmann::json(nullptr)}});
  }
  return {{"move",
           {{"ordinal", node.move->ordinal},
            {"side", side_name(node.move->side)},
            {"point", node.move->point}}},
          {"replies", replies}};
}

std::unique_ptr<StrategyNode> node_from_json(const nlohmann::json& j,
                                             int owner) {
  auto node = std::make_unique<StrategyNode>();
  if (owner == 2) {
    for (const auto& br : j.at("branches")) {
      StrategyNode::Branch branch{
          Move{br.at("ordinal").get<int>(), parse_side(br.at("side")),
               br.at("point").get<int>()},
          br.at("reply").get<int>(), nullptr};
      if (!br.at("child").is_null())
        branch.child = node_from_json(br.at("child"), owner);
      node->branches.push_back(std::move(branch));
    }
    return node;
  }
  const auto& mv = j.at("move");
  node->move = Move{mv.at("ordinal").get<int>(), parse_side(mv.at("side")),
                    mv.at("point").get<int>()};
  for (const auto& e : j.at("replies")) {
    StrategyNode::ReplyEdge edge{e.at("reply").get<int>(), nullptr};
    if (!e.at("child").is_null())
      edge.child = node_from_json(e.at("child"), owner);
    node->replies.push_back(std::move(edge));
  }
  return node;
}

}  // namespace

nlohmann::json strategy_to_json(const Strategy& st) {
  if (st.chooser)
    throw ValidationError("lazy positional strategies cannot be serialized");
  nlohmann::json doc{
      {"game", st.kind == GameKind::Ef ? "ef" : "approx"},
      {"owner", st.owner},
      {"pair", {{"a", st.a}, {"b", st.b}}},
      {"budget", st.budget.to_string()},
      {"resolved_budget", st.resolved_budget},
      {"tree", st.root ? node_to_json(*st.root, st.owner)
                       : nlohmann::json(nullptr)}};
  if (st.schedule) {
    doc["schedule"] = {{"base", st.schedule->base().to_string()},
                       {"ratio", st.schedule->ratio().to_string()}};
  }
  if (st.atomic_witness) {
    doc["atomic_witness"] = {st.atomic_witness->first,
                             st.atomic_witness->second};
  }
  return doc;
}

Strategy strategy_from_json(const nlohmann::json& doc) {
  Strategy st;
  const std::string game = doc.at("game").get<std::string>();
  if (game == "ef")
    st.kind = GameKind::Ef;
  else if (game == "approx")
    st.kind = GameKind::Approx;
  else
    throw ValidationError("game must be \"ef\" or \"approx\"");
  st.owner = doc.at("owner").get<int>();
  if (st.owner != 1 && st.owner != 2)
    throw ValidationError("owner must be 1 or 2");
  st.a = doc.at("pair").at("a").get<PointTuple>();
  st.b = doc.at("pair").at("b").get<PointTuple>();
  st.budget = RankValue::parse(doc.at("budget").get<std::string>());
  st.resolved_budget = doc.at("resolved_budget").get<int>();
  if (doc.contains("schedule")) {
    st.schedule = ToleranceSchedule(
        Rational::parse(doc.at("schedule").at("base").get<std::string>()),
        Rational::parse(doc.at("schedule").at("ratio").get<std::string>()));
  }
  if (st.kind == GameKind::Approx && !st.schedule)
    throw ValidationError("approx strategy requires a schedule");
  if (doc.contains("atomic_witness")) {
    const auto& w = doc.at("atomic_witness");
    st.atomic_witness = {w.at(0).get<int>(), w.at(1).get<int>()};
  }
  if (!doc.at("tree").is_null())
    st.root = std::shared_ptr<StrategyNode>(
        node_from_json(doc.at("tree"), st.owner).release());
  return st;
}

nlohmann::json outcome_to_json(const GameOutcome& out) {
  return {{"winner", out.winner},
          {"explored_states", out.explored_states},
          {"strategy", strategy_to_json(out.strategy)}};
}

nlohmann::json ksystem_to_json(const KSystem& system, const NetFamily& nets) {
  nlohmann::json phi = nlohmann::json::array();
  for (const auto& level : system.phi) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [z, w] : level) entries.push_back({z, w});
    phi.push_back(entries);
  }
  return {{"depth", system.depth},
          {"phi", phi},
          {"nets", net_family_to_json(nets)},
          {"pair", {{"a", system.a}, {"b", system.b}}}};
}

KSystem ksystem_from_json(const nlohmann::json& doc) {
  KSystem system;
  system.depth = doc.at("depth").get<int>();
  for (const auto& level : doc.at("phi")) {
    std::vector<std::pair<int, int>> entries;
    for (const auto& e : level)
      entries.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    system.phi.push_back(std::move(entries));
  }
  system.a = doc.at("pair").at("a").get<PointTuple>();
  system.b = doc.at("pair").at("b").get<PointTuple>();
  return system;
}

nlohmann::json ksystem_violations_to_json(
    const std::vector<KSystemViolation>& report) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& v : report) {
    out.push_back({{"clause", v.clause},
                   {"level_m", v.level_m},
                   {"level_n", v.level_n},
                   {"y", v.y},
                   {"z", v.z},
                   {"lhs", v.lhs.to_string()},
                   {"rhs", v.rhs.to_string()},
                   {"message", v.message}});
  }
  return out;
}

nlohmann::json search_result_to_json(const KSystemSearchResult& result,
                                     const NetFamily& nets) {
  nlohmann::json doc{{"found", result.found},
                     {"max_depth_reached", result.max_depth_reached},
                     {"nodes", result.nodes}};
  if (result.found) doc["system"] = ksystem_to_json(result.system, nets);
  return doc;
}

nlohmann::json isometry_to_json(const IsometryMap& iso) {
  return {{"map", iso.map},
          {"distance_preserving", iso.distance_preserving},
          {"bijective", iso.bijective},
          {"carries_pair", iso.carries_pair}};
}

nlohmann::json space_rank_to_json(const SpaceRankCertificate& cert) {
  return {{"rank", cert.rank.to_string()},
          {"argmax", {{"a", cert.argmax_a}, {"b", cert.argmax_b}}},
          {"pair_rank", cert.pair_rank.to_string()},
          {"stabilization", cert.stabilization}};
}

}  // namespace scott

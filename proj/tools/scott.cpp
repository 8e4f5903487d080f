// Command-line surface: every library operation behind a subcommand,
// JSON on stdout, diagnostics on stderr. Exit 0 on success, 2 on bad
// input or a failed precondition, 3 on a broken internal invariant.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "scott/approx_game.hpp"
#include "scott/bf_table.hpp"
#include "scott/certificates.hpp"
#include "scott/ef_game.hpp"
#include "scott/errors.hpp"
#include "scott/json_io.hpp"
#include "scott/ksystem.hpp"
#include "scott/net_family.hpp"
#include "scott/oracle.hpp"

namespace {

using nlohmann::json;
using namespace scott;

PointTuple parse_tuple(const std::string& text) {
  PointTuple out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t pos = 0;
      out.push_back(std::stoi(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ValidationError("bad tuple entry: '" + item + "'");
    }
  }
  return out;
}

ToleranceSchedule parse_schedule(const std::string& text) {
  const std::string prefix = "geometric:";
  if (text.rfind(prefix, 0) != 0)
    throw ValidationError("schedule must look like geometric:q,r");
  const std::string body = text.substr(prefix.size());
  const auto comma = body.find(',');
  if (comma == std::string::npos)
    throw ValidationError("schedule must look like geometric:q,r");
  return ToleranceSchedule(Rational::parse(body.substr(0, comma)),
                           Rational::parse(body.substr(comma + 1)));
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw ValidationError("malformed JSON in " + path + ": " + e.what());
  }
  return doc;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

void maybe_write(const std::string& path, const json& doc) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write file: " + path);
  out << doc.dump(2) << "\n";
}

int resolve_jobs(int jobs) {
  if (jobs == 0) {
    if (const char* env = std::getenv("SCOTT_JOBS")) {
      try {
        jobs = std::stoi(env);
      } catch (const std::exception&) {
        throw ValidationError("SCOTT_JOBS must be an integer");
      }
    } else {
      jobs = 1;
    }
  }
  if (jobs < 1) throw ValidationError("--jobs must be >= 1");
  // Solvers are deterministic fixed-point loops; extra workers cannot
  // change any output, so a single worker is always used.
  return jobs;
}

struct Args {
  std::string space_path, a_text, b_text, alpha_text = "omega";
  std::vector<std::string> schedules;
  std::string cert_path, emit_path, script_text;
  int depth = -1;
  int jobs = 0;
  int budget_cap = 5;
  int table_p = 0;
};

std::vector<ToleranceSchedule> schedule_family(
    const std::vector<std::string>& texts) {
  std::vector<ToleranceSchedule> family;
  for (const auto& t : texts) family.push_back(parse_schedule(t));
  if (family.empty()) {
    family.push_back(
        ToleranceSchedule(Rational(1, 4), Rational(1, 2)));
    family.push_back(
        ToleranceSchedule(Rational(1, 16), Rational(1, 2)));
  }
  return family;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact back-and-forth analysis of finite rational metric "
               "spaces: ranks, games, and approximation systems"};
  app.require_subcommand(1);
  Args args;

  auto add_common = [&](CLI::App* cmd, bool need_pair) {
    cmd->add_option("--space", args.space_path, "metric space JSON file")
        ->required();
    if (need_pair) {
      cmd->add_option("--a", args.a_text, "left tuple, comma-separated");
      cmd->add_option("--b", args.b_text, "right tuple, comma-separated");
    }
    cmd->add_option("--jobs", args.jobs, "worker count (output-invariant)");
    return cmd;
  };

  auto* validate = add_common(app.add_subcommand(
      "validate", "check the metric axioms and report violations"), false);

  auto* rank = add_common(app.add_subcommand(
      "rank", "rank of a tuple pair plus its game-derived upper bound"), true);
  rank->add_option("--f", args.schedules,
                   "tolerance schedule geometric:q,r (repeatable)");

  auto* space_rank = add_common(app.add_subcommand(
      "space-rank", "rank of the whole space with an argmax certificate"),
      false);
  space_rank->add_option("--table", args.table_p,
                         "also export the relation table at this length");

  auto* ef = app.add_subcommand("ef", "exact game solving and checking");
  ef->require_subcommand(1);
  auto* ef_solve = add_common(
      ef->add_subcommand("solve", "solve at a budget"), true);
  ef_solve->add_option("--alpha", args.alpha_text, "budget: N or omega");
  ef_solve->add_option("--emit", args.emit_path, "write the certificate here");
  auto* ef_check = add_common(
      ef->add_subcommand("check", "replay a certificate"), false);
  ef_check->add_option("--cert", args.cert_path, "certificate file")
      ->required();
  ef_check->add_option("--script", args.script_text,
                       "opponent script JSON; omit for exhaustive opposition");

  auto* game = app.add_subcommand("game", "tolerance game solving");
  game->require_subcommand(1);
  auto* game_solve = add_common(
      game->add_subcommand("solve", "solve at a budget"), true);
  game_solve->add_option("--alpha", args.alpha_text, "budget: N or omega");
  game_solve
      ->add_option("--f", args.schedules, "tolerance schedule geometric:q,r")
      ->required();
  game_solve->add_option("--emit", args.emit_path,
                         "write the certificate here");
  auto* game_check = add_common(
      game->add_subcommand("check", "replay a certificate"), false);
  game_check->add_option("--cert", args.cert_path, "certificate file")
      ->required();
  game_check->add_option("--script", args.script_text,
                         "opponent script JSON; omit for exhaustive opposition");

  auto* cas = app.add_subcommand(
      "cas", "approximation systems: search, verify, extract");
  cas->require_subcommand(1);
  auto* cas_search = add_common(
      cas->add_subcommand("search", "find the least system of a depth"), true);
  cas_search->add_option("--depth", args.depth, "system depth")->required();
  auto* cas_verify = add_common(
      cas->add_subcommand("verify", "check a system certificate"), false);
  cas_verify->add_option("--cert", args.cert_path, "system file")->required();
  auto* cas_extract = add_common(
      cas->add_subcommand(
          "extract", "system and exact self-isometry from a winning strategy"),
      true);
  cas_extract->add_option("--depth", args.depth,
                          "system depth (default: snap depth)");
  auto* cas_stream = add_common(
      cas->add_subcommand(
          "stream", "self-isometry by streaming every point through a "
                    "winning strategy"),
      true);

  auto* autos = add_common(app.add_subcommand(
      "auto", "enumerate all distance-preserving permutations"), false);

  auto* oracle_cmd = app.add_subcommand(
      "oracle", "independent brute-force reference answers");
  oracle_cmd->require_subcommand(1);
  auto* oracle_rank = add_common(
      oracle_cmd->add_subcommand("rank", "naive recursive pair rank"), true);
  oracle_rank->add_option("--budget-cap", args.budget_cap,
                          "deepest level to evaluate");
  auto* oracle_auto = add_common(
      oracle_cmd->add_subcommand("auto", "brute-force permutation scan"),
      false);
  auto* oracle_mapping = add_common(
      oracle_cmd->add_subcommand("mapping",
                                 "does some self-isometry carry a to b"),
      true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  resolve_jobs(args.jobs);

  const PointTuple a = parse_tuple(args.a_text);
  const PointTuple b = parse_tuple(args.b_text);

  if (validate->parsed()) {
    const MetricSpace space =
        parse_metric_space_raw(read_json_file(args.space_path));
    const auto report = validate_metric(space);
    emit({{"valid", report.empty()}, {"violations", violations_to_json(report)}});
    return report.empty() ? 0 : 2;
  }

  const MetricSpace space = load_metric_space(args.space_path);

  if (rank->parsed()) {
    const RankValue sr = scott_rank_pair(space, a, b);
    const RankValue upper =
        metric_rank_upper(space, a, b, schedule_family(args.schedules));
    emit({{"sr", sr.to_string()},
          {"r_upper", upper.to_string()},
          {"sr_le_r", sr <= upper}});
    return 0;
  }
  if (space_rank->parsed()) {
    const auto table = BackAndForthTable::compute(space);
    json doc = space_rank_to_json(scott_rank_space(table));
    if (args.table_p > 0) doc["table"] = table.to_json(args.table_p);
    emit(doc);
    return 0;
  }
  if (ef_solve->parsed()) {
    const GameOutcome out =
        solve_ef_game(space, a, b, RankValue::parse(args.alpha_text));
    const json doc = outcome_to_json(out);
    maybe_write(args.emit_path, doc.at("strategy"));
    emit(doc);
    return 0;
  }
  if (game_solve->parsed()) {
    const GameOutcome out =
        solve_approx_game(space, a, b, RankValue::parse(args.alpha_text),
                          parse_schedule(args.schedules.front()));
    const json doc = outcome_to_json(out);
    maybe_write(args.emit_path, doc.at("strategy"));
    emit(doc);
    return 0;
  }
  if (ef_check->parsed() || game_check->parsed()) {
    const Strategy st = strategy_from_json(read_json_file(args.cert_path));
    if (!args.script_text.empty()) {
      json script;
      try {
        script = json::parse(args.script_text);
      } catch (const json::parse_error& e) {
        throw ValidationError(std::string("malformed script: ") + e.what());
      }
      const ReplayResult res = replay_game(space, st, script);
      emit({{"winner", res.winner}, {"transcript", res.transcript}});
      return 0;
    }
    const OppositionReport rep = exhaustive_opposition(space, st);
    emit({{"sound", rep.sound},
          {"lines", rep.lines},
          {"failure", rep.failure}});
    return 0;
  }
  if (cas_search->parsed()) {
    const NetFamily nets = build_net_family(space, args.depth);
    emit(search_result_to_json(search_k_system(space, a, b, nets, args.depth),
                               nets));
    return 0;
  }
  if (cas_verify->parsed()) {
    const KSystem system = ksystem_from_json(read_json_file(args.cert_path));
    const NetFamily nets = build_net_family(space, system.depth);
    const auto report = verify_k_system(space, nets, system);
    emit({{"ok", report.empty()},
          {"violations", ksystem_violations_to_json(report)}});
    return 0;
  }
  if (cas_extract->parsed()) {
    const int k = args.depth >= 0 ? args.depth : snap_depth(space);
    const int target = std::max(k, snap_depth(space));
    const NetFamily nets = build_net_family(space, target);
    const Strategy st = lazy_p2_strategy(space, a, b);
    const KSystem system = strategy_to_k_system(space, a, b, nets, st, k);
    json doc{{"system", ksystem_to_json(system, nets)}};
    if (k >= snap_depth(space) &&
        static_cast<int>(nets.net(k).size()) == space.size()) {
      doc["isometry"] =
          isometry_to_json(system_to_isometry(space, a, b, nets, system));
    }
    emit(doc);
    return 0;
  }
  if (cas_stream->parsed()) {
    const Strategy st = lazy_p2_strategy(space, a, b);
    emit(isometry_to_json(strategy_stream_isometry(space, a, b, st)));
    return 0;
  }
  if (autos->parsed()) {
    const auto perms = oracle::enumerate_autoisometries(space);
    emit({{"autoisometries", perms}, {"count", perms.size()}});
    return 0;
  }
  if (oracle_rank->parsed()) {
    emit({{"rank",
           oracle::brute_scott_rank_pair(space, a, b, args.budget_cap)
               .to_string()}});
    return 0;
  }
  if (oracle_auto->parsed()) {
    const auto perms = oracle::enumerate_autoisometries(space);
    emit({{"autoisometries", perms}, {"count", perms.size()}});
    return 0;
  }
  if (oracle_mapping->parsed()) {
    emit({{"mapped", oracle::exists_autoisometry_mapping(space, a, b)}});
    return 0;
  }
  throw InternalError("unhandled subcommand");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const scott::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const scott::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}

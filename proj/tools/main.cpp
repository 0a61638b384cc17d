#include <CLI11.hpp>

#include <iostream>

#include "commands.hpp"
#include "hypercone/errors.hpp"

using namespace hypercone;
using namespace hypercone::cli;

int main(int argc, char** argv) {
  CLI::App app{"hypercone: hypergraph entropies, contraction maps and states"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  std::uint64_t budget = 0;
  app.add_flag("--json", globals.json, "Emit one JSON document (schema hypercone/1)");
  app.add_flag("--float", globals.as_float, "Render numbers as decimals instead of exact rationals");
  app.add_flag("--no-timing", globals.no_timing, "Leave wall-clock times out of the output");
  app.add_option("--threads", globals.threads, "Worker threads (default: HYPERCONE_THREADS, then all cores)")
      ->check(CLI::NonNegativeNumber);
  auto* budget_opt = app.add_option("--budget", budget, "Search-node budget per rank or per search");
  app.add_option("--seed", globals.seed, "Seed for randomized checks");

  std::string command;
  std::function<int(Run&)> action;
  auto verb = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->callback([&command, name] { command = name; });
    return sub;
  };

  std::string graph;
  std::optional<std::string> subsystem;
  bool cuts = false;
  auto* entropy = verb("entropy", "Min-cut entropies of a hypergraph");
  entropy->add_option("graph", graph, "Graph JSON file or catalog ray")->required();
  entropy->add_option("--subsystem", subsystem, "Single subsystem, e.g. AB");
  entropy->add_flag("--cuts", cuts, "Also print a witnessing min-cut");

  CheckArgs check;
  auto* check_cmd = verb("check-ineq", "Evaluate an inequality on hypergraph entropy vectors");
  check_cmd->add_option("inequality", check.inequality, "Built-in name, inequality file or expression")->required();
  check_cmd->add_option("graphs", check.graphs, "Graph files or catalog rays");
  check_cmd->add_option("--n", check.n, "Party count for expressions");
  check_cmd->add_flag("--instances", check.instances, "Check every instance lifted to the graph's party count");
  check_cmd->add_option("--random", check.random, "Also check this many random hypergraphs (see --seed)");

  VerifyArgs verify;
  auto* verify_cmd = verb("verify-map", "Verify a contraction map rank by rank");
  verify_cmd->add_option("inequality", verify.inequality, "Built-in name, inequality file or expression")->required();
  verify_cmd->add_option("map", verify.map_file, "Map JSON file {L, Rp, f10}");
  verify_cmd->add_flag("--builtin", verify.builtin, "Use the built-in map");
  verify_cmd->add_option("--kmax", verify.k_max, "Highest rank to check (default: published checked k, else beta_T)");
  verify_cmd->add_flag("--no-prune", verify.no_prune, "Disable both prunes");
  verify_cmd->add_flag("--keep-going", verify.keep_going, "Continue past the first failing rank");
  verify_cmd->add_option("--n", verify.n, "Party count for expressions");

  SearchArgs search;
  auto* search_cmd = verb("search-map", "Search for a contraction map");
  search_cmd->add_option("inequality", search.inequality, "Built-in name, inequality file or expression")->required();
  search_cmd->add_option("--k", search.k, "Target rank")->capture_default_str();
  search_cmd->add_option("--out", search.out, "Write the map JSON here");
  search_cmd->add_option("--n", search.n, "Party count for expressions");

  BatchArgs batch;
  auto* batch_cmd = verb("batch-appendix", "Verify the 24 five-party maps against the published summary");
  batch_cmd->add_option("--kmax-policy", batch.policy, "table5 or fixed:k")->capture_default_str();
  batch_cmd->add_option("--rows", batch.rows, "Subset of rows, e.g. 1-3,14");

  StateArgs state;
  auto* state_cmd = verb("build-state", "Build the hypergraph state and compare entropies");
  state_cmd->add_option("graph", state.graph, "Graph JSON file or catalog ray")->required();
  state_cmd->add_flag("--dump", state.dump, "List nonzero amplitudes");
  state_cmd->add_flag("--verify", state.verify, "Compare state entropies with min-cuts");
  state_cmd->add_flag("--explicit-two-edges", state.explicit_two_edges, "Realize 2-edges with Bell pairs and Hadamards");
  state_cmd->add_flag("--local-basis-search", state.local_basis_search, "On mismatch, search local bases");

  int max_parties = 3;
  std::optional<std::string> reduce_out;
  auto* reduce_cmd = verb("reduce", "Universal reduction of a hypergraph");
  reduce_cmd->add_option("graph", graph, "Graph JSON file or catalog ray")->required();
  reduce_cmd->add_option("--max-parties", max_parties, "Refuse larger party counts")->capture_default_str();
  reduce_cmd->add_option("--out", reduce_out, "Write the reduced graph here");

  auto* rays = verb("rays", "Catalog of entropy-cone rays");
  rays->require_subcommand(1);
  std::string ray_name, against, ray_file;
  auto* rays_list = rays->add_subcommand("list", "List catalog rays");
  rays_list->fallthrough();
  auto* rays_show = rays->add_subcommand("show", "Print a ray's graph JSON");
  rays_show->fallthrough();
  rays_show->add_option("name", ray_name)->required();
  auto* rays_check = rays->add_subcommand("check", "Check a ray against inequality instances");
  rays_check->fallthrough();
  rays_check->add_option("name", ray_name, "Ray name or graph file")->required();
  rays_check->add_option("--against", against, "Comma-separated names, 'all', or an inequality file")->required();
  auto* rays_load = rays->add_subcommand("load", "Load external rays and report the bulk census");
  rays_load->fallthrough();
  rays_load->add_option("file", ray_file)->required();

  std::string expr;
  std::optional<int> parse_n;
  auto* parse_cmd = verb("parse", "Parse an inequality expression");
  parse_cmd->add_option("expression", expr)->required();
  parse_cmd->add_option("--n", parse_n, "Party count (default: largest party letter)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  if (budget_opt->count()) globals.budget = budget;

  std::string label = command;
  if (command == "rays") {
    if (*rays_list) label = "rays list";
    else if (*rays_show) label = "rays show";
    else if (*rays_check) label = "rays check";
    else label = "rays load";
  }

  Run run(label, globals);
  try {
    if (command == "entropy") return cmd_entropy(run, graph, subsystem, cuts);
    if (command == "check-ineq") return cmd_check_ineq(run, check);
    if (command == "verify-map") return cmd_verify_map(run, verify);
    if (command == "search-map") return cmd_search_map(run, search);
    if (command == "batch-appendix") return cmd_batch_appendix(run, batch);
    if (command == "build-state") return cmd_build_state(run, state);
    if (command == "reduce") return cmd_reduce(run, graph, max_parties, reduce_out);
    if (command == "parse") return cmd_parse(run, expr, parse_n);
    if (label == "rays list") return cmd_rays_list(run);
    if (label == "rays show") return cmd_rays_show(run, ray_name);
    if (label == "rays check") return cmd_rays_check(run, ray_name, against);
    if (label == "rays load") return cmd_rays_load(run, ray_file);
    return run.fail(kInternalError, "internal-error", "unhandled command " + label);
  } catch (const hypercone::ParseError& e) {
    return run.fail(kInputError, "parse-error", e.what(), {{"position", e.position()}});
  } catch (const MapInvalidError& e) {
    return run.fail(kViolation, "map-invalid", e.what(), {{"party", e.party()}});
  } catch (const RegistryError& e) {
    return run.fail(kInputError, "registry-error", e.what());
  } catch (const InputError& e) {
    return run.fail(kInputError, "input-error", e.what());
  } catch (const nlohmann::json::exception& e) {
    return run.fail(kInputError, "input-error", e.what());
  } catch (const ResourceError& e) {
    return run.fail(kResourceError, "resource-error", e.what());
  } catch (const std::bad_alloc&) {
    return run.fail(kResourceError, "resource-error", "out of memory");
  } catch (const std::exception& e) {
    return run.fail(kInternalError, "internal-error", e.what());
  }
}

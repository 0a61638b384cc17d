#pragma once

#include <optional>
#include <string>
#include <vector>

#include "run.hpp"

namespace hypercone::cli {

int cmd_entropy(Run& run, const std::string& graph, const std::optional<std::string>& subsystem, bool cuts);

struct CheckArgs {
  std::string inequality;
  std::vector<std::string> graphs;
  std::optional<int> n;
  bool instances = false;
  int random = 0;
};
int cmd_check_ineq(Run& run, const CheckArgs& args);

struct VerifyArgs {
  std::string inequality;
  std::optional<std::string> map_file;
  bool builtin = false;
  std::optional<int> k_max;
  bool no_prune = false;
  bool keep_going = false;
  std::optional<int> n;
};
int cmd_verify_map(Run& run, const VerifyArgs& args);

struct SearchArgs {
  std::string inequality;
  int k = 2;
  std::optional<std::string> out;
  std::optional<int> n;
};
int cmd_search_map(Run& run, const SearchArgs& args);

struct BatchArgs {
  std::string policy = "table5";
  std::string rows;
};
int cmd_batch_appendix(Run& run, const BatchArgs& args);

struct StateArgs {
  std::string graph;
  bool dump = false;
  bool verify = false;
  bool explicit_two_edges = false;
  bool local_basis_search = false;
};
int cmd_build_state(Run& run, const StateArgs& args);

int cmd_reduce(Run& run, const std::string& graph, int max_parties, const std::optional<std::string>& out);

int cmd_rays_list(Run& run);
int cmd_rays_show(Run& run, const std::string& name);
int cmd_rays_check(Run& run, const std::string& name, const std::string& against);
int cmd_rays_load(Run& run, const std::string& path);

int cmd_parse(Run& run, const std::string& text, std::optional<int> n);

}  // namespace hypercone::cli

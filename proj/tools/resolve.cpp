#include "resolve.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <regex>

#include "hypercone/errors.hpp"

namespace hypercone::cli {

namespace {

bool is_file(const std::string& arg) {
  std::error_code ec;
  return std::filesystem::is_regular_file(arg, ec);
}

int infer_parties(const std::string& text) {
  int n = 0;
  static const std::regex numbered(R"(P(\d+))");
  for (auto it = std::sregex_iterator(text.begin(), text.end(), numbered); it != std::sregex_iterator(); ++it)
    n = std::max(n, std::stoi((*it)[1].str()));
  if (n > 0) return n;
  // Letters inside S(...) / I(...) only; skip the function names themselves.
  bool inside = false;
  for (char c : text) {
    if (c == '(') inside = true;
    else if (c == ')') inside = false;
    else if (inside && c >= 'A' && c <= 'E') n = std::max(n, c - 'A' + 1);
  }
  if (n == 0) throw InputError("cannot infer the party count; pass --n");
  return n;
}

std::string stem(const std::string& path) { return std::filesystem::path(path).stem().string(); }

}  // namespace

NamedInequality resolve_inequality(Run& run, const std::string& arg, std::optional<int> n) {
  if (const LibraryEntry* entry = find_builtin(arg)) {
    run.input_builtin("inequality", entry->name);
    return {entry->name, q_to_terms(entry->q), entry};
  }
  if (is_file(arg)) {
    run.input_file(arg);
    const nlohmann::json doc = read_json_file(arg);
    if (!doc.is_object() || !doc.contains("n")) throw InputError(arg + ": inequality file needs \"n\"");
    const int parties = doc.at("n").get<int>();
    std::string name = doc.value("name", stem(arg));
    if (doc.contains("q")) {
      std::vector<Rational> q;
      for (const auto& v : doc.at("q")) q.push_back(rational_from_json(v));
      return {name, q_to_terms(QVector(parties, std::move(q))), nullptr};
    }
    if (doc.contains("expr")) return {name, parse_inequality(doc.at("expr").get<std::string>(), parties), nullptr};
    throw InputError(arg + ": inequality file needs \"q\" or \"expr\"");
  }
  if (arg.find('(') == std::string::npos)
    throw InputError("'" + arg + "' is neither a built-in inequality, a file, nor an expression");
  run.input_expression(arg);
  const int parties = n ? *n : infer_parties(arg);
  return {"expr", parse_inequality(arg, parties), nullptr};
}

NamedGraph resolve_graph(Run& run, const std::string& arg) {
  if (is_file(arg)) {
    run.input_file(arg);
    LoadedGraph loaded = load_graph(arg);
    return {stem(arg), std::move(loaded.graph), std::move(loaded.merges), loaded.dropped_edges};
  }
  if (const RayEntry* ray = find_ray(arg)) {
    run.input_builtin("ray", ray->name);
    return {ray->name, ray->graph, {}, 0};
  }
  throw InputError("'" + arg + "' is neither a graph file nor a catalog ray");
}

ContractionMap load_map(Run& run, const std::string& path) {
  run.input_file(path);
  const nlohmann::json doc = read_json_file(path);
  if (!doc.is_object() || !doc.contains("L") || !doc.contains("Rp") || !doc.contains("f10"))
    throw InputError(path + ": map file needs \"L\", \"Rp\" and \"f10\"");
  return decode_f10(doc.at("f10").get<std::vector<std::uint64_t>>(), doc.at("L").get<int>(), doc.at("Rp").get<int>());
}

nlohmann::json map_to_json(const ContractionMap& map) {
  return {{"L", map.L}, {"Rp", map.Rp}, {"f10", encode_f10(map)}};
}

std::vector<std::pair<std::string, std::vector<NamedQ>>> resolve_inequality_set(Run& run, const std::string& arg,
                                                                                 int n) {
  std::vector<std::pair<std::string, std::vector<NamedQ>>> out;
  auto add = [&](const std::string& name, const QVector& q) {
    if (q.parties() > n) return;
    out.emplace_back(name, instances(name, q, n));
  };
  std::string lowered = arg;
  std::transform(lowered.begin(), lowered.end(), lowered.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lowered == "all") {
    for (const LibraryEntry& entry : builtin_library()) add(entry.name, entry.q);
    run.input_builtin("inequality-set", "all");
    return out;
  }
  std::size_t start = 0;
  while (start <= arg.size()) {
    const std::size_t comma = std::min(arg.find(',', start), arg.size());
    const std::string item = arg.substr(start, comma - start);
    start = comma + 1;
    if (item.empty()) continue;
    NamedInequality named = resolve_inequality(run, item, std::nullopt);
    if (named.ineq.parties() > n)
      throw InputError(named.name + " has " + std::to_string(named.ineq.parties()) + " parties, more than " +
                       std::to_string(n));
    add(named.name, terms_to_q(named.ineq));
  }
  if (out.empty()) throw InputError("empty inequality set");
  return out;
}

}  // namespace hypercone::cli

#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <random>
#include <set>

#include "hypercone/errors.hpp"
#include "hypercone/random_graph.hpp"
#include "hypercone/states.hpp"
#include "resolve.hpp"

namespace hypercone::cli {

namespace {

using nlohmann::json;

json vector_json(const Run& run, const EntropyVector& s) {
  json out = json::array();
  for (std::size_t i = 0; i < s.size(); ++i) out.push_back(run.number(s[i]));
  return out;
}

json names_json(int n) {
  json out = json::array();
  for (SubsystemLabel label : canonical_subsystems(n)) out.push_back(subsystem_name(n, label));
  return out;
}

std::string tuple_bits(const std::vector<std::uint64_t>& tuple, int width) {
  std::string out;
  for (std::uint64_t x : tuple) {
    if (!out.empty()) out += ' ';
    out += BitString{width, x}.str();
  }
  return out;
}

json witness_json(const Run& run, const Witness& w, int width) {
  json bits = json::array();
  for (std::uint64_t x : w.tuple) bits.push_back(BitString{width, x}.str());
  return {{"tuple", w.tuple}, {"bits", bits}, {"lhs", run.number(w.lhs_distance)}, {"rhs", run.number(w.rhs_distance)}};
}

void note_merges(Run& run, const NamedGraph& g) {
  if (g.merges.empty()) return;
  json merges = merges_to_json(g.merges);
  run.result()["merges"] = merges;
  for (const BoundaryMerge& m : g.merges) {
    run.out() << "note: party " << m.party << " vertices";
    for (const std::string& v : m.merged) run.out() << ' ' << v;
    run.out() << " merged into " << m.kept << '\n';
  }
  if (g.dropped_edges) run.out() << "note: " << g.dropped_edges << " edge(s) collapsed to one vertex and were dropped\n";
}

std::uint64_t budget_or(const Run& run, std::uint64_t fallback) { return run.globals().budget.value_or(fallback); }

int default_k_max(const Inequality& ineq, const LibraryEntry* builtin) {
  if (builtin && builtin->published) return builtin->published->checked_k;
  const Rational beta = ineq.beta_total();
  const mpz_class ceil_beta = (beta.get_num() + beta.get_den() - 1) / beta.get_den();
  return static_cast<int>(std::clamp<long>(ceil_beta.get_si(), 2, 6));
}

json rank_json(const Run& run, const RankReport& r, int width) {
  json out = {{"k", r.k},
              {"status", to_string(r.status)},
              {"examined", r.examined},
              {"pruned", r.pruned},
              {"degenerate", r.degenerate}};
  if (r.witness) out["witness"] = witness_json(run, *r.witness, width);
  return out;
}

int exit_for(const ContractionReport& report) {
  bool budget = false;
  for (const RankReport& r : report.ranks) {
    if (r.status == RankStatus::violated) return kViolation;
    if (r.status == RankStatus::budget_exceeded) budget = true;
  }
  return budget ? kBudgetExceeded : kOk;
}

std::set<int> parse_rows(const std::string& spec) {
  std::set<int> rows;
  std::size_t start = 0;
  while (start < spec.size()) {
    const std::size_t comma = std::min(spec.find(',', start), spec.size());
    const std::string item = spec.substr(start, comma - start);
    start = comma + 1;
    if (item.empty()) continue;
    try {
      const std::size_t dash = item.find('-');
      const int lo = std::stoi(item.substr(0, dash));
      const int hi = dash == std::string::npos ? lo : std::stoi(item.substr(dash + 1));
      for (int r = lo; r <= hi; ++r) rows.insert(r);
    } catch (const std::logic_error&) {
      throw InputError("bad row list '" + spec + "'");
    }
  }
  for (int r : rows)
    if (r < 1 || r > 24) throw InputError("row " + std::to_string(r) + " outside 1..24");
  return rows;
}

}  // namespace

int cmd_entropy(Run& run, const std::string& graph_arg, const std::optional<std::string>& subsystem, bool cuts) {
  const NamedGraph g = resolve_graph(run, graph_arg);
  const int n = g.graph.parties();
  note_merges(run, g);
  const MinCutOptions options{24, run.threads()};
  run.result()["n"] = n;

  auto cut_names = [&](const Cut& cut) {
    std::vector<std::string> names;
    for (int v : cut.included) names.push_back(g.graph.vertex_name(v));
    return names;
  };

  if (subsystem) {
    run.params()["subsystem"] = *subsystem;
    const SubsystemLabel label = parse_subsystem(n, *subsystem);
    const MinCutResult r = min_cut_entropy(g.graph, label, options);
    run.result()["subsystem"] = subsystem_name(n, label);
    run.result()["entropy"] = run.number(r.entropy);
    run.out() << "S(" << subsystem_name(n, label) << ") = " << run.str(r.entropy) << '\n';
    if (cuts) {
      run.result()["cut"] = cut_names(r.cut);
      run.out() << "  cut:";
      for (const auto& v : cut_names(r.cut)) run.out() << ' ' << v;
      run.out() << '\n';
    }
    return run.finish(kOk, "ok");
  }

  json entropies = json::array(), witness_cuts = json::array();
  for (SubsystemLabel label : canonical_subsystems(n)) {
    const MinCutResult r = min_cut_entropy(g.graph, label, options);
    entropies.push_back(run.number(r.entropy));
    run.out() << "S(" << subsystem_name(n, label) << ") = " << run.str(r.entropy);
    if (cuts) {
      witness_cuts.push_back(cut_names(r.cut));
      run.out() << "   cut:";
      for (const auto& v : cut_names(r.cut)) run.out() << ' ' << v;
    }
    run.out() << '\n';
  }
  run.result()["subsystems"] = names_json(n);
  run.result()["entropies"] = entropies;
  if (cuts) run.result()["cuts"] = witness_cuts;
  return run.finish(kOk, "ok");
}

int cmd_check_ineq(Run& run, const CheckArgs& args) {
  const NamedInequality named = resolve_inequality(run, args.inequality, args.n);
  const QVector q = terms_to_q(named.ineq);
  run.params()["instances"] = args.instances;
  run.result()["inequality"] = format_inequality(named.ineq);
  if (args.graphs.empty() && args.random == 0) throw InputError("check-ineq needs graphs or --random N");

  int violated = 0, checked = 0;
  auto check_vector = [&](const std::string& label, const EntropyVector& s, json& entry) {
    std::vector<NamedQ> qs;
    if (args.instances) {
      qs = instances(named.name, q, s.parties());
    } else {
      if (s.parties() != q.parties())
        throw InputError(label + " has " + std::to_string(s.parties()) + " parties but " + named.name + " has " +
                         std::to_string(q.parties()) + "; use --instances");
      qs.push_back({named.name, q});
    }
    json rows = json::array();
    for (const NamedQ& instance : qs) {
      const Rational value = evaluate(instance.q, s);
      ++checked;
      const bool bad = value < 0;
      if (bad) ++violated;
      const char* verdict = bad ? "violated" : value == 0 ? "saturated" : "holds";
      rows.push_back({{"name", instance.name}, {"value", run.number(value)}, {"verdict", verdict}});
      if (bad || !args.instances)
        run.out() << label << ": " << instance.name << " " << verdict << ": Q·S = " << run.str(value) << '\n';
    }
    entry["checks"] = rows;
  };

  json graphs = json::array();
  for (const std::string& arg : args.graphs) {
    const NamedGraph g = resolve_graph(run, arg);
    json entry = {{"graph", g.name}};
    check_vector(g.name, entropy_vector(g.graph, {24, run.threads()}), entry);
    graphs.push_back(entry);
  }
  run.result()["graphs"] = graphs;

  if (args.random > 0) {
    run.params()["random"] = args.random;
    run.params()["seed"] = run.globals().seed;
    std::mt19937_64 rng(run.globals().seed);
    RandomGraphParams params;
    params.n = q.parties();
    json failures = json::array();
    for (int i = 0; i < args.random; ++i) {
      const Hypergraph g = random_hypergraph(rng, params);
      const EntropyVector s = entropy_vector(g, {24, run.threads()});
      const Rational value = evaluate(q, s);
      ++checked;
      if (value < 0) {
        ++violated;
        if (failures.size() < 5) failures.push_back({{"index", i}, {"graph", graph_to_json(g)}, {"value", run.number(value)}});
      }
    }
    run.result()["random"] = {{"count", args.random}, {"violations", failures}};
    run.out() << "random: " << args.random << " hypergraphs on " << q.parties() << " parties, seed "
              << run.globals().seed << '\n';
  }

  run.result()["checked"] = checked;
  run.result()["violated"] = violated;
  run.out() << (violated ? "FAIL" : "PASS") << ": " << violated << " violation(s) in " << checked << " check(s)\n";
  return run.finish(violated ? kViolation : kOk, violated ? "violated" : "holds");
}

int cmd_verify_map(Run& run, const VerifyArgs& args) {
  const NamedInequality named = resolve_inequality(run, args.inequality, args.n);
  if (args.builtin && args.map_file) throw InputError("pass either --builtin or a map file, not both");
  ContractionMap map;
  if (args.map_file) {
    map = load_map(run, *args.map_file);
  } else {
    if (!named.builtin || !named.builtin->map) throw InputError("no built-in map for " + named.name + "; pass a map file");
    map = *named.builtin->map;
  }

  VerifyOptions options;
  options.k_max = args.k_max.value_or(default_k_max(named.ineq, named.builtin));
  options.budget = budget_or(run, options.budget);
  options.prune = !args.no_prune;
  options.threads = run.threads();
  options.stop_on_failure = !args.keep_going;
  if (options.k_max < 2) throw InputError("--kmax must be at least 2");
  run.params()["k_max"] = options.k_max;
  run.params()["budget"] = options.budget;
  run.params()["prune"] = options.prune;

  const Inequality& ineq = named.ineq;
  run.result()["inequality"] = named.name;
  run.result()["L"] = ineq.L();
  run.result()["R"] = ineq.R();
  run.result()["alpha_total"] = run.number(ineq.alpha_total());
  run.result()["beta_total"] = run.number(ineq.beta_total());
  run.out() << named.name << ": L=" << ineq.L() << " R=" << ineq.R() << " alpha_T=" << run.str(ineq.alpha_total())
            << " beta_T=" << run.str(ineq.beta_total()) << " map " << map.L << " -> " << map.Rp << " bits\n";

  ContractionReport report;
  try {
    report = verify_contraction(map, ineq, options);
  } catch (const MapInvalidError& e) {
    run.out() << "FAIL: map invalid: " << e.what() << '\n';
    return run.fail(kViolation, "map-invalid", e.what(), {{"party", e.party()}});
  }

  json ranks = json::array();
  for (const RankReport& r : report.ranks) {
    ranks.push_back(rank_json(run, r, map.L));
    run.out() << "k=" << r.k << "  " << std::left << std::setw(15) << to_string(r.status) << " examined=" << r.examined
              << " pruned=" << r.pruned << " polytope=" << r.degenerate << '\n';
    if (r.witness)
      run.out() << "  witness: " << tuple_bits(r.witness->tuple, map.L) << "  LHS i^" << r.k << " = "
                << run.str(r.witness->lhs_distance) << "  RHS i^" << r.k << " = " << run.str(r.witness->rhs_distance)
                << '\n';
  }
  run.result()["ranks"] = ranks;
  run.result()["fully_proved"] = report.fully_proved;

  const int code = exit_for(report);
  if (code == kOk) {
    run.out() << "PASS through k=" << report.k_max;
    if (report.fully_proved) run.out() << "; fully proved (k_max >= beta_T)";
    run.out() << '\n';
    return run.finish(kOk, report.fully_proved ? "fully-proved" : "verified");
  }
  const RankReport* bad = report.first_failure();
  if (code == kViolation) {
    run.out() << "FAIL at k=" << bad->k << '\n';
    return run.finish(code, "violated");
  }
  run.out() << "BUDGET EXCEEDED at k=" << bad->k << '\n';
  return run.finish(code, "budget-exceeded");
}

int cmd_search_map(Run& run, const SearchArgs& args) {
  const NamedInequality named = resolve_inequality(run, args.inequality, args.n);
  SearchOptions options;
  options.k_target = args.k;
  options.budget = budget_or(run, options.budget);
  options.threads = run.threads();
  if (options.k_target < 2) throw InputError("--k must be at least 2");
  run.params()["k_target"] = options.k_target;
  run.params()["budget"] = options.budget;

  const SearchResult r = search_contraction(named.ineq, options);
  run.result()["inequality"] = named.name;
  run.result()["outcome"] = to_string(r.outcome);
  run.result()["nodes"] = r.nodes;
  run.out() << named.name << ": " << to_string(r.outcome) << " after " << r.nodes << " node(s)\n";

  const int L = expand_rhs(named.ineq).L();
  switch (r.outcome) {
    case SearchOutcome::found: {
      run.result()["map"] = map_to_json(*r.map);
      run.out() << "f10:";
      for (std::uint64_t v : encode_f10(*r.map)) run.out() << ' ' << v;
      run.out() << '\n';
      if (args.out) {
        std::ofstream file(*args.out);
        if (!file) throw InputError("cannot write " + *args.out);
        file << map_to_json(*r.map).dump(2) << '\n';
        run.out() << "map written to " << *args.out << '\n';
      }
      return run.finish(kOk, "found");
    }
    case SearchOutcome::unsatisfiable:
      run.result()["witness_k"] = r.witness_k;
      if (r.witness) {
        run.result()["witness"] = witness_json(run, *r.witness, L);
        run.out() << "occurrence tuple at k=" << r.witness_k << ": " << tuple_bits(r.witness->tuple, L) << "  LHS "
                  << run.str(r.witness->lhs_distance) << " < RHS " << run.str(r.witness->rhs_distance) << '\n';
      }
      return run.finish(kViolation, "unsatisfiable");
    case SearchOutcome::budget_exceeded:
      return run.finish(kBudgetExceeded, "budget-exceeded");
    case SearchOutcome::exhausted:
      return run.finish(kViolation, "exhausted");
  }
  return run.finish(kInternalError, "unknown");
}

int cmd_batch_appendix(Run& run, const BatchArgs& args) {
  int fixed_k = 0;
  if (args.policy.rfind("fixed:", 0) == 0) {
    try {
      fixed_k = std::stoi(args.policy.substr(6));
    } catch (const std::logic_error&) {
      throw InputError("bad policy '" + args.policy + "'");
    }
    if (fixed_k < 2) throw InputError("fixed:k needs k >= 2");
  } else if (args.policy != "table5") {
    throw InputError("--kmax-policy is table5 or fixed:k");
  }
  const std::set<int> rows = parse_rows(args.rows);
  run.params()["kmax_policy"] = args.policy;
  if (!rows.empty()) run.params()["rows"] = std::vector<int>(rows.begin(), rows.end());
  VerifyOptions options;
  options.budget = budget_or(run, options.budget);
  options.threads = run.threads();
  run.params()["budget"] = options.budget;

  run.input_builtin("inequality-set", "Q1..Q24");
  json table = json::array(), seconds = json::object();
  std::vector<int> mismatched, violated, over_budget;
  run.out() << "row |  L  R aT bT | printed L  R aT bT  k |  k  status\n";
  for (int row = 1; row <= 24; ++row) {
    if (!rows.empty() && !rows.count(row)) continue;
    const LibraryEntry* entry = find_builtin("Q" + std::to_string(row));
    const Inequality ineq = q_to_terms(entry->q);
    const PublishedMetadata& pub = *entry->published;
    const int alpha = static_cast<int>(ineq.alpha_total().get_num().get_si());
    const int beta = static_cast<int>(ineq.beta_total().get_num().get_si());
    std::vector<std::string> fields;
    if (ineq.L() != pub.L) fields.push_back("L");
    if (ineq.R() != pub.R) fields.push_back("R");
    if (alpha != pub.alpha_total || ineq.alpha_total().get_den() != 1) fields.push_back("alpha_T");
    if (beta != pub.beta_total || ineq.beta_total().get_den() != 1) fields.push_back("beta_T");

    options.k_max = fixed_k ? fixed_k : pub.checked_k;
    const auto t0 = std::chrono::steady_clock::now();
    const ContractionReport report = verify_contraction(*entry->map, ineq, options);
    seconds["Q" + std::to_string(row)] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    const int code = exit_for(report);
    std::string status = code == kOk ? "verified" : code == kViolation ? "violated" : "budget-exceeded";
    if (!fields.empty()) mismatched.push_back(row);
    if (code == kViolation) violated.push_back(row);
    if (code == kBudgetExceeded) over_budget.push_back(row);
    int reached = 0;
    for (const RankReport& r : report.ranks)
      if (r.status == RankStatus::verified) reached = r.k;

    json ranks = json::array();
    for (const RankReport& r : report.ranks) ranks.push_back(rank_json(run, r, entry->map->L));
    table.push_back({{"row", row},
                     {"L", ineq.L()},
                     {"R", ineq.R()},
                     {"alpha_total", alpha},
                     {"beta_total", beta},
                     {"printed", {{"L", pub.L}, {"R", pub.R}, {"alpha_total", pub.alpha_total},
                                  {"beta_total", pub.beta_total}, {"checked_k", pub.checked_k}}},
                     {"metadata_mismatch", fields},
                     {"k_max", options.k_max},
                     {"verified_through", reached},
                     {"status", status},
                     {"ranks", ranks}});

    std::ostringstream line;
    line << std::setw(3) << row << " | " << std::setw(2) << ineq.L() << ' ' << std::setw(2) << ineq.R() << ' '
         << std::setw(2) << alpha << ' ' << std::setw(2) << beta << " |         " << std::setw(2) << pub.L << ' '
         << std::setw(2) << pub.R << ' ' << std::setw(2) << pub.alpha_total << ' ' << std::setw(2) << pub.beta_total
         << ' ' << std::setw(2) << pub.checked_k << " | " << std::setw(2) << options.k_max << "  " << status;
    if (!fields.empty()) {
      line << "  mismatch:";
      for (const auto& f : fields) line << ' ' << f;
    }
    run.out() << line.str() << '\n';
  }
  run.result()["rows"] = table;
  run.result()["metadata_mismatch_rows"] = mismatched;
  run.result()["violated_rows"] = violated;
  run.result()["budget_exceeded_rows"] = over_budget;
  run.timing()["rows"] = seconds;

  auto list = [](const std::vector<int>& v) {
    std::string s;
    for (int r : v) s += (s.empty() ? "" : ",") + std::to_string(r);
    return s;
  };
  if (!mismatched.empty()) run.out() << "metadata mismatch in rows " << list(mismatched) << '\n';
  if (!violated.empty()) run.out() << "violations in rows " << list(violated) << '\n';
  if (!over_budget.empty()) run.out() << "budget exceeded in rows " << list(over_budget) << '\n';
  if (!mismatched.empty() || !violated.empty()) return run.finish(kViolation, "mismatch");
  if (!over_budget.empty()) return run.finish(kBudgetExceeded, "budget-exceeded");
  run.out() << "all rows match\n";
  return run.finish(kOk, "ok");
}

int cmd_build_state(Run& run, const StateArgs& args) {
  const NamedGraph g = resolve_graph(run, args.graph);
  note_merges(run, g);
  run.params()["explicit_two_edges"] = args.explicit_two_edges;
  run.params()["local_basis_search"] = args.local_basis_search;
  BuildOptions build;
  build.explicit_two_edges = args.explicit_two_edges;

  const UnitExpansion unit = expand_to_unit_weights(g.graph);
  const PartyState state = build_state(unit.graph, build);
  std::size_t nonzero = 0;
  for (const Eisenstein& a : state.amplitudes) nonzero += !a.is_zero();

  const int n = state.n;
  json legs = json::object();
  run.out() << g.name << ": D=" << state.D << "  legs";
  for (int p = 0; p <= n; ++p) {
    legs[party_label(n, p)] = state.party_legs[p].size();
    run.out() << ' ' << party_label(n, p) << ':' << state.party_legs[p].size();
  }
  run.out() << "\n";
  if (unit.scale != 1) run.out() << "weights scaled by " << unit.scale.get_str() << " to unit edges\n";
  run.out() << "nonzero amplitudes: " << nonzero << " of " << state.amplitudes.size() << "  N=" << state.N.get_str()
            << "  prefactor^2=" << run.str(state.prefactor_squared) << '\n';
  run.result()["graph"] = g.name;
  run.result()["D"] = state.D;
  run.result()["legs"] = legs;
  run.result()["unit_scale"] = unit.scale.get_str();
  run.result()["nonzero"] = nonzero;
  run.result()["dimension"] = state.amplitudes.size();
  run.result()["N"] = state.N.get_str();
  run.result()["prefactor_squared"] = run.number(state.prefactor_squared);

  if (args.dump) {
    json kets = json::array();
    for (const auto& [ket, amplitude] : dump_state(state)) {
      kets.push_back({ket, amplitude});
      run.out() << "  |" << ket << ">  " << amplitude << '\n';
    }
    run.result()["amplitudes"] = kets;
  }

  if (!args.verify) return run.finish(kOk, "built");

  VerifyStateOptions options;
  options.build = build;
  options.local_basis_search = args.local_basis_search;
  const StateReport report = verify_state_entropies(g.graph, options);
  json checks = json::array();
  for (const SubsystemCheck& c : report.checks) {
    json entry = {{"subsystem", subsystem_name(n, c.subsystem)},
                  {"cut", run.number(c.cut)},
                  {"rank", c.state.rank},
                  {"flat", c.state.flat},
                  {"match", c.match}};
    if (c.state.exact) entry["state"] = run.number(*c.state.exact);
    else entry["state_value"] = c.state.value;
    checks.push_back(entry);
    run.out() << "  S(" << subsystem_name(n, c.subsystem) << ")  cut=" << run.str(c.cut) << "  state="
              << (c.state.exact ? run.str(*c.state.exact) : std::to_string(c.state.value)) << " (rank "
              << c.state.rank << (c.state.flat ? ", flat" : ", not flat") << ")  " << (c.match ? "ok" : "MISMATCH")
              << '\n';
  }
  for (const std::string& note : report.notes) run.out() << "note: " << note << '\n';
  run.result()["checks"] = checks;
  run.result()["matches"] = report.matches;
  run.result()["all_flat"] = report.all_flat;
  run.result()["notes"] = report.notes;
  if (report.common_factor) run.result()["common_factor"] = run.number(*report.common_factor);
  run.out() << report.matches << "/" << report.checks.size() << " subsystems match"
            << (report.all_flat ? ", all spectra flat" : ", some spectra not flat") << '\n';
  return run.finish(report.all_match() ? kOk : kViolation, report.all_match() ? "match" : "mismatch");
}

int cmd_reduce(Run& run, const std::string& graph_arg, int max_parties, const std::optional<std::string>& out) {
  const NamedGraph g = resolve_graph(run, graph_arg);
  note_merges(run, g);
  run.params()["max_parties"] = max_parties;
  const MinCutOptions mincut{24, run.threads()};
  const Hypergraph reduced = universal_reduction(g.graph, {max_parties, mincut});
  const bool preserved = entropy_vector(reduced, mincut) == entropy_vector(g.graph, mincut);
  const json doc = graph_to_json(reduced);
  run.result()["graph"] = doc;
  run.result()["entropies_preserved"] = preserved;
  if (out) {
    std::ofstream file(*out);
    if (!file) throw InputError("cannot write " + *out);
    file << doc.dump(2) << '\n';
    run.out() << "reduced graph written to " << *out << '\n';
  } else {
    run.out() << doc.dump(2) << '\n';
  }
  run.out() << reduced.vertex_count() << " vertices, " << reduced.edges().size() << " edges; "
            << (preserved ? "entropies preserved" : "ENTROPIES CHANGED") << '\n';
  return run.finish(preserved ? kOk : kViolation, preserved ? "preserved" : "changed");
}

int cmd_rays_list(Run& run) {
  json rays = json::array();
  for (const RayEntry& ray : builtin_rays()) {
    rays.push_back({{"name", ray.name},
                    {"n", ray.n},
                    {"bulk", ray.graph.bulk_vertices().size()},
                    {"edges", ray.graph.edges().size()},
                    {"rank", ray.graph.rank()},
                    {"provenance", ray.provenance}});
    run.out() << std::left << std::setw(8) << ray.name << " n=" << ray.n << " bulk=" << ray.graph.bulk_vertices().size()
              << " edges=" << ray.graph.edges().size() << " rank=" << ray.graph.rank() << "  " << ray.provenance
              << '\n';
  }
  run.result()["rays"] = rays;
  return run.finish(kOk, "ok");
}

int cmd_rays_show(Run& run, const std::string& name) {
  const RayEntry* ray = find_ray(name);
  if (!ray) throw InputError("no catalog ray '" + name + "'");
  run.input_builtin("ray", ray->name);
  const json doc = graph_to_json(ray->graph);
  run.result()["graph"] = doc;
  if (ray->expected) run.result()["expected"] = vector_json(run, *ray->expected);
  run.out() << doc.dump(2) << '\n';
  return run.finish(kOk, "ok");
}

int cmd_rays_check(Run& run, const std::string& name, const std::string& against) {
  const NamedGraph g = resolve_graph(run, name);
  const int n = g.graph.parties();
  const EntropyVector s = entropy_vector(g.graph, {24, run.threads()});
  run.params()["against"] = against;
  run.result()["ray"] = g.name;
  run.result()["entropies"] = vector_json(run, s);

  bool any_violation = false;
  json groups = json::array();
  for (const auto& [family, qs] : resolve_inequality_set(run, against, n)) {
    std::optional<Rational> worst;
    int violated = 0, saturated = 0;
    json rows = json::array();
    for (const FacetStatus& f : saturated_facets(s, qs)) {
      violated += f.violated;
      saturated += f.saturated;
      if (!worst || f.value < *worst) worst = f.value;
      rows.push_back({{"name", f.name}, {"value", run.number(f.value)}, {"saturated", f.saturated},
                      {"violated", f.violated}});
    }
    any_violation = any_violation || violated;
    groups.push_back({{"inequality", family},
                      {"instances", rows.size()},
                      {"violated", violated},
                      {"saturated", saturated},
                      {"checks", rows}});
    if (violated) {
      run.out() << family << " violated: Q·S = " << run.str(*worst) << "  (" << violated << " of " << qs.size()
                << " instances)\n";
      for (const auto& row : rows)
        if (row["violated"].get<bool>())
          run.out() << "  " << row["name"].get<std::string>() << ": Q·S = "
                    << (row["value"].is_string() ? row["value"].get<std::string>() : row["value"].dump()) << '\n';
    } else {
      run.out() << family << " holds: " << saturated << " of " << qs.size() << " instances saturated\n";
    }
  }
  run.result()["families"] = groups;
  return run.finish(any_violation ? kViolation : kOk, any_violation ? "violated" : "holds");
}

int cmd_rays_load(Run& run, const std::string& path) {
  run.input_file(path);
  const LoadedRays loaded = load_rays(path);
  int mismatches = 0;
  json rays = json::array();
  for (const RayEntry& ray : loaded.rays) {
    const EntropyVector s = entropy_vector(ray.graph, {24, run.threads()});
    json entry = {{"name", ray.name}, {"n", ray.n}, {"bulk", ray.graph.bulk_vertices().size()},
                  {"entropies", vector_json(run, s)}};
    if (ray.expected) {
      const std::optional<Rational> c = is_realization(ray.graph, *ray.expected);
      entry["realizes_expected"] = c.has_value();
      if (c) entry["scale"] = run.number(*c);
      if (!c) {
        ++mismatches;
        run.out() << ray.name << ": does not realize its expected vector\n";
      }
    }
    rays.push_back(entry);
  }
  json census = json::object();
  run.out() << loaded.rays.size() << " rays; bulk census:";
  for (const auto& [bulk, count] : loaded.bulk_census) {
    census[std::to_string(bulk)] = count;
    run.out() << "  " << bulk << ":" << count;
  }
  run.out() << '\n';
  run.result()["rays"] = rays;
  run.result()["bulk_census"] = census;
  return run.finish(mismatches ? kViolation : kOk, mismatches ? "mismatch" : "ok");
}

int cmd_parse(Run& run, const std::string& text, std::optional<int> n) {
  const NamedInequality named = resolve_inequality(run, text, n);
  const Inequality& ineq = named.ineq;
  const QVector q = terms_to_q(ineq);
  const int parties = ineq.parties();
  json qjson = json::array();
  for (std::size_t i = 0; i < q.size(); ++i) qjson.push_back(run.number(q[i]));
  run.result()["n"] = parties;
  run.result()["canonical"] = format_inequality(ineq);
  run.result()["q"] = qjson;
  run.result()["subsystems"] = names_json(parties);
  run.result()["L"] = ineq.L();
  run.result()["R"] = ineq.R();
  run.result()["alpha_total"] = run.number(ineq.alpha_total());
  run.result()["beta_total"] = run.number(ineq.beta_total());
  run.out() << format_inequality(ineq) << '\n';
  std::vector<Rational> entries;
  for (std::size_t i = 0; i < q.size(); ++i) entries.push_back(q[i]);
  run.out() << "n=" << parties << "  Q = " << format_vector(entries, run.globals().as_float) << '\n';
  run.out() << "L=" << ineq.L() << " R=" << ineq.R() << " alpha_T=" << run.str(ineq.alpha_total())
            << " beta_T=" << run.str(ineq.beta_total()) << '\n';

  bool integral = true;
  for (const Term& t : ineq.rhs()) integral = integral && is_integer(t.coefficient);
  if (integral) {
    const OccurrenceVectors occ = occurrence_vectors(expand_rhs(ineq));
    json xs = json::object();
    for (int p = 0; p <= parties; ++p) {
      const std::string x = BitString{occ.L, occ.x[p]}.str(), y = BitString{occ.columns, occ.y[p]}.str();
      xs[party_label(parties, p)] = {{"x", x}, {"y", y}};
      run.out() << "  " << party_label(parties, p) << ": x=" << x << " y=" << y << '\n';
    }
    run.result()["occurrence"] = xs;
  }
  return run.finish(kOk, "ok");
}

}  // namespace hypercone::cli

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "starsep/io.hpp"
#include "starsep/serialize.hpp"

namespace starsep {

enum ExitCode : int { exit_ok = 0, exit_internal = 1, exit_input = 2, exit_non_member = 3, exit_hypothesis = 4, exit_capacity = 5 };

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  int t = 4;
  ClassVariant variant = ClassVariant::standard;
  std::string weights;  // path, "uniform", or empty for the file's own weights
  Ratio c = one_half;
  std::uint64_t seed = 1;
  std::string output;  // empty: standard output
  int jobs = 1;
  std::string kind = "random";
  int n = 10;
  bool plant_wheel = false;
};

/// "1/2", "3/5" or a decimal such as "0.6".
inline Ratio parse_ratio(const std::string& text) {
  if (text.find('/') != std::string::npos) {
    auto r = detail::parse_rational(text);
    return Ratio{r.num, r.den};
  }
  try {
    std::size_t used = 0;
    double x = std::stod(text, &used);
    if (used != text.size()) throw InputError("bad balance constant '" + text + "'");
    return Ratio{static_cast<std::int64_t>(x * 1000000 + 0.5), 1000000};
  } catch (const std::logic_error&) {
    throw InputError("bad balance constant '" + text + "'");
  }
}

/// Cap for exact treewidth: 14, or STARSEP_MAX_N when set (at most 24).
inline int exact_cap_from_env() {
  const char* env = std::getenv("STARSEP_MAX_N");
  if (!env || !*env) return default_exact_cap;
  try {
    int cap = std::stoi(env);
    return std::clamp(cap, 0, 24);
  } catch (const std::logic_error&) {
    throw InputError("STARSEP_MAX_N must be an integer");
  }
}

namespace detail {

inline void validate(const RunConfig& cfg) {
  if (cfg.t < 4) throw InputError("t must be at least 4");
  if (cfg.c.den <= 0 || 2 * cfg.c.num < cfg.c.den || cfg.c.num >= cfg.c.den)
    throw InputError("balance constant must lie in [1/2, 1)");
  if (cfg.jobs < 1) throw InputError("jobs must be positive");
}

inline void require_inputs(const RunConfig& cfg, std::size_t count) {
  if (cfg.inputs.size() != count)
    throw InputError(cfg.command + " expects " + std::to_string(count) + " input path(s)");
}

inline WeightFn choose_weights(const RunConfig& cfg, const GraphFile& file) {
  if (cfg.weights == "uniform") return WeightFn::uniform(file.graph);
  if (!cfg.weights.empty()) return load_weights(file.graph, cfg.weights);
  if (file.weights) return *file.weights;
  return WeightFn::uniform(file.graph);
}

inline void emit(const RunConfig& cfg, const Json& j, std::ostream& out) {
  std::string text = j.dump(2) + "\n";
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.output, std::ios::binary);
  if (!f) throw InputError("cannot write " + cfg.output);
  f << text;
}

inline bool graph_path(const std::filesystem::path& p) {
  auto ext = p.extension().string();
  return ext == ".json" || ext == ".g6" || ext == ".graph6" || ext == ".col" || ext == ".dimacs";
}

inline Json batch_row(const std::filesystem::path& path, int t, ClassVariant variant, int cap) {
  Json row{{"instance", path.filename().string()}};
  try {
    GraphFile file = load_graph_file(path.string());
    const Graph& g = file.graph;
    row["n"] = g.order();
    row["edges"] = g.edge_count();
    ObstructionReport membership = class_membership(g, t, variant);
    row["member"] = membership.member;
    if (!membership.member) {
      row["obstruction"] = to_string(membership.obstruction->kind);
      row["status"] = exit_non_member;
      return row;
    }
    CertifyReport r = certify(g, t, variant, cap);
    bool ledgers = true;
    std::vector<int> sizes;
    for (const auto& c : r.calls) {
      ledgers = ledgers && c.ledger_holds;
      sizes.push_back(c.separator_size);
    }
    row["separator_sizes"] = sizes;
    row["max_separator"] = r.max_separator;
    row["width"] = r.width;
    row["exact_tw"] = r.exact_tw ? Json(*r.exact_tw) : Json(nullptr);
    row["checks"] = {{"valid_decomposition", r.validity.pass},
                     {"width_within_composed", r.width_within_composed()},
                     {"width_at_least_exact", r.width_at_least_exact()},
                     {"ledgers", ledgers}};
    row["status"] = exit_ok;
  } catch (const InputError& e) {
    row["status"] = exit_input;
    row["error"] = e.what();
  } catch (const HypothesisViolation& e) {
    row["status"] = exit_hypothesis;
    row["error"] = e.what();
  } catch (const PreconditionError& e) {
    row["status"] = exit_hypothesis;
    row["error"] = e.what();
  } catch (const CapacityError& e) {
    row["status"] = exit_capacity;
    row["error"] = e.what();
  } catch (const std::exception& e) {
    row["status"] = exit_internal;
    row["error"] = e.what();
  }
  return row;
}

inline int run_batch(const RunConfig& cfg, std::ostream& out) {
  require_inputs(cfg, 1);
  std::filesystem::path dir(cfg.inputs[0]);
  if (!std::filesystem::is_directory(dir)) throw InputError(cfg.inputs[0] + " is not a directory");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && graph_path(entry.path())) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  const int cap = exact_cap_from_env();
  std::vector<Json> rows(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < files.size(); i = next++) rows[i] = batch_row(files[i], cfg.t, cfg.variant, cap);
  };
  std::vector<std::thread> pool;
  const int jobs = std::min<int>(cfg.jobs, std::max<std::size_t>(files.size(), 1));
  for (int i = 1; i < jobs; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  int members = 0, failures = 0;
  for (const auto& r : rows) {
    members += r.value("member", false) ? 1 : 0;
    int status = r.value("status", 0);
    failures += (status != exit_ok && status != exit_non_member) ? 1 : 0;
  }
  Json summary{{"t", cfg.t},
               {"variant", cfg.variant == ClassVariant::star ? "star" : "standard"},
               {"seed", cfg.seed},
               {"instances", rows},
               {"totals", {{"instances", rows.size()}, {"members", members}, {"failures", failures}}}};
  emit(cfg, summary, out);
  return failures == 0 ? exit_ok : exit_hypothesis;
}

inline int dispatch(const RunConfig& cfg, std::ostream& out) {
  validate(cfg);
  const std::string& cmd = cfg.command;
  if (cmd == "batch") return run_batch(cfg, out);
  if (cmd == "gen") {
    if (!cfg.inputs.empty()) throw InputError("gen takes no input paths");
    Graph g = cfg.kind == "random" ? sample_class(cfg.n, cfg.t, cfg.seed, cfg.variant,
                                                  SampleOptions{2.5, cfg.plant_wheel, 0}).graph
                                   : make(cfg.kind);
    emit(cfg, Json::parse(to_edge_list_json(g)), out);
    return exit_ok;
  }
  if (cmd == "verify-cert") {
    require_inputs(cfg, 2);
    GraphFile file = load_graph_file(cfg.inputs[0]);
    Json doc;
    try {
      doc = Json::parse(detail::read_file(cfg.inputs[1]));
    } catch (const Json::exception& e) {
      throw InputError(std::string("invalid JSON: ") + e.what());
    }
    if (doc.contains("decomposition")) doc = doc["decomposition"];
    TreeDecomposition td = td_from_json(doc);
    TdCheck check = validate_td(file.graph, td);
    Json j = to_json(check);
    j["width"] = td.bags.empty() ? -1 : td.width();
    emit(cfg, j, out);
    return check.pass ? exit_ok : exit_input;
  }

  require_inputs(cfg, 1);
  GraphFile file = load_graph_file(cfg.inputs[0]);
  const Graph& g = file.graph;
  if (cmd == "exact-tw") {
    emit(cfg, Json{{"n", g.order()}, {"treewidth", exact_treewidth(g, exact_cap_from_env())}}, out);
    return exit_ok;
  }
  if (cmd == "atoms") {
    emit(cfg, to_json(clique_cutset_atoms(g)), out);
    return exit_ok;
  }
  if (cmd == "separations") {
    WeightFn w = choose_weights(cfg, file);
    BalanceSplit split = classify_balanced(g, w);
    Json j = to_json(leq_A(g, w));
    j["balanced"] = to_json(split.balanced);
    emit(cfg, j, out);
    return exit_ok;
  }
  ObstructionReport membership = class_membership(g, cfg.t, cfg.variant);
  if (cmd == "recognize") {
    emit(cfg, to_json(membership), out);
    return membership.member ? exit_ok : exit_non_member;
  }
  if (!membership.member) {
    emit(cfg, Json{{"membership", to_json(membership)}}, out);
    return exit_non_member;
  }
  if (cmd == "hubdiv") {
    WeightFn w = choose_weights(cfg, file);
    HubDivision div = hub_division(g, w, cfg.t);
    Json j = to_json(div);
    NoWheelsReport nw = check_no_wheels_in_bag(g, div);
    j["no_wheels_in_bag"] = {{"pass", nw.pass}};
    if (nw.witness) j["no_wheels_in_bag"]["witness"] = to_json(*nw.witness);
    emit(cfg, j, out);
    return exit_ok;
  }
  if (cmd == "separator") {
    WeightFn w = choose_weights(cfg, file);
    if (has_clique_cutset(g, g.vertices()))
      throw PreconditionError("separator needs a graph without clique cutsets; run atoms first");
    MainSeparatorResult r = main_separator(g, w, cfg.t);
    Json j = to_json(r);
    j["c_balanced"] = is_balanced_separator(g, w, r.certificate.separator, cfg.c);
    emit(cfg, j, out);
    return exit_ok;
  }
  if (cmd == "decompose") {
    CertifyReport r = certify(g, cfg.t, cfg.variant, exact_cap_from_env());
    emit(cfg, to_json(r), out);
    return exit_ok;
  }
  throw InputError("unknown command '" + cmd + "'");
}

}  // namespace detail

/// Runs one command; diagnostics go to `err`, JSON to `out` or the output file.
inline int run(const RunConfig& cfg, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  try {
    return detail::dispatch(cfg, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return exit_input;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << "\n";
    return exit_capacity;
  } catch (const HypothesisViolation& e) {
    err << "hypothesis violation: " << e.what();
    if (!e.witness().empty()) {
      err << " [witness:";
      for (Vertex v : e.witness()) err << " " << v;
      err << "]";
    }
    err << "\n";
    return exit_hypothesis;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return exit_hypothesis;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_internal;
  }
}

}  // namespace starsep

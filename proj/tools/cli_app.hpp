#pragma once

// Command-line front end. Kept in a header so the test suite can drive it
// in-process; tools/chromcoh.cpp only forwards main() here.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "chromcoh/chromcoh.hpp"

namespace chromcoh::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kIoError = 3,
  kParseError = 4,
  kCapacityError = 5,
  kInvalidArgument = 6,
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string input;
  std::string input2;
  std::string format = "edgelist";
  std::string output = "json";
  std::string verify = "fast";
  std::size_t budget = Limits{}.max_edges;
  std::size_t workers = std::max(1U, std::thread::hardware_concurrency());
  std::uint64_t seed = 1;
  std::optional<std::size_t> edge;
  bool timing = false;
  std::string dump_matrices;
  std::string family;
  std::size_t size = 0;
  std::string manifest;

  Limits limits() const {
    Limits l;
    l.max_edges = budget;
    return l;
  }
};

inline Graph family_member(const std::string& name, std::size_t n) {
  if (name == "null") return null_graph(n);
  if (name == "tree_path") return path_tree(n);
  if (name == "cycle") return cycle_graph(n);
  throw std::invalid_argument("unknown family '" + name + "' (expected null, tree_path or cycle)");
}

inline BigradedGroups family_oracle(const std::string& name, std::size_t n) {
  if (name == "null") return oracle_null(n);
  if (name == "tree_path") return oracle_tree(n);
  return oracle_cycle(n);
}

// "family:<name>:<n>" names an inline family member.
inline std::optional<std::pair<std::string, std::size_t>> parse_family_spec(const std::string& spec) {
  if (spec.rfind("family:", 0) != 0) return std::nullopt;
  const auto rest = spec.substr(7);
  const auto colon = rest.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("family spec must be family:<name>:<n>");
  std::size_t n = 0;
  try {
    n = std::stoul(rest.substr(colon + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad family size in '" + spec + "'");
  }
  return std::make_pair(rest.substr(0, colon), n);
}

inline Graph load_graph(const std::string& source, const std::string& format) {
  if (auto fam = parse_family_spec(source)) return family_member(fam->first, fam->second);
  std::string text;
  if (source == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(source, std::ios::binary);
    if (!in) throw IoError("cannot open input '" + source + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  if (format == "graph6") return parse_graph6(text);
  if (format == "edgelist") return parse_edge_list(text);
  throw std::invalid_argument("unknown format '" + format + "'");
}

struct Outcome {
  Json report;
  std::string table;
  bool passed = true;
};

inline bool has_parallel_edges(const Graph& g) { return simplify(g).graph.edge_count() != g.edge_count(); }

inline bool is_tree(const Graph& g) {
  return !g.has_loop() && g.vertex_count() == g.edge_count() + 1 && component_count(g) == 1;
}

// Cohomology plus the checks selected by cfg.verify.
inline Outcome compute(const Graph& g, const RunConfig& cfg, const std::optional<BigradedGroups>& expected = {}) {
  const Limits limits = cfg.limits();
  const BasisIndex basis = enumerate_basis(g, limits);
  const BigradedGroups h = cohomology(g, basis);
  ChromaticMemo memo;
  const ChromaticPolynomial chromatic = chromatic_deletion_contraction(g, memo);

  std::vector<std::pair<std::string, bool>> checks;
  if (cfg.verify != "none") {
    checks.emplace_back("d_squared", verify_d_squared(g, basis));
    const IntPolynomial euler = graded_euler_characteristic(h);
    checks.emplace_back("euler_match", euler == chain_level_euler(basis) && euler == substitute_lambda(chromatic));
    bool h0_free = true;
    for (const auto& [b, grp] : h.entries()) h0_free = h0_free && (b.i != 0 || grp.is_free());
    checks.emplace_back("h0_torsion_free", h0_free);
  }
  if (cfg.verify == "all") {
    checks.emplace_back("cube_crosscheck", cube_sign_crosscheck(g, limits));
    checks.emplace_back("chromatic_routes", chromatic_state_sum(g, limits) == chromatic);
    std::mt19937_64 rng(cfg.seed);
    bool invariant = true;
    for (int k = 0; k < 3; ++k) {
      const auto sigma = random_permutation(g.edge_count(), rng);
      invariant = invariant && cohomology(permute_edge_order(g, sigma), limits) == h;
    }
    checks.emplace_back("ordering_invariance", invariant);
    if (g.has_loop()) {
      checks.emplace_back("loop_trivial", h.is_trivial());
    } else if (has_parallel_edges(g)) {
      checks.emplace_back("simplify_invariance", cohomology(simplify(g).graph, limits) == h);
    }
    if (g.edge_count() == 0) checks.emplace_back("null_oracle", h == oracle_null(g.vertex_count()));
    if (is_tree(g)) checks.emplace_back("tree_oracle", h == oracle_tree(g.edge_count()));
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      if (is_pendant(g, e)) {
        checks.emplace_back("pendant_shift", static_cast<bool>(check_pendant_shift(g, e, limits)));
        break;
      }
    }
  }
  if (expected) checks.emplace_back("family_oracle", h == *expected);

  Outcome out;
  out.report = cohomology_report(g, h, chromatic, checks);
  for (const auto& [name, ok] : checks) out.passed = out.passed && ok;

  std::ostringstream table;
  table << "graph: " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
  table << render_table(h, static_cast<int>(g.edge_count()));
  table << "poincare: " << poincare_polynomial(h).to_string() << '\n';
  table << "euler: " << graded_euler_characteristic(h).to_string() << '\n';
  table << "chromatic: " << chromatic.to_string() << '\n';
  for (const auto& [name, ok] : checks) table << "check " << name << ": " << (ok ? "pass" : "FAIL") << '\n';
  out.table = table.str();

  if (!cfg.dump_matrices.empty()) {
    std::ofstream dump(cfg.dump_matrices);
    if (!dump) throw IoError("cannot write '" + cfg.dump_matrices + "'");
    for (int j = 0; j <= static_cast<int>(g.vertex_count()); ++j) {
      for (int i = 0; i < static_cast<int>(g.edge_count()); ++i) write_triplets(dump, i, j, differential(g, basis, i, j));
    }
  }
  return out;
}

inline void emit(std::ostream& out, const RunConfig& cfg, const Json& report, const std::string& table) {
  if (cfg.output == "table") {
    out << table;
  } else {
    out << report.dump(2) << '\n';
  }
}

// Maps library exceptions onto exit codes; `body` returns the exit code.
template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const IoError& e) {
    err << "io error: " << e.what() << '\n';
    return kIoError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    return kCapacityError;
  } catch (const std::logic_error& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kInvalidArgument;
  }
}

inline int cmd_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Graph g = load_graph(cfg.input, cfg.format);
    std::optional<BigradedGroups> expected;
    if (auto fam = parse_family_spec(cfg.input)) expected = family_oracle(fam->first, fam->second);
    const Outcome o = compute(g, cfg, expected);
    emit(out, cfg, o.report, o.table);
    return o.passed ? kOk : kCheckFailed;
  });
}

inline int cmd_family(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Graph g = family_member(cfg.family, cfg.size);
    const Outcome o = compute(g, cfg, family_oracle(cfg.family, cfg.size));
    Json report = Json{{"family", cfg.family}, {"size", cfg.size}};
    for (auto& [k, v] : o.report.items()) report[k] = v;
    emit(out, cfg, report, cfg.family + " " + std::to_string(cfg.size) + "\n" + o.table);
    return o.passed ? kOk : kCheckFailed;
  });
}

inline int cmd_chromatic(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Graph g = load_graph(cfg.input, cfg.format);
    const ChromaticPolynomial p = chromatic_deletion_contraction(g);
    Json report{{"chromatic", to_json(p.in_lambda())}, {"at_one_plus_q", to_json(substitute_lambda(p))}};
    bool ok = true;
    if (cfg.verify == "all") {
      ok = chromatic_state_sum(g, cfg.limits()) == p;
      report["checks"] = Json{{"chromatic_routes", ok}};
    }
    emit(out, cfg, report, "chromatic: " + p.to_string() + "\nat 1+q: " + substitute_lambda(p).to_string() + "\n");
    return ok ? kOk : kCheckFailed;
  });
}

inline Json check_json(const CheckResult& r) {
  Json j{{"passed", r.passed}};
  if (r.first_failure) j["first_failure"] = Json{{"i", r.first_failure->i}, {"j", r.first_failure->j}};
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

// Shared driver for the per-edge checks. With no --edge, every edge accepted
// by `applies` is checked.
template <class Applies, class Check>
int run_edge_check(const std::string& name, const RunConfig& cfg, std::ostream& out, std::ostream& err,
                   Applies&& applies, Check&& check) {
  return guarded(err, [&] {
    const Graph g = load_graph(cfg.input, cfg.format);
    std::vector<std::size_t> edges;
    if (cfg.edge) {
      edges.push_back(*cfg.edge);
    } else {
      for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (applies(g, e)) edges.push_back(e);
      }
    }
    Json results = Json::array();
    std::ostringstream table;
    bool all = true;
    for (std::size_t e : edges) {
      const CheckResult r = check(g, e, cfg.limits());
      all = all && r.passed;
      Json row{{"edge", e}};
      const Json detail = check_json(r);
      for (auto& [k, v] : detail.items()) row[k] = v;
      results.push_back(std::move(row));
      table << name << " edge " << e << ": " << (r.passed ? "pass" : "FAIL " + r.detail) << '\n';
    }
    Json report{{"check", name}, {"passed", all}, {"results", std::move(results)}};
    emit(out, cfg, report, table.str());
    return all ? kOk : kCheckFailed;
  });
}

inline int cmd_check_kunneth(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Graph g1 = load_graph(cfg.input, cfg.format);
    const Graph g2 = load_graph(cfg.input2.empty() ? cfg.input : cfg.input2, cfg.format);
    const CheckResult r = check_kunneth(g1, g2, cfg.limits());
    Json report{{"check", "kunneth"}};
    const Json detail = check_json(r);
    for (auto& [k, v] : detail.items()) report[k] = v;
    emit(out, cfg, report, std::string("kunneth: ") + (r.passed ? "pass" : "FAIL " + r.detail) + "\n");
    return r.passed ? kOk : kCheckFailed;
  });
}

struct BatchRow {
  std::string input;
  std::string status;
  int code = kOk;
  std::string error;
  Outcome outcome;
  double elapsed_ms = 0;
};

inline std::vector<std::string> read_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open manifest '" + path + "'");
  const auto base = std::filesystem::path(path).parent_path();
  std::vector<std::string> items;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    const auto start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    std::string item = line.substr(start);
    if (!parse_family_spec(item) && std::filesystem::path(item).is_relative()) item = (base / item).string();
    items.push_back(item);
  }
  return items;
}

inline BatchRow run_batch_row(const std::string& item, const RunConfig& cfg) {
  BatchRow row;
  row.input = item;
  const auto start = std::chrono::steady_clock::now();
  std::ostringstream err;
  row.code = guarded(err, [&] {
    const Graph g = load_graph(item, cfg.format);
    std::optional<BigradedGroups> expected;
    if (auto fam = parse_family_spec(item)) expected = family_oracle(fam->first, fam->second);
    row.outcome = compute(g, cfg, expected);
    return row.outcome.passed ? kOk : kCheckFailed;
  });
  row.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  row.error = err.str();
  while (!row.error.empty() && row.error.back() == '\n') row.error.pop_back();
  switch (row.code) {
    case kOk: row.status = "ok"; break;
    case kCheckFailed: row.status = "check-failed"; break;
    case kIoError: row.status = "io-error"; break;
    case kParseError: row.status = "parse-error"; break;
    case kCapacityError: row.status = "capacity-error"; break;
    default: row.status = "invalid-argument"; break;
  }
  return row;
}

inline int cmd_batch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<std::string> items;
  if (const int code = guarded(err, [&] {
        items = read_manifest(cfg.manifest);
        return kOk;
      });
      code != kOk) {
    return code;
  }

  std::vector<BatchRow> rows(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < items.size(); k = next++) rows[k] = run_batch_row(items[k], cfg);
  };
  const std::size_t threads = std::clamp<std::size_t>(cfg.workers, 1, std::max<std::size_t>(items.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  Json json_rows = Json::array();
  std::ostringstream table;
  std::size_t passed = 0;
  for (const BatchRow& r : rows) {
    Json jr{{"input", r.input}, {"status", r.status}};
    if (r.code == kOk || r.code == kCheckFailed) {
      jr["report"] = r.outcome.report;
    } else {
      jr["error"] = r.error;
    }
    if (cfg.timing) jr["elapsed_ms"] = r.elapsed_ms;
    json_rows.push_back(std::move(jr));
    passed += r.code == kOk;

    table << r.input << "  [" << r.status << "]";
    if (r.code == kOk || r.code == kCheckFailed) {
      const auto& groups = r.outcome.report["groups"];
      int top = 0;
      for (const auto& grp : groups) top = std::max(top, grp["i"].get<int>());
      BigradedGroups h;
      for (const auto& grp : groups) {
        std::vector<Integer> t;
        for (const auto& d : grp["torsion"]) t.emplace_back(d.is_string() ? Integer(d.get<std::string>()) : Integer(d.get<std::int64_t>()));
        h.set({grp["i"].get<int>(), grp["j"].get<int>()}, AbelianGroup(grp["free_rank"].get<std::size_t>(), t));
      }
      for (int i = 0; i <= top; ++i) table << "  H^" << i << ": " << render_row(h, i);
    } else {
      table << "  " << r.error;
    }
    if (cfg.timing) table << "  (" << r.elapsed_ms << " ms)";
    table << '\n';
  }
  Json report{{"rows", std::move(json_rows)},
              {"summary", Json{{"total", rows.size()}, {"passed", passed}, {"failed", rows.size() - passed}}}};
  emit(out, cfg, report, table.str());
  return passed == rows.size() ? kOk : kCheckFailed;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bigraded chromatic cohomology of multigraphs over Z"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::size_t edge = 0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Input format")
        ->check(CLI::IsMember({"edgelist", "graph6"}))
        ->envname("CHROMCOH_FORMAT");
    sub->add_option("--output", cfg.output, "Output mode")->check(CLI::IsMember({"json", "table"}))->envname("CHROMCOH_OUTPUT");
    sub->add_option("--verify", cfg.verify, "Verification set")
        ->check(CLI::IsMember({"none", "fast", "all"}))
        ->envname("CHROMCOH_VERIFY");
    sub->add_option("--budget", cfg.budget, "Maximum edge count")->check(CLI::Range(std::size_t{1}, kMaxEdges))->envname("CHROMCOH_BUDGET");
    sub->add_option("--workers", cfg.workers, "Parallel jobs for batch")->check(CLI::PositiveNumber)->envname("CHROMCOH_WORKERS");
    sub->add_option("--seed", cfg.seed, "Seed for randomized checks")->envname("CHROMCOH_SEED");
  };
  auto input = [&](CLI::App* sub) {
    sub->add_option("--input,-i", cfg.input, "Graph file, '-' for stdin, or family:<name>:<n>")->required();
  };

  auto* compute_cmd = app.add_subcommand("compute", "Compute cohomology and run checks");
  input(compute_cmd);
  common(compute_cmd);
  compute_cmd->add_option("--dump-matrices", cfg.dump_matrices, "Write differential triplets to this file");

  auto* family_cmd = app.add_subcommand("family", "Compute a family member and compare with its closed form");
  family_cmd->add_option("name", cfg.family, "null | tree_path | cycle")
      ->required()
      ->check(CLI::IsMember({"null", "tree_path", "cycle"}));
  family_cmd->add_option("n", cfg.size, "Size (vertices for null, edges otherwise)")->required();
  common(family_cmd);

  auto* batch_cmd = app.add_subcommand("batch", "Run compute over every entry of a manifest");
  batch_cmd->add_option("--manifest,-m", cfg.manifest, "Newline-separated inputs")->required();
  batch_cmd->add_flag("--timing", cfg.timing, "Include per-row wall time");
  common(batch_cmd);

  auto* chromatic_cmd = app.add_subcommand("chromatic", "Chromatic polynomial");
  input(chromatic_cmd);
  common(chromatic_cmd);

  std::vector<CLI::App*> edge_cmds;
  for (const char* name : {"check-ses", "check-les", "check-pendant"}) {
    auto* sub = app.add_subcommand(name, "Per-edge structural check");
    input(sub);
    common(sub);
    sub->add_option("--edge,-e", edge, "Edge index (default: every applicable edge)");
    edge_cmds.push_back(sub);
  }
  auto* kunneth_cmd = app.add_subcommand("check-kunneth", "Compare H(G1 + G2) with the Kunneth formula");
  input(kunneth_cmd);
  kunneth_cmd->add_option("--input2", cfg.input2, "Second graph (default: same as --input)");
  common(kunneth_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    const int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? kOk : kUsage;
  }

  for (auto* sub : edge_cmds) {
    if (sub->parsed() && sub->count("--edge") > 0) cfg.edge = edge;
  }

  if (compute_cmd->parsed()) return cmd_compute(cfg, out, err);
  if (family_cmd->parsed()) return cmd_family(cfg, out, err);
  if (batch_cmd->parsed()) return cmd_batch(cfg, out, err);
  if (chromatic_cmd->parsed()) return cmd_chromatic(cfg, out, err);
  if (kunneth_cmd->parsed()) return cmd_check_kunneth(cfg, out, err);
  auto non_loop = [](const Graph& g, std::size_t e) { return !g.edge(e).is_loop(); };
  if (edge_cmds[0]->parsed()) {
    return run_edge_check("ses", cfg, out, err, non_loop,
                          [](const Graph& g, std::size_t e, const Limits& l) { return check_chain_ses(g, e, l); });
  }
  if (edge_cmds[1]->parsed()) {
    return run_edge_check("les", cfg, out, err, non_loop, [](const Graph& g, std::size_t e, const Limits& l) {
      return check_les_rank_consistency(g, e, l);
    });
  }
  return run_edge_check("pendant", cfg, out, err, [](const Graph& g, std::size_t e) { return is_pendant(g, e); },
                        [](const Graph& g, std::size_t e, const Limits& l) { return check_pendant_shift(g, e, l); });
}

}  // namespace chromcoh::cli

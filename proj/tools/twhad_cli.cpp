// Command-line surface: instance generators, exact oracles, certificate
// drivers and the bound-verification harness. Exit codes: 0 success,
// 1 property failure, 2 input error, 3 resource cap.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "twhad/bounds.hpp"
#include "twhad/circle.hpp"
#include "twhad/decomposition.hpp"
#include "twhad/errors.hpp"
#include "twhad/graph.hpp"
#include "twhad/grid_dichotomy.hpp"
#include "twhad/harness.hpp"
#include "twhad/io.hpp"
#include "twhad/minors.hpp"
#include "twhad/ordered.hpp"
#include "twhad/vertex_minors.hpp"

using json = nlohmann::json;
using namespace twh;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResourceCap = 3;

struct CliError {
  int code;
  json body;
};

[[noreturn]] void fail(int code, const std::string& kind, const std::string& message) {
  throw CliError{code, json{{"error", {{"kind", kind}, {"message", message}}}}};
}

Graph load_graph(const std::string& path) {
  std::istringstream in(io::read_file(path));
  return io::read_graph(in);
}

std::vector<std::vector<int>> load_model(const std::string& path) {
  std::istringstream in(io::read_file(path));
  return io::read_model(in);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string out_path(const std::string& dir, const std::string& name) {
  if (dir.empty()) return name;
  std::filesystem::create_directories(dir);
  return (std::filesystem::path(dir) / name).string();
}

// ------------------------------------------------------------------ gen

int run_gen(const std::string& kind, const std::vector<std::string>& params,
            uint64_t seed, const std::string& out) {
  auto need = [&](size_t count) {
    if (params.size() != count)
      fail(kExitInputError, "usage",
           "generator '" + kind + "' expects " + std::to_string(count) +
               " parameter(s)");
  };
  auto to_int = [&](const std::string& s) {
    try {
      return std::stoi(s);
    } catch (...) {
      fail(kExitInputError, "usage", "bad integer parameter '" + s + "'");
    }
  };
  std::string content;
  if (kind == "grid" || kind == "strong-grid") {
    need(2);
    auto gg = kind == "grid" ? make_grid(to_int(params[0]), to_int(params[1]))
                             : make_strong_grid(to_int(params[0]), to_int(params[1]));
    content = io::write_graph(gg.graph);
  } else if (kind == "path-power") {
    need(2);
    content = io::write_graph(make_path_power(to_int(params[0]), to_int(params[1])));
  } else if (kind == "random-graph") {
    need(2);
    content = io::write_graph(
        gen_random_graph(Rng(seed), to_int(params[0]), std::stod(params[1])));
  } else if (kind == "interval") {
    need(1);
    content = io::write_graph(gen_interval_graph(Rng(seed), to_int(params[0])));
  } else if (kind == "chord-diagram") {
    need(1);
    content = io::write_chord_diagram(gen_chord_diagram(Rng(seed), to_int(params[0])));
  } else if (kind == "outer-string") {
    need(2);
    content = io::write_string_diagram(
        gen_outer_string(Rng(seed), to_int(params[0]), to_int(params[1])));
  } else if (kind == "perturbation") {
    need(2);
    content = io::write_matrix(
        gen_perturbation_matrix(Rng(seed), to_int(params[0]), to_int(params[1])));
  } else {
    fail(kExitInputError, "usage", "unknown generator kind '" + kind + "'");
  }
  if (out.empty())
    std::cout << content;
  else
    io::write_file(out, content);
  return kExitOk;
}

// ------------------------------------------------------------- tw / had

int run_tw(const std::string& graph_path, const std::string& td_path, int cap) {
  Graph g = load_graph(graph_path);
  auto result = treewidth_exact(g, cap);
  if (!td_path.empty()) {
    io::write_file(td_path, io::write_decomposition(g, result.decomposition));
    // re-validate from disk before reporting success
    std::istringstream in(io::read_file(td_path));
    auto back = io::read_decomposition(in);
    if (td_validate(g, back) != result.width)
      fail(kExitPropertyFailure, "validation",
           "written decomposition fails re-validation");
  }
  emit(json{{"n", g.vertex_count()}, {"m", g.edge_count()}, {"tw", result.width}});
  return kExitOk;
}

int run_had(const std::string& graph_path, const std::string& model_path, int cap) {
  Graph g = load_graph(graph_path);
  auto result = hadwiger_witness(g, cap);
  if (!model_path.empty()) {
    io::write_file(model_path, io::write_model(result.witness.branch_sets));
    auto back = load_model(model_path);
    validate_model(g, MinorModel{complete_graph(result.number), back});
  }
  emit(json{{"n", g.vertex_count()}, {"m", g.edge_count()}, {"had", result.number}});
  return kExitOk;
}

// ------------------------------------------------------------ dichotomy

int run_dichotomy(int k, int t, const std::string& jumps_path, double random_jumps,
                  uint64_t seed, const std::string& out) {
  int side = t * (2 * k + 1);
  auto [grid, coords] = make_grid(side, side);
  auto edges = grid.edges();
  if (!jumps_path.empty()) {
    Graph jumps = load_graph(jumps_path);
    if (jumps.vertex_count() != side * side)
      fail(kExitInputError, "usage",
           "jump overlay must live on " + std::to_string(side * side) + " vertices");
    auto extra = jumps.edges();
    edges.insert(edges.end(), extra.begin(), extra.end());
  }
  if (random_jumps > 0) {
    Rng rng(seed);
    for (int a = 0; a < t; ++a)
      for (int b = 0; b < t; ++b)
        for (int r1 = a * (2 * k + 1) + 2; r1 <= (a + 1) * (2 * k + 1) - 1; ++r1)
          for (int c1 = b * (2 * k + 1) + 2; c1 <= (b + 1) * (2 * k + 1) - 1; ++c1)
            for (int r2 = r1; r2 <= (a + 1) * (2 * k + 1) - 1; ++r2)
              for (int c2 = b * (2 * k + 1) + 2; c2 <= (b + 1) * (2 * k + 1) - 1; ++c2) {
                if (std::abs(r1 - r2) < 2 && std::abs(c1 - c2) < 2) continue;
                if (!rng.chance(random_jumps)) continue;
                int u = coords.vertex(r1, c1), v = coords.vertex(r2, c2);
                edges.push_back({std::min(u, v), std::max(u, v)});
              }
  }
  DichotomyInput input{Graph(side * side, edges), coords, k, t};
  auto result = grid_dichotomy(input);

  io::write_file(out_path(out, "host.graph"), io::write_graph(input.host));
  json res{{"k", k}, {"t", t}, {"n", input.host.vertex_count()}};
  std::string cert = out_path(out, "certificate.model");
  if (result.induced_grid) {
    io::write_file(cert, io::write_model(result.induced_grid->branch_sets));
    res["branch"] = "induced-grid";
    res["block"] = {result.jump_free_block->first, result.jump_free_block->second};
    validate_model(input.host,
                   InducedMinorModel{make_grid(k, k).graph, load_model(cert)});
  } else {
    io::write_file(cert, io::write_model(result.clique->branch_sets));
    res["branch"] = "clique";
    validate_model(input.host, MinorModel{complete_graph(t), load_model(cert)});
  }
  res["certificate"] = cert;
  res["validated"] = true;
  io::write_file(out_path(out, "result.json"), res.dump(2) + "\n");
  emit(res);
  return kExitOk;
}

// ------------------------------------------------------------ separator

int run_separator(const std::string& mode, const std::string& input_path,
                  const std::string& matrix_path, int t, const std::string& out) {
  json res{{"mode", mode}, {"t", t}};
  std::string sep_path = out_path(out, "separation.txt");
  std::string model_path = out_path(out, "clique.model");
  if (mode == "xfree") {
    std::istringstream in(io::read_file(input_path));
    auto og = io::read_ordered_graph(in);
    std::vector<int> x;
    for (int v = 0; v < 12 * t && v < og.graph.vertex_count(); ++v) x.push_back(v);
    auto result = xfree_separator_or_clique(og, x, t);
    if (result.separation) {
      io::write_file(sep_path, io::write_separation(*result.separation));
      std::istringstream back(io::read_file(sep_path));
      auto sep = io::read_separation(back);
      validate_separation(og.graph, sep);
      if (!is_alpha_balanced(og.graph, sep, x, Rational(3, 4)) ||
          sep.order() >= 3 * t)
        fail(kExitPropertyFailure, "validation", "separation fails its contract");
      res["branch"] = "separation";
      res["order"] = sep.order();
      res["certificate"] = sep_path;
    } else {
      io::write_file(model_path, io::write_model(result.clique->branch_sets));
      validate_model(og.graph,
                     MinorModel{complete_graph(t + 1), load_model(model_path)});
      res["branch"] = "clique";
      res["certificate"] = model_path;
    }
  } else if (mode == "circle") {
    std::istringstream in(io::read_file(input_path));
    auto cd = io::read_chord_diagram(in);
    int n = (int)cd.chords.size();
    PerturbationModel model{1, LoopyGraph{1, {}}, std::vector<int>(n, 0)};
    if (!matrix_path.empty()) {
      std::istringstream min(io::read_file(matrix_path));
      auto matrix = io::read_matrix(min);
      if (matrix.n != n)
        fail(kExitInputError, "usage", "matrix size differs from the chord count");
      model = perturbation_model_from_matrix(matrix);
    }
    long long need = 4LL * model.k * model.k * (4 * model.k + 9) * t;
    if (need > n)
      fail(kExitInputError, "usage",
           "instance too small: needs " + std::to_string(need) + " chords");
    std::vector<int> x;
    for (int v = 0; v < (int)need; ++v) x.push_back(v);
    auto result = perturbed_separator_or_clique(cd, model, x, t);
    Graph g = apply_perturbation(crossing_graph(cd), model);
    if (result.separation) {
      io::write_file(sep_path, io::write_separation(*result.separation));
      std::istringstream back(io::read_file(sep_path));
      auto sep = io::read_separation(back);
      validate_separation(g, sep);
      res["branch"] = "separation";
      res["order"] = sep.order();
      res["certificate"] = sep_path;
    } else {
      io::write_file(model_path, io::write_model(result.clique->branch_sets));
      validate_model(g, MinorModel{complete_graph(t + 1), load_model(model_path)});
      res["branch"] = "clique";
      res["certificate"] = model_path;
    }
    res["route"] = static_cast<int>(result.route);
  } else {
    fail(kExitInputError, "usage", "separator mode must be xfree or circle");
  }
  res["validated"] = true;
  io::write_file(out_path(out, "result.json"), res.dump(2) + "\n");
  emit(res);
  return kExitOk;
}

// ------------------------------------------------------------------- vm

int run_vm(const std::string& mode, const std::string& graph_path,
           const std::string& pattern_path, const std::string& model_path,
           int length, const std::string& input_path, const std::string& out) {
  json res{{"mode", mode}};
  std::string steps_path = out_path(out, "steps.txt");
  if (mode == "minor") {
    Graph g = load_graph(graph_path);
    Graph h = load_graph(pattern_path);
    MinorModel m{h, load_model(model_path)};
    if (length < 2)
      fail(kExitInputError, "usage", "subdivision length must be at least 2");
    auto sub = subdivide_uniform(g, length);
    auto red = minor_to_vm_sequence(g, m, sub);
    io::write_file(steps_path, io::write_steps(red.steps));
    io::write_file(out_path(out, "subdivision.graph"), io::write_graph(sub.graph));
    std::istringstream back(io::read_file(steps_path));
    auto replay = apply_vm_sequence(sub.graph, io::read_steps(back));
    std::vector<int> position(sub.graph.vertex_count(), -1);
    for (int i = 0; i < (int)replay.labels.size(); ++i)
      position[replay.labels[i]] = i;
    for (int p = 0; p < h.vertex_count(); ++p)
      for (int q = p + 1; q < h.vertex_count(); ++q)
        if (replay.graph.has_edge(position[red.image[p]], position[red.image[q]]) !=
            h.has_edge(p, q))
          fail(kExitPropertyFailure, "validation",
               "replayed sequence does not realise the pattern");
    res["steps"] = (int)red.steps.size();
    res["image"] = red.image;
  } else if (mode == "maxdeg3") {
    Graph g = load_graph(graph_path);
    Graph h = load_graph(pattern_path);
    InducedMinorModel m{subdivide_uniform(h, 4).graph, load_model(model_path)};
    auto wit = maxdeg3_vm_from_3subdivision(g, h, m);
    io::write_file(steps_path, io::write_steps(wit.steps));
    std::istringstream back(io::read_file(steps_path));
    auto replay = apply_vm_sequence(g, io::read_steps(back));
    std::vector<int> position(g.vertex_count(), -1);
    for (int i = 0; i < (int)replay.labels.size(); ++i)
      position[replay.labels[i]] = i;
    std::vector<int> declared;
    for (int v : wit.branch_vertex) declared.push_back(position[v]);
    if (!recognize_proper_subdivision(replay.graph, h, declared))
      fail(kExitPropertyFailure, "validation",
           "replayed sequence is not a proper subdivision of the pattern");
    res["steps"] = (int)wit.steps.size();
    res["branch_vertices"] = wit.branch_vertex;
  } else if (mode == "crossings") {
    std::istringstream in(io::read_file(input_path));
    auto d = io::read_drawing(in);
    auto outp = eliminate_crossings_vm(d);
    io::write_file(steps_path, io::write_steps(outp.steps));
    io::write_file(out_path(out, "augmented.graph"), io::write_graph(outp.augmented));
    io::write_file(out_path(out, "underlying.graph"), io::write_graph(outp.underlying));
    std::istringstream back(io::read_file(steps_path));
    auto replay = apply_vm_sequence(outp.augmented, io::read_steps(back));
    std::vector<int> position(outp.augmented.vertex_count(), -1);
    for (int i = 0; i < (int)replay.labels.size(); ++i)
      position[replay.labels[i]] = i;
    std::vector<int> declared;
    for (int v : outp.vertex_ids) declared.push_back(position[v]);
    if (!recognize_proper_subdivision(replay.graph, outp.underlying, declared))
      fail(kExitPropertyFailure, "validation",
           "crossing elimination did not leave a proper subdivision");
    res["steps"] = (int)outp.steps.size();
    res["crossings"] = (int)d.crossings.size();
  } else {
    fail(kExitInputError, "usage", "vm mode must be minor, maxdeg3 or crossings");
  }
  res["validated"] = true;
  io::write_file(out_path(out, "result.json"), res.dump(2) + "\n");
  emit(res);
  return kExitOk;
}

// -------------------------------------------------------------- perturb

int run_perturb(const std::string& matrix_path, const std::string& graph_path,
                const std::string& out) {
  std::istringstream min(io::read_file(matrix_path));
  auto matrix = io::read_matrix(min);
  auto model = perturbation_model_from_matrix(matrix);
  json res{{"k", model.k}, {"rank", gf2_rank(matrix)}, {"zeta", model.zeta}};
  json h_edges = json::array();
  for (auto [u, v] : model.h.edges) h_edges.push_back({u, v});
  res["h"] = h_edges;
  if (!graph_path.empty()) {
    Graph g0 = load_graph(graph_path);
    auto g = apply_perturbation(g0, model);
    std::string path = out_path(out, "perturbed.graph");
    io::write_file(path, io::write_graph(g));
    res["perturbed"] = path;
  }
  emit(res);
  return kExitOk;
}

// --------------------------------------------------------- verify-bound

int run_verify_bound(const std::string& family_name, int trials, uint64_t seed,
                     int max_n, bool json_out, const std::string& out) {
  auto family = bound_family_from_name(family_name);
  if (!family)
    fail(kExitInputError, "usage", "unknown bound family '" + family_name + "'");
  VerifyOptions options;
  options.trials = trials;
  options.seed = seed;
  options.max_n = max_n;
  auto report = verify_bound(*family, options);
  if (!out.empty()) {
    io::write_file(out_path(out, "report.jsonl"), report.to_json_lines());
    io::write_file(out_path(out, "summary.csv"), report.to_csv_summary());
  }
  if (json_out)
    emit(json{{"family", family_name},
              {"trials", report.trials},
              {"failures", report.failures},
              {"skipped", report.skipped},
              {"max_ratio", report.max_ratio.str()}});
  else
    std::cout << report.to_json_lines();
  if (report.trials > 0 && report.skipped * 20 >= report.trials)
    fail(kExitResourceCap, "cap", "more than 5% of instances were skipped");
  return report.failures == 0 ? kExitOk : kExitPropertyFailure;
}

// ------------------------------------------------------------- validate

int run_validate(const std::string& kind, const std::string& target,
                 const std::string& graph_path, const std::string& pattern_path,
                 bool induced) {
  json res{{"kind", kind}, {"target", target}};
  if (kind == "graph") {
    load_graph(target);
  } else if (kind == "td") {
    Graph g = load_graph(graph_path);
    std::istringstream in(io::read_file(target));
    res["width"] = td_validate(g, io::read_decomposition(in));
  } else if (kind == "model") {
    Graph g = load_graph(graph_path);
    Graph h = load_graph(pattern_path);
    auto sets = load_model(target);
    if (induced)
      validate_model(g, InducedMinorModel{h, sets});
    else
      validate_model(g, MinorModel{h, sets});
  } else if (kind == "separation") {
    Graph g = load_graph(graph_path);
    std::istringstream in(io::read_file(target));
    auto sep = io::read_separation(in);
    validate_separation(g, sep);
    res["order"] = sep.order();
  } else if (kind == "ordered") {
    std::istringstream in(io::read_file(target));
    auto og = io::read_ordered_graph(in);
    res["xfree"] = is_x_free(og).xfree;
  } else if (kind == "diagram") {
    std::istringstream in(io::read_file(target));
    io::read_string_diagram(in);
  } else if (kind == "chord-diagram") {
    std::istringstream in(io::read_file(target));
    io::read_chord_diagram(in);
  } else if (kind == "matrix") {
    std::istringstream in(io::read_file(target));
    io::read_matrix(in);
  } else {
    fail(kExitInputError, "usage", "unknown validation kind '" + kind + "'");
  }
  res["valid"] = true;
  emit(res);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certificate toolkit for treewidth/Hadwiger experiments"};
  app.require_subcommand(1);

  uint64_t seed = 1;
  int trials = 100, max_n = 12, cap = 20;
  std::string out, graph_path, pattern_path, model_path, input_path, matrix_path;
  bool json_out = false;

  // gen
  auto* gen = app.add_subcommand("gen", "generate an instance file");
  std::string gen_kind;
  std::vector<std::string> gen_params;
  gen->add_option("kind", gen_kind)->required();
  gen->add_option("params", gen_params);
  gen->add_option("--seed", seed);
  gen->add_option("--out", out);

  // tw
  auto* tw_cmd = app.add_subcommand("tw", "exact treewidth with witness");
  std::string td_path;
  tw_cmd->add_option("graph", graph_path)->required();
  tw_cmd->add_option("--td", td_path);
  tw_cmd->add_option("--max-n", cap);

  // had
  auto* had_cmd = app.add_subcommand("had", "exact Hadwiger number with witness");
  had_cmd->add_option("graph", graph_path)->required();
  had_cmd->add_option("--model", model_path);
  had_cmd->add_option("--max-n", cap);

  // dichotomy
  auto* dich = app.add_subcommand("dichotomy", "induced grid or clique certificate");
  int dk = 1, dt = 1;
  std::string jumps_path;
  double random_jumps = 0;
  dich->add_option("--k", dk)->required();
  dich->add_option("--t", dt)->required();
  dich->add_option("--jumps", jumps_path);
  dich->add_option("--random-jumps", random_jumps);
  dich->add_option("--seed", seed);
  dich->add_option("--out", out);

  // separator
  auto* sep = app.add_subcommand("separator", "balanced separation or clique minor");
  std::string sep_mode;
  int sep_t = 1;
  sep->add_option("--mode", sep_mode)->required();
  sep->add_option("--input", input_path)->required();
  sep->add_option("--matrix", matrix_path);
  sep->add_option("--t", sep_t)->required();
  sep->add_option("--out", out);

  // vm
  auto* vm = app.add_subcommand("vm", "vertex-minor step sequences");
  std::string vm_mode;
  int vm_length = 2;
  vm->add_option("--mode", vm_mode)->required();
  vm->add_option("--graph", graph_path);
  vm->add_option("--pattern", pattern_path);
  vm->add_option("--model", model_path);
  vm->add_option("--length", vm_length);
  vm->add_option("--input", input_path);
  vm->add_option("--out", out);

  // perturb
  auto* pert = app.add_subcommand("perturb", "colour model from a GF(2) matrix");
  pert->add_option("--matrix", matrix_path)->required();
  pert->add_option("--graph", graph_path);
  pert->add_option("--out", out);

  // verify-bound
  auto* verify = app.add_subcommand("verify-bound", "run a bound experiment");
  std::string family;
  verify->add_option("--family", family)->required();
  verify->add_option("--trials", trials);
  verify->add_option("--seed", seed);
  verify->add_option("--max-n", max_n);
  verify->add_flag("--json", json_out);
  verify->add_option("--out", out);

  // validate
  auto* val = app.add_subcommand("validate", "re-validate a certificate file");
  std::string val_kind, val_target;
  bool val_induced = false;
  val->add_option("--kind", val_kind)->required();
  val->add_option("target", val_target)->required();
  val->add_option("--graph", graph_path);
  val->add_option("--pattern", pattern_path);
  val->add_flag("--induced", val_induced);

  CLI11_PARSE(app, argc, argv);

  try {
    try {
      if (gen->parsed()) return run_gen(gen_kind, gen_params, seed, out);
      if (tw_cmd->parsed()) return run_tw(graph_path, td_path, cap);
      if (had_cmd->parsed()) return run_had(graph_path, model_path, cap);
      if (dich->parsed())
        return run_dichotomy(dk, dt, jumps_path, random_jumps, seed, out);
      if (sep->parsed())
        return run_separator(sep_mode, input_path, matrix_path, sep_t, out);
      if (vm->parsed())
        return run_vm(vm_mode, graph_path, pattern_path, model_path, vm_length,
                      input_path, out);
      if (pert->parsed()) return run_perturb(matrix_path, graph_path, out);
      if (verify->parsed())
        return run_verify_bound(family, trials, seed, max_n, json_out, out);
      if (val->parsed())
        return run_validate(val_kind, val_target, graph_path, pattern_path,
                            val_induced);
      fail(kExitInputError, "usage", "no subcommand given");
    } catch (const ParseError& e) {
      fail(kExitInputError, "parse", e.what());
    } catch (const ResourceLimitError& e) {
      fail(kExitResourceCap, "cap", e.what());
    } catch (const ValidationError& e) {
      fail(kExitPropertyFailure, "validation", e.what());
    } catch (const NoSeparatorError& e) {
      fail(kExitPropertyFailure, "no-separator", e.what());
    } catch (const OracleContractError& e) {
      fail(kExitPropertyFailure, "oracle-contract", e.what());
    } catch (const StructuralError& e) {
      fail(kExitPropertyFailure, "structural", e.what());
    } catch (const std::invalid_argument& e) {
      fail(kExitInputError, "usage", e.what());
    }
  } catch (const CliError& e) {
    std::cout << e.body.dump(2) << "\n";
    return e.code;
  }
  return kExitOk;
}

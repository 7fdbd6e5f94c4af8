#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "eop/bounds.hpp"
#include "eop/conflict.hpp"
#include "eop/error.hpp"
#include "eop/exact.hpp"
#include "eop/gadgets.hpp"
#include "eop/generators.hpp"
#include "eop/io.hpp"
#include "eop/predicates.hpp"
#include "eop/report.hpp"
#include "eop/tree.hpp"

namespace eop {

namespace {

using Clock = std::chrono::steady_clock;

double millis(Clock::duration d) {
  return std::chrono::duration<double, std::milli>(d).count();
}

struct Outcome {
  Json report;
  std::string summary;
};

Json envelope(std::string_view command) {
  return Json{{"schema_version", kReportSchemaVersion}, {"command", std::string(command)}};
}

Outcome finish(Json report, bool ok, std::string summary) {
  report["ok"] = ok;
  return {std::move(report), std::move(summary)};
}

Outcome cmd_solve(const std::string& file, const std::string& method, const SolverOptions& opts) {
  const Graph g = read_graph_file(file);
  const bool tree = structural_predicates(g).tree;
  const std::string used = method == "auto" ? (tree ? "tree" : "exact") : method;

  Json r = envelope("solve");
  r["input"] = graph_stats(g);
  r["method"] = used;
  std::int64_t value = 0;
  EopSet witness;
  const auto start = Clock::now();
  if (used == "tree") {
    const RootedTree t = root_tree(g, 0);
    const auto rec = dp_pass(t);
    value = rec[static_cast<std::size_t>(t.root())].rho;
    witness = reconstruct(t, rec);
  } else {
    const EdgeSetResult exact = eop_number_exact(g, opts);
    value = exact.value;
    witness = exact.witness;
    r["nodes_explored"] = exact.nodes_explored;
  }
  const auto elapsed = Clock::now() - start;
  const bool valid = is_eop_set(g, witness);
  r["rho_eo"] = value;
  r["witness"] = edge_pairs(g, witness);
  r["witness_valid"] = valid;
  r["elapsed_ms"] = millis(elapsed);
  const bool ok = valid && static_cast<std::int64_t>(witness.size()) == value;
  return finish(std::move(r), ok,
                "solve: rho_eo = " + std::to_string(value) + " via " + used);
}

Outcome cmd_verify(const std::string& file, const std::string& pairs) {
  const Graph g = read_graph_file(file);
  const EopSet set = read_edge_pairs_file(pairs, g);
  const auto conflict = find_conflict(g, set);
  Json r = envelope("verify");
  r["input"] = graph_stats(g);
  r["size"] = set.size();
  r["valid"] = !conflict;
  if (conflict) {
    const Edge a = g.edge(conflict->first);
    const Edge b = g.edge(conflict->second);
    r["conflict"] = Json{{"edges", {{a.u + 1, a.v + 1}, {b.u + 1, b.v + 1}}},
                         {"common_edge", {conflict->common.u + 1, conflict->common.v + 1}}};
  } else {
    r["conflict"] = nullptr;
  }
  return finish(std::move(r), !conflict,
                std::string("verify: ") + (conflict ? "not an EOP set" : "valid EOP set") +
                    " of size " + std::to_string(set.size()));
}

Outcome cmd_alpha(const std::string& file, const SolverOptions& opts) {
  const Graph g = read_graph_file(file);
  const MisResult mis = max_independent_set(g, opts);
  Json r = envelope("alpha");
  r["input"] = graph_stats(g);
  r["alpha"] = mis.value;
  r["witness"] = vertex_labels(mis.witness);
  r["nodes_explored"] = mis.nodes_explored;
  r["elapsed_ms"] = millis(mis.elapsed);
  return finish(std::move(r), is_independent_set(g, mis.witness),
                "alpha: " + std::to_string(mis.value));
}

Outcome cmd_gadget(const std::string& kind_text, const std::string& file, const std::string& out,
                   bool verify, const SolverOptions& opts) {
  const auto kind = parse_gadget_kind(kind_text);
  if (!kind) throw Error(ErrorKind::InvalidArgument, "unknown gadget kind " + kind_text);
  const Graph g = read_graph_file(file);
  const GadgetOutput h = build_gadget(g, *kind);

  Json r = envelope("gadget");
  r["kind"] = std::string(to_string(*kind));
  r["input"] = graph_stats(g);
  r["gadget"] = graph_stats(h.graph);
  r["predicted_offset"] = h.predicted_offset;
  if (!out.empty()) {
    const std::string names_path = out + ".names";
    write_graph_file(out, h.graph);
    std::ofstream names(names_path, std::ios::binary);
    if (!names) throw Error(ErrorKind::InvalidArgument, "cannot write " + names_path);
    write_name_map(names, h.names);
    r["out"] = Json{{"graph", out}, {"names", names_path}};
  } else {
    r["graph"] = graph_json(h.graph);
    Json names = Json::array();
    for (Vertex v = 0; v < h.names.size(); ++v) names.push_back({h.names.name(v), v + 1});
    r["names"] = std::move(names);
  }
  bool ok = true;
  std::string summary = "gadget: " + kind_text + " with " + std::to_string(h.graph.order()) +
                        " vertices, " + std::to_string(h.graph.size()) + " edges";
  if (verify) {
    const ReductionReport rep = verify_reduction(g, *kind, opts);
    r["verification"] = to_json(rep);
    ok = rep.passed();
    summary += rep.passed() ? ", identity verified" : ", VERIFICATION FAILED";
    if (!rep.exact_mode()) summary += " (witness-only)";
  }
  return finish(std::move(r), ok, summary);
}

Outcome cmd_bounds(const std::string& file, const SolverOptions& opts) {
  const Graph g = read_graph_file(file);
  const DeltaBound bound = delta_bound_check(g, opts);
  const CharacterizationCheck chr = check_char_theorem(g, opts);
  Json r = envelope("bounds");
  r["input"] = graph_stats(g);
  r["delta_bound"] = to_json(bound);
  r["characterization"] = to_json(chr);
  return finish(std::move(r), bound.bound_holds && chr.consistent,
                "bounds: rho_eo*delta = " + std::to_string(bound.rho * bound.min_degree) +
                    (bound.is_tight ? " = m (tight)" : " < m"));
}

Outcome cmd_removal(const std::string& file, const SolverOptions& opts) {
  const Graph g = read_graph_file(file);
  const RemovalProfile p = edge_removal_profile(g, opts);
  Json r = envelope("removal");
  r["input"] = graph_stats(g);
  r["profile"] = to_json(g, p);
  return finish(std::move(r), p.bounds_ok,
                "removal: rho_eo = " + std::to_string(p.rho_before) + ", bounds " +
                    (p.bounds_ok ? "hold" : "VIOLATED"));
}

Outcome cmd_realize(std::int64_t a, std::int64_t b, const std::string& out,
                    const SolverOptions& opts) {
  const Realization real = build_removal_realization(a, b);
  const EdgeId id = *real.graph.find_edge(real.edge.u, real.edge.v);
  const std::int64_t before = eop_number_exact(real.graph, opts).value;
  const std::int64_t after = eop_number_exact(remove_edge(real.graph, id), opts).value;
  const bool ok = before == b && after == a;

  Json r = envelope("realize");
  r["a"] = a;
  r["b"] = b;
  r["edge"] = {real.edge.u + 1, real.edge.v + 1};
  r["input"] = graph_stats(real.graph);
  if (!out.empty()) {
    write_graph_file(out, real.graph);
    r["out"] = out;
  } else {
    r["graph"] = graph_json(real.graph);
  }
  r["rho_eo"] = before;
  r["rho_eo_after_removal"] = after;
  r["verified"] = ok;
  return finish(std::move(r), ok,
                "realize: rho_eo(G) = " + std::to_string(before) + ", rho_eo(G-e) = " +
                    std::to_string(after));
}

FamilyFPattern parse_sizes(Vertex k, const std::string& sizes) {
  std::vector<Vertex> parts;
  std::stringstream ss(sizes);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      parts.push_back(static_cast<Vertex>(std::stoi(item, &used)));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, "--sizes expects |A|,|B|,|C|, got " + sizes);
    }
  }
  if (parts.size() != 3) {
    throw Error(ErrorKind::InvalidArgument, "--sizes expects |A|,|B|,|C|, got " + sizes);
  }
  return FamilyFPattern{k, parts[0], parts[1], parts[2]};
}

Outcome cmd_family_f(Vertex k, const std::string& sizes, const std::string& out,
                     const SolverOptions& opts) {
  const FamilyFInstance inst = build_family_f(parse_sizes(k, sizes));
  const DeltaBound bound = delta_bound_check(inst.graph, opts);
  const auto recognized = recognize_family_f(inst.graph);
  const bool witness_ok = is_family_f_witness(inst.graph, inst.witness);

  Json r = envelope("family-f");
  r["k"] = k;
  r["input"] = graph_stats(inst.graph);
  if (!out.empty()) {
    write_graph_file(out, inst.graph);
    r["out"] = out;
  } else {
    r["graph"] = graph_json(inst.graph);
  }
  r["witness"] = to_json(inst.witness);
  r["witness_valid"] = witness_ok;
  r["delta_bound"] = to_json(bound);
  r["recognized"] = recognized.has_value();
  const bool ok = bound.is_tight && recognized.has_value() && witness_ok;
  return finish(std::move(r), ok,
                "family-f: rho_eo = " + std::to_string(bound.rho) +
                    (bound.is_tight ? " = m/delta" : " != m/delta"));
}

Outcome cmd_charsmall(const std::string& file, const SolverOptions& opts) {
  const Graph g = read_graph_file(file);
  const SmallRhoReport rep = check_rho_small_characterizations(g, opts);
  Json r = envelope("charsmall");
  r["input"] = graph_stats(g);
  r["report"] = to_json(rep);
  return finish(std::move(r), !rep.mismatch(),
                "charsmall: rho_eo = " + std::to_string(rep.rho) +
                    (rep.mismatch() ? ", characterization MISMATCH" : ", characterizations agree"));
}

template <class Fn>
double best_of(int repeat, Fn&& fn) {
  double best = 0;
  for (int i = 0; i < repeat; ++i) {
    const auto start = Clock::now();
    fn();
    const double ms = millis(Clock::now() - start);
    if (i == 0 || ms < best) best = ms;
  }
  return best;
}

Outcome cmd_bench_tree(const std::vector<Vertex>& sizes, std::uint64_t seed, int repeat) {
  if (sizes.empty()) throw Error(ErrorKind::InvalidArgument, "--n needs at least one size");
  if (repeat < 1) throw Error(ErrorKind::InvalidArgument, "--repeat must be positive");
  Json rows = Json::array();
  bool agree = true;
  double prev_ms = 0;
  Vertex prev_n = 0;
  for (Vertex n : sizes) {
    Rng rng(seed);
    const Graph g = random_tree(n, rng);
    std::int32_t serial_rho = 0;
    std::int32_t parallel_rho = 0;
    const double serial_ms = best_of(repeat, [&] {
      const RootedTree t = root_tree(g, 0);
      serial_rho = dp_pass(t)[0].rho;
    });
    const double parallel_ms = best_of(repeat, [&] {
      const RootedTree t = root_tree(g, 0);
      parallel_rho = dp_pass_parallel(t)[0].rho;
    });
    agree = agree && serial_rho == parallel_rho;
    Json row{{"n", n},
             {"rho_eo", serial_rho},
             {"serial_ms", serial_ms},
             {"parallel_ms", parallel_ms},
             {"serial_ns_per_vertex", serial_ms * 1e6 / n}};
    if (prev_n > 0 && prev_ms > 0) {
      row["time_ratio_vs_previous"] = serial_ms / prev_ms;
      row["size_ratio_vs_previous"] = static_cast<double>(n) / prev_n;
    }
    rows.push_back(std::move(row));
    prev_ms = serial_ms;
    prev_n = n;
  }
  Json r = envelope("bench-tree");
  r["seed"] = seed;
  r["repeat"] = repeat;
  r["rows"] = std::move(rows);
  return finish(std::move(r), agree,
                "bench-tree: " + std::to_string(sizes.size()) + " sizes timed");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Edge open packing toolkit", "eop"};
  app.require_subcommand(1);
  std::uint64_t budget = SolverOptions{}.node_budget;
  app.add_option("--budget", budget, "Node budget for exact solves")->capture_default_str();

  std::function<Outcome()> action;
  std::string file;
  std::string out_path;

  auto* solve = app.add_subcommand("solve", "EOP number and a maximum EOP set");
  std::string method = "auto";
  solve->add_option("file", file, "Graph file")->required();
  solve->add_option("--method", method, "exact, tree or auto")
      ->check(CLI::IsMember({"exact", "tree", "auto"}))
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Check a claimed EOP set");
  std::string pairs;
  verify->add_option("file", file, "Graph file")->required();
  verify->add_option("--set", pairs, "Edge pairs file, one 'u v' per line")->required();

  auto* alpha = app.add_subcommand("alpha", "Independence number and a maximum independent set");
  alpha->add_option("file", file, "Graph file")->required();

  auto* gadget = app.add_subcommand("gadget", "Build a reduction gadget");
  std::string kind;
  bool run_verify = false;
  gadget->add_option("kind", kind, "universal, eulerian or planar")
      ->required()
      ->check(CLI::IsMember({"universal", "eulerian", "planar"}));
  gadget->add_option("file", file, "Source graph file")->required();
  gadget->add_option("--out", out_path, "Write the gadget here and its name map to <out>.names");
  gadget->add_flag("--verify", run_verify, "Check the gadget identity against exact solves");

  auto* bounds = app.add_subcommand("bounds", "m/delta bound and its extremal characterization");
  bounds->add_option("file", file, "Graph file")->required();

  auto* removal = app.add_subcommand("removal", "EOP number after removing each edge");
  removal->add_option("file", file, "Graph file")->required();

  auto* realize = app.add_subcommand("realize", "Graph G and edge e with rho(G)=b, rho(G-e)=a");
  std::int64_t a = 0;
  std::int64_t b = 0;
  realize->add_option("--a", a, "Target rho(G - e)")->required();
  realize->add_option("--b", b, "Target rho(G)")->required();
  realize->add_option("--out", out_path, "Write the graph here");

  auto* family = app.add_subcommand("family-f", "Generate a tight member of the extremal family");
  Vertex k = 2;
  std::string sizes;
  family->add_option("--k", k, "Minimum degree k >= 2")->required();
  family->add_option("--sizes", sizes, "|A|,|B|,|C|")->required();
  family->add_option("--out", out_path, "Write the graph here");

  auto* charsmall = app.add_subcommand("charsmall", "Check the rho = 1 and rho = 2 characterizations");
  charsmall->add_option("file", file, "Graph file (connected)")->required();

  auto* bench = app.add_subcommand("bench-tree", "Time the tree solver on random trees");
  std::vector<Vertex> bench_sizes;
  std::uint64_t seed = 0;
  int repeat = 3;
  bench->add_option("--n", bench_sizes, "Tree sizes")->required();
  bench->add_option("--seed", seed, "RNG seed")->capture_default_str();
  bench->add_option("--repeat", repeat, "Timing repetitions (best is kept)")->capture_default_str();

  SolverOptions opts;
  solve->callback([&] { action = [&] { return cmd_solve(file, method, opts); }; });
  verify->callback([&] { action = [&] { return cmd_verify(file, pairs); }; });
  alpha->callback([&] { action = [&] { return cmd_alpha(file, opts); }; });
  gadget->callback(
      [&] { action = [&] { return cmd_gadget(kind, file, out_path, run_verify, opts); }; });
  bounds->callback([&] { action = [&] { return cmd_bounds(file, opts); }; });
  removal->callback([&] { action = [&] { return cmd_removal(file, opts); }; });
  realize->callback([&] { action = [&] { return cmd_realize(a, b, out_path, opts); }; });
  family->callback([&] { action = [&] { return cmd_family_f(k, sizes, out_path, opts); }; });
  charsmall->callback([&] { action = [&] { return cmd_charsmall(file, opts); }; });
  bench->callback([&] { action = [&] { return cmd_bench_tree(bench_sizes, seed, repeat); }; });

  std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    out << error_report("usage", e.what()).dump(2) << '\n';
    err << "eop: " << e.what() << '\n';
    return 2;
  }
  opts.node_budget = budget;

  try {
    Outcome result = action();
    const bool ok = result.report["ok"].get<bool>();
    out << result.report.dump(2) << '\n';
    err << result.summary << '\n';
    return ok ? 0 : 1;
  } catch (const Error& e) {
    out << error_report(to_string(e.kind()), e.what()).dump(2) << '\n';
    err << "eop: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    out << error_report("internal", e.what()).dump(2) << '\n';
    err << "eop: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace eop

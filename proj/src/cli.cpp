#include "planarflow/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "planarflow/bench.hpp"
#include "planarflow/generators.hpp"
#include "planarflow/instance_io.hpp"
#include "planarflow/ms_maxflow.hpp"
#include "planarflow/oracle.hpp"
#include "planarflow/preflow_converter.hpp"
#include "planarflow/segmentation.hpp"

namespace planarflow {

namespace {

ValueRule parse_rule(const std::string& spec) {
  if (spec == "inf") return ValueRule::infinite();
  if (spec.rfind("const:", 0) == 0) {
    std::istringstream rest(spec.substr(6));
    long long v;
    std::string extra;
    if ((rest >> v) && v >= 0 && !(rest >> extra))
      return ValueRule::constant_of(v);
  } else if (spec.rfind("uniform:", 0) == 0) {
    std::string body = spec.substr(8);
    for (char& c : body)
      if (c == ':') c = ' ';
    std::istringstream rest(body);
    long long lo, hi;
    std::string extra;
    if ((rest >> lo >> hi) && !(rest >> extra) && 0 <= lo && lo <= hi)
      return ValueRule::uniform(lo, hi);
  }
  throw Error("bad value rule '" + spec +
              "' (use const:<v>, uniform:<lo>:<hi>, or inf)");
}

void dump_record(const DecompositionRecord& rec, const std::string& path) {
  nlohmann::json lines;
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  for (size_t i = 0; i < rec.iterations.size(); ++i) {
    const IterationRecord& it = rec.iterations[i];
    nlohmann::json j{{"i", i + 1},
                     {"separator", it.separator},
                     {"enclosed", it.enclosed_count},
                     {"h_nodes", it.h_nodes.size()},
                     {"h_arcs", it.h_arcs.size()},
                     {"c_cycle", it.c_cycle},
                     {"b_cycles", it.b_cycles},
                     {"g_after", it.g_size_after},
                     {"lemma2", it.lemma2_no_admissible}};
    out << j.dump() << '\n';
  }
  nlohmann::json tail{{"cycles", rec.cycle_nodes.size()},
                      {"processed_counts", rec.processed_counts},
                      {"lemma8", rec.lemma8_holds()}};
  out << tail.dump() << '\n';
}

int cmd_solve(const std::string& instance_path, const std::string& out_path,
              const std::string& record_path, const SolverConfig& cfg) {
  Instance inst = load_instance_file(instance_path);
  SolverConfig config = cfg;
  config.record_decomposition = !record_path.empty();
  SolveResult res = multiple_source_max_preflow(inst, config);
  acyclify(res.workspace.emb, res.workspace.flow);
  preflow_to_flow(res.workspace.emb, res.workspace.flow);
  std::string flow_path =
      out_path.empty() ? instance_path + ".flow" : out_path;
  write_file(flow_path, serialize_flow(inst, res.workspace.flow));
  if (!record_path.empty()) dump_record(res.record, record_path);
  std::cout << "value " << res.value << '\n';
  return 0;
}

int cmd_check(const std::string& instance_path, const std::string& flow_path) {
  Instance inst = load_instance_file(instance_path);
  std::ifstream in(flow_path);
  if (!in) throw ParseError("cannot open '" + flow_path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  FlowCheckResult res = check_flow(inst, buf.str());
  std::cout << res.message << '\n';
  return res.ok ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"multiple-source single-sink max flow in planar graphs"};
  app.require_subcommand(1);

  SolverConfig cfg;
  app.add_option("--n0", cfg.n0, "base case size (>= 4)");
  app.add_option("--c-sep", cfg.c_sep, "separator boundary constant");
  app.add_option("--engine", cfg.engine, "st-flow engine (dinic)");
  uint64_t seed = 1;
  app.add_option("--seed", seed, "generator seed");

  auto* solve = app.add_subcommand("solve", "solve an instance, write a flow file");
  std::string solve_in, solve_out, record_path;
  solve->add_option("instance", solve_in)->required();
  solve->add_option("-o,--output", solve_out, "flow file (default <instance>.flow)");
  solve->add_option("--record", record_path, "dump the decomposition record (JSON lines)");

  auto* check = app.add_subcommand("check", "validate a flow file against an instance");
  std::string check_in, check_flow_path;
  check->add_option("instance", check_in)->required();
  check->add_option("flow", check_flow_path)->required();

  auto* gen = app.add_subcommand("gen", "emit a generated instance");
  std::string gen_type = "grid", gen_out, cap_spec = "uniform:1:50",
              supply_spec = "uniform:0:50";
  int gen_k = 8;
  int gen_n = 50;
  double delete_fraction = 0.35;
  gen->add_option("--type", gen_type, "grid | random");
  gen->add_option("--k", gen_k, "grid side");
  gen->add_option("--n", gen_n, "random-planar node count");
  gen->add_option("--cap", cap_spec, "capacity rule");
  gen->add_option("--supply", supply_spec, "supply rule");
  gen->add_option("--delete-fraction", delete_fraction, "random-planar arc deletion");
  gen->add_option("-o,--output", gen_out, "output path (default stdout)");

  auto* bench = app.add_subcommand("bench", "scaling suite, CSV n,time_ms,value");
  std::string bench_sizes = "32,63,126,253", bench_out;
  bench->add_option("--sizes", bench_sizes, "grid sides, comma separated");
  bench->add_option("-o,--output", bench_out, "CSV path (default stdout)");

  auto* segment = app.add_subcommand("segment", "image-segmentation reduction, end to end");
  std::string seg_in, seg_out, seg_emit;
  segment->add_option("grid", seg_in)->required();
  segment->add_option("-o,--output", seg_out, "flow file for the reduced instance");
  segment->add_option("--emit-instance", seg_emit, "write the reduced instance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*solve) return cmd_solve(solve_in, solve_out, record_path, cfg);
    if (*check) return cmd_check(check_in, check_flow_path);
    if (*gen) {
      Instance inst;
      if (gen_type == "grid") {
        inst = gen_grid(gen_k, parse_rule(cap_spec), parse_rule(supply_spec), seed);
      } else if (gen_type == "random") {
        RandomPlanarOptions opts;
        opts.delete_fraction = delete_fraction;
        inst = gen_random_planar(gen_n, seed, opts);
      } else {
        throw Error("unknown --type '" + gen_type + "'");
      }
      std::string text = serialize_instance(inst);
      if (gen_out.empty())
        std::cout << text;
      else
        write_file(gen_out, text);
      return 0;
    }
    if (*bench) {
      std::vector<int> sides;
      std::istringstream in(bench_sizes);
      std::string tok;
      while (std::getline(in, tok, ',')) sides.push_back(std::stoi(tok));
      std::string csv = bench_csv(run_bench(sides, seed, cfg));
      if (bench_out.empty())
        std::cout << csv;
      else
        write_file(bench_out, csv);
      return 0;
    }
    if (*segment) {
      std::ifstream in(seg_in);
      if (!in) throw ParseError("cannot open '" + seg_in + "'");
      std::ostringstream buf;
      buf << in.rdbuf();
      Instance inst = segmentation_reduce(parse_pixel_grid(buf.str()));
      if (!seg_emit.empty()) write_file(seg_emit, serialize_instance(inst));
      SolveResult res = multiple_source_max_preflow(inst, cfg);
      acyclify(res.workspace.emb, res.workspace.flow);
      preflow_to_flow(res.workspace.emb, res.workspace.flow);
      if (!seg_out.empty())
        write_file(seg_out, serialize_flow(inst, res.workspace.flow));
      std::cout << "value " << res.value << '\n';
      return 0;
    }
  } catch (const SolverError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace planarflow

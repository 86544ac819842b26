// Copyright 2026 The qubomap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qubomap_cli/cli.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qubomap/architecture.hpp"
#include "qubomap/benchgen.hpp"
#include "qubomap/circuit.hpp"
#include "qubomap/error.hpp"
#include "qubomap/pipeline.hpp"
#include "qubomap/qubo.hpp"
#include "qubomap/report.hpp"
#include "qubomap/slicer.hpp"

namespace qubomap::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::Io, "cannot open '" + path + "' for reading");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content) || !out.flush()) {
    throw Error(ErrorKind::Io, "cannot write '" + path + "'");
  }
}

void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
  } else {
    write_file(path, content);
  }
}

void report_error(std::ostream& err, std::string_view kind, std::string_view message) {
  nlohmann::ordered_json doc;
  doc["error"] = kind;
  doc["message"] = message;
  err << doc.dump() << '\n';
}

// --jobs wins; otherwise QMAP_JOBS; otherwise 1.
std::size_t resolve_jobs(std::optional<std::size_t> flag) {
  if (flag) {
    return *flag;
  }
  if (const char* env = std::getenv("QMAP_JOBS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end == nullptr || *end != '\0') {
      throw Error(ErrorKind::InvalidArgument, "QMAP_JOBS must be a non-negative integer");
    }
    return static_cast<std::size_t>(value);
  }
  return 1;
}

SolverKind parse_solver(const std::string& name) {
  if (name == "anneal") return SolverKind::Anneal;
  if (name == "exact") return SolverKind::Exact;
  throw Error(ErrorKind::InvalidArgument, "unknown solver '" + name + "'");
}

struct SolverFlags {
  std::optional<std::size_t> sweeps;
  std::optional<std::size_t> reads;
  std::size_t window_budget = MapConfig{}.window_budget;
  std::string solver = "anneal";

  void attach(CLI::App& cmd) {
    cmd.add_option("--sweeps", sweeps, "Metropolis sweeps per read");
    cmd.add_option("--reads", reads, "Independent annealing reads");
    cmd.add_option("--window-budget", window_budget,
                   "Maximum variables per annealed sub-problem")
        ->capture_default_str();
    cmd.add_option("--solver", solver, "anneal or exact")
        ->check(CLI::IsMember({"anneal", "exact"}))
        ->capture_default_str();
  }

  [[nodiscard]] MapConfig config(std::optional<double> lambda, std::uint64_t seed,
                                 std::size_t jobs) const {
    MapConfig cfg;
    cfg.lambda = lambda;
    cfg.solver = parse_solver(solver);
    cfg.window_budget = window_budget;
    if (sweeps) cfg.anneal.sweeps = *sweeps;
    if (reads) cfg.anneal.reads = *reads;
    cfg.anneal.seed = seed;
    cfg.anneal.jobs = jobs;
    return cfg;
  }
};

struct GenFlags {
  std::string family;
  std::size_t n = 0;
  std::optional<std::size_t> depth;
  std::optional<std::size_t> layers;
  std::optional<std::string> preset;
  std::uint64_t seed = 0;
  std::string out;
};

struct MapFlags {
  std::string circuit;
  std::string topology;
  std::optional<double> lambda;
  std::uint64_t seed = 0;
  SolverFlags solver;
  std::string out;
  std::string csv;
  std::string svg;
  std::string export_qubo;
  bool with_timing = false;
  std::optional<std::size_t> jobs;
};

struct SweepFlags {
  std::vector<std::string> families;
  std::vector<std::size_t> sizes;
  std::vector<std::string> topologies;
  std::vector<double> lambdas;
  std::vector<std::uint64_t> seeds{0};
  std::optional<std::size_t> depth;
  std::optional<std::size_t> layers;
  std::optional<std::string> preset;
  SolverFlags solver;
  std::string out;
  std::optional<std::size_t> jobs;
};

int cmd_gen(const GenFlags& f, std::ostream& out) {
  bench::BenchSpec spec;
  spec.family = bench::parse_family(f.family);
  spec.n = f.n;
  spec.depth = f.depth;
  spec.layers = f.layers;
  spec.preset = f.preset;
  spec.seed = f.seed;
  emit(f.out, to_json_string(bench::generate(spec)), out);
  return kExitOk;
}

int cmd_map(const MapFlags& f, std::ostream& out) {
  const Circuit circuit = parse_circuit(read_file(f.circuit));
  const CoreTopology topo = parse_topology_spec(f.topology);
  const MapConfig cfg = f.solver.config(f.lambda, f.seed, resolve_jobs(f.jobs));

  if (!f.export_qubo.empty()) {
    const SliceSet slices = slice(circuit, topo.max_capacity());
    const double lambda =
        f.lambda.value_or(default_lambda(std::max<std::size_t>(slices.size(), 1), circuit.num_qubits()));
    const QuboProblem problem = build(slices, topo, hop_matrix(topo), lambda);
    std::ostringstream text;
    write_qubo_text(text, problem.matrix());
    write_file(f.export_qubo, text.str());
  }

  const MappingReport report = map_circuit(circuit, topo, cfg);
  emit(f.out, report_to_json(report, f.with_timing), out);
  if (!f.csv.empty()) {
    RunLabel label;
    label.depth = depth(circuit);
    label.topology = f.topology;
    label.seed = f.seed;
    write_file(f.csv, csv_header() + csv_row(label, report));
  }
  if (!f.svg.empty()) {
    write_file(f.svg, timeline_svg(report));
  }
  return report.valid ? kExitOk : kExitInvalid;
}

struct SweepRun {
  std::string family;
  std::size_t n;
  std::string topology;
  std::optional<double> lambda;
  std::uint64_t seed;
};

std::string sweep_row(const SweepRun& run, const SweepFlags& f) {
  RunLabel label;
  label.family = run.family;
  label.topology = run.topology;
  label.seed = run.seed;
  try {
    bench::BenchSpec spec;
    spec.family = bench::parse_family(run.family);
    spec.n = run.n;
    spec.depth = f.depth;
    spec.layers = f.layers;
    spec.preset = f.preset;
    spec.seed = run.seed;
    const Circuit circuit = bench::generate(spec);
    label.depth = depth(circuit);
    const CoreTopology topo = parse_topology_spec(run.topology);
    // Rows already run side by side; keep each row's annealer single-threaded.
    const MapConfig cfg = f.solver.config(run.lambda, run.seed, 1);
    return csv_row(label, map_circuit(circuit, topo, cfg));
  } catch (const Error& e) {
    return csv_error_row(label, run.n, to_string(e.kind()));
  } catch (const std::exception&) {
    return csv_error_row(label, run.n, "internal");
  }
}

int cmd_sweep(const SweepFlags& f, std::ostream& out) {
  std::vector<SweepRun> runs;
  std::vector<std::optional<double>> lambdas;
  if (f.lambdas.empty()) {
    lambdas.emplace_back();
  } else {
    lambdas.assign(f.lambdas.begin(), f.lambdas.end());
  }
  for (const auto& family : f.families) {
    for (const auto n : f.sizes) {
      for (const auto& topology : f.topologies) {
        for (const auto& lambda : lambdas) {
          for (const auto seed : f.seeds) {
            runs.push_back({family, n, topology, lambda, seed});
          }
        }
      }
    }
  }

  std::vector<std::string> rows(runs.size());
  const std::size_t jobs = std::clamp<std::size_t>(
      resolve_jobs(f.jobs) == 0 ? std::thread::hardware_concurrency() : resolve_jobs(f.jobs), 1,
      std::max<std::size_t>(runs.size(), 1));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t r = next++; r < runs.size(); r = next++) {
      rows[r] = sweep_row(runs[r], f);
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (std::size_t w = 0; w < jobs; ++w) {
      pool.emplace_back(worker);
    }
  }

  std::string csv = csv_header();
  for (const auto& row : rows) {
    csv += row;
  }
  emit(f.out, csv, out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Map quantum circuits onto modular multi-core architectures via QUBO", "qubomap"};
  app.require_subcommand(1);

  GenFlags gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a benchmark circuit as JSON");
  gen_cmd->add_option("--family", gen.family,
                      "qft, multi_target, cuccaro_adder, draper_adder, random, quantum_volume")
      ->required();
  gen_cmd->add_option("--n", gen.n, "Number of qubits")->required();
  gen_cmd->add_option("--depth", gen.depth, "random: number of layers");
  gen_cmd->add_option("--preset", gen.preset, "random: XS, S, M or L when --depth is unset");
  gen_cmd->add_option("--layers", gen.layers, "quantum_volume: number of layers (default n)");
  gen_cmd->add_option("--seed", gen.seed, "Generator seed");
  gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");

  MapFlags map;
  auto* map_cmd = app.add_subcommand("map", "Map a circuit onto a core topology");
  map_cmd->add_option("--circuit", map.circuit, "Circuit JSON file")->required();
  map_cmd->add_option("--topology", map.topology,
                      "all2all:<k>,<cap> | grid:<rows>,<cols>,<cap> | file:<path>")
      ->required();
  map_cmd->add_option("--lambda", map.lambda, "Transfer-cost weight (default 0.99/(T*n))");
  map_cmd->add_option("--seed", map.seed, "Seed for every random choice");
  map.solver.attach(*map_cmd);
  map_cmd->add_option("--out", map.out, "Report JSON file (default stdout)");
  map_cmd->add_option("--csv", map.csv, "Also write a one-row CSV summary");
  map_cmd->add_option("--svg", map.svg, "Also write an SVG timeline");
  map_cmd->add_option("--export-qubo", map.export_qubo, "Write the full QUBO as text");
  map_cmd->add_flag("--with-timing", map.with_timing, "Include wall_time_s in the report");
  map_cmd->add_option("--jobs", map.jobs, "Threads for annealing reads (env QMAP_JOBS)");

  SweepFlags sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run families x sizes x topologies x lambdas x seeds");
  sweep_cmd->add_option("--family", sweep.families, "Benchmark families")->delimiter(',');
  sweep_cmd->add_option("--n", sweep.sizes, "Qubit counts")->delimiter(',');
  sweep_cmd->add_option("--topology", sweep.topologies, "Topology specs")->delimiter(';');
  sweep_cmd->add_option("--lambda", sweep.lambdas, "Lambda values (default per circuit)")
      ->delimiter(',');
  sweep_cmd->add_option("--seeds", sweep.seeds, "Seeds")->delimiter(',');
  sweep_cmd->add_option("--depth", sweep.depth, "random: number of layers");
  sweep_cmd->add_option("--preset", sweep.preset, "random: XS, S, M or L");
  sweep_cmd->add_option("--layers", sweep.layers, "quantum_volume: number of layers");
  sweep.solver.attach(*sweep_cmd);
  sweep_cmd->add_option("--out", sweep.out, "CSV file (default stdout)");
  sweep_cmd->add_option("--jobs", sweep.jobs, "Rows run in parallel (env QMAP_JOBS)");

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.emplace_back("qubomap");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) {
    argv.push_back(s.data());
  }

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    report_error(err, to_string(ErrorKind::InvalidArgument), e.what());
    return kExitError;
  }

  try {
    if (gen_cmd->parsed()) {
      return cmd_gen(gen, out);
    }
    if (map_cmd->parsed()) {
      return cmd_map(map, out);
    }
    return cmd_sweep(sweep, out);
  } catch (const Error& e) {
    report_error(err, to_string(e.kind()), e.what());
  } catch (const std::exception& e) {
    report_error(err, "internal", e.what());
  }
  return kExitError;
}

}  // namespace qubomap::cli

// Copyright 2026 The scp-bigstep Authors
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

#include "scp/cli.h"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "scp/bench.h"
#include "scp/generator.h"
#include "scp/io.h"
#include "scp/solvers.h"

namespace scp {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void PrintIndices(std::ostream& out, const std::vector<std::size_t>& indices) {
  for (std::size_t i = 0; i < indices.size(); ++i) {
    out << (i == 0 ? "" : " ") << indices[i];
  }
}

struct SolveArgs {
  std::string algo;
  std::size_t p = 2;
  std::string input;
  std::string format = "native";
  bool trace = false;
  std::optional<std::uint64_t> budget;
};

int RunSolve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  const std::string text = ReadFile(args.input);
  std::vector<std::string> warnings;
  const Instance instance = args.format == "orlib"
                                ? ParseOrlibScp(text, &warnings)
                                : ParseInstance(text);
  for (const std::string& w : warnings) err << "warning: " << w << '\n';

  std::optional<SolveTrace> trace;
  CoverSolution cover;
  if (args.algo == "greedy") {
    SolveResult r = ClassicalGreedy(instance);
    cover = std::move(r.cover);
    trace = std::move(r.trace);
  } else if (args.algo == "bigstep") {
    SolveResult r = BigStepGreedy(instance, StepSize(args.p));
    cover = std::move(r.cover);
    trace = std::move(r.trace);
  } else {
    ExactOptions options;
    options.node_budget = args.budget;
    cover = ExactMinCover(instance, options);
  }

  out << "algorithm " << args.algo;
  if (args.algo == "bigstep") out << " p=" << args.p;
  out << "\nsize " << cover.size() << "\nchosen ";
  PrintIndices(out, cover.chosen);
  out << '\n';
  if (args.trace && trace) {
    for (std::size_t s = 0; s < trace->steps.size(); ++s) {
      const TraceStep& step = trace->steps[s];
      out << "step " << s + 1 << " chosen ";
      PrintIndices(out, step.chosen);
      out << " newly_covered " << step.newly_covered << " candidates "
          << step.candidates_evaluated << '\n';
    }
  }
  return kExitOk;
}

struct GenArgs {
  GeneratorConfig config;
  std::uint64_t count = 0;
  std::string out_dir;
  std::string policy = "reject";
};

int RunGen(GenArgs args, std::ostream& out) {
  args.config.policy = ParseFeasibilityPolicy(args.policy);
  args.config.Validate();
  std::filesystem::create_directories(args.out_dir);
  for (std::uint64_t i = 0; i < args.count; ++i) {
    std::ostringstream name;
    name << "instance_" << std::setw(6) << std::setfill('0') << i << ".scp";
    const std::filesystem::path path =
        std::filesystem::path(args.out_dir) / name.str();
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write '" + path.string() + "'");
    file << SerializeInstance(GenerateInstance(args.config, i));
  }
  out << "wrote " << args.count << " instances to " << args.out_dir << '\n';
  return kExitOk;
}

struct BenchArgs {
  CampaignSpec spec;
  std::string policy = "reject";
  std::string format = "markdown";
  std::string config_path;
  bool progress = false;
};

int RunBench(BenchArgs args, const CLI::App& cmd, std::ostream& out,
             std::ostream& err) {
  CampaignSpec spec = args.spec;
  if (!args.config_path.empty()) {
    spec = ParseCampaignSpec(ReadFile(args.config_path));
    // Explicit flags override the file.
    if (cmd.count("--n") > 0) spec.n = args.spec.n;
    if (cmd.count("--q") > 0) spec.q = args.spec.q;
    if (cmd.count("--m") > 0) spec.m_values = args.spec.m_values;
    if (cmd.count("--p") > 0) spec.p = args.spec.p;
    if (cmd.count("--count") > 0) spec.count = args.spec.count;
    if (cmd.count("--seed") > 0) spec.seed = args.spec.seed;
    if (cmd.count("--policy") > 0) spec.policy = ParseFeasibilityPolicy(args.policy);
    if (cmd.count("--workers") > 0) spec.workers = args.spec.workers;
  } else {
    for (const char* flag : {"--n", "--q", "--m", "--p", "--count", "--seed"}) {
      if (cmd.count(flag) == 0) {
        throw UsageError(std::string(flag) + " is required (or use --config)");
      }
    }
    spec.policy = ParseFeasibilityPolicy(args.policy);
  }
  const TableFormat format = ParseTableFormat(args.format);

  ProgressSink sink;
  if (args.progress) {
    sink = [&err, &spec](std::size_t row, std::uint64_t done,
                         std::uint64_t total) {
      err << "m=" << spec.m_values[row] << ": " << done << "/" << total
          << '\n';
    };
  }
  out << EmitTable(RunCampaign(spec, sink), format);
  return kExitOk;
}

struct FeasArgs {
  GeneratorConfig config;
};

int RunFeasprob(const FeasArgs& args, std::ostream& out) {
  out << std::setprecision(10) << FeasibilityProbability(args.config) << '\n';
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Unicost set cover: greedy, big-step greedy, exact oracle"};
  app.name("scp");
  app.require_subcommand(1);

  SolveArgs solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve one instance file");
  solve_cmd->add_option("--algo", solve.algo, "greedy, bigstep or exact")
      ->required()
      ->check(CLI::IsMember({"greedy", "bigstep", "exact"}));
  solve_cmd->add_option("--p", solve.p, "Big-step size")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--input", solve.input, "Instance file")->required();
  solve_cmd->add_option("--format", solve.format, "native or orlib")
      ->check(CLI::IsMember({"native", "orlib"}));
  solve_cmd->add_flag("--trace", solve.trace, "Print per-step trace");
  solve_cmd->add_option("--budget", solve.budget, "Exact oracle node budget");

  GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Write random instances");
  gen_cmd->add_option("--n", gen.config.n)->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--m", gen.config.m)->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--q", gen.config.q)->required()->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--seed", gen.config.seed)->required();
  gen_cmd->add_option("--count", gen.count)->required();
  gen_cmd->add_option("--out", gen.out_dir)->required();
  gen_cmd->add_option("--policy", gen.policy)
      ->check(CLI::IsMember({"reject", "raw"}));

  BenchArgs bench;
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "Compare big-step and classical greedy");
  bench_cmd->add_option("--n", bench.spec.n)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--q", bench.spec.q)->check(CLI::Range(0.0, 1.0));
  bench_cmd->add_option("--m", bench.spec.m_values)
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--p", bench.spec.p)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--count", bench.spec.count);
  bench_cmd->add_option("--seed", bench.spec.seed);
  bench_cmd->add_option("--policy", bench.policy)
      ->check(CLI::IsMember({"reject", "raw"}));
  bench_cmd->add_option("--format", bench.format)
      ->check(CLI::IsMember({"markdown", "csv"}));
  bench_cmd->add_option("--workers", bench.spec.workers)
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--config", bench.config_path, "JSON campaign spec");
  bench_cmd->add_flag("--progress", bench.progress, "Report progress on stderr");

  FeasArgs feas;
  CLI::App* feas_cmd = app.add_subcommand(
      "feasprob", "Probability that a raw random instance is feasible");
  feas_cmd->add_option("--n", feas.config.n)->required()->check(CLI::PositiveNumber);
  feas_cmd->add_option("--m", feas.config.m)->required()->check(CLI::PositiveNumber);
  feas_cmd->add_option("--q", feas.config.q)->required()->check(CLI::Range(0.0, 1.0));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitUsage;
  }

  try {
    if (*solve_cmd) return RunSolve(solve, out, err);
    if (*gen_cmd) return RunGen(gen, out);
    if (*bench_cmd) return RunBench(bench, *bench_cmd, out, err);
    return RunFeasprob(feas, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n' << bench_cmd->help();
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntimeError;
  }
}

}  // namespace scp

// Copyright 2026 The psigraph Authors
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


#include <map>
#include <ostream>

#include <CLI11.hpp>

#include "psigraph/cli/cli.hpp"
#include "psigraph/error.hpp"

namespace psigraph::cli {
namespace {

struct Raw {
  std::string route = "eigen";
  std::string format = "csv";
  std::string sampling = "uniform";
  double radius = 0.0;
};

void AddOutput(CLI::App* sub, RunConfig& c, Raw& raw) {
  sub->add_option("--format", raw.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", c.out, "Output file (default: standard output)");
}

void AddDegree(CLI::App* sub, RunConfig& c) {
  sub->add_option("--degree,-K", c.degree, "Truncation degree K")->capture_default_str();
}

void AddRadius(CLI::App* sub, Raw& raw) { sub->add_option("--radius", raw.radius, "Root search radius"); }

void AddSampling(CLI::App* sub, RunConfig& c, Raw& raw) {
  sub->add_option("--n", c.sizes, "Graph sizes, strictly increasing")->delimiter(',');
  sub->add_option("--seed", c.seeds, "Seed, or one seed per sample")->delimiter(',');
  sub->add_option("--sampling", raw.sampling, "Latent points")->check(CLI::IsMember({"uniform", "grid"}));
  sub->add_option("--blocks", c.blocks, "Blocks used to discretize closed-form kernels")->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Characteristic power series of graphs and graphons", "psigraph"};
  app.require_subcommand(1);
  RunConfig c;
  Raw raw;

  auto* graph = app.add_subcommand("graph", "psi_n of a graph file");
  graph->add_option("--input", c.inputs, "Graph file: 'n m' then m lines 'u v'")->required()->expected(1);
  AddDegree(graph, c);
  graph->add_option("--route", raw.route, "eigen, newton or harary_sachs")
      ->check(CLI::IsMember({"eigen", "newton", "harary_sachs"}));
  AddRadius(graph, raw);
  AddOutput(graph, c, raw);

  auto* kernel = app.add_subcommand("kernel", "psi of a kernel JSON file");
  kernel->add_option("--input", c.inputs, "Kernel JSON")->required()->expected(1);
  AddDegree(kernel, c);
  kernel->add_option("--blocks", c.blocks, "Blocks used to discretize closed-form kernels")->capture_default_str();
  AddRadius(kernel, raw);
  AddOutput(kernel, c, raw);

  auto* conv = app.add_subcommand("converge", "psi_n of sampled graphs against psi of the kernel");
  conv->add_option("--input", c.inputs, "Kernel JSON")->required()->expected(1);
  AddDegree(conv, c);
  AddSampling(conv, c, raw);
  conv->add_option("--samples", c.samples, "Samples per size (default: one per seed)");
  conv->add_option("--threads", c.threads, "Worker threads")->capture_default_str();
  AddOutput(conv, c, raw);

  auto* qr = app.add_subcommand("quasirandom", "Quasirandomness verdict for a graph sequence");
  qr->add_option("--input", c.inputs, "Graph files, or one kernel JSON sampled at --n")->required();
  qr->add_option("--p", c.p, "Edge density, decimal or a/b")->required();
  AddDegree(qr, c);
  AddSampling(qr, c, raw);
  AddRadius(qr, raw);
  qr->add_option("--tol-root", c.tol_root, "Tolerance on the smallest root")->capture_default_str();
  qr->add_option("--tol-gap", c.tol_gap, "Tolerance on the eigenvalues")->capture_default_str();
  AddOutput(qr, c, raw);

  auto* signs = app.add_subcommand("signs", "Exact signs of the quasirandom series");
  signs->add_option("--p", c.p, "Rational p as a/b")->required();
  AddDegree(signs, c);
  AddOutput(signs, c, raw);

  auto* parts = app.add_subcommand("partitions", "Harary-Sachs family of degree K");
  AddDegree(parts, c);
  AddOutput(parts, c, raw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  const std::map<CLI::App*, Command> commands{{graph, Command::kGraph},   {kernel, Command::kKernel},
                                              {conv, Command::kConverge}, {qr, Command::kQuasirandom},
                                              {signs, Command::kSigns},   {parts, Command::kPartitions}};
  for (const auto& [sub, command] : commands) {
    if (sub->parsed()) c.command = command;
  }
  c.route = route_from_string(raw.route);
  c.format = raw.format == "json" ? Format::kJson : Format::kCsv;
  c.sampling = raw.sampling == "grid" ? Sampling::kGrid : Sampling::kUniform;
  if (raw.radius != 0.0) c.radius = raw.radius;
  try {
    c.validate();
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  return execute(c, out, err);
}

}  // namespace psigraph::cli

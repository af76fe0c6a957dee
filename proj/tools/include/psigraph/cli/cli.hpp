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


#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "psigraph/charseries.hpp"
#include "psigraph/graphs.hpp"
#include "psigraph/kernels.hpp"

namespace psigraph::cli {

enum class Command { kGraph, kKernel, kConverge, kQuasirandom, kSigns, kPartitions };
enum class Format { kCsv, kJson };

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitNumericalFailure = 3;

struct RunConfig {
  Command command = Command::kGraph;
  std::vector<std::string> inputs;
  int degree = kDefaultDegree;
  Route route = Route::kEigen;
  int blocks = kernels::kDefaultBlocks;
  std::vector<std::uint64_t> seeds;
  std::vector<int> sizes;
  int samples = 0;  // 0: one per seed
  std::string p;    // decimal or "a/b"
  std::optional<double> radius;
  Sampling sampling = Sampling::kUniform;
  double tol_root = 0.1;
  double tol_gap = 0.06;
  int threads = 1;
  Format format = Format::kCsv;
  std::string out;  // empty: standard output

  // Throws InvalidInput when the fields are inconsistent.
  void validate() const;
};

// One sampled graph of a convergence sweep.
struct ConvergeSample {
  int n = 0;
  int sample = 0;
  std::uint64_t seed = 0;
  std::vector<double> coeffs;
  std::vector<double> deviation;  // |c_k(psi_n) - c_k(psi_W)|
  double lambda1 = 0.0;
  double lambda2 = 0.0;

  double max_deviation(int max_k) const;
};

struct ConvergeResult {
  std::vector<double> reference;
  std::vector<ConvergeSample> samples;  // (n, sample) order
};

// Seed of sample j when only a base seed is given.
std::uint64_t sample_seed(std::uint64_t base, int sample);

// Samples graphs from w for every size and sample and compares psi_n with
// psi_W; jobs run on up to `threads` workers, results keep (n, sample) order.
ConvergeResult converge(const Kernel& w, const RunConfig& config);

Kernel read_kernel_file(const std::string& path);
Graph read_graph_file(const std::string& path);

// Each returns the full output text; errors propagate as exceptions.
std::string cmd_graph(const RunConfig& config);
std::string cmd_kernel(const RunConfig& config);
std::string cmd_converge(const RunConfig& config);
std::string cmd_quasirandom(const RunConfig& config);
std::string cmd_signs(const RunConfig& config);
std::string cmd_partitions(const RunConfig& config);

// Dispatches, writes the output and maps errors to exit codes.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv into a RunConfig and executes it.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace psigraph::cli

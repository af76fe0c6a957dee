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


#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <exception>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "psigraph/cli/cli.hpp"
#include "psigraph/error.hpp"
#include "psigraph/partitions.hpp"
#include "psigraph/reports.hpp"
#include "psigraph/rng.hpp"
#include "psigraph/roots.hpp"
#include "psigraph/spectra.hpp"

namespace psigraph::cli {
namespace {

using nlohmann::json;

constexpr std::size_t kSpectrumHead = 5;

std::string Num(double x) { return series::format_double(x); }

const std::string& OnlyInput(const RunConfig& config) {
  if (config.inputs.size() != 1) throw InvalidInput("exactly one --input is required");
  return config.inputs.front();
}

std::vector<double> Head(const Spectrum& s) {
  const std::size_t n = std::min(kSpectrumHead, s.values.size());
  return {s.values.begin(), s.values.begin() + static_cast<std::ptrdiff_t>(n)};
}

std::string JoinNums(const std::vector<double>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ';';
    out += Num(xs[i]);
  }
  return out;
}

std::string Dump(const json& j) { return j.dump(2) + "\n"; }

double ParseProbability(const std::string& text) {
  if (text.empty()) throw InvalidInput("--p is required");
  const Rational q = series::parse_rational(text);
  if (q < 0 || q > 1) throw InvalidInput("--p must lie in [0, 1]");
  return q.convert_to<double>();
}

// Roots of a float series inside `radius`, flagged against the trust radius.
struct RootView {
  double radius = 0.0;
  double trust = 0.0;
  RootSearch search;
};

RootView FindRoots(const TruncatedSeries& s, double radius, double trust) {
  RootView view{radius, trust, roots::smallest_root(s.to_float(), radius)};
  auto& zs = view.search.in_radius;
  std::sort(zs.begin(), zs.end(), [](const auto& a, const auto& b) {
    if (std::abs(a) != std::abs(b)) return std::abs(a) < std::abs(b);
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return view;
}

json RootsJson(const RootView& v) {
  json list = json::array();
  for (const auto& z : v.search.in_radius) {
    list.push_back({{"re", z.real()}, {"im", z.imag()}, {"trusted", std::abs(z) <= v.trust}});
  }
  json j{{"radius", v.radius},
         {"trust_radius", std::isfinite(v.trust) ? json(v.trust) : json(nullptr)},
         {"count_in_radius", v.search.count_in_radius},
         {"smallest_real", v.search.smallest_real ? json(*v.search.smallest_real) : json(nullptr)},
         {"roots", list}};
  return j;
}

void RootsComments(std::ostream& out, const RootView& v) {
  out << "# root_radius=" << Num(v.radius) << " trust_radius=" << (std::isfinite(v.trust) ? Num(v.trust) : "inf")
      << " count_in_radius=" << v.search.count_in_radius
      << " smallest_real=" << (v.search.smallest_real ? Num(*v.search.smallest_real) : "none") << '\n';
  for (const auto& z : v.search.in_radius) {
    out << "# root=" << Num(z.real()) << (z.imag() < 0 ? "" : "+") << Num(z.imag()) << "i"
        << (std::abs(z) <= v.trust ? " trusted" : " untrusted") << '\n';
  }
}

void WriteCoeffRows(std::ostream& out, const TruncatedSeries& s) { series::write_csv(out, s); }

double MaxModulus(const std::vector<double>& values) {
  double m = 0.0;
  for (double x : values) m = std::max(m, std::abs(x));
  return m;
}

bool LooksLikeKernel(const std::string& path) {
  return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

std::uint64_t RequireSeed(const RunConfig& config) {
  if (config.seeds.empty()) throw InvalidInput("--seed is required for sampled graphs");
  return config.seeds.front();
}

}  // namespace

void RunConfig::validate() const {
  if (degree < 2) throw InvalidInput("--degree must be at least 2");
  if (blocks < 1) throw InvalidInput("--blocks must be at least 1");
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 1) throw InvalidInput("--n sizes must be positive");
    if (i > 0 && sizes[i] <= sizes[i - 1]) throw InvalidInput("--n sizes must be strictly increasing");
  }
  if (samples < 0) throw InvalidInput("--samples must be nonnegative");
  if (threads < 1) throw InvalidInput("--threads must be at least 1");
  if (!(tol_root > 0) || !(tol_gap > 0)) throw InvalidInput("tolerances must be positive");
  if (radius && !(*radius > 0)) throw InvalidInput("--radius must be positive");
}

double ConvergeSample::max_deviation(int max_k) const {
  double m = 0.0;
  for (int k = 0; k <= max_k && k < static_cast<int>(deviation.size()); ++k) {
    m = std::max(m, deviation[static_cast<std::size_t>(k)]);
  }
  return m;
}

std::uint64_t sample_seed(std::uint64_t base, int sample) {
  std::uint64_t state = base ^ (0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(sample) + 1));
  return rng::splitmix64(state);
}

Kernel read_kernel_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open kernel file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput("kernel file '" + path + "': " + e.what());
  }
  return kernels::kernel_from_json(j);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open graph file '" + path + "'");
  return graphs::read_graph(in);
}

ConvergeResult converge(const Kernel& w, const RunConfig& config) {
  config.validate();
  if (config.sizes.empty()) throw InvalidInput("--n needs at least one size");
  const bool grid = config.sampling == Sampling::kGrid;
  if (!grid) RequireSeed(config);
  int samples = config.samples;
  if (samples == 0) samples = config.seeds.empty() ? 1 : static_cast<int>(config.seeds.size());
  if (config.seeds.size() > 1 && static_cast<int>(config.seeds.size()) != samples) {
    throw InvalidInput("give one --seed, or one per sample");
  }

  ConvergeResult result;
  const PsiResult reference = charseries::psi_from_kernel(kernels::to_step(w, config.blocks), config.degree);
  result.reference = reference.series.to_doubles();

  for (int n : config.sizes) {
    for (int j = 0; j < samples; ++j) {
      ConvergeSample s;
      s.n = n;
      s.sample = j;
      if (config.seeds.size() > 1) {
        s.seed = config.seeds[static_cast<std::size_t>(j)];
      } else if (!config.seeds.empty()) {
        s.seed = samples == 1 ? config.seeds.front() : sample_seed(config.seeds.front(), j);
      }
      result.samples.push_back(std::move(s));
    }
  }

  std::vector<std::exception_ptr> errors(result.samples.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < result.samples.size(); i = next++) {
      ConvergeSample& s = result.samples[i];
      try {
        const Graph g = graphs::from_kernel(w, s.n, s.seed, config.sampling);
        const PsiResult psi = charseries::psi_from_graph(g, config.degree, Route::kEigen);
        s.coeffs = psi.series.to_doubles();
        s.deviation.resize(s.coeffs.size());
        for (std::size_t k = 0; k < s.coeffs.size(); ++k) s.deviation[k] = std::abs(s.coeffs[k] - result.reference[k]);
        const auto& values = psi.spectrum->values;
        s.lambda1 = values.empty() ? 0.0 : values[0];
        s.lambda2 = values.size() < 2 ? 0.0 : values[1];
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(config.threads), result.samples.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return result;
}

std::string cmd_graph(const RunConfig& config) {
  config.validate();
  const Graph g = read_graph_file(OnlyInput(config));
  const PsiResult psi = charseries::psi_from_graph(g, config.degree, config.route);
  const Spectrum s = psi.spectrum ? *psi.spectrum : graphs::adjacency_spectrum(g, true);
  const double n = g.num_vertices();
  const double energy = spectra::energy(s) * n;
  std::optional<RootView> root_view;
  if (config.radius) root_view = FindRoots(psi.series, *config.radius, roots::trust_radius(config.degree, MaxModulus(s.values)));

  std::ostringstream out;
  if (config.format == Format::kJson) {
    json j = series::to_json(psi.series);
    j["command"] = "graph";
    j["n"] = g.num_vertices();
    j["edges"] = g.num_edges();
    j["route"] = to_string(psi.route);
    j["K"] = config.degree;
    j["l1"] = psi.norms.l1;
    j["l2sq"] = psi.norms.l2sq;
    j["spectrum_head"] = Head(s);
    j["energy"] = energy;
    if (root_view) j["roots"] = RootsJson(*root_view);
    out << Dump(j);
  } else {
    out << "# n=" << g.num_vertices() << " edges=" << g.num_edges() << " route=" << to_string(psi.route)
        << " K=" << config.degree << '\n';
    out << "# spectrum_head=" << JoinNums(Head(s)) << " energy=" << Num(energy) << '\n';
    if (root_view) RootsComments(out, *root_view);
    WriteCoeffRows(out, psi.series);
  }
  return out.str();
}

std::string cmd_kernel(const RunConfig& config) {
  config.validate();
  const Kernel w = read_kernel_file(OnlyInput(config));
  const StepKernel step = kernels::to_step(w, config.blocks);
  const PsiResult psi = charseries::psi_from_kernel(step, config.degree);
  const Spectrum& s = *psi.spectrum;
  const double trust = roots::trust_radius(config.degree, MaxModulus(s.values));
  std::optional<RootView> root_view;
  if (config.radius || std::isfinite(trust)) root_view = FindRoots(psi.series, config.radius.value_or(trust), trust);

  std::ostringstream out;
  if (config.format == Format::kJson) {
    json j = series::to_json(psi.series);
    j["command"] = "kernel";
    j["kernel"] = kernels::to_json(w);
    j["blocks"] = step.num_blocks();
    j["route"] = to_string(psi.route);
    j["K"] = config.degree;
    j["l1"] = psi.norms.l1;
    j["l2sq"] = psi.norms.l2sq;
    j["spectrum_head"] = Head(s);
    if (root_view) j["roots"] = RootsJson(*root_view);
    out << Dump(j);
  } else {
    out << "# kernel=" << kernels::describe(w) << " blocks=" << step.num_blocks() << " K=" << config.degree << '\n';
    out << "# l1=" << Num(psi.norms.l1) << " l2sq=" << Num(psi.norms.l2sq) << " spectrum_head=" << JoinNums(Head(s))
        << '\n';
    if (root_view) RootsComments(out, *root_view);
    WriteCoeffRows(out, psi.series);
  }
  return out.str();
}

std::string cmd_converge(const RunConfig& config) {
  const Kernel w = read_kernel_file(OnlyInput(config));
  const ConvergeResult result = converge(w, config);

  std::ostringstream out;
  if (config.format == Format::kJson) {
    json samples = json::array();
    for (const auto& s : result.samples) {
      samples.push_back({{"n", s.n},
                         {"sample", s.sample},
                         {"seed", s.seed},
                         {"lambda1", s.lambda1},
                         {"lambda2", s.lambda2},
                         {"max_deviation", s.max_deviation(config.degree)},
                         {"coeffs", s.coeffs},
                         {"deviation", s.deviation}});
    }
    json j{{"command", "converge"},
           {"kernel", kernels::to_json(w)},
           {"K", config.degree},
           {"sampling", config.sampling == Sampling::kGrid ? "grid" : "uniform"},
           {"reference", result.reference},
           {"samples", samples}};
    out << Dump(j);
  } else {
    out << "n,sample,seed,k,coeff,reference,deviation,lambda1,lambda2\n";
    for (const auto& s : result.samples) {
      for (std::size_t k = 0; k < s.coeffs.size(); ++k) {
        out << s.n << ',' << s.sample << ',' << s.seed << ',' << k << ',' << Num(s.coeffs[k]) << ','
            << Num(result.reference[k]) << ',' << Num(s.deviation[k]) << ',' << Num(s.lambda1) << ','
            << Num(s.lambda2) << '\n';
      }
    }
  }
  return out.str();
}

std::string cmd_quasirandom(const RunConfig& config) {
  config.validate();
  const double p = ParseProbability(config.p);
  if (config.inputs.empty()) throw InvalidInput("--input is required");
  std::vector<Graph> sequence;
  std::optional<Kernel> source;
  if (config.inputs.size() == 1 && LooksLikeKernel(config.inputs.front())) {
    source = read_kernel_file(config.inputs.front());
    if (config.sizes.empty()) throw InvalidInput("--n needs at least one size");
    const std::uint64_t seed = config.sampling == Sampling::kGrid ? 0 : RequireSeed(config);
    for (int n : config.sizes) sequence.push_back(graphs::from_kernel(*source, n, seed, config.sampling));
  } else {
    for (const auto& path : config.inputs) sequence.push_back(read_graph_file(path));
  }
  const QuasirandomReport report = reports::quasirandom_test(sequence, p, config.tol_root, config.tol_gap,
                                                             {config.degree, config.radius.value_or(0.0)});

  std::ostringstream out;
  if (config.format == Format::kJson) {
    json rows = json::array();
    for (const auto& r : report.rows) {
      rows.push_back({{"n", r.n},
                      {"lambda1", r.lambda1},
                      {"lambda2", r.lambda2},
                      {"root", r.root ? json(*r.root) : json(nullptr)},
                      {"roots_in_radius", r.roots_in_radius},
                      {"max_coeff", r.max_coeff}});
    }
    json j{{"command", "quasirandom"},
           {"p", report.p},
           {"K", config.degree},
           {"tol_root", report.tol_root},
           {"tol_gap", report.tol_gap},
           {"radius", report.radius},
           {"verdict", report.pass ? "PASS" : "FAIL"},
           {"failures", report.failures},
           {"rows", rows}};
    if (source) j["kernel"] = kernels::to_json(*source);
    out << Dump(j);
  } else {
    out << "# p=" << Num(report.p) << " tol_root=" << Num(report.tol_root) << " tol_gap=" << Num(report.tol_gap)
        << " radius=" << Num(report.radius) << '\n';
    out << "# verdict=" << (report.pass ? "PASS" : "FAIL") << '\n';
    for (const auto& f : report.failures) out << "# failure: " << f << '\n';
    out << "n,lambda1,lambda2,root,roots_in_radius,max_coeff\n";
    for (const auto& r : report.rows) {
      out << r.n << ',' << Num(r.lambda1) << ',' << Num(r.lambda2) << ',' << (r.root ? Num(*r.root) : "") << ','
          << r.roots_in_radius << ',' << Num(r.max_coeff) << '\n';
    }
  }
  return out.str();
}

std::string cmd_signs(const RunConfig& config) {
  config.validate();
  if (config.p.empty()) throw InvalidInput("--p is required");
  const Rational p = series::parse_rational(config.p);
  const SignReport report = reports::sign_report(p, config.degree);
  const auto turan = reports::logconcavity_report(report.coeffs);
  const auto& c = report.coeffs.rational_coeffs();

  std::ostringstream out;
  if (config.format == Format::kJson) {
    json t = json::array();
    for (const auto& e : turan) {
      t.push_back({{"k", e.k}, {"value", series::format_rational(*e.exact)}, {"satisfied", e.satisfied}});
    }
    json j = series::to_json(report.coeffs);
    j["command"] = "signs";
    j["p"] = series::format_rational(p);
    j["K"] = config.degree;
    j["signs"] = reports::format_signs(report.signs);
    j["exact_zeros"] = report.exact_zeros;
    j["note"] = report.note ? json(*report.note) : json(nullptr);
    j["turan"] = t;
    out << Dump(j);
  } else {
    out << "# p=" << series::format_rational(p) << " K=" << config.degree << '\n';
    out << "# signs=" << reports::format_signs(report.signs) << '\n';
    out << "# exact_zeros=";
    for (std::size_t i = 0; i < report.exact_zeros.size(); ++i) out << (i ? ";" : "") << report.exact_zeros[i];
    out << '\n';
    if (report.note) out << "# note: " << *report.note << '\n';
    out << "k,coeff,sign,turan\n";
    for (std::size_t k = 0; k < c.size(); ++k) {
      const int sign = static_cast<int>(report.signs[k]);
      out << k << ',' << series::format_rational(c[k]) << ',' << (sign > 0 ? "+" : sign < 0 ? "-" : "0") << ',';
      for (const auto& e : turan) {
        if (e.k == static_cast<int>(k)) out << series::format_rational(*e.exact);
      }
      out << '\n';
    }
  }
  return out.str();
}

std::string cmd_partitions(const RunConfig& config) {
  config.validate();
  const auto family = partitions::hs_family(config.degree);

  std::ostringstream out;
  if (config.format == Format::kJson) {
    json rows = json::array();
    for (const auto& t : family) {
      rows.push_back({{"partition", partitions::to_string(t.partition)},
                      {"twos", t.partition.count_of(2)},
                      {"parts", t.partition.num_parts()},
                      {"components", t.components},
                      {"cycles", t.cycles},
                      {"eta", t.eta.str()},
                      {"sign", t.sign},
                      {"vertices", t.num_vertices()},
                      {"edges", t.num_edges()}});
    }
    out << Dump({{"command", "partitions"}, {"k", config.degree}, {"terms", rows}});
  } else {
    out << "partition,twos,parts,components,cycles,eta,sign,vertices,edges\n";
    for (const auto& t : family) {
      out << partitions::to_string(t.partition) << ',' << t.partition.count_of(2) << ',' << t.partition.num_parts()
          << ',' << t.components << ',' << t.cycles << ',' << t.eta.str() << ',' << t.sign << ','
          << t.num_vertices() << ',' << t.num_edges() << '\n';
    }
  }
  return out.str();
}

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::string text;
  try {
    switch (config.command) {
      case Command::kGraph: text = cmd_graph(config); break;
      case Command::kKernel: text = cmd_kernel(config); break;
      case Command::kConverge: text = cmd_converge(config); break;
      case Command::kQuasirandom: text = cmd_quasirandom(config); break;
      case Command::kSigns: text = cmd_signs(config); break;
      case Command::kPartitions: text = cmd_partitions(config); break;
    }
  } catch (const NumericalFailure& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumericalFailure;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const json::exception& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  if (config.out.empty()) {
    out << text;
    return out ? kExitOk : kExitInvalidInput;
  }
  std::ofstream file(config.out, std::ios::binary);
  if (!file) {
    err << "invalid input: cannot write '" << config.out << "'\n";
    return kExitInvalidInput;
  }
  file << text;
  return kExitOk;
}

}  // namespace psigraph::cli

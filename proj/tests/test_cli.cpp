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


#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "psigraph/cli/cli.hpp"

namespace psigraph {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "psigraph");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string Write(const std::string& name, const std::string& text) {
  const fs::path path = fs::temp_directory_path() / ("psigraph_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

std::string Slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

TEST_CASE("graph command on a triangle") {
  const auto tri = Write("tri.txt", "3 3\n0 1\n1 2\n0 2\n");
  const auto r = Cli({"graph", "--input", tri, "--degree", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("k,coeff\n0,1\n1,0\n2,-0.3333333333333333\n3,-0.07407407407407407\n") != std::string::npos);
  const auto hs = Cli({"graph", "--input", tri, "--degree", "3", "--route", "harary_sachs", "--format", "json"});
  CHECK(hs.code == 0);
  const auto j = nlohmann::json::parse(hs.out);
  CHECK(j["coeffs"][3] == "-2/27");
  CHECK(j["energy"].get<double>() == doctest::Approx(4.0));
}

TEST_CASE("graph command input errors exit 2") {
  CHECK(Cli({"graph", "--input", Write("loop.txt", "2 1\n0 0\n")}).code == 2);
  CHECK(Cli({"graph", "--input", "/nonexistent/graph.txt"}).code == 2);
  CHECK(Cli({"graph", "--input", Write("short.txt", "3 2\n0 1\n")}).code == 2);
  CHECK(Cli({"graph"}).code == 2);
  CHECK(Cli({"graph", "--input", Write("ok.txt", "2 1\n0 1\n"), "--degree", "1"}).code == 2);
  CHECK(Cli({"bogus"}).code == 2);
  CHECK(Cli({"graph", "--input", Write("n11.txt", "11 0\n"), "--route", "harary_sachs"}).code == 2);
}

TEST_CASE("graph files accept comments") {
  const auto r = Cli({"graph", "--input", Write("c.txt", "# path\n3 2 # header\n0 1\n\n1 2\n"), "--degree", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("2,-0.2222222222222222") != std::string::npos);
}

TEST_CASE("single vertex graph") {
  const auto r = Cli({"graph", "--input", Write("one.txt", "1 0\n"), "--degree", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("k,coeff\n0,1\n1,0\n2,0\n3,0\n") != std::string::npos);
}

TEST_CASE("kernel command") {
  const auto c = Write("c.json", R"({"type":"constant","p":0.5})");
  const auto r = Cli({"kernel", "--input", c, "--degree", "6", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  const std::vector<double> want{1, 0, -0.25, -1.0 / 24, 1.0 / 64, 1.0 / 240, -1.0 / 2304};
  for (std::size_t k = 0; k < want.size(); ++k) CHECK(j["coeffs"][k].get<double>() == doctest::Approx(want[k]));

  const auto half = Cli({"kernel", "--input", Write("h.json", R"({"type":"half"})"), "--format", "json"});
  REQUIRE(half.code == 0);
  CHECK(nlohmann::json::parse(half.out)["spectrum_head"][0].get<double>() == doctest::Approx(0.6366).epsilon(1e-2));

  const auto bad = Write("bad.json", R"({"type":"step","weights":[0.5,0.6],"values":[[0,1],[1,0]]})");
  CHECK(Cli({"kernel", "--input", bad}).code == 2);
  CHECK(Cli({"kernel", "--input", Write("junk.json", "{not json")}).code == 2);
}

TEST_CASE("converge command") {
  const auto c = Write("c2.json", R"({"type":"constant","p":0.5})");
  const auto r = Cli({"converge", "--input", c, "--n", "100,200,400", "--seed", "1,2,3", "--degree", "6"});
  REQUIRE(r.code == 0);
  int lines = 0;
  for (char ch : r.out) lines += ch == '\n';
  CHECK(lines == 1 + 3 * 3 * 7);
  CHECK(Cli({"converge", "--input", c, "--n", "100"}).code == 2);
  CHECK(Cli({"converge", "--input", c, "--seed", "1"}).code == 2);
  CHECK(Cli({"converge", "--input", c, "--n", "200,100", "--seed", "1"}).code == 2);
  CHECK(Cli({"converge", "--input", c, "--n", "100", "--seed", "1,2", "--samples", "3"}).code == 2);
}

TEST_CASE("converge output is byte-identical for identical configs") {
  const auto c = Write("c3.json", R"({"type":"constant","p":0.3})");
  const auto a = Write("conv_a.csv", "");
  const auto b = Write("conv_b.csv", "");
  const std::vector<std::string> base{"converge", "--input", c, "--n", "50,80", "--seed", "9", "--samples", "2"};
  auto args_a = base;
  args_a.insert(args_a.end(), {"--out", a});
  auto args_b = base;
  args_b.insert(args_b.end(), {"--out", b, "--threads", "2"});
  REQUIRE(Cli(args_a).code == 0);
  REQUIRE(Cli(args_b).code == 0);
  CHECK(Slurp(a) == Slurp(b));
  CHECK_FALSE(Slurp(a).empty());
}

TEST_CASE("quasirandom command") {
  const auto c = Write("c4.json", R"({"type":"constant","p":0.5})");
  const auto yes = Cli({"quasirandom", "--input", c, "--p", "1/2", "--n", "200,400", "--seed", "5"});
  CHECK(yes.code == 0);
  CHECK(yes.out.find("# verdict=PASS") != std::string::npos);
  const auto h = Write("h2.json", R"({"type":"half"})");
  const auto no = Cli({"quasirandom", "--input", h, "--p", "1/2", "--n", "100,200", "--sampling", "grid",
                       "--format", "json"});
  REQUIRE(no.code == 0);
  const auto j = nlohmann::json::parse(no.out);
  CHECK(j["verdict"] == "FAIL");
  CHECK(Cli({"quasirandom", "--input", c, "--p", "1/2", "--n", "100"}).code == 2);
  CHECK(Cli({"quasirandom", "--input", c, "--p", "3/2", "--n", "100", "--seed", "1"}).code == 2);
}

TEST_CASE("signs and partitions commands") {
  const auto s = Cli({"signs", "--p", "1/2", "--degree", "6"});
  CHECK(s.code == 0);
  CHECK(s.out.find("# signs=+,0,-,-,+,+,-\n") != std::string::npos);
  CHECK(s.out.find("6,-1/2304,-,") != std::string::npos);
  CHECK(Cli({"signs", "--p", "x"}).code == 2);
  const auto p = Cli({"partitions", "--degree", "4"});
  CHECK(p.code == 0);
  CHECK(p.out == "partition,twos,parts,components,cycles,eta,sign,vertices,edges\n4,0,1,1,1,4,-1,4,4\n"
                 "2+2,2,2,2,0,8,1,4,2\n");
}

}  // namespace
}  // namespace psigraph

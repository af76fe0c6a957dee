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

#include "psigraph/partitions.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "psigraph/error.hpp"

namespace psigraph {

Partition Partition::FromParts(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  Partition p;
  for (int b : parts) {
    if (b < 2) throw InvalidInput("partition parts must be at least 2");
    p.total_ += b;
    if (!p.parts_.empty() && p.parts_.back().size == b) {
      ++p.parts_.back().multiplicity;
    } else {
      p.parts_.push_back({b, 1});
    }
  }
  return p;
}

int Partition::num_parts() const {
  int c = 0;
  for (const auto& part : parts_) c += part.multiplicity;
  return c;
}

int Partition::count_of(int size) const {
  for (const auto& part : parts_) {
    if (part.size == size) return part.multiplicity;
  }
  return 0;
}

std::vector<int> Partition::expanded() const {
  std::vector<int> out;
  for (const auto& part : parts_) out.insert(out.end(), static_cast<std::size_t>(part.multiplicity), part.size);
  return out;
}

namespace partitions {
namespace {

void Enumerate(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition::FromParts(prefix));
    return;
  }
  for (int b = std::min(remaining, max_part); b >= 2; --b) {
    prefix.push_back(b);
    Enumerate(remaining - b, b, prefix, out);
    prefix.pop_back();
  }
}

Integer Factorial(int m) {
  Integer f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

}  // namespace

std::vector<Partition> enumerate_min2(int k) {
  if (k < 0) throw InvalidInput("partition total must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> prefix;
  Enumerate(k, k, prefix, out);
  return out;
}

Integer eta(const Partition& p) {
  Integer result = 1;
  for (const auto& part : p.parts()) {
    result *= boost::multiprecision::pow(Integer(part.size), static_cast<unsigned>(part.multiplicity));
    result *= Factorial(part.multiplicity);
  }
  return result;
}

std::vector<Partition> lambda_filter(int k, int num_twos, int num_parts) {
  if (k < 0 || num_twos < 0 || num_parts < 0) {
    throw InvalidInput("lambda_filter arguments must be nonnegative");
  }
  std::vector<Partition> out;
  for (auto& p : enumerate_min2(k)) {
    if (p.num_parts() == num_parts && p.count_of(2) == num_twos) out.push_back(std::move(p));
  }
  return out;
}

HSTerm hs_term(const Partition& p) {
  HSTerm t;
  t.partition = p;
  t.components = p.num_parts();
  t.cycles = t.components - p.count_of(2);
  t.eta = eta(p);
  t.sign = t.components % 2 == 0 ? 1 : -1;
  return t;
}

std::vector<HSTerm> hs_family(int k) {
  std::vector<HSTerm> out;
  for (const auto& p : enumerate_min2(k)) out.push_back(hs_term(p));
  return out;
}

std::string to_string(const Partition& p) {
  if (p.empty()) return "0";
  std::string s;
  for (int b : p.expanded()) {
    if (!s.empty()) s += '+';
    s += std::to_string(b);
  }
  return s;
}

}  // namespace partitions
}  // namespace psigraph

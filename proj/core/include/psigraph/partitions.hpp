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

#ifndef PSIGRAPH_PARTITIONS_HPP
#define PSIGRAPH_PARTITIONS_HPP

#include <string>
#include <vector>

#include "psigraph/series.hpp"

namespace psigraph {

struct Part {
  int size = 0;
  int multiplicity = 0;

  friend bool operator==(const Part&, const Part&) = default;
};

/// Integer partition with all parts >= 2, stored as (size, multiplicity)
/// pairs with distinct sizes in decreasing order.
class Partition {
 public:
  Partition() = default;
  // Accepts parts in any order; throws InvalidInput on a part < 2.
  static Partition FromParts(std::vector<int> parts);

  const std::vector<Part>& parts() const { return parts_; }
  int total() const { return total_; }
  int num_parts() const;
  int count_of(int size) const;
  // Parts listed in decreasing order, with repetition.
  std::vector<int> expanded() const;
  bool empty() const { return parts_.empty(); }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<Part> parts_;
  int total_ = 0;
};

/// One member of the Harary–Sachs family H_k: a disjoint union of edges
/// (parts of size 2) and cycles C_b (parts of size b >= 3).
struct HSTerm {
  Partition partition;
  int components = 0;  // c(H)
  int cycles = 0;      // z(H)
  Integer eta = 1;
  int sign = 1;  // (-1)^c

  int num_vertices() const { return partition.total(); }
  int num_edges() const { return partition.total() - components + cycles; }
};

namespace partitions {

// All partitions of k into parts >= 2, reverse-lexicographic on the decreasing
// part lists: (4) precedes (2,2).
std::vector<Partition> enumerate_min2(int k);

// prod_i b_i^{m_i} m_i!
Integer eta(const Partition& p);

/// Partitions of k into exactly `num_parts` parts, all >= 2, of which exactly
/// `num_twos` equal 2.
std::vector<Partition> lambda_filter(int k, int num_twos, int num_parts);

std::vector<HSTerm> hs_family(int k);
HSTerm hs_term(const Partition& p);

// "4+2+2"; the empty partition prints as "0".
std::string to_string(const Partition& p);

}  // namespace partitions
}  // namespace psigraph

#endif  // PSIGRAPH_PARTITIONS_HPP

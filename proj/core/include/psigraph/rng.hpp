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

#ifndef PSIGRAPH_RNG_HPP
#define PSIGRAPH_RNG_HPP

#include <cstdint>
#include <random>

namespace psigraph::rng {

// std::mt19937_64 output is fixed by the standard, so seeded streams are
// bit-identical across platforms. Standard distributions are not, which is
// why uniform01 converts raw bits itself.
using Engine = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t& state);

/// Independent engine for (seed, stream). Generators use stream 0 for latent
/// coordinates and stream i+1 for the pairs {i, j>i} of vertex i.
Engine substream(std::uint64_t seed, std::uint64_t stream);

// Uniform on [0, 1) with 53 random bits.
double uniform01(Engine& engine);

}  // namespace psigraph::rng

#endif  // PSIGRAPH_RNG_HPP

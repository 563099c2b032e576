/*
 * Copyright 2026 The omegagames Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "omegagames/arena.hpp"
#include "omegagames/conditions.hpp"

namespace omega {

using Rng = std::mt19937_64;

/// OMEGAGAMES_SEED if set and numeric, else `fallback`.
std::uint64_t seed_from_env(std::uint64_t fallback);

struct RandomArenaOptions
{
    std::size_t min_vertices = 1;
    std::size_t max_vertices = 10;
    std::uint64_t max_priority = 3; ///< priorities drawn from [0, max_priority]
    std::size_t max_out_degree = 3;
};

/// Vertex ids "v0", "v1", ...; every vertex gets 1..max_out_degree successors.
Arena random_arena(Rng& rng, const RandomArenaOptions& opts);

/// A random path-shaped condition over {0..k-1}, k = alphabet_size.
cond::ZielonkaPath random_path_spec(Rng& rng, std::size_t alphabet_size);

} // namespace omega

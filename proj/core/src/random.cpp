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

#include "omegagames/random.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace omega {

std::uint64_t
seed_from_env(std::uint64_t fallback)
{
    const char* s = std::getenv("OMEGAGAMES_SEED");
    if (!s || !*s) return fallback;
    char* end = nullptr;
    auto v = std::strtoull(s, &end, 10);
    return *end == '\0' ? v : fallback;
}

namespace {

std::size_t
uniform(Rng& rng, std::size_t lo, std::size_t hi)
{
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

} // namespace

Arena
random_arena(Rng& rng, const RandomArenaOptions& opts)
{
    const auto n = uniform(rng, std::max<std::size_t>(opts.min_vertices, 1), std::max(opts.min_vertices, opts.max_vertices));
    ArenaBuilder b;
    for (std::size_t v = 0; v < n; ++v)
        b.vertex("v" + std::to_string(v), uniform(rng, 0, 1) ? Player::One : Player::Zero,
                 Priority(uniform(rng, 0, opts.max_priority)));
    for (std::size_t v = 0; v < n; ++v) {
        const auto d = uniform(rng, 1, std::max<std::size_t>(opts.max_out_degree, 1));
        for (std::size_t i = 0; i < d; ++i) b.edge("v" + std::to_string(v), "v" + std::to_string(uniform(rng, 0, n - 1)));
    }
    return b.build();
}

cond::ZielonkaPath
random_path_spec(Rng& rng, std::size_t alphabet_size)
{
    std::vector<std::uint64_t> c(alphabet_size);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = i;
    std::shuffle(c.begin(), c.end(), rng);
    cond::ZielonkaPath p;
    p.root_player = uniform(rng, 0, 1) ? Player::One : Player::Zero;
    p.ends_with_empty = uniform(rng, 0, 1) == 1;
    std::size_t i = 0;
    while (i < c.size()) {
        const auto len = uniform(rng, 1, c.size() - i);
        p.diffs.emplace_back(c.begin() + static_cast<std::ptrdiff_t>(i), c.begin() + static_cast<std::ptrdiff_t>(i + len));
        i += len;
    }
    return p;
}

} // namespace omega

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
#include <limits>
#include <string>
#include <vector>

#include "omegagames/arena.hpp"
#include "omegagames/play.hpp"

namespace omega {

inline constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

/// Next move per owned vertex; kNone where undefined.
struct PositionalStrategy
{
    Player player = Player::Zero;
    std::vector<VertexIndex> moves;

    PositionalStrategy() = default;
    PositionalStrategy(Player p, std::size_t n) : player(p), moves(n, kNone) {}

    bool defined(VertexIndex v) const { return v < moves.size() && moves[v] != kNone; }
    bool operator==(const PositionalStrategy&) const = default;
};

/// Throws BadParams unless every defined move is an edge out of a vertex of `s.player`.
void check_positional(const Arena& a, const PositionalStrategy& s);

/**
 * A strategy with finite memory M = {0..memory_size-1}: initial state m0,
 * update U(m, w) applied on entering w, next move F(v, m) at owned v.
 * Tables hold kNone where undefined; they only need to be total on the
 * pairs a play actually reaches.
 */
struct MemoryStrategy
{
    Player player = Player::Zero;
    std::vector<std::string> memory_names;
    std::size_t initial = 0;
    std::vector<std::vector<std::size_t>> update; // [m][w]
    std::vector<std::vector<VertexIndex>> next;   // [v][m]

    MemoryStrategy() = default;
    MemoryStrategy(Player p, std::size_t memory_size, std::size_t vertices);

    std::size_t memory_size() const { return memory_names.size(); }

    /// The one-state strategy that plays `s`.
    static MemoryStrategy from_positional(const PositionalStrategy& s);
};

void check_memory(const Arena& a, const MemoryStrategy& s);

/**
 * The finite quotient of the strategy forest: vertices (v, m) reachable from
 * the seeds (v0, m0), where at owned vertices only the strategy edge is kept
 * and opponent vertices keep their full out-degree. Product ids are
 * "<vertex>|<memory name>".
 */
struct Product
{
    Arena arena;
    std::vector<VertexIndex> vertex; // projection h: product -> arena
    std::vector<std::size_t> memory;
    std::vector<VertexIndex> seeds;  // product index of (v0, m0) for each seed, in seed order
};

/// Throws StrategyIncomplete(v, m) when a reached pair has no move or no update.
Product product_with_memory(const Arena& a, const MemoryStrategy& s, const std::vector<VertexIndex>& seeds);
Product product_with_memory(const Arena& a, const MemoryStrategy& s);

/// The play from `start` when both players follow their strategies.
Lasso induced_lasso(const Arena& a, const MemoryStrategy& s0, const MemoryStrategy& s1, VertexIndex start);
Lasso induced_lasso(const Arena& a, const PositionalStrategy& s0, const PositionalStrategy& s1, VertexIndex start);

} // namespace omega

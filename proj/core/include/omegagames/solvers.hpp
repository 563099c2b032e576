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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "omegagames/arena.hpp"
#include "omegagames/conditions.hpp"
#include "omegagames/strategy.hpp"
#include "omegagames/zielonka.hpp"

namespace omega {

// All solvers use the min-parity convention: player 0 wins a play iff the
// least priority seen infinitely often is even. Ordinal priorities are
// handled by compress_priorities(), which is sound on finite arenas only.

struct Attractor
{
    VertexMask set;
    PositionalStrategy strategy; ///< one step towards the target, on set ∖ target
};

/// Attractor of `target` for `player` inside the subgame `within` (whole arena if empty).
Attractor attractor(const Arena& a, Player player, const VertexMask& target, const VertexMask& within = {});

struct SolveResult
{
    VertexMask w0;
    VertexMask w1;
    PositionalStrategy strat0; ///< defined on player-0 vertices of w0
    PositionalStrategy strat1; ///< defined on player-1 vertices of w1

    const VertexMask& region(Player p) const { return p == Player::Zero ? w0 : w1; }
    const PositionalStrategy& strategy(Player p) const { return p == Player::Zero ? strat0 : strat1; }
};

/**
 * Per-vertex naturals with the same order and parity as the arena's
 * priorities, packed densely (0 or 1 first). Maps ω, ω+1, ... above every
 * natural that occurs.
 */
std::vector<std::uint64_t> compress_priorities(const Arena& a);

SolveResult solve_parity_recursive(const Arena& a);

/**
 * A progress measure for `player`: per vertex a tuple indexed by the
 * priorities of the opponent's parity (odd ones for player 0), or top.
 */
struct ProgressMeasure
{
    Player player = Player::Zero;
    std::vector<std::uint64_t> levels;            ///< compressed priorities the tuple positions stand for
    std::vector<std::uint64_t> priority;          ///< compressed priority per vertex
    std::vector<std::vector<std::uint64_t>> value;
    std::vector<bool> top;

    /// Compare the prefixes up to level `n`: -1, 0, 1. Top is above everything.
    int compare(VertexIndex s, VertexIndex t, std::uint64_t n) const;
};

struct SpmResult
{
    SolveResult result;
    ProgressMeasure measure0;
    ProgressMeasure measure1; ///< measure of the dual game (roles swapped)
};

SpmResult solve_parity_spm(const Arena& a);

/// The least progress measure for one player.
ProgressMeasure progress_measure(const Arena& a, Player player);

struct Verdict
{
    bool pass = true;
    std::vector<VertexIndex> witness; ///< a closed walk in the restriction won by the opponent
    std::string detail;
};

inline constexpr std::size_t kMaxMullerCheckRegion = 14;

/**
 * Is `s` winning for its player from every vertex of `region` under `c`?
 * Parity-type conditions use a cycle check per priority; the others
 * enumerate vertex subsets of the region (at most 14 vertices).
 * Throws RegionNotClosed, TooLargeForMullerCheck.
 */
Verdict verify_positional(const Arena& a, const ConditionSpec& c, const PositionalStrategy& s, const VertexMask& region);

/**
 * Is the finite-memory strategy winning from every (v, m0), v in region?
 * Checks all cycles of the product exactly (recursive SCC decomposition).
 */
Verdict verify_memory(const Arena& a, const ConditionSpec& c, const MemoryStrategy& s, const VertexMask& region);

/**
 * Searches the subgraph on `within` for a closed walk whose priority set is
 * won by `target`, reachable from `from` (all of `within` if empty).
 * Exact: decomposes into SCCs and recurses after dropping one priority.
 */
std::optional<std::vector<VertexIndex>> find_cycle_won_by(const Arena& a, const VertexMask& within,
                                                          const std::function<Player(const PrioritySet&)>& member,
                                                          Player target, const std::vector<VertexIndex>& from = {});

/// Vertex ids -> closed walk through every vertex of a strongly connected `set`.
std::vector<VertexIndex> closed_walk(const Arena& a, const VertexMask& set);

/**
 * Per-vertex min-parity priorities equivalent to `c` on the priorities that
 * occur in `a`, or nullopt if no parity condition is (|C| <= 16 for the
 * Muller kinds). role_swapped reports whether parity player 0 stands for
 * source player 1.
 */
struct ParityRelabeling
{
    std::vector<std::uint64_t> priority;
    bool role_swapped = false;
};
std::optional<ParityRelabeling> parity_relabeling(const ConditionSpec& c, const Arena& a);

inline constexpr std::size_t kMaxLarAlphabet = 8;

/**
 * Latest-appearance-record product: vertices (v, record, hit), where record
 * is a permutation of C and hit the previous position of Ω(v). Its min-parity
 * winner projects to the Muller winner from (v, initial record).
 */
struct LarProduct
{
    Arena arena;
    std::vector<VertexIndex> vertex;                  ///< projection to the source arena
    std::vector<std::size_t> record;                  ///< record index per product vertex
    std::vector<std::size_t> hit;                     ///< hit position per product vertex
    std::vector<std::vector<Priority>> records;       ///< record index -> permutation of C
    std::vector<VertexIndex> initial;                 ///< source vertex -> product vertex
};

/// Throws AlphabetTooLarge for |C| > 8, OutOfAlphabet if a priority is outside C.
LarProduct lar_reduce(const Arena& a, const cond::ExplicitMuller& c);

struct MullerSolveResult
{
    enum class Route { Path, Lar };

    VertexMask w0;
    VertexMask w1;
    Route route = Route::Path;
    std::optional<PositionalStrategy> positional0;
    std::optional<PositionalStrategy> positional1;
    std::optional<MemoryStrategy> memory0;
    std::optional<MemoryStrategy> memory1;
    std::optional<Reduction> reduction;

    const VertexMask& region(Player p) const { return p == Player::Zero ? w0 : w1; }
};

enum class MullerRoute { Automatic, Path, Lar };

/**
 * Path-shaped conditions go through reduce_to_parity and come back with
 * positional strategies; the rest through lar_reduce with memory strategies.
 * Forcing Path on a non-path condition throws NotAPath.
 */
MullerSolveResult solve_muller(const Arena& a, const ConditionSpec& c, MullerRoute route = MullerRoute::Automatic);

} // namespace omega

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

// Fixed-point stage ranks and the signatures built from them, and the
// extraction of a positional strategy from a finite-memory winning strategy
// by copying the move of a signature-minimal occurrence of every vertex.
//
// On finite graphs every stage is a natural number or infinite; nothing
// transfinite is represented.

#include <cstdint>
#include <optional>
#include <vector>

#include "omegagames/arena.hpp"
#include "omegagames/conditions.hpp"
#include "omegagames/strategy.hpp"

namespace omega {

struct StageTable
{
    enum class Kind { Alpha, Beta };

    Kind kind = Kind::Alpha;
    std::vector<std::optional<std::uint64_t>> value; ///< nullopt is ∞
    VertexMask p;
    VertexMask q;                  ///< Beta only
    std::vector<VertexMask> stages; ///< X^0 ⊆ X^1 ⊆ ... up to the fixpoint

    bool finite() const;
};

/**
 * α(s): least stage of μX.νY.(P → □X) ∧ □Y, i.e. how often a path from s
 * can still hit P. ∞ exactly where some path hits P infinitely often.
 */
StageTable compute_alpha(const Successors& graph, const VertexMask& p);

/**
 * β(s): least stage of μX.νY.(¬P ∨ □X) ∧ (Q ∨ □Y), i.e. how often a path
 * from s can hit P before seeing Q. A state in P ∩ Q still needs □X.
 */
StageTable compute_beta(const Successors& graph, const VertexMask& p, const VertexMask& q);

/**
 * Lexicographic signatures of a product graph for `player`: one β per
 * priority n of the opponent's parity (odd n for player 0), with P the
 * vertices of priority n and Q those of priority < n. Priorities are the
 * compressed ones (see compress_priorities).
 */
struct SignatureOrder
{
    Player player = Player::Zero;
    std::vector<std::uint64_t> levels;
    std::vector<std::uint64_t> priority;
    std::vector<std::vector<std::uint64_t>> sig; ///< [vertex][level index]

    /// Compare sig(s) and sig(t) on the levels <= n: -1, 0 or 1.
    int compare(VertexIndex s, VertexIndex t, std::uint64_t n) const;
    bool less(VertexIndex s, VertexIndex t, std::uint64_t n) const { return compare(s, t, n) < 0; }
};

/// Throws InputStrategyNotWinning if some β is infinite (a losing cycle is reachable).
SignatureOrder signatures(const Arena& product, Player player);

struct Positionalized
{
    PositionalStrategy strategy;
    Product product;
    SignatureOrder order;
    std::vector<VertexIndex> occurrence; ///< chosen product vertex per region vertex, kNone elsewhere
};

/**
 * Positional strategy for s.player on `region` from the winning
 * finite-memory strategy `s`. The condition must be MinParity, OrdinalParity
 * or Infinity (the latter is embedded as Ω' = 2Ω + 1).
 * Throws InputStrategyNotWinning, RegionNotClosed, BadParams.
 */
Positionalized positionalize(const Arena& a, const ConditionSpec& c, const MemoryStrategy& s,
                             const VertexMask& region);

/// Vertices v with no losing cycle reachable from (v, m0) in the product.
VertexMask winning_region_of(const Arena& a, const ConditionSpec& c, const MemoryStrategy& s);

} // namespace omega

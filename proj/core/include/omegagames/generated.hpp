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

// Finite windows onto the infinite gadget arenas. Every family is indexed by
// a truncation N >= 1; expand(g) for N is an induced subgraph of expand(g)
// for N+1. What survives truncation differs per family and is stated next to
// each one below.

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

#include "omegagames/arena.hpp"

namespace omega {

enum class Family { Flower, ChainGame, SplitGame, Ladder };

std::string_view family_name(Family f);
/// Throws UnknownFamily.
Family family_from_name(std::string_view name);

enum class FlowerVariant {
    MaxParity, ///< center priority 0, petals 1,3,5,...
    Ordinal,   ///< center priority ω, petals 1,3,5,... (min-parity)
};

/**
 * Descending chain X_1 ⊇ X_2 ⊇ ... with intersection Y, and an anchor a ∈ Y.
 * `window(i, n)` returns X_i cut down to what truncation n keeps.
 */
struct ChainDescriptor
{
    std::string name;
    PrioritySet y;
    Priority a;
    Player sigma = Player::Zero; ///< the player who wins with infinite memory
    std::function<PrioritySet(std::size_t i, std::size_t n)> window;

    /// X_i = {1} ∪ {n : n > i}, Y = {1}; window keeps naturals <= n + 2.
    static ChainDescriptor max_parity();
    /// X_i = {ω} ∪ {n : 2i+1 <= n < ω}, Y = {ω}; window keeps naturals <= 2n + 2.
    static ChainDescriptor ordinal();
};

/// Throws BadDescriptor if Y is empty, a ∉ Y, or some window misses Y or breaks monotonicity.
void check_descriptor(const ChainDescriptor& d, std::size_t n);

struct GeneratedArena
{
    Family family = Family::Flower;
    std::size_t truncation = 1;

    FlowerVariant flower = FlowerVariant::MaxParity;

    ChainDescriptor chain = ChainDescriptor::max_parity();
    bool finite_appearance = false;

    /// Split game: explicit Y and anchor a; when `union_chain` is set,
    /// Y = {0, ..., 2N+1} and a = 1 instead (the ascending max-parity chain).
    PrioritySet split_y;
    Priority split_a;
    Player split_sigma = Player::Zero;
    bool union_chain = false;
};

/**
 * Flower: center "c" (player 0) <-> petals "p<2k+1>" (player 1), k < N.
 *
 * Chain game: "c" (sigma) -> boxes "b<i>" (opponent, priority a), i <= N ->
 * elements "x<i>.<p>" of X_i -> "f" (sigma) -> elements "y.<p>" of Y -> "c".
 * With finite_appearance every box points at the X_1 copies instead.
 *
 * Split game: "s" (sigma, priority a) -> "s.<p>" for p in Y -> "o"
 * (opponent, priority a) -> "o.<p>" -> "s".
 *
 * Ladder (solitaire, all player 0): "a"(2) -> "t1"(1) -> ... -> "tN"(1);
 * "t<k>" -> "r<k>"(2k+1) -> "d<k>"(2) -> "d<k-1>" ... -> "d1" -> "a".
 * The last top cell has only its rung.
 *
 * Throws BadParams for N == 0, BadDescriptor for a bad chain descriptor.
 */
Arena expand(const GeneratedArena& g);

} // namespace omega

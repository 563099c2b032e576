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

// Gadget arenas on which some player wins only with infinite memory (or not
// positionally), with refutation of every small-memory strategy on a finite
// truncation and certified schedules for the infinite-memory winning plays.
//
// A refutation only covers strategies whose memory and priority support fit
// the truncation. That no finite-memory strategy wins on the infinite arena
// is a theorem about the infinite game, not something these runs establish.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "omegagames/conditions.hpp"
#include "omegagames/generated.hpp"
#include "omegagames/play.hpp"

namespace omega {

struct Gadget
{
    std::string name;
    GeneratedArena generated;
    Arena arena;
    ConditionSpec condition;
    Player sigma = Player::Zero; ///< wins the infinite game, but not with the refuted memory
    std::string start;
};

Gadget gen_flower(std::size_t n, FlowerVariant variant = FlowerVariant::MaxParity);
Gadget gen_chain_game(const ChainDescriptor& d, std::size_t n, bool finite_appearance = false);
/// Throws BadParams unless a ∈ Y ⊆ alphabet of c (for explicit conditions).
Gadget gen_split_game(const PrioritySet& y, Priority a, const ConditionSpec& c, Player sigma);
/// Split game over Y = {0..2k+1}, a = 1, max-parity: the ascending chain X_i = {j <= 2i+1}.
Gadget gen_union_chain(std::size_t k);
Gadget gen_ladder(std::size_t n);

/// The strong-split instance C = {0,1,2}, a = 1, F0 = {{0,2}, {0,1,2}}; sigma = 0.
Gadget split_game_strong_split();

/// Player 0 visits petal 2k+1 in round k. Inf-set {center}.
ScheduledPlay flower_schedule(FlowerVariant variant);
/// Round i: box i, opponent answers with the least element of X_i outside Y, then a sweep of Y.
ScheduledPlay chain_schedule(const ChainDescriptor& d);
/// Round r descends at column r. Inf-set {1, 2}.
ScheduledPlay ladder_schedule();

struct RefutationOptions
{
    std::size_t memory_bound = 1;
    std::size_t budget = 10000;  ///< machines enumerated or sampled
    std::uint64_t seed = 1;
    bool require_exhaustive = false; ///< BudgetExceeded instead of sampling
};

struct RefutationWitness
{
    std::string strategy_class; ///< inf-set of the losing play
    Lasso lasso;
    std::size_t count = 0;
};

struct RefutationReport
{
    std::string gadget;
    std::size_t truncation = 0;
    std::size_t memory_bound = 0;
    std::string machine_count;          ///< |machines| with exactly memory_bound states, decimal
    bool enumerated_exhaustively = false;
    std::size_t examined = 0;
    std::size_t refuted = 0;
    std::size_t survivors = 0;
    bool product_checked = false;       ///< the memory-choice product was solved
    bool product_refutes_all = false;   ///< ... and sigma loses it from the start
    std::vector<RefutationWitness> witnesses;
    std::vector<std::string> notes;

    bool ok() const { return survivors == 0 && (!product_checked || product_refutes_all); }
};

/**
 * Refutes every strategy of g.sigma with at most `memory_bound` memory states
 * from g.start on the truncated arena. Two routes:
 *  - the memory-choice product (sigma also picks the next memory state),
 *    solved as a parity game when the condition is parity-equivalent on the
 *    occurring priorities: sigma losing it refutes all machines at once;
 *  - explicit machines, enumerated when there are at most `budget` of them,
 *    sampled otherwise, each checked against the opponent's best response
 *    on the machine's product.
 */
RefutationReport refute_finite_memory(const Gadget& g, const RefutationOptions& opts);

std::string format_report(const RefutationReport& r);

} // namespace omega

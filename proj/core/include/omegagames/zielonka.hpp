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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "omegagames/conditions.hpp"

namespace omega {

inline constexpr std::size_t kMaxTreeAlphabet = 16;

/**
 * Zielonka tree of a Muller condition over a finite alphabet. Node 0 is the
 * root (C, σ) with C ∈ F_σ; the children of (X, σ) are the maximal subsets of
 * X lying in F_{1-σ}, ordered lexicographically by their sorted labels.
 */
struct ZielonkaTree
{
    struct Node
    {
        PrioritySet label;
        Player player;
        std::size_t parent = SIZE_MAX;
        std::vector<std::size_t> children;
    };
    std::vector<Node> nodes;

    const Node& root() const { return nodes.front(); }
};

/// Throws AlphabetTooLarge for |C| > 16.
ZielonkaTree build_tree(const cond::ExplicitMuller& c);

/// Every node has at most one child. Over a finite C every label is co-finite.
bool is_path_of_cofinite(const ZielonkaTree& t);
bool is_path_of_cofinite(const cond::ZielonkaPath& spec);

struct StrongSplit
{
    Player side; ///< both sets lie in F_side, their union in F_{1-side}
    PrioritySet first;
    PrioritySet second;
};

struct P0Verdict
{
    bool pass = true;
    std::optional<StrongSplit> witness;
};

/// Exhaustive scan for a strong split. Throws AlphabetTooLarge for |C| > 16.
P0Verdict check_p0(const cond::ExplicitMuller& c);

/// A chain X_1, X_2, ... whose limit (intersection or union) changes sides.
struct ChainWitness
{
    std::string description;
    bool descending = true;
    Player chain_side = Player::Zero;         ///< every X_i lies in F_chain_side
    std::vector<InfSetDescriptor> members;    ///< X_1 .. X_8
    InfSetDescriptor limit;                   ///< ∩ X_i or ∪ X_i
};

struct ChainVerdict
{
    bool pass = true;
    std::optional<ChainWitness> witness;
    std::string reason;
};

struct ChainReport
{
    ChainVerdict p1; ///< closure under non-empty intersections of descending chains
    ChainVerdict p2; ///< closure under unions of ascending chains
};

inline constexpr std::size_t kWitnessDepth = 8;

/**
 * Table-driven P1/P2 verdicts for the built-in families and path specs;
 * finite alphabets pass vacuously. Each witness is checked with member() on
 * X_1..X_8 and on its limit before being returned (a failed check throws
 * Mismatch).
 */
ChainReport check_chains(const ConditionSpec& c);

/// Re-runs the member() checks on a witness. Returns false on any disagreement.
bool validate_witness(const ConditionSpec& c, const ChainWitness& w);

struct ClassificationReport
{
    P0Verdict p0;
    ChainVerdict p1;
    ChainVerdict p2;
    bool path_shape = false;
};

ClassificationReport classify(const ConditionSpec& c);

/**
 * A map f from priorities to ω such that, for non-empty X, X is won by the
 * normalized player 0 iff min f(X) is even. `role_swapped` means the source
 * condition had ∅ ∈ F1, so parity player 0 stands for source player 1.
 *
 * f is given explicitly on a finite support; elsewhere by `tail`:
 *  - None: f is only defined on the support (finite alphabets);
 *  - Identity: f(x) = x;
 *  - Constant: f(x) = target;
 *  - OddEnumeration: x ↦ target + 2·rank(x), rank counting naturals outside
 *    the support in increasing order (target is odd).
 */
struct Reduction
{
    enum class Tail { None, Identity, Constant, OddEnumeration };

    std::map<Priority, std::uint64_t> f;
    Tail tail = Tail::None;
    std::uint64_t target = 0;
    bool role_swapped = false;
    std::optional<std::uint64_t> alpha; ///< finite α, or nullopt for α = ω

    /// Throws OutOfAlphabet where f is undefined.
    std::uint64_t apply(const Priority& p) const;
    /// Source-player winner of a set X, computed through f.
    Player winner(const PrioritySet& x) const;
};

/// Throws NotAPath for conditions without a path-shaped Zielonka tree.
Reduction reduce_to_parity(const ConditionSpec& c);

struct ReductionReport
{
    std::size_t sets_checked = 0;
    std::size_t lassos_checked = 0;
    std::size_t preimage_checks = 0;
};

struct LassoSample
{
    const Arena* arena;
    Lasso lasso;
};

/// Compares member(c, X) against the parity rule through r. Throws Mismatch.
ReductionReport verify_reduction(const Reduction& r, const ConditionSpec& c, const std::vector<PrioritySet>& sets,
                                 const std::vector<LassoSample>& lassos = {});

} // namespace omega

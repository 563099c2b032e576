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

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "omegagames/arena.hpp"
#include "omegagames/play.hpp"

namespace omega {

namespace cond {

/// Player 0 wins iff the inf-set is empty.
struct Infinity
{
    bool operator==(const Infinity&) const = default;
};

/// Player 0 wins iff the inf-set is empty or its least element is even.
struct MinParity
{
    bool operator==(const MinParity&) const = default;
};

/// Player 0 wins iff the inf-set is empty, infinite, or has an even maximum.
struct MaxParity
{
    bool operator==(const MaxParity&) const = default;
};

/// Min-parity over the ordinals below `bound`.
struct OrdinalParity
{
    Priority bound;
    bool operator==(const OrdinalParity&) const = default;
};

/// (F0, F1) over a finite alphabet C; F1 is P(C) minus F0.
struct ExplicitMuller
{
    PrioritySet alphabet;
    std::vector<PrioritySet> f0;
    bool operator==(const ExplicitMuller&) const = default;
};

/**
 * The condition whose Zielonka tree is the path
 * Z_0 = C ⊋ Z_1 ⊋ ... ⊋ Z_k (optionally followed by ∅), Z_{i+1} = Z_i ∖ D_i,
 * with Z_0 owned by root_player and owners alternating. The ambient C is ω
 * together with every priority mentioned in a diff.
 */
struct ZielonkaPath
{
    Player root_player = Player::Zero;
    std::vector<PrioritySet> diffs;
    bool ends_with_empty = false;
    bool operator==(const ZielonkaPath&) const = default;
};

/// F0 = P(Y) ∪ {{e}} ∪ {∅}, F1 = {Z : e ∈ Z, Z ∩ Y ≠ ∅}; `y_window` is a finite part of Y.
struct SingletonLimit
{
    PrioritySet y_window;
    Priority e;
    bool operator==(const SingletonLimit&) const = default;
};

} // namespace cond

using ConditionSpec = std::variant<cond::Infinity, cond::MinParity, cond::MaxParity, cond::OrdinalParity,
                                   cond::ExplicitMuller, cond::ZielonkaPath, cond::SingletonLimit>;

std::string kind_name(const ConditionSpec& c);

/// The player σ with X ∈ F_σ. Throws OutOfAlphabet for priorities outside C.
Player member(const ConditionSpec& c, const PrioritySet& x);

/// As member(), for finite or co-finite descriptors.
Player member(const ConditionSpec& c, const InfSetDescriptor& x);

Player winner_of_lasso(const ConditionSpec& c, const Arena& a, const Lasso& l);

struct BoundCheck
{
    enum class Kind { Stabilization, Deadline };
    Kind kind;
    Priority priority;
    std::uint64_t k = 0;     ///< occurrence count demanded (deadlines)
    std::uint64_t bound = 0; ///< b(c) or T(c, k)
};

struct CertificateReport
{
    std::uint64_t horizon = 0;
    std::vector<BoundCheck> checks;
    std::string summary;
};

struct ScheduledVerdict
{
    Player winner;
    CertificateReport report;
};

/**
 * Checks the certificate of `p` on its first `horizon` steps and evaluates the
 * declared inf-set. Throws CertificateViolated(step, priority) on the first
 * inconsistency. Success only means "consistent up to horizon".
 */
ScheduledVerdict winner_of_scheduled(const ConditionSpec& c, const ScheduledPlay& p, std::uint64_t horizon);

/// The restriction of `c` to the finite set C as an explicit (F0, F1). |C| <= 16.
cond::ExplicitMuller materialize(const ConditionSpec& c, const PrioritySet& alphabet);

/// Throws BadParams for malformed specs (e.g. overlapping or empty diffs, F0 outside C).
void check_condition(const ConditionSpec& c);

} // namespace omega

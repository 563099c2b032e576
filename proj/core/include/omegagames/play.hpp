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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "omegagames/arena.hpp"

namespace omega {

/// An ultimately periodic play: prefix followed by the loop repeated forever.
struct Lasso
{
    std::vector<VertexIndex> prefix;
    std::vector<VertexIndex> loop;

    /// Priorities on the loop.
    PrioritySet inf_set(const Arena& a) const;
    bool operator==(const Lasso&) const = default;
};

/// Checks every consecutive pair, including the loop wrap-around, is an edge.
bool is_valid_lasso(const Arena& a, const Lasso& l);

/**
 * A priority set that is either finite, or the union of a finite part with a
 * co-finite set of naturals: finite ∪ (ω ∖ excluded).
 */
struct InfSetDescriptor
{
    PrioritySet finite;
    bool cofinite = false;
    PrioritySet excluded;

    static InfSetDescriptor of(PrioritySet s) { return {std::move(s), false, {}}; }
    static InfSetDescriptor all_naturals_except(PrioritySet e, PrioritySet extra = {})
    {
        return {std::move(extra), true, std::move(e)};
    }

    bool contains(const Priority& p) const;
    bool empty() const { return !cofinite && finite.empty(); }
};

std::string to_string(const InfSetDescriptor& d);

struct PlayStep
{
    std::string vertex;
    Priority priority;
};

/**
 * A play that need not be ultimately periodic, given by a step function and a
 * certificate for its inf-set:
 *  - every priority outside the declared inf-set has a stabilization bound
 *    b(c): c does not occur at any step >= b(c);
 *  - every priority c inside it has deadlines T(c, k): c occurs at least k
 *    times among steps [0, T(c, k)).
 * The certificate can only be checked on a finite horizon.
 */
struct ScheduledPlay
{
    std::function<PlayStep(std::uint64_t)> step;
    InfSetDescriptor declared_inf_set;
    std::function<std::optional<std::uint64_t>(const Priority&)> stabilization;
    std::function<std::uint64_t(const Priority&, std::uint64_t)> deadline;
    std::string description;
};

} // namespace omega

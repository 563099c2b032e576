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

#include <compare>
#include <cstdint>
#include <set>
#include <string>

namespace omega {

enum class Player : std::uint8_t { Zero = 0, One = 1 };

constexpr Player opponent(Player p) { return p == Player::Zero ? Player::One : Player::Zero; }
constexpr int to_int(Player p) { return static_cast<int>(p); }
constexpr Player player_of_parity(std::uint64_t n) { return (n & 1) ? Player::One : Player::Zero; }

/**
 * An ordinal below omega^2, written omega*limit + offset.
 * Plain natural-number priorities have limit == 0. The ordinal is even iff
 * its finite offset is even.
 */
struct Priority
{
    std::uint32_t limit = 0;
    std::uint64_t offset = 0;

    constexpr Priority() = default;
    constexpr Priority(std::uint64_t n) : offset(n) {} // NOLINT: naturals convert implicitly
    constexpr Priority(std::uint32_t k, std::uint64_t n) : limit(k), offset(n) {}

    static constexpr Priority omega(std::uint64_t n = 0) { return Priority(1u, n); }

    constexpr bool is_natural() const { return limit == 0; }
    constexpr bool is_even() const { return (offset & 1) == 0; }
    constexpr Player parity() const { return player_of_parity(offset); }

    friend constexpr auto operator<=>(const Priority&, const Priority&) = default;
};

using PrioritySet = std::set<Priority>;

/// "5", "w", "w+2", "w*3+1".
std::string to_string(const Priority& p);
std::string to_string(const PrioritySet& s);

} // namespace omega

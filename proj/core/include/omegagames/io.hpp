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

// File formats. All JSON output is canonical: sorted keys, vertices and
// edges sorted by id, two-space indentation and a trailing newline, so that
// writing what was read reproduces canonical input byte for byte.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "omegagames/arena.hpp"
#include "omegagames/conditions.hpp"
#include "omegagames/positionalize.hpp"
#include "omegagames/solvers.hpp"
#include "omegagames/strategy.hpp"
#include "omegagames/zielonka.hpp"

namespace omega::io {

std::string read_file(const std::string& path);

Arena parse_arena_json(std::string_view text);
std::string write_arena_json(const Arena& a);

/**
 * PGSolver files use max-parity. They are mapped to min-parity by
 * p ↦ reflection - p with reflection the least even number >= max p; the
 * header value and vertex names are kept so the file can be written back.
 */
struct PgsolverMeta
{
    std::uint64_t header = 0;
    std::uint64_t reflection = 0;
    std::map<std::string, std::string> names;
};

struct PgsolverArena
{
    Arena arena;
    PgsolverMeta meta;
};

PgsolverArena parse_pgsolver(std::string_view text);
/// Without `meta`, the header is the largest id and the reflection is computed.
std::string write_pgsolver(const Arena& a, const PgsolverMeta* meta = nullptr);

bool looks_like_json(std::string_view text);
/// JSON or PGSolver, by content.
Arena parse_arena_any(std::string_view text);

ConditionSpec parse_condition_json(std::string_view text);
std::string write_condition_json(const ConditionSpec& c);

MemoryStrategy parse_memory_strategy_json(std::string_view text, const Arena& a, std::optional<Player> player = {});
std::string write_memory_strategy_json(const Arena& a, const MemoryStrategy& s);

/// {"player":p,"moves":{"v":"w",...}}; a bare {"v":"w"} map is accepted too.
PositionalStrategy parse_positional_json(std::string_view text, const Arena& a, std::optional<Player> player = {});
std::string write_positional_json(const Arena& a, const PositionalStrategy& s);

std::string write_solve_result_json(const Arena& a, const SolveResult& r);
std::string write_reduction_json(const Reduction& r);
std::string write_classification_json(const ClassificationReport& r);

/// "vertex,value" lines, "inf" for ∞.
std::string write_stages_csv(const Arena& a, const StageTable& t);

struct DotOverlay
{
    std::vector<std::string> w0;
    std::vector<std::string> w1;
    std::map<std::string, std::string> strategy; ///< bold edges
    std::map<std::string, std::string> labels;   ///< secondary labels (stage values)
};

DotOverlay overlay_of(const Arena& a, const SolveResult& r);

/// Player 0 as ellipse, player 1 as box. Throws UnknownVertexInOverlay.
std::string export_dot(const Arena& a, const DotOverlay& overlay = {});

} // namespace omega::io

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

// Plain graph routines on successor lists restricted to a vertex mask.

#include <optional>
#include <vector>

#include "omegagames/arena.hpp"

namespace omega::graph {

VertexMask reachable(const Successors& g, const VertexMask& within, const std::vector<VertexIndex>& from);

/// Shortest path from `from` to `to` inside `within`, both ends included.
std::optional<std::vector<VertexIndex>> path(const Successors& g, const VertexMask& within, VertexIndex from,
                                             VertexIndex to);

/// Strongly connected components of the subgraph on `within` that contain an edge.
std::vector<VertexMask> nontrivial_sccs(const Successors& g, const VertexMask& within);

/// Non-empty, mutually reachable inside `set`, and with at least one edge.
bool strongly_connected(const Successors& g, const VertexMask& set);

/// A shortest cycle v -> ... -> v inside `set`, listed from v without repeating it.
std::vector<VertexIndex> cycle_through(const Successors& g, const VertexMask& set, VertexIndex v);

/// A closed walk through every vertex of the strongly connected `set`.
std::vector<VertexIndex> closed_walk(const Successors& g, const VertexMask& set);

} // namespace omega::graph

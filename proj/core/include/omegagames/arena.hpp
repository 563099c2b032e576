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
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "omegagames/priority.hpp"

namespace omega {

using VertexIndex = std::size_t;
using VertexMask = std::vector<bool>;
using Successors = std::vector<std::vector<VertexIndex>>;

/// Unvalidated arena description, as read from a file or assembled by a generator.
struct RawArena
{
    struct Vertex
    {
        std::string id;
        int owner = 0;
        Priority priority;
    };
    std::vector<Vertex> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
};

/**
 * A finite game graph: vertices with owner and priority, and a total edge
 * relation. Immutable once built; obtain one through validate_arena().
 *
 * Vertex indices follow declaration order. Successor lists are sorted by
 * index and free of duplicates (parallel edges are collapsed).
 */
class Arena
{
  public:
    Arena() = default;

    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }

    const std::string& id(VertexIndex v) const { return ids_[v]; }
    Player owner(VertexIndex v) const { return owners_[v]; }
    const Priority& priority(VertexIndex v) const { return priorities_[v]; }

    const std::vector<VertexIndex>& successors(VertexIndex v) const { return succ_[v]; }
    const std::vector<VertexIndex>& predecessors(VertexIndex v) const { return pred_[v]; }
    const Successors& successor_lists() const { return succ_; }

    std::size_t edge_count() const;
    bool has_edge(VertexIndex from, VertexIndex to) const;

    std::optional<VertexIndex> find(const std::string& id) const;
    /// Throws Error(BadParams) for unknown ids.
    VertexIndex index_of(const std::string& id) const;

    /// Distinct priorities occurring in the arena.
    PrioritySet priorities() const;

    /// Vertex indices ordered lexicographically by id; the tie-break order.
    std::vector<VertexIndex> by_id() const;

    RawArena to_raw() const;

  private:
    friend Arena validate_arena(const RawArena& raw);

    std::vector<std::string> ids_;
    std::vector<Player> owners_;
    std::vector<Priority> priorities_;
    Successors succ_;
    Successors pred_;
    std::unordered_map<std::string, VertexIndex> index_;
};

/**
 * Checks ids are unique, edges reference declared vertices, owners are 0/1,
 * and every vertex has a successor. Throws Error with DuplicateId,
 * DanglingEdge, BadParams or NoSuccessor.
 */
Arena validate_arena(const RawArena& raw);

/// Incremental construction of a RawArena; build() validates.
class ArenaBuilder
{
  public:
    ArenaBuilder& vertex(std::string id, Player owner, Priority priority);
    ArenaBuilder& edge(std::string from, std::string to);
    Arena build() const { return validate_arena(raw_); }
    const RawArena& raw() const { return raw_; }

  private:
    RawArena raw_;
};

/// The subgraph on `keep` (must be closed under at least one successor per vertex).
Arena induced_subarena(const Arena& a, const VertexMask& keep, std::vector<VertexIndex>* old_index = nullptr);

/// Same vertices and edges, priorities replaced.
Arena relabel(const Arena& a, const std::vector<Priority>& priorities);

/// Same vertices and edges, owners flipped.
Arena swap_owners(const Arena& a);

/// Is `small` an induced subgraph of `big` (matching vertices by id)?
bool is_induced_subgraph(const Arena& small, const Arena& big);

} // namespace omega

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

#include "omegagames/arena.hpp"

#include <algorithm>
#include <numeric>

#include "omegagames/error.hpp"

namespace omega {

std::size_t
Arena::edge_count() const
{
    std::size_t n = 0;
    for (const auto& s : succ_) n += s.size();
    return n;
}

bool
Arena::has_edge(VertexIndex from, VertexIndex to) const
{
    const auto& s = succ_[from];
    return std::binary_search(s.begin(), s.end(), to);
}

std::optional<VertexIndex>
Arena::find(const std::string& id) const
{
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

VertexIndex
Arena::index_of(const std::string& id) const
{
    auto v = find(id);
    if (!v) throw Error(Errc::BadParams, "unknown vertex '" + id + "'");
    return *v;
}

PrioritySet
Arena::priorities() const
{
    return PrioritySet(priorities_.begin(), priorities_.end());
}

std::vector<VertexIndex>
Arena::by_id() const
{
    std::vector<VertexIndex> order(size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](VertexIndex a, VertexIndex b) { return ids_[a] < ids_[b]; });
    return order;
}

RawArena
Arena::to_raw() const
{
    RawArena raw;
    for (VertexIndex v = 0; v < size(); ++v) raw.vertices.push_back({ids_[v], to_int(owners_[v]), priorities_[v]});
    for (VertexIndex v = 0; v < size(); ++v)
        for (auto w : succ_[v]) raw.edges.emplace_back(ids_[v], ids_[w]);
    return raw;
}

Arena
validate_arena(const RawArena& raw)
{
    Arena a;
    const auto n = raw.vertices.size();
    a.ids_.reserve(n);
    a.owners_.reserve(n);
    a.priorities_.reserve(n);
    for (const auto& v : raw.vertices) {
        if (!a.index_.emplace(v.id, a.ids_.size()).second) throw Error(Errc::DuplicateId, "vertex '" + v.id + "'");
        if (v.owner != 0 && v.owner != 1)
            throw Error(Errc::BadParams, "vertex '" + v.id + "' has owner " + std::to_string(v.owner));
        a.ids_.push_back(v.id);
        a.owners_.push_back(v.owner == 0 ? Player::Zero : Player::One);
        a.priorities_.push_back(v.priority);
    }
    a.succ_.assign(n, {});
    a.pred_.assign(n, {});
    for (const auto& [from, to] : raw.edges) {
        auto u = a.index_.find(from);
        auto w = a.index_.find(to);
        if (u == a.index_.end() || w == a.index_.end())
            throw Error(Errc::DanglingEdge, "(" + from + ", " + to + ")");
        a.succ_[u->second].push_back(w->second);
    }
    for (VertexIndex v = 0; v < n; ++v) {
        auto& s = a.succ_[v];
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (s.empty()) throw Error(Errc::NoSuccessor, "vertex '" + a.ids_[v] + "'");
        for (auto w : s) a.pred_[w].push_back(v);
    }
    return a;
}

ArenaBuilder&
ArenaBuilder::vertex(std::string id, Player owner, Priority priority)
{
    raw_.vertices.push_back({std::move(id), to_int(owner), priority});
    return *this;
}

ArenaBuilder&
ArenaBuilder::edge(std::string from, std::string to)
{
    raw_.edges.emplace_back(std::move(from), std::move(to));
    return *this;
}

Arena
induced_subarena(const Arena& a, const VertexMask& keep, std::vector<VertexIndex>* old_index)
{
    RawArena raw;
    if (old_index) old_index->clear();
    for (VertexIndex v = 0; v < a.size(); ++v) {
        if (!keep[v]) continue;
        raw.vertices.push_back({a.id(v), to_int(a.owner(v)), a.priority(v)});
        if (old_index) old_index->push_back(v);
        for (auto w : a.successors(v))
            if (keep[w]) raw.edges.emplace_back(a.id(v), a.id(w));
    }
    return validate_arena(raw);
}

Arena
relabel(const Arena& a, const std::vector<Priority>& priorities)
{
    auto raw = a.to_raw();
    for (VertexIndex v = 0; v < a.size(); ++v) raw.vertices[v].priority = priorities[v];
    return validate_arena(raw);
}

Arena
swap_owners(const Arena& a)
{
    auto raw = a.to_raw();
    for (auto& v : raw.vertices) v.owner = 1 - v.owner;
    return validate_arena(raw);
}

bool
is_induced_subgraph(const Arena& small, const Arena& big)
{
    std::vector<VertexIndex> map(small.size());
    for (VertexIndex v = 0; v < small.size(); ++v) {
        auto w = big.find(small.id(v));
        if (!w || big.owner(*w) != small.owner(v) || big.priority(*w) != small.priority(v)) return false;
        map[v] = *w;
    }
    for (VertexIndex u = 0; u < small.size(); ++u)
        for (VertexIndex v = 0; v < small.size(); ++v)
            if (small.has_edge(u, v) != big.has_edge(map[u], map[v])) return false;
    return true;
}

} // namespace omega

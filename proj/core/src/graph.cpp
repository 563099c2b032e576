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

#include "graph.hpp"

#include <algorithm>
#include <deque>

namespace omega::graph {

VertexMask
reachable(const Successors& g, const VertexMask& within, const std::vector<VertexIndex>& from)
{
    VertexMask seen(g.size(), false);
    std::vector<VertexIndex> stack;
    for (auto v : from)
        if (within[v] && !seen[v]) {
            seen[v] = true;
            stack.push_back(v);
        }
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto w : g[v])
            if (within[w] && !seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    return seen;
}

std::optional<std::vector<VertexIndex>>
path(const Successors& g, const VertexMask& within, VertexIndex from, VertexIndex to)
{
    std::vector<VertexIndex> parent(g.size(), SIZE_MAX);
    std::deque<VertexIndex> queue{from};
    parent[from] = from;
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        if (v == to) break;
        for (auto w : g[v])
            if (within[w] && parent[w] == SIZE_MAX) {
                parent[w] = v;
                queue.push_back(w);
            }
    }
    if (parent[to] == SIZE_MAX) return std::nullopt;
    std::vector<VertexIndex> p{to};
    while (p.back() != from) p.push_back(parent[p.back()]);
    std::reverse(p.begin(), p.end());
    return p;
}

std::vector<VertexMask>
nontrivial_sccs(const Successors& g, const VertexMask& within)
{
    const auto n = g.size();
    std::vector<std::size_t> index(n, SIZE_MAX), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<VertexIndex> stack;
    std::vector<VertexMask> out;
    std::size_t counter = 0;

    struct Frame
    {
        VertexIndex v;
        std::size_t next;
    };
    for (VertexIndex root = 0; root < n; ++root) {
        if (!within[root] || index[root] != SIZE_MAX) continue;
        std::vector<Frame> call{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto& f = call.back();
            const auto v = f.v;
            if (f.next < g[v].size()) {
                const auto w = g[v][f.next++];
                if (!within[w]) continue;
                if (index[w] == SIZE_MAX) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                VertexMask comp(n, false);
                std::size_t size = 0;
                VertexIndex w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = true;
                    ++size;
                } while (w != v);
                bool loop = size > 1 || std::find(g[v].begin(), g[v].end(), v) != g[v].end();
                if (loop) out.push_back(std::move(comp));
            }
            call.pop_back();
            if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
        }
    }
    return out;
}

bool
strongly_connected(const Successors& g, const VertexMask& set)
{
    auto first = std::find(set.begin(), set.end(), true);
    if (first == set.end()) return false;
    const VertexIndex v = first - set.begin();
    auto fwd = reachable(g, set, {v});
    for (VertexIndex w = 0; w < g.size(); ++w) {
        if (set[w] && !fwd[w]) return false;
    }
    for (VertexIndex w = 0; w < g.size(); ++w) {
        if (!set[w]) continue;
        bool back = false;
        for (auto x : g[w]) back = back || (set[x] && x == v);
        if (!back && !reachable(g, set, std::vector<VertexIndex>(g[w].begin(), g[w].end()))[v]) return false;
    }
    return true;
}

std::vector<VertexIndex>
cycle_through(const Successors& g, const VertexMask& set, VertexIndex v)
{
    std::optional<std::vector<VertexIndex>> best;
    for (auto w : g[v]) {
        if (!set[w]) continue;
        if (w == v) return {v};
        auto p = path(g, set, w, v);
        if (p && (!best || p->size() < best->size())) best = std::move(p);
    }
    std::vector<VertexIndex> cycle{v};
    if (best) cycle.insert(cycle.end(), best->begin(), best->end() - 1);
    return cycle;
}

std::vector<VertexIndex>
closed_walk(const Successors& g, const VertexMask& set)
{
    std::vector<VertexIndex> members;
    for (VertexIndex v = 0; v < g.size(); ++v)
        if (set[v]) members.push_back(v);
    if (members.empty()) return {};
    if (members.size() == 1) return {members.front()};
    std::vector<VertexIndex> walk{members.front()};
    VertexMask visited(g.size(), false);
    visited[members.front()] = true;
    for (std::size_t i = 1; i <= members.size(); ++i) {
        const auto target = i < members.size() ? members[i] : members.front();
        if (i < members.size() && visited[target]) continue;
        auto p = path(g, set, walk.back(), target);
        if (!p) return {};
        if (p->size() == 1) {
            // walk.back() == target only when closing at the start; use a real cycle.
            auto c = cycle_through(g, set, target);
            walk.insert(walk.end(), c.begin() + 1, c.end());
            walk.push_back(target);
        } else {
            walk.insert(walk.end(), p->begin() + 1, p->end());
        }
        for (auto v : *p) visited[v] = true;
    }
    walk.pop_back();
    return walk;
}

} // namespace omega::graph

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

#include "omegagames/strategy.hpp"

#include <map>
#include <tuple>

#include "omegagames/error.hpp"

namespace omega {

void
check_positional(const Arena& a, const PositionalStrategy& s)
{
    if (s.moves.size() != a.size()) throw Error(Errc::BadParams, "strategy size does not match the arena");
    for (VertexIndex v = 0; v < a.size(); ++v) {
        if (!s.defined(v)) continue;
        if (a.owner(v) != s.player)
            throw Error(Errc::BadParams, "strategy moves at '" + a.id(v) + "', owned by the other player");
        if (s.moves[v] >= a.size() || !a.has_edge(v, s.moves[v]))
            throw Error(Errc::BadParams, "move at '" + a.id(v) + "' is not an edge");
    }
}

MemoryStrategy::MemoryStrategy(Player p, std::size_t memory_size, std::size_t vertices)
    : player(p), update(memory_size, std::vector<std::size_t>(vertices, kNone)),
      next(vertices, std::vector<VertexIndex>(memory_size, kNone))
{
    for (std::size_t m = 0; m < memory_size; ++m) memory_names.push_back(std::to_string(m));
}

MemoryStrategy
MemoryStrategy::from_positional(const PositionalStrategy& s)
{
    MemoryStrategy m(s.player, 1, s.moves.size());
    for (VertexIndex v = 0; v < s.moves.size(); ++v) {
        m.update[0][v] = 0;
        m.next[v][0] = s.moves[v];
    }
    return m;
}

void
check_memory(const Arena& a, const MemoryStrategy& s)
{
    const auto msize = s.memory_size();
    if (msize == 0 || s.initial >= msize) throw Error(Errc::BadParams, "bad initial memory state");
    if (s.update.size() != msize || s.next.size() != a.size())
        throw Error(Errc::BadParams, "memory strategy tables do not match the arena");
    for (std::size_t m = 0; m < msize; ++m) {
        if (s.update[m].size() != a.size()) throw Error(Errc::BadParams, "update table has the wrong width");
        for (auto m2 : s.update[m])
            if (m2 != kNone && m2 >= msize) throw Error(Errc::BadParams, "update leads outside the memory");
    }
    for (VertexIndex v = 0; v < a.size(); ++v) {
        if (s.next[v].size() != msize) throw Error(Errc::BadParams, "move table has the wrong width");
        for (auto w : s.next[v]) {
            if (w == kNone) continue;
            if (a.owner(v) != s.player)
                throw Error(Errc::BadParams, "strategy moves at '" + a.id(v) + "', owned by the other player");
            if (w >= a.size() || !a.has_edge(v, w))
                throw Error(Errc::BadParams, "move at '" + a.id(v) + "' is not an edge");
        }
    }
}

namespace {

[[noreturn]] void
incomplete(const Arena& a, const MemoryStrategy& s, VertexIndex v, std::size_t m, const char* what)
{
    throw Error(Errc::StrategyIncomplete, std::string(what) + " at (" + a.id(v) + ", " + s.memory_names[m] + ")");
}

} // namespace

Product
product_with_memory(const Arena& a, const MemoryStrategy& s, const std::vector<VertexIndex>& seeds)
{
    Product p;
    std::map<std::pair<VertexIndex, std::size_t>, VertexIndex> index;
    std::vector<std::pair<VertexIndex, VertexIndex>> edges;
    std::vector<VertexIndex> queue;

    auto visit = [&](VertexIndex v, std::size_t m) {
        auto [it, fresh] = index.emplace(std::make_pair(v, m), p.vertex.size());
        if (fresh) {
            p.vertex.push_back(v);
            p.memory.push_back(m);
            queue.push_back(it->second);
        }
        return it->second;
    };

    for (auto v : seeds) p.seeds.push_back(visit(v, s.initial));
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const auto x = queue[head];
        const auto v = p.vertex[x];
        const auto m = p.memory[x];
        auto step = [&](VertexIndex w) {
            const auto m2 = s.update[m][w];
            if (m2 == kNone) incomplete(a, s, w, m, "no update on entering");
            edges.emplace_back(x, visit(w, m2));
        };
        if (a.owner(v) == s.player) {
            const auto w = s.next[v][m];
            if (w == kNone) incomplete(a, s, v, m, "no move");
            step(w);
        } else {
            for (auto w : a.successors(v)) step(w);
        }
    }

    RawArena raw;
    for (VertexIndex x = 0; x < p.vertex.size(); ++x) {
        const auto v = p.vertex[x];
        raw.vertices.push_back({a.id(v) + "|" + s.memory_names[p.memory[x]], to_int(a.owner(v)), a.priority(v)});
    }
    for (auto [x, y] : edges) raw.edges.emplace_back(raw.vertices[x].id, raw.vertices[y].id);
    p.arena = validate_arena(raw);
    return p;
}

Product
product_with_memory(const Arena& a, const MemoryStrategy& s)
{
    std::vector<VertexIndex> seeds(a.size());
    for (VertexIndex v = 0; v < a.size(); ++v) seeds[v] = v;
    return product_with_memory(a, s, seeds);
}

Lasso
induced_lasso(const Arena& a, const MemoryStrategy& s0, const MemoryStrategy& s1, VertexIndex start)
{
    std::map<std::tuple<VertexIndex, std::size_t, std::size_t>, std::size_t> seen;
    std::vector<VertexIndex> play;
    VertexIndex v = start;
    std::size_t m0 = s0.initial, m1 = s1.initial;
    for (;;) {
        auto [it, fresh] = seen.emplace(std::make_tuple(v, m0, m1), play.size());
        if (!fresh) {
            Lasso l;
            l.prefix.assign(play.begin(), play.begin() + it->second);
            l.loop.assign(play.begin() + it->second, play.end());
            return l;
        }
        play.push_back(v);
        const auto& s = a.owner(v) == Player::Zero ? s0 : s1;
        const auto m = a.owner(v) == Player::Zero ? m0 : m1;
        const auto w = s.next[v][m];
        if (w == kNone) incomplete(a, s, v, m, "no move");
        const auto n0 = s0.update[m0][w];
        const auto n1 = s1.update[m1][w];
        if (n0 == kNone) incomplete(a, s0, w, m0, "no update on entering");
        if (n1 == kNone) incomplete(a, s1, w, m1, "no update on entering");
        v = w;
        m0 = n0;
        m1 = n1;
    }
}

Lasso
induced_lasso(const Arena& a, const PositionalStrategy& s0, const PositionalStrategy& s1, VertexIndex start)
{
    return induced_lasso(a, MemoryStrategy::from_positional(s0), MemoryStrategy::from_positional(s1), start);
}

} // namespace omega

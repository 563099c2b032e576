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

#include "omegagames/positionalize.hpp"

#include <algorithm>
#include <variant>

#include "omegagames/error.hpp"
#include "omegagames/solvers.hpp"
#include "graph.hpp"

namespace omega {

bool
StageTable::finite() const
{
    return std::all_of(value.begin(), value.end(), [](const auto& v) { return v.has_value(); });
}

namespace {

bool
all_in(const std::vector<VertexIndex>& succ, const VertexMask& x)
{
    return std::all_of(succ.begin(), succ.end(), [&](VertexIndex w) { return x[w]; });
}

/// X^α = νY.{s : (s ∉ P or succ ⊆ X^{<α}) and (s ∈ Q or succ ⊆ Y)}, iterated in α.
StageTable
stages(const Successors& g, const VertexMask& p, const VertexMask& q, StageTable::Kind kind)
{
    const auto n = g.size();
    StageTable t;
    t.kind = kind;
    t.p = p;
    t.q = q;
    t.value.assign(n, std::nullopt);
    VertexMask below(n, false);
    for (std::uint64_t alpha = 0;; ++alpha) {
        VertexMask y(n, false);
        for (VertexIndex s = 0; s < n; ++s) y[s] = !p[s] || all_in(g[s], below);
        for (bool changed = true; changed;) {
            changed = false;
            for (VertexIndex s = 0; s < n; ++s) {
                if (y[s] && !q[s] && !all_in(g[s], y)) {
                    y[s] = false;
                    changed = true;
                }
            }
        }
        for (VertexIndex s = 0; s < n; ++s)
            if (y[s] && !t.value[s]) t.value[s] = alpha;
        const bool fixed = !t.stages.empty() && y == t.stages.back();
        if (fixed) break;
        t.stages.push_back(y);
        below = std::move(y);
    }
    return t;
}

} // namespace

StageTable
compute_alpha(const Successors& graph, const VertexMask& p)
{
    return stages(graph, p, VertexMask(graph.size(), false), StageTable::Kind::Alpha);
}

StageTable
compute_beta(const Successors& graph, const VertexMask& p, const VertexMask& q)
{
    return stages(graph, p, q, StageTable::Kind::Beta);
}

int
SignatureOrder::compare(VertexIndex s, VertexIndex t, std::uint64_t n) const
{
    for (std::size_t i = 0; i < levels.size() && levels[i] <= n; ++i)
        if (sig[s][i] != sig[t][i]) return sig[s][i] < sig[t][i] ? -1 : 1;
    return 0;
}

SignatureOrder
signatures(const Arena& product, Player player)
{
    SignatureOrder o;
    o.player = player;
    o.priority = compress_priorities(product);
    for (auto p : std::set<std::uint64_t>(o.priority.begin(), o.priority.end()))
        if (player_of_parity(p) != player) o.levels.push_back(p);
    const auto n = product.size();
    o.sig.assign(n, std::vector<std::uint64_t>(o.levels.size(), 0));
    for (std::size_t i = 0; i < o.levels.size(); ++i) {
        VertexMask p(n), q(n);
        for (VertexIndex v = 0; v < n; ++v) {
            p[v] = o.priority[v] == o.levels[i];
            q[v] = o.priority[v] < o.levels[i];
        }
        auto t = compute_beta(product.successor_lists(), p, q);
        for (VertexIndex v = 0; v < n; ++v) {
            if (!t.value[v])
                throw Error(Errc::InputStrategyNotWinning,
                            "'" + product.id(v) + "' reaches a cycle of least priority " + to_string(product.priority(v)));
            o.sig[v][i] = *t.value[v];
        }
    }
    return o;
}

namespace {

/// The arena with priorities the signatures should see, per condition.
Arena
parity_view(const Arena& a, const ConditionSpec& c)
{
    if (auto o = std::get_if<cond::OrdinalParity>(&c)) {
        for (const auto& p : a.priorities())
            if (!(p < o->bound)) throw Error(Errc::OutOfAlphabet, to_string(p) + " is not below " + to_string(o->bound));
    } else if (!std::holds_alternative<cond::MinParity>(c) && !std::holds_alternative<cond::Infinity>(c)) {
        throw Error(Errc::BadParams, "positionalize needs a min-parity, ordinal-parity or infinity condition, not " +
                                         kind_name(c));
    }
    auto pr = compress_priorities(a);
    std::vector<Priority> view(a.size());
    const bool infinity = std::holds_alternative<cond::Infinity>(c);
    for (VertexIndex v = 0; v < a.size(); ++v) view[v] = infinity ? 2 * pr[v] + 1 : pr[v];
    return relabel(a, view);
}

} // namespace

Positionalized
positionalize(const Arena& a, const ConditionSpec& c, const MemoryStrategy& s, const VertexMask& region)
{
    check_memory(a, s);
    const auto view = parity_view(a, c);
    std::vector<VertexIndex> seeds;
    for (VertexIndex v = 0; v < a.size(); ++v) {
        if (!region[v]) continue;
        seeds.push_back(v);
        if (a.owner(v) != s.player)
            for (auto w : a.successors(v))
                if (!region[w]) throw Error(Errc::RegionNotClosed, "opponent can leave the region at '" + a.id(v) + "'");
    }
    Positionalized out{PositionalStrategy(s.player, a.size()), product_with_memory(view, s, seeds), {}, {}};
    const auto& prod = out.product;
    for (VertexIndex x = 0; x < prod.vertex.size(); ++x)
        if (!region[prod.vertex[x]])
            throw Error(Errc::RegionNotClosed, "the strategy leaves the region at '" + prod.arena.id(x) + "'");

    out.order = signatures(prod.arena, s.player);
    out.occurrence.assign(a.size(), kNone);
    for (VertexIndex x = 0; x < prod.vertex.size(); ++x) {
        const auto v = prod.vertex[x];
        auto& best = out.occurrence[v];
        if (best == kNone) {
            best = x;
            continue;
        }
        const int cmp = out.order.compare(x, best, out.order.priority[x]);
        if (cmp < 0 || (cmp == 0 && prod.memory[x] < prod.memory[best])) best = x;
    }
    for (VertexIndex v = 0; v < a.size(); ++v)
        if (region[v] && a.owner(v) == s.player) out.strategy.moves[v] = s.next[v][prod.memory[out.occurrence[v]]];
    return out;
}

VertexMask
winning_region_of(const Arena& a, const ConditionSpec& c, const MemoryStrategy& s)
{
    const auto n = a.size();
    std::vector<VertexIndex> seeds(n);
    for (VertexIndex v = 0; v < n; ++v) seeds[v] = v;
    auto prod = product_with_memory(a, s, seeds);
    const auto& g = prod.arena.successor_lists();
    const auto m = prod.arena.size();

    // Product vertices on a cycle won by the opponent.
    VertexMask bad(m, false);
    if (auto rel = parity_relabeling(c, prod.arena)) {
        auto pr = rel->priority;
        if (rel->role_swapped)
            for (auto& p : pr) ++p;
        for (auto d : std::set<std::uint64_t>(pr.begin(), pr.end())) {
            if (player_of_parity(d) == s.player) continue;
            VertexMask sub(m);
            for (VertexIndex x = 0; x < m; ++x) sub[x] = pr[x] >= d;
            for (const auto& comp : graph::nontrivial_sccs(g, sub))
                for (VertexIndex x = 0; x < m; ++x)
                    if (comp[x] && pr[x] == d) bad[x] = true;
        }
    } else {
        auto fn = [&](const PrioritySet& x) { return member(c, x); };
        VertexMask region(n, false);
        for (VertexIndex v = 0; v < n; ++v)
            region[v] = !find_cycle_won_by(prod.arena, VertexMask(m, true), fn, opponent(s.player), {prod.seeds[v]});
        return region;
    }

    VertexMask doomed(m, false);
    std::vector<VertexIndex> stack;
    for (VertexIndex x = 0; x < m; ++x)
        if (bad[x]) {
            doomed[x] = true;
            stack.push_back(x);
        }
    while (!stack.empty()) {
        auto x = stack.back();
        stack.pop_back();
        for (auto y : prod.arena.predecessors(x))
            if (!doomed[y]) {
                doomed[y] = true;
                stack.push_back(y);
            }
    }
    VertexMask region(n, false);
    for (VertexIndex v = 0; v < n; ++v) region[v] = !doomed[prod.seeds[v]];
    return region;
}

} // namespace omega

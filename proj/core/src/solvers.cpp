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

#include "omegagames/solvers.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "omegagames/error.hpp"
#include "graph.hpp"

namespace omega {

Attractor
attractor(const Arena& a, Player player, const VertexMask& target, const VertexMask& within)
{
    const auto n = a.size();
    auto in = [&](VertexIndex v) { return within.empty() || within[v]; };
    Attractor r{VertexMask(n, false), PositionalStrategy(player, n)};
    std::vector<std::size_t> escapes(n, 0);
    std::deque<VertexIndex> queue;
    for (VertexIndex v = 0; v < n; ++v) {
        if (!in(v)) continue;
        for (auto w : a.successors(v))
            if (in(w)) ++escapes[v];
        if (target[v]) {
            r.set[v] = true;
            queue.push_back(v);
        }
    }
    while (!queue.empty()) {
        const auto w = queue.front();
        queue.pop_front();
        for (auto v : a.predecessors(w)) {
            if (!in(v) || r.set[v]) continue;
            if (a.owner(v) == player) {
                r.strategy.moves[v] = w;
            } else if (--escapes[v] > 0) {
                continue;
            }
            r.set[v] = true;
            queue.push_back(v);
        }
    }
    return r;
}

std::vector<std::uint64_t>
compress_priorities(const Arena& a)
{
    std::map<Priority, std::uint64_t> value;
    std::uint64_t next = 0;
    bool first = true;
    for (const auto& p : a.priorities()) {
        std::uint64_t v = first ? (p.is_even() ? 0 : 1) : next;
        if ((v & 1) != (p.offset & 1)) ++v;
        value[p] = v;
        next = v + 1;
        first = false;
    }
    std::vector<std::uint64_t> out(a.size());
    for (VertexIndex v = 0; v < a.size(); ++v) out[v] = value[a.priority(v)];
    return out;
}

namespace {

struct Recursive
{
    const Arena& a;
    const std::vector<std::uint64_t>& pr;
    PositionalStrategy s0, s1;

    PositionalStrategy& strat(Player p) { return p == Player::Zero ? s0 : s1; }

    /// Winning regions of the subgame `g`; fills strategies on the owned part of each region.
    std::pair<VertexMask, VertexMask> solve(const VertexMask& g)
    {
        const auto n = a.size();
        VertexMask w0(n, false), w1(n, false);
        std::uint64_t d = UINT64_MAX;
        for (VertexIndex v = 0; v < n; ++v)
            if (g[v]) d = std::min(d, pr[v]);
        if (d == UINT64_MAX) return {w0, w1};

        const Player sigma = player_of_parity(d);
        VertexMask top(n, false);
        for (VertexIndex v = 0; v < n; ++v) top[v] = g[v] && pr[v] == d;
        auto attr = attractor(a, sigma, top, g);

        VertexMask rest = g;
        for (VertexIndex v = 0; v < n; ++v)
            if (attr.set[v]) rest[v] = false;
        auto [r0, r1] = solve(rest);
        auto& lost = sigma == Player::Zero ? r1 : r0;

        if (std::none_of(lost.begin(), lost.end(), [](bool b) { return b; })) {
            // sigma wins everywhere: attract to `top`, from `top` stay in g.
            for (VertexIndex v = 0; v < n; ++v) {
                if (!g[v] || a.owner(v) != sigma) continue;
                if (attr.set[v] && !top[v]) strat(sigma).moves[v] = attr.strategy.moves[v];
                if (top[v])
                    for (auto w : a.successors(v))
                        if (g[w]) {
                            strat(sigma).moves[v] = w;
                            break;
                        }
            }
            return sigma == Player::Zero ? std::make_pair(g, w1) : std::make_pair(w0, g);
        }

        const Player tau = opponent(sigma);
        auto battr = attractor(a, tau, lost, g);
        for (VertexIndex v = 0; v < n; ++v)
            if (battr.set[v] && !lost[v] && a.owner(v) == tau) strat(tau).moves[v] = battr.strategy.moves[v];
        VertexMask remainder = g;
        for (VertexIndex v = 0; v < n; ++v)
            if (battr.set[v]) remainder[v] = false;
        auto [q0, q1] = solve(remainder);
        auto& tau_region = tau == Player::Zero ? q0 : q1;
        for (VertexIndex v = 0; v < n; ++v)
            if (battr.set[v]) tau_region[v] = true;
        return {q0, q1};
    }
};

} // namespace

SolveResult
solve_parity_recursive(const Arena& a)
{
    const auto pr = compress_priorities(a);
    Recursive r{a, pr, PositionalStrategy(Player::Zero, a.size()), PositionalStrategy(Player::One, a.size())};
    auto [w0, w1] = r.solve(VertexMask(a.size(), true));
    SolveResult out{w0, w1, PositionalStrategy(Player::Zero, a.size()), PositionalStrategy(Player::One, a.size())};
    // Subgame solutions may leave moves at vertices that later changed hands.
    for (VertexIndex v = 0; v < a.size(); ++v) {
        if (a.owner(v) == Player::Zero && w0[v]) out.strat0.moves[v] = r.s0.moves[v];
        if (a.owner(v) == Player::One && w1[v]) out.strat1.moves[v] = r.s1.moves[v];
    }
    return out;
}

int
ProgressMeasure::compare(VertexIndex s, VertexIndex t, std::uint64_t n) const
{
    if (top[s] || top[t]) return top[s] == top[t] ? 0 : (top[s] ? 1 : -1);
    for (std::size_t i = 0; i < levels.size() && levels[i] <= n; ++i) {
        if (value[s][i] != value[t][i]) return value[s][i] < value[t][i] ? -1 : 1;
    }
    return 0;
}

namespace {

using Tuple = std::vector<std::uint64_t>;

struct Lifter
{
    std::vector<std::uint64_t> levels; ///< odd priorities, ascending
    std::vector<std::uint64_t> bound;  ///< vertices per level

    /// Least m >=_p t (strictly greater when p is odd), or nullopt for top.
    std::optional<Tuple> prog(const std::optional<Tuple>& t, std::uint64_t p) const
    {
        if (!t) return std::nullopt;
        Tuple m(levels.size(), 0);
        std::size_t k = 0;
        while (k < levels.size() && levels[k] <= p) {
            m[k] = (*t)[k];
            ++k;
        }
        if (p % 2 == 0) return m;
        for (std::size_t i = k; i-- > 0;) {
            if (m[i] < bound[i]) {
                ++m[i];
                return m;
            }
            m[i] = 0;
        }
        return std::nullopt;
    }
};

bool
less_tuple(const std::optional<Tuple>& x, const std::optional<Tuple>& y)
{
    if (!y) return x.has_value();
    if (!x) return false;
    return *x < *y;
}

/// Least progress measure of player 0 on `pr`.
std::vector<std::optional<Tuple>>
lift_all(const Arena& a, const std::vector<std::uint64_t>& pr, Lifter& l)
{
    const auto n = a.size();
    std::map<std::uint64_t, std::uint64_t> count;
    for (auto p : pr)
        if (p % 2 == 1) ++count[p];
    for (auto [p, c] : count) {
        l.levels.push_back(p);
        l.bound.push_back(c);
    }
    std::vector<std::optional<Tuple>> rho(n, Tuple(l.levels.size(), 0));
    std::deque<VertexIndex> work;
    std::vector<bool> queued(n, true);
    for (VertexIndex v = 0; v < n; ++v) work.push_back(v);
    while (!work.empty()) {
        const auto v = work.front();
        work.pop_front();
        queued[v] = false;
        if (!rho[v]) continue;
        std::optional<Tuple> best;
        bool first = true;
        for (auto w : a.successors(v)) {
            auto m = l.prog(rho[w], pr[v]);
            if (first || (a.owner(v) == Player::Zero ? less_tuple(m, best) : less_tuple(best, m))) best = m;
            first = false;
        }
        if (!less_tuple(rho[v], best)) continue;
        rho[v] = best;
        for (auto u : a.predecessors(v))
            if (!queued[u]) {
                queued[u] = true;
                work.push_back(u);
            }
    }
    return rho;
}

ProgressMeasure
measure_for(const Arena& a, Player player, PositionalStrategy* strategy)
{
    const auto base = compress_priorities(a);
    std::vector<std::uint64_t> pr = base;
    if (player == Player::One)
        for (auto& p : pr) ++p;
    // The dual game: player 1 plays player 0's role with every priority shifted by one.
    Arena g = player == Player::Zero ? a : swap_owners(a);
    Lifter l;
    auto rho = lift_all(g, pr, l);

    ProgressMeasure m;
    m.player = player;
    m.priority = base;
    for (auto lv : l.levels) m.levels.push_back(player == Player::Zero ? lv : lv - 1);
    m.value.resize(a.size());
    m.top.resize(a.size());
    for (VertexIndex v = 0; v < a.size(); ++v) {
        m.top[v] = !rho[v].has_value();
        m.value[v] = rho[v] ? *rho[v] : Tuple(l.levels.size(), 0);
    }
    if (strategy) {
        *strategy = PositionalStrategy(player, a.size());
        for (VertexIndex v = 0; v < a.size(); ++v) {
            if (a.owner(v) != player || !rho[v]) continue;
            std::optional<Tuple> best;
            for (auto w : a.successors(v)) {
                auto t = l.prog(rho[w], pr[v]);
                if (!t) continue;
                if (strategy->moves[v] == kNone || less_tuple(t, best)) {
                    best = t;
                    strategy->moves[v] = w;
                }
            }
        }
    }
    return m;
}

} // namespace

ProgressMeasure
progress_measure(const Arena& a, Player player)
{
    return measure_for(a, player, nullptr);
}

SpmResult
solve_parity_spm(const Arena& a)
{
    SpmResult r;
    r.measure0 = measure_for(a, Player::Zero, &r.result.strat0);
    r.measure1 = measure_for(a, Player::One, &r.result.strat1);
    r.result.w0.resize(a.size());
    r.result.w1.resize(a.size());
    for (VertexIndex v = 0; v < a.size(); ++v) {
        r.result.w0[v] = !r.measure0.top[v];
        r.result.w1[v] = !r.measure1.top[v];
    }
    return r;
}

std::vector<VertexIndex>
closed_walk(const Arena& a, const VertexMask& set)
{
    return graph::closed_walk(a.successor_lists(), set);
}

std::optional<std::vector<VertexIndex>>
find_cycle_won_by(const Arena& a, const VertexMask& within, const std::function<Player(const PrioritySet&)>& member_fn,
                  Player target, const std::vector<VertexIndex>& from)
{
    const auto& g = a.successor_lists();
    VertexMask start = within;
    if (!from.empty()) start = graph::reachable(g, within, from);
    std::set<VertexMask> done;
    std::vector<VertexMask> stack{start};
    while (!stack.empty()) {
        auto sub = std::move(stack.back());
        stack.pop_back();
        if (!done.insert(sub).second) continue;
        for (const auto& comp : graph::nontrivial_sccs(g, sub)) {
            PrioritySet colors;
            for (VertexIndex v = 0; v < a.size(); ++v)
                if (comp[v]) colors.insert(a.priority(v));
            if (member_fn(colors) == target) return graph::closed_walk(g, comp);
            if (colors.size() == 1) continue;
            for (const auto& c : colors) {
                VertexMask smaller = comp;
                for (VertexIndex v = 0; v < a.size(); ++v)
                    if (smaller[v] && a.priority(v) == c) smaller[v] = false;
                stack.push_back(std::move(smaller));
            }
        }
    }
    return std::nullopt;
}

namespace {

/// The graph of `region` where owned vertices keep only their strategy edge.
Successors
restrict_to(const Arena& a, const PositionalStrategy& s, const VertexMask& region)
{
    Successors g(a.size());
    for (VertexIndex v = 0; v < a.size(); ++v) {
        if (!region[v]) continue;
        if (a.owner(v) == s.player) {
            if (!s.defined(v) || !region[s.moves[v]])
                throw Error(Errc::RegionNotClosed, "strategy leaves the region at '" + a.id(v) + "'");
            g[v] = {s.moves[v]};
            continue;
        }
        for (auto w : a.successors(v)) {
            if (!region[w])
                throw Error(Errc::RegionNotClosed, "opponent can leave the region at '" + a.id(v) + "'");
        }
        g[v] = a.successors(v);
    }
    return g;
}

/// A cycle of `g` inside `region` whose least priority has parity `bad`.
std::optional<std::vector<VertexIndex>>
parity_bad_cycle(const Successors& g, const VertexMask& region, const std::vector<std::uint64_t>& pr, Player bad)
{
    std::set<std::uint64_t> levels;
    for (VertexIndex v = 0; v < g.size(); ++v)
        if (region[v] && player_of_parity(pr[v]) == bad) levels.insert(pr[v]);
    for (auto d : levels) {
        VertexMask sub(g.size(), false);
        for (VertexIndex v = 0; v < g.size(); ++v) sub[v] = region[v] && pr[v] >= d;
        for (const auto& comp : graph::nontrivial_sccs(g, sub)) {
            for (VertexIndex v = 0; v < g.size(); ++v) {
                if (!comp[v] || pr[v] != d) continue;
                return graph::cycle_through(g, comp, v);
            }
        }
    }
    return std::nullopt;
}

std::string
walk_ids(const Arena& a, const std::vector<VertexIndex>& w)
{
    std::string s;
    for (auto v : w) s += (s.empty() ? "" : " ") + a.id(v);
    return s;
}

} // namespace

Verdict
verify_positional(const Arena& a, const ConditionSpec& c, const PositionalStrategy& s, const VertexMask& region)
{
    const auto g = restrict_to(a, s, region);
    const Player bad = opponent(s.player);

    const bool parity_kind = std::holds_alternative<cond::MinParity>(c) ||
                             std::holds_alternative<cond::OrdinalParity>(c) ||
                             std::holds_alternative<cond::Infinity>(c) || std::holds_alternative<cond::MaxParity>(c);
    std::optional<ParityRelabeling> rel;
    std::size_t size = std::count(region.begin(), region.end(), true);
    if (parity_kind || size > kMaxMullerCheckRegion) rel = parity_relabeling(c, a);

    if (rel) {
        auto pr = rel->priority;
        if (rel->role_swapped)
            for (auto& p : pr) ++p;
        if (auto w = parity_bad_cycle(g, region, pr, bad))
            return {false, *w, "cycle won by player " + std::to_string(to_int(bad)) + ": " + walk_ids(a, *w)};
        return {true, {}, "no reachable cycle is won by player " + std::to_string(to_int(bad))};
    }
    if (size > kMaxMullerCheckRegion)
        throw Error(Errc::TooLargeForMullerCheck, std::to_string(size) + " vertices in the region");

    std::vector<VertexIndex> vs;
    for (VertexIndex v = 0; v < a.size(); ++v)
        if (region[v]) vs.push_back(v);
    for (std::uint32_t mask = 1; mask < (1u << vs.size()); ++mask) {
        VertexMask u(a.size(), false);
        PrioritySet colors;
        for (std::size_t i = 0; i < vs.size(); ++i)
            if (mask >> i & 1) {
                u[vs[i]] = true;
                colors.insert(a.priority(vs[i]));
            }
        if (!graph::strongly_connected(g, u)) continue;
        if (member(c, colors) != bad) continue;
        auto w = graph::closed_walk(g, u);
        return {false, w, "strongly connected set won by player " + std::to_string(to_int(bad)) + ": " + walk_ids(a, w)};
    }
    return {true, {}, "every strongly connected subset is won by player " + std::to_string(to_int(s.player))};
}

Verdict
verify_memory(const Arena& a, const ConditionSpec& c, const MemoryStrategy& s, const VertexMask& region)
{
    std::vector<VertexIndex> seeds;
    for (VertexIndex v = 0; v < a.size(); ++v)
        if (region[v]) seeds.push_back(v);
    auto p = product_with_memory(a, s, seeds);
    auto w = find_cycle_won_by(p.arena, VertexMask(p.arena.size(), true),
                               [&](const PrioritySet& x) { return member(c, x); }, opponent(s.player));
    if (!w) return {true, {}, "no cycle of the product is won by the opponent"};
    Verdict v{false, {}, "product cycle won by the opponent: " + walk_ids(p.arena, *w)};
    for (auto x : *w) v.witness.push_back(p.vertex[x]);
    return v;
}

namespace {

struct PathRelabeling
{
    ParityRelabeling rel;
    std::optional<Reduction> reduction;
};

std::optional<PathRelabeling>
path_relabeling(const ConditionSpec& c, const Arena& a)
{
    PathRelabeling out;
    auto& pr = out.rel.priority;
    if (std::holds_alternative<cond::MinParity>(c)) {
        pr = compress_priorities(a);
        return out;
    }
    if (auto o = std::get_if<cond::OrdinalParity>(&c)) {
        for (const auto& p : a.priorities())
            if (!(p < o->bound)) throw Error(Errc::OutOfAlphabet, to_string(p) + " is not below " + to_string(o->bound));
        pr = compress_priorities(a);
        return out;
    }
    if (std::holds_alternative<cond::Infinity>(c)) {
        pr.assign(a.size(), 1);
        return out;
    }
    if (std::holds_alternative<cond::MaxParity>(c)) {
        pr = compress_priorities(a);
        std::uint64_t top = 0;
        for (auto p : pr) top = std::max(top, p);
        top += top & 1;
        for (auto& p : pr) p = top - p;
        return out;
    }
    try {
        Reduction r;
        if (auto z = std::get_if<cond::ZielonkaPath>(&c)) {
            r = reduce_to_parity(*z);
        } else {
            const auto alphabet = a.priorities();
            if (alphabet.size() > kMaxTreeAlphabet) return std::nullopt;
            r = reduce_to_parity(materialize(c, alphabet));
        }
        pr.resize(a.size());
        for (VertexIndex v = 0; v < a.size(); ++v) pr[v] = r.apply(a.priority(v));
        out.rel.role_swapped = r.role_swapped;
        out.reduction = std::move(r);
        return out;
    } catch (const Error& e) {
        if (e.code() == Errc::NotAPath) return std::nullopt;
        throw;
    }
}

} // namespace

std::optional<ParityRelabeling>
parity_relabeling(const ConditionSpec& c, const Arena& a)
{
    auto r = path_relabeling(c, a);
    if (!r) return std::nullopt;
    return r->rel;
}

namespace {

std::vector<Priority>
move_to_front(std::vector<Priority> record, std::size_t pos)
{
    std::rotate(record.begin(), record.begin() + pos, record.begin() + pos + 1);
    return record;
}

std::size_t
position(const std::vector<Priority>& record, const Priority& p)
{
    return std::find(record.begin(), record.end(), p) - record.begin();
}

} // namespace

LarProduct
lar_reduce(const Arena& a, const cond::ExplicitMuller& c)
{
    const auto k = c.alphabet.size();
    if (k > kMaxLarAlphabet) throw Error(Errc::AlphabetTooLarge, std::to_string(k) + " priorities");
    if (k == 0) throw Error(Errc::OutOfAlphabet, "empty alphabet");
    for (const auto& p : a.priorities())
        if (!c.alphabet.count(p)) throw Error(Errc::OutOfAlphabet, to_string(p));

    LarProduct lar;
    std::map<std::vector<Priority>, std::size_t> record_index;
    std::map<std::tuple<VertexIndex, std::size_t, std::size_t>, VertexIndex> index;
    std::vector<std::pair<VertexIndex, VertexIndex>> edges;
    std::vector<VertexIndex> queue;

    auto record_of = [&](const std::vector<Priority>& r) {
        auto [it, fresh] = record_index.emplace(r, lar.records.size());
        if (fresh) lar.records.push_back(r);
        return it->second;
    };
    auto state = [&](VertexIndex v, std::size_t rec, std::size_t hit) {
        auto [it, fresh] = index.emplace(std::make_tuple(v, rec, hit), lar.vertex.size());
        if (fresh) {
            lar.vertex.push_back(v);
            lar.record.push_back(rec);
            lar.hit.push_back(hit);
            queue.push_back(it->second);
        }
        return it->second;
    };

    const auto init = record_of(std::vector<Priority>(c.alphabet.begin(), c.alphabet.end()));
    for (VertexIndex v = 0; v < a.size(); ++v) lar.initial.push_back(state(v, init, 0));
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const auto x = queue[head];
        const auto rec = lar.records[lar.record[x]];
        for (auto w : a.successors(lar.vertex[x])) {
            const auto pos = position(rec, a.priority(w));
            edges.emplace_back(x, state(w, record_of(move_to_front(rec, pos)), pos));
        }
    }

    RawArena raw;
    for (VertexIndex x = 0; x < lar.vertex.size(); ++x) {
        const auto& rec = lar.records[lar.record[x]];
        const auto h = lar.hit[x];
        PrioritySet seen(rec.begin(), rec.begin() + h + 1);
        const std::uint64_t pr = 2 * (k - 1 - h) + (member(c, seen) == Player::Zero ? 0 : 1);
        std::string rid;
        for (const auto& p : rec) rid += (rid.empty() ? "" : ",") + to_string(p);
        raw.vertices.push_back(
            {a.id(lar.vertex[x]) + "|" + rid + "|" + std::to_string(h), to_int(a.owner(lar.vertex[x])), pr});
    }
    for (auto [x, y] : edges) raw.edges.emplace_back(raw.vertices[x].id, raw.vertices[y].id);
    lar.arena = validate_arena(raw);
    return lar;
}

namespace {

MemoryStrategy
lar_strategy(const Arena& a, const LarProduct& lar, const PositionalStrategy& s)
{
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> memory;
    std::vector<std::pair<std::size_t, std::size_t>> states;
    auto mem = [&](std::size_t rec, std::size_t hit) {
        auto [it, fresh] = memory.emplace(std::make_pair(rec, hit), states.size());
        if (fresh) states.emplace_back(rec, hit);
        return it->second;
    };
    mem(lar.record[lar.initial[0]], lar.hit[lar.initial[0]]);
    for (VertexIndex x = 0; x < lar.vertex.size(); ++x) mem(lar.record[x], lar.hit[x]);

    std::map<std::vector<Priority>, std::size_t> record_index;
    for (std::size_t i = 0; i < lar.records.size(); ++i) record_index[lar.records[i]] = i;

    MemoryStrategy m(s.player, states.size(), a.size());
    for (std::size_t i = 0; i < states.size(); ++i) {
        const auto& rec = lar.records[states[i].first];
        std::string name;
        for (const auto& p : rec) name += (name.empty() ? "" : ",") + to_string(p);
        m.memory_names[i] = name + "/" + std::to_string(states[i].second);
        for (VertexIndex w = 0; w < a.size(); ++w) {
            const auto pos = position(rec, a.priority(w));
            auto r = record_index.find(move_to_front(rec, pos));
            if (r == record_index.end()) continue;
            auto it = memory.find({r->second, pos});
            if (it != memory.end()) m.update[i][w] = it->second;
        }
    }
    for (VertexIndex x = 0; x < lar.vertex.size(); ++x) {
        if (!s.defined(x)) continue;
        m.next[lar.vertex[x]][memory.at({lar.record[x], lar.hit[x]})] = lar.vertex[s.moves[x]];
    }
    return m;
}

} // namespace

MullerSolveResult
solve_muller(const Arena& a, const ConditionSpec& c, MullerRoute route)
{
    MullerSolveResult out;
    if (route != MullerRoute::Lar) {
        auto rel = path_relabeling(c, a);
        if (rel) {
            auto pr = rel->rel.priority;
            std::vector<Priority> shifted(a.size());
            for (VertexIndex v = 0; v < a.size(); ++v) shifted[v] = pr[v] + (rel->rel.role_swapped ? 1 : 0);
            auto r = solve_parity_recursive(relabel(a, shifted));
            out.route = MullerSolveResult::Route::Path;
            out.w0 = r.w0;
            out.w1 = r.w1;
            out.positional0 = r.strat0;
            out.positional1 = r.strat1;
            out.reduction = rel->reduction;
            return out;
        }
        if (route == MullerRoute::Path)
            throw Error(Errc::NotAPath, kind_name(c) + " is not parity-equivalent on this arena");
    }

    const auto explicit_c = std::holds_alternative<cond::ExplicitMuller>(c)
                                ? std::get<cond::ExplicitMuller>(c)
                                : materialize(c, a.priorities());
    auto lar = lar_reduce(a, explicit_c);
    auto r = solve_parity_recursive(lar.arena);
    out.route = MullerSolveResult::Route::Lar;
    out.w0.assign(a.size(), false);
    out.w1.assign(a.size(), false);
    for (VertexIndex v = 0; v < a.size(); ++v) {
        out.w0[v] = r.w0[lar.initial[v]];
        out.w1[v] = r.w1[lar.initial[v]];
    }
    out.memory0 = lar_strategy(a, lar, r.strat0);
    out.memory1 = lar_strategy(a, lar, r.strat1);
    return out;
}

} // namespace omega

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

#include "omegagames/counterexamples.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "omegagames/error.hpp"
#include "omegagames/solvers.hpp"
#include "omegagames/strategy.hpp"
#include "graph.hpp"

namespace omega {

Gadget
gen_flower(std::size_t n, FlowerVariant variant)
{
    Gadget g;
    g.name = variant == FlowerVariant::Ordinal ? "flower_ordinal" : "flower";
    g.generated.family = Family::Flower;
    g.generated.truncation = n;
    g.generated.flower = variant;
    g.arena = expand(g.generated);
    if (variant == FlowerVariant::Ordinal)
        g.condition = cond::OrdinalParity{Priority::omega(1)};
    else
        g.condition = cond::MaxParity{};
    g.sigma = Player::Zero;
    g.start = "c";
    return g;
}

Gadget
gen_chain_game(const ChainDescriptor& d, std::size_t n, bool finite_appearance)
{
    Gadget g;
    g.name = "chain_game_" + d.name + (finite_appearance ? "_finite_appearance" : "");
    g.generated.family = Family::ChainGame;
    g.generated.truncation = n;
    g.generated.chain = d;
    g.generated.finite_appearance = finite_appearance;
    g.arena = expand(g.generated);
    if (d.name == "max_parity")
        g.condition = cond::MaxParity{};
    else if (d.name == "ordinal")
        g.condition = cond::OrdinalParity{Priority::omega(1)};
    else
        throw Error(Errc::BadDescriptor, "no built-in condition for descriptor '" + d.name + "'");
    g.sigma = d.sigma;
    g.start = "c";
    return g;
}

Gadget
gen_split_game(const PrioritySet& y, Priority a, const ConditionSpec& c, Player sigma)
{
    if (!y.count(a)) throw Error(Errc::BadParams, "anchor " + to_string(a) + " is not in Y");
    if (auto m = std::get_if<cond::ExplicitMuller>(&c))
        for (const auto& p : y)
            if (!m->alphabet.count(p)) throw Error(Errc::BadParams, to_string(p) + " is outside the alphabet");
    Gadget g;
    g.name = "split_game";
    g.generated.family = Family::SplitGame;
    g.generated.split_y = y;
    g.generated.split_a = a;
    g.generated.split_sigma = sigma;
    g.arena = expand(g.generated);
    g.condition = c;
    g.sigma = sigma;
    g.start = "s";
    return g;
}

Gadget
gen_union_chain(std::size_t k)
{
    Gadget g;
    g.name = "union_chain";
    g.generated.family = Family::SplitGame;
    g.generated.truncation = k;
    g.generated.union_chain = true;
    g.generated.split_sigma = Player::Zero;
    g.arena = expand(g.generated);
    g.condition = cond::MaxParity{};
    g.sigma = Player::Zero;
    g.start = "s";
    return g;
}

Gadget
gen_ladder(std::size_t n)
{
    Gadget g;
    g.name = "ladder";
    g.generated.family = Family::Ladder;
    g.generated.truncation = n;
    g.arena = expand(g.generated);
    g.condition = cond::MaxParity{};
    g.sigma = Player::Zero;
    g.start = "a";
    return g;
}

Gadget
split_game_strong_split()
{
    cond::ExplicitMuller c{{0, 1, 2}, {{0, 2}, {0, 1, 2}}};
    auto g = gen_split_game({0, 1, 2}, 1, c, Player::Zero);
    g.name = "split_game_strong_split";
    return g;
}

ScheduledPlay
flower_schedule(FlowerVariant variant)
{
    const Priority center = variant == FlowerVariant::Ordinal ? Priority::omega() : Priority(0);
    ScheduledPlay p;
    p.description = "player 0 visits petal 2k+1 in round k";
    p.step = [center](std::uint64_t i) -> PlayStep {
        if (i % 2 == 0) return {"c", center};
        const auto petal = i; // round i/2 visits petal 2(i/2)+1 = i
        return {"p" + std::to_string(petal), petal};
    };
    p.declared_inf_set = InfSetDescriptor::of({center});
    p.stabilization = [](const Priority& q) -> std::optional<std::uint64_t> {
        if (!q.is_natural() || q.is_even()) return std::nullopt;
        return q.offset + 1;
    };
    p.deadline = [](const Priority&, std::uint64_t k) { return 2 * k; };
    return p;
}

ScheduledPlay
chain_schedule(const ChainDescriptor& d)
{
    std::vector<Priority> y(d.y.begin(), d.y.end());
    auto answer = [d](std::uint64_t r) {
        auto x = d.window(r, r);
        for (const auto& p : x)
            if (!d.y.count(p)) return p;
        throw Error(Errc::BadDescriptor, "X_" + std::to_string(r) + " has no element outside Y in its window");
    };
    ScheduledPlay p;
    p.description = "round i: box i, the least element of X_i outside Y, then element i mod |Y| of Y";
    p.step = [d, y, answer](std::uint64_t i) -> PlayStep {
        const auto r = i / 5 + 1;
        switch (i % 5) {
        case 0: return {"c", d.a};
        case 1: return {"b" + std::to_string(r), d.a};
        case 2: {
            const auto e = answer(r);
            return {"x" + std::to_string(r) + "." + to_string(e), e};
        }
        case 3: return {"f", d.a};
        default: {
            const auto& q = y[(r - 1) % y.size()];
            return {"y." + to_string(q), q};
        }
        }
    };
    p.declared_inf_set = InfSetDescriptor::of(d.y);
    p.stabilization = [answer](const Priority& q) -> std::optional<std::uint64_t> {
        if (!q.is_natural()) return std::nullopt;
        std::optional<std::uint64_t> last;
        for (std::uint64_t r = 1; r <= q.offset + 1; ++r)
            if (answer(r) == q) last = 5 * r;
        return last;
    };
    const auto ny = y.size();
    p.deadline = [ny](const Priority&, std::uint64_t k) { return 5 * ny * k; };
    return p;
}

namespace {

std::uint64_t
ladder_round_end(std::uint64_t r)
{
    return r * r + 3 * r;
}

} // namespace

ScheduledPlay
ladder_schedule()
{
    ScheduledPlay p;
    p.description = "round r climbs to column r and descends there";
    p.step = [](std::uint64_t i) -> PlayStep {
        std::uint64_t r = 1;
        while (ladder_round_end(r) <= i) ++r;
        const auto j = i - ladder_round_end(r - 1);
        if (j == 0) return {"a", 2};
        if (j <= r) return {"t" + std::to_string(j), 1};
        if (j == r + 1) return {"r" + std::to_string(r), 2 * r + 1};
        return {"d" + std::to_string(2 * r + 2 - j), 2};
    };
    p.declared_inf_set = InfSetDescriptor::of({1, 2});
    p.stabilization = [](const Priority& q) -> std::optional<std::uint64_t> {
        if (!q.is_natural() || q.is_even() || q.offset < 3) return std::nullopt;
        return ladder_round_end((q.offset - 1) / 2);
    };
    p.deadline = [](const Priority&, std::uint64_t k) { return ladder_round_end(k); };
    return p;
}

namespace {

/// Decimal product of small factors, plus a saturated copy for comparisons.
struct Count
{
    std::string decimal = "1";
    std::uint64_t saturated = 1;

    void times(std::uint64_t f)
    {
        std::string out;
        unsigned __int128 carry = 0;
        for (auto it = decimal.rbegin(); it != decimal.rend(); ++it) {
            unsigned __int128 d = static_cast<unsigned __int128>(*it - '0') * f + carry;
            out.push_back(static_cast<char>('0' + static_cast<int>(d % 10)));
            carry = d / 10;
        }
        while (carry) {
            out.push_back(static_cast<char>('0' + static_cast<int>(carry % 10)));
            carry /= 10;
        }
        while (out.size() > 1 && out.back() == '0') out.pop_back();
        decimal.assign(out.rbegin(), out.rend());
        if (f != 0 && saturated > UINT64_MAX / f)
            saturated = UINT64_MAX;
        else
            saturated *= f;
    }
};

/// The digits of a machine: a successor choice per (owned vertex, memory), then an update per (memory, vertex).
struct MachineShape
{
    std::vector<std::pair<VertexIndex, std::size_t>> moves;
    std::size_t updates = 0;
    std::vector<std::uint64_t> radix;
};

MachineShape
shape_of(const Arena& a, Player sigma, std::size_t m)
{
    MachineShape s;
    for (VertexIndex v = 0; v < a.size(); ++v)
        if (a.owner(v) == sigma)
            for (std::size_t k = 0; k < m; ++k) {
                s.moves.emplace_back(v, k);
                s.radix.push_back(a.successors(v).size());
            }
    s.updates = m * a.size();
    for (std::size_t i = 0; i < s.updates; ++i) s.radix.push_back(m);
    return s;
}

MemoryStrategy
machine(const Arena& a, Player sigma, std::size_t m, const MachineShape& s, const std::vector<std::uint64_t>& digits)
{
    MemoryStrategy ms(sigma, m, a.size());
    for (std::size_t i = 0; i < s.moves.size(); ++i) {
        auto [v, k] = s.moves[i];
        ms.next[v][k] = a.successors(v)[digits[i]];
    }
    for (std::size_t i = 0; i < s.updates; ++i) ms.update[i / a.size()][i % a.size()] = digits[s.moves.size() + i];
    return ms;
}

/// Sigma picks moves and memory updates; a positional win here is a memory-m win in `a`.
Arena
memory_choice_arena(const Arena& a, Player sigma, std::size_t m)
{
    RawArena raw;
    auto node = [&](VertexIndex v, std::size_t k) { return a.id(v) + "|" + std::to_string(k); };
    auto update = [&](std::size_t k, VertexIndex w) { return "u" + std::to_string(k) + ">" + a.id(w); };
    for (VertexIndex v = 0; v < a.size(); ++v)
        for (std::size_t k = 0; k < m; ++k) {
            raw.vertices.push_back({node(v, k), to_int(a.owner(v)), a.priority(v)});
            raw.vertices.push_back({update(k, v), to_int(sigma), a.priority(v)});
            for (auto w : a.successors(v)) raw.edges.emplace_back(node(v, k), update(k, w));
            for (std::size_t k2 = 0; k2 < m; ++k2) raw.edges.emplace_back(update(k, v), node(v, k2));
        }
    return validate_arena(raw);
}

Lasso
lasso_to(const Product& p, const std::vector<VertexIndex>& cycle)
{
    auto path = graph::path(p.arena.successor_lists(), VertexMask(p.arena.size(), true), p.seeds.front(),
                            cycle.front());
    Lasso l;
    if (path)
        for (std::size_t i = 0; i + 1 < path->size(); ++i) l.prefix.push_back(p.vertex[(*path)[i]]);
    for (auto x : cycle) l.loop.push_back(p.vertex[x]);
    return l;
}

} // namespace

RefutationReport
refute_finite_memory(const Gadget& g, const RefutationOptions& opts)
{
    if (opts.memory_bound == 0) throw Error(Errc::BadParams, "memory bound must be at least 1");
    const auto& a = g.arena;
    const auto start = a.index_of(g.start);
    const auto m = opts.memory_bound;
    const auto opp = opponent(g.sigma);
    auto member_fn = [&](const PrioritySet& x) { return member(g.condition, x); };

    RefutationReport r;
    r.gadget = g.name;
    r.truncation = g.generated.truncation;
    r.memory_bound = m;

    auto gm = memory_choice_arena(a, g.sigma, m);
    if (auto rel = parity_relabeling(g.condition, gm)) {
        std::vector<Priority> pr(gm.size());
        for (VertexIndex v = 0; v < gm.size(); ++v) pr[v] = rel->priority[v] + (rel->role_swapped ? 1 : 0);
        auto solved = solve_parity_recursive(relabel(gm, pr));
        r.product_checked = true;
        r.product_refutes_all = !solved.region(g.sigma)[gm.index_of(g.start + "|0")];
        r.notes.push_back(std::string("memory-choice product solved: player ") + std::to_string(to_int(g.sigma)) +
                          (r.product_refutes_all ? " loses it, so every strategy with at most "
                                                 : " wins it, so some strategy with at most ") +
                          std::to_string(m) + " memory states " + (r.product_refutes_all ? "loses" : "wins"));
    }

    const auto shape = shape_of(a, g.sigma, m);
    Count count;
    for (auto x : shape.radix) count.times(x);
    r.machine_count = count.decimal;
    r.enumerated_exhaustively = count.saturated <= opts.budget;
    if (!r.enumerated_exhaustively && opts.require_exhaustive && !r.product_checked)
        throw Error(Errc::BudgetExceeded, count.decimal + " machines exceed the budget of " + std::to_string(opts.budget));

    std::map<std::string, std::size_t> classes;
    auto check = [&](const std::vector<std::uint64_t>& digits) {
        auto ms = machine(a, g.sigma, m, shape, digits);
        auto p = product_with_memory(a, ms, {start});
        ++r.examined;
        auto cycle = find_cycle_won_by(p.arena, VertexMask(p.arena.size(), true), member_fn, opp);
        if (!cycle) {
            ++r.survivors;
            return;
        }
        ++r.refuted;
        auto lasso = lasso_to(p, *cycle);
        auto key = to_string(lasso.inf_set(a));
        auto [it, fresh] = classes.emplace(key, r.witnesses.size());
        if (fresh) r.witnesses.push_back({key, lasso, 0});
        ++r.witnesses[it->second].count;
    };

    std::vector<std::uint64_t> digits(shape.radix.size(), 0);
    if (r.enumerated_exhaustively) {
        for (;;) {
            check(digits);
            std::size_t i = 0;
            while (i < digits.size() && ++digits[i] == shape.radix[i]) digits[i++] = 0;
            if (i == digits.size()) break;
        }
    } else {
        std::mt19937_64 rng(opts.seed);
        for (std::size_t n = 0; n < opts.budget; ++n) {
            for (std::size_t i = 0; i < digits.size(); ++i)
                digits[i] = std::uniform_int_distribution<std::uint64_t>(0, shape.radix[i] - 1)(rng);
            check(digits);
        }
        r.notes.push_back("sampled " + std::to_string(opts.budget) + " of " + count.decimal +
                          " machines (seed " + std::to_string(opts.seed) + "); sampling alone is not exhaustive");
    }

    r.notes.push_back("covers strategies of player " + std::to_string(to_int(g.sigma)) + " with at most " +
                      std::to_string(m) + " memory states on truncation " + std::to_string(r.truncation) +
                      "; that no finite memory suffices on the infinite arena is a theorem, not a result of this run");
    if (g.generated.family == Family::ChainGame)
        r.notes.push_back("opponent answers are all choices inside the truncation window, searched exactly on each product");
    return r;
}

std::string
format_report(const RefutationReport& r)
{
    std::ostringstream out;
    out << "gadget " << r.gadget << ", truncation " << r.truncation << ", memory <= " << r.memory_bound << "\n";
    out << "  machines with " << r.memory_bound << " states: " << r.machine_count
        << (r.enumerated_exhaustively ? " (enumerated)" : " (sampled)") << "\n";
    out << "  examined " << r.examined << ", refuted " << r.refuted << ", survivors " << r.survivors << "\n";
    for (const auto& w : r.witnesses)
        out << "  class inf-set " << w.strategy_class << ": " << w.count << " machines, loop length "
            << w.lasso.loop.size() << "\n";
    for (const auto& n : r.notes) out << "  note: " << n << "\n";
    out << "  verdict: " << (r.ok() ? "all refuted" : "SURVIVOR FOUND") << "\n";
    return out.str();
}

} // namespace omega

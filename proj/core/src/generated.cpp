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

#include "omegagames/generated.hpp"

#include <algorithm>

#include "omegagames/error.hpp"

namespace omega {

std::string_view
family_name(Family f)
{
    switch (f) {
    case Family::Flower: return "flower";
    case Family::ChainGame: return "chain_game";
    case Family::SplitGame: return "split_game";
    case Family::Ladder: return "ladder";
    }
    return "?";
}

Family
family_from_name(std::string_view name)
{
    for (auto f : {Family::Flower, Family::ChainGame, Family::SplitGame, Family::Ladder})
        if (family_name(f) == name) return f;
    throw Error(Errc::UnknownFamily, std::string(name));
}

ChainDescriptor
ChainDescriptor::max_parity()
{
    ChainDescriptor d;
    d.name = "max_parity";
    d.y = {1};
    d.a = 1;
    d.sigma = Player::One;
    d.window = [](std::size_t i, std::size_t n) {
        PrioritySet x{1};
        for (std::uint64_t m = i + 1; m <= n + 2; ++m) x.insert(m);
        return x;
    };
    return d;
}

ChainDescriptor
ChainDescriptor::ordinal()
{
    ChainDescriptor d;
    d.name = "ordinal";
    d.y = {Priority::omega()};
    d.a = Priority::omega();
    d.sigma = Player::Zero;
    d.window = [](std::size_t i, std::size_t n) {
        PrioritySet x{Priority::omega()};
        for (std::uint64_t m = 2 * i + 1; m <= 2 * n + 2; ++m) x.insert(m);
        return x;
    };
    return d;
}

void
check_descriptor(const ChainDescriptor& d, std::size_t n)
{
    auto bad = [&](const std::string& why) { throw Error(Errc::BadDescriptor, d.name + ": " + why); };
    if (d.y.empty()) bad("Y is empty");
    if (!d.y.count(d.a)) bad("anchor " + to_string(d.a) + " is not in Y");
    if (!d.window) bad("no window");
    for (std::size_t i = 1; i <= n; ++i) {
        auto x = d.window(i, n);
        if (!std::includes(x.begin(), x.end(), d.y.begin(), d.y.end()))
            bad("X_" + std::to_string(i) + " does not contain Y");
        if (x == d.y) bad("X_" + std::to_string(i) + " adds nothing to Y");
        if (i > 1) {
            auto prev = d.window(i - 1, n);
            if (!std::includes(prev.begin(), prev.end(), x.begin(), x.end()))
                bad("X_" + std::to_string(i) + " is not below X_" + std::to_string(i - 1));
        }
        auto wider = d.window(i, n + 1);
        if (!std::includes(wider.begin(), wider.end(), x.begin(), x.end()))
            bad("window of X_" + std::to_string(i) + " shrinks as the truncation grows");
    }
}

namespace {

struct Emitter
{
    RawArena raw;

    void vertex(const std::string& id, Player owner, Priority p) { raw.vertices.push_back({id, to_int(owner), p}); }
    void edge(const std::string& u, const std::string& v) { raw.edges.emplace_back(u, v); }
};

Arena
flower(const GeneratedArena& g)
{
    Emitter e;
    e.vertex("c", Player::Zero, g.flower == FlowerVariant::Ordinal ? Priority::omega() : Priority(0));
    for (std::size_t k = 0; k < g.truncation; ++k) {
        auto id = "p" + std::to_string(2 * k + 1);
        e.vertex(id, Player::One, 2 * k + 1);
        e.edge("c", id);
        e.edge(id, "c");
    }
    return validate_arena(e.raw);
}

Arena
chain_game(const GeneratedArena& g)
{
    const auto& d = g.chain;
    const auto n = g.truncation;
    check_descriptor(d, n);
    const auto sigma = d.sigma;
    const auto opp = opponent(sigma);
    Emitter e;
    e.vertex("c", sigma, d.a);
    e.vertex("f", sigma, d.a);
    for (const auto& p : d.y) {
        auto id = "y." + to_string(p);
        e.vertex(id, sigma, p);
        e.edge("f", id);
        e.edge(id, "c");
    }
    auto x1 = d.window(1, n);
    for (std::size_t i = 1; i <= n; ++i) {
        auto box = "b" + std::to_string(i);
        e.vertex(box, opp, d.a);
        e.edge("c", box);
        const auto xi = d.window(i, n);
        if (g.finite_appearance && i > 1) {
            for (const auto& p : xi) e.edge(box, "x1." + to_string(p));
            continue;
        }
        for (const auto& p : xi) {
            auto id = "x" + std::to_string(i) + "." + to_string(p);
            e.vertex(id, opp, p);
            e.edge(box, id);
            e.edge(id, "f");
        }
    }
    return validate_arena(e.raw);
}

Arena
split_game(const GeneratedArena& g)
{
    PrioritySet y = g.split_y;
    Priority a = g.split_a;
    Player sigma = g.split_sigma;
    if (g.union_chain) {
        y.clear();
        for (std::uint64_t m = 0; m <= 2 * g.truncation + 1; ++m) y.insert(m);
        a = 1;
    }
    if (!y.count(a)) throw Error(Errc::BadParams, "split game: anchor " + to_string(a) + " is not in Y");
    const auto opp = opponent(sigma);
    Emitter e;
    e.vertex("s", sigma, a);
    e.vertex("o", opp, a);
    for (const auto& p : y) {
        auto sp = "s." + to_string(p);
        auto op = "o." + to_string(p);
        e.vertex(sp, sigma, p);
        e.vertex(op, opp, p);
        e.edge("s", sp);
        e.edge(sp, "o");
        e.edge("o", op);
        e.edge(op, "s");
    }
    return validate_arena(e.raw);
}

Arena
ladder(const GeneratedArena& g)
{
    const auto n = g.truncation;
    Emitter e;
    e.vertex("a", Player::Zero, 2);
    e.edge("a", "t1");
    for (std::size_t k = 1; k <= n; ++k) {
        const auto s = std::to_string(k);
        e.vertex("t" + s, Player::Zero, 1);
        e.vertex("r" + s, Player::Zero, 2 * k + 1);
        e.vertex("d" + s, Player::Zero, 2);
        if (k < n) e.edge("t" + s, "t" + std::to_string(k + 1));
        e.edge("t" + s, "r" + s);
        e.edge("r" + s, "d" + s);
        e.edge("d" + s, k == 1 ? "a" : "d" + std::to_string(k - 1));
    }
    return validate_arena(e.raw);
}

} // namespace

Arena
expand(const GeneratedArena& g)
{
    if (g.truncation == 0) throw Error(Errc::BadParams, "truncation must be at least 1");
    switch (g.family) {
    case Family::Flower: return flower(g);
    case Family::ChainGame: return chain_game(g);
    case Family::SplitGame: return split_game(g);
    case Family::Ladder: return ladder(g);
    }
    throw Error(Errc::UnknownFamily, "family " + std::to_string(static_cast<int>(g.family)));
}

} // namespace omega

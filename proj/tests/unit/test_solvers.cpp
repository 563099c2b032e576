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

#include <doctest.h>

#include "../oracles.hpp"
#include "omegagames/counterexamples.hpp"
#include "omegagames/error.hpp"
#include "omegagames/random.hpp"
#include "omegagames/solvers.hpp"

using namespace omega;

namespace {

Arena
loop(Priority p)
{
    return ArenaBuilder().vertex("v", Player::Zero, p).edge("v", "v").build();
}

VertexMask
complement(const VertexMask& m)
{
    VertexMask out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) out[i] = !m[i];
    return out;
}

Arena
with_priorities(Rng& rng, const Arena& a, const std::vector<Priority>& palette)
{
    std::vector<Priority> pr(a.size());
    for (auto& p : pr) p = palette[rng() % palette.size()];
    return relabel(a, pr);
}

} // namespace

TEST_CASE("attractor")
{
    auto a = ArenaBuilder()
                 .vertex("a", Player::Zero, 0)
                 .vertex("b", Player::Zero, 0)
                 .vertex("c", Player::Zero, 0)
                 .vertex("d", Player::One, 1)
                 .edge("a", "b")
                 .edge("b", "c")
                 .edge("c", "c")
                 .edge("a", "d")
                 .edge("d", "d")
                 .edge("d", "a")
                 .build();
    VertexMask all(4, true), none(4, false), c(4, false);
    c[a.index_of("c")] = true;
    CHECK(attractor(a, Player::Zero, all).set == all);
    CHECK(attractor(a, Player::Zero, none).set == none);
    auto at = attractor(a, Player::Zero, c);
    CHECK(at.set == VertexMask{true, true, true, false});
    CHECK(at.strategy.moves[a.index_of("a")] == a.index_of("b"));
    CHECK(attractor(a, Player::One, c).set == VertexMask{false, true, true, false});
}

TEST_CASE("one-vertex games")
{
    auto even = solve_parity_recursive(loop(0));
    CHECK(even.w0 == VertexMask{true});
    auto odd = solve_parity_recursive(loop(1));
    CHECK(odd.w1 == VertexMask{true});

    auto se = solve_parity_spm(loop(2));
    CHECK(se.result.w0 == VertexMask{true});
    CHECK(!se.measure0.top[0]);
    for (auto x : se.measure0.value[0]) CHECK(x == 0);
    auto so = solve_parity_spm(loop(1));
    CHECK(so.result.w1 == VertexMask{true});
    CHECK(so.measure0.top[0]);

    auto om = solve_parity_recursive(loop(Priority::omega()));
    CHECK(om.w0 == VertexMask{true});
    CHECK(compress_priorities(relabel(loop(0), {Priority::omega(1)})) == std::vector<std::uint64_t>{1});
}

TEST_CASE("compress_priorities keeps order and parity")
{
    Rng rng(5);
    for (int i = 0; i < 50; ++i) {
        auto a = random_arena(rng, {1, 12, 9, 3});
        a = with_priorities(rng, a, {0, 3, 4, 9, Priority::omega(), Priority::omega(3), Priority(2, 2)});
        auto c = compress_priorities(a);
        for (VertexIndex v = 0; v < a.size(); ++v) {
            CHECK((c[v] & 1) == (a.priority(v).offset & 1));
            for (VertexIndex w = 0; w < a.size(); ++w) CHECK((a.priority(v) < a.priority(w)) == (c[v] < c[w]));
        }
        CHECK(*std::min_element(c.begin(), c.end()) <= 1);
    }
}

TEST_CASE("solvers agree with each other and with brute force")
{
    Rng rng(17);
    for (int i = 0; i < 150; ++i) {
        auto a = random_arena(rng, {1, i < 100 ? 7u : 25u, 5, 3});
        auto r = solve_parity_recursive(a);
        auto s = solve_parity_spm(a);
        CHECK(r.w0 == s.result.w0);
        CHECK(r.w1 == complement(r.w0));
        CHECK(verify_positional(a, cond::MinParity{}, r.strat0, r.w0).pass);
        CHECK(verify_positional(a, cond::MinParity{}, r.strat1, r.w1).pass);
        CHECK(verify_positional(a, cond::MinParity{}, s.result.strat0, s.result.w0).pass);
        CHECK(verify_positional(a, cond::MinParity{}, s.result.strat1, s.result.w1).pass);
        if (a.size() <= 7) {
            CHECK(r.w0 == oracle::brute_force_region(a, Player::Zero));
            CHECK(r.w1 == oracle::brute_force_region(a, Player::One));
        }
    }
}

TEST_CASE("progress measures")
{
    Rng rng(23);
    for (int i = 0; i < 40; ++i) {
        auto a = random_arena(rng, {2, 12, 5, 3});
        auto m = progress_measure(a, Player::Zero);
        auto r = solve_parity_recursive(a);
        for (VertexIndex v = 0; v < a.size(); ++v) {
            CHECK(m.top[v] == !r.w0[v]);
            if (m.top[v] || a.owner(v) != Player::Zero) continue;
            bool progress = false;
            for (auto w : a.successors(v)) progress = progress || !m.top[w];
            CHECK(progress);
        }
        for (auto l : m.levels) CHECK(l % 2 == 1);
        auto m1 = progress_measure(a, Player::One);
        for (VertexIndex v = 0; v < a.size(); ++v) CHECK(m1.top[v] == !r.w1[v]);
    }
}

TEST_CASE("verify_positional finds losing cycles")
{
    auto a = ArenaBuilder()
                 .vertex("a", Player::Zero, 0)
                 .vertex("b", Player::Zero, 1)
                 .vertex("c", Player::Zero, 0)
                 .edge("a", "b")
                 .edge("a", "c")
                 .edge("b", "b")
                 .edge("c", "c")
                 .build();
    PositionalStrategy s(Player::Zero, 3);
    s.moves = {1, 1, 2};
    auto v = verify_positional(a, cond::MinParity{}, s, {true, true, true});
    CHECK(!v.pass);
    CHECK(v.witness == std::vector<VertexIndex>{1});
    s.moves[0] = 2;
    CHECK(!verify_positional(a, cond::MinParity{}, s, {true, true, true}).pass);
    CHECK(verify_positional(a, cond::MinParity{}, s, {true, false, true}).pass);
    s.moves[0] = 1;
    CHECK_THROWS_AS(verify_positional(a, cond::MinParity{}, s, {true, false, true}), Error);
}

TEST_CASE("split game: no positional win, an LAR win")
{
    auto g = split_game_strong_split();
    const auto& a = g.arena;
    const auto s = a.index_of(g.start);
    std::size_t tried = 0;
    for (auto w : a.successors(s)) {
        PositionalStrategy p(g.sigma, a.size());
        for (VertexIndex v = 0; v < a.size(); ++v)
            if (a.owner(v) == g.sigma) p.moves[v] = a.successors(v).front();
        p.moves[s] = w;
        CHECK(!verify_positional(a, g.condition, p, VertexMask(a.size(), true)).pass);
        ++tried;
    }
    CHECK(tried == 3);

    auto r = solve_muller(a, g.condition);
    CHECK(r.route == MullerSolveResult::Route::Lar);
    CHECK(r.w0 == VertexMask(a.size(), true));
    REQUIRE(r.memory0);
    CHECK(verify_memory(a, g.condition, *r.memory0, r.w0).pass);
    CHECK_THROWS_AS(solve_muller(a, g.condition, MullerRoute::Path), Error);
}

TEST_CASE("LAR against the recursive Muller oracle")
{
    auto one = lar_reduce(loop(0), {{0}, {{0}}});
    CHECK(one.arena.size() == 1);

    Rng rng(29);
    for (int i = 0; i < 200; ++i) {
        const std::uint64_t k = 1 + i % 4;
        cond::ExplicitMuller m;
        for (std::uint64_t x = 0; x < k; ++x) m.alphabet.insert(x);
        for (std::uint64_t s = 0; s < (1u << k); ++s)
            if (rng() & 1) {
                PrioritySet x;
                for (std::uint64_t j = 0; j < k; ++j)
                    if (s >> j & 1) x.insert(j);
                m.f0.push_back(x);
            }
        auto a = random_arena(rng, {1, 6, k - 1, 3});
        auto fn = [&](const PrioritySet& x) { return member(m, x); };
        auto [o0, o1] = oracle::muller_regions(a, fn, VertexMask(a.size(), true));
        auto r = solve_muller(a, m, MullerRoute::Lar);
        CHECK(r.w0 == o0);
        CHECK(r.w1 == o1);
        CHECK(verify_memory(a, m, *r.memory0, r.w0).pass);
        CHECK(verify_memory(a, m, *r.memory1, r.w1).pass);
        auto auto_route = solve_muller(a, m);
        CHECK(auto_route.w0 == o0);
    }

    cond::ExplicitMuller nine;
    for (std::uint64_t x = 0; x < 9; ++x) nine.alphabet.insert(x);
    CHECK_THROWS_AS(lar_reduce(loop(0), nine), Error);
    CHECK_THROWS_AS(lar_reduce(loop(5), {{0}, {}}), Error);
}

TEST_CASE("path conditions come back positional")
{
    const Priority a = Priority::omega(0), b = Priority::omega(1), c = Priority::omega(2), d = Priority::omega(3);
    Rng rng(31);
    for (bool empty : {false, true}) {
        cond::ZielonkaPath p{Player::Zero, {{a, b}, {c, d}}, empty};
        for (int i = 0; i < 30; ++i) {
            auto g = with_priorities(rng, random_arena(rng, {1, 8, 0, 3}), {a, b, c, d, 0, 1, 5});
            auto r = solve_muller(g, p);
            CHECK(r.route == MullerSolveResult::Route::Path);
            REQUIRE(r.positional0);
            CHECK(r.reduction->role_swapped == empty);
            CHECK(verify_positional(g, p, *r.positional0, r.w0).pass);
            CHECK(verify_positional(g, p, *r.positional1, r.w1).pass);
            auto fn = [&](const PrioritySet& x) { return member(p, x); };
            auto [o0, o1] = oracle::muller_regions(g, fn, VertexMask(g.size(), true));
            CHECK(r.w0 == o0);
            CHECK(r.w1 == o1);
        }
    }
    auto g = ArenaBuilder()
                 .vertex("x", Player::Zero, 0)
                 .vertex("y", Player::One, 1)
                 .edge("x", "y")
                 .edge("x", "x")
                 .edge("y", "x")
                 .edge("y", "y")
                 .build();
    auto weak = solve_muller(g, cond::ExplicitMuller{{0, 1}, {{0, 1}}});
    CHECK(weak.route == MullerSolveResult::Route::Lar);
    CHECK(weak.memory0);
    CHECK_THROWS_AS(solve_muller(g, cond::ExplicitMuller{{0, 1}, {{0, 1}}}, MullerRoute::Path), Error);
}

TEST_CASE("find_cycle_won_by is exact on small graphs")
{
    Rng rng(37);
    for (int i = 0; i < 100; ++i) {
        auto a = random_arena(rng, {1, 7, 3, 3});
        cond::ExplicitMuller m = materialize(cond::MaxParity{}, {0, 1, 2, 3});
        auto fn = [&](const PrioritySet& x) { return member(m, x); };
        for (auto target : {Player::Zero, Player::One}) {
            auto found = find_cycle_won_by(a, VertexMask(a.size(), true), fn, target);
            bool exists = false;
            for (std::uint32_t mask = 1; mask < (1u << a.size()); ++mask) {
                VertexMask u(a.size());
                PrioritySet colors;
                for (VertexIndex v = 0; v < a.size(); ++v)
                    if (mask >> v & 1) u[v] = true, colors.insert(a.priority(v));
                if (fn(colors) != target) continue;
                bool strong = true;
                for (VertexIndex v = 0; v < a.size() && strong; ++v) {
                    if (!u[v]) continue;
                    for (VertexIndex w = 0; w < a.size(); ++w) {
                        if (!u[w]) continue;
                        std::vector<bool> seen(a.size(), false);
                        std::vector<VertexIndex> todo{v};
                        bool hit = false;
                        while (!todo.empty() && !hit) {
                            auto x = todo.back();
                            todo.pop_back();
                            for (auto y : a.successors(x)) {
                                if (!u[y]) continue;
                                if (y == w) hit = true;
                                if (!seen[y]) seen[y] = true, todo.push_back(y);
                            }
                        }
                        strong = strong && hit;
                    }
                }
                if (strong) exists = true;
            }
            CHECK(found.has_value() == exists);
            if (found) {
                PrioritySet colors;
                for (auto v : *found) colors.insert(a.priority(v));
                CHECK(fn(colors) == target);
                for (std::size_t j = 0; j < found->size(); ++j)
                    CHECK(a.has_edge((*found)[j], (*found)[(j + 1) % found->size()]));
            }
        }
    }
}

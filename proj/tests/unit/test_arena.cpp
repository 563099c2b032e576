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

#include <map>

#include "omegagames/arena.hpp"
#include "omegagames/error.hpp"
#include "omegagames/generated.hpp"
#include "omegagames/strategy.hpp"

using namespace omega;

namespace {

Errc
code_of(const RawArena& raw)
{
    try {
        validate_arena(raw);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error");
    return Errc::BadParams;
}

GeneratedArena
family(Family f, std::size_t n)
{
    GeneratedArena g;
    g.family = f;
    g.truncation = n;
    if (f == Family::SplitGame) {
        g.split_y = {0, 1, 2};
        g.split_a = 1;
        g.union_chain = n % 2 == 0;
    }
    return g;
}

} // namespace

TEST_CASE("priorities order omega above the naturals")
{
    CHECK(Priority(5) < Priority::omega());
    CHECK(Priority::omega() < Priority::omega(1));
    CHECK(Priority::omega(2) < Priority(2, 0));
    CHECK(Priority::omega().is_even());
    CHECK(Priority::omega(3).parity() == Player::One);
    CHECK(to_string(Priority(5)) == "5");
    CHECK(to_string(Priority::omega()) == "w");
    CHECK(to_string(Priority::omega(2)) == "w+2");
    CHECK(to_string(Priority(3, 1)) == "w*3+1");
}

TEST_CASE("validate_arena")
{
    RawArena ok;
    ok.vertices = {{"v", 0, 0}};
    ok.edges = {{"v", "v"}};
    auto a = validate_arena(ok);
    CHECK(a.size() == 1);
    CHECK(a.successors(0) == std::vector<VertexIndex>{0});

    RawArena lonely;
    lonely.vertices = {{"v", 0, 0}};
    CHECK(code_of(lonely) == Errc::NoSuccessor);

    RawArena dangling;
    dangling.vertices = {{"a", 0, 0}};
    dangling.edges = {{"a", "b"}};
    CHECK(code_of(dangling) == Errc::DanglingEdge);

    RawArena dup;
    dup.vertices = {{"a", 0, 0}, {"a", 1, 1}};
    dup.edges = {{"a", "a"}};
    CHECK(code_of(dup) == Errc::DuplicateId);

    RawArena owner;
    owner.vertices = {{"a", 2, 0}};
    owner.edges = {{"a", "a"}};
    CHECK(code_of(owner) == Errc::BadParams);

    RawArena multi;
    multi.vertices = {{"a", 0, 0}, {"b", 1, 1}};
    multi.edges = {{"a", "b"}, {"a", "b"}, {"b", "a"}};
    CHECK(validate_arena(multi).edge_count() == 2);
}

TEST_CASE("flower and ladder shapes")
{
    GeneratedArena g;
    g.truncation = 2;
    auto f = expand(g);
    auto c = f.index_of("c");
    CHECK(f.priority(c) == Priority(0));
    CHECK(f.owner(c) == Player::Zero);
    CHECK(f.priority(f.index_of("p1")) == Priority(1));
    CHECK(f.priority(f.index_of("p3")) == Priority(3));
    CHECK(f.owner(f.index_of("p3")) == Player::One);
    CHECK(f.has_edge(c, f.index_of("p1")));
    CHECK(f.has_edge(f.index_of("p3"), c));

    g.truncation = 3;
    auto f3 = expand(g);
    CHECK(f3.size() == 4);
    CHECK(f3.edge_count() == 6);

    GeneratedArena l;
    l.family = Family::Ladder;
    l.truncation = 1;
    auto one = expand(l);
    CHECK(one.size() == 4);
    CHECK(one.priority(one.index_of("a")) == Priority(2));
    CHECK(one.priority(one.index_of("t1")) == Priority(1));
    CHECK(one.priority(one.index_of("r1")) == Priority(3));
    CHECK(one.priority(one.index_of("d1")) == Priority(2));
    CHECK(one.has_edge(one.index_of("a"), one.index_of("t1")));
    CHECK(one.has_edge(one.index_of("t1"), one.index_of("r1")));
    CHECK(one.has_edge(one.index_of("r1"), one.index_of("d1")));
    CHECK(one.has_edge(one.index_of("d1"), one.index_of("a")));

    l.truncation = 3;
    auto three = expand(l);
    CHECK(three.priorities() == PrioritySet{1, 2, 3, 5, 7});
    for (VertexIndex v = 0; v < three.size(); ++v) {
        CHECK(three.successors(v).size() <= 2);
        CHECK(three.owner(v) == Player::Zero);
    }
}

TEST_CASE("every family expands validly and monotonically")
{
    for (auto f : {Family::Flower, Family::ChainGame, Family::SplitGame, Family::Ladder}) {
        CAPTURE(family_name(f));
        for (std::size_t n = 1; n <= 64; ++n) {
            auto g = family(f, n);
            auto a = expand(g);
            for (VertexIndex v = 0; v < a.size(); ++v) CHECK(!a.successors(v).empty());
            if (f == Family::SplitGame) continue;
            CHECK(is_induced_subgraph(a, expand(family(f, n + 1))));
        }
    }
    GeneratedArena o;
    o.flower = FlowerVariant::Ordinal;
    o.truncation = 3;
    auto a = expand(o);
    CHECK(a.priority(a.index_of("c")) == Priority::omega());

    GeneratedArena bad;
    bad.truncation = 0;
    CHECK_THROWS_AS(expand(bad), Error);
    CHECK_THROWS_AS(family_from_name("nope"), Error);
    CHECK(family_from_name("ladder") == Family::Ladder);
}

TEST_CASE("finite appearance keeps X-element priorities unique")
{
    for (auto d : {ChainDescriptor::max_parity(), ChainDescriptor::ordinal()}) {
        GeneratedArena g;
        g.family = Family::ChainGame;
        g.chain = d;
        g.truncation = 6;
        g.finite_appearance = true;
        auto a = expand(g);
        std::map<Priority, int> seen;
        for (VertexIndex v = 0; v < a.size(); ++v)
            if (a.id(v)[0] == 'x') ++seen[a.priority(v)];
        for (const auto& [p, n] : seen) CHECK_MESSAGE(n == 1, to_string(p));
        for (std::size_t i = 2; i <= 6; ++i) {
            auto b = a.index_of("b" + std::to_string(i));
            for (auto w : a.successors(b)) CHECK(a.id(w).rfind("x1.", 0) == 0);
        }
    }
}

TEST_CASE("induced subarena and relabel")
{
    auto a = ArenaBuilder()
                 .vertex("a", Player::Zero, 0)
                 .vertex("b", Player::One, 1)
                 .vertex("c", Player::Zero, 2)
                 .edge("a", "b")
                 .edge("b", "a")
                 .edge("b", "c")
                 .edge("c", "c")
                 .build();
    std::vector<VertexIndex> old;
    auto sub = induced_subarena(a, {true, true, false}, &old);
    CHECK(sub.size() == 2);
    CHECK(old.size() == 2);
    CHECK(sub.successors(sub.index_of("b")).size() == 1);
    CHECK(is_induced_subgraph(sub, a));
    auto r = relabel(a, {Priority(4), Priority(5), Priority(6)});
    CHECK(r.priority(r.index_of("b")) == Priority(5));
    auto s = swap_owners(a);
    CHECK(s.owner(s.index_of("b")) == Player::Zero);
}

TEST_CASE("memory products")
{
    auto a = ArenaBuilder()
                 .vertex("x", Player::Zero, 0)
                 .vertex("y", Player::One, 1)
                 .vertex("z", Player::One, 2)
                 .edge("x", "y")
                 .edge("x", "z")
                 .edge("y", "x")
                 .edge("z", "x")
                 .build();
    const auto x = a.index_of("x"), y = a.index_of("y"), z = a.index_of("z");

    PositionalStrategy pos(Player::Zero, a.size());
    pos.moves[x] = y;
    auto p1 = product_with_memory(a, MemoryStrategy::from_positional(pos));
    CHECK(p1.arena.size() == 3);
    CHECK(p1.arena.edge_count() == 3);

    MemoryStrategy alt(Player::Zero, 2, a.size());
    alt.next[x] = {y, z};
    alt.update[0] = {0, 1, 0};
    alt.update[1] = {1, 1, 0};
    auto p2 = product_with_memory(a, alt, {x});
    std::size_t copies = 0;
    for (VertexIndex v = 0; v < p2.arena.size(); ++v)
        if (p2.vertex[v] == x) {
            ++copies;
            CHECK(p2.arena.successors(v).size() == 1);
        }
    CHECK(copies == 2);
    for (VertexIndex v = 0; v < p2.arena.size(); ++v)
        for (auto w : p2.arena.successors(v)) CHECK(a.has_edge(p2.vertex[v], p2.vertex[w]));

    MemoryStrategy broken(Player::Zero, 1, a.size());
    CHECK_THROWS_AS(product_with_memory(a, broken, {x}), Error);
}

TEST_CASE("induced lassos")
{
    GeneratedArena g;
    g.truncation = 1;
    auto f = expand(g);
    PositionalStrategy s0(Player::Zero, f.size()), s1(Player::One, f.size());
    s0.moves[f.index_of("c")] = f.index_of("p1");
    s1.moves[f.index_of("p1")] = f.index_of("c");
    auto l = induced_lasso(f, s0, s1, f.index_of("c"));
    CHECK(l.prefix.empty());
    CHECK(l.loop.size() == 2);
    CHECK(l.inf_set(f) == PrioritySet{0, 1});
    CHECK(is_valid_lasso(f, l));
    CHECK(induced_lasso(f, s0, s1, f.index_of("c")) == l);

    auto self = ArenaBuilder().vertex("v", Player::Zero, 0).edge("v", "v").build();
    PositionalStrategy t0(Player::Zero, 1), t1(Player::One, 1);
    t0.moves[0] = 0;
    auto sl = induced_lasso(self, t0, t1, 0);
    CHECK(sl.prefix.empty());
    CHECK(sl.loop.size() == 1);

    auto tri = ArenaBuilder()
                   .vertex("a", Player::Zero, 0)
                   .vertex("b", Player::One, 1)
                   .vertex("c", Player::Zero, 2)
                   .edge("a", "b")
                   .edge("a", "c")
                   .edge("b", "a")
                   .edge("b", "c")
                   .edge("c", "a")
                   .edge("c", "b")
                   .build();
    MemoryStrategy m0(Player::Zero, 2, 3), m1(Player::One, 2, 3);
    m0.next[0] = {1, 2};
    m0.next[2] = {1, 0};
    m0.update = {{1, 0, 1}, {0, 1, 0}};
    m1.next[1] = {0, 2};
    m1.update = {{0, 1, 1}, {1, 0, 0}};
    auto ml = induced_lasso(tri, m0, m1, 0);
    CHECK(is_valid_lasso(tri, ml));
    CHECK(ml.loop.size() <= 12);
    CHECK(ml.prefix.size() + ml.loop.size() <= 12);
}

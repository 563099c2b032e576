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

#include "omegagames/counterexamples.hpp"
#include "omegagames/error.hpp"
#include "omegagames/io.hpp"
#include "omegagames/random.hpp"

using namespace omega;

namespace {

Errc
parse_code(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::Mismatch;
}

std::size_t
count(const std::string& text, const std::string& what)
{
    std::size_t n = 0;
    for (auto i = text.find(what); i != std::string::npos; i = text.find(what, i + 1)) ++n;
    return n;
}

} // namespace

TEST_CASE("PGSolver input")
{
    auto p = io::parse_pgsolver("parity 1; 0 2 0 0;");
    REQUIRE(p.arena.size() == 1);
    CHECK(p.arena.priority(0) == Priority(0));
    CHECK(p.arena.owner(0) == Player::Zero);
    CHECK(p.arena.successors(0) == std::vector<VertexIndex>{0});
    CHECK(p.meta.reflection == 2);

    const std::string text = "parity 2;\n0 3 0 1,2 \"start\";\n1 0 1 0;\n2 2 1 2;\n";
    auto q = io::parse_pgsolver(text);
    CHECK(q.meta.reflection == 4);
    CHECK(q.arena.priority(q.arena.index_of("0")) == Priority(1));
    CHECK(q.meta.names.at("0") == "start");
    CHECK(io::write_pgsolver(q.arena, &q.meta) == text);
    CHECK(io::looks_like_json(" {\"a\":1}"));
    CHECK(!io::looks_like_json(text));

    CHECK(parse_code([] { io::parse_pgsolver("parity 1;\n0 1 2 0;"); }) == Errc::ParseError);
    CHECK(parse_code([] { io::parse_pgsolver("0 1 0 0;"); }) == Errc::ParseError);
    CHECK(parse_code([] { io::parse_pgsolver("parity 1;\n0 1 0 0"); }) == Errc::ParseError);
    CHECK(parse_code([] { io::parse_pgsolver("parity 1;\n0 1 0 5;"); }) == Errc::DanglingEdge);
    CHECK(parse_code([] { io::parse_pgsolver("parity 1;\n0 2 0 0\n1 2 1 0;"); }) == Errc::ParseError);
    try {
        io::parse_pgsolver("parity 1;\n0 1 0 0;\n1 x 0 0;");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("arena JSON")
{
    const std::string text = R"({"vertices":[{"id":"b","owner":1,"priority":{"offset":3}},
        {"id":"a","owner":0,"priority":{"limit":1,"offset":0}}],"edges":[["a","b"],["b","a"],["b","b"]]})";
    auto a = io::parse_arena_json(text);
    CHECK(a.priority(a.index_of("a")) == Priority::omega());
    auto canon = io::write_arena_json(a);
    CHECK(io::write_arena_json(io::parse_arena_json(canon)) == canon);
    CHECK(canon.back() == '\n');
    CHECK(canon.find("\"edges\"") < canon.find("\"vertices\""));
    CHECK(io::parse_arena_any(canon).size() == 2);

    CHECK(parse_code([] {
              io::parse_arena_json(R"({"vertices":[{"id":"a","owner":2,"priority":0}],"edges":[["a","a"]]})");
          }) == Errc::ParseError);
    CHECK(parse_code([] { io::parse_arena_json("{\"vertices\": ["); }) == Errc::ParseError);
    CHECK(parse_code([] { io::parse_arena_json(R"({"vertices":[]})"); }) == Errc::ParseError);

    Rng rng(61);
    for (int i = 0; i < 30; ++i) {
        auto r = random_arena(rng, {1, 15, 6, 3});
        auto j = io::write_arena_json(r);
        CHECK(io::write_arena_json(io::parse_arena_json(j)) == j);
        auto pg = io::write_pgsolver(r);
        auto back = io::parse_pgsolver(pg);
        CHECK(io::write_pgsolver(back.arena, &back.meta) == pg);
    }
}

TEST_CASE("condition JSON round trips")
{
    std::vector<ConditionSpec> cs{
        cond::MinParity{},
        cond::MaxParity{},
        cond::Infinity{},
        cond::OrdinalParity{Priority::omega(2)},
        cond::ExplicitMuller{{0, 1, 2}, {{0, 1, 2}, {0, 2}}},
        cond::ZielonkaPath{Player::One, {{0, 1}, {Priority::omega()}}, true},
        cond::SingletonLimit{{1, 2, 3}, 0},
    };
    for (const auto& c : cs) {
        auto text = io::write_condition_json(c);
        auto back = io::parse_condition_json(text);
        CHECK(back == c);
        CHECK(io::write_condition_json(back) == text);
    }
    CHECK(std::holds_alternative<cond::OrdinalParity>(io::parse_condition_json(R"({"kind":"ordinal_parity","limit":1,"offset":0})")));
    CHECK(parse_code([] { io::parse_condition_json(R"({"kind":"rabin"})"); }) == Errc::ParseError);
    CHECK(parse_code([] { io::parse_condition_json(R"({"kind":"explicit","C":[0],"F0":[[3]]})"); }) ==
          Errc::BadParams);
}

TEST_CASE("strategy JSON")
{
    auto a = gen_flower(2).arena;
    MemoryStrategy s(Player::Zero, 2, a.size());
    s.memory_names = {"even", "odd"};
    const auto c = a.index_of("c");
    s.next[c] = {a.index_of("p1"), a.index_of("p3")};
    for (VertexIndex w = 0; w < a.size(); ++w) s.update[0][w] = s.update[1][w] = w == c ? 0 : 1;
    auto text = io::write_memory_strategy_json(a, s);
    auto back = io::parse_memory_strategy_json(text, a);
    CHECK(io::write_memory_strategy_json(a, back) == text);
    CHECK(back.next == s.next);

    PositionalStrategy p(Player::Zero, a.size());
    p.moves[c] = a.index_of("p3");
    auto pt = io::write_positional_json(a, p);
    CHECK(io::parse_positional_json(pt, a) == p);
    CHECK(io::parse_positional_json(R"({"c":"p3"})", a) == p);
    CHECK(parse_code([&] { io::parse_positional_json(R"({"c":"nowhere"})", a); }) == Errc::ParseError);
}

TEST_CASE("DOT export")
{
    auto a = gen_flower(2).arena;
    auto plain = io::export_dot(a);
    CHECK(plain.rfind("digraph", 0) == 0);
    CHECK(count(plain, "shape=") == a.size());
    CHECK(count(plain, "shape=box") == 2);
    CHECK(plain.find("label=\"c\\n0\"") != std::string::npos);
    CHECK(count(plain, "fillcolor") == 0);

    SolveResult r;
    r.w0 = {true, false, true};
    r.w1 = {false, true, false};
    r.strat0 = PositionalStrategy(Player::Zero, a.size());
    r.strat1 = PositionalStrategy(Player::One, a.size());
    auto colored = io::export_dot(a, io::overlay_of(a, r));
    CHECK(count(colored, "fillcolor") == a.size());

    io::DotOverlay o;
    o.strategy["c"] = "p1";
    o.labels["p3"] = "7";
    auto bold = io::export_dot(a, o);
    CHECK(count(bold, "style=bold") == 1);
    CHECK(bold.find("\"c\" -> \"p1\" [style=bold") != std::string::npos);
    CHECK(bold.find("xlabel=\"7\"") != std::string::npos);

    io::DotOverlay bad;
    bad.w0 = {"nope"};
    CHECK(parse_code([&] { io::export_dot(a, bad); }) == Errc::UnknownVertexInOverlay);
}

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

#include "omegagames/conditions.hpp"
#include "omegagames/counterexamples.hpp"
#include "omegagames/error.hpp"

using namespace omega;

TEST_CASE("member on the built-in kinds")
{
    CHECK(member(cond::MinParity{}, PrioritySet{1, 2, 4}) == Player::One);
    CHECK(member(cond::MinParity{}, PrioritySet{}) == Player::Zero);
    CHECK(member(cond::MaxParity{}, PrioritySet{}) == Player::Zero);
    CHECK(member(cond::MaxParity{}, PrioritySet{0, 3}) == Player::One);
    CHECK(member(cond::MaxParity{}, InfSetDescriptor::all_naturals_except({})) == Player::Zero);
    CHECK(member(cond::Infinity{}, PrioritySet{}) == Player::Zero);
    CHECK(member(cond::Infinity{}, PrioritySet{2}) == Player::One);

    cond::OrdinalParity o{Priority::omega(2)};
    CHECK(member(o, PrioritySet{Priority::omega(), 5}) == Player::One);
    CHECK(member(o, PrioritySet{Priority::omega(), Priority::omega(1)}) == Player::Zero);
    CHECK_THROWS_AS(member(o, PrioritySet{Priority::omega(2)}), Error);

    cond::ZielonkaPath z{Player::Zero, {{0, 1}, {2, 3}}, false};
    CHECK(member(z, PrioritySet{2, 7}) == Player::One);
    CHECK(member(z, PrioritySet{7}) == Player::Zero);
    CHECK(member(z, PrioritySet{1, 7}) == Player::Zero);
    CHECK(member(z, PrioritySet{}) == Player::Zero);

    cond::SingletonLimit s{{1, 2, 3}, 0};
    CHECK(member(s, PrioritySet{0}) == Player::Zero);
    CHECK(member(s, PrioritySet{1, 2}) == Player::Zero);
    CHECK(member(s, PrioritySet{0, 2}) == Player::One);
    CHECK(member(s, PrioritySet{}) == Player::Zero);

    cond::ExplicitMuller m{{0, 1}, {{0, 1}}};
    CHECK(member(m, PrioritySet{0, 1}) == Player::Zero);
    CHECK(member(m, PrioritySet{1}) == Player::One);
    CHECK_THROWS_AS(member(m, PrioritySet{2}), Error);
}

TEST_CASE("winner_of_lasso")
{
    GeneratedArena g;
    g.truncation = 3;
    auto f = expand(g);
    const auto c = f.index_of("c");
    for (std::uint64_t n = 0; n < 3; ++n) {
        Lasso l{{}, {c, f.index_of("p" + std::to_string(2 * n + 1))}};
        CHECK(l.inf_set(f) == PrioritySet{0, 2 * n + 1});
        CHECK(winner_of_lasso(cond::MaxParity{}, f, l) == Player::One);
        CHECK(winner_of_lasso(cond::Infinity{}, f, l) == Player::One);
    }
    auto self = ArenaBuilder().vertex("v", Player::Zero, 0).edge("v", "v").build();
    CHECK(winner_of_lasso(cond::MinParity{}, self, Lasso{{}, {0}}) == Player::Zero);
}

TEST_CASE("scheduled plays are certified on a finite horizon")
{
    auto flower = flower_schedule(FlowerVariant::MaxParity);
    auto v = winner_of_scheduled(cond::MaxParity{}, flower, 1000);
    CHECK(v.winner == Player::Zero);
    CHECK(!v.report.checks.empty());
    CHECK(v.report.horizon == 1000);

    auto wrong = flower;
    wrong.declared_inf_set = InfSetDescriptor::of({0, 3});
    try {
        winner_of_scheduled(cond::MaxParity{}, wrong, 1000);
        FAIL("expected a violated certificate");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::CertificateViolated);
    }

    auto ordinal = winner_of_scheduled(cond::OrdinalParity{Priority::omega(1)}, flower_schedule(FlowerVariant::Ordinal), 1000);
    CHECK(ordinal.winner == Player::Zero);

    for (auto d : {ChainDescriptor::max_parity(), ChainDescriptor::ordinal()}) {
        auto g = gen_chain_game(d, 4);
        auto r = winner_of_scheduled(g.condition, chain_schedule(d), 1000);
        CHECK(r.winner == d.sigma);
    }
    CHECK(winner_of_scheduled(cond::MaxParity{}, ladder_schedule(), 1000).winner == Player::Zero);
}

TEST_CASE("materialize and check_condition")
{
    auto m = materialize(cond::MinParity{}, {0, 1, 2});
    CHECK(m.alphabet == PrioritySet{0, 1, 2});
    CHECK(m.f0.size() == 6);
    for (const auto& x : m.f0) CHECK(member(cond::MinParity{}, x) == Player::Zero);

    CHECK_THROWS_AS(check_condition(cond::ZielonkaPath{Player::Zero, {{0}, {0, 1}}, false}), Error);
    CHECK_THROWS_AS(check_condition(cond::ZielonkaPath{Player::Zero, {{}}, false}), Error);
    CHECK_THROWS_AS(check_condition(cond::ExplicitMuller{{0}, {{1}}}), Error);
    CHECK_NOTHROW(check_condition(cond::ExplicitMuller{{0, 1}, {{0}, {}}}));
}

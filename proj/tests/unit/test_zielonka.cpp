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

#include <random>

#include "../oracles.hpp"
#include "omegagames/error.hpp"
#include "omegagames/random.hpp"
#include "omegagames/zielonka.hpp"

using namespace omega;

namespace {

const Priority a = Priority::omega(0), b = Priority::omega(1), c = Priority::omega(2), d = Priority::omega(3);

void
check_against_oracle(const cond::ExplicitMuller& m)
{
    auto t = build_tree(m);
    auto fn = [&](const PrioritySet& x) { return member(m, x); };
    REQUIRE(t.root().label == m.alphabet);
    CHECK(t.root().player == fn(m.alphabet));
    for (const auto& node : t.nodes) {
        auto expect = oracle::maximal_children(fn, node.label, node.player);
        std::vector<PrioritySet> got;
        for (auto ch : node.children) {
            got.push_back(t.nodes[ch].label);
            CHECK(t.nodes[ch].player == opponent(node.player));
        }
        CHECK(got == expect);
    }
}

cond::ExplicitMuller
random_muller(std::mt19937_64& rng, std::size_t k)
{
    cond::ExplicitMuller m;
    for (std::uint64_t i = 0; i < k; ++i) m.alphabet.insert(i);
    for (std::uint64_t s = 0; s < (1u << k); ++s)
        if (rng() & 1) {
            PrioritySet x;
            for (std::uint64_t i = 0; i < k; ++i)
                if (s >> i & 1) x.insert(i);
            m.f0.push_back(x);
        }
    return m;
}

} // namespace

TEST_CASE("Zielonka trees match the maximal-subset oracle")
{
    check_against_oracle({{0, 1}, {{0, 1}}});
    auto two = build_tree({{0, 1}, {{0, 1}}});
    CHECK(two.nodes.size() == 3);
    CHECK(two.root().children.size() == 2);
    CHECK(!is_path_of_cofinite(two));

    auto single = build_tree({{0, 1, 2}, materialize(cond::Infinity{}, {0, 1, 2}).f0});
    CHECK(single.nodes.size() == 2); // the root over C owned by 1, then ∅
    auto all0 = build_tree(materialize(cond::MaxParity{}, {0}));
    CHECK(all0.nodes.size() == 1);

    cond::ExplicitMuller five;
    five.alphabet = {0, 1, 2, 3, 4};
    for (std::uint64_t s = 0; s < 32; ++s) {
        PrioritySet x;
        for (std::uint64_t i = 0; i < 5; ++i)
            if (s >> i & 1) x.insert(i);
        if (x.count(0) || x.count(1) || (!x.count(2) && !x.count(3))) five.f0.push_back(x);
    }
    check_against_oracle(five);
    auto t = build_tree(five);
    REQUIRE(t.nodes.size() == 3);
    CHECK(t.nodes[1].label == PrioritySet{2, 3, 4});
    CHECK(t.nodes[1].player == Player::One);
    CHECK(t.nodes[2].label == PrioritySet{4});
    CHECK(is_path_of_cofinite(t));
    CHECK(is_path_of_cofinite(cond::ZielonkaPath{Player::One, {{0}, {1, 2}}, true}));

    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) check_against_oracle(random_muller(rng, 1 + i % 5));

    cond::ExplicitMuller big;
    for (std::uint64_t i = 0; i < 17; ++i) big.alphabet.insert(i);
    CHECK_THROWS_AS(build_tree(big), Error);
}

TEST_CASE("strong splits")
{
    CHECK(check_p0(materialize(cond::MinParity{}, {0, 1, 2, 3, 4, 5})).pass);
    CHECK(check_p0({{0, 1}, {{0, 1}}}).pass);

    auto v = check_p0({{0, 1, 2}, {{0, 2}, {0, 1, 2}}});
    REQUIRE(!v.pass);
    REQUIRE(v.witness);
    CHECK(v.witness->side == Player::One);
    CHECK(v.witness->first == PrioritySet{0, 1});
    CHECK(v.witness->second == PrioritySet{1, 2});

    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        auto m = random_muller(rng, 1 + i % 4);
        auto r = check_p0(m);
        bool split = false;
        std::vector<PrioritySet> sets;
        for (std::uint64_t s = 0; s < (1u << m.alphabet.size()); ++s) {
            PrioritySet x;
            for (std::uint64_t j = 0; j < m.alphabet.size(); ++j)
                if (s >> j & 1) x.insert(j);
            sets.push_back(x);
        }
        for (const auto& x : sets)
            for (const auto& y : sets) {
                PrioritySet both, uni(x);
                std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::inserter(both, both.end()));
                uni.insert(y.begin(), y.end());
                if (!both.empty() && member(m, x) == member(m, y) && member(m, uni) != member(m, x)) split = true;
            }
        CHECK(r.pass == !split);
        if (!r.pass) {
            const auto& w = *r.witness;
            PrioritySet uni(w.first);
            uni.insert(w.second.begin(), w.second.end());
            CHECK(member(m, w.first) == w.side);
            CHECK(member(m, w.second) == w.side);
            CHECK(member(m, uni) == opponent(w.side));
        }
    }
}

TEST_CASE("chain closure verdicts")
{
    auto minp = check_chains(cond::MinParity{});
    CHECK(minp.p1.pass);
    CHECK(minp.p2.pass);

    auto maxp = check_chains(cond::MaxParity{});
    REQUIRE(!maxp.p1.pass);
    REQUIRE(maxp.p1.witness);
    CHECK(maxp.p1.witness->limit.finite == PrioritySet{1});
    CHECK(validate_witness(cond::MaxParity{}, *maxp.p1.witness));
    for (std::uint64_t i = 1; i <= 8; ++i) {
        const auto& x = maxp.p1.witness->members[i - 1];
        for (std::uint64_t n = 0; n <= i + 5; ++n) CHECK(x.contains(n) == (n == 1 || n > i));
    }
    REQUIRE(!maxp.p2.pass);
    for (std::uint64_t i = 1; i <= 8; ++i) {
        const auto& x = maxp.p2.witness->members[i - 1];
        for (std::uint64_t n = 0; n <= 2 * i + 5; ++n) CHECK(x.contains(n) == (n <= 2 * i + 1));
    }

    auto ord = check_chains(cond::OrdinalParity{Priority::omega(2)});
    REQUIRE(!ord.p1.pass);
    CHECK(ord.p1.witness->limit.contains(Priority::omega()));
    for (const auto& x : ord.p1.witness->members) CHECK(x.contains(Priority::omega()));
    CHECK(ord.p2.pass);
    CHECK(check_chains(cond::OrdinalParity{Priority::omega()}).p1.pass);

    auto sl = check_chains(cond::SingletonLimit{{1, 2, 3}, 0});
    CHECK(!sl.p1.pass);
    CHECK(sl.p2.pass);
}

TEST_CASE("classify")
{
    auto m = classify(cond::MinParity{});
    CHECK(m.p0.pass);
    CHECK(m.p1.pass);
    CHECK(m.p2.pass);
    CHECK(m.path_shape);
    auto x = classify(cond::MaxParity{});
    CHECK(!x.p1.pass);
    CHECK(!x.p2.pass);
    CHECK(!x.path_shape);
    auto s = classify(cond::ExplicitMuller{{0, 1, 2}, {{0, 2}, {0, 1, 2}}});
    CHECK(!s.p0.pass);
    CHECK(!s.path_shape);
    CHECK(classify(cond::ZielonkaPath{Player::Zero, {{0, 1}}, true}).path_shape);
}

TEST_CASE("the two worked reductions")
{
    auto r1 = reduce_to_parity(cond::ZielonkaPath{Player::Zero, {{a, b}, {c, d}}, false});
    CHECK(r1.f == std::map<Priority, std::uint64_t>{{a, 0}, {b, 0}, {c, 1}, {d, 1}});
    CHECK(r1.tail == Reduction::Tail::Constant);
    CHECK(r1.target == 2);
    CHECK(!r1.role_swapped);
    for (std::uint64_t x = 0; x < 20; ++x) CHECK(r1.apply(x) == 2);
    CHECK(r1.winner({c, d, 7}) == Player::One);
    CHECK(member(cond::ZielonkaPath{Player::Zero, {{a, b}, {c, d}}, false}, PrioritySet{c, d, 7}) == Player::One);

    cond::ZielonkaPath p2{Player::Zero, {{a, b}, {c, d}}, true};
    auto r2 = reduce_to_parity(p2);
    CHECK(r2.f == std::map<Priority, std::uint64_t>{{a, 1}, {b, 1}, {c, 2}, {d, 2}});
    CHECK(r2.role_swapped);
    for (std::uint64_t x = 0; x < 20; ++x) CHECK(r2.apply(x) == 2 * x + 3);
    CHECK(r2.winner({}) == Player::One);
    CHECK(member(p2, PrioritySet{}) == Player::One);

    auto r0 = reduce_to_parity(cond::ZielonkaPath{Player::Zero, {}, false});
    CHECK(!r0.role_swapped);
    for (std::uint64_t x = 0; x < 10; ++x) CHECK(r0.apply(x) == 0);

    auto id = reduce_to_parity(cond::MinParity{});
    CHECK(id.tail == Reduction::Tail::Identity);
    std::vector<PrioritySet> sets;
    for (std::uint64_t s = 1; s < 64; ++s) {
        PrioritySet x;
        for (std::uint64_t i = 0; i < 6; ++i)
            if (s >> i & 1) x.insert(i);
        sets.push_back(x);
    }
    CHECK(verify_reduction(id, cond::MinParity{}, sets).sets_checked == sets.size());

    CHECK_THROWS_AS(reduce_to_parity(cond::MaxParity{}), Error);
    CHECK_THROWS_AS(reduce_to_parity(cond::ExplicitMuller{{0, 1}, {{0, 1}}}), Error);
    CHECK_THROWS_AS(verify_reduction(r1, cond::MinParity{}, {{a, 7}}), Error);
}

TEST_CASE("reductions of random finite path conditions")
{
    Rng rng(3);
    for (int i = 0; i < 40; ++i) {
        const std::size_t k = 1 + i % 8;
        auto spec = random_path_spec(rng, k);
        PrioritySet alphabet;
        for (std::uint64_t x = 0; x < k; ++x) alphabet.insert(x);
        auto m = materialize(spec, alphabet);
        CHECK(is_path_of_cofinite(build_tree(m)));
        auto r = reduce_to_parity(m);
        std::vector<PrioritySet> sets;
        for (std::uint64_t s = 1; s < (1u << k); ++s) {
            PrioritySet x;
            for (std::uint64_t j = 0; j < k; ++j)
                if (s >> j & 1) x.insert(j);
            sets.push_back(x);
        }
        CHECK_NOTHROW(verify_reduction(r, m, sets));
        CHECK_NOTHROW(verify_reduction(reduce_to_parity(spec), spec, sets));
    }
}

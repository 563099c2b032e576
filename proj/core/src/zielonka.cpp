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

#include "omegagames/zielonka.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "omegagames/error.hpp"

namespace omega {

template <class... Ts> struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

namespace {

using Mask = std::uint32_t;

/// Bitmask view of an explicit condition: win[mask] is the player owning that subset.
struct Table
{
    std::vector<Priority> elems;
    std::vector<Player> win;

    explicit Table(const cond::ExplicitMuller& c)
    {
        if (c.alphabet.size() > kMaxTreeAlphabet)
            throw Error(Errc::AlphabetTooLarge, std::to_string(c.alphabet.size()) + " priorities");
        elems.assign(c.alphabet.begin(), c.alphabet.end());
        win.assign(std::size_t(1) << elems.size(), Player::One);
        for (const auto& x : c.f0) win[mask_of(x)] = Player::Zero;
    }

    Mask full() const { return static_cast<Mask>((std::size_t(1) << elems.size()) - 1); }

    Mask mask_of(const PrioritySet& x) const
    {
        Mask m = 0;
        for (const auto& p : x) {
            auto it = std::lower_bound(elems.begin(), elems.end(), p);
            if (it == elems.end() || *it != p) throw Error(Errc::OutOfAlphabet, to_string(p));
            m |= Mask(1) << (it - elems.begin());
        }
        return m;
    }

    PrioritySet set_of(Mask m) const
    {
        PrioritySet s;
        for (std::size_t i = 0; i < elems.size(); ++i)
            if (m >> i & 1) s.insert(elems[i]);
        return s;
    }
};

/// Maximal proper subsets of x owned by `side`.
std::vector<Mask>
maximal_subsets(const Table& t, Mask x, Player side)
{
    // above[y]: some z with y ⊊ z ⊆ x is owned by side. Submasks are visited
    // in decreasing numeric order, so every y | bit is done before y.
    std::vector<char> above(std::size_t(t.full()) + 1, 0);
    std::vector<Mask> out;
    for (Mask y = x;; y = (y - 1) & x) {
        bool up = false;
        for (Mask rest = x & ~y; rest && !up; rest &= rest - 1) {
            Mask z = y | (rest & (~rest + 1));
            up = above[z] || t.win[z] == side;
        }
        above[y] = up;
        if (y != x && !up && t.win[y] == side) out.push_back(y);
        if (y == 0) break;
    }
    return out;
}

} // namespace

ZielonkaTree
build_tree(const cond::ExplicitMuller& c)
{
    const Table t(c);
    ZielonkaTree tree;
    std::vector<Mask> masks;
    std::function<void(Mask, Player, std::size_t)> grow = [&](Mask x, Player p, std::size_t parent) {
        const auto id = tree.nodes.size();
        tree.nodes.push_back({t.set_of(x), p, parent, {}});
        masks.push_back(x);
        if (parent != SIZE_MAX) tree.nodes[parent].children.push_back(id);
        auto kids = maximal_subsets(t, x, opponent(p));
        std::vector<PrioritySet> labels;
        for (auto k : kids) labels.push_back(t.set_of(k));
        std::vector<std::size_t> order(kids.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
            return std::lexicographical_compare(labels[i].begin(), labels[i].end(), labels[j].begin(),
                                                labels[j].end());
        });
        for (auto i : order) grow(kids[i], opponent(p), id);
    };
    grow(t.full(), t.win[t.full()], SIZE_MAX);
    return tree;
}

bool
is_path_of_cofinite(const ZielonkaTree& t)
{
    return std::all_of(t.nodes.begin(), t.nodes.end(), [](const auto& n) { return n.children.size() <= 1; });
}

bool
is_path_of_cofinite(const cond::ZielonkaPath&)
{
    return true;
}

P0Verdict
check_p0(const cond::ExplicitMuller& c)
{
    const Table t(c);
    const Mask full = t.full();
    for (Player side : {Player::Zero, Player::One}) {
        std::optional<std::pair<Mask, Mask>> best;
        for (Mask u = 0;; ++u) {
            if (t.win[u] != side && u) {
                // u = x0 ∪ x1 with x0 ∩ x1 ≠ ∅: x1 = (u ∖ x0) ∪ s, ∅ ≠ s ⊆ x0.
                for (Mask x0 = u; x0; x0 = (x0 - 1) & u) {
                    if (t.win[x0] != side) continue;
                    for (Mask s = x0; s; s = (s - 1) & x0) {
                        Mask x1 = (u & ~x0) | s;
                        if (t.win[x1] != side) continue;
                        auto a = t.set_of(x0), b = t.set_of(x1);
                        auto pair = std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end())
                                        ? std::make_pair(x0, x1)
                                        : std::make_pair(x1, x0);
                        if (!best) best = pair;
                    }
                }
            }
            if (best) return {false, StrongSplit{side, t.set_of(best->first), t.set_of(best->second)}};
            if (u == full) break;
        }
    }
    return {true, std::nullopt};
}

namespace {

bool
subset(const InfSetDescriptor& a, const InfSetDescriptor& b)
{
    for (const auto& p : a.finite)
        if (!b.contains(p)) return false;
    if (!a.cofinite) return true;
    if (!b.cofinite) return false;
    for (const auto& n : b.excluded)
        if (a.contains(n) && !b.contains(n)) return false;
    return true;
}

InfSetDescriptor
naturals_above(std::uint64_t i, PrioritySet extra)
{
    PrioritySet ex;
    for (std::uint64_t n = 0; n <= i; ++n) ex.insert(n);
    return InfSetDescriptor::all_naturals_except(std::move(ex), std::move(extra));
}

ChainVerdict
pass(std::string reason)
{
    return {true, std::nullopt, std::move(reason)};
}

ChainVerdict
fail(const ConditionSpec& c, ChainWitness w, std::string reason)
{
    if (!validate_witness(c, w)) throw Error(Errc::Mismatch, "chain witness '" + w.description + "' does not check");
    return {false, std::move(w), std::move(reason)};
}

} // namespace

bool
validate_witness(const ConditionSpec& c, const ChainWitness& w)
{
    if (w.members.empty()) return false;
    for (std::size_t i = 0; i < w.members.size(); ++i) {
        if (member(c, w.members[i]) != w.chain_side) return false;
        if (i > 0) {
            const auto& small = w.descending ? w.members[i] : w.members[i - 1];
            const auto& big = w.descending ? w.members[i - 1] : w.members[i];
            if (!subset(small, big)) return false;
        }
        if (w.descending ? !subset(w.limit, w.members[i]) : !subset(w.members[i], w.limit)) return false;
    }
    if (w.descending && w.limit.empty()) return false;
    return member(c, w.limit) != w.chain_side;
}

ChainReport
check_chains(const ConditionSpec& c)
{
    const std::string finite = "finite alphabet: every chain is eventually constant";
    return std::visit(
        overloaded{
            [&](const cond::Infinity&) {
                return ChainReport{pass("F0 = {∅}, F1 closed under unions and non-empty intersections"),
                                   pass("F1 closed under unions")};
            },
            [&](const cond::MinParity&) {
                return ChainReport{pass("min of a descending chain's intersection is attained along the chain"),
                                   pass("the min of a union is the min of some member")};
            },
            [&](const cond::MaxParity&) {
                ChainWitness d{"X_i = {1} u {n : n > i}", true, Player::Zero, {}, InfSetDescriptor::of({1})};
                ChainWitness u{"X_i = {j : j <= 2i+1}", false, Player::One, {},
                               InfSetDescriptor::all_naturals_except({})};
                for (std::uint64_t i = 1; i <= kWitnessDepth; ++i) {
                    PrioritySet ex{0};
                    for (std::uint64_t n = 2; n <= i; ++n) ex.insert(n);
                    d.members.push_back(InfSetDescriptor::all_naturals_except(ex, {1}));
                    PrioritySet x;
                    for (std::uint64_t j = 0; j <= 2 * i + 1; ++j) x.insert(j);
                    u.members.push_back(InfSetDescriptor::of(x));
                }
                return ChainReport{fail(c, d, "infinite sets have no maximum and lie in F0; the intersection {1} is odd"),
                                   fail(c, u, "each X_i has odd maximum; the union is infinite")};
            },
            [&](const cond::OrdinalParity& o) {
                if (!(Priority::omega() < o.bound))
                    return ChainReport{pass("parity over an ordinal <= w"), pass("parity over an ordinal <= w")};
                ChainWitness d{"X_i = {w} u {n : 2i+1 <= n < w}", true, Player::One, {},
                               InfSetDescriptor::of({Priority::omega()})};
                for (std::uint64_t i = 1; i <= kWitnessDepth; ++i)
                    d.members.push_back(naturals_above(2 * i, {Priority::omega()}));
                return ChainReport{fail(c, d, "each X_i has odd minimum 2i+1; the intersection {w} is even"),
                                   pass("the min of a union is the min of some member")};
            },
            [&](const cond::ExplicitMuller&) { return ChainReport{pass(finite), pass(finite)}; },
            [&](const cond::ZielonkaPath&) {
                return ChainReport{pass("path of co-finite sets"), pass("path of co-finite sets")};
            },
            [&](const cond::SingletonLimit& s) {
                ChainWitness d{"X_i = {e} u {n in Y : n > i}", true, Player::One, {}, InfSetDescriptor::of({s.e})};
                for (std::uint64_t i = 1; i <= kWitnessDepth; ++i) d.members.push_back(naturals_above(i, {s.e}));
                return ChainReport{fail(c, d, "each X_i holds e and meets Y; the intersection is {e}"),
                                   pass("unions of subsets of Y stay in P(Y); unions in F1 stay in F1")};
            },
        },
        c);
}

namespace {

/// A finite window of the condition's alphabet for exhaustive P0 scans.
PrioritySet
p0_window(const ConditionSpec& c)
{
    PrioritySet w;
    for (std::uint64_t n = 0; n < 6; ++n) w.insert(n);
    std::visit(overloaded{
                   [&](const cond::OrdinalParity& o) {
                       PrioritySet keep;
                       for (const auto& p : w)
                           if (p < o.bound) keep.insert(p);
                       if (Priority::omega() < o.bound) keep.insert(Priority::omega());
                       if (Priority::omega(1) < o.bound) keep.insert(Priority::omega(1));
                       w = keep;
                   },
                   [&](const cond::ZielonkaPath& z) {
                       for (const auto& d : z.diffs) w.insert(d.begin(), d.end());
                   },
                   [&](const cond::SingletonLimit& s) {
                       w.insert(s.e);
                       w.insert(s.y_window.begin(), s.y_window.end());
                   },
                   [](const auto&) {},
               },
               c);
    while (w.size() > kMaxTreeAlphabet) w.erase(std::prev(w.end()));
    return w;
}

} // namespace

ClassificationReport
classify(const ConditionSpec& c)
{
    ClassificationReport r;
    if (auto m = std::get_if<cond::ExplicitMuller>(&c)) {
        r.p0 = check_p0(*m);
        r.path_shape = is_path_of_cofinite(build_tree(*m));
    } else {
        r.p0 = check_p0(materialize(c, p0_window(c)));
        r.path_shape = std::visit(overloaded{
                                      [](const cond::Infinity&) { return true; },
                                      [](const cond::MinParity&) { return true; },
                                      [](const cond::ZielonkaPath&) { return true; },
                                      [](const cond::OrdinalParity& o) { return !(Priority::omega() < o.bound); },
                                      [](const auto&) { return false; },
                                  },
                                  c);
    }
    auto chains = check_chains(c);
    r.p1 = std::move(chains.p1);
    r.p2 = std::move(chains.p2);
    return r;
}

std::uint64_t
Reduction::apply(const Priority& p) const
{
    if (auto it = f.find(p); it != f.end()) return it->second;
    if (tail == Tail::None || !p.is_natural()) throw Error(Errc::OutOfAlphabet, to_string(p));
    switch (tail) {
    case Tail::Identity:
        if (alpha && p.offset >= *alpha) throw Error(Errc::OutOfAlphabet, to_string(p));
        return p.offset;
    case Tail::Constant: return target;
    case Tail::OddEnumeration: {
        std::uint64_t below = 0;
        for (const auto& [q, v] : f)
            if (q.is_natural() && q < p) ++below;
        return target + 2 * (p.offset - below);
    }
    case Tail::None: break;
    }
    throw Error(Errc::OutOfAlphabet, to_string(p));
}

Player
Reduction::winner(const PrioritySet& x) const
{
    Player normalized = Player::Zero;
    if (!x.empty()) {
        std::uint64_t least = UINT64_MAX;
        for (const auto& p : x) least = std::min(least, apply(p));
        normalized = player_of_parity(least);
    }
    return role_swapped ? opponent(normalized) : normalized;
}

namespace {

/**
 * Z_0 ⊋ ... ⊋ Z_k given by diffs D_i = Z_i ∖ Z_{i+1}; Z_k is `last` when the
 * alphabet is finite, else the naturals outside every diff.
 */
Reduction
reduce_path(Player root, const std::vector<PrioritySet>& diffs, const std::optional<PrioritySet>& last,
            bool ends_with_empty)
{
    const auto k = diffs.size();
    auto player = [&](std::size_t i) { return (i & 1) ? opponent(root) : root; };
    const Player empty_owner = ends_with_empty ? player(k + 1) : player(k);

    Reduction r;
    r.role_swapped = empty_owner == Player::One;
    const Player root_normalized = r.role_swapped ? opponent(root) : root;
    const std::uint64_t s = root_normalized == Player::Zero ? 0 : 1;

    for (std::size_t i = 0; i < k; ++i)
        for (const auto& p : diffs[i]) r.f[p] = i + s;
    const std::uint64_t tail_index = k + s;
    if (!ends_with_empty) {
        if (last) {
            for (const auto& p : *last) r.f[p] = tail_index;
            r.tail = Reduction::Tail::None;
        } else {
            r.tail = Reduction::Tail::Constant;
            r.target = tail_index;
        }
        r.alpha = tail_index + 1;
        return r;
    }
    // The last co-finite node belongs to the normalized player 1: its
    // elements go injectively onto the odd values from k + s upwards.
    if (last) {
        std::uint64_t next = tail_index;
        for (const auto& p : *last) {
            r.f[p] = next;
            next += 2;
        }
        r.tail = Reduction::Tail::None;
        r.alpha = last->empty() ? tail_index : next - 1;
    } else {
        r.tail = Reduction::Tail::OddEnumeration;
        r.target = tail_index;
        r.alpha = std::nullopt;
    }
    return r;
}

} // namespace

Reduction
reduce_to_parity(const ConditionSpec& c)
{
    auto not_a_path = [&](const std::string& why) -> Reduction {
        throw Error(Errc::NotAPath, kind_name(c) + ": " + why);
    };
    return std::visit(
        overloaded{
            [&](const cond::Infinity&) { return reduce_path(Player::One, {}, std::nullopt, true); },
            [&](const cond::MinParity&) {
                Reduction r;
                r.tail = Reduction::Tail::Identity;
                return r;
            },
            [&](const cond::OrdinalParity& o) {
                if (Priority::omega() < o.bound) return not_a_path("fails closure under intersections of chains");
                Reduction r;
                r.tail = Reduction::Tail::Identity;
                if (o.bound.is_natural()) r.alpha = o.bound.offset;
                return r;
            },
            [&](const cond::MaxParity&) { return not_a_path("fails closure under intersections of chains"); },
            [&](const cond::SingletonLimit&) { return not_a_path("fails closure under intersections of chains"); },
            [&](const cond::ZielonkaPath& z) {
                check_condition(z);
                return reduce_path(z.root_player, z.diffs, std::nullopt, z.ends_with_empty);
            },
            [&](const cond::ExplicitMuller& m) {
                check_condition(m);
                auto tree = build_tree(m);
                if (!is_path_of_cofinite(tree)) return not_a_path("the Zielonka tree branches");
                std::vector<PrioritySet> diffs;
                std::size_t node = 0;
                bool ends_with_empty = false;
                while (!tree.nodes[node].children.empty()) {
                    const auto child = tree.nodes[node].children.front();
                    const auto& outer = tree.nodes[node].label;
                    const auto& inner = tree.nodes[child].label;
                    if (inner.empty()) {
                        ends_with_empty = true;
                        break;
                    }
                    PrioritySet d;
                    std::set_difference(outer.begin(), outer.end(), inner.begin(), inner.end(),
                                        std::inserter(d, d.end()));
                    diffs.push_back(std::move(d));
                    node = child;
                }
                return reduce_path(tree.root().player, diffs, tree.nodes[node].label, ends_with_empty);
            },
        },
        c);
}

ReductionReport
verify_reduction(const Reduction& r, const ConditionSpec& c, const std::vector<PrioritySet>& sets,
                 const std::vector<LassoSample>& lassos)
{
    ReductionReport rep;
    PrioritySet seen;
    for (const auto& x : sets) {
        const auto want = member(c, x);
        const auto got = r.winner(x);
        if (want != got)
            throw Error(Errc::Mismatch, to_string(x) + ": condition says player " + std::to_string(to_int(want)) +
                                            ", reduction says player " + std::to_string(to_int(got)));
        seen.insert(x.begin(), x.end());
        ++rep.sets_checked;
    }
    for (const auto& l : lassos) {
        const auto want = winner_of_lasso(c, *l.arena, l.lasso);
        const auto got = r.winner(l.lasso.inf_set(*l.arena));
        if (want != got) throw Error(Errc::Mismatch, "lasso with inf-set " + to_string(l.lasso.inf_set(*l.arena)));
        seen.merge(l.lasso.inf_set(*l.arena));
        ++rep.lassos_checked;
    }

    // f^-1(d) must be finite unless d is the even maximum; on the samples that
    // means: values outside the explicit map are hit at most once, except a
    // constant tail, which has to be even and on top.
    std::map<std::uint64_t, std::size_t> preimages;
    std::uint64_t top = 0;
    for (const auto& [p, v] : r.f) top = std::max(top, v);
    for (const auto& p : seen) {
        if (r.f.count(p)) continue;
        const auto v = r.apply(p);
        ++rep.preimage_checks;
        if (r.tail == Reduction::Tail::Constant) {
            if (v % 2 != 0 || v < top)
                throw Error(Errc::Mismatch, "constant tail " + std::to_string(v) + " is not the even maximum");
            continue;
        }
        if (r.tail == Reduction::Tail::Identity) continue;
        if (++preimages[v] > 1 || r.f.end() != std::find_if(r.f.begin(), r.f.end(), [&](const auto& e) {
                return e.second == v;
            }))
            throw Error(Errc::Mismatch, "value " + std::to_string(v) + " has several preimages");
    }
    return rep;
}

} // namespace omega

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

#include "omegagames/conditions.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "omegagames/error.hpp"

namespace omega {

template <class... Ts> struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

std::string
kind_name(const ConditionSpec& c)
{
    return std::visit(overloaded{
                          [](const cond::Infinity&) { return "infinity"; },
                          [](const cond::MinParity&) { return "min_parity"; },
                          [](const cond::MaxParity&) { return "max_parity"; },
                          [](const cond::OrdinalParity&) { return "ordinal_parity"; },
                          [](const cond::ExplicitMuller&) { return "explicit"; },
                          [](const cond::ZielonkaPath&) { return "zielonka_path"; },
                          [](const cond::SingletonLimit&) { return "singleton_limit"; },
                      },
                      c);
}

namespace {

Player
path_player(const cond::ZielonkaPath& z, std::size_t depth)
{
    return (depth & 1) ? opponent(z.root_player) : z.root_player;
}

void
check_path_alphabet(const cond::ZielonkaPath& z, const PrioritySet& x)
{
    for (const auto& p : x) {
        if (p.is_natural()) continue;
        bool listed = std::any_of(z.diffs.begin(), z.diffs.end(), [&](const PrioritySet& d) { return d.count(p); });
        if (!listed) throw Error(Errc::OutOfAlphabet, to_string(p) + " is outside the path's ambient set");
    }
}

/// Least natural outside `excluded`.
std::uint64_t
least_natural_outside(const PrioritySet& excluded)
{
    std::uint64_t n = 0;
    while (excluded.count(n)) ++n;
    return n;
}

Player
path_member(const cond::ZielonkaPath& z, const InfSetDescriptor& x)
{
    check_path_alphabet(z, x.finite);
    for (std::size_t j = 0; j < z.diffs.size(); ++j)
        for (const auto& p : z.diffs[j])
            if (x.contains(p)) return path_player(z, j);
    const auto k = z.diffs.size();
    if (x.empty() && z.ends_with_empty) return path_player(z, k + 1);
    return path_player(z, k);
}

void
check_ordinal_bound(const cond::OrdinalParity& o, const PrioritySet& x)
{
    for (const auto& p : x)
        if (!(p < o.bound)) throw Error(Errc::OutOfAlphabet, to_string(p) + " is not below " + to_string(o.bound));
}

} // namespace

Player
member(const ConditionSpec& c, const PrioritySet& x)
{
    return member(c, InfSetDescriptor::of(x));
}

Player
member(const ConditionSpec& c, const InfSetDescriptor& x)
{
    auto least = [&]() -> Priority {
        Priority m = x.cofinite ? Priority(least_natural_outside(x.excluded)) : *x.finite.begin();
        if (!x.finite.empty()) m = std::min(m, *x.finite.begin());
        return m;
    };
    return std::visit(
        overloaded{
            [&](const cond::Infinity&) { return x.empty() ? Player::Zero : Player::One; },
            [&](const cond::MinParity&) { return x.empty() ? Player::Zero : least().parity(); },
            [&](const cond::MaxParity&) {
                if (x.empty() || x.cofinite) return Player::Zero;
                return x.finite.rbegin()->parity();
            },
            [&](const cond::OrdinalParity& o) {
                check_ordinal_bound(o, x.finite);
                if (x.cofinite && !(Priority(0) < o.bound))
                    throw Error(Errc::OutOfAlphabet, "naturals are not below " + to_string(o.bound));
                return x.empty() ? Player::Zero : least().parity();
            },
            [&](const cond::ExplicitMuller& m) {
                if (x.cofinite) throw Error(Errc::OutOfAlphabet, "infinite set over a finite alphabet");
                PrioritySet outside;
                std::set_difference(x.finite.begin(), x.finite.end(), m.alphabet.begin(), m.alphabet.end(),
                                    std::inserter(outside, outside.end()));
                if (!outside.empty()) throw Error(Errc::OutOfAlphabet, to_string(outside));
                return std::find(m.f0.begin(), m.f0.end(), x.finite) != m.f0.end() ? Player::Zero : Player::One;
            },
            [&](const cond::ZielonkaPath& z) { return path_member(z, x); },
            [&](const cond::SingletonLimit& s) {
                if (!x.contains(s.e)) return Player::Zero;
                bool other = x.cofinite || x.finite.size() > 1;
                return other ? Player::One : Player::Zero;
            },
        },
        c);
}

Player
winner_of_lasso(const ConditionSpec& c, const Arena& a, const Lasso& l)
{
    return member(c, l.inf_set(a));
}

ScheduledVerdict
winner_of_scheduled(const ConditionSpec& c, const ScheduledPlay& p, std::uint64_t horizon)
{
    auto violated = [](std::uint64_t step, const Priority& pr, const std::string& why) {
        throw Error(Errc::CertificateViolated,
                    "step " + std::to_string(step) + ", priority " + to_string(pr) + ": " + why);
    };
    if (!p.step) throw Error(Errc::BadParams, "scheduled play without a step function");

    CertificateReport report;
    report.horizon = horizon;
    std::map<Priority, std::vector<std::uint64_t>> seen;
    std::map<Priority, std::uint64_t> stabilized;
    for (std::uint64_t i = 0; i < horizon; ++i) {
        const auto s = p.step(i);
        seen[s.priority].push_back(i);
        if (p.declared_inf_set.contains(s.priority)) continue;
        auto it = stabilized.find(s.priority);
        if (it == stabilized.end()) {
            auto b = p.stabilization ? p.stabilization(s.priority) : std::nullopt;
            if (!b) violated(i, s.priority, "occurs but is outside the declared inf-set and has no bound");
            it = stabilized.emplace(s.priority, *b).first;
            report.checks.push_back({BoundCheck::Kind::Stabilization, s.priority, 0, *b});
        }
        if (i >= it->second)
            violated(i, s.priority, "occurs after its stabilization bound " + std::to_string(it->second));
    }

    PrioritySet declared = p.declared_inf_set.finite;
    for (const auto& [pr, steps] : seen)
        if (p.declared_inf_set.contains(pr)) declared.insert(pr);
    for (const auto& pr : declared) {
        if (!p.deadline) violated(0, pr, "declared infinitely often but no deadlines given");
        const auto& steps = seen[pr];
        for (std::uint64_t k = 1;; ++k) {
            const auto t = p.deadline(pr, k);
            if (t > horizon) break;
            auto count = static_cast<std::uint64_t>(std::lower_bound(steps.begin(), steps.end(), t) - steps.begin());
            if (count < k)
                violated(t, pr,
                         "occurs " + std::to_string(count) + " times before T(" + std::to_string(k) +
                             ") = " + std::to_string(t));
            report.checks.push_back({BoundCheck::Kind::Deadline, pr, k, t});
        }
    }

    const auto winner = member(c, p.declared_inf_set);
    std::ostringstream out;
    out << "consistent up to T=" << horizon << ": " << report.checks.size() << " bounds checked, inf-set "
        << to_string(p.declared_inf_set) << ", winner player " << to_int(winner);
    report.summary = out.str();
    return {winner, std::move(report)};
}

cond::ExplicitMuller
materialize(const ConditionSpec& c, const PrioritySet& alphabet)
{
    if (alphabet.size() > 16) throw Error(Errc::AlphabetTooLarge, std::to_string(alphabet.size()) + " priorities");
    std::vector<Priority> elems(alphabet.begin(), alphabet.end());
    cond::ExplicitMuller m;
    m.alphabet = alphabet;
    for (std::uint32_t mask = 0; mask < (1u << elems.size()); ++mask) {
        PrioritySet x;
        for (std::size_t i = 0; i < elems.size(); ++i)
            if (mask >> i & 1) x.insert(elems[i]);
        if (member(c, x) == Player::Zero) m.f0.push_back(std::move(x));
    }
    return m;
}

void
check_condition(const ConditionSpec& c)
{
    std::visit(overloaded{
                   [](const cond::Infinity&) {},
                   [](const cond::MinParity&) {},
                   [](const cond::MaxParity&) {},
                   [](const cond::OrdinalParity& o) {
                       if (o.bound == Priority(0)) throw Error(Errc::BadParams, "ordinal bound must be positive");
                   },
                   [](const cond::ExplicitMuller& m) {
                       for (const auto& x : m.f0)
                           if (!std::includes(m.alphabet.begin(), m.alphabet.end(), x.begin(), x.end()))
                               throw Error(Errc::BadParams, "F0 set " + to_string(x) + " is not inside C");
                   },
                   [](const cond::ZielonkaPath& z) {
                       PrioritySet used;
                       for (const auto& d : z.diffs) {
                           if (d.empty()) throw Error(Errc::BadParams, "empty diff in path spec");
                           for (const auto& p : d)
                               if (!used.insert(p).second)
                                   throw Error(Errc::BadParams, "priority " + to_string(p) + " in two diffs");
                       }
                   },
                   [](const cond::SingletonLimit& s) {
                       if (s.y_window.count(s.e)) throw Error(Errc::BadParams, "e must not lie in Y");
                   },
               },
               c);
}

} // namespace omega

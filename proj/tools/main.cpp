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

// omegagames command-line driver.
//
// Exit codes: 0 success, 1 usage or input error, 2 failed verification,
// 3 a strategy survived a refutation run.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include "omegagames/counterexamples.hpp"
#include "omegagames/error.hpp"
#include "omegagames/io.hpp"
#include "omegagames/positionalize.hpp"
#include "omegagames/random.hpp"
#include "omegagames/solvers.hpp"
#include "omegagames/zielonka.hpp"

using namespace omega;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kVerificationFailed = 2;
constexpr int kSurvivor = 3;

struct ExitCode
{
    int code;
    std::string message;
};

Arena
load_arena(const std::string& path)
{
    return io::parse_arena_any(io::read_file(path));
}

ConditionSpec
load_condition(const std::string& path)
{
    if (path.empty()) return cond::MinParity{};
    return io::parse_condition_json(io::read_file(path));
}

std::optional<Player>
player_arg(int p)
{
    if (p < 0) return std::nullopt;
    if (p > 1) throw Error(Errc::BadParams, "--player must be 0 or 1");
    return p == 0 ? Player::Zero : Player::One;
}

VertexMask
region_arg(const Arena& a, const std::vector<std::string>& ids, bool default_all)
{
    VertexMask m(a.size(), ids.empty() && default_all);
    for (const auto& id : ids) m[a.index_of(id)] = true;
    return m;
}

/// Min-parity priorities for the parity-type kinds, or nullopt for the Muller kinds.
std::optional<Arena>
parity_game(const Arena& a, const ConditionSpec& c)
{
    if (std::holds_alternative<cond::MinParity>(c)) return a;
    if (auto o = std::get_if<cond::OrdinalParity>(&c)) {
        for (const auto& p : a.priorities())
            if (!(p < o->bound)) throw Error(Errc::OutOfAlphabet, to_string(p) + " is not below " + to_string(o->bound));
        return a;
    }
    if (!std::holds_alternative<cond::MaxParity>(c) && !std::holds_alternative<cond::Infinity>(c)) return std::nullopt;
    auto rel = parity_relabeling(c, a);
    if (!rel) return std::nullopt;
    std::vector<Priority> pr(a.size());
    for (VertexIndex v = 0; v < a.size(); ++v) pr[v] = rel->priority[v] + (rel->role_swapped ? 1 : 0);
    return relabel(a, pr);
}

void
guard(const Verdict& v, const std::string& what)
{
    if (!v.pass) throw ExitCode{kVerificationFailed, what + " failed its self-check: " + v.detail};
}

void
check_regions(const Arena& a, const ConditionSpec& c, const SolveResult& r)
{
    for (VertexIndex v = 0; v < a.size(); ++v)
        if (r.w0[v] == r.w1[v]) throw ExitCode{kVerificationFailed, "regions do not partition the arena at " + a.id(v)};
    try {
        guard(verify_positional(a, c, r.strat0, r.w0), "player 0 strategy");
        guard(verify_positional(a, c, r.strat1, r.w1), "player 1 strategy");
    } catch (const Error& e) {
        if (e.code() != Errc::TooLargeForMullerCheck) throw;
        std::cerr << "note: strategies not re-verified: " << e.what() << "\n";
    }
}

int
run_solve(const std::string& arena_path, const std::string& cond_path, const std::string& algo, const std::string& route)
{
    const auto text = io::read_file(arena_path);
    std::optional<io::PgsolverMeta> meta;
    Arena a;
    if (io::looks_like_json(text)) {
        a = io::parse_arena_json(text);
    } else {
        auto p = io::parse_pgsolver(text);
        a = std::move(p.arena);
        meta = p.meta;
    }
    const auto c = load_condition(cond_path);
    auto emit = [&](json out) {
        if (meta) out["pgsolver"] = {{"header", meta->header}, {"reflection", meta->reflection}};
        std::cout << out.dump(2) << "\n";
    };
    if (auto g = parity_game(a, c)) {
        SolveResult r;
        if (algo == "spm") {
            r = solve_parity_spm(*g).result;
        } else {
            r = solve_parity_recursive(*g);
            if (algo == "both" && solve_parity_spm(*g).result.w0 != r.w0)
                throw ExitCode{kVerificationFailed, "recursive and progress-measure regions differ"};
        }
        check_regions(a, c, r);
        emit(json::parse(io::write_solve_result_json(a, r)));
        return kOk;
    }
    const auto mr = solve_muller(a, c, route == "path" ? MullerRoute::Path
                                       : route == "lar" ? MullerRoute::Lar
                                                        : MullerRoute::Automatic);
    SolveResult r{mr.w0, mr.w1, PositionalStrategy(Player::Zero, a.size()), PositionalStrategy(Player::One, a.size())};
    if (mr.route == MullerSolveResult::Route::Path) {
        r.strat0 = *mr.positional0;
        r.strat1 = *mr.positional1;
        check_regions(a, c, r);
        emit(json::parse(io::write_solve_result_json(a, r)));
        return kOk;
    }
    guard(verify_memory(a, c, *mr.memory0, mr.w0), "player 0 memory strategy");
    guard(verify_memory(a, c, *mr.memory1, mr.w1), "player 1 memory strategy");
    auto out = json::parse(io::write_solve_result_json(a, r));
    out["strat0"] = json::parse(io::write_memory_strategy_json(a, *mr.memory0));
    out["strat1"] = json::parse(io::write_memory_strategy_json(a, *mr.memory1));
    emit(out);
    return kOk;
}

int
run_verify(const std::string& arena_path, const std::string& cond_path, const std::string& strategy_path, int player,
           const std::vector<std::string>& from)
{
    const auto a = load_arena(arena_path);
    const auto c = load_condition(cond_path);
    const auto text = io::read_file(strategy_path);
    const auto j = json::parse(text);
    const auto region = region_arg(a, from, true);
    Verdict v;
    if (j.contains("memory"))
        v = verify_memory(a, c, io::parse_memory_strategy_json(text, a, player_arg(player)), region);
    else
        v = verify_positional(a, c, io::parse_positional_json(text, a, player_arg(player)), region);
    json w = json::array();
    for (auto x : v.witness) w.push_back(a.id(x));
    std::cout << json{{"pass", v.pass}, {"detail", v.detail}, {"witness", w}}.dump(2) << "\n";
    return v.pass ? kOk : kVerificationFailed;
}

int
run_positionalize(const std::string& arena_path, const std::string& cond_path, const std::string& strategy_path,
                  int player, const std::vector<std::string>& from)
{
    const auto a = load_arena(arena_path);
    const auto c = load_condition(cond_path);
    const auto s = io::parse_memory_strategy_json(io::read_file(strategy_path), a, player_arg(player));
    const auto region = from.empty() ? winning_region_of(a, c, s) : region_arg(a, from, false);
    const auto out = positionalize(a, c, s, region);
    guard(verify_positional(a, c, out.strategy, region), "positionalized strategy");
    std::cout << io::write_positional_json(a, out.strategy);
    return kOk;
}

StageTable
stage_table(const Arena& a, const std::string& kind, std::uint64_t n)
{
    VertexMask p(a.size()), q(a.size());
    for (VertexIndex v = 0; v < a.size(); ++v) {
        p[v] = a.priority(v) == Priority(n);
        q[v] = a.priority(v) < Priority(n);
    }
    if (kind == "alpha") return compute_alpha(a.successor_lists(), p);
    return compute_beta(a.successor_lists(), p, q);
}

int
run_stages(const std::string& arena_path, const std::string& strategy_path, int player, const std::string& kind,
           std::uint64_t n)
{
    auto a = load_arena(arena_path);
    if (!strategy_path.empty()) {
        const auto s = io::parse_memory_strategy_json(io::read_file(strategy_path), a, player_arg(player));
        a = product_with_memory(a, s).arena;
    }
    std::cout << io::write_stages_csv(a, stage_table(a, kind, n));
    return kOk;
}

int
run_export_dot(const std::string& arena_path, const std::string& cond_path, bool solve, const std::string& strategy_path,
               int player, const std::string& stages, std::uint64_t n)
{
    const auto a = load_arena(arena_path);
    io::DotOverlay o;
    if (solve) {
        const auto c = load_condition(cond_path);
        if (auto g = parity_game(a, c)) {
            o = io::overlay_of(a, solve_parity_recursive(*g));
        } else {
            auto mr = solve_muller(a, c);
            SolveResult r{mr.w0, mr.w1, mr.positional0.value_or(PositionalStrategy(Player::Zero, a.size())),
                          mr.positional1.value_or(PositionalStrategy(Player::One, a.size()))};
            o = io::overlay_of(a, r);
        }
    }
    if (!strategy_path.empty()) {
        o.strategy.clear();
        auto s = io::parse_positional_json(io::read_file(strategy_path), a, player_arg(player));
        for (VertexIndex v = 0; v < a.size(); ++v)
            if (s.defined(v)) o.strategy[a.id(v)] = a.id(s.moves[v]);
    }
    if (!stages.empty()) {
        auto t = stage_table(a, stages, n);
        for (VertexIndex v = 0; v < a.size(); ++v)
            o.labels[a.id(v)] = t.value[v] ? std::to_string(*t.value[v]) : "inf";
    }
    std::cout << io::export_dot(a, o);
    return kOk;
}

const std::vector<std::string> kFamilies{"flower",      "flower-ordinal", "chain-max", "chain-ordinal", "chain-finite",
                                         "split",       "union-chain",    "ladder"};

Gadget
gadget(const std::string& family, std::size_t n)
{
    if (family == "flower") return gen_flower(n);
    if (family == "flower-ordinal") return gen_flower(n, FlowerVariant::Ordinal);
    if (family == "chain-max") return gen_chain_game(ChainDescriptor::max_parity(), n);
    if (family == "chain-ordinal") return gen_chain_game(ChainDescriptor::ordinal(), n);
    if (family == "chain-finite") return gen_chain_game(ChainDescriptor::max_parity(), n, true);
    if (family == "split") return split_game_strong_split();
    if (family == "union-chain") return gen_union_chain(n);
    if (family == "ladder") return gen_ladder(n);
    throw Error(Errc::UnknownFamily, family);
}

std::optional<ScheduledPlay>
schedule_for(const std::string& family)
{
    if (family == "flower") return flower_schedule(FlowerVariant::MaxParity);
    if (family == "flower-ordinal") return flower_schedule(FlowerVariant::Ordinal);
    if (family == "chain-max" || family == "chain-finite") return chain_schedule(ChainDescriptor::max_parity());
    if (family == "chain-ordinal") return chain_schedule(ChainDescriptor::ordinal());
    if (family == "ladder") return ladder_schedule();
    return std::nullopt;
}

int
run_demo(const std::string& family, std::size_t n, std::size_t memory, std::uint64_t horizon, std::size_t budget,
         bool exhaustive)
{
    const auto g = gadget(family, n);
    RefutationOptions o;
    o.memory_bound = memory;
    o.budget = budget;
    o.seed = seed_from_env(1);
    o.require_exhaustive = exhaustive;
    const auto r = refute_finite_memory(g, o);
    std::cout << format_report(r);

    bool certified = true;
    if (auto s = schedule_for(family)) {
        try {
            auto v = winner_of_scheduled(g.condition, *s, horizon);
            const bool wins = v.winner == g.sigma;
            certified = wins;
            std::cout << "  schedule: " << s->description << "\n  certificate: " << v.report.summary
                      << (wins ? "" : " (expected player " + std::to_string(to_int(g.sigma)) + ")") << "\n";
        } catch (const Error& e) {
            certified = false;
            std::cout << "  certificate: FAILED " << e.what() << "\n";
        }
    } else if (family == "split") {
        auto m = solve_muller(g.arena, g.condition);
        const bool wins = m.region(g.sigma)[g.arena.index_of(g.start)];
        const auto& ms = g.sigma == Player::Zero ? m.memory0 : m.memory1;
        certified = wins && ms && verify_memory(g.arena, g.condition, *ms, m.region(g.sigma)).pass;
        std::cout << "  latest-appearance-record strategy for player " << to_int(g.sigma)
                  << (certified ? " wins from " : " does not win from ") << g.start << " with " << (ms ? ms->memory_size() : 0)
                  << " memory states\n";
    }
    if (!r.ok()) return kSurvivor;
    return certified ? kOk : kVerificationFailed;
}

int
run_generate(const std::string& family, std::size_t n, const std::string& format, std::uint64_t seed)
{
    Arena a;
    if (family == "random") {
        Rng rng(seed);
        a = random_arena(rng, {std::max<std::size_t>(n, 1), std::max<std::size_t>(n, 1), 7, 3});
    } else {
        a = gadget(family, n).arena;
    }
    std::cout << (format == "pgsolver" ? io::write_pgsolver(a) : io::write_arena_json(a));
    return kOk;
}

int
run_convert(const std::string& arena_path, const std::string& to)
{
    const auto text = io::read_file(arena_path);
    if (to == "json") {
        std::cout << io::write_arena_json(io::parse_arena_any(text));
    } else if (io::looks_like_json(text)) {
        std::cout << io::write_pgsolver(io::parse_arena_json(text));
    } else {
        auto p = io::parse_pgsolver(text);
        std::cout << io::write_pgsolver(p.arena, &p.meta);
    }
    return kOk;
}

bool
is_input_error(Errc c)
{
    switch (c) {
    case Errc::InputStrategyNotWinning:
    case Errc::CertificateViolated:
    case Errc::Mismatch: return false;
    default: return true;
    }
}

} // namespace

int
main(int argc, char** argv)
{
    CLI::App app{"Infinite games on finite arenas: parity and Muller solvers, positionality tools, counterexample gadgets"};
    app.require_subcommand(1);

    std::string arena, condition, strategy, algo = "recursive", route = "auto", kind = "beta", family, format = "json",
                                            stages, to = "json";
    int player = -1;
    std::uint64_t priority = 1, horizon = 1000, seed = 1;
    std::size_t n = 3, memory = 1, budget = 10000;
    bool exhaustive = false, solve = false;
    std::vector<std::string> from;

    auto* solve_cmd = app.add_subcommand("solve", "Winning regions and strategies");
    solve_cmd->add_option("--arena", arena, "Arena file (JSON or PGSolver)")->required();
    solve_cmd->add_option("--condition", condition, "Condition JSON (default min-parity)");
    solve_cmd->add_option("--algo", algo, "Parity solver")->check(CLI::IsMember({"recursive", "spm", "both"}));
    solve_cmd->add_option("--route", route, "Muller route")->check(CLI::IsMember({"auto", "path", "lar"}));

    auto* verify_cmd = app.add_subcommand("verify", "Check that a strategy wins from a set of vertices");
    verify_cmd->add_option("--arena", arena)->required();
    verify_cmd->add_option("--condition", condition);
    verify_cmd->add_option("--strategy", strategy, "Positional or memory strategy JSON")->required();
    verify_cmd->add_option("--player", player);
    verify_cmd->add_option("--from", from, "Vertices to win from (default all)")->delimiter(',');

    auto* reduce_cmd = app.add_subcommand("reduce", "Parity reduction of a path-shaped condition");
    reduce_cmd->add_option("--condition", condition)->required();

    auto* classify_cmd = app.add_subcommand("classify", "P0/P1/P2 verdicts and path shape");
    classify_cmd->add_option("--condition", condition)->required();

    auto* pos_cmd = app.add_subcommand("positionalize", "Positional strategy from a winning memory strategy");
    pos_cmd->add_option("--arena", arena)->required();
    pos_cmd->add_option("--condition", condition);
    pos_cmd->add_option("--strategy", strategy)->required();
    pos_cmd->add_option("--player", player);
    pos_cmd->add_option("--from", from, "Region (default: where the strategy wins)")->delimiter(',');

    auto* stages_cmd = app.add_subcommand("stages", "Stage values as CSV");
    stages_cmd->add_option("--arena", arena)->required();
    stages_cmd->add_option("--priority", priority)->required();
    stages_cmd->add_option("--kind", kind)->check(CLI::IsMember({"alpha", "beta"}));
    stages_cmd->add_option("--strategy", strategy, "Take the stages on this strategy's product");
    stages_cmd->add_option("--player", player);

    auto* demo_cmd = app.add_subcommand("demo", "Refute small-memory strategies on a gadget");
    demo_cmd->add_option("family", family)->required()->check(CLI::IsMember(kFamilies));
    demo_cmd->add_option("--n", n, "Truncation");
    demo_cmd->add_option("--memory", memory, "Memory bound");
    demo_cmd->add_option("--horizon", horizon, "Certificate horizon");
    demo_cmd->add_option("--budget", budget, "Machines to enumerate or sample");
    demo_cmd->add_flag("--exhaustive", exhaustive, "Fail instead of sampling");

    auto* dot_cmd = app.add_subcommand("export-dot", "Graphviz rendering");
    dot_cmd->add_option("--arena", arena)->required();
    dot_cmd->add_option("--condition", condition);
    dot_cmd->add_flag("--solve", solve, "Color the winning regions, bold the strategies");
    dot_cmd->add_option("--strategy", strategy, "Positional strategy to draw in bold");
    dot_cmd->add_option("--player", player);
    dot_cmd->add_option("--stages", stages, "Label vertices with stage values")->check(CLI::IsMember({"alpha", "beta"}));
    dot_cmd->add_option("--priority", priority);

    auto* gen_cmd = app.add_subcommand("generate", "Write a gadget or random arena");
    auto families = kFamilies;
    families.push_back("random");
    gen_cmd->add_option("family", family)->required()->check(CLI::IsMember(families));
    gen_cmd->add_option("--n", n);
    gen_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "pgsolver"}));
    gen_cmd->add_option("--seed", seed);

    auto* conv_cmd = app.add_subcommand("convert", "Rewrite an arena in canonical form");
    conv_cmd->add_option("--arena", arena)->required();
    conv_cmd->add_option("--to", to)->check(CLI::IsMember({"json", "pgsolver"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kInputError;
    }

    try {
        if (*solve_cmd) return run_solve(arena, condition, algo, route);
        if (*verify_cmd) return run_verify(arena, condition, strategy, player, from);
        if (*reduce_cmd) {
            std::cout << io::write_reduction_json(reduce_to_parity(load_condition(condition)));
            return kOk;
        }
        if (*classify_cmd) {
            std::cout << io::write_classification_json(classify(load_condition(condition)));
            return kOk;
        }
        if (*pos_cmd) return run_positionalize(arena, condition, strategy, player, from);
        if (*stages_cmd) return run_stages(arena, strategy, player, kind, priority);
        if (*demo_cmd) return run_demo(family, n, memory, horizon, budget, exhaustive);
        if (*dot_cmd) return run_export_dot(arena, condition, solve, strategy, player, stages, priority);
        if (*gen_cmd) return run_generate(family, n, format, seed);
        if (*conv_cmd) return run_convert(arena, to);
    } catch (const ExitCode& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return is_input_error(e.code()) ? kInputError : kVerificationFailed;
    } catch (const json::exception& e) {
        std::cerr << "error: ParseError: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}

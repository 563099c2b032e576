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

#include "omegagames/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>
#include <sstream>

#include <json.hpp>

#include "omegagames/error.hpp"

namespace omega::io {

using nlohmann::json;

namespace {

[[noreturn]] void
parse_fail(std::size_t line, const std::string& msg)
{
    throw Error(Errc::ParseError, "line " + std::to_string(line) + ": " + msg);
}

[[noreturn]] void
parse_fail(const std::string& msg)
{
    throw Error(Errc::ParseError, msg);
}

std::string
dump(const json& j)
{
    return j.dump(2) + "\n";
}

json
parse_json(std::string_view text)
{
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const auto upto = std::min<std::size_t>(e.byte, text.size());
        const auto line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + upto, '\n'));
        parse_fail(line, e.what());
    }
}

const json&
field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing \"") + key + "\"");
    return j.at(key);
}

std::uint64_t
natural(const json& j, const char* what)
{
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
        parse_fail(std::string(what) + " must be a non-negative integer");
    return j.get<std::uint64_t>();
}

const std::string&
text_of(const json& j, const char* what)
{
    if (!j.is_string()) parse_fail(std::string(what) + " must be a string");
    return j.get_ref<const std::string&>();
}

Player
player_of(const json& j, const char* what)
{
    if (!j.is_number_integer() || (j.get<std::int64_t>() != 0 && j.get<std::int64_t>() != 1))
        parse_fail(std::string(what) + " must be 0 or 1, got " + j.dump());
    return j.get<int>() == 0 ? Player::Zero : Player::One;
}

Priority
priority_of(const json& j)
{
    if (j.is_object()) {
        std::uint64_t limit = j.contains("limit") ? natural(j.at("limit"), "limit") : 0;
        if (limit > UINT32_MAX) parse_fail("limit out of range");
        return Priority(static_cast<std::uint32_t>(limit), natural(field(j, "offset"), "offset"));
    }
    return Priority(natural(j, "priority"));
}

json
priority_json(const Priority& p)
{
    return json{{"limit", p.limit}, {"offset", p.offset}};
}

/// Naturals as plain numbers inside sets; the rest as objects.
json
element_json(const Priority& p)
{
    return p.is_natural() ? json(p.offset) : priority_json(p);
}

PrioritySet
set_of(const json& j)
{
    if (!j.is_array()) parse_fail("expected an array of priorities");
    PrioritySet s;
    for (const auto& x : j) s.insert(priority_of(x));
    return s;
}

json
set_json(const PrioritySet& s)
{
    json out = json::array();
    for (const auto& p : s) out.push_back(element_json(p));
    return out;
}

json
ids_of(const Arena& a, const VertexMask& m)
{
    std::vector<std::string> ids;
    for (VertexIndex v = 0; v < a.size(); ++v)
        if (v < m.size() && m[v]) ids.push_back(a.id(v));
    std::sort(ids.begin(), ids.end());
    return ids;
}

json
moves_of(const Arena& a, const PositionalStrategy& s)
{
    json out = json::object();
    for (VertexIndex v = 0; v < a.size(); ++v)
        if (s.defined(v)) out[a.id(v)] = a.id(s.moves[v]);
    return out;
}

VertexIndex
vertex_of(const Arena& a, const json& j)
{
    const auto& id = text_of(j, "vertex");
    auto v = a.find(id);
    if (!v) parse_fail("unknown vertex \"" + id + "\"");
    return *v;
}

} // namespace

std::string
read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::ParseError, "cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Arena
parse_arena_json(std::string_view text)
{
    auto j = parse_json(text);
    RawArena raw;
    const auto& vs = field(j, "vertices");
    if (!vs.is_array()) parse_fail("\"vertices\" must be an array");
    for (const auto& v : vs)
        raw.vertices.push_back({text_of(field(v, "id"), "id"), to_int(player_of(field(v, "owner"), "owner")),
                                priority_of(field(v, "priority"))});
    const auto& es = field(j, "edges");
    if (!es.is_array()) parse_fail("\"edges\" must be an array");
    for (const auto& e : es) {
        if (!e.is_array() || e.size() != 2) parse_fail("an edge is a pair [from, to]");
        raw.edges.emplace_back(text_of(e[0], "edge source"), text_of(e[1], "edge target"));
    }
    return validate_arena(raw);
}

std::string
write_arena_json(const Arena& a)
{
    json vs = json::array();
    json es = json::array();
    for (auto v : a.by_id()) {
        vs.push_back({{"id", a.id(v)}, {"owner", to_int(a.owner(v))}, {"priority", priority_json(a.priority(v))}});
        std::vector<std::string> out;
        for (auto w : a.successors(v)) out.push_back(a.id(w));
        std::sort(out.begin(), out.end());
        for (auto& w : out) es.push_back({a.id(v), w});
    }
    return dump({{"vertices", vs}, {"edges", es}});
}

PgsolverArena
parse_pgsolver(std::string_view text)
{
    struct Statement
    {
        std::size_t line;
        std::string body;
    };
    std::vector<Statement> stmts;
    std::size_t line = 1;
    Statement cur{0, {}};
    for (char ch : text) {
        if (ch == ';') {
            stmts.push_back(cur);
            cur = {0, {}};
        } else {
            if (!cur.line && !std::isspace(static_cast<unsigned char>(ch))) cur.line = line;
            cur.body.push_back(ch);
        }
        if (ch == '\n') ++line;
    }
    if (cur.line) parse_fail(cur.line, "statement without terminating ';'");

    PgsolverArena out;
    RawArena raw;
    bool header = false;
    std::vector<std::pair<std::string, std::uint64_t>> prio;
    std::vector<std::pair<std::string, int>> owner;
    std::uint64_t maxp = 0;
    for (const auto& st : stmts) {
        if (!st.line) continue;
        std::istringstream in(st.body);
        std::string first;
        in >> first;
        if (first == "parity" || first == "start") {
            std::string n;
            in >> n;
            if (n.empty() || !std::all_of(n.begin(), n.end(), ::isdigit)) parse_fail(st.line, "bad header");
            if (first == "parity") {
                if (header || !prio.empty()) parse_fail(st.line, "unexpected header");
                out.meta.header = std::stoull(n);
                header = true;
            }
            continue;
        }
        if (!header) parse_fail(st.line, "missing \"parity N;\" header");
        std::string p, o, succ;
        in >> p >> o >> succ;
        auto numeric = [](const std::string& s) {
            return !s.empty() && s.size() < 19 && std::all_of(s.begin(), s.end(), ::isdigit);
        };
        if (!numeric(first)) parse_fail(st.line, "bad vertex id \"" + first + "\"");
        if (!numeric(p)) parse_fail(st.line, "bad priority \"" + p + "\"");
        if (o != "0" && o != "1") parse_fail(st.line, "owner must be 0 or 1, got \"" + o + "\"");
        if (succ.empty()) parse_fail(st.line, "missing successors");
        const auto id = std::to_string(std::stoull(first));
        std::stringstream ss(succ);
        for (std::string w; std::getline(ss, w, ',');) {
            if (!numeric(w)) parse_fail(st.line, "bad successor \"" + w + "\"");
            raw.edges.emplace_back(id, std::to_string(std::stoull(w)));
        }
        const std::string rest{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
        auto b = rest.find_first_not_of(" \t\r\n");
        if (b != std::string::npos) {
            auto e = rest.find_last_not_of(" \t\r\n");
            auto name = rest.substr(b, e - b + 1);
            if (name.size() < 2 || name.front() != '"' || name.back() != '"')
                parse_fail(st.line, "names must be quoted");
            out.meta.names[id] = name.substr(1, name.size() - 2);
        }
        const std::uint64_t pv = std::stoull(p);
        maxp = std::max(maxp, pv);
        prio.emplace_back(id, pv);
        owner.emplace_back(id, o == "0" ? 0 : 1);
    }
    if (!header) parse_fail(line, "missing \"parity N;\" header");
    out.meta.reflection = maxp + (maxp & 1);
    for (std::size_t i = 0; i < prio.size(); ++i)
        raw.vertices.push_back({prio[i].first, owner[i].second, Priority(out.meta.reflection - prio[i].second)});
    out.arena = validate_arena(raw);
    return out;
}

std::string
write_pgsolver(const Arena& a, const PgsolverMeta* meta)
{
    std::uint64_t maxp = 0;
    for (VertexIndex v = 0; v < a.size(); ++v) {
        if (!a.priority(v).is_natural())
            throw Error(Errc::BadParams, "PGSolver cannot express priority " + to_string(a.priority(v)));
        maxp = std::max(maxp, a.priority(v).offset);
    }
    auto reflection = maxp + (maxp & 1);
    if (meta && meta->reflection >= maxp && meta->reflection % 2 == 0) reflection = meta->reflection;

    std::vector<VertexIndex> order = a.by_id();
    const bool numeric = std::all_of(order.begin(), order.end(), [&](VertexIndex v) {
        const auto& id = a.id(v);
        return !id.empty() && id.size() < 19 && std::all_of(id.begin(), id.end(), ::isdigit) &&
               std::to_string(std::stoull(id)) == id;
    });
    std::vector<std::uint64_t> num(a.size());
    if (numeric) {
        for (VertexIndex v = 0; v < a.size(); ++v) num[v] = std::stoull(a.id(v));
        std::sort(order.begin(), order.end(), [&](auto x, auto y) { return num[x] < num[y]; });
    } else {
        for (std::size_t i = 0; i < order.size(); ++i) num[order[i]] = i;
    }
    std::uint64_t header = 0;
    for (auto v : order) header = std::max(header, num[v]);
    if (meta && numeric) header = std::max(header, meta->header);

    std::ostringstream out;
    out << "parity " << header << ";\n";
    for (auto v : order) {
        out << num[v] << ' ' << reflection - a.priority(v).offset << ' ' << to_int(a.owner(v)) << ' ';
        std::vector<std::uint64_t> succ;
        for (auto w : a.successors(v)) succ.push_back(num[w]);
        std::sort(succ.begin(), succ.end());
        for (std::size_t i = 0; i < succ.size(); ++i) out << (i ? "," : "") << succ[i];
        std::string name;
        if (!numeric)
            name = a.id(v);
        else if (meta && meta->names.count(a.id(v)))
            name = meta->names.at(a.id(v));
        if (!name.empty()) out << " \"" << name << '"';
        out << ";\n";
    }
    return out.str();
}

bool
looks_like_json(std::string_view text)
{
    auto i = text.find_first_not_of(" \t\r\n");
    return i != std::string_view::npos && text[i] == '{';
}

Arena
parse_arena_any(std::string_view text)
{
    return looks_like_json(text) ? parse_arena_json(text) : parse_pgsolver(text).arena;
}

ConditionSpec
parse_condition_json(std::string_view text)
{
    auto j = parse_json(text);
    const auto& kind = text_of(field(j, "kind"), "kind");
    ConditionSpec c;
    if (kind == "min_parity")
        c = cond::MinParity{};
    else if (kind == "max_parity")
        c = cond::MaxParity{};
    else if (kind == "infinity")
        c = cond::Infinity{};
    else if (kind == "ordinal_parity")
        c = cond::OrdinalParity{priority_of(j)};
    else if (kind == "explicit") {
        cond::ExplicitMuller m;
        m.alphabet = set_of(field(j, "C"));
        const auto& f0 = field(j, "F0");
        if (!f0.is_array()) parse_fail("\"F0\" must be an array of sets");
        for (const auto& s : f0) m.f0.push_back(set_of(s));
        c = m;
    } else if (kind == "zielonka_path") {
        cond::ZielonkaPath p;
        p.root_player = player_of(field(j, "root_player"), "root_player");
        const auto& d = field(j, "diffs");
        if (!d.is_array()) parse_fail("\"diffs\" must be an array of sets");
        for (const auto& s : d) p.diffs.push_back(set_of(s));
        const auto& e = field(j, "ends_with_empty");
        if (!e.is_boolean()) parse_fail("\"ends_with_empty\" must be a boolean");
        p.ends_with_empty = e.get<bool>();
        c = p;
    } else if (kind == "singleton_limit") {
        c = cond::SingletonLimit{set_of(field(j, "Y_window")), priority_of(field(j, "e"))};
    } else {
        parse_fail("unknown condition kind \"" + kind + "\"");
    }
    check_condition(c);
    return c;
}

std::string
write_condition_json(const ConditionSpec& c)
{
    json j = std::visit(
        [](const auto& x) -> json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, cond::MinParity>)
                return {{"kind", "min_parity"}};
            else if constexpr (std::is_same_v<T, cond::MaxParity>)
                return {{"kind", "max_parity"}};
            else if constexpr (std::is_same_v<T, cond::Infinity>)
                return {{"kind", "infinity"}};
            else if constexpr (std::is_same_v<T, cond::OrdinalParity>)
                return {{"kind", "ordinal_parity"}, {"limit", x.bound.limit}, {"offset", x.bound.offset}};
            else if constexpr (std::is_same_v<T, cond::ExplicitMuller>) {
                auto f0 = x.f0;
                std::sort(f0.begin(), f0.end());
                f0.erase(std::unique(f0.begin(), f0.end()), f0.end());
                json sets = json::array();
                for (const auto& s : f0) sets.push_back(set_json(s));
                return {{"kind", "explicit"}, {"C", set_json(x.alphabet)}, {"F0", sets}};
            } else if constexpr (std::is_same_v<T, cond::ZielonkaPath>) {
                json d = json::array();
                for (const auto& s : x.diffs) d.push_back(set_json(s));
                return {{"kind", "zielonka_path"},
                        {"root_player", to_int(x.root_player)},
                        {"diffs", d},
                        {"ends_with_empty", x.ends_with_empty}};
            } else {
                return {{"kind", "singleton_limit"}, {"e", element_json(x.e)}, {"Y_window", set_json(x.y_window)}};
            }
        },
        c);
    return dump(j);
}

MemoryStrategy
parse_memory_strategy_json(std::string_view text, const Arena& a, std::optional<Player> player)
{
    auto j = parse_json(text);
    const auto& mem = field(j, "memory");
    if (!mem.is_array() || mem.empty()) parse_fail("\"memory\" must be a non-empty array");
    Player p = player ? *player : Player::Zero;
    if (!player && j.contains("player")) p = player_of(j.at("player"), "player");
    MemoryStrategy s(p, mem.size(), a.size());
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < mem.size(); ++i) {
        s.memory_names[i] = mem[i].is_string() ? mem[i].get<std::string>() : mem[i].dump();
        if (!index.emplace(s.memory_names[i], i).second) parse_fail("duplicate memory state " + s.memory_names[i]);
    }
    auto memory_of = [&](const json& x) -> std::size_t {
        if (x.is_number_integer()) {
            auto k = natural(x, "memory index");
            if (k >= mem.size()) parse_fail("memory index out of range");
            auto it = index.find(std::to_string(k));
            return it != index.end() ? it->second : k;
        }
        auto it = index.find(text_of(x, "memory state"));
        if (it == index.end()) parse_fail("unknown memory state \"" + x.get<std::string>() + "\"");
        return it->second;
    };
    s.initial = memory_of(field(j, "initial"));
    for (const auto& u : field(j, "update")) {
        if (!u.is_array() || u.size() != 3) parse_fail("an update is [m, v, m']");
        s.update[memory_of(u[0])][vertex_of(a, u[1])] = memory_of(u[2]);
    }
    for (const auto& mv : field(j, "moves")) {
        if (!mv.is_array() || mv.size() != 3) parse_fail("a move is [v, m, w]");
        s.next[vertex_of(a, mv[0])][memory_of(mv[1])] = vertex_of(a, mv[2]);
    }
    check_memory(a, s);
    return s;
}

std::string
write_memory_strategy_json(const Arena& a, const MemoryStrategy& s)
{
    json upd = json::array();
    json mv = json::array();
    for (std::size_t m = 0; m < s.memory_size(); ++m)
        for (auto w : a.by_id())
            if (s.update[m][w] != kNone) upd.push_back({s.memory_names[m], a.id(w), s.memory_names[s.update[m][w]]});
    for (auto v : a.by_id())
        for (std::size_t m = 0; m < s.memory_size(); ++m)
            if (s.next[v][m] != kNone) mv.push_back({a.id(v), s.memory_names[m], a.id(s.next[v][m])});
    return dump({{"player", to_int(s.player)},
                 {"memory", s.memory_names},
                 {"initial", s.memory_names[s.initial]},
                 {"update", upd},
                 {"moves", mv}});
}

PositionalStrategy
parse_positional_json(std::string_view text, const Arena& a, std::optional<Player> player)
{
    auto j = parse_json(text);
    const json* moves = &j;
    Player p = player ? *player : Player::Zero;
    if (j.contains("moves")) {
        moves = &j.at("moves");
        if (!player && j.contains("player")) p = player_of(j.at("player"), "player");
    }
    if (!moves->is_object()) parse_fail("moves must be an object {\"v\": \"w\"}");
    PositionalStrategy s(p, a.size());
    for (const auto& [v, w] : moves->items()) s.moves[vertex_of(a, v)] = vertex_of(a, w);
    check_positional(a, s);
    return s;
}

std::string
write_positional_json(const Arena& a, const PositionalStrategy& s)
{
    return dump({{"player", to_int(s.player)}, {"moves", moves_of(a, s)}});
}

std::string
write_solve_result_json(const Arena& a, const SolveResult& r)
{
    return dump({{"W0", ids_of(a, r.w0)},
                 {"W1", ids_of(a, r.w1)},
                 {"strat0", moves_of(a, r.strat0)},
                 {"strat1", moves_of(a, r.strat1)}});
}

std::string
write_reduction_json(const Reduction& r)
{
    json f = json::array();
    for (const auto& [p, t] : r.f) f.push_back({element_json(p), t});
    const char* tail = "none";
    json def = nullptr;
    switch (r.tail) {
    case Reduction::Tail::None: break;
    case Reduction::Tail::Identity: tail = "identity"; break;
    case Reduction::Tail::Constant:
        tail = "constant";
        def = r.target;
        break;
    case Reduction::Tail::OddEnumeration:
        tail = "odd_enumeration";
        def = r.target;
        break;
    }
    json alpha = nullptr;
    if (r.alpha) alpha = *r.alpha;
    return dump({{"f", f}, {"default_target", def}, {"tail", tail}, {"role_swapped", r.role_swapped}, {"alpha", alpha}});
}

namespace {

json
descriptor_json(const InfSetDescriptor& d)
{
    return {{"finite", set_json(d.finite)}, {"cofinite", d.cofinite}, {"excluded", set_json(d.excluded)},
            {"text", to_string(d)}};
}

json
chain_json(const ChainVerdict& v)
{
    json out = {{"pass", v.pass}, {"reason", v.reason}};
    if (v.witness) {
        json members = json::array();
        for (const auto& m : v.witness->members) members.push_back(descriptor_json(m));
        out["witness"] = {{"description", v.witness->description},
                          {"descending", v.witness->descending},
                          {"chain_side", to_int(v.witness->chain_side)},
                          {"members", members},
                          {"limit", descriptor_json(v.witness->limit)}};
    }
    return out;
}

} // namespace

std::string
write_classification_json(const ClassificationReport& r)
{
    json p0 = {{"pass", r.p0.pass}};
    if (r.p0.witness)
        p0["witness"] = {{"side", to_int(r.p0.witness->side)},
                         {"first", set_json(r.p0.witness->first)},
                         {"second", set_json(r.p0.witness->second)}};
    return dump({{"P0", p0}, {"P1", chain_json(r.p1)}, {"P2", chain_json(r.p2)}, {"path_shape", r.path_shape}});
}

std::string
write_stages_csv(const Arena& a, const StageTable& t)
{
    std::ostringstream out;
    out << "vertex,value\n";
    for (auto v : a.by_id()) {
        out << a.id(v) << ',';
        if (t.value[v])
            out << *t.value[v];
        else
            out << "inf";
        out << '\n';
    }
    return out.str();
}

DotOverlay
overlay_of(const Arena& a, const SolveResult& r)
{
    DotOverlay o;
    for (VertexIndex v = 0; v < a.size(); ++v) {
        if (r.w0[v]) o.w0.push_back(a.id(v));
        if (r.w1[v]) o.w1.push_back(a.id(v));
        if (r.strat0.defined(v)) o.strategy[a.id(v)] = a.id(r.strat0.moves[v]);
        if (r.strat1.defined(v)) o.strategy[a.id(v)] = a.id(r.strat1.moves[v]);
    }
    return o;
}

namespace {

std::string
escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

std::string
quote(const std::string& s)
{
    return "\"" + escape(s) + "\"";
}

} // namespace

std::string
export_dot(const Arena& a, const DotOverlay& overlay)
{
    auto known = [&](const std::string& id) {
        if (!a.find(id)) throw Error(Errc::UnknownVertexInOverlay, "overlay names unknown vertex \"" + id + "\"");
    };
    std::map<std::string, int> region;
    for (const auto& id : overlay.w0) known(id), region[id] = 0;
    for (const auto& id : overlay.w1) known(id), region[id] = 1;
    for (const auto& [v, w] : overlay.strategy) {
        known(v);
        known(w);
        if (!a.has_edge(a.index_of(v), a.index_of(w)))
            throw Error(Errc::UnknownVertexInOverlay, "strategy edge " + v + " -> " + w + " is not in the arena");
    }
    for (const auto& [v, l] : overlay.labels) known(v);

    std::ostringstream out;
    out << "digraph arena {\n";
    for (auto v : a.by_id()) {
        const auto& id = a.id(v);
        out << "  " << quote(id) << " [shape=" << (a.owner(v) == Player::Zero ? "ellipse" : "box")
            << ", label=\"" << escape(id) << "\\n" << escape(to_string(a.priority(v))) << "\"";
        if (auto it = region.find(id); it != region.end())
            out << ", style=filled, fillcolor=" << (it->second == 0 ? "lightblue" : "lightsalmon");
        if (auto it = overlay.labels.find(id); it != overlay.labels.end()) out << ", xlabel=" << quote(it->second);
        out << "];\n";
    }
    for (auto v : a.by_id()) {
        std::vector<VertexIndex> succ = a.successors(v);
        std::sort(succ.begin(), succ.end(), [&](auto x, auto y) { return a.id(x) < a.id(y); });
        auto s = overlay.strategy.find(a.id(v));
        for (auto w : succ) {
            out << "  " << quote(a.id(v)) << " -> " << quote(a.id(w));
            if (s != overlay.strategy.end() && s->second == a.id(w)) out << " [style=bold, penwidth=2]";
            out << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

} // namespace omega::io

#include "eulercat/io.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <vector>

namespace eulercat {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

struct Line {
    std::size_t number;
    std::string_view text;
};

// Content lines with comments stripped, keeping 1-based numbers for errors.
std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0, pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        ++number;
        if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (!line.empty()) out.push_back({number, line});
        if (end == text.size()) break;
        pos = end + 1;
    }
    return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw InputError("PARSE_ERROR", "line " + std::to_string(line) + ": " + what);
}

std::string token(std::string_view raw, std::size_t line) {
    std::string_view t = trim(raw);
    if (t.empty()) fail(line, "empty identifier");
    for (char ch : t)
        if (ch == ' ' || ch == '\t' || ch == ',') fail(line, "identifier '" + std::string(t) +
                                                                 "' contains a separator");
    return std::string(t);
}

// Splits on the first occurrence of `sep`; nullopt when absent.
std::optional<std::pair<std::string_view, std::string_view>> split(std::string_view s,
                                                                   std::string_view sep) {
    std::size_t at = s.find(sep);
    if (at == std::string_view::npos) return std::nullopt;
    return {{s.substr(0, at), s.substr(at + sep.size())}};
}

std::vector<std::string> comma_list(std::string_view raw, std::size_t line) {
    std::vector<std::string> out;
    raw = trim(raw);
    if (raw.empty()) return out;
    while (true) {
        auto parts = split(raw, ",");
        if (!parts) {
            out.push_back(token(raw, line));
            return out;
        }
        out.push_back(token(parts->first, line));
        raw = parts->second;
    }
}

std::pair<std::string, std::string> arrow_pair(std::string_view raw, std::size_t line) {
    auto parts = split(raw, "->");
    if (!parts) fail(line, "expected '<lhs> -> <rhs>'");
    return {token(parts->first, line), token(parts->second, line)};
}

bool directive(std::string_view line, std::string_view word, std::string_view& rest) {
    if (!line.starts_with(word)) return false;
    rest = line.substr(word.size());
    return true;
}

}  // namespace

std::string to_fincat_text(const FinCat& c) {
    CatSpec spec = c.to_spec();
    std::ostringstream out;
    if (!spec.name.empty()) out << "name: " << spec.name << "\n";
    out << "objects:";
    for (std::size_t i = 0; i < spec.objects.size(); ++i)
        out << (i ? ", " : " ") << spec.objects[i];
    out << "\n";
    for (const auto& a : spec.arrows) out << "arrow " << a.id << ": " << a.src << " -> " << a.tgt << "\n";
    for (const auto& [obj, arr] : spec.identities)
        if (arr != "id_" + obj) out << "identity " << obj << ": " << arr << "\n";
    for (const auto& comp : spec.composites)
        out << "compose " << comp.g << " . " << comp.f << " = " << comp.h << "\n";
    return out.str();
}

FinCat parse_fincat(std::string_view text) {
    CatSpec spec;
    bool saw_name = false;
    for (const Line& line : content_lines(text)) {
        std::string_view rest;
        if (directive(line.text, "name:", rest)) {
            if (saw_name) fail(line.number, "second name directive");
            saw_name = true;
            spec.name = std::string(trim(rest));
        } else if (directive(line.text, "objects:", rest)) {
            for (auto& obj : comma_list(rest, line.number)) spec.objects.push_back(std::move(obj));
        } else if (directive(line.text, "arrow ", rest)) {
            auto head = split(rest, ":");
            if (!head) fail(line.number, "expected 'arrow <id>: <src> -> <tgt>'");
            auto [src, tgt] = arrow_pair(head->second, line.number);
            spec.arrows.push_back({token(head->first, line.number), src, tgt});
        } else if (directive(line.text, "identity ", rest)) {
            auto head = split(rest, ":");
            if (!head) fail(line.number, "expected 'identity <object>: <arrow>'");
            auto [where, fresh] = spec.identities.emplace(token(head->first, line.number),
                                                          token(head->second, line.number));
            if (!fresh) fail(line.number, "second identity for '" + where->first + "'");
        } else if (directive(line.text, "compose ", rest)) {
            auto eq = split(rest, "=");
            if (!eq) fail(line.number, "expected 'compose <g> . <f> = <h>'");
            auto gf = split(eq->first, " . ");
            if (!gf) fail(line.number, "expected 'compose <g> . <f> = <h>'");
            spec.composites.push_back({token(gf->first, line.number),
                                       token(gf->second, line.number),
                                       token(eq->second, line.number)});
        } else {
            fail(line.number, "unrecognized directive: '" + std::string(line.text) + "'");
        }
    }
    return FinCat::build(std::move(spec));
}

std::string to_digraph_text(const DirectedGraph& g) {
    std::ostringstream out;
    for (const auto& v : g.vertices) out << "vertex " << v << "\n";
    for (const auto& e : g.edges) out << "edge " << e.id << ": " << e.src << " -> " << e.tgt << "\n";
    return out.str();
}

DirectedGraph parse_digraph(std::string_view text) {
    DirectedGraph g;
    for (const Line& line : content_lines(text)) {
        std::string_view rest;
        if (directive(line.text, "vertex ", rest)) {
            g.vertices.push_back(token(rest, line.number));
        } else if (directive(line.text, "edge ", rest)) {
            auto head = split(rest, ":");
            if (!head) fail(line.number, "expected 'edge <id>: <src> -> <tgt>'");
            auto [src, tgt] = arrow_pair(head->second, line.number);
            g.edges.push_back({token(head->first, line.number), src, tgt});
        } else {
            fail(line.number, "unrecognized directive: '" + std::string(line.text) + "'");
        }
    }
    if (auto why = graph_violation(g)) throw InputError("PARSE_ERROR", *why);
    return g;
}

std::string header_domain(std::string_view text) {
    auto lines = content_lines(text);
    std::string_view rest;
    if (lines.empty() || !directive(lines.front().text, "domain:", rest))
        throw InputError("PARSE_ERROR", "expected a leading 'domain: <ref>' line");
    std::string_view ref = trim(rest);
    if (ref.empty()) fail(lines.front().number, "empty domain reference");
    return std::string(ref);
}

std::string to_finfun_text(const SetFunctor& x, std::string_view domain_ref) {
    std::ostringstream out;
    out << "domain: " << domain_ref << "\n";
    for (std::uint32_t a = 0; a < x.domain.object_count(); ++a) {
        out << "at " << x.domain.object_id(a) << ":";
        for (std::size_t i = 0; i < x.object_sets[a].size(); ++i)
            out << (i ? ", " : " ") << x.object_sets[a][i];
        out << "\n";
    }
    for (std::uint32_t f = 0; f < x.domain.arrow_count(); ++f) {
        const Arrow& ar = x.domain.arrow(f);
        if (f == x.domain.identity(ar.src)) continue;
        out << "on " << ar.id << ":";
        for (std::uint32_t i = 0; i < x.arrow_actions[f].size(); ++i)
            out << (i ? ", " : " ") << x.object_sets[ar.src][i] << " -> "
                << x.object_sets[ar.tgt][x.arrow_actions[f][i]];
        out << "\n";
    }
    return out.str();
}

SetFunctor parse_finfun(std::string_view text, FinCat domain) {
    SetFunctor x;
    x.domain = std::move(domain);
    x.object_sets.resize(x.domain.object_count());
    x.arrow_actions.resize(x.domain.arrow_count());
    std::vector<bool> seen_at(x.domain.object_count(), false);
    std::vector<bool> seen_on(x.domain.arrow_count(), false);

    auto lines = content_lines(text);
    std::string_view rest;
    if (lines.empty() || !directive(lines.front().text, "domain:", rest))
        throw InputError("PARSE_ERROR", "expected a leading 'domain: <ref>' line");
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (directive(line.text, "at ", rest)) {
            auto head = split(rest, ":");
            if (!head) fail(line.number, "expected 'at <object>: <elements>'");
            auto obj = x.domain.object_index(token(head->first, line.number));
            if (!obj) fail(line.number, "unknown object in 'at' line");
            if (seen_at[*obj]) fail(line.number, "second 'at' line for an object");
            seen_at[*obj] = true;
            x.object_sets[*obj] = comma_list(head->second, line.number);
        } else if (directive(line.text, "on ", rest)) {
            auto head = split(rest, ":");
            if (!head) fail(line.number, "expected 'on <arrow>: <mappings>'");
            auto arr = x.domain.arrow_index(token(head->first, line.number));
            if (!arr) fail(line.number, "unknown arrow in 'on' line");
            if (seen_on[*arr]) fail(line.number, "second 'on' line for an arrow");
            seen_on[*arr] = true;
            const Arrow& ar = x.domain.arrow(*arr);
            if (!seen_at[ar.src] || !seen_at[ar.tgt])
                fail(line.number, "'on' line precedes the 'at' lines of its endpoints");
            const auto& src_set = x.object_sets[ar.src];
            const auto& tgt_set = x.object_sets[ar.tgt];
            std::vector<std::uint32_t> act(src_set.size(), UINT32_MAX);
            std::string_view todo = trim(head->second);
            while (!todo.empty()) {
                std::string_view piece = todo;
                if (auto parts = split(todo, ",")) {
                    piece = parts->first;
                    todo = parts->second;
                } else {
                    todo = {};
                }
                auto [from, to] = arrow_pair(piece, line.number);
                auto fi = std::find(src_set.begin(), src_set.end(), from);
                auto ti = std::find(tgt_set.begin(), tgt_set.end(), to);
                if (fi == src_set.end()) fail(line.number, "'" + from + "' is not a source element");
                if (ti == tgt_set.end()) fail(line.number, "'" + to + "' is not a target element");
                std::uint32_t& slot = act[fi - src_set.begin()];
                if (slot != UINT32_MAX) fail(line.number, "'" + from + "' is mapped twice");
                slot = static_cast<std::uint32_t>(ti - tgt_set.begin());
            }
            for (std::size_t j = 0; j < act.size(); ++j)
                if (act[j] == UINT32_MAX)
                    fail(line.number, "'" + src_set[j] + "' is not mapped");
            x.arrow_actions[*arr] = std::move(act);
        } else {
            fail(line.number, "unrecognized directive: '" + std::string(line.text) + "'");
        }
    }
    for (std::uint32_t a = 0; a < x.domain.object_count(); ++a)
        if (!seen_at[a])
            throw InputError("PARSE_ERROR", "missing 'at' line for '" + x.domain.object_id(a) + "'");
    for (std::uint32_t f = 0; f < x.domain.arrow_count(); ++f) {
        if (seen_on[f]) continue;
        const Arrow& ar = x.domain.arrow(f);
        if (f == x.domain.identity(ar.src)) {
            // Identity arrows may omit their line; the laws pin the action down.
            x.arrow_actions[f].resize(x.object_sets[ar.src].size());
            std::iota(x.arrow_actions[f].begin(), x.arrow_actions[f].end(), 0u);
        } else {
            throw InputError("PARSE_ERROR", "missing 'on' line for '" + ar.id + "'");
        }
    }
    if (auto why = set_functor_violation(x)) throw InputError("NOT_A_FUNCTOR", *why);
    return x;
}

std::string to_endofun_text(const Endofunctor& f, std::string_view domain_ref) {
    std::ostringstream out;
    out << "domain: " << domain_ref << "\n";
    for (std::uint32_t a = 0; a < f.cat.object_count(); ++a)
        out << "obj " << f.cat.object_id(a) << " -> " << f.cat.object_id(f.map.obj_map[a]) << "\n";
    for (std::uint32_t i = 0; i < f.cat.arrow_count(); ++i) {
        if (i == f.cat.identity(f.cat.arrow(i).src)) continue;
        out << "arr " << f.cat.arrow(i).id << " -> " << f.cat.arrow(f.map.arr_map[i]).id << "\n";
    }
    return out.str();
}

Endofunctor parse_endofun(std::string_view text, FinCat cat) {
    Endofunctor f;
    f.cat = std::move(cat);
    f.map.obj_map.assign(f.cat.object_count(), UINT32_MAX);
    f.map.arr_map.assign(f.cat.arrow_count(), UINT32_MAX);

    auto lines = content_lines(text);
    std::string_view rest;
    if (lines.empty() || !directive(lines.front().text, "domain:", rest))
        throw InputError("PARSE_ERROR", "expected a leading 'domain: <ref>' line");
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (directive(line.text, "obj ", rest)) {
            auto [from, to] = arrow_pair(rest, line.number);
            auto fi = f.cat.object_index(from);
            auto ti = f.cat.object_index(to);
            if (!fi || !ti) fail(line.number, "unknown object in 'obj' line");
            if (f.map.obj_map[*fi] != UINT32_MAX) fail(line.number, "'" + from + "' mapped twice");
            f.map.obj_map[*fi] = *ti;
        } else if (directive(line.text, "arr ", rest)) {
            auto [from, to] = arrow_pair(rest, line.number);
            auto fi = f.cat.arrow_index(from);
            auto ti = f.cat.arrow_index(to);
            if (!fi || !ti) fail(line.number, "unknown arrow in 'arr' line");
            if (f.map.arr_map[*fi] != UINT32_MAX) fail(line.number, "'" + from + "' mapped twice");
            f.map.arr_map[*fi] = *ti;
        } else {
            fail(line.number, "unrecognized directive: '" + std::string(line.text) + "'");
        }
    }
    for (std::uint32_t a = 0; a < f.cat.object_count(); ++a)
        if (f.map.obj_map[a] == UINT32_MAX)
            throw InputError("PARSE_ERROR",
                             "missing 'obj' line for '" + f.cat.object_id(a) + "'");
    for (std::uint32_t i = 0; i < f.cat.arrow_count(); ++i) {
        if (f.map.arr_map[i] != UINT32_MAX) continue;
        const Arrow& ar = f.cat.arrow(i);
        if (i == f.cat.identity(ar.src))
            f.map.arr_map[i] = f.cat.identity(f.map.obj_map[ar.src]);
        else
            throw InputError("PARSE_ERROR", "missing 'arr' line for '" + ar.id + "'");
    }
    if (auto why = endofunctor_violation(f)) throw InputError("NOT_A_FUNCTOR", *why);
    return f;
}

}  // namespace eulercat

// Command-line front end: parses the text formats, dispatches each library
// operation, and renders exact rationals. Exit codes: 0 success, 1 negative
// mathematical result (reason line on stdout), 2 broken input.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "eulercat/builders.hpp"
#include "eulercat/constructions.hpp"
#include "eulercat/fincat.hpp"
#include "eulercat/functors.hpp"
#include "eulercat/io.hpp"
#include "eulercat/lefschetz.hpp"
#include "eulercat/mobius.hpp"

using json = nlohmann::ordered_json;
using namespace eulercat;

namespace {

struct Ctx {
    std::string out_path;  // empty = stdout
    bool json = false;
    std::size_t cap = kDefaultArrowCap;
};

void write_out(const Ctx& ctx, const std::string& text) {
    if (ctx.out_path.empty() || ctx.out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(ctx.out_path);
    if (!f) throw InputError("IO_ERROR", "cannot write '" + ctx.out_path + "'");
    f << text;
}

void emit(const Ctx& ctx, const std::string& text) { write_out(ctx, text); }

void emit(const Ctx& ctx, const char* text) { write_out(ctx, text); }

void emit(const Ctx& ctx, const json& j) { write_out(ctx, j.dump(2) + "\n"); }

int negative(const Ctx& ctx, const std::string& code, const std::string& detail) {
    if (ctx.json)
        emit(ctx, json{{"error", code}, {"detail", detail}});
    else
        emit(ctx, code + ": " + detail + "\n");
    return 1;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream f(path);
    if (!f) throw InputError("IO_ERROR", "cannot read '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

// Categories with broken laws are rejected at load time: for every verb but
// `validate`, an invalid input file is an input error, not a result.
FinCat load_cat(const std::string& path) {
    try {
        return parse_fincat(read_input(path));
    } catch (const InvalidCategory& e) {
        throw InputError("CAT_INVALID", "'" + path + "': " + e.what());
    }
}

DirectedGraph load_graph(const std::string& path) { return parse_digraph(read_input(path)); }

std::string resolve_ref(const std::string& ref, const std::string& source_path) {
    std::filesystem::path p(ref);
    if (p.is_absolute() || source_path == "-") return ref;
    return (std::filesystem::path(source_path).parent_path() / p).string();
}

// A functor file either references its domain (`domain: <path>`) or carries
// it inline: the category text, a line `%%`, then the functor body.
struct FunctorSource {
    FinCat domain;
    std::string body;
};

FunctorSource functor_source(const std::string& path) {
    std::string text = read_input(path);
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string::npos) eol = text.size();
        std::string line = text.substr(pos, eol - pos);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\r')) line.pop_back();
        if (line == "%%") {
            FunctorSource src;
            try {
                src.domain = parse_fincat(text.substr(0, pos));
            } catch (const InvalidCategory& e) {
                throw InputError("CAT_INVALID", "'" + path + "': " + e.what());
            }
            // The body keeps its own domain line; the ref (by convention
            // `inline`) is ignored in favor of the embedded category.
            src.body = text.substr(eol + (eol < text.size() ? 1 : 0));
            return src;
        }
        pos = eol + 1;
    }
    std::string ref = header_domain(text);
    return {load_cat(resolve_ref(ref, path)), std::move(text)};
}

SetFunctor load_finfun(const std::string& path) {
    FunctorSource src = functor_source(path);
    return parse_finfun(src.body, std::move(src.domain));
}

Endofunctor load_endofun(const std::string& path) {
    FunctorSource src = functor_source(path);
    return parse_endofun(src.body, std::move(src.domain));
}

std::string self_contained(const SetFunctor& x) {
    return to_fincat_text(x.domain) + "%%\n" + to_finfun_text(x, "inline");
}

// -------------------------------------------------------------------------
// Small line helpers for the CLI-local formats (object maps, profunctors).

std::string trimmed(std::string s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    std::size_t e = s.find_last_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

std::vector<std::pair<std::size_t, std::string>> body_lines(const std::string& text) {
    std::vector<std::pair<std::size_t, std::string>> out;
    std::istringstream in(text);
    std::string raw;
    std::size_t n = 0;
    while (std::getline(in, raw)) {
        ++n;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::string line = trimmed(raw);
        if (!line.empty()) out.emplace_back(n, line);
    }
    return out;
}

[[noreturn]] void bad_line(std::size_t n, const std::string& what) {
    throw InputError("PARSE_ERROR", "line " + std::to_string(n) + ": " + what);
}

std::pair<std::string, std::string> cut(const std::string& s, const std::string& sep,
                                        std::size_t line, const std::string& what) {
    std::size_t at = s.find(sep);
    if (at == std::string::npos) bad_line(line, what);
    return {trimmed(s.substr(0, at)), trimmed(s.substr(at + sep.size()))};
}

std::vector<std::string> comma_split(const std::string& s) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t at = s.find(',', pos);
        if (at == std::string::npos) at = s.size();
        std::string piece = trimmed(s.substr(pos, at - pos));
        if (!piece.empty()) out.push_back(piece);
        pos = at + 1;
    }
    return out;
}

// One `<x> -> <y>` line per object of `dom`, mapping into `cod`.
std::vector<std::uint32_t> parse_objmap(const std::string& text, const FinCat& dom,
                                        const FinCat& cod) {
    std::vector<std::uint32_t> map(dom.object_count(), UINT32_MAX);
    for (const auto& [n, line] : body_lines(text)) {
        auto [from, to] = cut(line, "->", n, "expected '<object> -> <object>'");
        auto fi = dom.object_index(from);
        auto ti = cod.object_index(to);
        if (!fi) bad_line(n, "unknown object '" + from + "'");
        if (!ti) bad_line(n, "unknown object '" + to + "'");
        if (map[*fi] != UINT32_MAX) bad_line(n, "'" + from + "' mapped twice");
        map[*fi] = *ti;
    }
    for (std::uint32_t a = 0; a < dom.object_count(); ++a)
        if (map[a] == UINT32_MAX)
            throw InputError("PARSE_ERROR", "no image for object '" + dom.object_id(a) + "'");
    return map;
}

// Profunctor format: `left: <ref>` (the contravariant side B), `right: <ref>`
// (the covariant side A), `at <b>, <a>: e1, e2` element lines (omitted pairs
// are empty), `lmap <f> @ <a>: e -> e', ...` for B-arrows and
// `rmap <g> @ <b>: ...` for A-arrows. Identity maps may be omitted.
Profunctor parse_profun(const std::string& path) {
    std::string text = read_input(path);
    auto lines = body_lines(text);
    Profunctor m;
    bool have_left = false, have_right = false;

    auto elem_index = [](const std::vector<std::string>& set, const std::string& e,
                         std::size_t n) {
        for (std::size_t i = 0; i < set.size(); ++i)
            if (set[i] == e) return static_cast<std::uint32_t>(i);
        bad_line(n, "unknown element '" + e + "'");
    };

    for (const auto& [n, line] : lines) {
        if (line.rfind("left:", 0) == 0) {
            if (have_left) bad_line(n, "second 'left:' line");
            m.b = load_cat(resolve_ref(trimmed(line.substr(5)), path));
            have_left = true;
        } else if (line.rfind("right:", 0) == 0) {
            if (have_right) bad_line(n, "second 'right:' line");
            m.a = load_cat(resolve_ref(trimmed(line.substr(6)), path));
            have_right = true;
        }
    }
    if (!have_left || !have_right)
        throw InputError("PARSE_ERROR", "profunctor needs 'left:' and 'right:' lines");

    const std::size_t nb = m.b.object_count(), na = m.a.object_count();
    m.elems.assign(nb, std::vector<std::vector<std::string>>(na));
    for (const auto& [n, line] : lines) {
        if (line.rfind("at ", 0) != 0) continue;
        auto [head, rest] = cut(line.substr(3), ":", n, "expected 'at <b>, <a>: <elements>'");
        auto [bid, aid] = cut(head, ",", n, "expected '<b>, <a>' before the colon");
        auto bi = m.b.object_index(bid);
        auto ai = m.a.object_index(aid);
        if (!bi) bad_line(n, "unknown left object '" + bid + "'");
        if (!ai) bad_line(n, "unknown right object '" + aid + "'");
        if (!m.elems[*bi][*ai].empty()) bad_line(n, "second 'at' line for (" + bid + ", " + aid + ")");
        m.elems[*bi][*ai] = comma_split(rest);
    }

    // left[f][ai] : elems[tgt f][ai] -> elems[src f][ai],
    // right[g][bi]: elems[bi][src g] -> elems[bi][tgt g].
    m.left.assign(m.b.arrow_count(), std::vector<std::vector<std::uint32_t>>(na));
    m.right.assign(m.a.arrow_count(), std::vector<std::vector<std::uint32_t>>(nb));
    auto blank = [](std::vector<std::uint32_t>& v, std::size_t size) {
        v.assign(size, UINT32_MAX);
    };
    for (std::uint32_t f = 0; f < m.b.arrow_count(); ++f)
        for (std::size_t ai = 0; ai < na; ++ai)
            blank(m.left[f][ai], m.elems[m.b.arrow(f).tgt][ai].size());
    for (std::uint32_t g = 0; g < m.a.arrow_count(); ++g)
        for (std::size_t bi = 0; bi < nb; ++bi)
            blank(m.right[g][bi], m.elems[bi][m.a.arrow(g).src].size());

    for (const auto& [n, line] : lines) {
        bool lmap = line.rfind("lmap ", 0) == 0;
        bool rmap = line.rfind("rmap ", 0) == 0;
        if (!lmap && !rmap) continue;
        auto [head, rest] = cut(line.substr(5), ":", n, "expected '<arrow> @ <object>: <maps>'");
        auto [arr_id, obj_id] = cut(head, "@", n, "expected '<arrow> @ <object>'");
        const FinCat& side = lmap ? m.b : m.a;
        const FinCat& other = lmap ? m.a : m.b;
        auto arr = side.arrow_index(arr_id);
        auto obj = other.object_index(obj_id);
        if (!arr) bad_line(n, "unknown arrow '" + arr_id + "'");
        if (!obj) bad_line(n, "unknown object '" + obj_id + "'");
        const Arrow& ar = side.arrow(*arr);
        const auto& src_set = lmap ? m.elems[ar.tgt][*obj] : m.elems[*obj][ar.src];
        const auto& tgt_set = lmap ? m.elems[ar.src][*obj] : m.elems[*obj][ar.tgt];
        std::vector<std::uint32_t>& slot = lmap ? m.left[*arr][*obj] : m.right[*arr][*obj];
        for (const std::string& piece : comma_split(rest)) {
            auto [from, to] = cut(piece, "->", n, "expected '<elem> -> <elem>'");
            std::uint32_t fi = elem_index(src_set, from, n);
            std::uint32_t ti = elem_index(tgt_set, to, n);
            if (slot[fi] != UINT32_MAX) bad_line(n, "'" + from + "' mapped twice");
            slot[fi] = ti;
        }
    }

    auto fill_identities = [](const FinCat& side, auto& table) {
        for (std::uint32_t f = 0; f < side.arrow_count(); ++f) {
            if (f != side.identity(side.arrow(f).src)) continue;
            for (auto& v : table[f])
                for (std::size_t i = 0; i < v.size(); ++i)
                    if (v[i] == UINT32_MAX) v[i] = static_cast<std::uint32_t>(i);
        }
    };
    fill_identities(m.b, m.left);
    fill_identities(m.a, m.right);
    auto require_total = [](const FinCat& side, const auto& table, const char* which) {
        for (std::uint32_t f = 0; f < side.arrow_count(); ++f)
            for (const auto& v : table[f])
                for (std::uint32_t x : v)
                    if (x == UINT32_MAX)
                        throw InputError("PARSE_ERROR", std::string("incomplete '") + which +
                                                            "' for arrow '" + side.arrow(f).id +
                                                            "'");
    };
    require_total(m.b, m.left, "lmap");
    require_total(m.a, m.right, "rmap");

    if (auto why = profunctor_violation(m)) throw InputError("NOT_A_FUNCTOR", *why);
    return m;
}

// -------------------------------------------------------------------------
// Rendering.

json mat_json(const QMat& m) {
    json rows = json::array(), entries = json::array();
    for (const std::string& r : m.row_labels()) rows.push_back(r);
    json cols = json::array();
    for (const std::string& c : m.col_labels()) cols.push_back(c);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        entries.push_back(std::move(row));
    }
    return json{{"rows", rows}, {"cols", cols}, {"entries", entries}};
}

int emit_matrix(const Ctx& ctx, const std::string& cat, const QMat& m) {
    if (ctx.json)
        emit(ctx, json{{"cat", cat}, {"matrix", mat_json(m)}});
    else
        emit(ctx, m.to_text());
    return 0;
}

int emit_rat(const Ctx& ctx, const char* key, const Rat& v) {
    if (ctx.json)
        emit(ctx, json{{key, v.str()}});
    else
        emit(ctx, v.str() + "\n");
    return 0;
}

int emit_cat(const Ctx& ctx, const FinCat& c) {
    std::string text = to_fincat_text(c);
    if (ctx.json)
        emit(ctx, json{{"name", c.name()},
                       {"objects", c.object_count()},
                       {"arrows", c.arrow_count()},
                       {"text", text}});
    else
        emit(ctx, text);
    return 0;
}

int emit_solution(const Ctx& ctx, const AffineSolutionSet& sol) {
    if (ctx.json) {
        json particular = json::array(), nullspace = json::array(), labels = json::array();
        for (const std::string& l : sol.labels) labels.push_back(l);
        for (const Rat& v : sol.particular) particular.push_back(v.str());
        for (const auto& basis : sol.nullspace) {
            json vec = json::array();
            for (const Rat& v : basis) vec.push_back(v.str());
            nullspace.push_back(std::move(vec));
        }
        emit(ctx, json{{"kind", sol.kind == AffineSolutionSet::Kind::Unique ? "unique" : "family"},
                       {"labels", labels},
                       {"particular", particular},
                       {"nullspace", nullspace}});
        return 0;
    }
    std::ostringstream out;
    out << "kind: " << (sol.kind == AffineSolutionSet::Kind::Unique ? "unique" : "family") << "\n";
    for (std::size_t i = 0; i < sol.labels.size(); ++i)
        out << sol.labels[i] << ": " << sol.particular[i].str() << "\n";
    for (std::size_t b = 0; b < sol.nullspace.size(); ++b) {
        out << "null " << b + 1 << ":";
        for (std::size_t i = 0; i < sol.nullspace[b].size(); ++i)
            out << (i ? ", " : " ") << sol.nullspace[b][i].str();
        out << "\n";
    }
    emit(ctx, out.str());
    return 0;
}

int emit_quotient(const Ctx& ctx, const SetQuotient& q) {
    std::vector<std::vector<std::string>> members(q.size());
    for (std::size_t i = 0; i < q.labels.size(); ++i)
        members[q.component[i]].push_back(q.labels[i]);
    if (ctx.json) {
        json comps = json::array();
        for (std::size_t c = 0; c < q.size(); ++c)
            comps.push_back(json{{"representative", q.representatives[c]}, {"members", members[c]}});
        emit(ctx, json{{"count", q.size()}, {"components", comps}});
        return 0;
    }
    std::ostringstream out;
    out << "components: " << q.size() << "\n";
    for (std::size_t c = 0; c < q.size(); ++c) {
        out << q.representatives[c] << ":";
        for (std::size_t i = 0; i < members[c].size(); ++i)
            out << (i ? ", " : " ") << members[c][i];
        out << "\n";
    }
    emit(ctx, out.str());
    return 0;
}

// -------------------------------------------------------------------------
// The verification suite: cheap, deterministic instances of the library's
// cross-cutting identities, run over the builder catalogs.

struct Check {
    std::string name;
    std::function<std::optional<std::string>()> run;  // failure detail
};

Rat chi_or_throw(const FinCat& c) {
    EulerChar chi = euler_characteristic(c);
    if (!chi.ok()) throw MathError(chi.reason, "no Euler characteristic for '" + c.name() + "'");
    return *chi.value;
}

std::vector<Check> verification_suite() {
    std::vector<Check> checks;
    auto add = [&](std::string name, std::function<std::optional<std::string>()> run) {
        checks.push_back({std::move(name), std::move(run)});
    };

    add("serialization round trip", []() -> std::optional<std::string> {
        for (const auto& entry : standard_catalog()) {
            FinCat c = entry.construct();
            if (!parse_fincat(to_fincat_text(c)).equals(c)) return c.name();
        }
        return std::nullopt;
    });

    add("mobius inverts zeta on both sides", []() -> std::optional<std::string> {
        for (const auto& entry : standard_catalog()) {
            FinCat c = entry.construct();
            MobiusResult mr = mobius_matrix(c);
            if (!mr.ok()) continue;
            QMat z = zeta(c).matrix;
            if (!(z * *mr.mu).is_identity() || !(*mr.mu * z).is_identity()) return c.name();
        }
        return std::nullopt;
    });

    add("vanishing: zeta(a,b)=0 forces mu(a,b)=0", []() -> std::optional<std::string> {
        for (const auto& entry : standard_catalog()) {
            FinCat c = entry.construct();
            MobiusResult mr = mobius_matrix(c);
            if (!mr.ok()) continue;
            QMat z = zeta(c).matrix;
            for (std::size_t i = 0; i < c.object_count(); ++i)
                for (std::size_t j = 0; j < c.object_count(); ++j)
                    if (z.at(i, j).is_zero() && !mr.mu->at(i, j).is_zero()) return c.name();
        }
        return std::nullopt;
    });

    add("path sums agree with matrix inversion", []() -> std::optional<std::string> {
        for (const auto& entry : standard_catalog()) {
            FinCat c = entry.construct();
            StructuralProfile p = structural_profile(c);
            if (!p.is_skeletal || !p.idempotents_are_identities) continue;
            if (mobius_by_paths(c).matrix != *mobius_matrix(c).mu) return c.name();
        }
        return std::nullopt;
    });

    add("epi-mono factorization agrees", []() -> std::optional<std::string> {
        for (long n : {2L, 3L}) {
            FinCat c = build_catalog("fin_sets", {n});
            QMat via = mobius_by_factorization(c, epimorphisms(c), monomorphisms(c)).matrix;
            if (via != *mobius_matrix(c).mu) return c.name();
        }
        return std::nullopt;
    });

    add("weighting and coweighting sums agree", []() -> std::optional<std::string> {
        for (const auto& entry : standard_catalog()) {
            FinCat c = entry.construct();
            EulerChar chi = euler_characteristic(c);
            if (!chi.ok()) continue;
            AffineSolutionSet k = weighting(c), l = coweighting(c);
            Rat ks, ls;
            for (const Rat& v : k.particular) ks += v;
            for (const Rat& v : l.particular) ls += v;
            if (ks != ls || ks != *chi.value) return c.name();
        }
        return std::nullopt;
    });

    add("chi is additive and multiplicative", []() -> std::optional<std::string> {
        FinCat a = build_catalog("cyclic_group", {2});
        FinCat b = build_catalog("subsets_poset", {2});
        Rat ca = chi_or_throw(a), cb = chi_or_throw(b);
        if (chi_or_throw(sum({a, b})) != ca + cb) return "sum";
        if (chi_or_throw(product({a, b})) != ca * cb) return "product";
        return std::nullopt;
    });

    add("nerve chi agrees where defined", []() -> std::optional<std::string> {
        for (const auto& entry : standard_catalog()) {
            FinCat c = entry.construct();
            StructuralProfile p = structural_profile(c);
            bool endo_free = p.is_skeletal && p.is_circuit_free;
            if (!endo_free) continue;
            if (nerve_euler(c) != chi_or_throw(c)) return c.name();
        }
        return std::nullopt;
    });

    add("free category chi = vertices - edges", []() -> std::optional<std::string> {
        DirectedGraph g;
        g.vertices = {"a", "b", "c", "d"};
        g.edges = {{"e1", "a", "b"}, {"e2", "a", "c"}, {"e3", "b", "d"},
                   {"e4", "c", "d"}, {"e5", "a", "d"}};
        if (euler_of_graph(g) != Rat(-1)) return std::string("diamond with diagonal");
        return std::nullopt;
    });

    add("adjoined bounds: mu(0,1) = chi - 1", []() -> std::optional<std::string> {
        for (const char* name : {"subsets_poset", "parallel_pair", "sphere_poset"}) {
            std::vector<long> params;
            if (std::string(name) != "parallel_pair") params.push_back(2);
            FinCat c = build_catalog(name, params);
            FinCat bounded = adjoin_bounds(c, true, true);
            MobiusResult mr = mobius_matrix(bounded);
            if (!mr.ok()) return c.name();
            if (mr.mu->at(0, bounded.object_count() - 1) != chi_or_throw(c) - Rat(1))
                return c.name();
        }
        return std::nullopt;
    });

    add("colimit cardinality matches the weighted sum", []() -> std::optional<std::string> {
        for (const auto& entry : standard_functor_catalog()) {
            SetFunctor x = entry.construct();
            if (!structural_profile(x.domain).is_cauchy_complete) continue;
            if (!is_nondegenerate(x).nondegenerate) continue;
            AffineSolutionSet k = weighting(x.domain);
            if (k.kind == AffineSolutionSet::Kind::None) continue;
            Rat card = colimit_cardinality_via_weighting(x, k.particular);
            if (card != Rat(static_cast<long>(colimit(x).size()))) return entry.name;
        }
        return std::nullopt;
    });

    add("familial decomposition reconstructs the sets", []() -> std::optional<std::string> {
        for (const auto& entry : standard_functor_catalog()) {
            SetFunctor x = entry.construct();
            if (!structural_profile(x.domain).is_cauchy_complete) continue;
            FRDecomposition fr = fr_decompose(x);
            if (!fr.ok()) continue;
            const FinCat& c = x.domain;
            QMat z = zeta(c).matrix;
            for (std::uint32_t b = 0; b < c.object_count(); ++b) {
                Rat total;
                for (std::uint32_t a = 0; a < c.object_count(); ++a)
                    total += Rat(static_cast<long>(fr.r[a])) * z.at(a, b);
                if (total != Rat(static_cast<long>(x.object_sets[b].size()))) return entry.name;
            }
        }
        return std::nullopt;
    });

    add("arrow-level mu aggregates to the matrix mu", []() -> std::optional<std::string> {
        for (const auto& entry : standard_catalog()) {
            FinCat c = entry.construct();
            if (!is_poset(c)) continue;
            CllResult r = cll_mobius(c);
            if (!r.ok()) return c.name();
            if (!cll_aggregate(c, *r.values).same_entries(*mobius_matrix(c).mu)) return c.name();
        }
        return std::nullopt;
    });

    add("identity functor has Lefschetz number chi", []() -> std::optional<std::string> {
        for (const auto& entry : standard_catalog()) {
            FinCat c = entry.construct();
            if (!euler_characteristic(c).ok()) continue;
            EulerChar lam = lefschetz_number(identity_endofunctor(c));
            if (!lam.ok() || *lam.value != chi_or_throw(c)) return c.name();
        }
        return std::nullopt;
    });

    return checks;
}

int run_verify(const Ctx& ctx) {
    auto checks = verification_suite();
    std::size_t passed = 0;
    std::ostringstream out;
    json results = json::array();
    for (const Check& check : checks) {
        std::optional<std::string> detail;
        try {
            detail = check.run();
        } catch (const Error& e) {
            detail = std::string(e.code()) + ": " + e.what();
        }
        if (!detail) ++passed;
        if (ctx.json) {
            results.push_back(json{{"name", check.name},
                                   {"ok", !detail.has_value()},
                                   {"detail", detail.value_or("")}});
        } else {
            out << (detail ? "FAIL" : "pass") << "  " << check.name;
            if (detail) out << "  (" << *detail << ")";
            out << "\n";
        }
    }
    if (ctx.json) {
        emit(ctx, json{{"checks", results}, {"passed", passed}, {"total", checks.size()}});
    } else {
        out << "passed " << passed << "/" << checks.size() << "\n";
        emit(ctx, out.str());
    }
    return passed == checks.size() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Euler characteristics, Mobius functions, and colimit"
                 " cardinalities of finite categories"};
    app.require_subcommand(1);
    app.fallthrough();

    Ctx ctx;
    app.add_option("-o,--output", ctx.out_path, "Write the result to a file instead of stdout");
    app.add_flag("--json", ctx.json, "Structured output with the same exact numerals");
    app.add_option("--cap", ctx.cap, "Arrow cap for generated categories");

    std::function<int()> action;
    std::string in1, in2, in3, in4;
    std::vector<std::string> inputs;
    std::vector<long> params;
    std::string name;
    long count = 0;
    bool adjoin_initial = false, adjoin_terminal = false;

    auto one_cat = [&](const char* verb, const char* help, std::function<int(const FinCat&)> go) {
        CLI::App* sub = app.add_subcommand(verb, help);
        sub->add_option("category", in1, "Category file, or - for stdin")->required();
        sub->callback([&, go] { action = [&, go] { return go(load_cat(in1)); }; });
        return sub;
    };
    auto one_fun = [&](const char* verb, const char* help,
                       std::function<int(const SetFunctor&)> go) {
        CLI::App* sub = app.add_subcommand(verb, help);
        sub->add_option("functor", in1, "Functor file, or - for stdin")->required();
        sub->callback([&, go] { action = [&, go] { return go(load_finfun(in1)); }; });
        return sub;
    };
    auto one_endo = [&](const char* verb, const char* help,
                        std::function<int(const Endofunctor&)> go) {
        CLI::App* sub = app.add_subcommand(verb, help);
        sub->add_option("endofunctor", in1, "Endofunctor file, or - for stdin")->required();
        sub->callback([&, go] { action = [&, go] { return go(load_endofun(in1)); }; });
        return sub;
    };

    {
        CLI::App* sub = app.add_subcommand("validate", "Check the five category laws");
        sub->add_option("category", in1, "Category file, or - for stdin")->required();
        sub->callback([&] {
            action = [&] {
                try {
                    FinCat c = parse_fincat(read_input(in1));
                    if (ctx.json)
                        emit(ctx, json{{"ok", true}, {"name", c.name()},
                                       {"objects", c.object_count()},
                                       {"arrows", c.arrow_count()}});
                    else
                        emit(ctx, "ok\n");
                    return 0;
                } catch (const InvalidCategory& e) {
                    if (ctx.json) {
                        json violations = json::array();
                        for (const auto& v : e.report().violations) violations.push_back(v.detail);
                        emit(ctx, json{{"ok", false}, {"error", "CAT_INVALID"},
                                       {"violations", violations}});
                        return 1;
                    }
                    return negative(ctx, "CAT_INVALID", std::string("\n") + e.what());
                }
            };
        });
    }

    one_cat("profile", "Structural facts: skeletal, idempotents, circuits, Cauchy completeness",
            [&](const FinCat& c) {
                StructuralProfile p = structural_profile(c);
                bool poset = is_poset(c);
                if (ctx.json) {
                    json aut = json::array();
                    for (std::uint64_t n : p.aut_order) aut.push_back(n);
                    emit(ctx, json{{"name", c.name()},
                                   {"objects", c.object_count()},
                                   {"arrows", c.arrow_count()},
                                   {"skeletal", p.is_skeletal},
                                   {"idempotents_are_identities", p.idempotents_are_identities},
                                   {"endos_are_autos", p.endos_are_autos},
                                   {"circuit_free", p.is_circuit_free},
                                   {"cauchy_complete", p.is_cauchy_complete},
                                   {"poset", poset},
                                   {"aut_orders", aut}});
                    return 0;
                }
                std::ostringstream out;
                auto flag = [&](const char* key, bool v) {
                    out << key << ": " << (v ? "yes" : "no") << "\n";
                };
                out << "name: " << c.name() << "\n";
                out << "objects: " << c.object_count() << "\n";
                out << "arrows: " << c.arrow_count() << "\n";
                flag("skeletal", p.is_skeletal);
                flag("idempotents_are_identities", p.idempotents_are_identities);
                flag("endos_are_autos", p.endos_are_autos);
                flag("circuit_free", p.is_circuit_free);
                flag("cauchy_complete", p.is_cauchy_complete);
                flag("poset", poset);
                out << "aut:";
                for (std::uint32_t a = 0; a < c.object_count(); ++a)
                    out << (a ? ", " : " ") << c.object_id(a) << "=" << p.aut_order[a];
                out << "\n";
                emit(ctx, out.str());
                return 0;
            });

    one_cat("zeta", "Hom-count matrix", [&](const FinCat& c) {
        return emit_matrix(ctx, c.name(), zeta(c).matrix);
    });

    one_cat("mobius", "Mobius function as the inverse of zeta", [&](const FinCat& c) {
        MobiusResult mr = mobius_matrix(c);
        if (!mr.ok())
            return negative(ctx, "NO_MOBIUS_INVERSION",
                            "zeta of '" + c.name() + "' is singular (rank " +
                                std::to_string(mr.zeta_rank) + " of " +
                                std::to_string(c.object_count()) + ")");
        return emit_matrix(ctx, mr.cat_name, *mr.mu);
    });

    one_cat("mobius-paths", "Mobius function by the alternating path-sum formula",
            [&](const FinCat& c) {
                IncidenceElement el = mobius_by_paths(c);
                return emit_matrix(ctx, el.cat_name, el.matrix);
            });

    one_cat("mobius-fs", "Mobius function through the categorical epi-mono factorization",
            [&](const FinCat& c) {
                IncidenceElement el = mobius_by_factorization(c, epimorphisms(c), monomorphisms(c));
                return emit_matrix(ctx, el.cat_name, el.matrix);
            });

    one_cat("weighting", "Solve zeta k = 1", [&](const FinCat& c) {
        AffineSolutionSet sol = weighting(c);
        if (sol.kind == AffineSolutionSet::Kind::None)
            return negative(ctx, "NO_WEIGHTING", "'" + c.name() + "' admits no weighting");
        return emit_solution(ctx, sol);
    });

    one_cat("coweighting", "Solve the transposed system", [&](const FinCat& c) {
        AffineSolutionSet sol = coweighting(c);
        if (sol.kind == AffineSolutionSet::Kind::None)
            return negative(ctx, "NO_COWEIGHTING", "'" + c.name() + "' admits no coweighting");
        return emit_solution(ctx, sol);
    });

    one_cat("euler", "Euler characteristic", [&](const FinCat& c) {
        EulerChar chi = euler_characteristic(c);
        if (!chi.ok())
            return negative(ctx, chi.reason, "'" + c.name() + "' has no Euler characteristic");
        return emit_rat(ctx, "chi", *chi.value);
    });

    one_cat("nerve-euler", "Alternating nondegenerate-path count", [&](const FinCat& c) {
        return emit_rat(ctx, "chi", nerve_euler(c));
    });

    {
        CLI::App* sub = app.add_subcommand("graph-euler", "Chi of the free category on a graph");
        sub->add_option("graph", in1, "Graph file, or - for stdin")->required();
        sub->callback([&] {
            action = [&] { return emit_rat(ctx, "chi", euler_of_graph(load_graph(in1))); };
        });
    }

    one_fun("elements", "Category of elements, as category text", [&](const SetFunctor& x) {
        return emit_cat(ctx, elements(x, ctx.cap).cat);
    });

    one_fun("colim", "Colimit: connected components of the elements", [&](const SetFunctor& x) {
        return emit_quotient(ctx, colimit(x));
    });

    one_fun("colim-card", "Colimit cardinality as the weighted sum of set sizes",
            [&](const SetFunctor& x) {
                AffineSolutionSet k = weighting(x.domain);
                if (k.kind == AffineSolutionSet::Kind::None)
                    return negative(ctx, "NO_WEIGHTING",
                                    "'" + x.domain.name() + "' admits no weighting");
                return emit_rat(ctx, "cardinality",
                                colimit_cardinality_via_weighting(x, k.particular));
            });

    one_fun("nondegen", "Diagram-completion test for familial representability",
            [&](const SetFunctor& x) {
                NondegeneracyReport r = is_nondegenerate(x);
                if (!r.nondegenerate) return negative(ctx, "DEGENERATE", r.witness);
                if (ctx.json)
                    emit(ctx, json{{"nondegenerate", true}});
                else
                    emit(ctx, "nondegenerate\n");
                return 0;
            });

    one_fun("fr", "Decompose as a sum of representables", [&](const SetFunctor& x) {
        FRDecomposition fr = fr_decompose(x);
        if (!fr.ok()) return negative(ctx, "NOT_FAMILIALLY_REPRESENTABLE", fr.failure);
        if (ctx.json) {
            json r = json::object(), initials = json::array();
            for (std::uint32_t a = 0; a < x.domain.object_count(); ++a)
                r[x.domain.object_id(a)] = fr.r[a];
            for (const auto& [obj, elem] : fr.initials)
                initials.push_back(element_label(x.domain, obj, x.object_sets[obj][elem]));
            emit(ctx, json{{"r", r}, {"initials", initials}});
            return 0;
        }
        std::ostringstream out;
        for (std::uint32_t a = 0; a < x.domain.object_count(); ++a)
            out << "r(" << x.domain.object_id(a) << ") = " << fr.r[a] << "\n";
        for (const auto& [obj, elem] : fr.initials)
            out << "initial: " << element_label(x.domain, obj, x.object_sets[obj][elem]) << "\n";
        emit(ctx, out.str());
        return 0;
    });

    one_fun("repcoeffs", "Representation coefficients r(a) = sum_b |Xb| mu(b,a)",
            [&](const SetFunctor& x) {
                std::vector<Rat> r = representation_coefficients(x);
                if (ctx.json) {
                    json obj = json::object();
                    for (std::uint32_t a = 0; a < x.domain.object_count(); ++a)
                        obj[x.domain.object_id(a)] = r[a].str();
                    emit(ctx, json{{"r", obj}});
                    return 0;
                }
                std::ostringstream out;
                for (std::uint32_t a = 0; a < x.domain.object_count(); ++a)
                    out << "r(" << x.domain.object_id(a) << ") = " << r[a].str() << "\n";
                emit(ctx, out.str());
                return 0;
            });

    {
        CLI::App* sub = app.add_subcommand(
            "derangements", "Derangement numbers from the symmetric-group action functor");
        sub->add_option("n", count, "Largest size, at most 6 for quick runs")->required();
        sub->callback([&] {
            action = [&] {
                SetFunctor x = build_functor("symmetric_action", {count});
                FRDecomposition fr = fr_decompose(x);
                if (!fr.ok())
                    throw MathError("INTERNAL_ERROR",
                                    "symmetric action failed to decompose: " + fr.failure);
                std::vector<Rat> blind = representation_coefficients(x);
                for (std::uint32_t a = 0; a < x.domain.object_count(); ++a)
                    if (blind[a] != Rat(static_cast<long>(fr.r[a])))
                        throw MathError("INTERNAL_ERROR",
                                        "decomposition and Mobius formula disagree");
                if (ctx.json) {
                    json d = json::array();
                    for (std::uint32_t m : fr.r) d.push_back(m);
                    emit(ctx, json{{"d", d}});
                    return 0;
                }
                std::ostringstream out;
                for (std::uint32_t a = 0; a < x.domain.object_count(); ++a)
                    out << "d_" << x.domain.object_id(a) << " = " << fr.r[a] << "\n";
                emit(ctx, out.str());
                return 0;
            };
        });
    }

    {
        CLI::App* sub = app.add_subcommand(
            "tensor", "Tensor product of a contravariant and a covariant set functor");
        sub->add_option("left", in1, "Functor on the opposite category")->required();
        sub->add_option("right", in2, "Functor on the category")->required();
        sub->callback([&] {
            action = [&] { return emit_quotient(ctx, tensor(load_finfun(in1), load_finfun(in2))); };
        });
    }

    one_fun("chi-elements", "Chi of the elements via the weighted fiber formula",
            [&](const SetFunctor& x) {
                AffineSolutionSet k = weighting(x.domain);
                if (k.kind == AffineSolutionSet::Kind::None)
                    return negative(ctx, "NO_WEIGHTING",
                                    "'" + x.domain.name() + "' admits no weighting");
                return emit_rat(ctx, "chi", chi_of_elements(as_cat_functor(x), k.particular));
            });

    one_endo("fix", "Full subcategory of strict fixed points", [&](const Endofunctor& f) {
        return emit_cat(ctx, fixed_category(f));
    });

    one_endo("lefschetz", "Lefschetz number: chi of the fixed subcategory",
             [&](const Endofunctor& f) {
                 EulerChar lam = lefschetz_number(f);
                 if (!lam.ok())
                     return negative(ctx, lam.reason,
                                     "the fixed category has no Euler characteristic");
                 return emit_rat(ctx, "lefschetz", *lam.value);
             });

    one_endo("alg", "Category of algebras (a, h: Fa -> a)", [&](const Endofunctor& f) {
        return emit_cat(ctx, algebra_category(f, ctx.cap));
    });

    one_endo("coalg", "Category of coalgebras (a, h: a -> Fa)", [&](const Endofunctor& f) {
        return emit_cat(ctx, coalgebra_category(f, ctx.cap));
    });

    one_cat("op", "Opposite category", [&](const FinCat& c) { return emit_cat(ctx, opposite(c)); });

    {
        CLI::App* sub = app.add_subcommand("sum", "Disjoint union of categories");
        sub->add_option("categories", inputs, "Category files")->required()->expected(-1);
        sub->callback([&] {
            action = [&] {
                std::vector<FinCat> cats;
                for (const std::string& path : inputs) cats.push_back(load_cat(path));
                return emit_cat(ctx, sum(cats));
            };
        });
    }

    {
        CLI::App* sub = app.add_subcommand("product", "Product of categories");
        sub->add_option("categories", inputs, "Category files")->required()->expected(-1);
        sub->callback([&] {
            action = [&] {
                std::vector<FinCat> cats;
                for (const std::string& path : inputs) cats.push_back(load_cat(path));
                return emit_cat(ctx, product(cats, ctx.cap));
            };
        });
    }

    {
        CLI::App* sub = app.add_subcommand("interval", "Full subcategory of a two-sided hom slice");
        sub->add_option("category", in1, "Category file, or - for stdin")->required();
        sub->add_option("from", in2, "Lower object")->required();
        sub->add_option("to", in3, "Upper object")->required();
        sub->callback(
            [&] { action = [&] { return emit_cat(ctx, interval(load_cat(in1), in2, in3)); }; });
    }

    {
        CLI::App* sub = app.add_subcommand("adjoin", "Freely adjoin an initial/terminal object");
        sub->add_option("category", in1, "Category file, or - for stdin")->required();
        sub->add_flag("--initial", adjoin_initial, "Adjoin a fresh initial object");
        sub->add_flag("--terminal", adjoin_terminal, "Adjoin a fresh terminal object");
        sub->callback([&] {
            action = [&] {
                if (!adjoin_initial && !adjoin_terminal)
                    throw InputError("PARAM_OUT_OF_RANGE",
                                     "pass --initial, --terminal, or both");
                return emit_cat(ctx, adjoin_bounds(load_cat(in1), adjoin_initial, adjoin_terminal));
            };
        });
    }

    {
        CLI::App* sub = app.add_subcommand("collage", "Collage of a profunctor");
        sub->add_option("profunctor", in1, "Profunctor file")->required();
        sub->callback(
            [&] { action = [&] { return emit_cat(ctx, collage(parse_profun(in1), ctx.cap)); }; });
    }

    {
        CLI::App* sub = app.add_subcommand("free-cat", "Free category on a circuit-free graph");
        sub->add_option("graph", in1, "Graph file, or - for stdin")->required();
        sub->callback(
            [&] { action = [&] { return emit_cat(ctx, free_category(load_graph(in1), ctx.cap)); }; });
    }

    one_cat("cll", "Arrow-level Mobius function under convolution", [&](const FinCat& c) {
        CllResult r = cll_mobius(c);
        if (!r.ok())
            return negative(ctx, "NOT_INVERTIBLE",
                            "'" + c.name() + "' has no arrow-level Mobius function");
        QMat agg = cll_aggregate(c, *r.values);
        if (ctx.json) {
            json mu = json::object();
            for (std::uint32_t f = 0; f < c.arrow_count(); ++f)
                mu[c.arrow(f).id] = (*r.values)[f].str();
            emit(ctx, json{{"mu", mu}, {"aggregate", mat_json(agg)}});
            return 0;
        }
        std::ostringstream out;
        for (std::uint32_t f = 0; f < c.arrow_count(); ++f)
            out << "mu(" << c.arrow(f).id << ") = " << (*r.values)[f].str() << "\n";
        out << "aggregate:\n" << agg.to_text();
        emit(ctx, out.str());
        return 0;
    });

    {
        CLI::App* sub = app.add_subcommand(
            "galois-check", "Mobius identity across a Galois connection between posets");
        sub->add_option("lower", in1, "Left poset file")->required();
        sub->add_option("upper", in2, "Right poset file")->required();
        sub->add_option("f", in3, "Object map file, lower -> upper")->required();
        sub->add_option("g", in4, "Object map file, upper -> lower")->required();
        sub->callback([&] {
            action = [&] {
                FinCat a = load_cat(in1), b = load_cat(in2);
                std::vector<std::uint32_t> f = parse_objmap(read_input(in3), a, b);
                std::vector<std::uint32_t> g = parse_objmap(read_input(in4), b, a);
                GaloisReport report = galois_identity_check(a, b, f, g);
                if (!report.holds) {
                    if (ctx.json) {
                        emit(ctx, json{{"error", "GALOIS_IDENTITY_FAILED"},
                                       {"violations", report.violations}});
                        return 1;
                    }
                    std::ostringstream out;
                    out << "GALOIS_IDENTITY_FAILED: " << report.violations.size()
                        << " pair(s) disagree\n";
                    for (const std::string& v : report.violations) out << v << "\n";
                    emit(ctx, out.str());
                    return 1;
                }
                std::size_t pairs = a.object_count() * b.object_count();
                if (ctx.json)
                    emit(ctx, json{{"ok", true}, {"pairs", pairs}});
                else
                    emit(ctx, "ok: identity holds at all " + std::to_string(pairs) + " pairs\n");
                return 0;
            };
        });
    }

    {
        CLI::App* sub =
            app.add_subcommand("build", "Materialize a catalog category or functor as text");
        sub->add_option("name", name, "Catalog entry name")->required();
        sub->add_option("params", params, "Integer parameters");
        sub->callback([&] {
            action = [&] {
                for (const char* fn :
                     {"symmetric_action", "group_action", "intersection_diagram", "pushout_data"})
                    if (name == fn) {
                        SetFunctor x = build_functor(name, params);
                        std::string text = self_contained(x);
                        if (ctx.json)
                            emit(ctx, json{{"name", name}, {"domain", x.domain.name()},
                                           {"text", text}});
                        else
                            emit(ctx, text);
                        return 0;
                    }
                return emit_cat(ctx, build_catalog(name, params));
            };
        });
    }

    {
        CLI::App* sub = app.add_subcommand("verify", "Run the built-in invariant suite");
        sub->callback([&] { action = [&] { return run_verify(ctx); }; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return action();
    } catch (const InputError& e) {
        std::cerr << "error: " << e.code() << ": " << e.what() << "\n";
        return 2;
    } catch (const MathError& e) {
        return negative(ctx, e.code(), e.what());
    }
}

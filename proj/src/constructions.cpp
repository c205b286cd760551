#include "eulercat/constructions.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace eulercat {

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

}  // namespace

std::optional<std::string> graph_violation(const DirectedGraph& g) {
    std::set<std::string> seen;
    for (const auto& v : g.vertices)
        if (!seen.insert(v).second) return "vertex '" + v + "' declared twice";
    std::set<std::string> eseen;
    for (const auto& e : g.edges) {
        if (!eseen.insert(e.id).second) return "edge '" + e.id + "' declared twice";
        if (!seen.contains(e.src) || !seen.contains(e.tgt))
            return "edge '" + e.id + "' touches an undeclared vertex";
    }
    return std::nullopt;
}

FinCat opposite(const FinCat& c) {
    CatSpec s;
    s.name = c.name() + "^op";
    s.objects = c.objects();
    for (const Arrow& a : c.arrows())
        s.arrows.push_back({a.id, c.object_id(a.tgt), c.object_id(a.src)});
    for (std::uint32_t x = 0; x < c.object_count(); ++x)
        s.identities.emplace(c.object_id(x), c.arrow(c.identity(x)).id);
    for (std::uint32_t f = 0; f < c.arrow_count(); ++f)
        for (std::uint32_t g = 0; g < c.arrow_count(); ++g) {
            if (!c.composable(f, g)) continue;  // f∘g in c is g∘f in c^op
            s.composites.push_back({c.arrow(g).id, c.arrow(f).id, c.arrow(c.compose(f, g)).id});
        }
    return FinCat::build(std::move(s));
}

FinCat sum(const std::vector<FinCat>& cats) {
    CatSpec s;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < cats.size(); ++i) {
        const FinCat& c = cats[i];
        names.push_back(c.name());
        const std::string p = "c" + std::to_string(i) + ".";
        for (const auto& o : c.objects()) s.objects.push_back(p + o);
        for (const Arrow& a : c.arrows())
            s.arrows.push_back({p + a.id, p + c.object_id(a.src), p + c.object_id(a.tgt)});
        for (std::uint32_t x = 0; x < c.object_count(); ++x)
            s.identities.emplace(p + c.object_id(x), p + c.arrow(c.identity(x)).id);
        for (std::uint32_t f = 0; f < c.arrow_count(); ++f)
            for (std::uint32_t g = 0; g < c.arrow_count(); ++g) {
                if (!c.composable(g, f)) continue;
                s.composites.push_back(
                    {p + c.arrow(g).id, p + c.arrow(f).id, p + c.arrow(c.compose(g, f)).id});
            }
    }
    s.name = "sum(" + join(names, ",") + ")";
    return FinCat::build(std::move(s));
}

FinCat product(const std::vector<FinCat>& cats, std::size_t arrow_cap) {
    const std::size_t k = cats.size();
    CatSpec s;
    std::vector<std::string> names;
    std::size_t n_arrows = 1;
    for (const FinCat& c : cats) {
        names.push_back(c.name());
        if (c.arrow_count() == 0)
            n_arrows = 0;
        else if (n_arrows > arrow_cap / c.arrow_count())
            throw InputError("SIZE_OVERFLOW", "product exceeds the arrow cap of " +
                                                  std::to_string(arrow_cap));
        else
            n_arrows *= c.arrow_count();
    }
    s.name = "(" + join(names, "*") + ")";

    auto tuple_id = [&](auto&& part) {
        std::vector<std::string> parts;
        for (std::size_t i = 0; i < k; ++i) parts.push_back(part(i));
        return "(" + join(parts, "*") + ")";
    };

    // Odometer over per-factor index ranges, last factor fastest.
    auto for_tuples = [&](const std::vector<std::size_t>& sizes, auto&& visit) {
        if (std::any_of(sizes.begin(), sizes.end(), [](std::size_t n) { return n == 0; }))
            return;
        std::vector<std::size_t> idx(sizes.size(), 0);
        while (true) {
            visit(idx);
            std::size_t pos = sizes.size();
            while (pos > 0) {
                if (++idx[pos - 1] < sizes[pos - 1]) break;
                idx[--pos] = 0;
            }
            if (pos == 0) break;
        }
    };

    std::vector<std::size_t> obj_sizes, arr_sizes;
    for (const FinCat& c : cats) {
        obj_sizes.push_back(c.object_count());
        arr_sizes.push_back(c.arrow_count());
    }
    for_tuples(obj_sizes, [&](const std::vector<std::size_t>& idx) {
        std::string obj = tuple_id([&](std::size_t i) { return cats[i].object_id(idx[i]); });
        s.objects.push_back(obj);
        s.identities.emplace(obj, tuple_id([&](std::size_t i) {
                                 return cats[i].arrow(cats[i].identity(idx[i])).id;
                             }));
    });
    for_tuples(arr_sizes, [&](const std::vector<std::size_t>& idx) {
        s.arrows.push_back(
            {tuple_id([&](std::size_t i) { return cats[i].arrow(idx[i]).id; }),
             tuple_id([&](std::size_t i) { return cats[i].object_id(cats[i].arrow(idx[i]).src); }),
             tuple_id([&](std::size_t i) { return cats[i].object_id(cats[i].arrow(idx[i]).tgt); })});
    });

    // Composable pairs of the product are tuples of composable pairs.
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> pairs(k);
    std::vector<std::size_t> pair_sizes;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::uint32_t f = 0; f < cats[i].arrow_count(); ++f)
            for (std::uint32_t g = 0; g < cats[i].arrow_count(); ++g)
                if (cats[i].composable(g, f)) pairs[i].push_back({g, f});
        pair_sizes.push_back(pairs[i].size());
    }
    for_tuples(pair_sizes, [&](const std::vector<std::size_t>& idx) {
        s.composites.push_back(
            {tuple_id([&](std::size_t i) { return cats[i].arrow(pairs[i][idx[i]].first).id; }),
             tuple_id([&](std::size_t i) { return cats[i].arrow(pairs[i][idx[i]].second).id; }),
             tuple_id([&](std::size_t i) {
                 return cats[i].arrow(cats[i].compose(pairs[i][idx[i]].first, pairs[i][idx[i]].second)).id;
             })});
    });

    return FinCat::build(std::move(s));
}

FinCat interval(const FinCat& c, std::string_view a_id, std::string_view c_id) {
    const std::uint32_t a = c.object_at(a_id);
    const std::uint32_t cc = c.object_at(c_id);
    std::vector<bool> keep(c.object_count(), false);
    for (std::uint32_t b = 0; b < c.object_count(); ++b)
        keep[b] = !c.hom(a, b).empty() && !c.hom(b, cc).empty();

    CatSpec s;
    s.name = c.name() + "[" + std::string(a_id) + "," + std::string(c_id) + "]";
    for (std::uint32_t x = 0; x < c.object_count(); ++x)
        if (keep[x]) {
            s.objects.push_back(c.object_id(x));
            s.identities.emplace(c.object_id(x), c.arrow(c.identity(x)).id);
        }
    std::vector<bool> keep_arr(c.arrow_count(), false);
    for (std::uint32_t f = 0; f < c.arrow_count(); ++f) {
        const Arrow& ar = c.arrow(f);
        if (keep[ar.src] && keep[ar.tgt]) {
            keep_arr[f] = true;
            s.arrows.push_back({ar.id, c.object_id(ar.src), c.object_id(ar.tgt)});
        }
    }
    for (std::uint32_t f = 0; f < c.arrow_count(); ++f) {
        if (!keep_arr[f]) continue;
        for (std::uint32_t g = 0; g < c.arrow_count(); ++g) {
            if (!keep_arr[g] || !c.composable(g, f)) continue;
            s.composites.push_back({c.arrow(g).id, c.arrow(f).id, c.arrow(c.compose(g, f)).id});
        }
    }
    return FinCat::build(std::move(s));
}

FinCat adjoin_bounds(const FinCat& c, bool initial, bool terminal) {
    auto fresh_obj = [&](std::string base) {
        while (c.object_index(base)) base += "_";
        return base;
    };
    auto fresh_arr = [&](std::string base) {
        while (c.arrow_index(base)) base += "_";
        return base;
    };
    const std::string zero = fresh_obj("0");
    const std::string one = fresh_obj("1");

    CatSpec s = c.to_spec();
    s.name = c.name() + (initial ? "+0" : "") + (terminal ? "+1" : "");
    if (initial) s.objects.insert(s.objects.begin(), zero);
    if (terminal) s.objects.push_back(one);

    std::vector<std::string> from0(c.object_count()), to1(c.object_count());
    if (initial)
        for (std::uint32_t x = 0; x < c.object_count(); ++x) {
            from0[x] = fresh_arr(zero + "_to_" + c.object_id(x));
            s.arrows.push_back({from0[x], zero, c.object_id(x)});
        }
    if (terminal)
        for (std::uint32_t x = 0; x < c.object_count(); ++x) {
            to1[x] = fresh_arr(c.object_id(x) + "_to_" + one);
            s.arrows.push_back({to1[x], c.object_id(x), one});
        }
    std::string zero_to_one;
    if (initial && terminal) {
        zero_to_one = fresh_arr(zero + "_to_" + one);
        s.arrows.push_back({zero_to_one, zero, one});
    }

    for (std::uint32_t f = 0; f < c.arrow_count(); ++f) {
        const Arrow& ar = c.arrow(f);
        if (initial && !c.is_identity(f))
            s.composites.push_back({ar.id, from0[ar.src], from0[ar.tgt]});
        if (terminal && !c.is_identity(f))
            s.composites.push_back({to1[ar.tgt], ar.id, to1[ar.src]});
    }
    if (initial && terminal)
        for (std::uint32_t x = 0; x < c.object_count(); ++x)
            s.composites.push_back({to1[x], from0[x], zero_to_one});
    return FinCat::build(std::move(s));
}

std::optional<std::string> profunctor_violation(const Profunctor& m) {
    const FinCat &B = m.b, &A = m.a;
    if (m.elems.size() != B.object_count()) return "element table has wrong height";
    for (const auto& row : m.elems)
        if (row.size() != A.object_count()) return "element table has wrong width";
    if (m.left.size() != B.arrow_count() || m.right.size() != A.arrow_count())
        return "action tables do not match the arrow counts";

    for (std::uint32_t f = 0; f < B.arrow_count(); ++f) {
        if (m.left[f].size() != A.object_count()) return "left action of '" + B.arrow(f).id + "' has wrong width";
        for (std::uint32_t ai = 0; ai < A.object_count(); ++ai) {
            const auto& map = m.left[f][ai];
            if (map.size() != m.elems[B.arrow(f).tgt][ai].size())
                return "left action of '" + B.arrow(f).id + "' has wrong domain size";
            for (std::uint32_t v : map)
                if (v >= m.elems[B.arrow(f).src][ai].size())
                    return "left action of '" + B.arrow(f).id + "' leaves its codomain";
        }
    }
    for (std::uint32_t g = 0; g < A.arrow_count(); ++g) {
        if (m.right[g].size() != B.object_count()) return "right action of '" + A.arrow(g).id + "' has wrong width";
        for (std::uint32_t bi = 0; bi < B.object_count(); ++bi) {
            const auto& map = m.right[g][bi];
            if (map.size() != m.elems[bi][A.arrow(g).src].size())
                return "right action of '" + A.arrow(g).id + "' has wrong domain size";
            for (std::uint32_t v : map)
                if (v >= m.elems[bi][A.arrow(g).tgt].size())
                    return "right action of '" + A.arrow(g).id + "' leaves its codomain";
        }
    }

    for (std::uint32_t x = 0; x < B.object_count(); ++x)
        for (std::uint32_t ai = 0; ai < A.object_count(); ++ai) {
            const auto& map = m.left[B.identity(x)][ai];
            for (std::uint32_t i = 0; i < map.size(); ++i)
                if (map[i] != i) return "identity of '" + B.object_id(x) + "' does not act trivially";
        }
    for (std::uint32_t x = 0; x < A.object_count(); ++x)
        for (std::uint32_t bi = 0; bi < B.object_count(); ++bi) {
            const auto& map = m.right[A.identity(x)][bi];
            for (std::uint32_t i = 0; i < map.size(); ++i)
                if (map[i] != i) return "identity of '" + A.object_id(x) + "' does not act trivially";
        }

    // Contravariant functoriality: M(f2∘f1) = M(f1)∘M(f2).
    for (std::uint32_t f1 = 0; f1 < B.arrow_count(); ++f1)
        for (std::uint32_t f2 = 0; f2 < B.arrow_count(); ++f2) {
            if (!B.composable(f2, f1)) continue;
            const std::uint32_t f21 = B.compose(f2, f1);
            for (std::uint32_t ai = 0; ai < A.object_count(); ++ai)
                for (std::uint32_t kk = 0; kk < m.left[f21][ai].size(); ++kk)
                    if (m.left[f21][ai][kk] != m.left[f1][ai][m.left[f2][ai][kk]])
                        return "left action not functorial on (" + B.arrow(f2).id + ", " +
                               B.arrow(f1).id + ")";
        }
    for (std::uint32_t g1 = 0; g1 < A.arrow_count(); ++g1)
        for (std::uint32_t g2 = 0; g2 < A.arrow_count(); ++g2) {
            if (!A.composable(g2, g1)) continue;
            const std::uint32_t g21 = A.compose(g2, g1);
            for (std::uint32_t bi = 0; bi < B.object_count(); ++bi)
                for (std::uint32_t kk = 0; kk < m.right[g21][bi].size(); ++kk)
                    if (m.right[g21][bi][kk] != m.right[g2][bi][m.right[g1][bi][kk]])
                        return "right action not functorial on (" + A.arrow(g2).id + ", " +
                               A.arrow(g1).id + ")";
        }

    for (std::uint32_t f = 0; f < B.arrow_count(); ++f)
        for (std::uint32_t g = 0; g < A.arrow_count(); ++g) {
            const std::uint32_t b1 = B.arrow(f).src, b2 = B.arrow(f).tgt;
            const std::uint32_t a1 = A.arrow(g).src, a2 = A.arrow(g).tgt;
            for (std::uint32_t kk = 0; kk < m.left[f][a1].size(); ++kk)
                if (m.right[g][b1][m.left[f][a1][kk]] != m.left[f][a2][m.right[g][b2][kk]])
                    return "actions of '" + B.arrow(f).id + "' and '" + A.arrow(g).id +
                           "' do not commute";
        }
    return std::nullopt;
}

FinCat collage(const Profunctor& m, std::size_t arrow_cap) {
    if (auto why = profunctor_violation(m))
        throw InputError("NOT_A_PROFUNCTOR", *why);
    const FinCat &B = m.b, &A = m.a;

    CatSpec s;
    s.name = "collage(" + B.name() + "," + A.name() + ")";
    for (const auto& o : B.objects()) s.objects.push_back("B." + o);
    for (const auto& o : A.objects()) s.objects.push_back("A." + o);
    for (const Arrow& ar : B.arrows())
        s.arrows.push_back({"B." + ar.id, "B." + B.object_id(ar.src), "B." + B.object_id(ar.tgt)});
    for (const Arrow& ar : A.arrows())
        s.arrows.push_back({"A." + ar.id, "A." + A.object_id(ar.src), "A." + A.object_id(ar.tgt)});
    for (std::uint32_t x = 0; x < B.object_count(); ++x)
        s.identities.emplace("B." + B.object_id(x), "B." + B.arrow(B.identity(x)).id);
    for (std::uint32_t x = 0; x < A.object_count(); ++x)
        s.identities.emplace("A." + A.object_id(x), "A." + A.arrow(A.identity(x)).id);

    auto cross_id = [&](std::uint32_t bi, std::uint32_t ai, std::uint32_t e) {
        return "m@" + B.object_id(bi) + ">" + A.object_id(ai) + "." + m.elems[bi][ai][e];
    };
    std::size_t total = B.arrow_count() + A.arrow_count();
    for (std::uint32_t bi = 0; bi < B.object_count(); ++bi)
        for (std::uint32_t ai = 0; ai < A.object_count(); ++ai) {
            total += m.elems[bi][ai].size();
            for (std::uint32_t e = 0; e < m.elems[bi][ai].size(); ++e)
                s.arrows.push_back(
                    {cross_id(bi, ai, e), "B." + B.object_id(bi), "A." + A.object_id(ai)});
        }
    if (total > arrow_cap)
        throw InputError("SIZE_OVERFLOW",
                         "collage exceeds the arrow cap of " + std::to_string(arrow_cap));

    auto copy_internal = [&](const FinCat& c, const std::string& p) {
        for (std::uint32_t f = 0; f < c.arrow_count(); ++f)
            for (std::uint32_t g = 0; g < c.arrow_count(); ++g) {
                if (!c.composable(g, f)) continue;
                s.composites.push_back(
                    {p + c.arrow(g).id, p + c.arrow(f).id, p + c.arrow(c.compose(g, f)).id});
            }
    };
    copy_internal(B, "B.");
    copy_internal(A, "A.");

    for (std::uint32_t bi = 0; bi < B.object_count(); ++bi)
        for (std::uint32_t ai = 0; ai < A.object_count(); ++ai)
            for (std::uint32_t e = 0; e < m.elems[bi][ai].size(); ++e) {
                for (std::uint32_t f = 0; f < B.arrow_count(); ++f) {
                    if (B.arrow(f).tgt != bi) continue;  // m ∘ f
                    s.composites.push_back({cross_id(bi, ai, e), "B." + B.arrow(f).id,
                                            cross_id(B.arrow(f).src, ai, m.left[f][ai][e])});
                }
                for (std::uint32_t g = 0; g < A.arrow_count(); ++g) {
                    if (A.arrow(g).src != ai) continue;  // g ∘ m
                    s.composites.push_back({"A." + A.arrow(g).id, cross_id(bi, ai, e),
                                            cross_id(bi, A.arrow(g).tgt, m.right[g][bi][e])});
                }
            }
    return FinCat::build(std::move(s));
}

FinCat free_category(const DirectedGraph& g, std::size_t arrow_cap) {
    if (auto why = graph_violation(g)) throw InputError("BAD_GRAPH", *why);

    std::vector<std::string> order = g.vertices;
    std::unordered_map<std::string, std::uint32_t> vid;
    for (std::uint32_t i = 0; i < order.size(); ++i) vid.emplace(order[i], i);

    // Cycle detection by coloring; the witness lists the edges around the cycle.
    std::vector<std::vector<std::uint32_t>> out(order.size());
    for (std::uint32_t e = 0; e < g.edges.size(); ++e) out[vid[g.edges[e].src]].push_back(e);
    std::vector<int> color(order.size(), 0);
    std::vector<std::uint32_t> stack_edges;
    auto dfs = [&](auto&& self, std::uint32_t v) -> std::optional<std::string> {
        color[v] = 1;
        for (std::uint32_t e : out[v]) {
            const std::uint32_t w = vid[g.edges[e].tgt];
            if (color[w] == 1) {
                std::vector<std::string> cyc{g.edges[e].id};
                for (auto it = stack_edges.rbegin(); it != stack_edges.rend(); ++it) {
                    cyc.push_back(g.edges[*it].id);
                    if (vid[g.edges[*it].src] == w) break;
                }
                std::reverse(cyc.begin(), cyc.end());
                return "cycle through edges: " + join(cyc, ", ");
            }
            if (color[w] == 0) {
                stack_edges.push_back(e);
                if (auto r = self(self, w)) return r;
                stack_edges.pop_back();
            }
        }
        color[v] = 2;
        return std::nullopt;
    };
    for (std::uint32_t v = 0; v < order.size(); ++v)
        if (color[v] == 0)
            if (auto r = dfs(dfs, v)) throw InputError("CYCLIC_GRAPH", *r);

    struct Path {
        std::vector<std::uint32_t> edges;
        std::uint32_t src, tgt;
    };
    std::vector<Path> paths;
    for (std::uint32_t e = 0; e < g.edges.size(); ++e)
        paths.push_back({{e}, vid[g.edges[e].src], vid[g.edges[e].tgt]});
    for (std::size_t head = 0; head < paths.size(); ++head) {
        for (std::uint32_t e : out[paths[head].tgt]) {
            Path p = paths[head];
            p.edges.push_back(e);
            p.tgt = vid[g.edges[e].tgt];
            paths.push_back(std::move(p));
            if (paths.size() + order.size() > arrow_cap)
                throw InputError("SIZE_OVERFLOW",
                                 "free category exceeds the arrow cap of " +
                                     std::to_string(arrow_cap));
        }
    }
    if (paths.size() + order.size() > arrow_cap)
        throw InputError("SIZE_OVERFLOW", "free category exceeds the arrow cap of " +
                                              std::to_string(arrow_cap));
    auto path_id = [&](const std::vector<std::uint32_t>& edges) {
        std::vector<std::string> ids;
        for (std::uint32_t e : edges) ids.push_back(g.edges[e].id);
        return join(ids, ";");
    };

    CatSpec s;
    s.name = "free";
    s.objects = order;
    for (const Path& p : paths)
        s.arrows.push_back({path_id(p.edges), order[p.src], order[p.tgt]});
    for (const Path& f : paths)
        for (const Path& gg : paths) {
            if (f.tgt != gg.src) continue;
            std::vector<std::uint32_t> cat = f.edges;
            cat.insert(cat.end(), gg.edges.begin(), gg.edges.end());
            s.composites.push_back({path_id(gg.edges), path_id(f.edges), path_id(cat)});
        }
    return FinCat::build(std::move(s));
}

}  // namespace eulercat

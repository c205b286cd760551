#include "eulercat/functors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "eulercat/mobius.hpp"

namespace eulercat {

namespace {

struct UnionFind {
    std::vector<std::uint32_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0u);
    }
    std::uint32_t find(std::uint32_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    void unite(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }
};

SetQuotient quotient_from(std::vector<std::string> labels, UnionFind& uf) {
    SetQuotient q;
    q.labels = std::move(labels);
    std::map<std::uint32_t, std::string> least;  // root -> least member label
    for (std::uint32_t i = 0; i < q.labels.size(); ++i) {
        auto [it, fresh] = least.try_emplace(uf.find(i), q.labels[i]);
        if (!fresh && q.labels[i] < it->second) it->second = q.labels[i];
    }
    for (const auto& [root, name] : least) q.representatives.push_back(name);
    std::sort(q.representatives.begin(), q.representatives.end());
    std::map<std::string, std::uint32_t> pos;
    for (std::uint32_t i = 0; i < q.representatives.size(); ++i)
        pos.emplace(q.representatives[i], i);
    q.component.resize(q.labels.size());
    for (std::uint32_t i = 0; i < q.labels.size(); ++i)
        q.component[i] = pos.at(least.at(uf.find(i)));
    return q;
}

void require_set_functor(const SetFunctor& x) {
    if (auto why = set_functor_violation(x)) throw InputError("NOT_A_FUNCTOR", *why);
}

// Flattened indexing of the elements of a SetFunctor.
struct ElementIndex {
    std::vector<std::size_t> offset;
    std::size_t total = 0;
    explicit ElementIndex(const SetFunctor& x) {
        offset.reserve(x.object_sets.size());
        for (const auto& set : x.object_sets) {
            offset.push_back(total);
            total += set.size();
        }
    }
    std::size_t at(std::uint32_t obj, std::uint32_t elem) const { return offset[obj] + elem; }
};

std::vector<std::string> flat_labels(const SetFunctor& x) {
    std::vector<std::string> labels;
    for (std::uint32_t a = 0; a < x.domain.object_count(); ++a)
        for (const std::string& e : x.object_sets[a])
            labels.push_back(element_label(x.domain, a, e));
    return labels;
}

}  // namespace

std::string element_label(const FinCat& c, std::uint32_t obj, const std::string& elem) {
    return c.object_id(obj) + "@" + elem;
}

std::optional<std::string> set_functor_violation(const SetFunctor& x) {
    const FinCat& c = x.domain;
    if (x.object_sets.size() != c.object_count()) return "one element set per object required";
    if (x.arrow_actions.size() != c.arrow_count()) return "one action per arrow required";
    for (std::uint32_t a = 0; a < c.object_count(); ++a) {
        std::set<std::string> seen;
        for (const std::string& e : x.object_sets[a])
            if (!seen.insert(e).second)
                return "element '" + e + "' repeats at '" + c.object_id(a) + "'";
    }
    for (std::uint32_t f = 0; f < c.arrow_count(); ++f) {
        const Arrow& ar = c.arrow(f);
        const auto& act = x.arrow_actions[f];
        if (act.size() != x.object_sets[ar.src].size())
            return "action of '" + ar.id + "' has the wrong source size";
        for (std::uint32_t v : act)
            if (v >= x.object_sets[ar.tgt].size())
                return "action of '" + ar.id + "' leaves the target set";
        if (c.is_identity(f))
            for (std::uint32_t i = 0; i < act.size(); ++i)
                if (act[i] != i) return "identity '" + ar.id + "' does not act as identity";
    }
    for (std::uint32_t f = 0; f < c.arrow_count(); ++f)
        for (std::uint32_t g = 0; g < c.arrow_count(); ++g) {
            if (!c.composable(g, f)) continue;
            const auto& via = x.arrow_actions[c.compose(g, f)];
            for (std::uint32_t i = 0; i < x.arrow_actions[f].size(); ++i)
                if (via[i] != x.arrow_actions[g][x.arrow_actions[f][i]])
                    return "actions of ('" + c.arrow(f).id + "', '" + c.arrow(g).id +
                           "') do not compose";
        }
    return std::nullopt;
}

std::optional<std::string> cat_functor_violation(const CatFunctor& x) {
    const FinCat& c = x.domain;
    if (x.object_cats.size() != c.object_count()) return "one category per object required";
    if (x.arrow_actions.size() != c.arrow_count()) return "one functor per arrow required";
    for (std::uint32_t f = 0; f < c.arrow_count(); ++f) {
        const Arrow& ar = c.arrow(f);
        if (auto why = functor_violation(x.object_cats[ar.src], x.object_cats[ar.tgt],
                                         x.arrow_actions[f]))
            return "action of '" + ar.id + "': " + *why;
        if (c.is_identity(f) && !(x.arrow_actions[f] == identity_cat_map(x.object_cats[ar.src])))
            return "identity '" + ar.id + "' does not act as the identity functor";
    }
    for (std::uint32_t f = 0; f < c.arrow_count(); ++f)
        for (std::uint32_t g = 0; g < c.arrow_count(); ++g) {
            if (!c.composable(g, f)) continue;
            if (!(x.arrow_actions[c.compose(g, f)] ==
                  compose_cat_maps(x.arrow_actions[g], x.arrow_actions[f])))
                return "actions of ('" + c.arrow(f).id + "', '" + c.arrow(g).id +
                       "') do not compose";
        }
    return std::nullopt;
}

ElementsCategory elements(const SetFunctor& x, std::size_t arrow_cap) {
    require_set_functor(x);
    const FinCat& c = x.domain;

    std::size_t n_arrows = 0;
    for (std::uint32_t f = 0; f < c.arrow_count(); ++f)
        n_arrows += x.arrow_actions[f].size();
    if (n_arrows > arrow_cap)
        throw InputError("SIZE_OVERFLOW",
                         "elements category exceeds the arrow cap of " + std::to_string(arrow_cap));

    ElementsCategory e;
    CatSpec s;
    s.name = "elt(" + c.name() + ")";
    auto obj_label = [&](std::uint32_t a, std::uint32_t xi) {
        return element_label(c, a, x.object_sets[a][xi]);
    };
    for (std::uint32_t a = 0; a < c.object_count(); ++a)
        for (std::uint32_t xi = 0; xi < x.object_sets[a].size(); ++xi) {
            s.objects.push_back(obj_label(a, xi));
            e.object_over.push_back(a);
            e.object_fiber.push_back(xi);
        }
    auto arr_label = [&](std::uint32_t f, std::uint32_t xi) {
        return c.arrow(f).id + "@" + x.object_sets[c.arrow(f).src][xi];
    };
    for (std::uint32_t f = 0; f < c.arrow_count(); ++f) {
        const Arrow& ar = c.arrow(f);
        for (std::uint32_t xi = 0; xi < x.arrow_actions[f].size(); ++xi) {
            s.arrows.push_back({arr_label(f, xi), obj_label(ar.src, xi),
                                obj_label(ar.tgt, x.arrow_actions[f][xi])});
            e.to_base.arr_map.push_back(f);
        }
    }
    for (std::uint32_t a = 0; a < c.object_count(); ++a)
        for (std::uint32_t xi = 0; xi < x.object_sets[a].size(); ++xi)
            s.identities.emplace(obj_label(a, xi), arr_label(c.identity(a), xi));
    for (std::uint32_t f = 0; f < c.arrow_count(); ++f)
        for (std::uint32_t g = 0; g < c.arrow_count(); ++g) {
            if (!c.composable(g, f)) continue;
            const std::uint32_t gf = c.compose(g, f);
            for (std::uint32_t xi = 0; xi < x.arrow_actions[f].size(); ++xi)
                s.composites.push_back({arr_label(g, x.arrow_actions[f][xi]), arr_label(f, xi),
                                        arr_label(gf, xi)});
        }
    e.to_base.obj_map = e.object_over;
    e.cat = FinCat::build(std::move(s));
    return e;
}

ElementsCategory elements(const CatFunctor& x, std::size_t arrow_cap) {
    if (auto why = cat_functor_violation(x)) throw InputError("NOT_A_FUNCTOR", *why);
    const FinCat& c = x.domain;

    ElementsCategory e;
    CatSpec s;
    s.name = "elt(" + c.name() + ")";
    auto obj_label = [&](std::uint32_t a, std::uint32_t xi) {
        return element_label(c, a, x.object_cats[a].object_id(xi));
    };
    for (std::uint32_t a = 0; a < c.object_count(); ++a)
        for (std::uint32_t xi = 0; xi < x.object_cats[a].object_count(); ++xi) {
            s.objects.push_back(obj_label(a, xi));
            e.object_over.push_back(a);
            e.object_fiber.push_back(xi);
        }

    // Arrows (a, x) -> (a', x') are pairs (f, xi) with f: a -> a' and
    // xi: (Xf)(x) -> x' in the fiber over a'.
    auto arr_label = [&](std::uint32_t f, std::uint32_t xi, std::uint32_t fib) {
        const Arrow& ar = c.arrow(f);
        return ar.id + "@" + x.object_cats[ar.src].object_id(xi) + "@" +
               x.object_cats[ar.tgt].arrow(fib).id;
    };
    std::size_t n_arrows = 0;
    for (std::uint32_t f = 0; f < c.arrow_count(); ++f) {
        const Arrow& ar = c.arrow(f);
        const FinCat& fib = x.object_cats[ar.tgt];
        for (std::uint32_t xi = 0; xi < x.object_cats[ar.src].object_count(); ++xi) {
            const std::uint32_t image = x.arrow_actions[f].obj_map[xi];
            for (std::uint32_t t = 0; t < fib.arrow_count(); ++t) {
                if (fib.arrow(t).src != image) continue;
                if (++n_arrows > arrow_cap)
                    throw InputError("SIZE_OVERFLOW",
                                     "elements category exceeds the arrow cap of " +
                                         std::to_string(arrow_cap));
                s.arrows.push_back(
                    {arr_label(f, xi, t), obj_label(ar.src, xi), obj_label(ar.tgt, fib.arrow(t).tgt)});
                e.to_base.arr_map.push_back(f);
            }
        }
    }
    for (std::uint32_t a = 0; a < c.object_count(); ++a)
        for (std::uint32_t xi = 0; xi < x.object_cats[a].object_count(); ++xi)
            s.identities.emplace(obj_label(a, xi),
                                 arr_label(c.identity(a), xi, x.object_cats[a].identity(xi)));
    for (std::uint32_t f = 0; f < c.arrow_count(); ++f)
        for (std::uint32_t g = 0; g < c.arrow_count(); ++g) {
            if (!c.composable(g, f)) continue;
            const std::uint32_t gf = c.compose(g, f);
            const Arrow& fa = c.arrow(f);
            const Arrow& ga = c.arrow(g);
            const FinCat& mid = x.object_cats[fa.tgt];
            const FinCat& top = x.object_cats[ga.tgt];
            for (std::uint32_t xi = 0; xi < x.object_cats[fa.src].object_count(); ++xi) {
                const std::uint32_t image = x.arrow_actions[f].obj_map[xi];
                for (std::uint32_t t1 = 0; t1 < mid.arrow_count(); ++t1) {
                    if (mid.arrow(t1).src != image) continue;
                    const std::uint32_t moved = x.arrow_actions[g].arr_map[t1];
                    for (std::uint32_t t2 = 0; t2 < top.arrow_count(); ++t2) {
                        if (top.arrow(t2).src != x.arrow_actions[g].obj_map[mid.arrow(t1).tgt])
                            continue;
                        s.composites.push_back({arr_label(g, mid.arrow(t1).tgt, t2),
                                                arr_label(f, xi, t1),
                                                arr_label(gf, xi, top.compose(t2, moved))});
                    }
                }
            }
        }
    e.to_base.obj_map = e.object_over;
    e.cat = FinCat::build(std::move(s));
    return e;
}

SetQuotient colimit(const SetFunctor& x) {
    require_set_functor(x);
    const FinCat& c = x.domain;
    ElementIndex ix(x);
    UnionFind uf(ix.total);
    for (std::uint32_t f = 0; f < c.arrow_count(); ++f) {
        const Arrow& ar = c.arrow(f);
        for (std::uint32_t xi = 0; xi < x.arrow_actions[f].size(); ++xi)
            uf.unite(static_cast<std::uint32_t>(ix.at(ar.src, xi)),
                     static_cast<std::uint32_t>(ix.at(ar.tgt, x.arrow_actions[f][xi])));
    }
    return quotient_from(flat_labels(x), uf);
}

NondegeneracyReport is_nondegenerate(const SetFunctor& x) {
    require_set_functor(x);
    const FinCat& c = x.domain;

    auto completes_cospan = [&](std::uint32_t f, std::uint32_t xi, std::uint32_t fp,
                                std::uint32_t xpi) {
        const std::uint32_t a = c.arrow(f).src, ap = c.arrow(fp).src;
        for (std::uint32_t mid = 0; mid < c.object_count(); ++mid)
            for (std::uint32_t g : c.hom(mid, a))
                for (std::uint32_t gp : c.hom(mid, ap)) {
                    if (c.compose(f, g) != c.compose(fp, gp)) continue;
                    for (std::uint32_t z = 0; z < x.object_sets[mid].size(); ++z)
                        if (x.arrow_actions[g][z] == xi && x.arrow_actions[gp][z] == xpi)
                            return true;
                }
        return false;
    };
    auto completes_fork = [&](std::uint32_t f, std::uint32_t fp, std::uint32_t xi) {
        const std::uint32_t a = c.arrow(f).src;
        for (std::uint32_t mid = 0; mid < c.object_count(); ++mid)
            for (std::uint32_t g : c.hom(mid, a)) {
                if (c.compose(f, g) != c.compose(fp, g)) continue;
                for (std::uint32_t z = 0; z < x.object_sets[mid].size(); ++z)
                    if (x.arrow_actions[g][z] == xi) return true;
            }
        return false;
    };

    NondegeneracyReport report;
    for (std::uint32_t b = 0; b < c.object_count(); ++b)
        for (std::uint32_t y = 0; y < x.object_sets[b].size(); ++y) {
            std::vector<std::pair<std::uint32_t, std::uint32_t>> pre;  // (arrow, element)
            for (std::uint32_t f = 0; f < c.arrow_count(); ++f) {
                if (c.arrow(f).tgt != b) continue;
                for (std::uint32_t xi = 0; xi < x.arrow_actions[f].size(); ++xi)
                    if (x.arrow_actions[f][xi] == y) pre.push_back({f, xi});
            }
            for (std::size_t i = 0; i < pre.size(); ++i)
                for (std::size_t j = i + 1; j < pre.size(); ++j) {
                    auto [f, xi] = pre[i];
                    auto [fp, xpi] = pre[j];
                    if (completes_cospan(f, xi, fp, xpi)) continue;
                    report.witness =
                        "cospan '" + c.arrow(f).id + "' at " +
                        element_label(c, c.arrow(f).src, x.object_sets[c.arrow(f).src][xi]) +
                        " and '" + c.arrow(fp).id + "' at " +
                        element_label(c, c.arrow(fp).src, x.object_sets[c.arrow(fp).src][xpi]) +
                        " has no completing span";
                    return report;
                }
        }
    for (std::uint32_t f = 0; f < c.arrow_count(); ++f)
        for (std::uint32_t fp = f + 1; fp < c.arrow_count(); ++fp) {
            if (c.arrow(f).src != c.arrow(fp).src || c.arrow(f).tgt != c.arrow(fp).tgt) continue;
            for (std::uint32_t xi = 0; xi < x.arrow_actions[f].size(); ++xi) {
                if (x.arrow_actions[f][xi] != x.arrow_actions[fp][xi]) continue;
                if (completes_fork(f, fp, xi)) continue;
                report.witness =
                    "fork of '" + c.arrow(f).id + "' and '" + c.arrow(fp).id + "' at " +
                    element_label(c, c.arrow(f).src, x.object_sets[c.arrow(f).src][xi]) +
                    " has no equalizing arrow";
                return report;
            }
        }
    report.nondegenerate = true;
    return report;
}

FRDecomposition fr_decompose(const SetFunctor& x) {
    require_set_functor(x);
    if (!structural_profile(x.domain).is_cauchy_complete)
        throw MathError("DOMAIN_NOT_CAUCHY_COMPLETE",
                        "'" + x.domain.name() + "' has a non-split idempotent");

    ElementsCategory e = elements(x);
    const std::size_t n = e.cat.object_count();
    UnionFind uf(n);
    for (std::uint32_t f = 0; f < e.cat.arrow_count(); ++f)
        uf.unite(e.cat.arrow(f).src, e.cat.arrow(f).tgt);

    std::map<std::uint32_t, std::vector<std::uint32_t>> comps;
    for (std::uint32_t o = 0; o < n; ++o) comps[uf.find(o)].push_back(o);

    // Components ordered by least member label for stable output.
    std::vector<std::vector<std::uint32_t>> ordered;
    for (auto& [root, members] : comps) ordered.push_back(std::move(members));
    std::sort(ordered.begin(), ordered.end(),
              [&](const auto& lhs, const auto& rhs) {
                  return e.cat.object_id(lhs.front()) < e.cat.object_id(rhs.front());
              });

    FRDecomposition fr;
    fr.r.assign(x.domain.object_count(), 0);
    for (const auto& members : ordered) {
        std::uint32_t initial = UINT32_MAX;
        for (std::uint32_t o : members) {
            bool ok = true;
            for (std::uint32_t op : members)
                if (e.cat.hom(o, op).size() != 1) {
                    ok = false;
                    break;
                }
            if (ok) {
                initial = o;
                break;
            }
        }
        if (initial == UINT32_MAX) {
            std::string least = e.cat.object_id(members.front());
            for (std::uint32_t o : members) least = std::min(least, e.cat.object_id(o));
            fr.failure = "component of " + least + " has no initial object";
            fr.r.clear();
            fr.initials.clear();
            return fr;
        }
        ++fr.r[e.object_over[initial]];
        fr.initials.push_back({e.object_over[initial], e.object_fiber[initial]});
    }
    return fr;
}

std::vector<Rat> representation_coefficients(const SetFunctor& x) {
    require_set_functor(x);
    MobiusResult m = mobius_matrix(x.domain);
    if (!m.ok())
        throw MathError("NO_MOBIUS_INVERSION",
                        "'" + x.domain.name() + "' has rank " + std::to_string(m.zeta_rank));
    std::vector<Rat> r(x.domain.object_count());
    for (std::size_t a = 0; a < r.size(); ++a)
        for (std::size_t b = 0; b < r.size(); ++b)
            r[a] += Rat(static_cast<long>(x.object_sets[b].size())) * m.mu->at(b, a);
    return r;
}

Rat colimit_cardinality_via_weighting(const SetFunctor& x, std::span<const Rat> k) {
    require_set_functor(x);
    const FinCat& c = x.domain;
    if (k.size() != c.object_count())
        throw InputError("NOT_A_WEIGHTING", "value count does not match the object count");
    for (std::uint32_t a = 0; a < c.object_count(); ++a) {
        Rat row;
        for (std::uint32_t b = 0; b < c.object_count(); ++b)
            row += Rat(static_cast<long>(c.hom(a, b).size())) * k[b];
        if (row != Rat(1))
            throw InputError("NOT_A_WEIGHTING",
                             "zeta row '" + c.object_id(a) + "' does not sum to 1");
    }
    Rat total;
    for (std::uint32_t a = 0; a < c.object_count(); ++a)
        total += k[a] * Rat(static_cast<long>(x.object_sets[a].size()));

    if (structural_profile(c).is_cauchy_complete && is_nondegenerate(x).nondegenerate) {
        Rat counted(static_cast<long>(colimit(x).size()));
        if (total != counted)
            throw MathError("INTERNAL_ERROR", "weighted sum deviates from the component count");
    }
    return total;
}

Rat chi_of_elements(const CatFunctor& x, std::span<const Rat> k) {
    if (auto why = cat_functor_violation(x)) throw InputError("NOT_A_FUNCTOR", *why);
    const FinCat& c = x.domain;
    if (k.size() != c.object_count())
        throw InputError("NOT_A_WEIGHTING", "value count does not match the object count");
    for (std::uint32_t a = 0; a < c.object_count(); ++a) {
        Rat row;
        for (std::uint32_t b = 0; b < c.object_count(); ++b)
            row += Rat(static_cast<long>(c.hom(a, b).size())) * k[b];
        if (row != Rat(1))
            throw InputError("NOT_A_WEIGHTING",
                             "zeta row '" + c.object_id(a) + "' does not sum to 1");
    }

    Rat total;
    for (std::uint32_t a = 0; a < c.object_count(); ++a) {
        EulerChar fib = euler_characteristic(x.object_cats[a]);
        if (!fib.ok())
            throw MathError("UNDEFINED_CHI", "fiber over '" + c.object_id(a) +
                                                 "' has no Euler characteristic (" + fib.reason +
                                                 ")");
        total += k[a] * *fib.value;
    }
    EulerChar whole = euler_characteristic(elements(x).cat);
    if (!whole.ok())
        throw MathError("UNDEFINED_CHI",
                        "the elements category has no Euler characteristic (" + whole.reason + ")");
    if (*whole.value != total)
        throw MathError("INTERNAL_ERROR", "fiber sum deviates from chi of the elements");
    return total;
}

SetQuotient tensor(const SetFunctor& y, const SetFunctor& x) {
    require_set_functor(x);
    require_set_functor(y);
    const FinCat& c = x.domain;
    if (!y.domain.equals(opposite(c)))
        throw InputError("DOMAIN_MISMATCH", "left factor must live on the opposite category");

    std::vector<std::size_t> offset(c.object_count());
    std::size_t total = 0;
    for (std::uint32_t a = 0; a < c.object_count(); ++a) {
        offset[a] = total;
        total += y.object_sets[a].size() * x.object_sets[a].size();
    }
    auto item = [&](std::uint32_t a, std::uint32_t yi, std::uint32_t xi) {
        return static_cast<std::uint32_t>(offset[a] + yi * x.object_sets[a].size() + xi);
    };
    std::vector<std::string> labels(total);
    for (std::uint32_t a = 0; a < c.object_count(); ++a)
        for (std::uint32_t yi = 0; yi < y.object_sets[a].size(); ++yi)
            for (std::uint32_t xi = 0; xi < x.object_sets[a].size(); ++xi)
                labels[item(a, yi, xi)] = c.object_id(a) + "@" + y.object_sets[a][yi] + "@" +
                                          x.object_sets[a][xi];

    UnionFind uf(total);
    for (std::uint32_t f = 0; f < c.arrow_count(); ++f) {
        const Arrow& ar = c.arrow(f);
        const std::uint32_t yf = y.domain.arrow_at(ar.id);
        for (std::uint32_t yi = 0; yi < y.object_sets[ar.tgt].size(); ++yi)
            for (std::uint32_t xi = 0; xi < x.object_sets[ar.src].size(); ++xi)
                uf.unite(item(ar.tgt, yi, x.arrow_actions[f][xi]),
                         item(ar.src, y.arrow_actions[yf][yi], xi));
    }
    return quotient_from(std::move(labels), uf);
}

SetFunctor representable(const FinCat& c, std::uint32_t a) {
    SetFunctor x;
    x.domain = c;
    x.object_sets.resize(c.object_count());
    std::vector<std::vector<std::uint32_t>> pos(c.object_count());  // arrow -> slot, per object
    for (std::uint32_t b = 0; b < c.object_count(); ++b) {
        pos[b].assign(c.arrow_count(), 0);
        for (std::uint32_t f : c.hom(a, b)) {
            pos[b][f] = static_cast<std::uint32_t>(x.object_sets[b].size());
            x.object_sets[b].push_back(c.arrow(f).id);
        }
    }
    x.arrow_actions.resize(c.arrow_count());
    for (std::uint32_t g = 0; g < c.arrow_count(); ++g) {
        const Arrow& ar = c.arrow(g);
        for (std::uint32_t f : c.hom(a, ar.src))
            x.arrow_actions[g].push_back(pos[ar.tgt][c.compose(g, f)]);
    }
    return x;
}

SetFunctor set_functor_sum(const SetFunctor& x, const SetFunctor& y) {
    if (!x.domain.equals(y.domain))
        throw InputError("DOMAIN_MISMATCH", "summands live on different categories");
    SetFunctor s;
    s.domain = x.domain;
    s.object_sets.resize(x.object_sets.size());
    for (std::size_t a = 0; a < x.object_sets.size(); ++a) {
        for (const std::string& e : x.object_sets[a]) s.object_sets[a].push_back("c0." + e);
        for (const std::string& e : y.object_sets[a]) s.object_sets[a].push_back("c1." + e);
    }
    s.arrow_actions.resize(x.arrow_actions.size());
    for (std::size_t f = 0; f < x.arrow_actions.size(); ++f) {
        const std::uint32_t shift =
            static_cast<std::uint32_t>(x.object_sets[s.domain.arrow(f).tgt].size());
        for (std::uint32_t v : x.arrow_actions[f]) s.arrow_actions[f].push_back(v);
        for (std::uint32_t v : y.arrow_actions[f]) s.arrow_actions[f].push_back(v + shift);
    }
    return s;
}

SetFunctor constant_set_functor(const FinCat& c, std::vector<std::string> elems) {
    SetFunctor x;
    x.domain = c;
    x.object_sets.assign(c.object_count(), elems);
    std::vector<std::uint32_t> ident(elems.size());
    std::iota(ident.begin(), ident.end(), 0u);
    x.arrow_actions.assign(c.arrow_count(), ident);
    return x;
}

CatFunctor constant_cat_functor(const FinCat& c, FinCat fiber) {
    CatFunctor x;
    x.domain = c;
    x.arrow_actions.assign(c.arrow_count(), identity_cat_map(fiber));
    x.object_cats.assign(c.object_count(), std::move(fiber));
    return x;
}

CatFunctor as_cat_functor(const SetFunctor& x) {
    require_set_functor(x);
    CatFunctor y;
    y.domain = x.domain;
    for (std::uint32_t a = 0; a < x.domain.object_count(); ++a) {
        CatSpec s;
        s.name = "fiber(" + x.domain.object_id(a) + ")";
        s.objects = x.object_sets[a];
        y.object_cats.push_back(FinCat::build(std::move(s)));
    }
    for (std::uint32_t f = 0; f < x.domain.arrow_count(); ++f)
        y.arrow_actions.push_back({x.arrow_actions[f], x.arrow_actions[f]});
    return y;
}

}  // namespace eulercat

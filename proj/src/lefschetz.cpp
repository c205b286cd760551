#include "eulercat/lefschetz.hpp"

namespace eulercat {

namespace {

void require_endofunctor(const Endofunctor& f) {
    if (auto why = endofunctor_violation(f)) throw InputError("NOT_A_FUNCTOR", *why);
}

// Alg and Coalg differ only in the direction of the structure maps and of
// the commuting square; `coalgebras` flips both.
FinCat two_sided_algebras(const Endofunctor& f, std::size_t arrow_cap, bool coalgebras) {
    require_endofunctor(f);
    const FinCat& c = f.cat;

    struct AlgObject {
        std::uint32_t obj;
        std::uint32_t structure;
    };
    std::vector<AlgObject> objects;
    auto obj_id = [&](const AlgObject& o) {
        return c.object_id(o.obj) + "|" + c.arrow(o.structure).id;
    };
    for (std::uint32_t a = 0; a < c.object_count(); ++a) {
        const std::uint32_t fa = f.map.obj_map[a];
        const auto& structures = coalgebras ? c.hom(a, fa) : c.hom(fa, a);
        for (std::uint32_t h : structures) objects.push_back({a, h});
    }

    struct AlgArrow {
        std::uint32_t arr;
        std::uint32_t src;
        std::uint32_t tgt;
    };
    std::vector<AlgArrow> arrows;
    auto arr_id = [&](const AlgArrow& t) {
        return c.arrow(t.arr).id + "|" + c.arrow(objects[t.src].structure).id + "|" +
               c.arrow(objects[t.tgt].structure).id;
    };
    auto square_commutes = [&](std::uint32_t arrow, std::uint32_t h, std::uint32_t k) {
        const std::uint32_t moved = f.map.arr_map[arrow];
        if (coalgebras) return c.compose(moved, h) == c.compose(k, arrow);
        return c.compose(k, moved) == c.compose(arrow, h);
    };
    for (std::uint32_t src = 0; src < objects.size(); ++src)
        for (std::uint32_t tgt = 0; tgt < objects.size(); ++tgt)
            for (std::uint32_t arrow : c.hom(objects[src].obj, objects[tgt].obj)) {
                if (!square_commutes(arrow, objects[src].structure, objects[tgt].structure))
                    continue;
                if (arrows.size() == arrow_cap)
                    throw InputError("SIZE_OVERFLOW", "algebra category exceeds the arrow cap of " +
                                                          std::to_string(arrow_cap));
                arrows.push_back({arrow, src, tgt});
            }

    CatSpec s;
    s.name = (coalgebras ? "coalg(" : "alg(") + c.name() + ")";
    for (const auto& o : objects) s.objects.push_back(obj_id(o));
    for (const auto& t : arrows) s.arrows.push_back({arr_id(t), s.objects[t.src], s.objects[t.tgt]});
    for (const auto& o : objects) {
        AlgArrow ident{c.identity(o.obj), 0, 0};
        ident.src = ident.tgt = static_cast<std::uint32_t>(&o - objects.data());
        s.identities.emplace(obj_id(o), arr_id(ident));
    }
    std::vector<std::vector<std::uint32_t>> outgoing(objects.size());
    for (std::uint32_t t = 0; t < arrows.size(); ++t) outgoing[arrows[t].src].push_back(t);
    for (const auto& t1 : arrows)
        for (std::uint32_t i2 : outgoing[t1.tgt]) {
            const AlgArrow& t2 = arrows[i2];
            AlgArrow whole{c.compose(t2.arr, t1.arr), t1.src, t2.tgt};
            s.composites.push_back({arr_id(t2), arr_id(t1), arr_id(whole)});
        }
    return FinCat::build(std::move(s));
}

}  // namespace

std::optional<std::string> endofunctor_violation(const Endofunctor& f) {
    return functor_violation(f.cat, f.cat, f.map);
}

Endofunctor identity_endofunctor(const FinCat& c) {
    Endofunctor f;
    f.cat = c;
    f.map = identity_cat_map(c);
    return f;
}

Endofunctor compose(const Endofunctor& g, const Endofunctor& f) {
    if (!g.cat.equals(f.cat))
        throw InputError("DOMAIN_MISMATCH", "endofunctors live on different categories");
    Endofunctor h;
    h.cat = f.cat;
    h.map = compose_cat_maps(g.map, f.map);
    return h;
}

Endofunctor monotone_endofunctor(const FinCat& poset, const std::vector<std::uint32_t>& obj_map) {
    if (!is_poset(poset))
        throw InputError("NOT_A_POSET", "'" + poset.name() + "' is not a poset");
    if (obj_map.size() != poset.object_count())
        throw InputError("BAD_MAP", "value count does not match the object count");
    for (std::uint32_t v : obj_map)
        if (v >= poset.object_count()) throw InputError("BAD_MAP", "image out of range");
    Endofunctor f;
    f.cat = poset;
    f.map.obj_map = obj_map;
    for (std::uint32_t i = 0; i < poset.arrow_count(); ++i) {
        const Arrow& ar = poset.arrow(i);
        const auto& image = poset.hom(obj_map[ar.src], obj_map[ar.tgt]);
        if (image.empty())
            throw InputError("NOT_MONOTONE", "'" + poset.object_id(ar.src) + "' <= '" +
                                                 poset.object_id(ar.tgt) +
                                                 "' is not preserved");
        f.map.arr_map.push_back(image.front());
    }
    return f;
}

FinCat fixed_category(const Endofunctor& f) {
    require_endofunctor(f);
    const FinCat& c = f.cat;
    CatSpec s;
    s.name = "fix(" + c.name() + ")";
    for (std::uint32_t a = 0; a < c.object_count(); ++a)
        if (f.map.obj_map[a] == a) s.objects.push_back(c.object_id(a));
    std::vector<bool> fixed(c.arrow_count(), false);
    for (std::uint32_t i = 0; i < c.arrow_count(); ++i) {
        if (f.map.arr_map[i] != i) continue;
        fixed[i] = true;
        const Arrow& ar = c.arrow(i);
        s.arrows.push_back({ar.id, c.object_id(ar.src), c.object_id(ar.tgt)});
    }
    for (std::uint32_t a = 0; a < c.object_count(); ++a)
        if (f.map.obj_map[a] == a) s.identities.emplace(c.object_id(a), c.arrow(c.identity(a)).id);
    for (std::uint32_t i = 0; i < c.arrow_count(); ++i) {
        if (!fixed[i]) continue;
        for (std::uint32_t j = 0; j < c.arrow_count(); ++j) {
            if (!fixed[j] || !c.composable(j, i)) continue;
            s.composites.push_back({c.arrow(j).id, c.arrow(i).id, c.arrow(c.compose(j, i)).id});
        }
    }
    return FinCat::build(std::move(s));
}

EulerChar lefschetz_number(const Endofunctor& f) {
    return euler_characteristic(fixed_category(f));
}

FinCat algebra_category(const Endofunctor& f, std::size_t arrow_cap) {
    return two_sided_algebras(f, arrow_cap, false);
}

FinCat coalgebra_category(const Endofunctor& f, std::size_t arrow_cap) {
    return two_sided_algebras(f, arrow_cap, true);
}

}  // namespace eulercat

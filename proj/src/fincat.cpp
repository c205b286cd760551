#include "eulercat/fincat.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace eulercat {

std::string_view law_name(Law law) {
    switch (law) {
        case Law::DuplicateId: return "DuplicateId";
        case Law::DanglingEndpoint: return "DanglingEndpoint";
        case Law::BadIdentity: return "BadIdentity";
        case Law::MissingComposite: return "MissingComposite";
        case Law::BadComposite: return "BadComposite";
        case Law::UnitLaw: return "UnitLaw";
        case Law::NonAssociative: return "NonAssociative";
    }
    return "?";
}

std::string ValidationReport::to_string() const {
    if (ok()) return "valid";
    std::ostringstream out;
    out << violations.size() << " violation(s):";
    for (const auto& v : violations) out << "\n  " << law_name(v.law) << ": " << v.detail;
    return out.str();
}

namespace {

constexpr std::uint32_t kNone = ~std::uint32_t(0);

// Mutable scratch used by validation; becomes the FinCat payload on success.
struct Candidate {
    std::vector<std::string> objects;
    std::vector<Arrow> arrows;
    std::vector<std::uint32_t> identity;
    std::unordered_map<std::uint64_t, std::uint32_t> comp;
    std::unordered_map<std::string, std::uint32_t> obj_index, arr_index;
};

std::uint64_t comp_key(std::uint32_t g, std::uint32_t f, std::size_t n_arrows) {
    return std::uint64_t(g) * n_arrows + f;
}

ValidationReport analyze(const CatSpec& spec, Candidate& c) {
    ValidationReport report;
    auto fail = [&](Law law, std::string detail) {
        report.violations.push_back({law, std::move(detail)});
    };

    for (const auto& obj : spec.objects) {
        if (c.obj_index.contains(obj)) {
            fail(Law::DuplicateId, "object '" + obj + "' declared twice");
            continue;
        }
        c.obj_index.emplace(obj, static_cast<std::uint32_t>(c.objects.size()));
        c.objects.push_back(obj);
    }

    auto add_arrow = [&](const std::string& id, const std::string& src, const std::string& tgt) {
        if (c.arr_index.contains(id)) {
            fail(Law::DuplicateId, "arrow '" + id + "' declared twice");
            return;
        }
        auto s = c.obj_index.find(src);
        auto t = c.obj_index.find(tgt);
        if (s == c.obj_index.end() || t == c.obj_index.end()) {
            fail(Law::DanglingEndpoint, "arrow '" + id + "': " + src + " -> " + tgt +
                                            " references an undeclared object");
            return;
        }
        c.arr_index.emplace(id, static_cast<std::uint32_t>(c.arrows.size()));
        c.arrows.push_back({id, s->second, t->second});
    };
    for (const auto& a : spec.arrows) add_arrow(a.id, a.src, a.tgt);

    // Resolve identities: declared ones first, then the id_<obj> convention,
    // then a freshly created arrow.
    c.identity.assign(c.objects.size(), kNone);
    for (const auto& [obj, arr] : spec.identities) {
        auto oi = c.obj_index.find(obj);
        if (oi == c.obj_index.end()) {
            fail(Law::BadIdentity, "identity declared for undeclared object '" + obj + "'");
            continue;
        }
        auto ai = c.arr_index.find(arr);
        if (ai == c.arr_index.end()) {
            fail(Law::BadIdentity, "identity of '" + obj + "' names undeclared arrow '" + arr + "'");
            continue;
        }
        const Arrow& a = c.arrows[ai->second];
        if (a.src != oi->second || a.tgt != oi->second) {
            fail(Law::BadIdentity, "identity of '" + obj + "' is '" + arr +
                                       "', which is not an endomorphism of it");
            continue;
        }
        c.identity[oi->second] = ai->second;
    }
    for (std::uint32_t x = 0; x < c.objects.size(); ++x) {
        if (c.identity[x] != kNone) continue;
        const std::string auto_id = "id_" + c.objects[x];
        if (auto it = c.arr_index.find(auto_id); it != c.arr_index.end()) {
            const Arrow& a = c.arrows[it->second];
            if (a.src != x || a.tgt != x) {
                fail(Law::BadIdentity,
                     "arrow '" + auto_id + "' should be the identity of '" + c.objects[x] +
                         "' but has other endpoints");
                continue;
            }
            c.identity[x] = it->second;
        } else {
            c.arr_index.emplace(auto_id, static_cast<std::uint32_t>(c.arrows.size()));
            c.arrows.push_back({auto_id, x, x});
            c.identity[x] = c.arrows.size() - 1;
        }
    }

    const std::size_t na = c.arrows.size();

    // Declared composites.
    for (const auto& decl : spec.composites) {
        auto gi = c.arr_index.find(decl.g), fi = c.arr_index.find(decl.f),
             hi = c.arr_index.find(decl.h);
        if (gi == c.arr_index.end() || fi == c.arr_index.end() || hi == c.arr_index.end()) {
            fail(Law::BadComposite, "compose " + decl.g + " . " + decl.f + " = " + decl.h +
                                        " references an undeclared arrow");
            continue;
        }
        const Arrow &g = c.arrows[gi->second], &f = c.arrows[fi->second], &h = c.arrows[hi->second];
        if (f.tgt != g.src) {
            fail(Law::BadComposite,
                 "compose " + decl.g + " . " + decl.f + ": arrows are not composable");
            continue;
        }
        if (h.src != f.src || h.tgt != g.tgt) {
            fail(Law::BadComposite, "compose " + decl.g + " . " + decl.f + " = " + decl.h +
                                        ": composite has wrong endpoints");
            continue;
        }
        auto [it, inserted] = c.comp.emplace(comp_key(gi->second, fi->second, na), hi->second);
        if (!inserted && it->second != hi->second)
            fail(Law::BadComposite, "conflicting composites declared for " + decl.g + " . " + decl.f);
    }

    // Unit laws force composites with identities; declared values must agree.
    for (std::uint32_t f = 0; f < na; ++f) {
        const std::uint32_t idt = c.identity[c.arrows[f].tgt];
        const std::uint32_t ids = c.identity[c.arrows[f].src];
        for (auto [g, ff, expect] : {std::tuple{idt, f, f}, std::tuple{f, ids, f}}) {
            auto [it, inserted] = c.comp.emplace(comp_key(g, ff, na), expect);
            if (!inserted && it->second != expect)
                fail(Law::UnitLaw, "composite " + c.arrows[g].id + " . " + c.arrows[ff].id +
                                       " = " + c.arrows[it->second].id + " violates the unit law");
        }
    }

    // Totality over composable pairs, using in/out buckets per object.
    std::vector<std::vector<std::uint32_t>> into(c.objects.size()), out_of(c.objects.size());
    for (std::uint32_t f = 0; f < na; ++f) {
        into[c.arrows[f].tgt].push_back(f);
        out_of[c.arrows[f].src].push_back(f);
    }
    for (std::uint32_t x = 0; x < c.objects.size(); ++x) {
        for (std::uint32_t f : into[x])
            for (std::uint32_t g : out_of[x]) {
                if (!c.comp.contains(comp_key(g, f, na)))
                    fail(Law::MissingComposite,
                         "no composite declared for " + c.arrows[g].id + " . " + c.arrows[f].id);
            }
    }

    // Associativity over all composable triples whose composites are present.
    if (report.ok()) {
        for (std::uint32_t f = 0; f < na; ++f) {
            for (std::uint32_t g : out_of[c.arrows[f].tgt]) {
                const std::uint32_t gf = c.comp.at(comp_key(g, f, na));
                for (std::uint32_t h : out_of[c.arrows[g].tgt]) {
                    const std::uint32_t hg = c.comp.at(comp_key(h, g, na));
                    if (c.comp.at(comp_key(h, gf, na)) != c.comp.at(comp_key(hg, f, na)))
                        fail(Law::NonAssociative, "h.(g.f) != (h.g).f for f=" + c.arrows[f].id +
                                                      ", g=" + c.arrows[g].id +
                                                      ", h=" + c.arrows[h].id);
                }
            }
        }
    }
    return report;
}

}  // namespace

ValidationReport FinCat::validate(const CatSpec& spec) {
    Candidate c;
    return analyze(spec, c);
}

FinCat FinCat::build(CatSpec spec) {
    Candidate c;
    ValidationReport report = analyze(spec, c);
    if (!report.ok()) throw InvalidCategory(std::move(report));
    FinCat cat;
    cat.name_ = std::move(spec.name);
    cat.objects_ = std::move(c.objects);
    cat.arrows_ = std::move(c.arrows);
    cat.identity_ = std::move(c.identity);
    cat.comp_ = std::move(c.comp);
    cat.obj_index_ = std::move(c.obj_index);
    cat.arr_index_ = std::move(c.arr_index);
    cat.index_and_close();
    return cat;
}

void FinCat::index_and_close() {
    hom_.assign(objects_.size() * objects_.size(), {});
    for (std::uint32_t f = 0; f < arrows_.size(); ++f)
        hom_[arrows_[f].src * objects_.size() + arrows_[f].tgt].push_back(f);
}

std::optional<std::uint32_t> FinCat::object_index(std::string_view id) const {
    auto it = obj_index_.find(std::string(id));
    if (it == obj_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::uint32_t> FinCat::arrow_index(std::string_view id) const {
    auto it = arr_index_.find(std::string(id));
    if (it == arr_index_.end()) return std::nullopt;
    return it->second;
}

std::uint32_t FinCat::object_at(std::string_view id) const {
    auto i = object_index(id);
    if (!i) throw InputError("UNKNOWN_OBJECT", name_ + " has no object '" + std::string(id) + "'");
    return *i;
}

std::uint32_t FinCat::arrow_at(std::string_view id) const {
    auto i = arrow_index(id);
    if (!i) throw InputError("UNKNOWN_ARROW", name_ + " has no arrow '" + std::string(id) + "'");
    return *i;
}

std::uint32_t FinCat::compose(std::uint32_t g, std::uint32_t f) const {
    assert(composable(g, f));
    return comp_.at(comp_key(g, f, arrows_.size()));
}

std::optional<std::uint32_t> FinCat::inverse_of(std::uint32_t f) const {
    const Arrow& a = arrows_[f];
    for (std::uint32_t g : hom(a.tgt, a.src)) {
        if (compose(g, f) == identity_[a.src] && compose(f, g) == identity_[a.tgt]) return g;
    }
    return std::nullopt;
}

bool FinCat::equals(const FinCat& other) const {
    return objects_ == other.objects_ && arrows_ == other.arrows_ &&
           identity_ == other.identity_ && comp_ == other.comp_;
}

CatSpec FinCat::to_spec() const {
    CatSpec spec;
    spec.name = name_;
    spec.objects = objects_;
    for (const Arrow& a : arrows_)
        spec.arrows.push_back({a.id, objects_[a.src], objects_[a.tgt]});
    for (std::uint32_t x = 0; x < objects_.size(); ++x)
        spec.identities.emplace(objects_[x], arrows_[identity_[x]].id);
    for (std::uint32_t f = 0; f < arrows_.size(); ++f) {
        if (is_identity(f)) continue;
        for (std::uint32_t g = 0; g < arrows_.size(); ++g) {
            if (is_identity(g) || !composable(g, f)) continue;
            spec.composites.push_back({arrows_[g].id, arrows_[f].id, arrows_[compose(g, f)].id});
        }
    }
    return spec;
}

StructuralProfile structural_profile(const FinCat& cat) {
    const std::size_t n = cat.object_count();
    StructuralProfile p;
    p.aut_order.assign(n, 0);
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t f : cat.hom(x, x))
            if (cat.is_iso(f)) ++p.aut_order[x];

    p.is_skeletal = true;
    for (std::uint32_t a = 0; a < n && p.is_skeletal; ++a)
        for (std::uint32_t b = a + 1; b < n && p.is_skeletal; ++b)
            for (std::uint32_t f : cat.hom(a, b))
                if (cat.is_iso(f)) {
                    p.is_skeletal = false;
                    break;
                }

    p.idempotents_are_identities = true;
    p.endos_are_autos = true;
    for (std::uint32_t x = 0; x < n; ++x) {
        for (std::uint32_t f : cat.hom(x, x)) {
            if (cat.compose(f, f) == f && !cat.is_identity(f)) p.idempotents_are_identities = false;
            if (!cat.is_iso(f)) p.endos_are_autos = false;
        }
    }

    // reach[a][b]: some path a -> b through non-identity arrows (reflexive).
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::uint32_t a = 0; a < n; ++a) {
        reach[a][a] = true;
        for (std::uint32_t b = 0; b < n; ++b)
            for (std::uint32_t f : cat.hom(a, b))
                if (!cat.is_identity(f)) reach[a][b] = true;
    }
    for (std::uint32_t k = 0; k < n; ++k)
        for (std::uint32_t i = 0; i < n; ++i) {
            if (!reach[i][k]) continue;
            for (std::uint32_t j = 0; j < n; ++j)
                if (reach[k][j]) reach[i][j] = true;
        }
    p.is_circuit_free = true;
    for (std::uint32_t f = 0; f < cat.arrow_count() && p.is_circuit_free; ++f) {
        if (cat.is_identity(f)) continue;
        if (reach[cat.arrow(f).tgt][cat.arrow(f).src]) p.is_circuit_free = false;
    }

    // Idempotent e: a -> a splits if some s: a -> b, i: b -> a give s∘i = id_b
    // and i∘s = e.
    p.is_cauchy_complete = true;
    for (std::uint32_t a = 0; a < n && p.is_cauchy_complete; ++a) {
        for (std::uint32_t e : cat.hom(a, a)) {
            if (cat.compose(e, e) != e) continue;
            bool splits = false;
            for (std::uint32_t b = 0; b < n && !splits; ++b)
                for (std::uint32_t s : cat.hom(a, b)) {
                    for (std::uint32_t i : cat.hom(b, a))
                        if (cat.compose(s, i) == cat.identity(b) && cat.compose(i, s) == e) {
                            splits = true;
                            break;
                        }
                    if (splits) break;
                }
            if (!splits) {
                p.is_cauchy_complete = false;
                break;
            }
        }
    }
    return p;
}

std::vector<std::uint32_t> epimorphisms(const FinCat& cat) {
    std::vector<std::uint32_t> epis;
    const std::size_t n = cat.object_count();
    for (std::uint32_t f = 0; f < cat.arrow_count(); ++f) {
        const std::uint32_t b = cat.arrow(f).tgt;
        bool epi = true;
        for (std::uint32_t c = 0; c < n && epi; ++c) {
            const auto& out = cat.hom(b, c);
            for (std::size_t i = 0; i < out.size() && epi; ++i)
                for (std::size_t j = i + 1; j < out.size(); ++j)
                    if (cat.compose(out[i], f) == cat.compose(out[j], f)) {
                        epi = false;
                        break;
                    }
        }
        if (epi) epis.push_back(f);
    }
    return epis;
}

std::vector<std::uint32_t> monomorphisms(const FinCat& cat) {
    std::vector<std::uint32_t> monos;
    const std::size_t n = cat.object_count();
    for (std::uint32_t f = 0; f < cat.arrow_count(); ++f) {
        const std::uint32_t a = cat.arrow(f).src;
        bool mono = true;
        for (std::uint32_t c = 0; c < n && mono; ++c) {
            const auto& in = cat.hom(c, a);
            for (std::size_t i = 0; i < in.size() && mono; ++i)
                for (std::size_t j = i + 1; j < in.size(); ++j)
                    if (cat.compose(f, in[i]) == cat.compose(f, in[j])) {
                        mono = false;
                        break;
                    }
        }
        if (mono) monos.push_back(f);
    }
    return monos;
}

bool is_poset(const FinCat& cat) {
    const std::size_t n = cat.object_count();
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b) {
            if (cat.hom(a, b).size() > 1) return false;
            if (a != b && !cat.hom(a, b).empty() && !cat.hom(b, a).empty()) return false;
        }
    return true;
}

std::optional<std::string> functor_violation(const FinCat& dom, const FinCat& cod,
                                             const CatMap& f) {
    if (f.obj_map.size() != dom.object_count() || f.arr_map.size() != dom.arrow_count())
        return "map tables do not match the domain's object/arrow counts";
    for (std::uint32_t x : f.obj_map)
        if (x >= cod.object_count()) return "object map leaves the codomain";
    for (std::uint32_t a : f.arr_map)
        if (a >= cod.arrow_count()) return "arrow map leaves the codomain";
    for (std::uint32_t a = 0; a < dom.arrow_count(); ++a) {
        const Arrow& ar = dom.arrow(a);
        const Arrow& im = cod.arrow(f.arr_map[a]);
        if (im.src != f.obj_map[ar.src] || im.tgt != f.obj_map[ar.tgt])
            return "arrow '" + ar.id + "' is not sent to an arrow between the image objects";
    }
    for (std::uint32_t x = 0; x < dom.object_count(); ++x)
        if (f.arr_map[dom.identity(x)] != cod.identity(f.obj_map[x]))
            return "identity of '" + dom.object_id(x) + "' is not sent to an identity";
    for (std::uint32_t a = 0; a < dom.arrow_count(); ++a)
        for (std::uint32_t g = 0; g < dom.arrow_count(); ++g) {
            if (!dom.composable(g, a)) continue;
            if (f.arr_map[dom.compose(g, a)] != cod.compose(f.arr_map[g], f.arr_map[a]))
                return "composition not preserved on (" + dom.arrow(g).id + ", " +
                       dom.arrow(a).id + ")";
        }
    return std::nullopt;
}

CatMap identity_cat_map(const FinCat& cat) {
    CatMap m;
    m.obj_map.resize(cat.object_count());
    m.arr_map.resize(cat.arrow_count());
    for (std::uint32_t i = 0; i < m.obj_map.size(); ++i) m.obj_map[i] = i;
    for (std::uint32_t i = 0; i < m.arr_map.size(); ++i) m.arr_map[i] = i;
    return m;
}

CatMap compose_cat_maps(const CatMap& g, const CatMap& f) {
    CatMap m;
    m.obj_map.reserve(f.obj_map.size());
    m.arr_map.reserve(f.arr_map.size());
    for (std::uint32_t x : f.obj_map) m.obj_map.push_back(g.obj_map[x]);
    for (std::uint32_t a : f.arr_map) m.arr_map.push_back(g.arr_map[a]);
    return m;
}

}  // namespace eulercat

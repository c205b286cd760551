#include "eulercat/mobius.hpp"

#include <algorithm>
#include <set>

namespace eulercat {

namespace {

QMat zeta_qmat(const FinCat& c) {
    QMat z(c.objects(), c.objects());
    for (std::size_t a = 0; a < c.object_count(); ++a)
        for (std::size_t b = 0; b < c.object_count(); ++b)
            z.at(a, b) = Rat(static_cast<long>(c.hom(a, b).size()));
    return z;
}

std::vector<Rat> ones(std::size_t n) { return std::vector<Rat>(n, Rat(1)); }

Rat vec_sum(std::span<const Rat> v) {
    Rat s;
    for (const Rat& x : v) s += x;
    return s;
}

// Objects ordered so that every arrow between distinct objects goes
// forward. Fails only if such arrows form a circuit.
std::optional<std::vector<std::uint32_t>> topo_order(const FinCat& c) {
    const std::size_t n = c.object_count();
    std::vector<std::uint32_t> indeg(n, 0);
    std::vector<std::vector<std::uint32_t>> succ(n);
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
            if (a != b && !c.hom(a, b).empty()) {
                succ[a].push_back(b);
                ++indeg[b];
            }
    std::vector<std::uint32_t> order;
    std::vector<std::uint32_t> ready;
    for (std::uint32_t x = 0; x < n; ++x)
        if (indeg[x] == 0) ready.push_back(x);
    while (!ready.empty()) {
        std::uint32_t x = ready.back();
        ready.pop_back();
        order.push_back(x);
        for (std::uint32_t y : succ[x])
            if (--indeg[y] == 0) ready.push_back(y);
    }
    if (order.size() != n) return std::nullopt;
    return order;
}

void require_paths_precondition(const FinCat& c, const StructuralProfile& p) {
    if (!p.is_skeletal) {
        for (std::uint32_t a = 0; a < c.object_count(); ++a)
            for (std::uint32_t b = a + 1; b < c.object_count(); ++b)
                for (std::uint32_t f : c.hom(a, b))
                    if (c.is_iso(f))
                        throw MathError("PRECONDITION_FAILED",
                                        "not skeletal: '" + c.arrow(f).id +
                                            "' is an isomorphism between distinct objects");
    }
    if (!p.idempotents_are_identities) {
        for (std::uint32_t x = 0; x < c.object_count(); ++x)
            for (std::uint32_t f : c.hom(x, x))
                if (c.compose(f, f) == f && !c.is_identity(f))
                    throw MathError("PRECONDITION_FAILED",
                                    "'" + c.arrow(f).id + "' is a non-identity idempotent");
    }
}

}  // namespace

IncidenceElement zeta(const FinCat& c) { return {c.name(), zeta_qmat(c)}; }

MobiusResult mobius_matrix(const FinCat& c) {
    QMat z = zeta_qmat(c);
    MobiusResult r;
    r.cat_name = c.name();
    r.zeta_rank = z.rank();
    if (auto inv = z.inverse()) r.mu = std::move(*inv);
    return r;
}

IncidenceElement mobius_by_paths(const FinCat& c) {
    auto profile = structural_profile(c);
    require_paths_precondition(c, profile);
    auto order = topo_order(c);
    if (!order)
        throw MathError("PRECONDITION_FAILED", "arrows between distinct objects form a circuit");

    const std::size_t n = c.object_count();
    QMat z = zeta_qmat(c);
    std::vector<Rat> inv_aut(n);
    for (std::size_t x = 0; x < n; ++x)
        inv_aut[x] = Rat(1, static_cast<long>(profile.aut_order[x]));

    // mu(a, b) = [a = b]/|Aut a| - (1/|Aut a|) sum_{o != a} zeta(a, o) mu(o, b),
    // the first-step expansion of the path sum; filled against topological
    // order so every mu(o, b) is ready.
    QMat mu(c.objects(), c.objects());
    for (auto it = order->rbegin(); it != order->rend(); ++it) {
        const std::uint32_t a = *it;
        for (std::uint32_t b = 0; b < n; ++b) {
            Rat acc = (a == b) ? inv_aut[a] : Rat(0);
            for (std::uint32_t o = 0; o < n; ++o) {
                if (o == a || z.at(a, o).is_zero()) continue;
                acc -= inv_aut[a] * z.at(a, o) * mu.at(o, b);
            }
            mu.at(a, b) = acc;
        }
    }
    return {c.name(), std::move(mu)};
}

IncidenceElement mobius_by_factorization(const FinCat& c, std::span<const std::uint32_t> epis,
                                         std::span<const std::uint32_t> monos) {
    auto profile = structural_profile(c);
    if (!profile.is_skeletal)
        throw MathError("PRECONDITION_FAILED", "category is not skeletal");

    auto wide_subcategory = [&](std::span<const std::uint32_t> arrows, const char* which) {
        std::set<std::uint32_t> in(arrows.begin(), arrows.end());
        for (std::uint32_t x = 0; x < c.object_count(); ++x)
            if (!in.contains(c.identity(x)))
                throw MathError("SUBCATEGORY_NOT_CLOSED",
                                std::string(which) + " class is missing the identity of '" +
                                    c.object_id(x) + "'");
        for (std::uint32_t f : in)
            for (std::uint32_t g : in) {
                if (!c.composable(g, f)) continue;
                if (!in.contains(c.compose(g, f)))
                    throw MathError("SUBCATEGORY_NOT_CLOSED",
                                    std::string(which) + " class is not closed under '" +
                                        c.arrow(g).id + " . " + c.arrow(f).id + "'");
            }
        CatSpec s;
        s.name = c.name() + "." + which;
        s.objects = c.objects();
        for (std::uint32_t f = 0; f < c.arrow_count(); ++f)
            if (in.contains(f))
                s.arrows.push_back({c.arrow(f).id, c.object_id(c.arrow(f).src),
                                    c.object_id(c.arrow(f).tgt)});
        for (std::uint32_t x = 0; x < c.object_count(); ++x)
            s.identities.emplace(c.object_id(x), c.arrow(c.identity(x)).id);
        for (std::uint32_t f : in)
            for (std::uint32_t g : in) {
                if (!c.composable(g, f)) continue;
                s.composites.push_back(
                    {c.arrow(g).id, c.arrow(f).id, c.arrow(c.compose(g, f)).id});
            }
        return FinCat::build(std::move(s));
    };

    FinCat e_cat = wide_subcategory(epis, "E");
    FinCat m_cat = wide_subcategory(monos, "M");

    const std::size_t n = c.object_count();
    QMat diag_inv(c.objects(), c.objects()), diag(c.objects(), c.objects());
    for (std::size_t x = 0; x < n; ++x) {
        diag.at(x, x) = Rat(static_cast<long>(profile.aut_order[x]));
        diag_inv.at(x, x) = Rat(1, static_cast<long>(profile.aut_order[x]));
    }
    if (zeta_qmat(e_cat) * diag_inv * zeta_qmat(m_cat) != zeta_qmat(c))
        throw MathError("NOT_A_FACTORIZATION_SYSTEM",
                        "zeta does not factor as zeta_E (1/|Aut|) zeta_M");

    QMat mu_e = mobius_by_paths(e_cat).matrix;
    QMat mu_m = mobius_by_paths(m_cat).matrix;
    return {c.name(), mu_m * diag * mu_e};
}

AffineSolutionSet weighting(const FinCat& c) {
    return solve_affine(zeta_qmat(c), ones(c.object_count()));
}

AffineSolutionSet coweighting(const FinCat& c) {
    return solve_affine(zeta_qmat(c).transpose(), ones(c.object_count()));
}

EulerChar euler_characteristic(const FinCat& c) {
    AffineSolutionSet w = weighting(c);
    if (w.kind == AffineSolutionSet::Kind::None) return {std::nullopt, "NO_WEIGHTING"};
    AffineSolutionSet cw = coweighting(c);
    if (cw.kind == AffineSolutionSet::Kind::None) return {std::nullopt, "NO_COWEIGHTING"};

    // With both sides solvable the sum is the same for every member of
    // either family; verified here rather than assumed.
    for (const auto& basis : {w.nullspace, cw.nullspace})
        for (const auto& v : basis)
            if (!vec_sum(v).is_zero())
                throw MathError("SUM_NOT_CONSTANT",
                                "weighting family has non-constant total on " + c.name());
    Rat total = vec_sum(w.particular);
    if (total != vec_sum(cw.particular))
        throw MathError("SUM_NOT_CONSTANT",
                        "weighting and coweighting totals differ on " + c.name());
    return {total, {}};
}

Rat nerve_euler(const FinCat& c) {
    auto profile = structural_profile(c);
    if (!profile.is_skeletal)
        throw MathError("PRECONDITION_FAILED", "category is not skeletal");
    for (std::uint32_t x = 0; x < c.object_count(); ++x)
        if (c.hom(x, x).size() != 1)
            throw MathError("PRECONDITION_FAILED",
                            "'" + c.object_id(x) + "' has a non-identity endomorphism");

    const std::size_t n = c.object_count();
    QMat step(c.objects(), c.objects());  // counts of non-identity arrows
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::size_t cnt = c.hom(a, b).size();
            if (a == b) --cnt;
            step.at(a, b) = Rat(static_cast<long>(cnt));
        }

    Rat total(static_cast<long>(n));  // the n = 0 term: one 0-path per object
    QMat power = step;
    long sign = -1;
    for (std::size_t len = 1; len <= n && !power.is_zero(); ++len) {
        total += Rat(sign) * power.entry_sum();
        power = power * step;
        sign = -sign;
    }
    if (!power.is_zero())
        throw MathError("PRECONDITION_FAILED", "nondegenerate paths do not terminate");
    return total;
}

Rat euler_of_graph(const DirectedGraph& g) {
    FinCat f = free_category(g);
    EulerChar chi = euler_characteristic(f);
    if (!chi.ok())
        throw MathError("INTERNAL_ERROR", "free category has no Euler characteristic");
    Rat expect(static_cast<long>(g.vertices.size()));
    expect -= Rat(static_cast<long>(g.edges.size()));
    if (*chi.value != expect)
        throw MathError("INTERNAL_ERROR", "chi of free category deviates from V - E");
    return *chi.value;
}

Weighting transport_weighting(const FinCat& c, const FinCat& d, const CatMap& f,
                              std::span<const Rat> l) {
    if (auto why = functor_violation(c, d, f))
        throw InputError("NOT_A_FUNCTOR", *why);
    if (l.size() != d.object_count())
        throw InputError("NOT_A_WEIGHTING", "value count does not match the codomain");
    QMat zd = zeta_qmat(d);
    for (std::size_t a = 0; a < d.object_count(); ++a) {
        Rat row;
        for (std::size_t b = 0; b < d.object_count(); ++b) row += zd.at(a, b) * l[b];
        if (row != Rat(1))
            throw InputError("NOT_A_WEIGHTING",
                             "zeta row '" + d.object_id(a) + "' does not sum to 1");
    }

    for (std::uint32_t a = 0; a < c.object_count(); ++a)
        for (std::uint32_t b = 0; b < c.object_count(); ++b) {
            const auto& hom = c.hom(a, b);
            const auto& dhom = d.hom(f.obj_map[a], f.obj_map[b]);
            std::set<std::uint32_t> image;
            for (std::uint32_t ar : hom) image.insert(f.arr_map[ar]);
            if (image.size() != hom.size())
                throw MathError("NOT_AN_EQUIVALENCE", "functor is not faithful on hom(" +
                                                          c.object_id(a) + ", " +
                                                          c.object_id(b) + ")");
            if (image.size() != dhom.size())
                throw MathError("NOT_AN_EQUIVALENCE", "functor is not full on hom(" +
                                                          c.object_id(a) + ", " +
                                                          c.object_id(b) + ")");
        }
    auto iso_related = [](const FinCat& cat, std::uint32_t x, std::uint32_t y) {
        for (std::uint32_t ar : cat.hom(x, y))
            if (cat.is_iso(ar)) return true;
        return false;
    };
    for (std::uint32_t y = 0; y < d.object_count(); ++y) {
        bool hit = false;
        for (std::uint32_t a = 0; a < c.object_count() && !hit; ++a)
            hit = iso_related(d, f.obj_map[a], y);
        if (!hit)
            throw MathError("NOT_AN_EQUIVALENCE",
                            "no object maps into the iso class of '" + d.object_id(y) + "'");
    }

    auto class_size = [&](const FinCat& cat, std::uint32_t x) {
        long size = 0;
        for (std::uint32_t y = 0; y < cat.object_count(); ++y)
            if (iso_related(cat, x, y)) ++size;
        return Rat(size);
    };
    Weighting k;
    k.cat_name = c.name();
    k.side = Weighting::Side::Weight;
    k.labels = c.objects();
    k.values.resize(c.object_count());
    for (std::uint32_t a = 0; a < c.object_count(); ++a)
        k.values[a] = class_size(d, f.obj_map[a]) / class_size(c, a) * l[f.obj_map[a]];

    QMat zc = zeta_qmat(c);
    for (std::size_t a = 0; a < c.object_count(); ++a) {
        Rat row;
        for (std::size_t b = 0; b < c.object_count(); ++b) row += zc.at(a, b) * k.values[b];
        if (row != Rat(1))
            throw MathError("INTERNAL_ERROR", "transported weighting fails its system");
    }
    return k;
}

GaloisReport galois_identity_check(const FinCat& a, const FinCat& b,
                                   const std::vector<std::uint32_t>& f,
                                   const std::vector<std::uint32_t>& g) {
    if (!is_poset(a) || !is_poset(b))
        throw InputError("NOT_A_POSET", "both categories must be posets");
    if (f.size() != a.object_count() || g.size() != b.object_count())
        throw InputError("BAD_MAP", "map sizes do not match the object counts");
    for (std::uint32_t x : f)
        if (x >= b.object_count()) throw InputError("BAD_MAP", "f leaves the codomain");
    for (std::uint32_t x : g)
        if (x >= a.object_count()) throw InputError("BAD_MAP", "g leaves the codomain");

    auto le = [](const FinCat& p, std::uint32_t x, std::uint32_t y) {
        return !p.hom(x, y).empty();
    };
    for (std::uint32_t x = 0; x < a.object_count(); ++x)
        for (std::uint32_t y = 0; y < a.object_count(); ++y)
            if (le(a, x, y) && !le(b, f[x], f[y]))
                throw InputError("NOT_MONOTONE", "f is not order-preserving at (" +
                                                     a.object_id(x) + ", " + a.object_id(y) + ")");
    for (std::uint32_t x = 0; x < b.object_count(); ++x)
        for (std::uint32_t y = 0; y < b.object_count(); ++y)
            if (le(b, x, y) && !le(a, g[x], g[y]))
                throw InputError("NOT_MONOTONE", "g is not order-preserving at (" +
                                                     b.object_id(x) + ", " + b.object_id(y) + ")");
    for (std::uint32_t x = 0; x < a.object_count(); ++x)
        for (std::uint32_t y = 0; y < b.object_count(); ++y)
            if (le(b, f[x], y) != le(a, x, g[y]))
                throw MathError("NOT_ADJOINT", "f(" + a.object_id(x) + ") <= " + b.object_id(y) +
                                                   " disagrees with " + a.object_id(x) +
                                                   " <= g(" + b.object_id(y) + ")");

    QMat mu_a = *mobius_matrix(a).mu;
    QMat mu_b = *mobius_matrix(b).mu;
    GaloisReport report;
    report.holds = true;
    for (std::uint32_t x = 0; x < a.object_count(); ++x)
        for (std::uint32_t y = 0; y < b.object_count(); ++y) {
            Rat lhs, rhs;
            for (std::uint32_t xp = 0; xp < a.object_count(); ++xp)
                if (f[xp] == y) lhs += mu_a.at(x, xp);
            for (std::uint32_t yp = 0; yp < b.object_count(); ++yp)
                if (g[yp] == x) rhs += mu_b.at(yp, y);
            if (lhs != rhs) {
                report.holds = false;
                report.violations.push_back("(" + a.object_id(x) + ", " + b.object_id(y) +
                                            "): " + lhs.str() + " != " + rhs.str());
            }
        }
    return report;
}

CllResult cll_mobius(const FinCat& c) {
    const std::size_t n = c.arrow_count();
    std::vector<std::string> labels;
    for (const Arrow& a : c.arrows()) labels.push_back(a.id);

    // row f, column g: number of h with h g = f; solving against the
    // identity indicator finds the left convolution inverse of zeta = 1.
    QMat lhs(labels, labels), rhs(labels, labels);
    for (std::uint32_t g0 = 0; g0 < n; ++g0)
        for (std::uint32_t h = 0; h < n; ++h) {
            if (!c.composable(h, g0)) continue;
            const std::uint32_t f0 = c.compose(h, g0);
            lhs.at(f0, g0) += Rat(1);
            rhs.at(f0, h) += Rat(1);
        }
    std::vector<Rat> unit(n);
    for (std::uint32_t f0 = 0; f0 < n; ++f0)
        if (c.is_identity(f0)) unit[f0] = Rat(1);

    auto sol = solve_affine(lhs, unit);
    CllResult r;
    r.cat_name = c.name();
    if (sol.kind == AffineSolutionSet::Kind::None) return r;
    if (sol.kind == AffineSolutionSet::Kind::Family)
        throw MathError("INTERNAL_ERROR", "one-sided convolution inverse is not unique");
    for (std::uint32_t f0 = 0; f0 < n; ++f0) {
        Rat acc;
        for (std::uint32_t h = 0; h < n; ++h) acc += rhs.at(f0, h) * sol.particular[h];
        if (acc != unit[f0])
            throw MathError("INTERNAL_ERROR", "convolution inverse is one-sided only");
    }
    r.values = std::move(sol.particular);
    return r;
}

QMat cll_aggregate(const FinCat& c, std::span<const Rat> values) {
    if (values.size() != c.arrow_count())
        throw InputError("BAD_MAP", "value count does not match the arrow count");
    QMat out(c.objects(), c.objects());
    for (std::uint32_t f = 0; f < c.arrow_count(); ++f)
        out.at(c.arrow(f).src, c.arrow(f).tgt) += values[f];
    return out;
}

}  // namespace eulercat

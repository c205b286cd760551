// Acceptance suite: thirteen end-to-end checks over the whole library, one
// pass/fail line each. All comparisons are exact; there are no tolerances.
#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "eulercat/builders.hpp"
#include "eulercat/constructions.hpp"
#include "eulercat/fincat.hpp"
#include "eulercat/functors.hpp"
#include "eulercat/lefschetz.hpp"
#include "eulercat/mobius.hpp"

using namespace eulercat;

namespace {

struct Failure {
    std::string detail;
};

void expect(bool ok, const std::string& detail) {
    if (!ok) throw Failure{detail};
}

QMat mobius_of(const FinCat& c) {
    MobiusResult mr = mobius_matrix(c);
    expect(mr.ok(), "'" + c.name() + "' unexpectedly lacks Mobius inversion");
    return *mr.mu;
}

Rat chi_of(const FinCat& c) {
    EulerChar chi = euler_characteristic(c);
    expect(chi.ok(), "'" + c.name() + "' unexpectedly lacks an Euler characteristic");
    return *chi.value;
}

std::vector<Rat> weighting_of(const FinCat& c) {
    AffineSolutionSet k = weighting(c);
    expect(k.kind != AffineSolutionSet::Kind::None, "'" + c.name() + "' admits no weighting");
    return k.particular;
}

FinCat full_subcategory(const FinCat& c, const std::vector<std::uint32_t>& keep_objects,
                        const std::string& name) {
    std::vector<bool> in(c.object_count(), false);
    for (std::uint32_t o : keep_objects) in[o] = true;
    CatSpec s;
    s.name = name;
    for (std::uint32_t o = 0; o < c.object_count(); ++o)
        if (in[o]) {
            s.objects.push_back(c.object_id(o));
            s.identities.emplace(c.object_id(o), c.arrow(c.identity(o)).id);
        }
    std::vector<bool> keep_arr(c.arrow_count(), false);
    for (std::uint32_t f = 0; f < c.arrow_count(); ++f) {
        const Arrow& ar = c.arrow(f);
        if (in[ar.src] && in[ar.tgt]) {
            keep_arr[f] = true;
            s.arrows.push_back({ar.id, c.object_id(ar.src), c.object_id(ar.tgt)});
        }
    }
    for (std::uint32_t f = 0; f < c.arrow_count(); ++f) {
        if (!keep_arr[f] || c.is_identity(f)) continue;
        for (std::uint32_t g = 0; g < c.arrow_count(); ++g) {
            if (!keep_arr[g] || c.is_identity(g) || !c.composable(g, f)) continue;
            s.composites.push_back(
                {c.arrow(g).id, c.arrow(f).id, c.arrow(c.compose(g, f)).id});
        }
    }
    return FinCat::build(std::move(s));
}

FinCat full_subcategory(const FinCat& c, const std::vector<std::string>& ids,
                        const std::string& name) {
    std::vector<std::uint32_t> keep;
    for (const std::string& id : ids) keep.push_back(c.object_at(id));
    return full_subcategory(c, keep, name);
}

Profunctor constant_profunctor(FinCat b, FinCat a, long k) {
    Profunctor m;
    m.b = std::move(b);
    m.a = std::move(a);
    std::vector<std::string> cell;
    for (long i = 0; i < k; ++i) cell.push_back("m" + std::to_string(i + 1));
    std::vector<std::uint32_t> ident(k);
    std::iota(ident.begin(), ident.end(), 0u);
    m.elems.assign(m.b.object_count(),
                   std::vector<std::vector<std::string>>(m.a.object_count(), cell));
    m.left.assign(m.b.arrow_count(),
                  std::vector<std::vector<std::uint32_t>>(m.a.object_count(), ident));
    m.right.assign(m.a.arrow_count(),
                   std::vector<std::vector<std::uint32_t>>(m.b.object_count(), ident));
    return m;
}

// The hom profunctor of a category with itself: M(b, a) = C(b, a), the left
// action precomposes and the right action postcomposes.
Profunctor hom_profunctor(const FinCat& c) {
    Profunctor m;
    m.b = c;
    m.a = c;
    const std::size_t n = c.object_count();
    m.elems.assign(n, std::vector<std::vector<std::string>>(n));
    for (std::uint32_t bi = 0; bi < n; ++bi)
        for (std::uint32_t ai = 0; ai < n; ++ai)
            for (std::uint32_t h : c.hom(bi, ai)) m.elems[bi][ai].push_back(c.arrow(h).id);
    auto position = [&](std::uint32_t src, std::uint32_t tgt, std::uint32_t arr) {
        const auto& hom = c.hom(src, tgt);
        return static_cast<std::uint32_t>(std::find(hom.begin(), hom.end(), arr) - hom.begin());
    };
    m.left.assign(c.arrow_count(), std::vector<std::vector<std::uint32_t>>(n));
    m.right.assign(c.arrow_count(), std::vector<std::vector<std::uint32_t>>(n));
    for (std::uint32_t f = 0; f < c.arrow_count(); ++f) {
        const Arrow& ar = c.arrow(f);
        for (std::uint32_t ai = 0; ai < n; ++ai)
            for (std::uint32_t h : c.hom(ar.tgt, ai))
                m.left[f][ai].push_back(position(ar.src, ai, c.compose(h, f)));
        for (std::uint32_t bi = 0; bi < n; ++bi)
            for (std::uint32_t h : c.hom(bi, ar.src))
                m.right[f][bi].push_back(position(bi, ar.tgt, c.compose(f, h)));
    }
    return m;
}

// Poset and monoid collages used by criteria 8 and 10.
std::vector<Profunctor> collage_instances() {
    auto cat = [](const char* name, std::vector<long> params) {
        return build_catalog(name, params);
    };
    std::vector<Profunctor> out;
    out.push_back(constant_profunctor(cat("subsets_poset", {2}), cat("sphere_poset", {1}), 1));
    out.push_back(constant_profunctor(cat("sphere_poset", {0}), cat("subsets_poset", {2}), 1));
    out.push_back(constant_profunctor(cat("pushout_shape", {}), cat("discrete", {2}), 1));
    out.push_back(constant_profunctor(cat("discrete", {3}), cat("pushout_shape", {}), 1));
    out.push_back(constant_profunctor(cat("sphere_poset", {0}), cat("sphere_poset", {0}), 2));
    out.push_back(constant_profunctor(cat("subsets_poset", {2}), cat("sphere_poset", {0}), 0));
    out.push_back(hom_profunctor(cat("subsets_poset", {2})));
    out.push_back(hom_profunctor(cat("sphere_poset", {1})));
    out.push_back(constant_profunctor(cat("cyclic_group", {2}), cat("cyclic_group", {3}), 1));
    out.push_back(constant_profunctor(cat("cyclic_group", {4}), cat("cyclic_group", {2}), 1));
    out.push_back(constant_profunctor(cat("idempotent_monoid", {}), cat("cyclic_group", {2}), 1));
    out.push_back(hom_profunctor(cat("cyclic_group", {2})));
    out.push_back(constant_profunctor(cat("cyclic_group", {3}), cat("cyclic_group", {3}), 2));
    return out;
}

std::vector<std::vector<std::uint32_t>> monotone_maps(const FinCat& poset) {
    const std::size_t n = poset.object_count();
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> f(n, 0);
    while (true) {
        bool ok = true;
        for (std::uint32_t i = 0; i < poset.arrow_count() && ok; ++i) {
            const Arrow& ar = poset.arrow(i);
            if (poset.hom(f[ar.src], f[ar.tgt]).empty()) ok = false;
        }
        if (ok) out.push_back(f);
        std::size_t pos = n;
        while (pos > 0 && f[pos - 1] + 1 == n) f[--pos] = 0;
        if (pos == 0) break;
        ++f[pos - 1];
    }
    return out;
}

CatFunctor sphere_step(long n) {
    CatFunctor x;
    x.domain = build_catalog("pushout_shape", {});
    FinCat lower = build_catalog("sphere_poset", {n - 1});
    FinCat point = build_catalog("discrete", {1});
    CatMap collapse;
    collapse.obj_map.assign(lower.object_count(), 0);
    collapse.arr_map.assign(lower.arrow_count(), 0);
    const std::uint32_t a = x.domain.object_at("a");
    const std::uint32_t b1 = x.domain.object_at("b1");
    const std::uint32_t b2 = x.domain.object_at("b2");
    x.object_cats.resize(3);
    x.object_cats[a] = lower;
    x.object_cats[b1] = point;
    x.object_cats[b2] = point;
    x.arrow_actions.resize(x.domain.arrow_count());
    x.arrow_actions[x.domain.arrow_at("l")] = collapse;
    x.arrow_actions[x.domain.arrow_at("r")] = collapse;
    x.arrow_actions[x.domain.identity(a)] = identity_cat_map(lower);
    x.arrow_actions[x.domain.identity(b1)] = identity_cat_map(point);
    x.arrow_actions[x.domain.identity(b2)] = identity_cat_map(point);
    return x;
}

// ------------------------------------------------------------------ criteria

// mu(1,2) = -5/2 in F_3, and the epi-mono factorization route reproduces the
// whole matrix.
void criterion_1() {
    FinCat c = build_catalog("fin_sets", {3});
    QMat mu = mobius_of(c);
    expect(mu.entry("1", "2") == Rat(-5, 2), "mu(1,2) = " + mu.entry("1", "2").str());
    QMat via = mobius_by_factorization(c, epimorphisms(c), monomorphisms(c)).matrix;
    expect(via == mu, "factorization route differs from the matrix inverse");
}

// Binomial Mobius functions of the injection and surjection categories.
void criterion_2() {
    for (long n = 0; n <= 6; ++n) {
        FinCat c = build_catalog("delta_inj", {n});
        QMat mu = mobius_of(c);
        for (long a = 0; a <= n; ++a)
            for (long b = 0; b <= n; ++b) {
                Rat want = binomial(b, a) * Rat((b - a) % 2 ? -1 : 1);
                expect(mu.at(a, b) == want, "delta_inj(" + std::to_string(n) + ") at (" +
                                                std::to_string(a) + "," + std::to_string(b) + ")");
            }
    }
    for (long n = 1; n <= 6; ++n) {
        FinCat c = build_catalog("delta_surj", {n});
        QMat mu = mobius_of(c);
        for (long a = 1; a <= n; ++a)
            for (long b = 1; b <= n; ++b) {
                Rat want = binomial(a - 1, b - 1) * Rat((a - b) % 2 ? -1 : 1);
                expect(mu.at(a - 1, b - 1) == want,
                       "delta_surj(" + std::to_string(n) + ") at (" + std::to_string(a) + "," +
                           std::to_string(b) + ")");
            }
    }
}

// chi(S^n) = 1 + (-1)^n three ways.
void criterion_3() {
    for (long n = 0; n <= 6; ++n) {
        FinCat c = build_catalog("sphere_poset", {n});
        Rat want(n % 2 ? 0 : 2);
        std::vector<Rat> k = weighting_of(c);
        Rat by_weighting = std::accumulate(k.begin(), k.end(), Rat(0));
        expect(by_weighting == want, "S^" + std::to_string(n) + " weighting sum");
        expect(mobius_of(c).entry_sum() == want, "S^" + std::to_string(n) + " mu sum");
        expect(nerve_euler(c) == want, "S^" + std::to_string(n) + " nerve count");
    }
}

// Unique, missing, and infinite-family weightings.
void criterion_4() {
    AffineSolutionSet push = weighting(build_catalog("pushout_shape", {}));
    expect(push.kind == AffineSolutionSet::Kind::Unique, "pushout_shape weighting not unique");
    expect(push.particular == std::vector<Rat>{Rat(-1), Rat(1), Rat(1)},
           "pushout_shape weighting is not (-1, 1, 1)");
    for (long n = 1; n <= 6; ++n) {
        AffineSolutionSet g = weighting(build_catalog("cyclic_group", {n}));
        expect(g.kind == AffineSolutionSet::Kind::Unique &&
                   g.particular == std::vector<Rat>{Rat(1, n)},
               "cyclic_group(" + std::to_string(n) + ") weighting is not 1/n");
    }
    FinCat bad = build_catalog("no_weighting_example", {});
    expect(weighting(bad).kind == AffineSolutionSet::Kind::None,
           "no_weighting_example admits a weighting");
    for (const std::vector<std::string>& ids :
         {std::vector<std::string>{"a1", "a2"}, std::vector<std::string>{"a1", "a2", "a3"}}) {
        FinCat sub = full_subcategory(bad, ids, "sub" + std::to_string(ids.size()));
        AffineSolutionSet k = weighting(sub);
        expect(k.kind == AffineSolutionSet::Kind::Family && !k.nullspace.empty(),
               sub.name() + " weighting is not an infinite family");
    }
}

// Morita-inequivalent Euler characteristics.
void criterion_5() {
    expect(chi_of(build_catalog("idempotent_monoid", {})) == Rat(1, 2),
           "chi(idempotent_monoid) != 1/2");
    expect(chi_of(build_catalog("split_epi_category", {})) == Rat(1),
           "chi(split_epi_category) != 1");
}

// Derangement numbers three ways: brute force, the Mobius formula, and the
// representable decomposition.
void criterion_6() {
    std::vector<long> oracle;
    for (int n = 0; n <= 6; ++n) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        long fixed_free = 0;
        do {
            bool free_of_fixed = true;
            for (int i = 0; i < n; ++i)
                if (perm[i] == i) free_of_fixed = false;
            if (free_of_fixed) ++fixed_free;
        } while (std::next_permutation(perm.begin(), perm.end()));
        oracle.push_back(fixed_free);
    }
    expect(oracle == std::vector<long>{1, 0, 1, 2, 9, 44, 265}, "oracle enumeration drifted");

    SetFunctor x = build_functor("symmetric_action", {6});
    std::vector<Rat> blind = representation_coefficients(x);
    FRDecomposition fr = fr_decompose(x);
    expect(fr.ok(), "symmetric action is not familially representable: " + fr.failure);
    for (int n = 0; n <= 6; ++n) {
        expect(blind[n] == Rat(oracle[n]), "mu formula differs at " + std::to_string(n));
        expect(Rat(static_cast<long>(fr.r[n])) == Rat(oracle[n]),
               "decomposition differs at " + std::to_string(n));
    }
}

// Colimit cardinality theorem over >= 50 generated nondegenerate functors,
// plus inclusion-exclusion for three concrete sets.
void criterion_7() {
    std::vector<SetFunctor> generated;

    for (long na = 1; na <= 3; ++na)
        for (long nb1 = na; nb1 <= na + 2; ++nb1)
            for (long nb2 = na; nb2 <= na + 2; ++nb2) {
                std::vector<long> params = {na, nb1, nb2};
                for (long i = 1; i <= na; ++i) params.push_back(i);
                for (long i = nb2 - na + 1; i <= nb2; ++i) params.push_back(i);
                generated.push_back(build_functor("pushout_data", params));
            }

    for (auto [n, k] : std::vector<std::pair<long, long>>{
             {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {4, 1}, {4, 2}, {5, 1}, {6, 1}}) {
        std::vector<long> params = {n, n * k};
        for (long block = 0; block < k; ++block)
            for (long j = 0; j < n; ++j) params.push_back(block * n + (j + 1) % n);
        generated.push_back(build_functor("group_action", params));
    }

    for (const std::vector<long>& masks : std::vector<std::vector<long>>{
             {5}, {3}, {3, 6}, {1, 2}, {5, 12}, {7, 11}, {3, 6, 12}, {1, 2, 4},
             {7, 14, 28}, {21, 42, 84}, {3, 6, 12, 24}, {1, 3, 7, 15},
             {85, 51, 15, 255}, {17, 34, 68, 136}})
        generated.push_back(build_functor("intersection_diagram", masks));

    FinCat pair = build_catalog("parallel_pair", {});
    for (auto [p, q] : std::vector<std::pair<int, int>>{
             {1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 6}, {3, 7}, {1, 4}, {2, 6}}) {
        SetFunctor x;
        x.domain = pair;
        x.object_sets.resize(2);
        x.arrow_actions.resize(pair.arrow_count());
        const std::uint32_t a = pair.object_at("a"), b = pair.object_at("b");
        for (int i = 0; i < p; ++i) x.object_sets[a].push_back("x" + std::to_string(i + 1));
        for (int i = 0; i < q; ++i) x.object_sets[b].push_back("y" + std::to_string(i + 1));
        std::vector<std::uint32_t> s(p), t(p);
        std::iota(s.begin(), s.end(), 0u);
        std::iota(t.begin(), t.end(), static_cast<std::uint32_t>(p));
        x.arrow_actions[pair.arrow_at("s")] = s;
        x.arrow_actions[pair.arrow_at("t")] = t;
        std::vector<std::uint32_t> ida(p), idb(q);
        std::iota(ida.begin(), ida.end(), 0u);
        std::iota(idb.begin(), idb.end(), 0u);
        x.arrow_actions[pair.identity(a)] = ida;
        x.arrow_actions[pair.identity(b)] = idb;
        generated.push_back(std::move(x));
    }

    expect(generated.size() >= 50,
           "only " + std::to_string(generated.size()) + " functors generated");
    for (const SetFunctor& x : generated) {
        const std::string who = x.domain.name();
        expect(set_functor_violation(x) == std::nullopt, who + ": invalid functor");
        expect(structural_profile(x.domain).is_cauchy_complete, who + ": not Cauchy-complete");
        NondegeneracyReport nd = is_nondegenerate(x);
        expect(nd.nondegenerate, who + ": degenerate (" + nd.witness + ")");
        Rat card = colimit_cardinality_via_weighting(x, weighting_of(x.domain));
        expect(card == Rat(static_cast<long>(colimit(x).size())),
               who + ": weighted sum differs from the component count");
    }

    // S1 = {0,1,4,6}, S2 = {1,2,4}, S3 = {4,5,6}: the colimit is the union.
    SetFunctor x = build_functor("intersection_diagram", {83, 22, 112});
    std::size_t union_size = std::popcount(83u | 22u | 112u);
    expect(union_size == 6, "mask arithmetic drifted");
    expect(colimit(x).size() == union_size, "colimit is not the union");
    expect(colimit_cardinality_via_weighting(x, weighting_of(x.domain)) ==
               Rat(static_cast<long>(union_size)),
           "inclusion-exclusion sum is off");
}

// Vanishing theorem and interval restriction over the catalog closed under
// one combinator application.
void criterion_8() {
    std::vector<FinCat> base;
    for (const auto& entry : standard_catalog()) base.push_back(entry.construct());

    std::vector<FinCat> pool = base;
    for (std::size_t i = 0; i + 1 < base.size(); ++i) {
        pool.push_back(sum({base[i], base[i + 1]}));
        if (base[i].arrow_count() * base[i + 1].arrow_count() <= 600)
            pool.push_back(product({base[i], base[i + 1]}));
    }
    for (const FinCat& c : base) {
        pool.push_back(adjoin_bounds(c, true, false));
        pool.push_back(adjoin_bounds(c, false, true));
        pool.push_back(adjoin_bounds(c, true, true));
    }
    for (const Profunctor& m : collage_instances()) pool.push_back(collage(m));

    std::size_t with_mu = 0;
    auto vanishing = [&](const FinCat& c) {
        MobiusResult mr = mobius_matrix(c);
        if (!mr.ok()) return;
        ++with_mu;
        QMat z = zeta(c).matrix;
        for (std::size_t i = 0; i < c.object_count(); ++i)
            for (std::size_t j = 0; j < c.object_count(); ++j)
                expect(!z.at(i, j).is_zero() || mr.mu->at(i, j).is_zero(),
                       c.name() + ": mu nonzero where zeta vanishes");
    };

    for (const FinCat& c : pool) vanishing(c);

    for (const FinCat& c : base) {
        MobiusResult ambient = mobius_matrix(c);
        if (!ambient.ok()) continue;
        for (std::uint32_t a = 0; a < c.object_count(); ++a)
            for (std::uint32_t b = 0; b < c.object_count(); ++b) {
                FinCat piece = interval(c, c.object_id(a), c.object_id(b));
                vanishing(piece);
                QMat mu = mobius_of(piece);
                for (const std::string& x : piece.objects())
                    for (const std::string& y : piece.objects())
                        expect(mu.entry(x, y) == ambient.mu->entry(x, y),
                               piece.name() + ": interval mu is not the restriction");
            }
    }
    expect(with_mu >= 100, "only " + std::to_string(with_mu) + " categories had inversion");
}

// chi of a free category equals vertices minus edges.
void criterion_9() {
    std::mt19937 rng(20240824u);
    for (int trial = 0; trial < 20; ++trial) {
        DirectedGraph g;
        std::size_t n = 2 + rng() % 7;
        for (std::size_t v = 0; v < n; ++v) g.vertices.push_back("v" + std::to_string(v));
        std::size_t e = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (rng() % 2)
                    g.edges.push_back({"e" + std::to_string(e++), g.vertices[i], g.vertices[j]});
        Rat chi = euler_of_graph(g);
        expect(chi == Rat(static_cast<long>(n) - static_cast<long>(e)),
               "trial " + std::to_string(trial) + ": chi != |V| - |E|");
    }
}

// Freely adjoined bounds and the collage block formula.
void criterion_10() {
    for (const auto& entry : standard_catalog()) {
        FinCat c = entry.construct();
        MobiusResult mr = mobius_matrix(c);
        if (!mr.ok()) continue;
        FinCat bounded = adjoin_bounds(c, true, true);
        QMat mu = mobius_of(bounded);
        expect(mu.at(0, bounded.object_count() - 1) == chi_of(c) - Rat(1),
               c.name() + ": mu(0,1) != chi - 1");
    }

    std::size_t checked = 0;
    for (const Profunctor& m : collage_instances()) {
        QMat mu_b = mobius_of(m.b), mu_a = mobius_of(m.a);
        FinCat c = collage(m);
        QMat mu = mobius_of(c);
        const std::size_t nb = m.b.object_count();
        for (std::size_t b = 0; b < nb; ++b)
            for (std::size_t b2 = 0; b2 < nb; ++b2)
                expect(mu.at(b, b2) == mu_b.at(b, b2), c.name() + ": B block");
        for (std::size_t a = 0; a < m.a.object_count(); ++a)
            for (std::size_t a2 = 0; a2 < m.a.object_count(); ++a2)
                expect(mu.at(nb + a, nb + a2) == mu_a.at(a, a2), c.name() + ": A block");
        for (std::size_t a = 0; a < m.a.object_count(); ++a)
            for (std::size_t b = 0; b < nb; ++b)
                expect(mu.at(nb + a, b).is_zero(), c.name() + ": lower block");
        for (std::size_t b = 0; b < nb; ++b)
            for (std::size_t a = 0; a < m.a.object_count(); ++a) {
                Rat cross;
                for (std::size_t b2 = 0; b2 < nb; ++b2)
                    for (std::size_t a2 = 0; a2 < m.a.object_count(); ++a2)
                        cross += mu_b.at(b, b2) *
                                 Rat(static_cast<long>(m.elems[b2][a2].size())) * mu_a.at(a2, a);
                expect(mu.at(b, nb + a) == -cross, c.name() + ": cross block");
            }
        ++checked;
    }
    expect(checked >= 10, "only " + std::to_string(checked) + " collages checked");
}

// Lefschetz numbers: the identity, cyclicity, algebras and coalgebras, and
// the three comparison subposets.
void criterion_11() {
    for (const auto& entry : standard_catalog()) {
        FinCat c = entry.construct();
        EulerChar chi = euler_characteristic(c);
        if (!chi.ok()) continue;
        EulerChar lam = lefschetz_number(identity_endofunctor(c));
        expect(lam.ok() && *lam.value == *chi.value, c.name() + ": Lambda(1) != chi");
    }

    std::vector<FinCat> posets = {
        build_catalog("subsets_poset", {2}),
        build_catalog("sphere_poset", {1}),
        build_catalog("pushout_shape", {}),
        poset_from_relation("chain4", {"0", "1", "2", "3"}, {{"0", "1"}, {"1", "2"}, {"2", "3"}}),
        poset_from_relation("w5", {"a", "b", "c", "d", "e"},
                            {{"a", "b"}, {"c", "b"}, {"c", "d"}, {"e", "d"}}),
    };
    for (const FinCat& p : posets) {
        expect(p.object_count() <= 5, p.name() + ": sample poset too large");
        auto maps = monotone_maps(p);
        std::vector<Endofunctor> endos;
        for (const auto& fm : maps) endos.push_back(monotone_endofunctor(p, fm));

        for (std::size_t i = 0; i < endos.size(); ++i) {
            const Endofunctor& f = endos[i];
            EulerChar lam = lefschetz_number(f);
            expect(lam.ok(), p.name() + ": Lambda undefined");
            Rat alg = chi_of(algebra_category(f));
            Rat coalg = chi_of(coalgebra_category(f));
            expect(alg == *lam.value && coalg == *lam.value,
                   p.name() + ": chi(Alg) = Lambda = chi(Coalg) fails");

            std::vector<std::uint32_t> below, fixed, above;
            for (std::uint32_t a = 0; a < p.object_count(); ++a) {
                const std::uint32_t fa = f.map.obj_map[a];
                if (!p.hom(fa, a).empty()) below.push_back(a);
                if (!p.hom(a, fa).empty()) above.push_back(a);
                if (fa == a) fixed.push_back(a);
            }
            Rat c1 = chi_of(full_subcategory(p, below, "below"));
            Rat c2 = chi_of(full_subcategory(p, fixed, "fixed"));
            Rat c3 = chi_of(full_subcategory(p, above, "above"));
            expect(c1 == *lam.value && c2 == *lam.value && c3 == *lam.value,
                   p.name() + ": the three subposets do not share chi");
        }

        for (const Endofunctor& f : endos)
            for (const Endofunctor& g : endos) {
                EulerChar gf = lefschetz_number(compose(g, f));
                EulerChar fg = lefschetz_number(compose(f, g));
                expect(gf.ok() && fg.ok() && *gf.value == *fg.value,
                       p.name() + ": Lambda(GF) != Lambda(FG)");
            }
    }
}

// Arrow-level Mobius functions: existence and aggregation on posets,
// non-existence for non-trivial groups.
void criterion_12() {
    for (const auto& entry : standard_catalog()) {
        FinCat c = entry.construct();
        CllResult r = cll_mobius(c);
        if (is_poset(c))
            expect(r.ok(), c.name() + ": poset lacks an arrow-level Mobius function");
        if (!r.ok()) continue;
        MobiusResult mr = mobius_matrix(c);
        if (!mr.ok()) continue;
        expect(cll_aggregate(c, *r.values).same_entries(*mr.mu),
               c.name() + ": aggregation identity fails");
    }
    for (long n = 2; n <= 5; ++n)
        expect(!cll_mobius(build_catalog("cyclic_group", {n})).ok(),
               "cyclic_group(" + std::to_string(n) + ") is CLL-invertible");
}

// Fibration formula: weak quotients and the sphere recursion.
void criterion_13() {
    for (auto [n, m, sigma] : std::vector<std::tuple<long, long, std::vector<long>>>{
             {2, 2, {1, 0}},
             {2, 4, {1, 0, 3, 2}},
             {3, 3, {1, 2, 0}},
             {2, 2, {0, 1}},
             {4, 4, {1, 2, 3, 0}},
             {3, 6, {1, 2, 0, 4, 5, 3}}}) {
        std::vector<long> params = {n, m};
        params.insert(params.end(), sigma.begin(), sigma.end());
        SetFunctor x = build_functor("group_action", params);
        Rat chi = chi_of_elements(as_cat_functor(x), weighting_of(x.domain));
        expect(chi == Rat(m, n), "chi(S//M) != |S|/|M| at n=" + std::to_string(n) +
                                     ", m=" + std::to_string(m));
    }

    FinCat shape = build_catalog("pushout_shape", {});
    std::vector<Rat> k = weighting_of(shape);
    for (long n = 1; n <= 4; ++n) {
        Rat step = chi_of_elements(sphere_step(n), k);
        Rat lower = chi_of(build_catalog("sphere_poset", {n - 1}));
        expect(step == Rat(2) - lower, "S^" + std::to_string(n) + " recursion");
        expect(step == chi_of(build_catalog("sphere_poset", {n})),
               "S^" + std::to_string(n) + " direct chi");
    }
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
        {"fin_sets(3) Mobius value and factorization route", criterion_1},
        {"binomial Mobius functions of delta_inj and delta_surj", criterion_2},
        {"sphere poset chi three ways", criterion_3},
        {"weighting trichotomy", criterion_4},
        {"Morita-inequivalent Euler characteristics", criterion_5},
        {"derangement numbers", criterion_6},
        {"colimit cardinality theorem", criterion_7},
        {"vanishing theorem and interval restriction", criterion_8},
        {"free category graph formula", criterion_9},
        {"adjoined bounds and collage Mobius formulas", criterion_10},
        {"Lefschetz number suite", criterion_11},
        {"arrow-level Mobius comparison", criterion_12},
        {"fibration formula", criterion_13},
    };

    std::size_t passed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string verdict = "PASS";
        std::string detail;
        try {
            criteria[i].second();
            ++passed;
        } catch (const Failure& f) {
            verdict = "FAIL";
            detail = f.detail;
        } catch (const std::exception& e) {
            verdict = "FAIL";
            detail = e.what();
        }
        std::cout << verdict << "  " << i + 1 << "  " << criteria[i].first;
        if (!detail.empty()) std::cout << "  (" << detail << ")";
        std::cout << "\n";
    }
    std::cout << passed << "/" << criteria.size() << " criteria passed\n";
    return passed == criteria.size() ? 0 : 1;
}

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "eulercat/builders.hpp"
#include "eulercat/constructions.hpp"
#include "eulercat/functors.hpp"
#include "eulercat/mobius.hpp"

using namespace eulercat;

namespace {

template <class E, class F>
std::string code_of(F&& body) {
    try {
        body();
    } catch (const E& e) {
        return e.code();
    } catch (...) {
        return "wrong class";
    }
    return "no throw";
}

SetFunctor free_swap() { return build_functor("group_action", {2, 2, 1, 0}); }

// Two parallel arrows whose actions agree on the only element.
SetFunctor overlapping_pair() {
    SetFunctor x;
    x.domain = build_catalog("parallel_pair", {});
    x.object_sets = {{"x"}, {"y"}};
    x.arrow_actions.resize(x.domain.arrow_count());
    x.arrow_actions[x.domain.arrow_at("s")] = {0};
    x.arrow_actions[x.domain.arrow_at("t")] = {0};
    x.arrow_actions[x.domain.identity(x.domain.object_at("a"))] = {0};
    x.arrow_actions[x.domain.identity(x.domain.object_at("b"))] = {0};
    return x;
}

// Xa = lower-dimensional sphere, both wings collapsed to a point.
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

std::vector<Rat> unique_weighting(const FinCat& c) {
    AffineSolutionSet w = weighting(c);
    REQUIRE(w.kind == AffineSolutionSet::Kind::Unique);
    return w.particular;
}

}  // namespace

TEST_CASE("set functor validation accepts the catalog and rejects tampered data") {
    for (const auto& entry : standard_functor_catalog()) {
        CAPTURE(entry.name);
        CHECK(set_functor_violation(entry.construct()) == std::nullopt);
    }

    SetFunctor x = free_swap();
    SetFunctor broken = x;
    broken.object_sets.pop_back();  // wrong container shape is reported, not UB
    CHECK(set_functor_violation(broken).has_value());

    broken = x;
    broken.object_sets[0] = {"u", "u"};
    CHECK(set_functor_violation(broken).value().find("repeats") != std::string::npos);

    broken = x;
    broken.arrow_actions[broken.domain.identity(0)] = {1, 0};
    CHECK(set_functor_violation(broken).value().find("identity") != std::string::npos);

    broken = x;
    broken.arrow_actions[broken.domain.arrow_at("r1")] = {0};
    CHECK(set_functor_violation(broken).value().find("source size") != std::string::npos);

    broken = x;
    broken.arrow_actions[broken.domain.arrow_at("r1")] = {5, 0};
    CHECK(set_functor_violation(broken).value().find("leaves") != std::string::npos);

    SetFunctor bad;  // the generator acts with order 3, but r1 r1 = id
    bad.domain = build_catalog("cyclic_group", {2});
    bad.object_sets = {{"e0", "e1", "e2"}};
    bad.arrow_actions.resize(2);
    bad.arrow_actions[bad.domain.arrow_at("r1")] = {1, 2, 0};
    bad.arrow_actions[bad.domain.identity(0)] = {0, 1, 2};
    CHECK(set_functor_violation(bad).value().find("compose") != std::string::npos);
}

TEST_CASE("cat functor validation") {
    CatFunctor c =
        constant_cat_functor(build_catalog("pushout_shape", {}), build_catalog("subsets_poset", {2}));
    CHECK(cat_functor_violation(c) == std::nullopt);

    CatFunctor broken =
        constant_cat_functor(build_catalog("pushout_shape", {}), build_catalog("discrete", {2}));
    broken.arrow_actions[broken.domain.identity(0)] = CatMap{{1, 0}, {1, 0}};
    CHECK(cat_functor_violation(broken).value().find("identity") != std::string::npos);

    broken = constant_cat_functor(build_catalog("pushout_shape", {}), build_catalog("discrete", {2}));
    broken.arrow_actions[broken.domain.arrow_at("l")].arr_map = {0, 0};
    CHECK(cat_functor_violation(broken).has_value());
}

TEST_CASE("elements of a set functor projects functorially") {
    for (const char* name : {"group_action", "intersection_diagram", "pushout_data"}) {
        for (const auto& entry : standard_functor_catalog()) {
            if (entry.name != name) continue;
            CAPTURE(entry.name);
            SetFunctor x = entry.construct();
            ElementsCategory e = elements(x);
            CHECK(functor_violation(e.cat, x.domain, e.to_base) == std::nullopt);
            std::size_t want_objects = 0, want_arrows = 0;
            for (const auto& set : x.object_sets) want_objects += set.size();
            for (const auto& act : x.arrow_actions) want_arrows += act.size();
            CHECK(e.cat.object_count() == want_objects);
            CHECK(e.cat.arrow_count() == want_arrows);
            for (std::uint32_t o = 0; o < e.cat.object_count(); ++o)
                CHECK(e.cat.object_id(o) ==
                      element_label(x.domain, e.object_over[o],
                                    x.object_sets[e.object_over[o]][e.object_fiber[o]]));
        }
    }

    ElementsCategory e = elements(free_swap());
    REQUIRE(e.cat.object_count() == 2);
    REQUIRE(e.cat.arrow_count() == 4);
    for (std::uint32_t o = 0; o < 2; ++o)
        for (std::uint32_t p = 0; p < 2; ++p) CHECK(e.cat.hom(o, p).size() == 1);
    CHECK(*euler_characteristic(e.cat).value == Rat(1));

    // The category of elements of hom(a, -) has (a, id_a) as initial object.
    FinCat sub = build_catalog("subsets_poset", {2});
    for (std::uint32_t a = 0; a < sub.object_count(); ++a) {
        ElementsCategory r = elements(representable(sub, a));
        std::uint32_t initial = UINT32_MAX;
        for (std::uint32_t o = 0; o < r.cat.object_count() && initial == UINT32_MAX; ++o) {
            bool ok = true;
            for (std::uint32_t p = 0; p < r.cat.object_count(); ++p)
                if (r.cat.hom(o, p).size() != 1) ok = false;
            if (ok) initial = o;
        }
        REQUIRE(initial != UINT32_MAX);
        CHECK(r.object_over[initial] == a);
        CHECK(r.cat.object_id(initial) == element_label(sub, a, sub.arrow(sub.identity(a)).id));
    }

    CHECK(code_of<InputError>([&] { elements(free_swap(), 3); }) == "SIZE_OVERFLOW");
}

TEST_CASE("elements of a cat functor matches the sphere construction") {
    for (long n = 0; n <= 3; ++n) {
        CAPTURE(n);
        CatFunctor x = sphere_step(n);
        ElementsCategory e = elements(x);
        CHECK(functor_violation(e.cat, x.domain, e.to_base) == std::nullopt);
        FinCat sphere = build_catalog("sphere_poset", {n});
        CHECK(is_poset(e.cat));
        CHECK(e.cat.object_count() == sphere.object_count());
        CHECK(e.cat.arrow_count() == sphere.arrow_count());
        CHECK(*euler_characteristic(e.cat).value == *euler_characteristic(sphere).value);
    }

    // Discrete fibers reproduce the set-level elements up to arrow names.
    SetFunctor x = build_functor("group_action", {2, 4, 1, 0, 3, 2});
    ElementsCategory set_e = elements(x);
    ElementsCategory cat_e = elements(as_cat_functor(x));
    CHECK(set_e.cat.object_count() == cat_e.cat.object_count());
    CHECK(set_e.cat.arrow_count() == cat_e.cat.arrow_count());
    CHECK(*euler_characteristic(set_e.cat).value == *euler_characteristic(cat_e.cat).value);
}

TEST_CASE("colimits count identified elements") {
    SetQuotient q = colimit(build_functor("pushout_data", {1, 2, 2, 2, 1}));
    CHECK(q.size() == 3);
    CHECK(q.representatives == std::vector<std::string>{"a@x1", "b1@y1", "b2@z2"});
    CHECK(q.labels == std::vector<std::string>{"a@x1", "b1@y1", "b1@y2", "b2@z1", "b2@z2"});
    CHECK(q.component == std::vector<std::uint32_t>{0, 1, 0, 0, 2});

    CHECK(colimit(build_functor("group_action", {2, 4, 1, 0, 3, 2})).representatives ==
          std::vector<std::string>{"*@e0", "*@e2"});
    CHECK(colimit(build_functor("group_action", {2, 2, 0, 1})).size() == 2);
    CHECK(colimit(build_functor("group_action", {4, 4, 1, 2, 3, 0})).size() == 1);

    CHECK(colimit(build_functor("intersection_diagram", {3, 6})).size() == 3);
    CHECK(colimit(build_functor("intersection_diagram", {1, 2, 4})).size() == 3);
    CHECK(colimit(build_functor("intersection_diagram", {7, 7, 7})).size() == 3);

    FinCat fs = build_catalog("fin_sets", {3});
    for (std::uint32_t a = 0; a < fs.object_count(); ++a)
        CHECK(colimit(representable(fs, a)).size() == 1);

    CHECK(colimit(build_functor("symmetric_action", {3})).size() == 4);
    CHECK(colimit(build_functor("symmetric_action", {4})).size() == 13);

    CHECK(colimit(constant_set_functor(build_catalog("subsets_poset", {3}), {"u"})).size() == 1);
    CHECK(colimit(constant_set_functor(build_catalog("discrete", {3}), {"u", "v"})).size() == 6);
}

TEST_CASE("nondegeneracy detects gluing obstructions") {
    CHECK(is_nondegenerate(build_functor("pushout_data", {1, 2, 2, 2, 1})).nondegenerate);
    NondegeneracyReport bad = is_nondegenerate(build_functor("pushout_data", {2, 2, 2, 1, 1, 1, 2}));
    CHECK_FALSE(bad.nondegenerate);
    CHECK(bad.witness.find("cospan") != std::string::npos);

    CHECK(is_nondegenerate(free_swap()).nondegenerate);
    CHECK(is_nondegenerate(build_functor("group_action", {4, 4, 1, 2, 3, 0})).nondegenerate);
    CHECK(is_nondegenerate(build_functor("group_action", {2, 4, 1, 0, 3, 2})).nondegenerate);

    NondegeneracyReport fixed = is_nondegenerate(build_functor("group_action", {2, 2, 0, 1}));
    CHECK_FALSE(fixed.nondegenerate);
    CHECK(fixed.witness.find("fork") != std::string::npos);

    // Both arrows hit the same element, and no span reconciles the two routes.
    NondegeneracyReport overlap = is_nondegenerate(overlapping_pair());
    CHECK_FALSE(overlap.nondegenerate);
    CHECK(overlap.witness.find("cospan") != std::string::npos);

    CHECK(is_nondegenerate(build_functor("intersection_diagram", {3, 6})).nondegenerate);
    CHECK(is_nondegenerate(build_functor("intersection_diagram", {1, 2, 4})).nondegenerate);
    CHECK(is_nondegenerate(build_functor("symmetric_action", {3})).nondegenerate);

    // Representables are always nondegenerate: complete with the element itself.
    CHECK(is_nondegenerate(representable(build_catalog("fin_sets", {2}), 0)).nondegenerate);
    CHECK(is_nondegenerate(representable(build_catalog("no_weighting_example", {}), 1)).nondegenerate);
}

TEST_CASE("familial decomposition extracts multiplicities") {
    FRDecomposition fr = fr_decompose(build_functor("symmetric_action", {3}));
    REQUIRE(fr.ok());
    CHECK(fr.r == std::vector<std::uint32_t>{1, 0, 1, 2});
    REQUIRE(fr.initials.size() == 4);
    SetFunctor sym3 = build_functor("symmetric_action", {3});
    for (auto [obj, fib] : fr.initials) {
        const std::string& word = sym3.object_sets[obj][fib];
        for (std::size_t j = 1; j < word.size(); ++j)  // generators are fixed-point-free
            CHECK(word[j] != static_cast<char>('0' + j));
    }

    CHECK(fr_decompose(build_functor("symmetric_action", {4})).r ==
          std::vector<std::uint32_t>{1, 0, 1, 2, 9});

    // Brute-force check of the multiplicities against direct enumeration.
    for (unsigned m = 0; m <= 4; ++m) {
        std::vector<unsigned> p(m);
        std::iota(p.begin(), p.end(), 0u);
        std::uint32_t count = 0;
        do {
            bool fixed_point_free = true;
            for (unsigned j = 0; j < m; ++j)
                if (p[j] == j) fixed_point_free = false;
            if (fixed_point_free) ++count;
        } while (std::next_permutation(p.begin(), p.end()));
        CHECK(fr_decompose(build_functor("symmetric_action", {4})).r[m] == count);
    }

    FinCat sub = build_catalog("subsets_poset", {2});
    SetFunctor twice = set_functor_sum(representable(sub, 0), representable(sub, 0));
    CHECK(fr_decompose(twice).r == std::vector<std::uint32_t>{2, 0, 0});

    FRDecomposition degenerate = fr_decompose(build_functor("group_action", {2, 2, 0, 1}));
    CHECK_FALSE(degenerate.ok());
    CHECK(degenerate.failure.find("initial") != std::string::npos);
    CHECK(degenerate.r.empty());

    SetFunctor idem;
    idem.domain = build_catalog("idempotent_monoid", {});
    idem.object_sets = {{"u", "v"}};
    idem.arrow_actions.resize(2);
    idem.arrow_actions[idem.domain.arrow_at("e")] = {0, 0};
    idem.arrow_actions[idem.domain.identity(0)] = {0, 1};
    REQUIRE(set_functor_violation(idem) == std::nullopt);
    CHECK(code_of<MathError>([&] { fr_decompose(idem); }) == "DOMAIN_NOT_CAUCHY_COMPLETE");
}

TEST_CASE("representation coefficients invert the counting matrix") {
    std::vector<Rat> want = {1, 0, 1, 2, 9, 44, 265};
    SetFunctor sym6 = build_functor("symmetric_action", {6});
    CHECK(representation_coefficients(sym6) == want);
    FRDecomposition fr = fr_decompose(sym6);
    REQUIRE(fr.ok());
    REQUIRE(fr.r.size() == want.size());
    for (std::size_t m = 0; m < want.size(); ++m) CHECK(Rat(static_cast<long>(fr.r[m])) == want[m]);

    FinCat fs = build_catalog("fin_sets", {3});
    CHECK(representation_coefficients(representable(fs, 0)) == std::vector<Rat>{1, 0, 0});
    CHECK(representation_coefficients(representable(fs, 1)) == std::vector<Rat>{0, 1, 0});

    SetFunctor stuck = constant_set_functor(build_catalog("no_weighting_example", {}), {"u"});
    CHECK(code_of<MathError>([&] { representation_coefficients(stuck); }) == "NO_MOBIUS_INVERSION");
}

TEST_CASE("weighted cardinality of a colimit") {
    SetFunctor glue = build_functor("pushout_data", {1, 2, 2, 2, 1});
    CHECK(colimit_cardinality_via_weighting(glue, unique_weighting(glue.domain)) == Rat(3));

    CHECK(colimit_cardinality_via_weighting(build_functor("group_action", {2, 4, 1, 0, 3, 2}),
                                            std::vector<Rat>{Rat(1, 2)}) == Rat(2));
    CHECK(colimit_cardinality_via_weighting(build_functor("group_action", {4, 4, 1, 2, 3, 0}),
                                            std::vector<Rat>{Rat(1, 4)}) == Rat(1));

    // A fixed point breaks the count: the weighted sum no longer sees it twice.
    SetFunctor fixed = build_functor("group_action", {2, 2, 0, 1});
    CHECK(colimit_cardinality_via_weighting(fixed, std::vector<Rat>{Rat(1, 2)}) == Rat(1));
    CHECK(colimit(fixed).size() == 2);

    SetFunctor three = build_functor("intersection_diagram", {1, 2, 4});
    std::vector<Rat> alternating = unique_weighting(three.domain);
    CHECK(alternating == std::vector<Rat>{1, 1, -1, 1, -1, -1, 1});
    CHECK(colimit_cardinality_via_weighting(three, alternating) == Rat(3));

    SetFunctor pair = build_functor("intersection_diagram", {3, 6});
    CHECK(colimit_cardinality_via_weighting(pair, unique_weighting(pair.domain)) == Rat(3));

    SetFunctor sym3 = build_functor("symmetric_action", {3});
    CHECK(colimit_cardinality_via_weighting(sym3, unique_weighting(sym3.domain)) == Rat(4));

    CHECK(code_of<InputError>([&] {
              colimit_cardinality_via_weighting(glue, std::vector<Rat>{1});
          }) == "NOT_A_WEIGHTING");
    CHECK(code_of<InputError>([&] {
              colimit_cardinality_via_weighting(glue, std::vector<Rat>{1, 1, 1});
          }) == "NOT_A_WEIGHTING");
}

TEST_CASE("chi of a category-valued gluing") {
    CHECK(chi_of_elements(as_cat_functor(free_swap()), std::vector<Rat>{Rat(1, 2)}) == Rat(1));
    CHECK(chi_of_elements(as_cat_functor(build_functor("group_action", {2, 4, 1, 0, 3, 2})),
                          std::vector<Rat>{Rat(1, 2)}) == Rat(2));
    CHECK(chi_of_elements(as_cat_functor(build_functor("group_action", {4, 4, 1, 2, 3, 0})),
                          std::vector<Rat>{Rat(1, 4)}) == Rat(1));

    // chi(S^n) = 2 - chi(S^(n-1)), starting from the empty category.
    std::vector<Rat> wedge = {-1, 1, 1};
    for (long n = 0; n <= 4; ++n) {
        CAPTURE(n);
        Rat chi = chi_of_elements(sphere_step(n), wedge);
        CHECK(chi == Rat(n % 2 == 0 ? 2 : 0));
        CHECK(chi == *euler_characteristic(build_catalog("sphere_poset", {n})).value);
    }

    FinCat sub = build_catalog("subsets_poset", {2});
    CatFunctor constant = constant_cat_functor(sub, build_catalog("cyclic_group", {2}));
    CHECK(chi_of_elements(constant, unique_weighting(sub)) == Rat(1, 2));

    CatFunctor hopeless =
        constant_cat_functor(build_catalog("pushout_shape", {}), build_catalog("no_weighting_example", {}));
    CHECK(code_of<MathError>([&] { chi_of_elements(hopeless, std::vector<Rat>{-1, 1, 1}); }) ==
          "UNDEFINED_CHI");
    CHECK(code_of<InputError>([&] { chi_of_elements(constant, std::vector<Rat>{1, 1, 1}); }) ==
          "NOT_A_WEIGHTING");
}

TEST_CASE("tensor collapses along representables") {
    FinCat sub = build_catalog("subsets_poset", {2});
    for (std::uint32_t a = 0; a < sub.object_count(); ++a)
        for (std::uint32_t b = 0; b < sub.object_count(); ++b) {
            SetFunctor y = representable(opposite(sub), a);
            SetFunctor x = representable(sub, b);
            CHECK(tensor(y, x).size() == sub.hom(b, a).size());
        }

    SetFunctor x = free_swap();
    CHECK(tensor(representable(opposite(x.domain), 0), x).size() == 2);

    CHECK(code_of<InputError>([&] {
              SetFunctor glue = build_functor("pushout_data", {1, 2, 2, 2, 1});
              tensor(glue, glue);
          }) == "DOMAIN_MISMATCH");
    CHECK(code_of<InputError>([&] {
              FinCat sub2 = build_catalog("subsets_poset", {2});
              set_functor_sum(representable(sub2, 0), free_swap());
          }) == "DOMAIN_MISMATCH");
}

TEST_CASE("equal object counts do not determine the colimit") {
    FinCat c = build_catalog("no_weighting_example", {});
    SetFunctor x = set_functor_sum(representable(c, 0), representable(c, 3));
    SetFunctor y = representable(c, 1);
    for (std::uint32_t b = 0; b < c.object_count(); ++b)
        CHECK(x.object_sets[b].size() == y.object_sets[b].size());
    CHECK(colimit(x).size() == 2);
    CHECK(colimit(y).size() == 1);
}

TEST_CASE("functor builder rejects bad parameters") {
    CHECK(code_of<InputError>([] { build_functor("nope", {}); }) == "UNKNOWN_NAME");
    CHECK(code_of<InputError>([] { build_functor("symmetric_action", {7}); }) ==
          "PARAM_OUT_OF_RANGE");
    CHECK(code_of<InputError>([] { build_functor("symmetric_action", {}); }) ==
          "PARAM_OUT_OF_RANGE");
    CHECK(code_of<InputError>([] { build_functor("group_action", {2}); }) == "PARAM_OUT_OF_RANGE");
    CHECK(code_of<InputError>([] { build_functor("group_action", {2, 2, 0, 0}); }) ==
          "PARAM_OUT_OF_RANGE");
    CHECK(code_of<InputError>([] { build_functor("group_action", {2, 2, 0, 5}); }) ==
          "PARAM_OUT_OF_RANGE");
    CHECK(code_of<InputError>([] { build_functor("group_action", {3, 2, 1, 0}); }) ==
          "NOT_A_FUNCTOR");
    CHECK(code_of<InputError>([] { build_functor("intersection_diagram", {}); }) ==
          "PARAM_OUT_OF_RANGE");
    CHECK(code_of<InputError>([] { build_functor("intersection_diagram", {256}); }) ==
          "PARAM_OUT_OF_RANGE");
    CHECK(code_of<InputError>([] { build_functor("pushout_data", {1, 1}); }) ==
          "PARAM_OUT_OF_RANGE");
    CHECK(code_of<InputError>([] { build_functor("pushout_data", {1, 1, 1, 1}); }) ==
          "PARAM_OUT_OF_RANGE");
    CHECK(code_of<InputError>([] { build_functor("pushout_data", {1, 1, 1, 2, 1}); }) ==
          "PARAM_OUT_OF_RANGE");

    SetFunctor empty_word = build_functor("symmetric_action", {0});
    CHECK(colimit(empty_word).size() == 1);
    CHECK(fr_decompose(empty_word).r == std::vector<std::uint32_t>{1});
}

TEST_CASE("familial representability properties across the functor catalog") {
    for (const auto& entry : standard_functor_catalog()) {
        CAPTURE(entry.name);
        SetFunctor x = entry.construct();
        REQUIRE(set_functor_violation(x) == std::nullopt);
        REQUIRE(structural_profile(x.domain).is_cauchy_complete);

        NondegeneracyReport nd = is_nondegenerate(x);
        FRDecomposition fr = fr_decompose(x);
        CHECK(nd.nondegenerate == fr.ok());

        SetQuotient q = colimit(x);
        SetFunctor point = constant_set_functor(opposite(x.domain), {"pt"});
        CHECK(tensor(point, x).size() == q.size());

        if (!fr.ok()) {
            CHECK_FALSE(nd.witness.empty());
            continue;
        }
        std::uint32_t pieces = 0;
        for (std::uint32_t r : fr.r) pieces += r;
        CHECK(pieces == q.size());

        const QMat z = zeta(x.domain).matrix;
        for (std::uint32_t b = 0; b < x.domain.object_count(); ++b) {
            Rat total;
            for (std::uint32_t a = 0; a < x.domain.object_count(); ++a)
                total += Rat(static_cast<long>(fr.r[a])) * z.at(a, b);
            CHECK(total == Rat(static_cast<long>(x.object_sets[b].size())));
        }

        MobiusResult m = mobius_matrix(x.domain);
        if (m.ok()) {
            std::vector<Rat> coeff = representation_coefficients(x);
            for (std::size_t a = 0; a < coeff.size(); ++a)
                CHECK(coeff[a] == Rat(static_cast<long>(fr.r[a])));
        }

        EulerChar chi = euler_characteristic(elements(x).cat);
        REQUIRE(chi.ok());
        CHECK(*chi.value == Rat(static_cast<long>(q.size())));

        AffineSolutionSet w = weighting(x.domain);
        if (w.kind == AffineSolutionSet::Kind::Unique)
            CHECK(colimit_cardinality_via_weighting(x, w.particular) ==
                  Rat(static_cast<long>(q.size())));
    }
}

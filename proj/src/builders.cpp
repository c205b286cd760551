#include "eulercat/builders.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>

namespace eulercat {

namespace {

std::string digits(const std::vector<std::uint32_t>& xs) {
    std::string out;
    for (std::uint32_t x : xs) out += static_cast<char>('0' + x);
    return out;
}

// Subsets of {1..n} in bitmask order, each rendered "{135}".
std::string subset_id(std::uint32_t mask) {
    std::string out = "{";
    for (std::uint32_t i = 0; mask >> i; ++i)
        if (mask & (1u << i)) out += static_cast<char>('1' + i);
    return out + "}";
}

void require(bool ok, const std::string& name, const std::string& what) {
    if (!ok) throw InputError("PARAM_OUT_OF_RANGE", name + ": " + what);
}

FinCat discrete(long n) {
    require(0 <= n && n <= 5000, "discrete", "n must be in 0..5000");
    CatSpec s;
    s.name = "discrete(" + std::to_string(n) + ")";
    for (long i = 1; i <= n; ++i) s.objects.push_back("x" + std::to_string(i));
    return FinCat::build(std::move(s));
}

FinCat cyclic_group(long n) {
    require(1 <= n && n <= 1000, "cyclic_group", "n must be in 1..1000");
    CatSpec s;
    s.name = "cyclic_group(" + std::to_string(n) + ")";
    s.objects = {"*"};
    auto rot = [&](long k) { return k == 0 ? std::string("id_*") : "r" + std::to_string(k); };
    for (long k = 1; k < n; ++k) s.arrows.push_back({rot(k), "*", "*"});
    for (long i = 1; i < n; ++i)
        for (long j = 1; j < n; ++j) s.composites.push_back({rot(j), rot(i), rot((i + j) % n)});
    return FinCat::build(std::move(s));
}

FinCat delta_inj(long n) {
    require(0 <= n && n <= 9, "delta_inj", "n must be in 0..9");
    CatSpec s;
    s.name = "delta_inj(" + std::to_string(n) + ")";
    for (long a = 0; a <= n; ++a) s.objects.push_back(std::to_string(a));

    // An order-preserving injection a -> b is its image, an a-subset of
    // {1..b}; identified by the sorted element string.
    auto arrow_id = [](long a, long b, const std::vector<std::uint32_t>& img) {
        return "i" + std::to_string(a) + "_" + std::to_string(b) + "_" + digits(img);
    };
    std::vector<std::vector<std::vector<std::vector<std::uint32_t>>>> img(n + 1);
    for (long a = 0; a <= n; ++a) {
        img[a].resize(n + 1);
        for (long b = a; b <= n; ++b) {
            std::vector<std::uint32_t> pick(a);
            std::function<void(long, long)> gen = [&](long pos, long from) {
                if (pos == a) {
                    img[a][b].push_back(pick);
                    return;
                }
                for (long v = from; v <= b; ++v) {
                    pick[pos] = static_cast<std::uint32_t>(v);
                    gen(pos + 1, v + 1);
                }
            };
            gen(0, 1);
            if (a == b) continue;  // the identity stays id_<a>
            for (const auto& s_img : img[a][b])
                s.arrows.push_back({arrow_id(a, b, s_img), std::to_string(a), std::to_string(b)});
        }
    }
    for (long a = 0; a <= n; ++a)
        for (long b = a + 1; b <= n; ++b)
            for (long c = b + 1; c <= n; ++c)
                for (const auto& f : img[a][b])
                    for (const auto& g : img[b][c]) {
                        std::vector<std::uint32_t> h(f.size());
                        for (std::size_t t = 0; t < f.size(); ++t) h[t] = g[f[t] - 1];
                        s.composites.push_back(
                            {arrow_id(b, c, g), arrow_id(a, b, f), arrow_id(a, c, h)});
                    }
    return FinCat::build(std::move(s));
}

FinCat delta_surj(long n) {
    require(1 <= n && n <= 9, "delta_surj", "n must be in 1..9");
    CatSpec s;
    s.name = "delta_surj(" + std::to_string(n) + ")";
    for (long a = 1; a <= n; ++a) s.objects.push_back(std::to_string(a));

    // An order-preserving surjection a -> b is a (b-1)-set of cut positions
    // in {1..a-1}: a cut after position i starts a new block.
    auto arrow_id = [](long a, long b, const std::vector<std::uint32_t>& cuts) {
        return "s" + std::to_string(a) + "_" + std::to_string(b) + "_" + digits(cuts);
    };
    std::vector<std::vector<std::vector<std::vector<std::uint32_t>>>> cuts(n + 1);
    for (long a = 1; a <= n; ++a) {
        cuts[a].resize(a + 1);
        for (long b = 1; b <= a; ++b) {
            std::vector<std::uint32_t> pick(b - 1);
            std::function<void(long, long)> gen = [&](long pos, long from) {
                if (pos == b - 1) {
                    cuts[a][b].push_back(pick);
                    return;
                }
                for (long v = from; v <= a - 1; ++v) {
                    pick[pos] = static_cast<std::uint32_t>(v);
                    gen(pos + 1, v + 1);
                }
            };
            gen(0, 1);
            if (a == b) continue;
            for (const auto& cs : cuts[a][b])
                s.arrows.push_back({arrow_id(a, b, cs), std::to_string(a), std::to_string(b)});
        }
    }
    for (long a = 1; a <= n; ++a)
        for (long b = 1; b < a; ++b)
            for (long c = 1; c < b; ++c)
                for (const auto& f : cuts[a][b])
                    for (const auto& g : cuts[b][c]) {
                        // The j-th cut of f separates blocks j and j+1; it
                        // survives composition with g exactly when j is a cut
                        // of g.
                        std::vector<std::uint32_t> h;
                        for (std::size_t j = 0; j < f.size(); ++j)
                            if (std::find(g.begin(), g.end(), j + 1) != g.end())
                                h.push_back(f[j]);
                        s.composites.push_back(
                            {arrow_id(b, c, g), arrow_id(a, b, f), arrow_id(a, c, h)});
                    }
    return FinCat::build(std::move(s));
}

FinCat fin_sets(long n) {
    require(1 <= n && n <= 4, "fin_sets", "n must be in 1..4");
    CatSpec s;
    s.name = "fin_sets(" + std::to_string(n) + ")";
    for (long a = 1; a <= n; ++a) s.objects.push_back(std::to_string(a));

    // All functions {1..a} -> {1..b}, as value strings f(1)f(2)...f(a).
    auto arrow_id = [](long a, long b, const std::vector<std::uint32_t>& vals) {
        return "f" + std::to_string(a) + "_" + std::to_string(b) + "_" + digits(vals);
    };
    std::vector<std::vector<std::vector<std::vector<std::uint32_t>>>> fns(n + 1);
    for (long a = 1; a <= n; ++a) {
        fns[a].resize(n + 1);
        for (long b = 1; b <= n; ++b) {
            std::vector<std::uint32_t> vals(a, 1);
            while (true) {
                fns[a][b].push_back(vals);
                s.arrows.push_back({arrow_id(a, b, vals), std::to_string(a), std::to_string(b)});
                long pos = a;
                while (pos > 0 && vals[pos - 1] == static_cast<std::uint32_t>(b)) vals[--pos] = 1;
                if (pos == 0) break;
                ++vals[pos - 1];
            }
        }
        std::vector<std::uint32_t> ident(a);
        for (long v = 1; v <= a; ++v) ident[v - 1] = static_cast<std::uint32_t>(v);
        s.identities.emplace(std::to_string(a), arrow_id(a, a, ident));
    }
    for (long a = 1; a <= n; ++a)
        for (long b = 1; b <= n; ++b)
            for (long c = 1; c <= n; ++c)
                for (const auto& f : fns[a][b])
                    for (const auto& g : fns[b][c]) {
                        std::vector<std::uint32_t> h(f.size());
                        for (std::size_t t = 0; t < f.size(); ++t) h[t] = g[f[t] - 1];
                        s.composites.push_back(
                            {arrow_id(b, c, g), arrow_id(a, b, f), arrow_id(a, c, h)});
                    }
    return FinCat::build(std::move(s));
}

FinCat sphere_poset(long n) {
    require(-1 <= n && n <= 60, "sphere_poset", "n must be in -1..60");
    std::vector<std::string> objects;
    std::vector<std::pair<std::string, std::string>> below;
    for (long i = 0; i <= n; ++i) {
        objects.push_back("n" + std::to_string(i));
        objects.push_back("s" + std::to_string(i));
        for (long j = 0; j < i; ++j)
            for (const char* lo : {"n", "s"})
                for (const char* hi : {"n", "s"}) {
                    below.push_back({std::string(lo) + std::to_string(j),
                                     std::string(hi) + std::to_string(i)});
                }
    }
    return poset_from_relation("sphere_poset(" + std::to_string(n) + ")", objects, below);
}

FinCat symmetric_group(long n) {
    require(1 <= n && n <= 4, "symmetric_group", "n must be in 1..4");
    CatSpec s;
    s.name = "symmetric_group(" + std::to_string(n) + ")";
    s.objects = {"*"};
    std::vector<std::vector<std::uint32_t>> perms;
    std::vector<std::uint32_t> p(n);
    for (long i = 0; i < n; ++i) p[i] = static_cast<std::uint32_t>(i + 1);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    auto pid = [&](const std::vector<std::uint32_t>& q) { return "p" + digits(q); };
    for (const auto& q : perms) s.arrows.push_back({pid(q), "*", "*"});
    s.identities.emplace("*", pid(perms.front()));
    for (const auto& f : perms)
        for (const auto& g : perms) {
            std::vector<std::uint32_t> h(n);
            for (long i = 0; i < n; ++i) h[i] = g[f[i] - 1];
            s.composites.push_back({pid(g), pid(f), pid(h)});
        }
    return FinCat::build(std::move(s));
}

FinCat pushout_shape() {
    CatSpec s;
    s.name = "pushout_shape";
    s.objects = {"a", "b1", "b2"};
    s.arrows = {{"l", "a", "b1"}, {"r", "a", "b2"}};
    return FinCat::build(std::move(s));
}

FinCat parallel_pair() {
    CatSpec s;
    s.name = "parallel_pair";
    s.objects = {"a", "b"};
    s.arrows = {{"s", "a", "b"}, {"t", "a", "b"}};
    return FinCat::build(std::move(s));
}

FinCat idempotent_monoid() {
    CatSpec s;
    s.name = "idempotent_monoid";
    s.objects = {"*"};
    s.arrows = {{"e", "*", "*"}};
    s.composites = {{"e", "e", "e"}};
    return FinCat::build(std::move(s));
}

FinCat split_epi_category() {
    CatSpec s;
    s.name = "split_epi_category";
    s.objects = {"a", "b"};
    s.arrows = {{"i", "a", "b"}, {"p", "b", "a"}, {"e", "b", "b"}};
    s.composites = {{"p", "i", "id_a"}, {"i", "p", "e"}, {"e", "e", "e"},
                    {"e", "i", "i"},    {"p", "e", "p"}};
    return FinCat::build(std::move(s));
}

// Four objects; between a1 and a2 two arrows each way, single arrows
// a1 <-> a3, a2 <-> a3, and a forward fan onto a4. Every composite of
// non-identities collapses onto the f-named arrow between its endpoints
// (the identity when none exists).
FinCat no_weighting_example() {
    CatSpec s;
    s.name = "no_weighting_example";
    s.objects = {"a1", "a2", "a3", "a4"};
    s.arrows = {{"f11", "a1", "a1"}, {"f12", "a1", "a2"}, {"g12", "a1", "a2"},
                {"f13", "a1", "a3"}, {"f14", "a1", "a4"}, {"f21", "a2", "a1"},
                {"g21", "a2", "a1"}, {"f22", "a2", "a2"}, {"f23", "a2", "a3"},
                {"f24", "a2", "a4"}, {"g24", "a2", "a4"}, {"f31", "a3", "a1"},
                {"f32", "a3", "a2"}, {"f34", "a3", "a4"}};
    auto canon = [](char i, char k) {
        if (i == k && (i == '3' || i == '4')) return "id_a" + std::string(1, i);
        return "f" + std::string(1, i) + std::string(1, k);
    };
    for (const auto& p : s.arrows)
        for (const auto& q : s.arrows) {
            if (p.tgt != q.src) continue;
            s.composites.push_back({q.id, p.id, canon(p.src[1], q.tgt[1])});
        }
    return FinCat::build(std::move(s));
}

}  // namespace

FinCat monoid_from_table(std::string name, const std::vector<std::string>& elems,
                         const std::vector<std::vector<std::uint32_t>>& table) {
    if (elems.empty() || table.size() != elems.size())
        throw InputError("BAD_TABLE", "table size does not match the element list");
    for (const auto& row : table) {
        if (row.size() != elems.size())
            throw InputError("BAD_TABLE", "table is not square");
        for (std::uint32_t v : row)
            if (v >= elems.size()) throw InputError("BAD_TABLE", "table entry out of range");
    }
    CatSpec s;
    s.name = std::move(name);
    s.objects = {"*"};
    for (std::size_t i = 1; i < elems.size(); ++i) s.arrows.push_back({elems[i], "*", "*"});
    s.identities.emplace("*", elems[0]);
    s.arrows.insert(s.arrows.begin(), {elems[0], "*", "*"});
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j < elems.size(); ++j)
            s.composites.push_back({elems[i], elems[j], elems[table[i][j]]});
    return FinCat::build(std::move(s));
}

FinCat poset_from_relation(std::string name, const std::vector<std::string>& elems,
                           const std::vector<std::pair<std::string, std::string>>& below) {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < elems.size(); ++i)
        if (!index.emplace(elems[i], i).second)
            throw InputError("BAD_RELATION", "element '" + elems[i] + "' declared twice");
    const std::size_t n = elems.size();
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) le[i][i] = true;
    for (const auto& [lo, hi] : below) {
        auto a = index.find(lo), b = index.find(hi);
        if (a == index.end() || b == index.end())
            throw InputError("BAD_RELATION", "pair (" + lo + ", " + hi + ") names unknown elements");
        le[a->second][b->second] = true;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            if (!le[i][k]) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (le[k][j]) le[i][j] = true;
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (le[i][j] && le[j][i])
                throw InputError("BAD_RELATION",
                                 "'" + elems[i] + "' and '" + elems[j] + "' form a cycle");

    CatSpec s;
    s.name = std::move(name);
    s.objects = elems;
    auto aid = [&](std::size_t i, std::size_t j) { return "le_" + elems[i] + "_" + elems[j]; };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && le[i][j]) s.arrows.push_back({aid(i, j), elems[i], elems[j]});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || !le[i][j]) continue;
            for (std::size_t k = 0; k < n; ++k)
                if (j != k && le[j][k]) s.composites.push_back({aid(j, k), aid(i, j), aid(i, k)});
        }
    return FinCat::build(std::move(s));
}

FinCat build_catalog(const std::string& name, const std::vector<long>& params) {
    auto arity = [&](std::size_t want) {
        if (params.size() != want)
            throw InputError("PARAM_OUT_OF_RANGE",
                             name + " takes " + std::to_string(want) + " parameter(s)");
    };
    if (name == "discrete") { arity(1); return discrete(params[0]); }
    if (name == "cyclic_group") { arity(1); return cyclic_group(params[0]); }
    if (name == "subsets_poset") {
        arity(1);
        long n = params[0];
        require(1 <= n && n <= 8, "subsets_poset", "n must be in 1..8");
        std::vector<std::string> objects;
        std::vector<std::pair<std::string, std::string>> below;
        for (std::uint32_t m = 1; m < (1u << n); ++m) objects.push_back(subset_id(m));
        for (std::uint32_t a = 1; a < (1u << n); ++a)
            for (std::uint32_t b = 1; b < (1u << n); ++b)
                if (a != b && (a & b) == a) below.push_back({subset_id(a), subset_id(b)});
        return poset_from_relation("subsets_poset(" + std::to_string(n) + ")", objects, below);
    }
    if (name == "delta_inj") { arity(1); return delta_inj(params[0]); }
    if (name == "delta_surj") { arity(1); return delta_surj(params[0]); }
    if (name == "fin_sets") { arity(1); return fin_sets(params[0]); }
    if (name == "sphere_poset") { arity(1); return sphere_poset(params[0]); }
    if (name == "symmetric_group") { arity(1); return symmetric_group(params[0]); }
    if (name == "pushout_shape") { arity(0); return pushout_shape(); }
    if (name == "parallel_pair") { arity(0); return parallel_pair(); }
    if (name == "no_weighting_example") { arity(0); return no_weighting_example(); }
    if (name == "idempotent_monoid") { arity(0); return idempotent_monoid(); }
    if (name == "split_epi_category") { arity(0); return split_epi_category(); }
    throw InputError("UNKNOWN_NAME", "no catalog entry named '" + name + "'");
}

namespace {

std::vector<std::uint32_t> identity_action(std::size_t m) {
    std::vector<std::uint32_t> ident(m);
    std::iota(ident.begin(), ident.end(), 0u);
    return ident;
}

SetFunctor symmetric_action(long n) {
    require(0 <= n && n <= 6, "symmetric_action", "n must be in 0..6");
    SetFunctor x;
    x.domain = build_catalog("delta_inj", {n});

    // The set at m is S_m, written as image words like the one-object
    // symmetric groups ("p312" sends 1 to 3).
    auto pid = [](const std::vector<std::uint32_t>& q) { return "p" + digits(q); };
    std::vector<std::vector<std::vector<std::uint32_t>>> perms(n + 1);
    std::vector<std::map<std::string, std::uint32_t>> slot(n + 1);
    for (long m = 0; m <= n; ++m) {
        std::vector<std::uint32_t> p(m);
        std::iota(p.begin(), p.end(), 1u);
        do {
            slot[m].emplace(pid(p), static_cast<std::uint32_t>(perms[m].size()));
            perms[m].push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
        std::vector<std::string> names;
        for (const auto& q : perms[m]) names.push_back(pid(q));
        x.object_sets.push_back(std::move(names));
    }

    // An injection f: a -> b with image img pushes tau to the permutation
    // moving f(j) to f(tau(j)) and fixing everything outside the image.
    for (std::uint32_t f = 0; f < x.domain.arrow_count(); ++f) {
        const Arrow& ar = x.domain.arrow(f);
        if (x.domain.is_identity(f)) {
            x.arrow_actions.push_back(identity_action(perms[ar.src].size()));
            continue;
        }
        std::vector<std::uint32_t> img;
        for (std::size_t i = ar.id.rfind('_') + 1; i < ar.id.size(); ++i)
            img.push_back(static_cast<std::uint32_t>(ar.id[i] - '0'));
        std::vector<std::uint32_t> act;
        for (const auto& tau : perms[ar.src]) {
            std::vector<std::uint32_t> sig(ar.tgt);
            std::iota(sig.begin(), sig.end(), 1u);
            for (std::size_t j = 0; j < img.size(); ++j) sig[img[j] - 1] = img[tau[j] - 1];
            act.push_back(slot[ar.tgt].at(pid(sig)));
        }
        x.arrow_actions.push_back(std::move(act));
    }
    return x;
}

SetFunctor group_action(const std::vector<long>& params) {
    require(params.size() >= 2, "group_action", "need n, m, then m generator images");
    const long n = params[0], m = params[1];
    require(1 <= n && n <= 1000, "group_action", "n must be in 1..1000");
    require(0 <= m && m <= 1000, "group_action", "m must be in 0..1000");
    require(params.size() == static_cast<std::size_t>(2 + m), "group_action",
            "need exactly m generator images");
    std::vector<std::uint32_t> gen;
    std::vector<bool> hit(m, false);
    for (long j = 0; j < m; ++j) {
        const long v = params[2 + j];
        require(0 <= v && v < m, "group_action", "generator images must be in 0..m-1");
        require(!hit[v], "group_action", "generator images must form a permutation");
        hit[v] = true;
        gen.push_back(static_cast<std::uint32_t>(v));
    }

    std::vector<std::vector<std::uint32_t>> power{identity_action(m)};
    for (long k = 1; k < n; ++k) {
        std::vector<std::uint32_t> next(m);
        for (long j = 0; j < m; ++j) next[j] = gen[power.back()[j]];
        power.push_back(std::move(next));
    }
    std::vector<std::uint32_t> full(m);
    for (long j = 0; j < m; ++j) full[j] = gen[power.back()[j]];
    if (full != power.front())
        throw InputError("NOT_A_FUNCTOR", "group_action: generator order does not divide n");

    SetFunctor x;
    x.domain = build_catalog("cyclic_group", {n});
    std::vector<std::string> elems;
    for (long j = 0; j < m; ++j) elems.push_back("e" + std::to_string(j));
    x.object_sets = {std::move(elems)};
    x.arrow_actions.resize(x.domain.arrow_count());
    for (std::uint32_t f = 0; f < x.domain.arrow_count(); ++f) {
        if (x.domain.is_identity(f))
            x.arrow_actions[f] = power.front();
        else
            x.arrow_actions[f] = power[std::stoul(x.domain.arrow(f).id.substr(1))];
    }
    return x;
}

SetFunctor intersection_diagram(const std::vector<long>& params) {
    const long k = static_cast<long>(params.size());
    require(1 <= k && k <= 8, "intersection_diagram", "need 1..8 subset masks");
    for (long mask : params)
        require(0 <= mask && mask <= 255, "intersection_diagram", "masks must be in 0..255");

    SetFunctor x;
    x.domain = opposite(build_catalog("subsets_poset", {k}));
    // Object i is the family with bitmask i+1; its set is the meet of the
    // masked subsets of {0..7}, one element "e<v>" per remaining point.
    std::vector<std::uint32_t> common(x.domain.object_count());
    for (std::uint32_t i = 0; i < common.size(); ++i) {
        std::uint32_t meet = 255;
        for (long j = 0; j < k; ++j)
            if ((i + 1) & (1u << j)) meet &= static_cast<std::uint32_t>(params[j]);
        common[i] = meet;
        std::vector<std::string> elems;
        for (int v = 0; v < 8; ++v)
            if (meet & (1u << v)) elems.push_back("e" + std::to_string(v));
        x.object_sets.push_back(std::move(elems));
    }
    for (std::uint32_t f = 0; f < x.domain.arrow_count(); ++f) {
        const Arrow& ar = x.domain.arrow(f);
        std::vector<std::uint32_t> act;
        for (int v = 0; v < 8; ++v)
            if (common[ar.src] & (1u << v))
                act.push_back(
                    static_cast<std::uint32_t>(std::popcount(common[ar.tgt] & ((1u << v) - 1))));
        x.arrow_actions.push_back(std::move(act));
    }
    return x;
}

SetFunctor pushout_data(const std::vector<long>& params) {
    require(params.size() >= 3, "pushout_data", "need na, nb1, nb2, then the two image lists");
    const long na = params[0], nb1 = params[1], nb2 = params[2];
    for (long size : {na, nb1, nb2})
        require(0 <= size && size <= 1000, "pushout_data", "set sizes must be in 0..1000");
    require(params.size() == static_cast<std::size_t>(3 + 2 * na), "pushout_data",
            "need na images for each leg");

    SetFunctor x;
    x.domain = build_catalog("pushout_shape", {});
    auto names = [](const char* prefix, long count) {
        std::vector<std::string> out;
        for (long i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
        return out;
    };
    x.object_sets.resize(3);
    x.object_sets[x.domain.object_at("a")] = names("x", na);
    x.object_sets[x.domain.object_at("b1")] = names("y", nb1);
    x.object_sets[x.domain.object_at("b2")] = names("z", nb2);

    std::vector<std::uint32_t> f1, f2;
    for (long i = 0; i < na; ++i) {
        const long v = params[3 + i], w = params[3 + na + i];
        require(1 <= v && v <= nb1, "pushout_data", "first-leg images must be in 1..nb1");
        require(1 <= w && w <= nb2, "pushout_data", "second-leg images must be in 1..nb2");
        f1.push_back(static_cast<std::uint32_t>(v - 1));
        f2.push_back(static_cast<std::uint32_t>(w - 1));
    }
    x.arrow_actions.resize(x.domain.arrow_count());
    for (std::uint32_t o = 0; o < x.domain.object_count(); ++o)
        x.arrow_actions[x.domain.identity(o)] = identity_action(x.object_sets[o].size());
    x.arrow_actions[x.domain.arrow_at("l")] = std::move(f1);
    x.arrow_actions[x.domain.arrow_at("r")] = std::move(f2);
    return x;
}

}  // namespace

SetFunctor build_functor(const std::string& name, const std::vector<long>& params) {
    if (name == "symmetric_action") {
        if (params.size() != 1)
            throw InputError("PARAM_OUT_OF_RANGE", "symmetric_action takes 1 parameter");
        return symmetric_action(params[0]);
    }
    if (name == "group_action") return group_action(params);
    if (name == "intersection_diagram") return intersection_diagram(params);
    if (name == "pushout_data") return pushout_data(params);
    throw InputError("UNKNOWN_NAME", "no functor entry named '" + name + "'");
}

std::vector<FunctorCatalogEntry> standard_functor_catalog() {
    return {
        {"symmetric_action", {3}},
        {"symmetric_action", {4}},
        {"group_action", {2, 2, 1, 0}},
        {"group_action", {2, 2, 0, 1}},
        {"group_action", {4, 4, 1, 2, 3, 0}},
        {"group_action", {2, 4, 1, 0, 3, 2}},
        {"intersection_diagram", {3, 6}},
        {"intersection_diagram", {1, 2, 4}},
        {"intersection_diagram", {7, 7, 7}},
        {"pushout_data", {1, 2, 2, 2, 1}},
        {"pushout_data", {2, 2, 2, 1, 1, 1, 2}},
    };
}

std::vector<CatalogEntry> standard_catalog() {
    return {
        {"discrete", {3}},
        {"cyclic_group", {1}},
        {"cyclic_group", {2}},
        {"cyclic_group", {6}},
        {"subsets_poset", {2}},
        {"subsets_poset", {3}},
        {"delta_inj", {3}},
        {"delta_inj", {4}},
        {"delta_surj", {4}},
        {"fin_sets", {3}},
        {"sphere_poset", {0}},
        {"sphere_poset", {1}},
        {"sphere_poset", {2}},
        {"sphere_poset", {3}},
        {"symmetric_group", {3}},
        {"pushout_shape", {}},
        {"parallel_pair", {}},
        {"no_weighting_example", {}},
        {"idempotent_monoid", {}},
        {"split_epi_category", {}},
    };
}

}  // namespace eulercat

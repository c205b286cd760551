#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eulercat/fincat.hpp"

namespace eulercat {

// Guard against accidental blowup in product/collage/free_category.
inline constexpr std::size_t kDefaultArrowCap = 20000;

struct DirectedGraph {
    struct Edge {
        std::string id, src, tgt;
    };
    std::vector<std::string> vertices;
    std::vector<Edge> edges;
};

// Empty optional when well-formed; otherwise what is wrong.
std::optional<std::string> graph_violation(const DirectedGraph& g);

// M : B^op x A -> Set, given by element tables and arrow actions. Actions
// are index maps into the element lists:
//   left[f][ai]  maps elems[tgt(f)][ai] -> elems[src(f)][ai]   (f in B)
//   right[g][bi] maps elems[bi][src(g)] -> elems[bi][tgt(g)]   (g in A)
struct Profunctor {
    FinCat b, a;
    std::vector<std::vector<std::vector<std::string>>> elems;  // [B-obj][A-obj]
    std::vector<std::vector<std::vector<std::uint32_t>>> left;
    std::vector<std::vector<std::vector<std::uint32_t>>> right;
};

// Checks shapes, functoriality of both actions, and that they commute.
std::optional<std::string> profunctor_violation(const Profunctor& m);

// Same objects and arrow ids, arrows reversed, composition transposed.
FinCat opposite(const FinCat& c);

// Disjoint union; summand i contributes ids prefixed "c<i>.".
FinCat sum(const std::vector<FinCat>& cats);

// Objects and arrows are tuples "(x*y*...)", composition componentwise.
FinCat product(const std::vector<FinCat>& cats, std::size_t arrow_cap = kDefaultArrowCap);

// Full subcategory on objects b with both hom(a, b) and hom(b, c) nonempty.
FinCat interval(const FinCat& c, std::string_view a_id, std::string_view c_id);

// Freely adds an initial object "0" and/or terminal object "1": exactly one
// arrow from 0 to everything and from everything to 1. Names are suffixed
// with '_' until fresh if the category already uses them.
FinCat adjoin_bounds(const FinCat& c, bool initial, bool terminal);

// B and A side by side (prefixes "B.", "A.") plus one arrow b -> a per
// element of M(b, a); those arrows compose through the actions.
FinCat collage(const Profunctor& m, std::size_t arrow_cap = kDefaultArrowCap);

// Path category of a circuit-free graph. Non-trivial paths are named by
// their edge sequence joined with ';'; single edges keep the edge id.
FinCat free_category(const DirectedGraph& g, std::size_t arrow_cap = kDefaultArrowCap);

}  // namespace eulercat

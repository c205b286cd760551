#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eulercat/constructions.hpp"
#include "eulercat/fincat.hpp"
#include "eulercat/rational.hpp"

namespace eulercat {

// X : C -> Set. object_sets[a] lists element ids; arrow_actions[f] maps
// element indices of the source set to element indices of the target set.
struct SetFunctor {
    FinCat domain;
    std::vector<std::vector<std::string>> object_sets;
    std::vector<std::vector<std::uint32_t>> arrow_actions;
};

// X : C -> Cat, strict: identities map to identity functors and composition
// is preserved on the nose.
struct CatFunctor {
    FinCat domain;
    std::vector<FinCat> object_cats;
    std::vector<CatMap> arrow_actions;
};

// Empty optional when the data is a functor; otherwise what is wrong.
std::optional<std::string> set_functor_violation(const SetFunctor& x);
std::optional<std::string> cat_functor_violation(const CatFunctor& x);

// Label of an element or fiber object, "<object>@<element>".
std::string element_label(const FinCat& c, std::uint32_t obj, const std::string& elem);

// Category of elements. Objects are pairs (a, x), named "<a>@<x>". For a
// SetFunctor, arrows are "<f>@<x>"; for a CatFunctor they are triples
// "<f>@<x>@<xi>" with xi an arrow of the target fiber.
struct ElementsCategory {
    FinCat cat;
    CatMap to_base;                        // the projection down to the domain
    std::vector<std::uint32_t> object_over;   // domain object per object
    std::vector<std::uint32_t> object_fiber;  // element / fiber object index
};
ElementsCategory elements(const SetFunctor& x, std::size_t arrow_cap = kDefaultArrowCap);
ElementsCategory elements(const CatFunctor& x, std::size_t arrow_cap = kDefaultArrowCap);

// Connected components of the elements, i.e. the colimit of a SetFunctor.
// Components are named by their lexicographically least member label.
struct SetQuotient {
    std::vector<std::string> labels;          // one per element, flattened
    std::vector<std::uint32_t> component;     // per element: component index
    std::vector<std::string> representatives; // per component
    std::size_t size() const { return representatives.size(); }
};
SetQuotient colimit(const SetFunctor& x);

struct NondegeneracyReport {
    bool nondegenerate = false;
    std::string witness;  // the uncompletable diagram, empty when nondegenerate
};

// Diagram-completion test: (i) every cospan f, f' with (Xf)(x) = (Xf')(x')
// extends to a commuting span g, g' with an element z mapping to x and x';
// (ii) every fork (Xf)(x) = (Xf')(x) on parallel f, f' admits g with
// fg = f'g and an element z mapping to x.
NondegeneracyReport is_nondegenerate(const SetFunctor& x);

// Decomposition X = sum_a r(a) C(a, -), found by locating an initial object
// in every component of the elements. Requires a Cauchy-complete domain.
struct FRDecomposition {
    std::vector<std::uint32_t> r;  // per domain object
    std::vector<std::pair<std::uint32_t, std::uint32_t>> initials;  // (object, element)
    std::string failure;  // component representative lacking an initial object
    bool ok() const { return failure.empty(); }
};
FRDecomposition fr_decompose(const SetFunctor& x);

// r(a) = sum_b |Xb| mu(b, a), applied blindly. Integral and non-negative
// exactly when X is familially representable.
std::vector<Rat> representation_coefficients(const SetFunctor& x);

// sum_a k^a |Xa| for a weighting k. On a Cauchy-complete domain with X
// nondegenerate this equals the colimit cardinality; that is checked.
Rat colimit_cardinality_via_weighting(const SetFunctor& x, std::span<const Rat> k);

// chi(elements(X)) = sum_a k^a chi(Xa) for Cat-valued X; both sides are
// computed and compared, and the right-hand side returned.
Rat chi_of_elements(const CatFunctor& x, std::span<const Rat> k);

// Y tensor X for Y on the opposite category: disjoint pairs (y, x) over each
// object, glued by (y, (Xf)(x)) ~ ((Yf)(y), x). Labels are "<a>@<y>@<x>".
SetQuotient tensor(const SetFunctor& y, const SetFunctor& x);

// Hom functor C(a, -): elements are arrow ids, actions postcompose.
SetFunctor representable(const FinCat& c, std::uint32_t a);

// Pointwise disjoint union; summand i contributes elements "c<i>.<e>".
SetFunctor set_functor_sum(const SetFunctor& x, const SetFunctor& y);

// Same set at every object, every arrow acting as the identity.
SetFunctor constant_set_functor(const FinCat& c, std::vector<std::string> elems);

// Same category at every object, every arrow acting as the identity functor.
CatFunctor constant_cat_functor(const FinCat& c, FinCat fiber);

// Discrete fibers: elements become objects with only identities.
CatFunctor as_cat_functor(const SetFunctor& x);

}  // namespace eulercat

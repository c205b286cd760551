#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eulercat/constructions.hpp"
#include "eulercat/fincat.hpp"
#include "eulercat/mobius.hpp"

namespace eulercat {

struct Endofunctor {
    FinCat cat;
    CatMap map;
};

std::optional<std::string> endofunctor_violation(const Endofunctor& f);

Endofunctor identity_endofunctor(const FinCat& c);
// g after f; both must live on the same category.
Endofunctor compose(const Endofunctor& g, const Endofunctor& f);
// Self-map of a poset, lifted to arrows through thinness.
Endofunctor monotone_endofunctor(const FinCat& poset, const std::vector<std::uint32_t>& obj_map);

// The strict fixed points: objects with Fa = a, arrows with Ff = f.
FinCat fixed_category(const Endofunctor& f);

// chi of the fixed category (undefined exactly when that chi is).
EulerChar lefschetz_number(const Endofunctor& f);

// Objects are pairs a with h: Fa -> a (coalgebras: h: a -> Fa); morphisms are
// arrows f: a -> b making the square with the structure maps commute.
FinCat algebra_category(const Endofunctor& f, std::size_t arrow_cap = kDefaultArrowCap);
FinCat coalgebra_category(const Endofunctor& f, std::size_t arrow_cap = kDefaultArrowCap);

}  // namespace eulercat

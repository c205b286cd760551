#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "eulercat/fincat.hpp"
#include "eulercat/functors.hpp"

namespace eulercat {

// One-object category from a monoid multiplication table. Element 0 is the
// unit; table[i][j] is the product of elements i and j (i after j).
FinCat monoid_from_table(std::string name, const std::vector<std::string>& elems,
                         const std::vector<std::vector<std::uint32_t>>& table);

// Poset as a category: one arrow le_<x>_<y> per strict pair of the
// reflexive-transitive closure of `below`. Rejects relations with cycles.
FinCat poset_from_relation(std::string name, const std::vector<std::string>& elems,
                           const std::vector<std::pair<std::string, std::string>>& below);

// Named catalog, reachable from the CLI by name + integer parameters:
//   discrete(n)            n objects, identities only          0 <= n <= 5000
//   cyclic_group(n)        Z/n as a one-object category        1 <= n <= 1000
//   subsets_poset(n)       nonempty subsets of {1..n}          1 <= n <= 8
//   delta_inj(n)           sets 0..n, order-preserving injections   0 <= n <= 9
//   delta_surj(n)          sets 1..n, order-preserving surjections  1 <= n <= 9
//   fin_sets(n)            sets 1..n, all functions            1 <= n <= 4
//   sphere_poset(n)        two new points per level            -1 <= n <= 60
//   symmetric_group(n)     S_n as a one-object category        1 <= n <= 4
//   pushout_shape          b1 <- a -> b2
//   parallel_pair          a => b
//   no_weighting_example   four objects, weighting system unsolvable
//   idempotent_monoid      {1, e}, ee = e
//   split_epi_category     splitting of the idempotent monoid
FinCat build_catalog(const std::string& name, const std::vector<long>& params);

struct CatalogEntry {
    std::string name;
    std::vector<long> params;
    FinCat construct() const { return build_catalog(name, params); }
};

// Representative parameter choices for every catalog name; the verification
// suite and the property tests run over this list.
std::vector<CatalogEntry> standard_catalog();

// Named Set-valued diagrams, reachable from the CLI by name + integers:
//   symmetric_action(n)      delta_inj(n) acting on permutation words; the
//                            set at m holds S_m, injections act by
//                            conjugation-extension            0 <= n <= 6
//   group_action(n, m, s0..sm-1)
//                            Z/n acting on {0..m-1}, the generator moving
//                            j to s_j; s must be a permutation with s^n = 1
//   intersection_diagram(m1..mk)
//                            on opposite(subsets_poset(k)): the set at J is
//                            the intersection of the masked subsets of
//                            {0..7}, maps are inclusions      1 <= k <= 8
//   pushout_data(na, nb1, nb2, f1[1..na], f2[1..na])
//                            spans of finite sets on pushout_shape; f1, f2
//                            are 1-based images of the apex elements
SetFunctor build_functor(const std::string& name, const std::vector<long>& params);

struct FunctorCatalogEntry {
    std::string name;
    std::vector<long> params;
    SetFunctor construct() const { return build_functor(name, params); }
};

std::vector<FunctorCatalogEntry> standard_functor_catalog();

}  // namespace eulercat

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eulercat/constructions.hpp"
#include "eulercat/fincat.hpp"
#include "eulercat/qmat.hpp"

namespace eulercat {

// An element of the algebra of functions ob C x ob C -> Q, as a labeled
// matrix whose index order is the category's object order.
struct IncidenceElement {
    std::string cat_name;
    QMat matrix;
};

struct Weighting {
    enum class Side { Weight, Coweight };
    std::string cat_name;
    Side side = Side::Weight;
    std::vector<std::string> labels;
    std::vector<Rat> values;
};

// Hom-count matrix: entry (a, b) = number of arrows a -> b.
IncidenceElement zeta(const FinCat& c);

// Exact inverse of zeta. The rank is reported either way.
struct MobiusResult {
    std::string cat_name;
    std::size_t zeta_rank = 0;
    std::optional<QMat> mu;
    bool ok() const { return mu.has_value(); }
};
MobiusResult mobius_matrix(const FinCat& c);

// Path-sum formula: mu(a, b) = sum over sequences of distinct objects
// a = a_0, ..., a_n = b of (-1)^n prod zeta(a_{i-1}, a_i) / prod |Aut(a_i)|.
// Requires a skeletal category whose only idempotents are identities.
IncidenceElement mobius_by_paths(const FinCat& c);

// Epi-mono factorization route: validates zeta_C = zeta_E (1/|Aut|) zeta_M,
// then returns mu_M |Aut| mu_E with the factors computed by mobius_by_paths
// on the wide subcategories. `epis` and `monos` are arrow index sets.
IncidenceElement mobius_by_factorization(const FinCat& c, std::span<const std::uint32_t> epis,
                                         std::span<const std::uint32_t> monos);

// Solutions of zeta k = 1 (weighting) and its transpose (coweighting),
// with one variable per object.
AffineSolutionSet weighting(const FinCat& c);
AffineSolutionSet coweighting(const FinCat& c);

// Sum of any weighting = sum of any coweighting, when both exist. The
// constancy across solution families is checked, not assumed.
struct EulerChar {
    std::optional<Rat> value;
    std::string reason;  // NO_WEIGHTING or NO_COWEIGHTING when undefined
    bool ok() const { return value.has_value(); }
};
EulerChar euler_characteristic(const FinCat& c);

// Alternating count of nondegenerate paths, sum_n (-1)^n c_n. Requires a
// skeletal category with no endomorphisms except identities.
Rat nerve_euler(const FinCat& c);

// chi of the free category on a circuit-free graph; checked against the
// closed form |vertices| - |edges|.
Rat euler_of_graph(const DirectedGraph& g);

// Pulls a weighting back along an equivalence F: C -> D by
// k^a = (C_Fa / C_a) l^Fa, where C_x is the size of the iso class of x.
Weighting transport_weighting(const FinCat& c, const FinCat& d, const CatMap& f,
                              std::span<const Rat> l);

// For a Galois connection f -| g between posets, checks
//   sum_{a': f(a') = b} mu_A(a, a') = sum_{b': g(b') = a} mu_B(b', b)
// at every pair (a, b).
struct GaloisReport {
    bool holds = false;
    std::vector<std::string> violations;
};
GaloisReport galois_identity_check(const FinCat& a, const FinCat& b,
                                   const std::vector<std::uint32_t>& f,
                                   const std::vector<std::uint32_t>& g);

// Arrow-level Mobius function: the convolution inverse of the all-ones
// function on arrows, when it exists in the algebra of functions
// {arrows} -> Q with (theta phi)(f) = sum_{h g = f} theta(g) phi(h).
struct CllResult {
    std::string cat_name;
    std::optional<std::vector<Rat>> values;  // per arrow, in arrow order
    bool ok() const { return values.has_value(); }
};
CllResult cll_mobius(const FinCat& c);

// Object-level aggregation sum_{f in C(a,b)} values[f] as a labeled matrix.
QMat cll_aggregate(const FinCat& c, std::span<const Rat> values);

}  // namespace eulercat

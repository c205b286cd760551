#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "eulercat/errors.hpp"

namespace eulercat {

struct Arrow {
    std::string id;
    std::uint32_t src = 0;
    std::uint32_t tgt = 0;
    bool operator==(const Arrow&) const = default;
};

// Raw description of a category: what a file or a builder hands to
// validation. Composites with identities may be omitted; they are forced by
// the unit laws. Objects without a declared identity get one named id_<obj>.
struct CatSpec {
    struct ArrowDecl {
        std::string id, src, tgt;
    };
    struct CompositeDecl {
        std::string g, f, h;  // g∘f = h
    };
    std::string name;
    std::vector<std::string> objects;
    std::vector<ArrowDecl> arrows;
    std::map<std::string, std::string> identities;  // object -> declared identity arrow
    std::vector<CompositeDecl> composites;
};

enum class Law {
    DuplicateId,
    DanglingEndpoint,
    BadIdentity,
    MissingComposite,
    BadComposite,
    UnitLaw,
    NonAssociative,
};

std::string_view law_name(Law law);

struct Violation {
    Law law;
    std::string detail;  // names the witnessing objects/arrows
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

// Thrown when a FinCat is built from a spec that breaks the category laws.
class InvalidCategory : public MathError {
public:
    explicit InvalidCategory(ValidationReport report)
        : MathError("CAT_INVALID", report.to_string()), report_(std::move(report)) {}
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

// A finite category: objects, arrows, identities, and a total composition
// table over composable pairs. Immutable after construction; construction
// validates all five category laws.
class FinCat {
public:
    FinCat() = default;  // the empty category

    // Collects every violation (does not stop at the first).
    static ValidationReport validate(const CatSpec& spec);
    // Validates and constructs; throws InvalidCategory on failure.
    static FinCat build(CatSpec spec);

    const std::string& name() const { return name_; }
    std::size_t object_count() const { return objects_.size(); }
    std::size_t arrow_count() const { return arrows_.size(); }
    const std::vector<std::string>& objects() const { return objects_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const std::string& object_id(std::uint32_t i) const { return objects_[i]; }
    const Arrow& arrow(std::uint32_t i) const { return arrows_[i]; }

    std::optional<std::uint32_t> object_index(std::string_view id) const;
    std::optional<std::uint32_t> arrow_index(std::string_view id) const;
    // Throwing lookups for callers that require the id to exist.
    std::uint32_t object_at(std::string_view id) const;
    std::uint32_t arrow_at(std::string_view id) const;

    std::uint32_t identity(std::uint32_t obj) const { return identity_[obj]; }
    bool is_identity(std::uint32_t arr) const {
        return identity_[arrows_[arr].src] == arr || identity_[arrows_[arr].tgt] == arr;
    }
    bool composable(std::uint32_t g, std::uint32_t f) const {
        return arrows_[f].tgt == arrows_[g].src;
    }
    // g∘f; requires composable(g, f).
    std::uint32_t compose(std::uint32_t g, std::uint32_t f) const;

    // Arrows a -> b in declaration order.
    const std::vector<std::uint32_t>& hom(std::uint32_t a, std::uint32_t b) const {
        return hom_[a * objects_.size() + b];
    }

    // Inverse of f if f is an isomorphism.
    std::optional<std::uint32_t> inverse_of(std::uint32_t f) const;
    bool is_iso(std::uint32_t f) const { return inverse_of(f).has_value(); }

    // Same objects, arrows, identities and composition, in the same order
    // with the same identifiers. The name is ignored.
    bool equals(const FinCat& other) const;

    // Underlying raw description (used by serialization).
    CatSpec to_spec() const;

private:
    void index_and_close();  // fills lookup tables; assumes fields populated

    std::string name_;
    std::vector<std::string> objects_;
    std::vector<Arrow> arrows_;
    std::vector<std::uint32_t> identity_;  // per object
    std::unordered_map<std::uint64_t, std::uint32_t> comp_;  // (g * |Arr| + f) -> g∘f
    std::vector<std::vector<std::uint32_t>> hom_;            // |Ob|^2 buckets
    std::unordered_map<std::string, std::uint32_t> obj_index_, arr_index_;
};

// Structural flags computed by exhaustive search.
struct StructuralProfile {
    bool is_skeletal = false;
    bool idempotents_are_identities = false;
    bool endos_are_autos = false;
    bool is_circuit_free = false;
    bool is_cauchy_complete = false;
    std::vector<std::uint64_t> aut_order;  // |Aut(a)| per object
};

StructuralProfile structural_profile(const FinCat& cat);

// Categorical epi/mono detection by exhaustive cancellation tests.
std::vector<std::uint32_t> epimorphisms(const FinCat& cat);
std::vector<std::uint32_t> monomorphisms(const FinCat& cat);

// At most one arrow between any ordered pair, and skeletal.
bool is_poset(const FinCat& cat);

// A functor between finite categories, stored as raw index maps. The domain
// and codomain travel separately; validate before trusting.
struct CatMap {
    std::vector<std::uint32_t> obj_map;  // per domain object
    std::vector<std::uint32_t> arr_map;  // per domain arrow
    bool operator==(const CatMap&) const = default;
};

// Empty optional when F is a functor; otherwise a description of the broken
// law (witness arrows included).
std::optional<std::string> functor_violation(const FinCat& dom, const FinCat& cod,
                                             const CatMap& f);
CatMap identity_cat_map(const FinCat& cat);
CatMap compose_cat_maps(const CatMap& g, const CatMap& f);  // g after f

}  // namespace eulercat

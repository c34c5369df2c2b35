// ramification.hpp
// Systems of generators, their types, stabilizer sets, disjointness and
// ramification-structure admissibility.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isoprod/group.hpp"

namespace isoprod {

/// Type (g' | m_1,...,m_r), branch orders kept non-decreasing.
struct TypeSignature {
    int genus_prime = 0;
    std::vector<int> branch_orders;

    /// Compact rendering with repeats collapsed, e.g. "(0|2^10)".
    std::string to_string() const;

    bool operator==(const TypeSignature& o) const {
        return genus_prime == o.genus_prime && branch_orders == o.branch_orders;
    }
    bool operator!=(const TypeSignature& o) const { return !(*this == o); }
};

/// The theorem types: (0 | 2^(2s+2)) and (q | 2^(2s-2q+2)).
TypeSignature theorem_type_first(int s);
TypeSignature theorem_type_second(int s, int q);

/// (a_1,b_1,...,a_g',b_g', c_1,...,c_r): handles holds the 2g' handle
/// entries in that order, spherical the c_i in order. The stored spherical
/// order matters for the long relation; types report orders sorted.
struct GeneratorSystem {
    int genus_prime = 0;
    std::vector<GroupElement> handles;
    std::vector<GroupElement> spherical;
};

enum class SystemError {
    None,
    GenerationFailure,
    RelationFailure,
    IdentityEntry,
};

const char* to_string(SystemError e);

struct ValidationResult {
    SystemError error = SystemError::None;
    TypeSignature type;  // meaningful when ok()
    std::string detail;
    bool ok() const { return error == SystemError::None; }
};

/// Checks generation, entry orders >= 2 and the long relation
/// c_1...c_r [a_1,b_1]...[a_g',b_g'] = 1; returns the computed type.
ValidationResult validate_system(const Fc2Group& g, const GeneratorSystem& sys);

/// Long-relation product (identity iff the relation holds).
GroupElement long_relation_product(const Fc2Group& g, const GeneratorSystem& sys);

/// Union over all conjugates of all powers of the spherical entries,
/// sorted by packed key. Always contains the identity.
std::vector<GroupElement> sigma_set(const Fc2Group& g, const GeneratorSystem& sys);

/// Sigma-set intersection is exactly {identity}. This is the oracle.
bool are_disjoint(const Fc2Group& g, const GeneratorSystem& s1,
                  const GeneratorSystem& s2);

/// Sufficient criterion: entries split into Phi-images outside the h-span
/// (B) and elements inside it (B'); true iff both intersections are empty.
/// Requires every spherical entry of both systems to have order exactly 2;
/// nullopt when inapplicable (caller falls back to are_disjoint).
std::optional<bool> lemma_criterion(const Fc2Group& g, const GeneratorSystem& s1,
                                    const GeneratorSystem& s2);

/// Criterion fast path when it answers true, direct sigma-set fallback
/// otherwise.
bool disjoint_with_fallback(const Fc2Group& g, const GeneratorSystem& s1,
                            const GeneratorSystem& s2);

/// |G|(2g'-2 + sum(1-1/m_i))/2 + 1 is an integer >= 2 (the covering curve
/// has genus >= 2).
bool is_admissible(std::uint64_t order, const TypeSignature& t);

struct RamificationStructure {
    GeneratorSystem first;
    GeneratorSystem second;
    TypeSignature type1;
    TypeSignature type2;
};

enum class StructureError {
    None,
    GenerationFailure,
    RelationFailure,
    IdentityEntry,
    NotAdmissible,
    NotDisjoint,
};

const char* to_string(StructureError e);

struct StructureResult {
    StructureError error = StructureError::None;
    std::optional<RamificationStructure> structure;
    std::string detail;
    bool ok() const { return error == StructureError::None; }
};

/// Full pipeline: validate both systems, check both types admissible,
/// check disjointness. Reports the first failed condition.
StructureResult make_structure(const Fc2Group& g, const GeneratorSystem& s1,
                               const GeneratorSystem& s2);

/// JSON round-trip: {"genus_prime": g', "handles": [hex], "spherical": [hex]}.
std::string system_to_json(const GeneratorSystem& sys);
GeneratorSystem system_from_json(const std::string& text, int s);

}  // namespace isoprod

// constructions.hpp
// The explicit generating vectors T1, T2 (regular case) and V2 with the
// central correction h (irregular case), plus the linear conditions on the
// structure tensor under which their entries all have order 2.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isoprod/gf2.hpp"
#include "isoprod/group.hpp"
#include "isoprod/ramification.hpp"
#include "isoprod/rng.hpp"

namespace isoprod {

enum class ConstructionId { T1, T2Regular, V2Irregular };

/// T1 = (g_1..g_s, (g_1..g_s)^-1, g_{s+1}..g_{2s}, (g_{s+1}..g_{2s})^-1);
/// spherical, 2s+2 entries, long relation holds identically.
GeneratorSystem build_T1(const Fc2Group& g);

/// T2 = (g_1g_2, ..., g_{s-1}g_s, g_s g_2 g_3, (g_1g_2g_3)^-1, mirrored on
/// indices s+1..2s). The index pattern degenerates below s = 3 (nullopt).
std::optional<GeneratorSystem> build_T2_regular(const Fc2Group& g);

/// V2: handles are the q pairs (g_{s-i+1}, g_{2s-i+1}); spherical part is
/// the two (s-q+1)-cycles g_1g_2, ..., g_{s-q}g_{s-q+1}, g_{s-q+1}g_1 and
/// its mirror, with h = [g_s,g_2s][g_{s-1},g_{2s-1}]... multiplied into the
/// last entry. Defined for s >= 3, 1 <= q <= s-2 (nullopt otherwise).
std::optional<GeneratorSystem> build_V2_irregular(const Fc2Group& g, int q);

/// a-part supports (as bit masks over the 2s generators) of the spherical
/// entries, computed symbolically from the defining words.
std::vector<std::uint32_t> spherical_supports(int s, ConstructionId which,
                                              int q = 0);

/// GF(2) conditions on the tensor bits equivalent to "every spherical entry
/// squares to 1". The square of an entry with a-part S is the sum of
/// c(i,k,.) over pairs i < k inside S, so each entry contributes one
/// equation over the pair coordinates, replicated across all s rows.
struct LinearConstraintSystem {
    int s = 0;
    int pair_dim = 0;
    std::vector<BitVector> equations;  // deduplicated, over pair coordinates
    std::vector<std::string> labels;
    std::size_t eq_rank = 0;
    std::vector<BitVector> null_basis;  // solution-space basis per row

    int free_bits_per_row() const { return pair_dim - int(eq_rank); }
    /// log2 of the number of solution tensors: s * free_bits_per_row().
    int solution_count_log2() const { return s * free_bits_per_row(); }
    bool satisfied_by(const StructureTensor& t) const;
};

LinearConstraintSystem order2_constraints(int s, ConstructionId which,
                                          int q = 0);
/// Union of the T1 conditions and the second construction's (T2 for q = 0,
/// V2 otherwise).
LinearConstraintSystem combined_order2_constraints(int s, int q);

/// Tensor with each row drawn uniformly from the constraint solution space.
StructureTensor sample_solution(const LinearConstraintSystem& cs, Rng& rng);
/// Same, retried until the rows are linearly independent.
StructureTensor sample_independent_solution(const LinearConstraintSystem& cs,
                                            Rng& rng, int max_tries = 512);

struct SystemCheck {
    bool defined = false;
    std::string undefined_reason;
    std::vector<int> spherical_orders;
    std::vector<bool> order2_per_entry;
    bool order2_ok = false;
    bool generation_ok = false;
    bool relation_ok = false;
    TypeSignature actual_type;  // genus_prime + sorted computed orders

    bool all_ok() const {
        return defined && order2_ok && generation_ok && relation_ok;
    }
};

struct ConstructionReport {
    int s = 0;
    int q = 0;
    std::string tensor_hex;
    bool independent = false;
    SystemCheck first;        // T1
    SystemCheck second;       // T2 (q=0) or V2(q)
    bool disjointness_ok = false;
    // lemma fast-path result: "true", "false" or "inapplicable"
    std::string criterion;

    bool all_true() const {
        return first.all_ok() && second.all_ok() && disjointness_ok;
    }
    std::string to_json_line() const;
};

/// Builds T1 and the q-selected second system, fills every flag. Failures
/// are report content, not exceptions.
ConstructionReport construction_validity(const Fc2Group& g, int q);

}  // namespace isoprod

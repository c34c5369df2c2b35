// census.hpp
// Enumeration of the family at desk scale, isomorphism classification via
// the subspace-orbit fast path certified against the backtracking oracle,
// and moduli-component lower bounds.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "isoprod/constructions.hpp"
#include "isoprod/group.hpp"

namespace isoprod {

struct TensorCounts {
    mpz_class total;        // 2^(s * C(2s,2))
    mpz_class independent;  // prod_{l<s} (2^C(2s,2) - 2^l), ordered tuples
};

TensorCounts count_tensor_space(int s);

/// Canonical representative of the row span of the tensor (reduced
/// row-echelon basis over the pair coordinates).
BitMatrix span_of_tensor(const StructureTensor& t);
std::string span_key(const BitMatrix& span);
/// Tensor whose rows are the rows of the (full-rank) span basis.
StructureTensor tensor_from_span(const BitMatrix& span, int s);

/// Span of the tensor rows inside the extended coordinate space
/// GF(2)^(C(2s,2) + 2s): pair coefficients followed by the diagonal values
/// of the squaring map (zero for family tensors). Basis changes of the
/// generators act linearly here by substitution into the quadratic map,
/// and two family tensors give isomorphic groups iff their extended spans
/// lie in one orbit. Plain wedge-coordinate spans are too coarse for
/// that: they track the commutator form but forget which cosets square
/// to 1.
BitMatrix extended_span_of_tensor(const StructureTensor& t);

/// Substitution transport of one extended row along the basis change with
/// the given columns.
BitVector transport_row(const BitVector& row,
                        const std::vector<std::uint32_t>& cols, int n);

/// Partition of the given extended spans into orbits under GL(2s,2);
/// returns the orbit index of each input span. Transvections generate the
/// acting group.
std::vector<int> gl_span_orbits(const std::vector<BitMatrix>& spans, int n);

struct QCensus {
    int q = 0;
    bool construction_defined = false;
    std::uint64_t examined = 0;
    std::uint64_t order2_pass = 0;
    std::uint64_t generation_pass = 0;
    std::uint64_t relation_pass = 0;
    std::uint64_t disjoint_pass = 0;
    std::uint64_t all_true = 0;
    int constraint_free_bits = 0;  // per-row free dimension of the order-2 space
    int class_lower_bound = 0;
    std::string class_method;
};

struct CensusReport {
    int s = 0;
    std::string mode;  // "exhaustive" or "sampled"
    std::uint64_t seed = 0;
    std::uint64_t sample_count = 0;
    mpz_class total_tensors;
    mpz_class independent_formula;

    // exhaustive mode
    std::uint64_t enumerated_total = 0;
    std::uint64_t enumerated_independent = 0;
    std::uint64_t distinct_spans = 0;
    int iso_classes = 0;
    std::vector<std::string> class_representatives;
    bool oracle_certified = false;

    // sampled mode: raw-space statistics
    std::uint64_t raw_examined = 0;
    std::uint64_t raw_independent = 0;
    std::uint64_t raw_t1_satisfying = 0;
    std::vector<std::uint64_t> raw_pair_satisfying;  // per q = 0,1,2

    std::vector<QCensus> q_census;

    std::string to_json() const;
};

/// Full enumeration; requires s <= 2. When certify is set the orbit
/// classification is checked against the isomorphism oracle on every
/// span (member vs orbit representative, plus all representative pairs);
/// a disagreement throws std::logic_error.
CensusReport census_exhaustive(int s, int jobs, bool certify);

/// Seeded sampling census for s >= 3 (also valid at s <= 2). Raw samples
/// measure independence and constraint-satisfaction rates; per-q samples
/// from the order-2 solution space feed construction checks and the
/// component lower bound. Classes are identified with the exact oracle for
/// s <= 4 and with invariant buckets (a sound lower bound) for larger s.
CensusReport census_sampled(int s, std::uint64_t sample_count,
                            std::uint64_t seed, int jobs);

}  // namespace isoprod

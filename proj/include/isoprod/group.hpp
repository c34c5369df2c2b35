// group.hpp
// Exact arithmetic in the order-2^(3s) family: 2s involutory generators
// g_1..g_2s, s central involutions h_1..h_s, commutators [g_i, g_k]
// prescribed by a GF(2) structure tensor c(i,k,j).
//
// Every element has the unique normal form g_1^a1 .. g_2s^a_2s h_1^b1 .. h_s^bs,
// stored as the packed bit pair (a, b).
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "isoprod/gf2.hpp"

namespace isoprod {

// Engine limit: a fits 32 bits (2s <= 32), b fits 32 bits.
inline constexpr int kMaxS = 16;

/// Lexicographic index of the pair (i,k), 0 <= i < k < n.
inline int pair_index(int i, int k, int n) {
    return i * (2 * n - i - 1) / 2 + (k - i - 1);
}
inline int pair_count(int n) { return n * (n - 1) / 2; }

/// GF(2) commutator data for one group of the family: for each pair
/// i < k of generator indices, the s-bit vector c(i,k,.) with
/// [g_i, g_k] = prod_j h_j^{c(i,k,j)}.
struct StructureTensor {
    int s = 0;
    // cvec[pair_index(i,k,2s)] holds c(i,k,j) in bit j.
    std::vector<std::uint32_t> cvec;

    StructureTensor() = default;
    explicit StructureTensor(int s_);

    int num_generators() const { return 2 * s; }
    int num_pairs() const { return pair_count(2 * s); }

    std::uint32_t pair_bits(int i, int k) const {
        return cvec[pair_index(i, k, 2 * s)];
    }
    bool c(int i, int k, int j) const { return (pair_bits(i, k) >> j) & 1u; }
    void set_c(int i, int k, int j, bool v);

    /// Row c_j as a vector over the pair coordinates.
    BitVector row(int j) const;
    std::vector<BitVector> rows() const;

    bool operator==(const StructureTensor& o) const {
        return s == o.s && cvec == o.cvec;
    }
};

/// "s<d>:0x<hex>" with the flattened bit order (pair-major, j-minor),
/// four bits per hex digit, low bit of each digit first. Bit-exact
/// round-trip.
std::string tensor_to_hex(const StructureTensor& t);
StructureTensor tensor_from_hex(const std::string& text);

/// Normal-form exponent pair. `a` has 2s meaningful bits, `b` has s.
struct GroupElement {
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    std::uint16_t s = 0;

    bool is_identity() const { return a == 0 && b == 0; }
    std::uint64_t key() const {
        return std::uint64_t(a) | (std::uint64_t(b) << 32);
    }
    bool operator==(const GroupElement& o) const {
        return a == o.a && b == o.b && s == o.s;
    }
    bool operator!=(const GroupElement& o) const { return !(*this == o); }
    bool operator<(const GroupElement& o) const { return key() < o.key(); }
};

/// "<hex>" of the a-bits (2s of them) followed by the b-bits (s),
/// packed like tensor_to_hex.
std::string element_to_hex(const GroupElement& x);
GroupElement element_from_hex(const std::string& text, int s);

class Fc2Group {
public:
    explicit Fc2Group(StructureTensor t);

    int s() const { return tensor_.s; }
    int num_generators() const { return 2 * tensor_.s; }
    std::uint64_t order() const { return std::uint64_t(1) << (3 * tensor_.s); }
    const StructureTensor& tensor() const { return tensor_; }

    /// Rank of the s tensor rows equals s; equivalently the group is
    /// generated by the g_i alone.
    bool independent() const { return independent_; }

    GroupElement identity() const { return {0, 0, std::uint16_t(tensor_.s)}; }
    GroupElement generator(int i) const;          // g_i, 0-based
    GroupElement central_generator(int j) const;  // h_j, 0-based
    GroupElement element(std::uint32_t a, std::uint32_t b) const;

    GroupElement multiply(const GroupElement& x, const GroupElement& y) const;
    GroupElement inverse(const GroupElement& x) const;
    GroupElement conjugate(const GroupElement& x, const GroupElement& t) const;
    GroupElement power(const GroupElement& x, int n) const;
    int element_order(const GroupElement& x) const;  // 1, 2 or 4
    GroupElement commutator(const GroupElement& x, const GroupElement& y) const;

    /// {t x t^-1 : t in G}, sorted by packed key. Central factors act
    /// trivially, so t only ranges over the 2^(2s) g-patterns.
    std::vector<GroupElement> conjugacy_class(const GroupElement& x) const;

    /// Image of x in G/H(G) = GF(2)^(2s): the a-part.
    BitVector phi_image(const GroupElement& x) const;

    /// Order of the closure of xs under multiplication and inverses.
    std::uint64_t subgroup_generated(const std::vector<GroupElement>& xs) const;

    /// True iff xs generates G. Frattini-quotient rank test when the
    /// group is independent; closure fallback otherwise.
    bool generates_fast(const std::vector<GroupElement>& xs) const;

    /// b-part of the central correction picked up when normalising
    /// g^xa * g^ya (sum of c(i,k,.) over k in xa, i in ya, i < k).
    std::uint32_t collection_correction(std::uint32_t xa, std::uint32_t ya) const;
    /// b-part of the square of any element with a-part `a`.
    std::uint32_t square_bits(std::uint32_t a) const;
    /// b-part of the commutator of elements with a-parts xa, ya.
    std::uint32_t commutator_bits(std::uint32_t xa, std::uint32_t ya) const;

    /// Multiset of fiber sizes of the squaring map a -> square_bits(a),
    /// sorted; cheap isomorphism invariant.
    std::vector<std::uint64_t> square_fiber_profile() const;

    void check_element(const GroupElement& x) const;  // throws on dim mismatch

private:
    StructureTensor tensor_;
    bool independent_ = false;
    std::vector<std::uint32_t> qtab_;  // square_bits table when 2s <= 20
};

/// Exact isomorphism test for two independent family members: searches
/// for a basis-image matrix A on the Frattini quotient and a change of
/// central basis M with q2(A a) = M q1(a); such a pair exists iff the
/// groups are isomorphic. Backtracks over the columns of A with order
/// and commutator-relation consistency checked incrementally.
bool is_isomorphic(const Fc2Group& g1, const Fc2Group& g2);

}  // namespace isoprod

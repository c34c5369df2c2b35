// gf2.hpp
// Exact linear algebra over GF(2): bit-packed vectors, matrices, rank,
// span membership, reduced row-echelon canonical forms.
#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace isoprod {

/// Fixed-length vector over GF(2), packed into 64-bit words.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t length)
        : len_(length), words_((length + 63) / 64, 0) {}
    BitVector(std::initializer_list<int> bits);

    std::size_t size() const { return len_; }
    bool get(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i, bool v) {
        std::uint64_t m = std::uint64_t(1) << (i & 63);
        if (v) words_[i >> 6] |= m; else words_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    bool is_zero() const;
    std::size_t popcount() const;
    /// Index of the lowest set bit, or size() if zero.
    std::size_t lowest_set() const;

    void xor_with(const BitVector& other);   // in place; lengths must match
    bool dot(const BitVector& other) const;  // <x,y> over GF(2)

    bool operator==(const BitVector& o) const {
        return len_ == o.len_ && words_ == o.words_;
    }
    bool operator!=(const BitVector& o) const { return !(*this == o); }
    bool operator<(const BitVector& o) const;  // lexicographic on bit 0,1,...

    /// Low `length` bits of `word` (length <= 64).
    static BitVector from_word(std::uint64_t word, std::size_t length);
    std::uint64_t to_word() const;  // requires size() <= 64

    std::string to_string() const;  // e.g. "1011"

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

/// componentwise XOR; lengths must match (throws std::invalid_argument).
BitVector add(const BitVector& x, const BitVector& y);

/// Dense matrix over GF(2), stored as rows.
struct BitMatrix {
    std::size_t cols = 0;
    std::vector<BitVector> rows;

    BitMatrix() = default;
    explicit BitMatrix(std::size_t cols_) : cols(cols_) {}

    std::size_t row_count() const { return rows.size(); }
    void append_row(BitVector r);

    bool operator==(const BitMatrix& o) const {
        return cols == o.cols && rows == o.rows;
    }
};

/// Row rank over GF(2) by Gaussian elimination.
std::size_t rank(const BitMatrix& m);
std::size_t rank(const std::vector<BitVector>& rows);

/// True iff v lies in the GF(2) span of `basis` (all same length).
bool in_span(const BitVector& v, const std::vector<BitVector>& basis);

/// Reduced row-echelon basis of the row span, zero rows dropped.
/// Two inputs yield identical output iff they span the same subspace.
BitMatrix subspace_canonical(const std::vector<BitVector>& basis);
BitMatrix subspace_canonical(const BitMatrix& m);

/// Basis of { x : <row, x> = 0 for every row }. Columns = m.cols.
std::vector<BitVector> nullspace(const BitMatrix& m);

}  // namespace isoprod

// gf2.cpp

#include "isoprod/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace isoprod {

BitVector::BitVector(std::initializer_list<int> bits)
    : BitVector(bits.size()) {
    std::size_t i = 0;
    for (int b : bits) set(i++, b != 0);
}

bool BitVector::is_zero() const {
    for (auto w : words_) if (w) return false;
    return true;
}

std::size_t BitVector::popcount() const {
    std::size_t n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
}

std::size_t BitVector::lowest_set() const {
    for (std::size_t k = 0; k < words_.size(); ++k)
        if (words_[k]) return k * 64 + std::countr_zero(words_[k]);
    return len_;
}

void BitVector::xor_with(const BitVector& other) {
    if (len_ != other.len_)
        throw std::invalid_argument("BitVector length mismatch");
    for (std::size_t k = 0; k < words_.size(); ++k)
        words_[k] ^= other.words_[k];
}

bool BitVector::dot(const BitVector& other) const {
    if (len_ != other.len_)
        throw std::invalid_argument("BitVector length mismatch");
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < words_.size(); ++k)
        acc ^= words_[k] & other.words_[k];
    return std::popcount(acc) & 1u;
}

bool BitVector::operator<(const BitVector& o) const {
    if (len_ != o.len_) return len_ < o.len_;
    // bit 0 is the most significant position for ordering purposes
    for (std::size_t i = 0; i < len_; ++i) {
        bool a = get(i), b = o.get(i);
        if (a != b) return b;  // 0 < 1
    }
    return false;
}

BitVector BitVector::from_word(std::uint64_t word, std::size_t length) {
    if (length > 64) throw std::invalid_argument("from_word: length > 64");
    BitVector v(length);
    if (length) {
        std::uint64_t mask = length == 64 ? ~std::uint64_t(0)
                                          : ((std::uint64_t(1) << length) - 1);
        v.words_[0] = word & mask;
    }
    return v;
}

std::uint64_t BitVector::to_word() const {
    if (len_ > 64) throw std::invalid_argument("to_word: size > 64");
    return words_.empty() ? 0 : words_[0];
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

BitVector add(const BitVector& x, const BitVector& y) {
    BitVector r = x;
    r.xor_with(y);
    return r;
}

void BitMatrix::append_row(BitVector r) {
    if (r.size() != cols)
        throw std::invalid_argument("BitMatrix row width mismatch");
    rows.push_back(std::move(r));
}

namespace {

// In-place forward elimination; returns pivot columns in order.
std::vector<std::size_t> eliminate(std::vector<BitVector>& rows) {
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    if (rows.empty()) return pivots;
    std::size_t cols = rows[0].size();
    for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
        std::size_t p = next;
        while (p < rows.size() && !rows[p].get(c)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[next], rows[p]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != next && rows[r].get(c)) rows[r].xor_with(rows[next]);
        pivots.push_back(c);
        ++next;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const std::vector<BitVector>& rows) {
    auto copy = rows;
    return eliminate(copy).size();
}

std::size_t rank(const BitMatrix& m) { return rank(m.rows); }

bool in_span(const BitVector& v, const std::vector<BitVector>& basis) {
    for (const auto& b : basis)
        if (b.size() != v.size())
            throw std::invalid_argument("in_span: length mismatch");
    auto rows = basis;
    std::size_t r = eliminate(rows).size();
    rows.push_back(v);
    return eliminate(rows).size() == r;
}

BitMatrix subspace_canonical(const std::vector<BitVector>& basis) {
    BitMatrix out(basis.empty() ? 0 : basis[0].size());
    auto rows = basis;
    std::size_t r = eliminate(rows).size();
    rows.resize(r);
    out.cols = basis.empty() ? 0 : basis[0].size();
    out.rows = std::move(rows);
    return out;
}

BitMatrix subspace_canonical(const BitMatrix& m) {
    BitMatrix out = subspace_canonical(m.rows);
    out.cols = m.cols;
    return out;
}

std::vector<BitVector> nullspace(const BitMatrix& m) {
    auto rows = m.rows;
    auto pivots = eliminate(rows);
    rows.resize(pivots.size());
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<BitVector> basis;
    for (std::size_t c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        BitVector v(m.cols);
        v.set(c, true);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (rows[r].get(c)) v.set(pivots[r], true);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace isoprod

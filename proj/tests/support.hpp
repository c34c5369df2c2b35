// support.hpp
// Test-only helpers: a free-collection rewriting oracle for the group
// multiplication (independent of the bilinear-form implementation), an
// external dihedral-group table, and small generators.
#pragma once

#include <cstdint>
#include <vector>

#include "isoprod/group.hpp"
#include "isoprod/rng.hpp"

namespace testsupport {

// Words over the symbols 0..2s-1 (the g_i) and 2s..3s-1 (the h_j).
// Normalises by applying one defining relation at a time:
//   x x -> 1 for every symbol (g_i^2 = h_j^2 = 1),
//   g_k g_i -> g_i g_k h^{c(i,k,.)} for k > i,
//   h g -> g h and h_k h_j -> h_j h_k (central h's).
inline isoprod::GroupElement collect_word(const isoprod::StructureTensor& t,
                                          std::vector<int> word) {
    int n = 2 * t.s;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t p = 0; p + 1 < word.size(); ++p) {
            if (word[p] == word[p + 1]) {
                word.erase(word.begin() + p, word.begin() + p + 2);
                changed = true;
                break;
            }
            if (word[p] > word[p + 1]) {
                std::swap(word[p], word[p + 1]);
                if (word[p] < n && word[p + 1] < n) {
                    // swapped g_k past g_i: insert the commutator letters
                    int i = word[p], k = word[p + 1];
                    std::uint32_t bits =
                        t.cvec[isoprod::pair_index(i, k, n)];
                    std::vector<int> hs;
                    for (int j = 0; j < t.s; ++j)
                        if ((bits >> j) & 1u) hs.push_back(n + j);
                    word.insert(word.begin() + p + 2, hs.begin(), hs.end());
                }
                changed = true;
                break;
            }
        }
    }
    isoprod::GroupElement x{0, 0, std::uint16_t(t.s)};
    for (int sym : word) {
        if (sym < n) x.a |= std::uint32_t(1) << sym;
        else x.b |= std::uint32_t(1) << (sym - n);
    }
    return x;
}

inline std::vector<int> element_word(const isoprod::GroupElement& x) {
    std::vector<int> word;
    for (int i = 0; i < 2 * x.s; ++i)
        if ((x.a >> i) & 1u) word.push_back(i);
    for (int j = 0; j < x.s; ++j)
        if ((x.b >> j) & 1u) word.push_back(2 * x.s + j);
    return word;
}

inline isoprod::GroupElement multiply_oracle(const isoprod::StructureTensor& t,
                                             const isoprod::GroupElement& x,
                                             const isoprod::GroupElement& y) {
    std::vector<int> word = element_word(x);
    auto wy = element_word(y);
    word.insert(word.end(), wy.begin(), wy.end());
    return collect_word(t, word);
}

// Dihedral group of order 8 as s^i r^k, i in {0,1}, k in Z4, encoded i*4+k.
struct Dihedral8 {
    static int compose(int x, int y) {
        int i = x / 4, k = x % 4;
        int j = y / 4, l = y % 4;
        int kk = j ? (4 - k) % 4 : k;
        return (i ^ j) * 4 + (kk + l) % 4;
    }
    static int identity() { return 0; }
};

inline isoprod::StructureTensor random_tensor(int s, isoprod::Rng& rng) {
    isoprod::StructureTensor t(s);
    for (int p = 0; p < t.num_pairs(); ++p)
        t.cvec[p] = std::uint32_t(rng.bits(s));
    return t;
}

inline isoprod::StructureTensor random_independent_tensor(int s,
                                                          isoprod::Rng& rng) {
    for (;;) {
        auto t = random_tensor(s, rng);
        if (isoprod::rank(t.rows()) == std::size_t(s)) return t;
    }
}

inline isoprod::GroupElement random_element(const isoprod::Fc2Group& g,
                                            isoprod::Rng& rng) {
    return g.element(std::uint32_t(rng.bits(2 * g.s())),
                     std::uint32_t(rng.bits(g.s())));
}

}  // namespace testsupport

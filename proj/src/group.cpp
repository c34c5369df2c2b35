// group.cpp

#include "isoprod/group.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <stdexcept>
#include <unordered_set>

namespace isoprod {

StructureTensor::StructureTensor(int s_) : s(s_) {
    if (s < 1 || s > kMaxS)
        throw std::invalid_argument("StructureTensor: s out of range");
    cvec.assign(num_pairs(), 0);
}

void StructureTensor::set_c(int i, int k, int j, bool v) {
    std::uint32_t m = std::uint32_t(1) << j;
    auto& w = cvec[pair_index(i, k, 2 * s)];
    if (v) w |= m; else w &= ~m;
}

BitVector StructureTensor::row(int j) const {
    BitVector r(num_pairs());
    for (int p = 0; p < num_pairs(); ++p)
        if ((cvec[p] >> j) & 1u) r.set(p, true);
    return r;
}

std::vector<BitVector> StructureTensor::rows() const {
    std::vector<BitVector> rs;
    rs.reserve(s);
    for (int j = 0; j < s; ++j) rs.push_back(row(j));
    return rs;
}

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

// Bits are packed four per hex digit, bit t going to digit t/4 at
// position t%4.
std::string pack_bits_hex(const std::vector<bool>& bits) {
    std::string out((bits.size() + 3) / 4, '0');
    for (std::size_t t = 0; t < bits.size(); ++t)
        if (bits[t]) out[t / 4] = kHexDigits[(out[t / 4] <= '9'
                                                  ? out[t / 4] - '0'
                                                  : out[t / 4] - 'a' + 10) |
                                             (1 << (t % 4))];
    return out;
}

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

std::vector<bool> unpack_bits_hex(const std::string& hex, std::size_t nbits) {
    if (hex.size() != (nbits + 3) / 4)
        throw std::invalid_argument("hex payload has wrong length");
    std::vector<bool> bits(nbits, false);
    for (std::size_t d = 0; d < hex.size(); ++d) {
        int v = hex_value(hex[d]);
        if (v < 0) throw std::invalid_argument("bad hex digit");
        for (int pos = 0; pos < 4; ++pos) {
            std::size_t t = d * 4 + pos;
            bool bit = (v >> pos) & 1;
            if (t < nbits) bits[t] = bit;
            else if (bit) throw std::invalid_argument("nonzero padding bits");
        }
    }
    return bits;
}

}  // namespace

std::string tensor_to_hex(const StructureTensor& t) {
    std::vector<bool> bits(std::size_t(t.num_pairs()) * t.s, false);
    for (int p = 0; p < t.num_pairs(); ++p)
        for (int j = 0; j < t.s; ++j)
            bits[std::size_t(p) * t.s + j] = (t.cvec[p] >> j) & 1u;
    return "s" + std::to_string(t.s) + ":0x" + pack_bits_hex(bits);
}

StructureTensor tensor_from_hex(const std::string& text) {
    if (text.empty() || text[0] != 's')
        throw std::invalid_argument("tensor string must start with 's'");
    auto colon = text.find(":0x");
    if (colon == std::string::npos)
        throw std::invalid_argument("tensor string must contain ':0x'");
    int s = 0;
    try {
        std::size_t used = 0;
        s = std::stoi(text.substr(1, colon - 1), &used);
        if (used != colon - 1) throw std::invalid_argument("");
    } catch (...) {
        throw std::invalid_argument("bad s prefix in tensor string");
    }
    StructureTensor t(s);
    auto bits = unpack_bits_hex(text.substr(colon + 3),
                                std::size_t(t.num_pairs()) * t.s);
    for (int p = 0; p < t.num_pairs(); ++p)
        for (int j = 0; j < t.s; ++j)
            if (bits[std::size_t(p) * t.s + j])
                t.cvec[p] |= std::uint32_t(1) << j;
    return t;
}

std::string element_to_hex(const GroupElement& x) {
    std::vector<bool> bits(std::size_t(3) * x.s, false);
    for (int i = 0; i < 2 * x.s; ++i) bits[i] = (x.a >> i) & 1u;
    for (int j = 0; j < x.s; ++j) bits[2 * x.s + j] = (x.b >> j) & 1u;
    return pack_bits_hex(bits);
}

GroupElement element_from_hex(const std::string& text, int s) {
    auto bits = unpack_bits_hex(text, std::size_t(3) * s);
    GroupElement x{0, 0, std::uint16_t(s)};
    for (int i = 0; i < 2 * s; ++i)
        if (bits[i]) x.a |= std::uint32_t(1) << i;
    for (int j = 0; j < s; ++j)
        if (bits[2 * s + j]) x.b |= std::uint32_t(1) << j;
    return x;
}

Fc2Group::Fc2Group(StructureTensor t) : tensor_(std::move(t)) {
    if (tensor_.s < 1 || tensor_.s > kMaxS)
        throw std::invalid_argument("Fc2Group: s out of range");
    independent_ = rank(tensor_.rows()) == std::size_t(tensor_.s);
    int n = num_generators();
    if (n <= 20) {
        qtab_.assign(std::size_t(1) << n, 0);
        for (std::uint32_t a = 0; a < qtab_.size(); ++a) {
            std::uint32_t acc = 0;
            for (int k = 1; k < n; ++k) {
                if (!((a >> k) & 1u)) continue;
                std::uint32_t low = a & ((std::uint32_t(1) << k) - 1);
                while (low) {
                    int i = std::countr_zero(low);
                    low &= low - 1;
                    acc ^= tensor_.cvec[pair_index(i, k, n)];
                }
            }
            qtab_[a] = acc;
        }
    }
}

GroupElement Fc2Group::generator(int i) const {
    if (i < 0 || i >= num_generators())
        throw std::invalid_argument("generator index out of range");
    return {std::uint32_t(1) << i, 0, std::uint16_t(tensor_.s)};
}

GroupElement Fc2Group::central_generator(int j) const {
    if (j < 0 || j >= tensor_.s)
        throw std::invalid_argument("central generator index out of range");
    return {0, std::uint32_t(1) << j, std::uint16_t(tensor_.s)};
}

GroupElement Fc2Group::element(std::uint32_t a, std::uint32_t b) const {
    int n = num_generators();
    if ((n < 32 && (a >> n)) || (b >> tensor_.s))
        throw std::invalid_argument("element bits out of range");
    return {a, b, std::uint16_t(tensor_.s)};
}

void Fc2Group::check_element(const GroupElement& x) const {
    if (x.s != tensor_.s)
        throw std::invalid_argument("element does not belong to this group");
}

std::uint32_t Fc2Group::collection_correction(std::uint32_t xa,
                                              std::uint32_t ya) const {
    // Moving each g_i factor of y leftward past each g_k factor of x
    // with k > i picks up c(i,k,.).
    std::uint32_t acc = 0;
    int n = num_generators();
    std::uint32_t ks = xa & ~std::uint32_t(1);  // k = 0 has no i < k
    while (ks) {
        int k = std::countr_zero(ks);
        ks &= ks - 1;
        std::uint32_t low = ya & ((std::uint32_t(1) << k) - 1);
        while (low) {
            int i = std::countr_zero(low);
            low &= low - 1;
            acc ^= tensor_.cvec[pair_index(i, k, n)];
        }
    }
    return acc;
}

std::uint32_t Fc2Group::square_bits(std::uint32_t a) const {
    if (!qtab_.empty()) return qtab_[a];
    return collection_correction(a, a);
}

std::uint32_t Fc2Group::commutator_bits(std::uint32_t xa,
                                        std::uint32_t ya) const {
    return collection_correction(xa, ya) ^ collection_correction(ya, xa);
}

GroupElement Fc2Group::multiply(const GroupElement& x,
                                const GroupElement& y) const {
    check_element(x);
    check_element(y);
    return {x.a ^ y.a, x.b ^ y.b ^ collection_correction(x.a, y.a),
            std::uint16_t(tensor_.s)};
}

GroupElement Fc2Group::inverse(const GroupElement& x) const {
    check_element(x);
    // x^2 is central, so x^-1 = x * x^2.
    return {x.a, x.b ^ square_bits(x.a), std::uint16_t(tensor_.s)};
}

GroupElement Fc2Group::conjugate(const GroupElement& x,
                                 const GroupElement& t) const {
    return multiply(multiply(t, x), inverse(t));
}

GroupElement Fc2Group::power(const GroupElement& x, int n) const {
    check_element(x);
    GroupElement r = identity();
    if (n < 0) return power(inverse(x), -n);
    for (int i = 0; i < n; ++i) r = multiply(r, x);
    return r;
}

int Fc2Group::element_order(const GroupElement& x) const {
    check_element(x);
    if (x.is_identity()) return 1;
    return square_bits(x.a) == 0 ? 2 : 4;
}

GroupElement Fc2Group::commutator(const GroupElement& x,
                                  const GroupElement& y) const {
    check_element(x);
    check_element(y);
    return {0, commutator_bits(x.a, y.a), std::uint16_t(tensor_.s)};
}

std::vector<GroupElement> Fc2Group::conjugacy_class(
    const GroupElement& x) const {
    check_element(x);
    int n = num_generators();
    std::vector<GroupElement> out;
    // Central parts of t drop out of t x t^-1, so g-patterns suffice.
    for (std::uint64_t u = 0; u < (std::uint64_t(1) << n); ++u) {
        GroupElement t{std::uint32_t(u), 0, std::uint16_t(tensor_.s)};
        out.push_back(conjugate(x, t));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

BitVector Fc2Group::phi_image(const GroupElement& x) const {
    check_element(x);
    return BitVector::from_word(x.a, num_generators());
}

std::uint64_t Fc2Group::subgroup_generated(
    const std::vector<GroupElement>& xs) const {
    std::vector<GroupElement> gens;
    for (const auto& x : xs) {
        check_element(x);
        gens.push_back(x);
        gens.push_back(inverse(x));
    }
    std::unordered_set<std::uint64_t> seen;
    std::vector<GroupElement> frontier{identity()};
    seen.insert(identity().key());
    while (!frontier.empty()) {
        std::vector<GroupElement> next;
        for (const auto& e : frontier) {
            for (const auto& g : gens) {
                GroupElement p = multiply(e, g);
                if (seen.insert(p.key()).second) next.push_back(p);
            }
        }
        frontier = std::move(next);
    }
    return seen.size();
}

bool Fc2Group::generates_fast(const std::vector<GroupElement>& xs) const {
    if (!independent_) return subgroup_generated(xs) == order();
    std::vector<BitVector> imgs;
    imgs.reserve(xs.size());
    for (const auto& x : xs) imgs.push_back(phi_image(x));
    return rank(imgs) == std::size_t(num_generators());
}

std::vector<std::uint64_t> Fc2Group::square_fiber_profile() const {
    int n = num_generators();
    std::vector<std::uint64_t> counts(std::size_t(1) << tensor_.s, 0);
    for (std::uint64_t a = 0; a < (std::uint64_t(1) << n); ++a)
        ++counts[square_bits(std::uint32_t(a))];
    std::sort(counts.begin(), counts.end());
    return counts;
}

// ---------------------------------------------------------------------------
// Isomorphism search.
//
// The h-span is the Frattini subgroup of an independent family member, so
// an isomorphism induces A in GL(2s,2) on the quotient and M in GL(s,2) on
// the h-span with squares(A a) = M squares(a); conversely any such (A, M)
// lifts to an isomorphism (the central parts of generator images are free,
// and the required transversal correction always exists in exponent 2).
// The search enumerates M by columns, pruned by square-fiber counts, then
// extends A column by column; each new column is pinned down by the linear
// commutator constraints against all earlier columns plus the order-2
// condition.
// ---------------------------------------------------------------------------

namespace {

// Affine system over GF(2) with up to 32 unknowns: coefficient bits in the
// low word positions, right-hand side in bit `ncols`. Kept fully reduced.
struct AffineSystem {
    int ncols;
    std::vector<std::uint64_t> rows;  // distinct pivots, reduced
    std::vector<int> pivots;
    bool consistent = true;

    explicit AffineSystem(int ncols_) : ncols(ncols_) {}

    std::uint64_t coeff_mask() const {
        return (std::uint64_t(1) << ncols) - 1;
    }

    void add(std::uint64_t row) {
        if (!consistent) return;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if ((row >> pivots[i]) & 1u) row ^= rows[i];
        if (row & coeff_mask()) {
            int p = std::countr_zero(row & coeff_mask());
            for (std::size_t i = 0; i < rows.size(); ++i)
                if ((rows[i] >> p) & 1u) rows[i] ^= row;
            rows.push_back(row);
            pivots.push_back(p);
        } else if (row) {
            consistent = false;  // 0 = 1
        }
    }

    // Particular solution and homogeneous basis; valid only if consistent.
    std::uint32_t particular() const {
        std::uint32_t x = 0;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if ((rows[i] >> ncols) & 1u) x |= std::uint32_t(1) << pivots[i];
        return x;
    }
    std::vector<std::uint32_t> homogeneous_basis() const {
        std::vector<bool> is_pivot(ncols, false);
        for (int p : pivots) is_pivot[p] = true;
        std::vector<std::uint32_t> basis;
        for (int f = 0; f < ncols; ++f) {
            if (is_pivot[f]) continue;
            std::uint32_t v = std::uint32_t(1) << f;
            for (std::size_t i = 0; i < rows.size(); ++i)
                if ((rows[i] >> f) & 1u) v |= std::uint32_t(1) << pivots[i];
            basis.push_back(v);
        }
        return basis;
    }
};

// cand must be outside the span of cols.
bool independent_with(const std::vector<std::uint32_t>& cols,
                      std::uint32_t cand) {
    std::vector<std::uint32_t> basis;
    for (std::uint32_t c : cols) {
        for (std::uint32_t b : basis) {
            std::uint32_t low = b & -b;
            if (c & low) c ^= b;
        }
        if (c) basis.push_back(c);
    }
    for (std::uint32_t b : basis) {
        std::uint32_t low = b & -b;
        if (cand & low) cand ^= b;
    }
    return cand != 0;
}

struct IsoSearch {
    const Fc2Group& g1;
    const Fc2Group& g2;
    int s;
    int n;  // 2s
    std::vector<std::uint64_t> fib1, fib2;  // squaring fiber sizes, per value
    std::vector<std::uint32_t> mcols;       // chosen columns of M
    std::vector<std::uint32_t> acols;       // chosen columns of A
    // brows[i][t] = B2(acols[i], e_t), cached per placed column
    std::vector<std::vector<std::uint32_t>> brows;

    IsoSearch(const Fc2Group& a, const Fc2Group& b)
        : g1(a), g2(b), s(a.s()), n(2 * a.s()) {
        fib1.assign(std::size_t(1) << s, 0);
        fib2.assign(std::size_t(1) << s, 0);
        for (std::uint64_t v = 0; v < (std::uint64_t(1) << n); ++v) {
            ++fib1[g1.square_bits(std::uint32_t(v))];
            ++fib2[g2.square_bits(std::uint32_t(v))];
        }
    }

    std::uint32_t apply_m(std::uint32_t u) const {
        std::uint32_t r = 0;
        for (int j = 0; j < s; ++j)
            if ((u >> j) & 1u) r ^= mcols[j];
        return r;
    }

    // Fiber sizes of the squaring maps must correspond under M on the
    // span of the columns chosen so far.
    bool m_column_ok(int j, std::uint32_t col) const {
        for (std::uint32_t v = 0; v < (std::uint32_t(1) << j); ++v) {
            std::uint32_t u = v | (std::uint32_t(1) << j);
            std::uint32_t mu = col;
            for (int t = 0; t < j; ++t)
                if ((v >> t) & 1u) mu ^= mcols[t];
            if (fib1[u] != fib2[mu]) return false;
        }
        return true;
    }

    bool search_m(int j) {
        if (j == s) {
            acols.clear();
            brows.clear();
            return place_column(0);
        }
        for (std::uint32_t col = 1; col < (std::uint32_t(1) << s); ++col) {
            if (!independent_with(mcols, col)) continue;
            if (!m_column_ok(j, col)) continue;
            mcols.push_back(col);
            if (search_m(j + 1)) return true;
            mcols.pop_back();
        }
        return false;
    }

    bool place_column(int k) {
        if (k == n) return true;
        // Constraints on the candidate column a: for each earlier column i
        // and h-coordinate j, sum_t a_t B2(acols[i], e_t)_j = (M c1(i,k,.))_j.
        AffineSystem sys(n);
        for (int i = 0; i < k && sys.consistent; ++i) {
            std::uint32_t target = apply_m(g1.tensor().pair_bits(i, k));
            for (int j = 0; j < s; ++j) {
                std::uint64_t row = 0;
                for (int t = 0; t < n; ++t)
                    if ((brows[i][t] >> j) & 1u) row |= std::uint64_t(1) << t;
                if ((target >> j) & 1u) row |= std::uint64_t(1) << n;
                sys.add(row);
            }
        }
        if (!sys.consistent) return false;
        std::uint32_t particular = sys.particular();
        auto hom = sys.homogeneous_basis();
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << hom.size());
             ++mask) {
            std::uint32_t cand = particular;
            for (std::size_t t = 0; t < hom.size(); ++t)
                if ((mask >> t) & 1u) cand ^= hom[t];
            if (g2.square_bits(cand) != 0) continue;  // image must square to 1
            if (!independent_with(acols, cand)) continue;
            acols.push_back(cand);
            std::vector<std::uint32_t> brow(n);
            for (int t = 0; t < n; ++t)
                brow[t] = g2.commutator_bits(cand, std::uint32_t(1) << t);
            brows.push_back(std::move(brow));
            if (place_column(k + 1)) return true;
            acols.pop_back();
            brows.pop_back();
        }
        return false;
    }
};

}  // namespace

bool is_isomorphic(const Fc2Group& g1, const Fc2Group& g2) {
    if (!g1.independent() || !g2.independent())
        throw std::invalid_argument(
            "is_isomorphic requires independent family members");
    if (g1.s() != g2.s()) return false;
    if (g1.tensor() == g2.tensor()) return true;
    IsoSearch search(g1, g2);
    auto prof1 = search.fib1, prof2 = search.fib2;
    std::sort(prof1.begin(), prof1.end());
    std::sort(prof2.begin(), prof2.end());
    if (prof1 != prof2) return false;
    return search.search_m(0);
}

}  // namespace isoprod

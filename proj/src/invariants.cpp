// invariants.cpp

#include "isoprod/invariants.hpp"

#include <stdexcept>

namespace isoprod {

namespace {

int128 abs128(int128 v) { return v < 0 ? -v : v; }

int128 gcd128(int128 a, int128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// bit length guard: products of operands under 2^62 each are always safe;
// larger ones get an explicit check.
int128 checked_mul(int128 a, int128 b) {
    if (a == 0 || b == 0) return 0;
    int128 r = a * b;
    if (r / b != a) throw std::overflow_error("128-bit overflow");
    return r;
}

}  // namespace

std::string int128_to_string(int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
    std::string digits;
    while (u) {
        digits.push_back(char('0' + int(u % 10)));
        u /= 10;
    }
    if (neg) digits.push_back('-');
    return std::string(digits.rbegin(), digits.rend());
}

Rational::Rational(int128 n) : num(n), den(1) {}

Rational::Rational(int128 n, int128 d) {
    if (d == 0) throw std::invalid_argument("zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num = n;
    den = d;
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(checked_mul(num, o.den) + checked_mul(o.num, den),
                    checked_mul(den, o.den));
}

Rational Rational::operator-(const Rational& o) const {
    return *this + Rational(-o.num, o.den);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(checked_mul(num, o.num), checked_mul(den, o.den));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num == 0) throw std::invalid_argument("division by zero");
    return Rational(checked_mul(num, o.den), checked_mul(den, o.num));
}

std::string Rational::to_string() const {
    if (den == 1) return int128_to_string(num);
    return int128_to_string(num) + "/" + int128_to_string(den);
}

GenusResult rh_genus(std::uint64_t order, const TypeSignature& t) {
    if (order < 1) throw std::invalid_argument("order must be positive");
    Rational sum(2 * t.genus_prime - 2);
    for (int m : t.branch_orders) {
        if (m < 2) throw std::invalid_argument("branch order below 2");
        sum = sum + Rational(m - 1, m);
    }
    Rational g = Rational(int128(order)) * sum / Rational(2) + Rational(1);
    GenusResult res;
    res.genus = g;
    res.realizable = g.is_integer();
    if (res.realizable) res.genus_int = g.num;
    return res;
}

std::optional<int128> curve_euler(std::uint64_t order, const TypeSignature& t) {
    auto g = rh_genus(order, t);
    if (!g.realizable) return std::nullopt;
    return 2 - 2 * g.genus_int;
}

std::optional<SurfaceInvariants> surface_invariants(std::uint64_t order,
                                                    const TypeSignature& t1,
                                                    const TypeSignature& t2) {
    if (!is_admissible(order, t1) || !is_admissible(order, t2))
        return std::nullopt;
    auto g1 = rh_genus(order, t1);
    auto g2 = rh_genus(order, t2);

    // chi via the genera
    int128 prod = checked_mul(g1.genus_int - 1, g2.genus_int - 1);
    if (prod % int128(order) != 0)
        throw std::logic_error("chi is not integral for admissible data");
    int128 chi = prod / int128(order);

    // chi via the displayed product formula: 4 chi = |G| * S1 * S2
    auto type_sum = [](const TypeSignature& t) {
        Rational sum(2 * t.genus_prime - 2);
        for (int m : t.branch_orders) sum = sum + Rational(m - 1, m);
        return sum;
    };
    Rational chi4 = Rational(int128(order)) * type_sum(t1) * type_sum(t2);
    Rational chi_alt = chi4 / Rational(4);
    if (!(chi_alt == Rational(chi)))
        throw std::logic_error("chi cross-check failed");

    SurfaceInvariants inv;
    inv.chi = chi;
    inv.k2 = 8 * chi;
    inv.e = 4 * chi;
    inv.irregularity = t1.genus_prime + t2.genus_prime;
    inv.g1 = g1.genus_int;
    inv.g2 = g2.genus_int;
    inv.group_order = order;
    return inv;
}

int128 closed_form_chi(int s, int q) {
    if (s < 2) throw std::domain_error("closed_form_chi requires s >= 2");
    if (q < 0) throw std::domain_error("q must be non-negative");
    if (3 * s - 2 > 100) throw std::overflow_error("s too large for exact chi");
    int128 p = int128(1) << (3 * s - 2);
    return checked_mul(p, int128(s - 1) * (s + q - 1));
}

}  // namespace isoprod

// invariants.hpp
// Exact numerical invariants of the curve/surface data attached to a group
// order and a pair of types. Integer/rational arithmetic only.
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "isoprod/ramification.hpp"

namespace isoprod {

using int128 = __int128;

std::string int128_to_string(int128 v);

/// Minimal exact rational on 128-bit integers; reduced, positive
/// denominator; throws std::overflow_error if a product would not fit.
struct Rational {
    int128 num = 0;
    int128 den = 1;

    Rational() = default;
    Rational(int128 n);  // NOLINT(google-explicit-constructor)
    Rational(int128 n, int128 d);

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    bool operator==(const Rational& o) const {
        return num == o.num && den == o.den;
    }
    bool is_integer() const { return den == 1; }
    std::string to_string() const;
};

struct GenusResult {
    bool realizable = false;  // genus is an integer
    Rational genus;           // exact value either way
    int128 genus_int = 0;     // meaningful when realizable
};

/// g solving 2g - 2 = order * (2g' - 2 + sum(1 - 1/m_i)); a non-integral
/// result is flagged, not thrown.
GenusResult rh_genus(std::uint64_t order, const TypeSignature& t);

/// e(C) = 2 - 2g; nullopt when the genus is not integral.
std::optional<int128> curve_euler(std::uint64_t order, const TypeSignature& t);

struct SurfaceInvariants {
    int128 chi = 0;
    int128 k2 = 0;
    int128 e = 0;
    int irregularity = 0;
    int128 g1 = 0;
    int128 g2 = 0;
    std::uint64_t group_order = 0;
};

/// chi is computed both ways (via genera, via the 4chi product formula)
/// and must agree exactly; disagreement throws std::logic_error.
/// Returns nullopt when a type is not admissible for the order.
std::optional<SurfaceInvariants> surface_invariants(std::uint64_t order,
                                                    const TypeSignature& t1,
                                                    const TypeSignature& t2);

/// 2^(3s-2) (s-1) (s+q-1); throws std::domain_error for s < 2 (the value
/// would fail the general-type requirement).
int128 closed_form_chi(int s, int q);

}  // namespace isoprod

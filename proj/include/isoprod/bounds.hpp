// bounds.hpp
// Asymptotic bound calculators: group-count exponent intervals, the x_s/y_s
// sequences with their component lower bounds, and the reference bounds the
// results are compared against. Error terms are never assigned values;
// every bound here is a leading term and is marked as such in reports.
#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace isoprod {

inline constexpr const char* kErrorTermNote =
    "leading term only; error term unmodeled";

struct HigmanBounds {
    int k = 0;
    double lower_log2 = 0;  // (2/27) k^3
    double upper_log2 = 0;  // (2/15) k^3
    const char* note = kErrorTermNote;
};

HigmanBounds higman_bounds(int k);

/// The two constant inequalities the final inversion step relies on,
/// evaluated in extended precision: 27 (ln 2)^3 < 9 and 27 (ln 2)^2 < 13.
struct ConstantChecks {
    double value_cubed = 0;    // 27 (ln 2)^3
    double value_squared = 0;  // 27 (ln 2)^2
    bool pass_cubed = false;
    bool pass_squared = false;
};

ConstantChecks constant_checks();

struct BoundsRow {
    int s = 0;
    mpz_class x;             // x_s = 2^(3s-2) (s-1)^2, exact
    mpz_class y;             // y_s = 8 x_s, exact
    double log2_x = 0;       // (3s-2) + 2 log2(s-1)
    double log2_h_lower = 0; // leading term 2 s^3
    double thm1_rhs_log2 = 0;   // (2/9) (ln x)^3, exponent of 2
    double thm1_rhs_ln = 0;     // same bound in ln units
    double paper_ybound_ln = 0; // ln of y^((2/13)(ln y)^2)
    double catanese_ln = 0;     // ln of y^(77 y^2)
    double manetti_ln = 0;      // ln of y^((1/5) ln y)
    double eta = 0;             // 3s / log2(x) - 1
};

/// Defined for s >= 2 (x_s vanishes below that).
BoundsRow theorem_bounds(int s);

/// Base-y exponents of the three bounds at a given K^2 = y.
struct ReferenceBounds {
    double y = 0;
    double manetti_exp = 0;   // (1/5) ln y
    double paper_exp = 0;     // (2/13) (ln y)^2
    double catanese_exp = 0;  // 77 y^2
    bool ordering_ok = false; // manetti < paper < catanese
};

ReferenceBounds reference_bounds(double y);

/// Smallest integer y >= 2 from which the exponent ordering holds onward,
/// located numerically.
int reference_ordering_threshold();

}  // namespace isoprod

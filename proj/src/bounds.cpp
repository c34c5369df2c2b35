// bounds.cpp

#include "isoprod/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace isoprod {

HigmanBounds higman_bounds(int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    HigmanBounds b;
    b.k = k;
    double k3 = double(k) * k * k;
    b.lower_log2 = 2.0 / 27.0 * k3;
    b.upper_log2 = 2.0 / 15.0 * k3;
    return b;
}

ConstantChecks constant_checks() {
    long double ln2 = std::log(2.0L);
    ConstantChecks c;
    long double cubed = 27.0L * ln2 * ln2 * ln2;
    long double squared = 27.0L * ln2 * ln2;
    c.value_cubed = double(cubed);
    c.value_squared = double(squared);
    // long double gives ~18 significant digits; the margins (0.008, 0.028)
    // dwarf the 1e-12 tolerance the check is stated at.
    c.pass_cubed = cubed < 9.0L - 1e-12L;
    c.pass_squared = squared < 13.0L - 1e-12L;
    return c;
}

BoundsRow theorem_bounds(int s) {
    if (s < 2) throw std::invalid_argument("theorem_bounds requires s >= 2");
    BoundsRow r;
    r.s = s;
    mpz_ui_pow_ui(r.x.get_mpz_t(), 2, std::size_t(3) * s - 2);
    r.x *= mpz_class(s - 1) * (s - 1);
    r.y = 8 * r.x;
    r.log2_x = double(3 * s - 2) + 2.0 * std::log2(double(s - 1));
    double s3 = double(s) * s * s;
    r.log2_h_lower = 2.0 * s3;
    double ln2 = std::log(2.0);
    double lnx = r.log2_x * ln2;
    double lny = (r.log2_x + 3.0) * ln2;
    r.thm1_rhs_log2 = 2.0 / 9.0 * lnx * lnx * lnx;
    r.thm1_rhs_ln = r.thm1_rhs_log2 * ln2;
    r.paper_ybound_ln = 2.0 / 13.0 * lny * lny * lny;
    double y = std::pow(2.0, r.log2_x + 3.0);
    r.catanese_ln = 77.0 * y * y * lny;
    r.manetti_ln = 0.2 * lny * lny;
    r.eta = 3.0 * s / r.log2_x - 1.0;
    return r;
}

ReferenceBounds reference_bounds(double y) {
    if (y < 2) throw std::invalid_argument("reference_bounds requires y >= 2");
    ReferenceBounds r;
    r.y = y;
    double lny = std::log(y);
    r.manetti_exp = 0.2 * lny;
    r.paper_exp = 2.0 / 13.0 * lny * lny;
    r.catanese_exp = 77.0 * y * y;
    r.ordering_ok = r.manetti_exp < r.paper_exp && r.paper_exp < r.catanese_exp;
    return r;
}

int reference_ordering_threshold() {
    // the exponents are monotone in y beyond the crossover, so scan upward
    for (int y = 2; y < 1000; ++y) {
        if (reference_bounds(double(y)).ordering_ok) return y;
    }
    throw std::logic_error("no ordering threshold below 1000");
}

}  // namespace isoprod

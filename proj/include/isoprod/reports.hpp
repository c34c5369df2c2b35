// reports.hpp
// Table and document writers: invariant CSV tables, bound curves as CSV
// and JSON. All exact quantities print as exact decimal integers; floats
// carry 12 significant digits.
#pragma once

#include <string>

namespace isoprod {

/// %.12g rendering used for every non-exact numeric output.
std::string format_g12(double v);

/// Columns: s, q, order, g1, g2, chi, K2, e, irregularity.
/// Rows over s = 2..s_max, q = 0..min(q_max, s-2). Header-only when the
/// grid is empty. s_max (at most 16) keeps the exact arithmetic in range.
std::string invariants_csv(int s_max, int q_max);

/// Columns: s, x, y, log2_h_lower, thm1_rhs_ln, catanese_log, manetti_log.
/// Leading '#' lines carry the two constant checks and the error-term note.
std::string bounds_csv(int s_max);

/// Same data as a JSON document, with the full per-row field set, the
/// constant checks and the reference-bound ordering threshold.
std::string bounds_json(int s_max);

}  // namespace isoprod

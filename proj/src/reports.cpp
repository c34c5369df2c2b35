// reports.cpp

#include "isoprod/reports.hpp"

#include <cstdio>
#include <stdexcept>

#include <json.hpp>

#include "isoprod/bounds.hpp"
#include "isoprod/invariants.hpp"
#include "isoprod/ramification.hpp"

namespace isoprod {

std::string format_g12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string invariants_csv(int s_max, int q_max) {
    if (s_max > 16)
        throw std::invalid_argument("invariant table limited to s <= 16");
    std::string out = "s,q,order,g1,g2,chi,K2,e,irregularity\n";
    for (int s = 2; s <= s_max; ++s) {
        for (int q = 0; q <= std::min(q_max, s - 2); ++q) {
            std::uint64_t order = std::uint64_t(1) << (3 * s);
            auto inv = surface_invariants(order, theorem_type_first(s),
                                          theorem_type_second(s, q));
            if (!inv) continue;  // inadmissible rows are skipped
            if (inv->chi != closed_form_chi(s, q))
                throw std::logic_error("invariant table: closed form mismatch");
            out += std::to_string(s) + "," + std::to_string(q) + "," +
                   std::to_string(order) + "," + int128_to_string(inv->g1) +
                   "," + int128_to_string(inv->g2) + "," +
                   int128_to_string(inv->chi) + "," +
                   int128_to_string(inv->k2) + "," + int128_to_string(inv->e) +
                   "," + std::to_string(inv->irregularity) + "\n";
        }
    }
    return out;
}

std::string bounds_csv(int s_max) {
    auto cc = constant_checks();
    std::string out;
    out += "# constant check: 27*(ln 2)^3 = " + format_g12(cc.value_cubed) +
           " < 9 -> " + (cc.pass_cubed ? "pass" : "FAIL") + "\n";
    out += "# constant check: 27*(ln 2)^2 = " + format_g12(cc.value_squared) +
           " < 13 -> " + (cc.pass_squared ? "pass" : "FAIL") + "\n";
    out += std::string("# bounds are ") + kErrorTermNote + "\n";
    out += "s,x,y,log2_h_lower,thm1_rhs_ln,catanese_log,manetti_log\n";
    for (int s = 2; s <= s_max; ++s) {
        auto r = theorem_bounds(s);
        out += std::to_string(s) + "," + r.x.get_str() + "," + r.y.get_str() +
               "," + format_g12(r.log2_h_lower) + "," +
               format_g12(r.thm1_rhs_ln) + "," + format_g12(r.catanese_ln) +
               "," + format_g12(r.manetti_ln) + "\n";
    }
    return out;
}

std::string bounds_json(int s_max) {
    nlohmann::ordered_json j;
    auto cc = constant_checks();
    j["constant_checks"] = {
        {"c27_ln2_cubed", format_g12(cc.value_cubed)},
        {"c27_ln2_cubed_below_9", cc.pass_cubed},
        {"c27_ln2_squared", format_g12(cc.value_squared)},
        {"c27_ln2_squared_below_13", cc.pass_squared},
    };
    j["error_terms"] = kErrorTermNote;
    j["B_range_leading"] = {{"lower", 2.0}, {"upper", format_g12(18.0 / 5.0)}};
    j["higman_A_leading"] = {{"lower", format_g12(2.0 / 27.0)},
                             {"upper", format_g12(2.0 / 15.0)}};
    j["reference_ordering_threshold_y"] = reference_ordering_threshold();
    auto rows = nlohmann::ordered_json::array();
    for (int s = 2; s <= s_max; ++s) {
        auto r = theorem_bounds(s);
        nlohmann::ordered_json e;
        e["s"] = r.s;
        e["x"] = r.x.get_str();
        e["y"] = r.y.get_str();
        e["log2_x"] = format_g12(r.log2_x);
        e["log2_h_lower"] = format_g12(r.log2_h_lower);
        e["thm1_rhs_log2"] = format_g12(r.thm1_rhs_log2);
        e["thm1_rhs_ln"] = format_g12(r.thm1_rhs_ln);
        e["paper_ybound_ln"] = format_g12(r.paper_ybound_ln);
        e["catanese_ln"] = format_g12(r.catanese_ln);
        e["manetti_ln"] = format_g12(r.manetti_ln);
        e["eta"] = format_g12(r.eta);
        rows.push_back(e);
    }
    j["rows"] = rows;
    return j.dump(2);
}

}  // namespace isoprod

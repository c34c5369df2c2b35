// isoprod.cpp
// Batch front end: enumerate / verify / invariants / bounds subcommands.
// Exit codes: 0 success, 1 internal invariant violation, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "isoprod/census.hpp"
#include "isoprod/constructions.hpp"
#include "isoprod/group.hpp"
#include "isoprod/parallel.hpp"
#include "isoprod/reports.hpp"
#include "isoprod/rng.hpp"

namespace {

int log_level() {
    const char* v = std::getenv("ISOPROD_LOG");
    return v ? std::atoi(v) : 0;
}

void log_note(int level, const std::string& msg) {
    if (log_level() >= level) std::cerr << "isoprod: " << msg << "\n";
}

struct Options {
    int s = 0;
    int q = 0;
    bool exhaustive = false;
    std::uint64_t sample = 0;
    bool sample_given = false;
    std::uint64_t seed = 0;
    int jobs = 1;
    std::string format;
    std::string out;
};

int write_output(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) {
        std::cerr << "isoprod: cannot open output file " << opt.out << "\n";
        return 2;
    }
    f << text;
    return 0;
}

int run_enumerate(const Options& opt) {
    if (!opt.format.empty() && opt.format != "json") {
        std::cerr << "isoprod: enumerate emits JSON only\n";
        return 2;
    }
    isoprod::CensusReport rep;
    if (opt.exhaustive) {
        if (opt.s > 2) {
            std::cerr << "isoprod: --exhaustive requires --s 1 or 2\n";
            return 2;
        }
        log_note(1, "exhaustive census at s=" + std::to_string(opt.s));
        rep = isoprod::census_exhaustive(opt.s, opt.jobs, /*certify=*/true);
    } else {
        if (!opt.sample_given) {
            std::cerr << "isoprod: enumerate needs --exhaustive (s <= 2) or "
                         "--sample N\n";
            return 2;
        }
        log_note(1, "sampling census at s=" + std::to_string(opt.s));
        rep = isoprod::census_sampled(opt.s, opt.sample, opt.seed, opt.jobs);
    }
    return write_output(opt, rep.to_json() + "\n");
}

int run_verify(const Options& opt) {
    if (!opt.format.empty() && opt.format != "json") {
        std::cerr << "isoprod: verify emits JSON only\n";
        return 2;
    }
    std::vector<isoprod::StructureTensor> tensors;
    if (opt.sample_given) {
        // Sample from the order-2 solution space of the constructions in
        // play (T1 alone when the second construction is undefined).
        isoprod::LinearConstraintSystem cs;
        bool second_defined =
            opt.s >= 3 && (opt.q == 0 || opt.q <= opt.s - 2);
        if (second_defined)
            cs = isoprod::combined_order2_constraints(opt.s, opt.q);
        else
            cs = isoprod::order2_constraints(opt.s,
                                             isoprod::ConstructionId::T1);
        isoprod::Rng rng(opt.seed);
        for (std::uint64_t i = 0; i < opt.sample; ++i)
            tensors.push_back(isoprod::sample_independent_solution(cs, rng));
    } else if (opt.s <= 2) {
        // Exhaustive over the independent tensors.
        int pairs = isoprod::pair_count(2 * opt.s);
        std::uint64_t total = std::uint64_t(1)
                              << (std::uint64_t(opt.s) * pairs);
        for (std::uint64_t id = 0; id < total; ++id) {
            isoprod::StructureTensor t(opt.s);
            for (int p = 0; p < pairs; ++p)
                for (int j = 0; j < opt.s; ++j)
                    if ((id >> (std::uint64_t(p) * opt.s + j)) & 1u)
                        t.cvec[p] |= std::uint32_t(1) << j;
            if (isoprod::rank(t.rows()) == std::size_t(opt.s))
                tensors.push_back(std::move(t));
        }
    } else {
        std::cerr << "isoprod: verify needs --sample N at s >= 3\n";
        return 2;
    }

    std::vector<isoprod::ConstructionReport> reports(tensors.size());
    isoprod::parallel_for(tensors.size(), opt.jobs, [&](std::size_t i) {
        reports[i] =
            isoprod::construction_validity(isoprod::Fc2Group(tensors[i]), opt.q);
    });

    std::ostringstream out;
    std::uint64_t all_true = 0, order2 = 0, generation = 0, relation = 0,
                  disjoint = 0, second_defined = 0;
    for (const auto& r : reports) {
        out << r.to_json_line() << "\n";
        if (r.all_true()) ++all_true;
        if (r.second.defined) ++second_defined;
        if (r.first.order2_ok && (!r.second.defined || r.second.order2_ok))
            ++order2;
        if (r.first.generation_ok &&
            (!r.second.defined || r.second.generation_ok))
            ++generation;
        if (r.first.relation_ok && (!r.second.defined || r.second.relation_ok))
            ++relation;
        if (r.second.defined && r.disjointness_ok) ++disjoint;
    }
    nlohmann::ordered_json summary;
    summary["summary"] = true;
    summary["s"] = opt.s;
    summary["q"] = opt.q;
    summary["examined"] = reports.size();
    summary["second_defined"] = second_defined;
    summary["order2_pass"] = order2;
    summary["generation_pass"] = generation;
    summary["relation_pass"] = relation;
    summary["disjoint_pass"] = disjoint;
    summary["all_true"] = all_true;
    out << summary.dump() << "\n";
    return write_output(opt, out.str());
}

int run_invariants(const Options& opt) {
    if (!opt.format.empty() && opt.format != "csv") {
        std::cerr << "isoprod: invariants emits CSV only\n";
        return 2;
    }
    return write_output(opt, isoprod::invariants_csv(opt.s, opt.q));
}

int run_bounds(const Options& opt) {
    std::string text = (opt.format == "json") ? isoprod::bounds_json(opt.s)
                                              : isoprod::bounds_csv(opt.s);
    if (opt.format == "json") text += "\n";
    return write_output(opt, text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for a family of 2-groups, their ramification "
                 "structures and the attached surface invariants"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* cmd, bool with_q) {
        cmd->add_option("--s", opt.s, "family parameter s")->required();
        if (with_q) cmd->add_option("--q", opt.q, "irregularity q");
        cmd->add_option("--sample", opt.sample, "sample count")
            ->check(CLI::PositiveNumber)
            ->trigger_on_parse()
            ->each([&](const std::string&) { opt.sample_given = true; });
        cmd->add_option("--seed", opt.seed, "RNG seed");
        cmd->add_option("--jobs", opt.jobs, "worker count")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--format", opt.format, "json|csv");
        cmd->add_option("--out", opt.out, "output path (default stdout)");
    };

    auto* enumerate = app.add_subcommand("enumerate", "census of the family");
    add_common(enumerate, false);
    enumerate->add_flag("--exhaustive", opt.exhaustive,
                        "full enumeration (s <= 2)");

    auto* verify = app.add_subcommand(
        "verify", "per-tensor construction checks (one JSON line each)");
    add_common(verify, true);

    auto* invariants = app.add_subcommand(
        "invariants", "surface invariant table over the (s,q) grid");
    invariants->add_option("--s", opt.s, "max s (rows start at 2)")->required();
    invariants->add_option("--q", opt.q, "max q")->default_val(2);
    invariants->add_option("--format", opt.format, "csv");
    invariants->add_option("--out", opt.out, "output path");

    auto* bounds = app.add_subcommand("bounds", "bound tables over s = 2..N");
    bounds->add_option("--s", opt.s, "max s")->default_val(40);
    bounds->add_option("--format", opt.format, "json|csv");
    bounds->add_option("--out", opt.out, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(enumerate)) return run_enumerate(opt);
        if (app.got_subcommand(verify)) return run_verify(opt);
        if (app.got_subcommand(invariants)) return run_invariants(opt);
        if (app.got_subcommand(bounds)) return run_bounds(opt);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "isoprod: invalid configuration: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "isoprod: internal invariant violation: " << e.what()
                  << "\n";
        return 1;
    }
}

// census.cpp

#include "isoprod/census.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "isoprod/parallel.hpp"
#include "isoprod/rng.hpp"

namespace isoprod {

TensorCounts count_tensor_space(int s) {
    if (s < 1) throw std::invalid_argument("s must be positive");
    int pairs = pair_count(2 * s);
    TensorCounts c;
    mpz_ui_pow_ui(c.total.get_mpz_t(), 2, std::size_t(s) * pairs);
    c.independent = 1;
    mpz_class space;
    mpz_ui_pow_ui(space.get_mpz_t(), 2, pairs);
    mpz_class p2l = 1;
    for (int l = 0; l < s; ++l) {
        c.independent *= (space - p2l);
        p2l *= 2;
    }
    return c;
}

BitMatrix span_of_tensor(const StructureTensor& t) {
    return subspace_canonical(t.rows());
}

std::string span_key(const BitMatrix& span) {
    std::string key;
    for (const auto& r : span.rows) {
        key += r.to_string();
        key += ';';
    }
    return key;
}

StructureTensor tensor_from_span(const BitMatrix& span, int s) {
    if (span.rows.size() != std::size_t(s))
        throw std::invalid_argument("span rank must equal s");
    StructureTensor t(s);
    for (int j = 0; j < s; ++j)
        for (int p = 0; p < t.num_pairs(); ++p)
            if (span.rows[j].get(p)) t.cvec[p] |= std::uint32_t(1) << j;
    return t;
}

BitVector extend_row(const BitVector& pair_row, int n) {
    BitVector out(pair_row.size() + n);
    for (std::size_t p = 0; p < pair_row.size(); ++p)
        if (pair_row.get(p)) out.set(p, true);
    return out;
}

BitMatrix extended_span_of_tensor(const StructureTensor& t) {
    int n = 2 * t.s;
    std::vector<BitVector> rows;
    for (const auto& r : t.rows()) rows.push_back(extend_row(r, n));
    return subspace_canonical(rows);
}

BitVector transport_row(const BitVector& row,
                        const std::vector<std::uint32_t>& cols, int n) {
    // Substitution action on quadratic-map coefficients. Coordinates
    // 0..C(n,2)-1 hold the pair coefficients c_ik, the following n hold the
    // diagonal values d_i = q(e_i). The image has
    //   c'_ik = polar(q)(A e_i, A e_k)   (only the c part polarises)
    //   d'_i  = q(A e_i)                 (pairs inside A e_i plus old d)
    int pairs = pair_count(n);
    BitVector out(row.size());
    auto polar = [&](std::uint32_t u, std::uint32_t v) {
        bool acc = false;
        for (int i2 = 0; i2 < n; ++i2) {
            if (!((u >> i2) & 1u) && !((v >> i2) & 1u)) continue;
            for (int k2 = i2 + 1; k2 < n; ++k2) {
                if (!row.get(pair_index(i2, k2, n))) continue;
                acc ^= (((u >> i2) & (v >> k2)) ^ ((u >> k2) & (v >> i2))) & 1u;
            }
        }
        return acc;
    };
    auto value = [&](std::uint32_t u) {
        bool acc = false;
        for (int i2 = 0; i2 < n; ++i2) {
            if (!((u >> i2) & 1u)) continue;
            if (row.get(std::size_t(pairs) + i2)) acc = !acc;
            for (int k2 = i2 + 1; k2 < n; ++k2)
                if (((u >> k2) & 1u) && row.get(pair_index(i2, k2, n)))
                    acc = !acc;
        }
        return acc;
    };
    for (int i = 0; i < n; ++i) {
        for (int k = i + 1; k < n; ++k)
            if (polar(cols[i], cols[k])) out.set(pair_index(i, k, n), true);
        if (value(cols[i])) out.set(std::size_t(pairs) + i, true);
    }
    return out;
}

std::vector<int> gl_span_orbits(const std::vector<BitMatrix>& spans, int n) {
    // transvections I + E_uv generate GL(n,2)
    std::vector<std::vector<std::uint32_t>> gens;
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            std::vector<std::uint32_t> cols(n);
            for (int t = 0; t < n; ++t) cols[t] = std::uint32_t(1) << t;
            cols[v] ^= std::uint32_t(1) << u;
            gens.push_back(std::move(cols));
        }
    }

    // The orbit of an embedded span passes through spans with nonzero
    // diagonal block, so label everything reachable.
    std::map<std::string, int> label;
    std::vector<int> orbit(spans.size(), -1);
    int next_orbit = 0;
    for (std::size_t seed = 0; seed < spans.size(); ++seed) {
        auto seed_key = span_key(spans[seed]);
        auto it = label.find(seed_key);
        if (it != label.end()) {
            orbit[seed] = it->second;
            continue;
        }
        int id = next_orbit++;
        orbit[seed] = id;
        label[seed_key] = id;
        std::vector<BitMatrix> frontier{spans[seed]};
        while (!frontier.empty()) {
            std::vector<BitMatrix> next;
            for (const auto& cur : frontier) {
                for (const auto& cols : gens) {
                    std::vector<BitVector> rows;
                    for (const auto& r : cur.rows)
                        rows.push_back(transport_row(r, cols, n));
                    auto img = subspace_canonical(rows);
                    auto key = span_key(img);
                    if (label.emplace(key, id).second) next.push_back(img);
                }
            }
            frontier = std::move(next);
        }
    }
    return orbit;
}

namespace {

// largest q <= 2 with the second construction defined; -1 when none is
int q_limit(int s) { return s >= 3 ? std::min(2, s - 2) : -1; }

// Exact-oracle grouping of the given tensors into isomorphism classes;
// deterministic in input order. Returns the number of classes.
int group_into_classes_exact(const std::vector<StructureTensor>& tensors) {
    std::vector<Fc2Group> reps;
    for (const auto& t : tensors) {
        Fc2Group g(t);
        bool matched = false;
        for (const auto& r : reps) {
            if (is_isomorphic(g, r)) {
                matched = true;
                break;
            }
        }
        if (!matched) reps.push_back(std::move(g));
    }
    return int(reps.size());
}

int group_into_classes_buckets(const std::vector<StructureTensor>& tensors) {
    std::set<std::vector<std::uint64_t>> profiles;
    for (const auto& t : tensors) profiles.insert(Fc2Group(t).square_fiber_profile());
    return int(profiles.size());
}

}  // namespace

CensusReport census_exhaustive(int s, int jobs, bool certify) {
    if (s < 1 || s > 2)
        throw std::invalid_argument("exhaustive census requires s in {1, 2}");
    int pairs = pair_count(2 * s);
    std::uint64_t nbits = std::uint64_t(s) * pairs;
    std::uint64_t total = std::uint64_t(1) << nbits;

    CensusReport rep;
    rep.s = s;
    rep.mode = "exhaustive";
    auto counts = count_tensor_space(s);
    rep.total_tensors = counts.total;
    rep.independent_formula = counts.independent;
    rep.enumerated_total = total;

    auto tensor_from_id = [&](std::uint64_t id) {
        StructureTensor t(s);
        for (int p = 0; p < pairs; ++p)
            for (int j = 0; j < s; ++j)
                if ((id >> (std::uint64_t(p) * s + j)) & 1u)
                    t.cvec[p] |= std::uint32_t(1) << j;
        return t;
    };

    // Pass 1: independence count, span keys, per-span least tensor id.
    struct Shard {
        std::uint64_t independent = 0;
        std::uint64_t t1_sat = 0;
        std::vector<std::uint64_t> pair_sat;
        std::map<std::string, std::uint64_t> span_min_id;
        std::vector<std::map<std::string, std::uint64_t>> span_all_true;
    };
    int ql = q_limit(s);
    LinearConstraintSystem t1_cs = order2_constraints(s, ConstructionId::T1);
    std::vector<LinearConstraintSystem> pair_cs;
    for (int q = 0; q <= ql; ++q)
        pair_cs.push_back(combined_order2_constraints(s, q));

    int workers = std::max(1, jobs);
    std::vector<Shard> shards(workers);
    for (auto& sh : shards) {
        sh.pair_sat.assign(std::size_t(std::max(ql, 0)) + 1, 0);
        sh.span_all_true.resize(3);
    }
    parallel_for(std::size_t(workers), jobs, [&](std::size_t w) {
        Shard& sh = shards[w];
        for (std::uint64_t id = w; id < total; id += std::uint64_t(workers)) {
            StructureTensor t = tensor_from_id(id);
            if (rank(t.rows()) != std::size_t(s)) continue;
            ++sh.independent;
            if (t1_cs.satisfied_by(t)) ++sh.t1_sat;
            for (int q = 0; q <= ql; ++q)
                if (pair_cs[q].satisfied_by(t)) ++sh.pair_sat[q];
            auto key = span_key(span_of_tensor(t));
            auto it = sh.span_min_id.find(key);
            if (it == sh.span_min_id.end() || id < it->second)
                sh.span_min_id[key] = id;
            Fc2Group g(t);
            for (int q = 0; q <= 2; ++q) {
                auto r = construction_validity(g, q);
                if (r.all_true()) {
                    auto& m = sh.span_all_true[q];
                    auto jt = m.find(key);
                    if (jt == m.end() || id < jt->second) m[key] = id;
                }
            }
        }
    });

    std::map<std::string, std::uint64_t> span_min_id;
    std::vector<std::map<std::string, std::uint64_t>> span_all_true(3);
    rep.raw_t1_satisfying = 0;
    rep.raw_pair_satisfying.assign(3, 0);
    for (const auto& sh : shards) {
        rep.enumerated_independent += sh.independent;
        rep.raw_t1_satisfying += sh.t1_sat;
        for (int q = 0; q <= ql; ++q) rep.raw_pair_satisfying[q] += sh.pair_sat[q];
        for (const auto& [key, id] : sh.span_min_id) {
            auto it = span_min_id.find(key);
            if (it == span_min_id.end() || id < it->second) span_min_id[key] = id;
        }
        for (int q = 0; q <= 2; ++q) {
            for (const auto& [key, id] : sh.span_all_true[q]) {
                auto it = span_all_true[q].find(key);
                if (it == span_all_true[q].end() || id < it->second)
                    span_all_true[q][key] = id;
            }
        }
    }
    rep.distinct_spans = span_min_id.size();

    // Orbit classification over the distinct spans (keys are already sorted
    // by std::map, so the ordering is canonical).
    std::vector<BitMatrix> spans;           // pair coordinates, for reps
    std::vector<BitMatrix> extended_spans;  // substitution-action coordinates
    std::vector<std::string> keys;
    for (const auto& [key, id] : span_min_id) {
        keys.push_back(key);
        spans.push_back(span_of_tensor(tensor_from_id(id)));
        extended_spans.push_back(extended_span_of_tensor(tensor_from_id(id)));
    }
    auto orbit = gl_span_orbits(extended_spans, 2 * s);
    int orbits = orbit.empty() ? 0 : *std::max_element(orbit.begin(), orbit.end()) + 1;
    rep.iso_classes = orbits;

    std::vector<int> rep_span(orbits, -1);  // least span index per orbit
    for (std::size_t i = 0; i < spans.size(); ++i)
        if (rep_span[orbit[i]] == -1) rep_span[orbit[i]] = int(i);
    for (int o = 0; o < orbits; ++o)
        rep.class_representatives.push_back(
            tensor_to_hex(tensor_from_span(spans[rep_span[o]], s)));

    if (certify) {
        std::vector<Fc2Group> rep_groups;
        for (int o = 0; o < orbits; ++o)
            rep_groups.emplace_back(tensor_from_span(spans[rep_span[o]], s));
        for (int a = 0; a < orbits; ++a)
            for (int b = a + 1; b < orbits; ++b)
                if (is_isomorphic(rep_groups[a], rep_groups[b]))
                    throw std::logic_error(
                        "orbit classification disagrees with the oracle: "
                        "distinct orbits are isomorphic");
        std::vector<char> member_ok(spans.size(), 0);
        parallel_for(spans.size(), jobs, [&](std::size_t i) {
            Fc2Group g(tensor_from_span(spans[i], s));
            member_ok[i] = is_isomorphic(g, rep_groups[orbit[i]]) ? 1 : 0;
        });
        for (std::size_t i = 0; i < spans.size(); ++i)
            if (!member_ok[i])
                throw std::logic_error(
                    "orbit classification disagrees with the oracle: "
                    "member not isomorphic to its orbit representative");
        rep.oracle_certified = true;
    }

    for (int q = 0; q <= 2; ++q) {
        QCensus qc;
        qc.q = q;
        qc.construction_defined = s >= 3 && (q == 0 || q <= s - 2);
        qc.examined = rep.enumerated_independent;
        if (q <= ql) qc.constraint_free_bits = pair_cs[q].free_bits_per_row();
        std::set<int> hit;
        for (const auto& [key, id] : span_all_true[q]) {
            auto it = std::lower_bound(keys.begin(), keys.end(), key);
            hit.insert(orbit[std::size_t(it - keys.begin())]);
        }
        qc.all_true = span_all_true[q].size();
        qc.class_lower_bound = int(hit.size());
        qc.class_method = "exhaustive";
        rep.q_census.push_back(qc);
    }
    return rep;
}

CensusReport census_sampled(int s, std::uint64_t sample_count,
                            std::uint64_t seed, int jobs) {
    if (s < 1) throw std::invalid_argument("s must be positive");
    CensusReport rep;
    rep.s = s;
    rep.mode = "sampled";
    rep.seed = seed;
    rep.sample_count = sample_count;
    auto counts = count_tensor_space(s);
    rep.total_tensors = counts.total;
    rep.independent_formula = counts.independent;

    int pairs = pair_count(2 * s);
    int ql = q_limit(s);
    LinearConstraintSystem t1_cs = order2_constraints(s, ConstructionId::T1);
    std::vector<LinearConstraintSystem> pair_cs;
    for (int q = 0; q <= ql; ++q)
        pair_cs.push_back(combined_order2_constraints(s, q));

    Rng root(seed);

    // Raw-space samples: independence and constraint-satisfaction rates.
    Rng raw_rng = root.fork(1);
    std::vector<StructureTensor> raw;
    raw.reserve(sample_count);
    for (std::uint64_t i = 0; i < sample_count; ++i) {
        StructureTensor t(s);
        for (int p = 0; p < pairs; ++p)
            t.cvec[p] = std::uint32_t(raw_rng.bits(s));
        raw.push_back(std::move(t));
    }
    struct RawStat {
        char independent = 0, t1 = 0;
        char pq[3] = {0, 0, 0};
    };
    std::vector<RawStat> stats(raw.size());
    parallel_for(raw.size(), jobs, [&](std::size_t i) {
        stats[i].independent = rank(raw[i].rows()) == std::size_t(s) ? 1 : 0;
        stats[i].t1 = t1_cs.satisfied_by(raw[i]) ? 1 : 0;
        for (int q = 0; q <= ql; ++q)
            stats[i].pq[q] = pair_cs[q].satisfied_by(raw[i]) ? 1 : 0;
    });
    rep.raw_examined = raw.size();
    rep.raw_pair_satisfying.assign(3, 0);
    for (const auto& st : stats) {
        rep.raw_independent += st.independent;
        rep.raw_t1_satisfying += st.t1;
        for (int q = 0; q <= ql; ++q) rep.raw_pair_satisfying[q] += st.pq[q];
    }

    // Per-q samples from the order-2 solution space.
    for (int q = 0; q <= 2; ++q) {
        QCensus qc;
        qc.q = q;
        qc.construction_defined = s >= 3 && (q == 0 || q <= s - 2);
        if (!qc.construction_defined) {
            rep.q_census.push_back(qc);
            continue;
        }
        const auto& cs = pair_cs[q];
        qc.constraint_free_bits = cs.free_bits_per_row();
        Rng qrng = root.fork(std::uint64_t(100 + q));
        std::vector<StructureTensor> tensors;
        tensors.reserve(sample_count);
        for (std::uint64_t i = 0; i < sample_count; ++i)
            tensors.push_back(sample_independent_solution(cs, qrng));
        std::vector<ConstructionReport> reports(tensors.size());
        parallel_for(tensors.size(), jobs, [&](std::size_t i) {
            reports[i] = construction_validity(Fc2Group(tensors[i]), q);
        });
        std::vector<StructureTensor> winners;
        for (std::size_t i = 0; i < reports.size(); ++i) {
            const auto& r = reports[i];
            ++qc.examined;
            if (r.first.order2_ok && r.second.order2_ok) ++qc.order2_pass;
            if (r.first.generation_ok && r.second.generation_ok)
                ++qc.generation_pass;
            if (r.first.relation_ok && r.second.relation_ok) ++qc.relation_pass;
            if (r.disjointness_ok) ++qc.disjoint_pass;
            if (r.all_true()) {
                ++qc.all_true;
                winners.push_back(tensors[i]);
            }
        }
        if (s <= 4) {
            qc.class_lower_bound = group_into_classes_exact(winners);
            qc.class_method = "exact-isomorphism";
        } else {
            qc.class_lower_bound = group_into_classes_buckets(winners);
            qc.class_method = "invariant-buckets (lower bound)";
        }
        rep.q_census.push_back(qc);
    }
    return rep;
}

std::string CensusReport::to_json() const {
    nlohmann::ordered_json j;
    j["s"] = s;
    j["mode"] = mode;
    if (mode == "sampled") {
        j["seed"] = seed;
        j["sample_count"] = sample_count;
    }
    j["total_tensors"] = total_tensors.get_str();
    j["independent_formula"] = independent_formula.get_str();
    if (mode == "exhaustive") {
        j["enumerated_total"] = enumerated_total;
        j["independent_tensors"] = enumerated_independent;
        j["distinct_c_spans"] = distinct_spans;
        j["iso_classes"] = iso_classes;
        j["iso_class_representatives"] = class_representatives;
        j["oracle_certified"] = oracle_certified;
        nlohmann::ordered_json sat;
        sat["T1"] = raw_t1_satisfying;
        for (int q = 0; q <= q_limit(s); ++q)
            sat["pair_q" + std::to_string(q)] = raw_pair_satisfying[q];
        j["constraint_satisfying_independent"] = sat;
    } else {
        nlohmann::ordered_json raw;
        raw["examined"] = raw_examined;
        raw["independent"] = raw_independent;
        nlohmann::ordered_json sat;
        sat["T1"] = raw_t1_satisfying;
        for (int q = 0; q <= q_limit(s); ++q)
            sat["pair_q" + std::to_string(q)] = raw_pair_satisfying[q];
        raw["constraint_satisfying"] = sat;
        j["raw_sample"] = raw;
    }
    nlohmann::ordered_json qs = nlohmann::ordered_json::array();
    for (const auto& qc : q_census) {
        nlohmann::ordered_json e;
        e["q"] = qc.q;
        e["construction_defined"] = qc.construction_defined;
        if (qc.construction_defined || mode == "exhaustive") {
            e["examined"] = qc.examined;
            e["constraint_free_bits_per_row"] = qc.constraint_free_bits;
            e["all_true"] = qc.all_true;
            if (mode == "sampled" && qc.construction_defined) {
                e["order2_pass"] = qc.order2_pass;
                e["generation_pass"] = qc.generation_pass;
                e["relation_pass"] = qc.relation_pass;
                e["disjoint_pass"] = qc.disjoint_pass;
            }
            e["component_lower_bound"] = qc.class_lower_bound;
            e["class_method"] = qc.class_method;
        }
        qs.push_back(e);
    }
    j["per_q"] = qs;
    return j.dump(2);
}

}  // namespace isoprod

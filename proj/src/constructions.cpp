// constructions.cpp

#include "isoprod/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace isoprod {

namespace {

GroupElement word_product(const Fc2Group& g, const std::vector<int>& word) {
    GroupElement p = g.identity();
    for (int i : word) p = g.multiply(p, g.generator(i));
    return p;
}

// 0-based index words of the T2 spherical entries; the two closing entries
// are inverses of the listed words.
struct T2Words {
    std::vector<std::vector<int>> plain;    // entries taken as written
    std::vector<int> inv_first;             // (g_1 g_2 g_3)^-1
    std::vector<std::vector<int>> mirror;   // second half, as written
    std::vector<int> inv_second;            // (g_{s+1} g_{s+2} g_{s+3})^-1
};

T2Words t2_words(int s) {
    T2Words w;
    for (int i = 0; i + 1 < s; ++i) w.plain.push_back({i, i + 1});
    w.plain.push_back({s - 1, 1, 2});
    w.inv_first = {0, 1, 2};
    for (int i = s; i + 1 < 2 * s; ++i) w.mirror.push_back({i, i + 1});
    w.mirror.push_back({2 * s - 1, s + 1, s + 2});
    w.inv_second = {s, s + 1, s + 2};
    return w;
}

// V2 spherical words: two cycles; the h factor on the final entry does not
// show up here (it only shifts the b-part).
std::vector<std::vector<int>> v2_words(int s, int q) {
    std::vector<std::vector<int>> words;
    for (int i = 0; i + 1 <= s - q; ++i) words.push_back({i, i + 1});
    words.push_back({s - q, 0});
    for (int i = s; i + 1 <= 2 * s - q; ++i) words.push_back({i, i + 1});
    words.push_back({2 * s - q, s});
    return words;
}

std::uint32_t word_support(const std::vector<int>& word) {
    std::uint32_t m = 0;
    for (int i : word) m ^= std::uint32_t(1) << i;
    return m;
}

}  // namespace

GeneratorSystem build_T1(const Fc2Group& g) {
    int s = g.s();
    GeneratorSystem sys;
    sys.genus_prime = 0;
    GroupElement first_block = g.identity(), second_block = g.identity();
    for (int i = 0; i < s; ++i) {
        sys.spherical.push_back(g.generator(i));
        first_block = g.multiply(first_block, g.generator(i));
    }
    sys.spherical.push_back(g.inverse(first_block));
    for (int i = s; i < 2 * s; ++i) {
        sys.spherical.push_back(g.generator(i));
        second_block = g.multiply(second_block, g.generator(i));
    }
    sys.spherical.push_back(g.inverse(second_block));
    return sys;
}

std::optional<GeneratorSystem> build_T2_regular(const Fc2Group& g) {
    int s = g.s();
    if (s < 3) return std::nullopt;
    auto w = t2_words(s);
    GeneratorSystem sys;
    sys.genus_prime = 0;
    for (const auto& word : w.plain)
        sys.spherical.push_back(word_product(g, word));
    sys.spherical.push_back(g.inverse(word_product(g, w.inv_first)));
    for (const auto& word : w.mirror)
        sys.spherical.push_back(word_product(g, word));
    sys.spherical.push_back(g.inverse(word_product(g, w.inv_second)));
    return sys;
}

std::optional<GeneratorSystem> build_V2_irregular(const Fc2Group& g, int q) {
    int s = g.s();
    if (s < 3 || q < 1 || q > s - 2) return std::nullopt;

    // h = [g_s, g_2s][g_{s-1}, g_{2s-1}] ... [g_{s-q+1}, g_{2s-q+1}]
    GroupElement h = g.identity();
    for (int i = 1; i <= q; ++i)
        h = g.multiply(h, g.commutator(g.generator(s - i), g.generator(2 * s - i)));

    GeneratorSystem sys;
    sys.genus_prime = q;
    for (int i = 1; i <= q; ++i) {
        sys.handles.push_back(g.generator(s - i));
        sys.handles.push_back(g.generator(2 * s - i));
    }
    auto words = v2_words(s, q);
    for (const auto& word : words)
        sys.spherical.push_back(word_product(g, word));
    sys.spherical.back() = g.multiply(sys.spherical.back(), h);
    return sys;
}

std::vector<std::uint32_t> spherical_supports(int s, ConstructionId which,
                                              int q) {
    std::vector<std::uint32_t> supports;
    switch (which) {
        case ConstructionId::T1: {
            for (int i = 0; i < 2 * s; ++i)
                supports.push_back(std::uint32_t(1) << i);
            std::uint32_t lo = (std::uint32_t(1) << s) - 1;
            supports.insert(supports.begin() + s, lo);
            supports.push_back((lo << s));
            break;
        }
        case ConstructionId::T2Regular: {
            if (s < 3) throw std::invalid_argument("T2 requires s >= 3");
            auto w = t2_words(s);
            for (const auto& word : w.plain)
                supports.push_back(word_support(word));
            supports.push_back(word_support(w.inv_first));
            for (const auto& word : w.mirror)
                supports.push_back(word_support(word));
            supports.push_back(word_support(w.inv_second));
            break;
        }
        case ConstructionId::V2Irregular: {
            if (s < 3 || q < 1 || q > s - 2)
                throw std::invalid_argument("V2 requires s >= 3, 1 <= q <= s-2");
            for (const auto& word : v2_words(s, q))
                supports.push_back(word_support(word));
            break;
        }
    }
    return supports;
}

bool LinearConstraintSystem::satisfied_by(const StructureTensor& t) const {
    if (t.s != s) throw std::invalid_argument("tensor / constraint s mismatch");
    for (const auto& eq : equations) {
        std::uint32_t acc = 0;
        for (int p = 0; p < pair_dim; ++p)
            if (eq.get(p)) acc ^= t.cvec[p];
        if (acc) return false;
    }
    return true;
}

namespace {

LinearConstraintSystem constraints_from_supports(
    int s, const std::vector<std::uint32_t>& supports,
    const std::vector<std::string>& labels_in) {
    LinearConstraintSystem cs;
    cs.s = s;
    cs.pair_dim = pair_count(2 * s);
    for (std::size_t e = 0; e < supports.size(); ++e) {
        std::uint32_t sup = supports[e];
        BitVector eq(cs.pair_dim);
        for (int i = 0; i < 2 * s; ++i) {
            if (!((sup >> i) & 1u)) continue;
            for (int k = i + 1; k < 2 * s; ++k)
                if ((sup >> k) & 1u) eq.set(pair_index(i, k, 2 * s), true);
        }
        if (eq.is_zero()) continue;  // one-letter entries impose nothing
        bool dup = false;
        for (const auto& prev : cs.equations)
            if (prev == eq) { dup = true; break; }
        if (!dup) {
            cs.equations.push_back(eq);
            cs.labels.push_back(labels_in[e]);
        }
    }
    BitMatrix m(cs.pair_dim);
    for (const auto& eq : cs.equations) m.append_row(eq);
    cs.eq_rank = rank(m);
    cs.null_basis = nullspace(m);
    return cs;
}

std::string support_label(std::uint32_t sup) {
    std::string out = "square of entry with support {";
    bool first = true;
    for (int i = 0; i < 32; ++i)
        if ((sup >> i) & 1u) {
            if (!first) out += ",";
            out += "g" + std::to_string(i + 1);
            first = false;
        }
    return out + "}";
}

}  // namespace

LinearConstraintSystem order2_constraints(int s, ConstructionId which, int q) {
    auto sups = spherical_supports(s, which, q);
    std::vector<std::string> labels;
    for (auto sup : sups) labels.push_back(support_label(sup));
    return constraints_from_supports(s, sups, labels);
}

LinearConstraintSystem combined_order2_constraints(int s, int q) {
    auto sups = spherical_supports(s, ConstructionId::T1);
    auto second = q == 0 ? spherical_supports(s, ConstructionId::T2Regular)
                         : spherical_supports(s, ConstructionId::V2Irregular, q);
    sups.insert(sups.end(), second.begin(), second.end());
    std::vector<std::string> labels;
    for (auto sup : sups) labels.push_back(support_label(sup));
    return constraints_from_supports(s, sups, labels);
}

StructureTensor sample_solution(const LinearConstraintSystem& cs, Rng& rng) {
    StructureTensor t(cs.s);
    for (int j = 0; j < cs.s; ++j) {
        BitVector row(cs.pair_dim);
        for (const auto& base : cs.null_basis)
            if (rng.bits(1)) row.xor_with(base);
        for (int p = 0; p < cs.pair_dim; ++p)
            if (row.get(p)) t.cvec[p] |= std::uint32_t(1) << j;
    }
    return t;
}

StructureTensor sample_independent_solution(const LinearConstraintSystem& cs,
                                            Rng& rng, int max_tries) {
    if (int(cs.null_basis.size()) < cs.s)
        throw std::runtime_error(
            "constraint solution space too small for independent rows");
    for (int t = 0; t < max_tries; ++t) {
        StructureTensor cand = sample_solution(cs, rng);
        if (rank(cand.rows()) == std::size_t(cs.s)) return cand;
    }
    throw std::runtime_error("no independent solution found in budget");
}

namespace {

SystemCheck check_system(const Fc2Group& g, const GeneratorSystem& sys) {
    SystemCheck chk;
    chk.defined = true;
    std::vector<GroupElement> all = sys.handles;
    all.insert(all.end(), sys.spherical.begin(), sys.spherical.end());
    chk.generation_ok = g.generates_fast(all);
    chk.relation_ok = long_relation_product(g, sys).is_identity();
    chk.order2_ok = true;
    for (const auto& c : sys.spherical) {
        int ord = g.element_order(c);
        chk.spherical_orders.push_back(ord);
        chk.order2_per_entry.push_back(ord == 2);
        if (ord != 2) chk.order2_ok = false;
    }
    chk.actual_type.genus_prime = sys.genus_prime;
    chk.actual_type.branch_orders = chk.spherical_orders;
    std::sort(chk.actual_type.branch_orders.begin(),
              chk.actual_type.branch_orders.end());
    return chk;
}

}  // namespace

ConstructionReport construction_validity(const Fc2Group& g, int q) {
    ConstructionReport rep;
    rep.s = g.s();
    rep.q = q;
    rep.tensor_hex = tensor_to_hex(g.tensor());
    rep.independent = g.independent();
    rep.criterion = "inapplicable";

    GeneratorSystem t1 = build_T1(g);
    rep.first = check_system(g, t1);

    std::optional<GeneratorSystem> second =
        q == 0 ? build_T2_regular(g) : build_V2_irregular(g, q);
    if (!second) {
        rep.second.defined = false;
        rep.second.undefined_reason =
            q == 0 ? "T2 requires s >= 3" : "V2 requires s >= 3 and 1 <= q <= s-2";
        return rep;
    }
    rep.second = check_system(g, *second);

    auto fast = lemma_criterion(g, t1, *second);
    if (fast.has_value()) rep.criterion = *fast ? "true" : "false";
    rep.disjointness_ok =
        (fast.has_value() && *fast) ? true : are_disjoint(g, t1, *second);
    return rep;
}

std::string ConstructionReport::to_json_line() const {
    nlohmann::ordered_json j;
    j["tensor"] = tensor_hex;
    j["s"] = s;
    j["q"] = q;
    j["independent"] = independent;
    auto sys_json = [](const SystemCheck& chk) {
        nlohmann::ordered_json out;
        out["defined"] = chk.defined;
        if (!chk.defined) {
            out["reason"] = chk.undefined_reason;
            return out;
        }
        out["order2_ok"] = chk.order2_ok;
        out["order2_per_entry"] = chk.order2_per_entry;
        out["generation_ok"] = chk.generation_ok;
        out["relation_ok"] = chk.relation_ok;
        out["type"] = chk.actual_type.to_string();
        return out;
    };
    j["T1"] = sys_json(first);
    j["second"] = sys_json(second);
    if (second.defined) {
        j["criterion"] = criterion;
        j["disjoint_ok"] = disjointness_ok;
    }
    j["all_true"] = all_true();
    return j.dump();
}

}  // namespace isoprod

// ramification.cpp

#include "isoprod/ramification.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

#include "isoprod/invariants.hpp"

namespace isoprod {

std::string TypeSignature::to_string() const {
    std::string out = "(" + std::to_string(genus_prime) + "|";
    for (std::size_t i = 0; i < branch_orders.size();) {
        std::size_t j = i;
        while (j < branch_orders.size() && branch_orders[j] == branch_orders[i])
            ++j;
        if (i) out += ",";
        out += std::to_string(branch_orders[i]);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    out += ")";
    return out;
}

TypeSignature theorem_type_first(int s) {
    return {0, std::vector<int>(2 * s + 2, 2)};
}

TypeSignature theorem_type_second(int s, int q) {
    return {q, std::vector<int>(2 * s - 2 * q + 2, 2)};
}

const char* to_string(SystemError e) {
    switch (e) {
        case SystemError::None: return "ok";
        case SystemError::GenerationFailure: return "GenerationFailure";
        case SystemError::RelationFailure: return "RelationFailure";
        case SystemError::IdentityEntry: return "IdentityEntry";
    }
    return "?";
}

const char* to_string(StructureError e) {
    switch (e) {
        case StructureError::None: return "ok";
        case StructureError::GenerationFailure: return "GenerationFailure";
        case StructureError::RelationFailure: return "RelationFailure";
        case StructureError::IdentityEntry: return "IdentityEntry";
        case StructureError::NotAdmissible: return "NotAdmissible";
        case StructureError::NotDisjoint: return "NotDisjoint";
    }
    return "?";
}

GroupElement long_relation_product(const Fc2Group& g,
                                   const GeneratorSystem& sys) {
    GroupElement p = g.identity();
    for (const auto& c : sys.spherical) p = g.multiply(p, c);
    for (std::size_t i = 0; i + 1 < sys.handles.size(); i += 2)
        p = g.multiply(p, g.commutator(sys.handles[i], sys.handles[i + 1]));
    return p;
}

ValidationResult validate_system(const Fc2Group& g, const GeneratorSystem& sys) {
    if (sys.handles.size() != std::size_t(2 * sys.genus_prime))
        throw std::invalid_argument("handle count must be 2*genus_prime");
    for (const auto& x : sys.handles) g.check_element(x);
    for (const auto& x : sys.spherical) g.check_element(x);

    ValidationResult res;
    std::vector<GroupElement> all = sys.handles;
    all.insert(all.end(), sys.spherical.begin(), sys.spherical.end());
    if (!g.generates_fast(all)) {
        res.error = SystemError::GenerationFailure;
        res.detail = "entries generate a proper subgroup";
        return res;
    }
    for (std::size_t i = 0; i < sys.spherical.size(); ++i) {
        if (sys.spherical[i].is_identity()) {
            res.error = SystemError::IdentityEntry;
            res.detail = "spherical entry " + std::to_string(i) + " is trivial";
            return res;
        }
    }
    GroupElement p = long_relation_product(g, sys);
    if (!p.is_identity()) {
        res.error = SystemError::RelationFailure;
        res.detail = "long relation product = " + element_to_hex(p);
        return res;
    }
    res.type.genus_prime = sys.genus_prime;
    for (const auto& c : sys.spherical)
        res.type.branch_orders.push_back(g.element_order(c));
    std::sort(res.type.branch_orders.begin(), res.type.branch_orders.end());
    return res;
}

std::vector<GroupElement> sigma_set(const Fc2Group& g,
                                    const GeneratorSystem& sys) {
    std::vector<GroupElement> out{g.identity()};
    for (const auto& c : sys.spherical) {
        GroupElement p = c;
        int ord = g.element_order(c);
        for (int j = 1; j < ord; ++j) {
            auto cls = g.conjugacy_class(p);
            out.insert(out.end(), cls.begin(), cls.end());
            p = g.multiply(p, c);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool are_disjoint(const Fc2Group& g, const GeneratorSystem& s1,
                  const GeneratorSystem& s2) {
    auto a = sigma_set(g, s1);
    auto b = sigma_set(g, s2);
    std::unordered_set<std::uint64_t> keys;
    for (const auto& x : a) keys.insert(x.key());
    for (const auto& x : b)
        if (!x.is_identity() && keys.count(x.key())) return false;
    return true;
}

std::optional<bool> lemma_criterion(const Fc2Group& g,
                                    const GeneratorSystem& s1,
                                    const GeneratorSystem& s2) {
    for (const auto* sys : {&s1, &s2})
        for (const auto& c : sys->spherical)
            if (g.element_order(c) != 2) return std::nullopt;

    std::unordered_set<std::uint32_t> phi1;   // B_1: a-parts outside h-span
    std::unordered_set<std::uint64_t> cent1;  // B'_1: elements inside h-span
    for (const auto& c : s1.spherical) {
        if (c.a) phi1.insert(c.a);
        else cent1.insert(c.key());
    }
    for (const auto& c : s2.spherical) {
        if (c.a) {
            if (phi1.count(c.a)) return false;
        } else {
            if (cent1.count(c.key())) return false;
        }
    }
    return true;
}

bool disjoint_with_fallback(const Fc2Group& g, const GeneratorSystem& s1,
                            const GeneratorSystem& s2) {
    auto fast = lemma_criterion(g, s1, s2);
    if (fast.has_value() && *fast) return true;
    return are_disjoint(g, s1, s2);
}

bool is_admissible(std::uint64_t order, const TypeSignature& t) {
    auto rh = rh_genus(order, t);
    return rh.realizable && rh.genus_int >= 2;
}

StructureResult make_structure(const Fc2Group& g, const GeneratorSystem& s1,
                               const GeneratorSystem& s2) {
    StructureResult res;
    auto map_err = [](SystemError e) {
        switch (e) {
            case SystemError::GenerationFailure:
                return StructureError::GenerationFailure;
            case SystemError::RelationFailure:
                return StructureError::RelationFailure;
            case SystemError::IdentityEntry:
                return StructureError::IdentityEntry;
            default: return StructureError::None;
        }
    };
    auto v1 = validate_system(g, s1);
    if (!v1.ok()) {
        res.error = map_err(v1.error);
        res.detail = "first system: " + v1.detail;
        return res;
    }
    auto v2 = validate_system(g, s2);
    if (!v2.ok()) {
        res.error = map_err(v2.error);
        res.detail = "second system: " + v2.detail;
        return res;
    }
    for (const auto* t : {&v1.type, &v2.type}) {
        if (!is_admissible(g.order(), *t)) {
            res.error = StructureError::NotAdmissible;
            res.detail = "type " + t->to_string() + " at order " +
                         std::to_string(g.order());
            return res;
        }
    }
    if (!disjoint_with_fallback(g, s1, s2)) {
        res.error = StructureError::NotDisjoint;
        res.detail = "sigma sets share a non-trivial element";
        return res;
    }
    res.structure = RamificationStructure{s1, s2, v1.type, v2.type};
    return res;
}

std::string system_to_json(const GeneratorSystem& sys) {
    nlohmann::ordered_json j;
    j["genus_prime"] = sys.genus_prime;
    auto hexes = [](const std::vector<GroupElement>& xs) {
        std::vector<std::string> out;
        for (const auto& x : xs) out.push_back(element_to_hex(x));
        return out;
    };
    j["handles"] = hexes(sys.handles);
    j["spherical"] = hexes(sys.spherical);
    return j.dump();
}

GeneratorSystem system_from_json(const std::string& text, int s) {
    auto j = nlohmann::json::parse(text);
    GeneratorSystem sys;
    sys.genus_prime = j.at("genus_prime").get<int>();
    for (const auto& h : j.at("handles"))
        sys.handles.push_back(element_from_hex(h.get<std::string>(), s));
    for (const auto& c : j.at("spherical"))
        sys.spherical.push_back(element_from_hex(c.get<std::string>(), s));
    if (sys.handles.size() != std::size_t(2 * sys.genus_prime))
        throw std::invalid_argument("handle count must be 2*genus_prime");
    return sys;
}

}  // namespace isoprod

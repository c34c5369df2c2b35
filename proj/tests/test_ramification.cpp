// test_ramification.cpp

#include <doctest.h>

#include <algorithm>

#include "isoprod/constructions.hpp"
#include "isoprod/invariants.hpp"
#include "isoprod/ramification.hpp"
#include "support.hpp"

using namespace isoprod;

namespace {

StructureTensor d8_tensor() {
    StructureTensor t(1);
    t.set_c(0, 1, 0, true);
    return t;
}

// spherical tuple of order-2 elements whose product closes to the identity;
// retries until generation holds as well
GeneratorSystem random_valid_spherical(const Fc2Group& g, int entries, Rng& rng,
                                       int max_tries = 2000) {
    for (int t = 0; t < max_tries; ++t) {
        GeneratorSystem sys;
        GroupElement prod = g.identity();
        bool ok = true;
        for (int i = 0; i + 1 < entries; ++i) {
            GroupElement x = testsupport::random_element(g, rng);
            if (g.element_order(x) != 2) {
                ok = false;
                break;
            }
            sys.spherical.push_back(x);
            prod = g.multiply(prod, x);
        }
        if (!ok) continue;
        GroupElement last = g.inverse(prod);
        if (g.element_order(last) != 2) continue;
        sys.spherical.push_back(last);
        if (!g.generates_fast(sys.spherical)) continue;
        return sys;
    }
    throw std::runtime_error("no valid spherical system found");
}

}  // namespace

TEST_CASE("TypeSignature rendering collapses repeats") {
    CHECK(TypeSignature{0, {2, 2, 2, 2}}.to_string() == "(0|2^4)");
    CHECK(TypeSignature{1, {2, 2, 4}}.to_string() == "(1|2^2,4)");
    CHECK(TypeSignature{2, {}}.to_string() == "(2|)");
    CHECK(theorem_type_first(4).to_string() == "(0|2^10)");
    CHECK(theorem_type_second(4, 1).to_string() == "(1|2^8)");
}

TEST_CASE("validate_system: T1 validates, non-generating tuples fail") {
    Rng rng(101);
    for (int s : {1, 2, 3}) {
        auto t = testsupport::random_independent_tensor(s, rng);
        Fc2Group g(t);
        auto res = validate_system(g, build_T1(g));
        CHECK(res.ok());
        CHECK(res.type.genus_prime == 0);
        CHECK(res.type.branch_orders.size() == std::size_t(2 * s + 2));
    }

    Fc2Group d8(d8_tensor());
    GeneratorSystem two_g1;
    two_g1.spherical = {d8.generator(0), d8.generator(0)};
    auto res = validate_system(d8, two_g1);
    CHECK(res.error == SystemError::GenerationFailure);

    // broken long relation
    GeneratorSystem bad;
    bad.spherical = {d8.generator(0), d8.generator(1)};
    auto res2 = validate_system(d8, bad);
    CHECK(res2.error == SystemError::RelationFailure);

    // identity spherical entry
    GeneratorSystem ident;
    ident.spherical = {d8.generator(0), d8.generator(0), d8.identity(),
                       d8.generator(1), d8.generator(1)};
    auto res3 = validate_system(d8, ident);
    CHECK(res3.error == SystemError::IdentityEntry);
}

TEST_CASE("validate_system: branch orders are computed, sorted") {
    Fc2Group d8(d8_tensor());
    GroupElement rot = d8.multiply(d8.generator(0), d8.generator(1));
    GeneratorSystem sys;
    // g1 g2 (g1g2)^-1 = 1; entries of orders 2, 2, 4
    sys.spherical = {d8.generator(0), d8.generator(1), d8.inverse(rot)};
    auto res = validate_system(d8, sys);
    REQUIRE(res.ok());
    CHECK(res.type.branch_orders == std::vector<int>{2, 2, 4});
    CHECK(res.type.to_string() == "(0|2^2,4)");
}

TEST_CASE("sigma_set: examples") {
    Fc2Group d8(d8_tensor());
    GeneratorSystem empty;
    auto sigma = sigma_set(d8, empty);
    CHECK(sigma == std::vector<GroupElement>{d8.identity()});

    GeneratorSystem sys;
    sys.spherical = {d8.generator(0), d8.generator(0)};
    auto sg = sigma_set(d8, sys);
    CHECK(sg.size() == 3);
    CHECK(std::count(sg.begin(), sg.end(), d8.identity()) == 1);
    CHECK(std::count(sg.begin(), sg.end(), d8.generator(0)) == 1);
    CHECK(std::count(sg.begin(), sg.end(),
                     d8.multiply(d8.generator(0), d8.central_generator(0))) == 1);
}

TEST_CASE("sigma_set: invariant under conjugating entries, closed under powers") {
    Rng rng(103);
    for (int s : {2, 3}) {
        auto t = testsupport::random_independent_tensor(s, rng);
        Fc2Group g(t);
        GeneratorSystem sys = build_T1(g);
        auto sigma = sigma_set(g, sys);

        GeneratorSystem conj = sys;
        for (auto& c : conj.spherical)
            c = g.conjugate(c, testsupport::random_element(g, rng));
        CHECK(sigma_set(g, conj) == sigma);

        for (const auto& x : sigma) {
            auto sq = g.multiply(x, x);
            CHECK(std::binary_search(sigma.begin(), sigma.end(), sq));
            for (const auto& cl : g.conjugacy_class(x))
                CHECK(std::binary_search(sigma.begin(), sigma.end(), cl));
        }
    }
}

TEST_CASE("are_disjoint: shared entries collide") {
    Rng rng(107);
    auto t = testsupport::random_independent_tensor(2, rng);
    Fc2Group g(t);
    auto sys = build_T1(g);
    CHECK_FALSE(are_disjoint(g, sys, sys));
}

TEST_CASE("lemma_criterion: classification and fallbacks") {
    Rng rng(109);
    StructureTensor t(2);
    // [g1,g2]=h1, [g3,g4]=h2 makes every T1 entry an involution
    t.set_c(0, 2, 0, true);
    t.set_c(1, 3, 1, true);
    Fc2Group g(t);
    REQUIRE(g.independent());

    GeneratorSystem a, b;
    a.spherical = {g.generator(0), g.generator(0)};
    b.spherical = {g.generator(1), g.generator(1)};
    auto r = lemma_criterion(g, a, b);
    REQUIRE(r.has_value());
    CHECK(*r);

    // shared central entry lands in both B' sets
    GeneratorSystem ca = a, cb = b;
    ca.spherical.push_back(g.central_generator(0));
    ca.spherical.push_back(g.central_generator(0));
    cb.spherical.push_back(g.central_generator(0));
    cb.spherical.push_back(g.central_generator(0));
    auto r2 = lemma_criterion(g, ca, cb);
    REQUIRE(r2.has_value());
    CHECK_FALSE(*r2);

    // an order-4 entry makes the criterion inapplicable
    GeneratorSystem quad;
    GroupElement x = g.multiply(g.generator(0), g.generator(2));
    REQUIRE(g.element_order(x) == 4);
    quad.spherical = {x, g.inverse(x)};
    CHECK_FALSE(lemma_criterion(g, quad, b).has_value());
}

TEST_CASE("lemma_criterion true implies are_disjoint, never the converse") {
    // sampled pairs of valid systems across the exhaustive s=2 family
    Rng rng(113);
    int pairs_tested = 0, criterion_true = 0, disjoint_but_criterion_false = 0;
    for (std::uint64_t id = 0; id < 4096 && pairs_tested < 400; id += 7) {
        StructureTensor t(2);
        for (int p = 0; p < 6; ++p)
            for (int j = 0; j < 2; ++j)
                if ((id >> (p * 2 + j)) & 1u) t.cvec[p] |= 1u << j;
        if (rank(t.rows()) != 2) continue;
        Fc2Group g(t);
        // generation forces at least 2s+2 = 6 spherical entries: the long
        // relation makes the Phi-images sum to zero
        GeneratorSystem s1, s2;
        try {
            s1 = random_valid_spherical(g, 6, rng, 4000);
            s2 = random_valid_spherical(g, 6, rng, 4000);
        } catch (const std::runtime_error&) {
            continue;
        }
        ++pairs_tested;
        auto crit = lemma_criterion(g, s1, s2);
        bool direct = are_disjoint(g, s1, s2);
        if (crit.has_value() && *crit) {
            ++criterion_true;
            CHECK(direct);
        }
        if (crit.has_value() && !*crit && direct) ++disjoint_but_criterion_false;
    }
    CHECK(pairs_tested >= 100);
    // the criterion is sufficient only; both outcomes must actually occur
    CHECK(criterion_true > 0);
    CHECK(disjoint_but_criterion_false > 0);
}

TEST_CASE("is_admissible: boundary examples") {
    CHECK_FALSE(is_admissible(8, TypeSignature{0, {2, 2, 2, 2}}));  // genus 1
    CHECK(is_admissible(64, TypeSignature{0, {2, 2, 2, 2, 2, 2}}));  // genus 33
    CHECK(is_admissible(std::uint64_t(1) << 12, theorem_type_second(4, 1)));
}

TEST_CASE("make_structure: success and every failure path") {
    Rng rng(127);
    // s=4 with a constraint-satisfying independent tensor
    auto cs = combined_order2_constraints(4, 0);
    auto t = sample_independent_solution(cs, rng);
    Fc2Group g(t);
    auto t1 = build_T1(g);
    auto t2 = build_T2_regular(g);
    REQUIRE(t2.has_value());
    auto res = make_structure(g, t1, *t2);
    REQUIRE(res.ok());
    CHECK(res.structure->type1.to_string() == "(0|2^10)");
    CHECK(res.structure->type2.to_string() == "(0|2^10)");

    auto self = make_structure(g, t1, t1);
    CHECK(self.error == StructureError::NotDisjoint);

    // order 8: every order-2 type fails admissibility (the curve would have
    // genus 1), so T1 against itself dies there before disjointness
    Fc2Group d8(d8_tensor());
    auto d8t1 = build_T1(d8);
    auto res3 = make_structure(d8, d8t1, d8t1);
    CHECK(res3.error == StructureError::NotAdmissible);

    // non-generating second system
    GeneratorSystem small;
    small.spherical = {d8.generator(0), d8.generator(0)};
    CHECK(make_structure(d8, d8t1, small).error ==
          StructureError::GenerationFailure);
}

TEST_CASE("generator system JSON round-trip") {
    Rng rng(131);
    auto t = testsupport::random_independent_tensor(3, rng);
    Fc2Group g(t);
    auto v2 = build_V2_irregular(g, 1);
    REQUIRE(v2.has_value());
    auto text = system_to_json(*v2);
    auto back = system_from_json(text, 3);
    CHECK(back.genus_prime == v2->genus_prime);
    CHECK(back.handles == v2->handles);
    CHECK(back.spherical == v2->spherical);
}

// test_constructions.cpp

#include <doctest.h>

#include <set>

#include "isoprod/constructions.hpp"
#include "isoprod/gf2.hpp"
#include "support.hpp"

using namespace isoprod;

namespace {

std::uint64_t tensor_space_size(int s) {
    return std::uint64_t(1) << (std::uint64_t(s) * pair_count(2 * s));
}

StructureTensor tensor_from_id(int s, std::uint64_t id) {
    StructureTensor t(s);
    for (int p = 0; p < t.num_pairs(); ++p)
        for (int j = 0; j < s; ++j)
            if ((id >> (std::uint64_t(p) * s + j)) & 1u)
                t.cvec[p] |= std::uint32_t(1) << j;
    return t;
}

}  // namespace

TEST_CASE("T1: long relation holds identically") {
    // exhaustive at s=1,2; sampled tensors at s=3,4,5
    for (int s : {1, 2}) {
        for (std::uint64_t id = 0; id < tensor_space_size(s); ++id) {
            Fc2Group g(tensor_from_id(s, id));
            auto sys = build_T1(g);
            CHECK(sys.spherical.size() == std::size_t(2 * s + 2));
            CHECK(long_relation_product(g, sys).is_identity());
        }
    }
    Rng rng(201);
    for (int s : {3, 4, 5}) {
        for (int rep = 0; rep < 20; ++rep) {
            Fc2Group g(testsupport::random_tensor(s, rng));
            CHECK(long_relation_product(g, build_T1(g)).is_identity());
        }
    }
}

TEST_CASE("T1: generates every independent group; s=2 images") {
    Rng rng(203);
    for (int s : {1, 2, 3, 4}) {
        Fc2Group g(testsupport::random_independent_tensor(s, rng));
        auto sys = build_T1(g);
        CHECK(g.generates_fast(sys.spherical));
    }

    Fc2Group g(testsupport::random_independent_tensor(2, rng));
    auto sys = build_T1(g);
    std::vector<std::uint32_t> images;
    for (const auto& c : sys.spherical) images.push_back(c.a);
    CHECK(images == std::vector<std::uint32_t>{0b0001, 0b0010, 0b0011, 0b0100,
                                               0b1000, 0b1100});
}

TEST_CASE("T2: literal instantiation at s=4, degenerate below s=3") {
    Rng rng(205);
    Fc2Group g(testsupport::random_tensor(4, rng));
    auto t2 = build_T2_regular(g);
    REQUIRE(t2.has_value());
    REQUIRE(t2->spherical.size() == 10);

    auto word = [&](std::vector<int> idx) {
        GroupElement p = g.identity();
        for (int i : idx) p = g.multiply(p, g.generator(i));
        return p;
    };
    CHECK(t2->spherical[0] == word({0, 1}));
    CHECK(t2->spherical[1] == word({1, 2}));
    CHECK(t2->spherical[2] == word({2, 3}));
    CHECK(t2->spherical[3] == word({3, 1, 2}));
    CHECK(t2->spherical[4] == g.inverse(word({0, 1, 2})));
    CHECK(t2->spherical[5] == word({4, 5}));
    CHECK(t2->spherical[6] == word({5, 6}));
    CHECK(t2->spherical[7] == word({6, 7}));
    CHECK(t2->spherical[8] == word({7, 5, 6}));
    CHECK(t2->spherical[9] == g.inverse(word({4, 5, 6})));

    // abelianised generation: images span the full quotient
    std::vector<BitVector> imgs;
    for (const auto& c : t2->spherical) imgs.push_back(g.phi_image(c));
    CHECK(rank(imgs) == 8);

    for (int s : {1, 2}) {
        Fc2Group small(testsupport::random_tensor(s, rng));
        CHECK_FALSE(build_T2_regular(small).has_value());
    }
}

TEST_CASE("V2: pattern, handles and long relation") {
    Rng rng(207);
    for (int s : {3, 4, 5}) {
        for (int q = 1; q <= s - 2; ++q) {
            auto cs = combined_order2_constraints(s, q);
            Fc2Group g(sample_independent_solution(cs, rng));
            auto v2 = build_V2_irregular(g, q);
            REQUIRE(v2.has_value());
            CHECK(v2->genus_prime == q);
            CHECK(v2->handles.size() == std::size_t(2 * q));
            CHECK(v2->spherical.size() == std::size_t(2 * s - 2 * q + 2));
            // the embedded central element h cancels the handle commutators
            CHECK(long_relation_product(g, *v2).is_identity());
            CHECK(g.generates_fast([&] {
                auto all = v2->handles;
                all.insert(all.end(), v2->spherical.begin(), v2->spherical.end());
                return all;
            }()));
        }
    }

    Fc2Group g4(testsupport::random_tensor(4, rng));
    auto v2 = build_V2_irregular(g4, 1);
    REQUIRE(v2.has_value());
    CHECK(v2->handles == std::vector<GroupElement>{g4.generator(3), g4.generator(7)});
    CHECK(v2->spherical[3] == g4.multiply(g4.generator(3), g4.generator(0)));

    CHECK_FALSE(build_V2_irregular(g4, 0).has_value());
    CHECK_FALSE(build_V2_irregular(g4, 3).has_value());
    Fc2Group g2(testsupport::random_tensor(2, rng));
    CHECK_FALSE(build_V2_irregular(g2, 1).has_value());
}

TEST_CASE("order2_constraints: stated equation sets") {
    // single letters contribute nothing: T1 at s=1 has no equations
    auto cs1 = order2_constraints(1, ConstructionId::T1);
    CHECK(cs1.equations.empty());
    CHECK(cs1.free_bits_per_row() == 1);

    // T1 at s=2: exactly c(1,2,.) = 0 and c(3,4,.) = 0
    auto cs2 = order2_constraints(2, ConstructionId::T1);
    REQUIRE(cs2.equations.size() == 2);
    BitVector e12(6), e34(6);
    e12.set(pair_index(0, 1, 4), true);
    e34.set(pair_index(2, 3, 4), true);
    CHECK(cs2.equations[0] == e12);
    CHECK(cs2.equations[1] == e34);

    // a two-letter entry g1 g2 forces c(1,2,.) = 0: present in T2 systems
    auto cs3 = order2_constraints(3, ConstructionId::T2Regular);
    BitVector first(15);
    first.set(pair_index(0, 1, 6), true);
    CHECK(cs3.equations[0] == first);
}

TEST_CASE("order2_constraints: sound and complete against element orders") {
    // exhaustive at s=2 for T1
    auto cs = order2_constraints(2, ConstructionId::T1);
    std::uint64_t satisfying = 0;
    for (std::uint64_t id = 0; id < tensor_space_size(2); ++id) {
        StructureTensor t = tensor_from_id(2, id);
        Fc2Group g(t);
        bool all2 = true;
        for (const auto& c : build_T1(g).spherical)
            if (g.element_order(c) > 2) all2 = false;
        CHECK(cs.satisfied_by(t) == all2);
        satisfying += cs.satisfied_by(t);
    }
    CHECK(satisfying == (std::uint64_t(1) << cs.solution_count_log2()));

    // sampled at s=3,4 for the combined systems
    Rng rng(211);
    for (int s : {3, 4}) {
        for (int q = 0; q <= std::min(2, s - 2); ++q) {
            auto sys = combined_order2_constraints(s, q);
            for (int rep = 0; rep < 40; ++rep) {
                // mix raw tensors with solutions so both outcomes appear
                StructureTensor t = (rep % 2) ? sample_solution(sys, rng)
                                              : testsupport::random_tensor(s, rng);
                Fc2Group g(t);
                bool all2 = true;
                for (const auto& c : build_T1(g).spherical)
                    if (g.element_order(c) != 2 && !c.is_identity()) all2 = false;
                auto second = q == 0 ? build_T2_regular(g)
                                     : build_V2_irregular(g, q);
                REQUIRE(second.has_value());
                for (const auto& c : second->spherical)
                    if (g.element_order(c) != 2 && !c.is_identity()) all2 = false;
                CHECK(sys.satisfied_by(t) == all2);
            }
        }
    }
}

TEST_CASE("sampled solutions satisfy their system and independence") {
    Rng rng(213);
    for (int s : {3, 4, 5}) {
        for (int q = 0; q <= std::min(2, s - 2); ++q) {
            auto cs = combined_order2_constraints(s, q);
            for (int rep = 0; rep < 10; ++rep) {
                auto t = sample_independent_solution(cs, rng);
                CHECK(cs.satisfied_by(t));
                CHECK(rank(t.rows()) == std::size_t(s));
            }
        }
    }
}

TEST_CASE("construction_validity: undefined second system at s=1") {
    Fc2Group g(tensor_from_hex("s1:0x1"));
    auto rep = construction_validity(g, 1);
    CHECK(rep.first.defined);
    CHECK(rep.first.order2_ok);
    CHECK(rep.first.generation_ok);
    CHECK(rep.first.relation_ok);
    CHECK_FALSE(rep.second.defined);
    CHECK_FALSE(rep.all_true());
}

TEST_CASE("construction_validity: all-true on the constrained space at s=4") {
    Rng rng(217);
    for (int q : {0, 1, 2}) {
        auto cs = combined_order2_constraints(4, q);
        for (int rep = 0; rep < 10; ++rep) {
            Fc2Group g(sample_independent_solution(cs, rng));
            auto r = construction_validity(g, q);
            CHECK(r.all_true());
            CHECK(r.first.actual_type == theorem_type_first(4));
            CHECK(r.second.actual_type == theorem_type_second(4, q));
        }
    }
}

TEST_CASE("construction_validity: random unconstrained tensors mostly fail") {
    Rng rng(219);
    int order2_failures = 0;
    for (int rep = 0; rep < 30; ++rep) {
        Fc2Group g(testsupport::random_tensor(4, rng));
        auto r = construction_validity(g, 0);
        if (!(r.first.order2_ok && r.second.order2_ok)) ++order2_failures;
    }
    CHECK(order2_failures >= 25);  // chance of an order-2 pass is ~2^-48
}

TEST_CASE("construction report JSON lines are stable") {
    Fc2Group g(tensor_from_hex("s1:0x1"));
    auto line = construction_validity(g, 0).to_json_line();
    CHECK(line.find("\"tensor\":\"s1:0x1\"") != std::string::npos);
    CHECK(line.find("\"all_true\":false") != std::string::npos);
}

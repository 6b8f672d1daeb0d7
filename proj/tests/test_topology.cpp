#include "doctest.h"

#include <random>

#include "roughdp/oracle.hpp"
#include "roughdp/topology.hpp"
#include "test_support.hpp"

using namespace roughdp;
using namespace roughdp::testing;

TEST_CASE("right neighborhoods of the example relation") {
    Universe u = example1_universe();
    auto nbrs = right_neighborhoods(u, example1_relation());
    CHECK(nbrs[0] == set4(0b0111));  // u1 -> {u1,u2,u3}
    CHECK(nbrs[1] == set4(0b0100));  // u2 -> {u3}
    CHECK(nbrs[2] == set4(0b1000));  // u3 -> {u4}
    CHECK(nbrs[3] == set4(0));       // u4 -> {}
}

TEST_CASE("identity relation gives singleton neighborhoods") {
    Universe u({"a", "b", "c"});
    auto nbrs = right_neighborhoods(u, BinaryRelation::identity(3));
    for (int x = 0; x < 3; ++x) {
        CHECK(nbrs[static_cast<size_t>(x)] == ElementSet::empty_set(3).with(x));
    }
}

TEST_CASE("example relation generates the expected topology") {
    auto topo = TopologySpace::from_relation(example1_universe(), example1_relation());
    CHECK(topo.opens() == SetFamily::of_masks(kExample1Opens, 4));
    CHECK(topo.closeds() == SetFamily::of_masks(kExample1Closeds, 4));
}

TEST_CASE("empty relation gives the indiscrete topology") {
    Universe u({"a", "b", "c"});
    auto topo = TopologySpace::from_relation(u, BinaryRelation({}, 3));
    CHECK(topo.opens() == SetFamily::of_masks({0, 7}, 3));
}

TEST_CASE("generated topologies satisfy the axioms") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 5;
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                if (rng() % 2) pairs.emplace_back(a, b);
            }
        }
        auto topo = TopologySpace::from_relation(Universe({"a", "b", "c", "d", "e"}),
                                                 BinaryRelation(std::move(pairs), n));
        CHECK(axiom_check(topo.opens()));
    }
}

TEST_CASE("topology generation is deterministic") {
    auto a = TopologySpace::from_relation(example1_universe(), example1_relation());
    auto b = TopologySpace::from_relation(example1_universe(), example1_relation());
    CHECK(a.subbase() == b.subbase());
    CHECK(a.base() == b.base());
    CHECK(a.opens() == b.opens());
}

TEST_CASE("enumeration cap is enforced") {
    std::vector<std::string> labels;
    for (int i = 0; i < 25; ++i) labels.push_back("e" + std::to_string(i));
    CHECK_THROWS_AS(
        TopologySpace::from_relation(Universe(labels), BinaryRelation::identity(25)),
        CapExceeded);
    // and can be tightened or raised
    Universe small({"a", "b", "c", "d", "e"});
    CHECK_THROWS_AS(TopologySpace::from_relation(small, BinaryRelation::identity(5), 3),
                    CapExceeded);
    CHECK_NOTHROW(TopologySpace::from_relation(small, BinaryRelation::identity(5), 5));
}

TEST_CASE("interior, closure, boundary, exactness on the example") {
    auto topo = TopologySpace::from_relation(example1_universe(), example1_relation());

    CHECK(topo.interior(set4(0b0111)) == set4(0b0111));  // open set
    CHECK(topo.interior(set4(0b0011)) == set4(0));       // {u1,u2}
    CHECK(topo.interior(set4(0b1111)) == set4(0b1111));

    CHECK(topo.closure(set4(0b0100)) == set4(0b0111));  // {u3}
    CHECK(topo.closure(set4(0)) == set4(0));
    CHECK(topo.closure(set4(0b1100)) == set4(0b1111));  // {u3,u4}

    CHECK(topo.boundary(set4(0b1100)) == set4(0b0011));
    CHECK(topo.boundary(set4(0b1111)) == set4(0));
    CHECK(topo.boundary(set4(0)) == set4(0));

    CHECK_FALSE(topo.is_exact(set4(0b1100)));
    CHECK(topo.is_exact(set4(0b1111)));
    CHECK(topo.is_exact(set4(0b1000)));  // {u4} is clopen
}

TEST_CASE("interior/closure duality, monotonicity, idempotence") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 4;
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                if (rng() % 2) pairs.emplace_back(a, b);
            }
        }
        auto topo = TopologySpace::from_relation(example1_universe(),
                                                 BinaryRelation(std::move(pairs), n));
        for (std::uint64_t m = 0; m <= 15; ++m) {
            ElementSet s(m, n);
            CHECK(topo.interior(s) == topo.closure(s.complement()).complement());
            CHECK(topo.interior(topo.interior(s)) == topo.interior(s));
            CHECK(topo.closure(topo.closure(s)) == topo.closure(s));
            for (std::uint64_t m2 = 0; m2 <= 15; ++m2) {
                ElementSet s2(m | m2, n);
                CHECK(topo.interior(s).is_subset_of(topo.interior(s2)));
                CHECK(topo.closure(s).is_subset_of(topo.closure(s2)));
                CHECK(topo.closure(ElementSet(m, n).unite(ElementSet(m2, n))) ==
                      topo.closure(ElementSet(m, n)).unite(topo.closure(ElementSet(m2, n))));
            }
        }
    }
}

#include "doctest.h"

#include <random>

#include "roughdp/approx.hpp"
#include "roughdp/oracle.hpp"
#include "test_support.hpp"

using namespace roughdp;
using namespace roughdp::testing;

namespace {

ApproximationSpace random_approx_space(std::mt19937_64& rng, int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (rng() % 2) pairs.emplace_back(a, b);
        }
    }
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
    return ApproximationSpace::build(Universe(labels), BinaryRelation(std::move(pairs), n));
}

}  // namespace

TEST_CASE("lower and upper approximations on the example") {
    auto space = example1_space();

    CHECK(lower(space, set4(0b1100), Tier::Tau) == set4(0b1100));  // {u3,u4} open
    CHECK(upper(space, set4(0b1100), Tier::Tau) == set4(0b1111));
    CHECK(lower(space, set4(0), Tier::DeltaPre) == set4(0));
    CHECK(upper(space, set4(0b1111), Tier::DeltaPre) == set4(0b1111));
    CHECK(lower(space, set4(0b0101), Tier::Pre) == set4(0b0101));  // {u1,u3} preopen

    // deltaP family is the powerset: every set approximates itself
    for (std::uint64_t m = 0; m <= 15; ++m) {
        CHECK(lower(space, set4(m), Tier::DeltaPre) == set4(m));
        CHECK(upper(space, set4(m), Tier::DeltaPre) == set4(m));
    }
}

TEST_CASE("accuracy values match the worked example") {
    auto space = example1_space();

    struct Row {
        std::uint64_t mask;
        Rational tau, pre, dp;
    };
    // Bit order: u1=1, u2=2, u3=4, u4=8.
    const Row rows[] = {
        {0b0001, {0, 1}, {0, 1}, {1, 1}},  // {u1}
        {0b0010, {0, 1}, {0, 1}, {1, 1}},  // {u2}
        {0b0100, {1, 3}, {1, 3}, {1, 1}},  // {u3}
        {0b1000, {1, 1}, {1, 1}, {1, 1}},  // {u4}
        {0b0011, {0, 1}, {0, 1}, {1, 1}},  // {u1,u2}
        {0b0101, {1, 3}, {2, 3}, {1, 1}},  // {u1,u3}
        {0b1001, {1, 3}, {1, 2}, {1, 1}},  // {u1,u4}
        {0b0110, {1, 3}, {2, 3}, {1, 1}},  // {u2,u3}
        {0b1010, {1, 3}, {1, 2}, {1, 1}},  // {u2,u4}
        {0b1100, {1, 2}, {1, 2}, {1, 1}},  // {u3,u4}
        {0b0111, {1, 1}, {1, 1}, {1, 1}},  // {u1,u2,u3}
        {0b1011, {1, 3}, {1, 3}, {1, 1}},  // {u1,u2,u4}
        {0b1101, {1, 2}, {3, 4}, {1, 1}},  // {u1,u3,u4}
        {0b1110, {1, 2}, {3, 4}, {1, 1}},  // {u2,u3,u4}
    };
    for (const auto& r : rows) {
        CAPTURE(r.mask);
        CHECK(accuracy(space, set4(r.mask), Tier::Tau) == r.tau);
        CHECK(accuracy(space, set4(r.mask), Tier::Pre) == r.pre);
        CHECK(accuracy(space, set4(r.mask), Tier::DeltaPre) == r.dp);
    }

    CHECK_THROWS_AS(accuracy(space, set4(0), Tier::Tau), EmptySubject);
    CHECK_FALSE(approximate(space, set4(0), Tier::Tau).accuracy.has_value());
}

TEST_CASE("approximation chain and accuracy monotonicity across tiers") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        auto space = random_approx_space(rng, n);
        for (std::uint64_t m = 0; m <= ElementSet::mask_for(n); ++m) {
            ElementSet s(m, n);
            ElementSet lt = lower(space, s, Tier::Tau), lp = lower(space, s, Tier::Pre);
            ElementSet ld = lower(space, s, Tier::DeltaPre);
            ElementSet ud = upper(space, s, Tier::DeltaPre), up = upper(space, s, Tier::Pre);
            ElementSet ut = upper(space, s, Tier::Tau);
            CHECK(lt.is_subset_of(lp));
            CHECK(lp.is_subset_of(ld));
            CHECK(ld.is_subset_of(s));
            CHECK(s.is_subset_of(ud));
            CHECK(ud.is_subset_of(up));
            CHECK(up.is_subset_of(ut));
            if (!s.empty()) {
                CHECK(accuracy(space, s, Tier::Tau) <= accuracy(space, s, Tier::Pre));
                CHECK(accuracy(space, s, Tier::Pre) <= accuracy(space, s, Tier::DeltaPre));
            }
            for (Tier t : kAllTiers) {
                ElementSet lo = lower(space, s, t), uo = upper(space, s, t);
                CHECK(lower(space, s.complement(), t) == uo.complement());
                CHECK(upper(space, s.complement(), t) == lo.complement());
                CHECK(lower(space, lo, t) == lo);
                CHECK(upper(space, uo, t) == uo);
            }
        }
    }
}

TEST_CASE("positive, negative, and boundary regions partition the universe") {
    auto space = example1_space();
    for (std::uint64_t m = 0; m <= 15; ++m) {
        for (Tier t : kAllTiers) {
            auto pnb = pos_neg_boundary(space, set4(m), t);
            CHECK_FALSE(pnb.positive.intersects(pnb.negative));
            CHECK_FALSE(pnb.positive.intersects(pnb.boundary));
            CHECK_FALSE(pnb.negative.intersects(pnb.boundary));
            CHECK(pnb.positive.unite(pnb.negative).unite(pnb.boundary) == set4(0b1111));
        }
    }
}

TEST_CASE("region report on the example") {
    auto space = example1_space();

    auto r = regions(space, set4(0b1010));  // {u2,u4}
    CHECK(r.areas[2] == set4(0));  // deltaP internal edge
    CHECK(r.areas[5] == set4(0));  // deltaP external edge
    // lower_P = {u4}; {u2,u4} is itself preclosed, so upper_P = {u2,u4}
    // and the P-boundary is {u2}.
    CHECK(r.areas[7] == set4(0b0010));

    auto full = regions(space, set4(0b1111));
    for (int i = 1; i <= 9; ++i) {
        CHECK(full.areas[static_cast<size_t>(i - 1)] == set4(0));
    }
    for (int i = 10; i <= 12; ++i) {
        CHECK(full.areas[static_cast<size_t>(i - 1)] == set4(0));  // exteriors of X
    }

    auto su34 = regions(space, set4(0b1100));  // {u3,u4}
    CHECK(su34.areas[6] == set4(0b0011));      // b(S) = {u1,u2}
    CHECK(su34.areas[8] == set4(0));           // deltaP boundary
}

TEST_CASE("boundary areas decompose into edges on random spaces") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        auto space = random_approx_space(rng, n);
        for (int k = 0; k < 25; ++k) {
            ElementSet s(rng() & ElementSet::mask_for(n), n);
            auto r = regions(space, s);
            CHECK(r.areas[6] == r.areas[0].unite(r.areas[3]));  // b = internal u external
            CHECK(r.areas[7] == r.areas[1].unite(r.areas[4]));
            CHECK(r.areas[8] == r.areas[2].unite(r.areas[5]));
            CHECK(r.areas[9] == upper(space, s, Tier::Tau).complement());
            CHECK(r.areas[11] == upper(space, s, Tier::DeltaPre).complement());
        }
    }
}

TEST_CASE("memberships from the worked example") {
    auto space = example1_space();
    const int u1 = 0, u2 = 1;

    // N = {u1,u3}: u1 is P-strong but not tau-strong
    ElementSet n13 = set4(0b0101);
    CHECK(membership(space, u1, n13, Tier::Pre, MembershipMode::Strong));
    CHECK_FALSE(membership(space, u1, n13, Tier::Tau, MembershipMode::Strong));

    // N = {u2,u4}: u2 is deltaP-strong
    CHECK(membership(space, u2, set4(0b1010), Tier::DeltaPre, MembershipMode::Strong));

    // N = {u1,u4}: u2 is tau-weak but not P-weak
    ElementSet n14 = set4(0b1001);
    CHECK(membership(space, u2, n14, Tier::Tau, MembershipMode::Weak));
    CHECK_FALSE(membership(space, u2, n14, Tier::Pre, MembershipMode::Weak));

    // N = {u3}: u1 is P-weak but not deltaP-weak
    ElementSet n3 = set4(0b0100);
    CHECK(membership(space, u1, n3, Tier::Pre, MembershipMode::Weak));
    CHECK_FALSE(membership(space, u1, n3, Tier::DeltaPre, MembershipMode::Weak));

    // every member of S is a weak member at every tier
    for (std::uint64_t m = 0; m <= 15; ++m) {
        for (int x : set4(m).indices()) {
            for (Tier t : kAllTiers) {
                CHECK(membership(space, x, set4(m), t, MembershipMode::Weak));
            }
        }
    }
}

TEST_CASE("strong membership strengthens and weak membership weakens up the chain") {
    std::mt19937_64 rng(27);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        auto space = random_approx_space(rng, n);
        for (std::uint64_t m = 0; m <= ElementSet::mask_for(n); ++m) {
            for (int x = 0; x < n; ++x) {
                ElementSet s(m, n);
                if (membership(space, x, s, Tier::Tau, MembershipMode::Strong)) {
                    CHECK(membership(space, x, s, Tier::Pre, MembershipMode::Strong));
                }
                if (membership(space, x, s, Tier::Pre, MembershipMode::Strong)) {
                    CHECK(membership(space, x, s, Tier::DeltaPre, MembershipMode::Strong));
                }
                if (membership(space, x, s, Tier::DeltaPre, MembershipMode::Weak)) {
                    CHECK(membership(space, x, s, Tier::Pre, MembershipMode::Weak));
                }
                if (membership(space, x, s, Tier::Pre, MembershipMode::Weak)) {
                    CHECK(membership(space, x, s, Tier::Tau, MembershipMode::Weak));
                }
            }
        }
    }
}

TEST_CASE("rough inclusion from the worked example") {
    auto space = example1_space();
    auto inc = rough_inclusion(space, set4(0b1010), set4(0b1011), Tier::DeltaPre);
    CHECK(inc.bottom);
    CHECK(inc.top);
    CHECK(inc.full);

    // subset implies inclusion at every tier; every set includes itself
    std::mt19937_64 rng(3);
    for (int k = 0; k < 100; ++k) {
        ElementSet s(rng() & 15, 4);
        ElementSet n = s.unite(ElementSet(rng() & 15, 4));
        for (Tier t : kAllTiers) {
            auto i = rough_inclusion(space, s, n, t);
            CHECK(i.bottom);
            CHECK(i.top);
            CHECK(i.full);
            CHECK(rough_inclusion(space, s, s, t).full);
        }
    }
}

TEST_CASE("definability classification from the worked examples") {
    auto space = example1_space();

    // {u1,u2} is deltaP-definable but P-lower is empty
    auto dp12 = classify(space, set4(0b0011), Tier::DeltaPre);
    CHECK(dp12.category == DefinabilityCategory::RoughlyDefinable);
    CHECK(dp12.exact);  // deltaP-exact but not P-exact
    auto p12 = classify(space, set4(0b0011), Tier::Pre);
    CHECK(p12.category != DefinabilityCategory::RoughlyDefinable);
    CHECK_FALSE(p12.exact);

    // {u2,u3,u4} is deltaP-exact but P-rough
    CHECK(classify(space, set4(0b1110), Tier::DeltaPre).exact);
    CHECK_FALSE(classify(space, set4(0b1110), Tier::Pre).exact);

    // {u2} in PIUD but not deltaP-IUD
    CHECK(classify(space, set4(0b0010), Tier::Pre).category ==
          DefinabilityCategory::InternallyUndefinable);
    CHECK(classify(space, set4(0b0010), Tier::DeltaPre).category !=
          DefinabilityCategory::InternallyUndefinable);

    // {u1,u3,u4} in PEUD but not deltaP-EUD
    CHECK(classify(space, set4(0b1101), Tier::Pre).category ==
          DefinabilityCategory::ExternallyUndefinable);
    CHECK(classify(space, set4(0b1101), Tier::DeltaPre).category !=
          DefinabilityCategory::ExternallyUndefinable);
}

TEST_CASE("P-exact sets are deltaP-exact") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        auto space = random_approx_space(rng, n);
        for (std::uint64_t m = 0; m <= ElementSet::mask_for(n); ++m) {
            ElementSet s(m, n);
            if (classify(space, s, Tier::Pre).exact) {
                CHECK(classify(space, s, Tier::DeltaPre).exact);
            }
        }
    }
}

TEST_CASE("class inclusion report") {
    auto space = example1_space();
    auto report = class_inclusion_report(space);
    CHECK(report.ok());
    // {u1,u2} is RD at deltaP but not at P
    CHECK(classify(space, set4(0b0011), Tier::DeltaPre).category ==
          DefinabilityCategory::RoughlyDefinable);

    Universe u3({"a", "b", "c"});
    auto discrete = ApproximationSpace::build(u3, BinaryRelation::identity(3));
    auto dreport = class_inclusion_report(discrete);
    CHECK(dreport.ok());
    // every nonempty proper subset is RD at every tier: 2^3 - 2 = 6
    for (size_t t = 0; t < 3; ++t) {
        CHECK(dreport.counts[t][0] == 6);
    }

    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        CHECK(class_inclusion_report(random_approx_space(rng, n)).ok());
    }
}

TEST_CASE("point closure partition") {
    auto space = example1_space();
    auto blocks = point_closure_partition(space);
    REQUIRE(blocks.size() == 4);  // four singletons
    for (const auto& b : blocks) CHECK(b.count() == 1);

    Universe u3({"a", "b", "c"});
    auto discrete = ApproximationSpace::build(u3, BinaryRelation::identity(3));
    CHECK(point_closure_partition(discrete).size() == 3);

    // relation {(a,b),(b,a)} on {a,b,c}: {a,b} is deltaP-open but {c} is not
    auto bad = ApproximationSpace::build(u3, BinaryRelation({{0, 1}, {1, 0}}, 3));
    CHECK_THROWS_AS(point_closure_partition(bad), PreconditionFailed);
}

TEST_CASE("partition blocks are disjoint and cover the universe") {
    std::mt19937_64 rng(53);
    int partitions_checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        auto space = random_approx_space(rng, n);
        SetFamily blocks = [&] {
            try {
                return point_closure_partition(space);
            } catch (const PreconditionFailed&) {
                return SetFamily::of_masks({ElementSet::mask_for(n)}, n);  // trivially fine
            }
        }();
        ElementSet covered = ElementSet::empty_set(n);
        for (const auto& b : blocks) {
            CHECK_FALSE(covered.intersects(b));
            covered = covered.unite(b);
        }
        CHECK(covered == ElementSet::full_set(n));
        ++partitions_checked;
    }
    CHECK(partitions_checked == 60);
}

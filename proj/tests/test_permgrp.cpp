#include "trigal/permgrp.hpp"

#include "support.hpp"
#include "trigal/random.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

namespace trigal {
namespace {

using testing::thrown_code;

Permutation cyc(std::size_t n, const char* text) {
    return Permutation::parse_cycles(n, text);
}

Group symmetric(std::size_t n) {
    std::vector<std::uint8_t> shift(n);
    std::iota(shift.begin(), shift.end(), 1);
    shift.back() = 0;
    return Group::generate({cyc(n, "(0,1)"), Permutation(shift)});
}

Group alternating(std::size_t n) {
    std::vector<Permutation> gens;
    for (std::size_t i = 2; i < n; ++i) {
        gens.push_back(Permutation::from_cycles(n, {{0, 1, static_cast<int>(i)}}));
    }
    return Group::generate(gens, n);
}

TEST(Permutation, ProductActsLeftToRight) {
    const Permutation a = cyc(3, "(0,1)");
    const Permutation b = cyc(3, "(1,2)");
    // (a*b)(0) = b(a(0)) = b(1) = 2.
    EXPECT_EQ((a * b)[0], 2);
    EXPECT_EQ((a * b).to_cycle_string(), "(0,2,1)");
    EXPECT_TRUE((a * a.inverse()).is_identity());
}

TEST(Permutation, ParseErrors) {
    EXPECT_TRUE(cyc(4, "()").is_identity());
    EXPECT_EQ(thrown_code([] { Permutation::parse_cycles(4, "(0,1"); }), "ParseError");
    EXPECT_EQ(thrown_code([] { Permutation::parse_cycles(4, "(0,9)"); }), "ParseError");
    EXPECT_EQ(thrown_code([] { Permutation(std::vector<std::uint8_t>{0, 0, 1}); }), "InvalidShape");
    EXPECT_EQ(thrown_code([] { (void)(Permutation(3) * Permutation(4)); }), "DegreeMismatch");
}

TEST(CycleType, LabelsAndParity) {
    EXPECT_EQ(cycle_type(Permutation(11)).parts, std::vector<int>(11, 1));
    EXPECT_EQ(cycle_type(Permutation(11)).label(), "1");
    const CycleType t = cycle_type(cyc(5, "(0,1)(2,3,4)"));
    EXPECT_EQ(t.parts, (std::vector<int>{2, 3}));
    EXPECT_EQ(t.label(), "(2,3)");
    EXPECT_FALSE(t.is_even());
    EXPECT_EQ(make_cycle_type({2, 2, 2, 2, 1, 1, 1}).label(), "2^4");
    EXPECT_EQ(make_cycle_type({4, 4, 2, 2}).label(), "(2^2,4^2)");
    EXPECT_TRUE(make_cycle_type({2, 2, 1}).is_even());
}

TEST(Group, SymmetricOrders) {
    BigInt factorial = 1;
    for (std::size_t n = 2; n <= 12; ++n) {
        factorial *= n;
        EXPECT_EQ(symmetric(n).order(), factorial) << n;
    }
    EXPECT_EQ(symmetric(5).order(), 120);
}

TEST(Group, DegreeLimits) {
    EXPECT_EQ(thrown_code([] { Group::generate({Permutation(31)}); }), "DegreeTooLarge");
    EXPECT_EQ(thrown_code([] { Group::generate({Permutation(3), Permutation(4)}); }), "DegreeMismatch");
}

TEST(Group, MembershipAndRandomElements) {
    const Group a6 = alternating(6);
    EXPECT_EQ(a6.order(), 360);
    EXPECT_TRUE(a6.contains(cyc(6, "(0,1)(2,3)")));
    EXPECT_FALSE(a6.contains(cyc(6, "(0,1)")));
    Rng rng(3);
    for (int i = 0; i < 50; ++i) {
        EXPECT_TRUE(a6.contains(a6.random_element(rng)));
    }
}

TEST(Group, ForEachElementVisitsOrderManyDistinct) {
    const Group g = alternating(5);
    std::set<Permutation> seen;
    g.for_each_element([&](const Permutation& x) { seen.insert(x); });
    EXPECT_EQ(seen.size(), 60u);
}

// Partition numbers p(1..10) as a plain table.
constexpr int kPartitions[] = {0, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};

TEST(CycleTypeSet, SymmetricGroupsHaveAllPartitions) {
    for (std::size_t n = 1; n <= 10; ++n) {
        const Group g = n == 1 ? Group::generate({Permutation(1)}) : symmetric(n);
        EXPECT_EQ(cycle_type_set(g).size(), static_cast<std::size_t>(kPartitions[n])) << n;
    }
    const auto s3 = cycle_type_set(symmetric(3));
    EXPECT_EQ(s3, (std::set<CycleType>{make_cycle_type({1, 1, 1}), make_cycle_type({1, 2}), make_cycle_type({3})}));
}

TEST(CycleTypeSet, BudgetExceeded) {
    EXPECT_EQ(thrown_code([] { cycle_type_set(symmetric(8), 1000); }), "BudgetExceeded");
}

TEST(Transitivity, SmallGroups) {
    EXPECT_EQ(transitivity_degree(symmetric(5), 5), 5);
    EXPECT_EQ(transitivity_degree(alternating(5), 4), 3);
    for (std::size_t n = 3; n <= 8; ++n) {
        EXPECT_EQ(transitivity_degree(alternating(n), static_cast<int>(n)), static_cast<int>(n) - 2) << n;
    }
    const Group c8 = Group::generate({cyc(8, "(0,1,2,3,4,5,6,7)")});
    EXPECT_TRUE(is_transitive(c8));
    EXPECT_EQ(transitivity_degree(c8, 3), 1);
    EXPECT_FALSE(is_primitive(c8));
    EXPECT_TRUE(is_primitive(symmetric(4)));
    const Group intrans = Group::generate({cyc(4, "(0,1)")});
    EXPECT_EQ(transitivity_degree(intrans, 2), 0);
}

} // namespace
} // namespace trigal

#include "trigal/identities.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

namespace trigal {
namespace {

using testing::thrown_code;

TEST(Psl25, StatedRelationLeavesResidual) {
    const auto r = check_psl25();
    EXPECT_FALSE(r.holds);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(*r.witness, "b*c^4 + b");
    EXPECT_FALSE(numeric_psl25(CRelation::Stated, false, 50, 0).holds());
}

TEST(Psl25, CorrectedRelationHolds) {
    const auto r = check_psl25(CRelation::Corrected);
    EXPECT_TRUE(r.holds);
    EXPECT_FALSE(r.witness);
    EXPECT_TRUE(numeric_psl25(CRelation::Corrected, false, 50, 0).holds());
}

TEST(Psl25, ZeroAlphaControlFails) {
    EXPECT_FALSE(check_psl25(CRelation::Corrected, true).holds);
    EXPECT_EQ(numeric_psl25(CRelation::Corrected, true, 50, 0).passed, 0);
}

TEST(M24, ChainHoldsAndIsAdditive) {
    const auto r = check_m24();
    EXPECT_TRUE(r.holds) << r.witness.value_or("");
    EXPECT_TRUE(numeric_m24(false, 50, 0).holds());
}

TEST(M24, PerturbedExponentFails) {
    const auto r = check_m24(true);
    EXPECT_FALSE(r.holds);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(*r.witness, "a^89*x + a^88*x");
    EXPECT_FALSE(numeric_m24(true, 50, 0).holds());
}

TEST(M23, SubstitutionHoldsAndControlFails) {
    EXPECT_TRUE(check_m23_substitution().holds);
    EXPECT_TRUE(numeric_m23(false, 50, 0).holds());
    EXPECT_FALSE(check_m23_substitution(true).holds);
    EXPECT_FALSE(numeric_m23(true, 50, 0).holds());
}

TEST(Pgl, LinearizedFormsHold) {
    for (auto [p, k, r, s] : {std::array<std::uint32_t, 4>{2, 1, 3, 2}, {3, 1, 3, 2}, {2, 2, 2, 1}, {5, 1, 2, 1}}) {
        const auto rep = check_pgl(p, k, r, s);
        EXPECT_TRUE(rep.holds) << rep.name << " " << rep.witness.value_or("");
        EXPECT_TRUE(numeric_pgl(p, k, r, s, 50, 0).holds()) << rep.name;
    }
}

TEST(Pgl, BadParameters) {
    EXPECT_EQ(thrown_code([] { check_pgl(4, 1, 3, 2); }), "BadParameters");
    EXPECT_EQ(thrown_code([] { check_pgl(2, 1, 2, 2); }), "BadParameters");
    EXPECT_EQ(thrown_code([] { numeric_pgl(2, 0, 3, 1, 5, 0); }), "BadParameters");
}

} // namespace
} // namespace trigal

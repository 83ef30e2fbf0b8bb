#include "trigal/mvpoly.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

namespace trigal {
namespace {

using testing::thrown_code;

MContextPtr context(std::uint32_t p, std::vector<std::string> vars) {
    return std::make_shared<const MContext>(p, std::move(vars));
}

TEST(MPoly, FreshmansDream) {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        auto ctx = context(p, {"x", "y"});
        const MPoly x = MPoly::variable(ctx, "x");
        const MPoly y = MPoly::variable(ctx, "y");
        EXPECT_EQ((x + y).pow(p), x.pow(p) + y.pow(p));
        EXPECT_EQ((x + y).pow(p * p), x.pow(p * p) + y.pow(p * p));
    }
}

TEST(MPoly, BinomialInLargeCharacteristic) {
    auto ctx = context(7, {"x", "y"});
    const MPoly x = MPoly::variable(ctx, "x");
    const MPoly y = MPoly::variable(ctx, "y");
    const MPoly two = MPoly::constant(ctx, 2);
    EXPECT_EQ((x + y).pow(2), x.pow(2) + two * x * y + y.pow(2));
    EXPECT_EQ((x + y).pow(3).size(), 4u);
}

TEST(MPoly, CoefficientsReducedAndZeroDropped) {
    auto ctx = context(3, {"x"});
    EXPECT_TRUE(MPoly::constant(ctx, 6).is_zero());
    EXPECT_EQ(MPoly::constant(ctx, -1), MPoly::constant(ctx, 2));
    const MPoly x = MPoly::variable(ctx, "x");
    EXPECT_TRUE((x + x + x).is_zero());
    EXPECT_EQ((x - x).to_string(), "0");
}

TEST(MPoly, Substitute) {
    auto ctx = context(2, {"x", "y"});
    const MPoly x = MPoly::variable(ctx, "x");
    const MPoly y = MPoly::variable(ctx, "y");
    const MPoly f = y.pow(3) + x * y + MPoly::constant(ctx, 1);
    const MPoly g = substitute(f, "y", x.pow(2));
    EXPECT_EQ(g, x.pow(6) + x.pow(3) + MPoly::constant(ctx, 1));
    EXPECT_EQ(g.degree_in(1), 0);
}

TEST(MPoly, Errors) {
    auto ctx = context(2, {"x"});
    EXPECT_EQ(thrown_code([&] { MPoly::variable(ctx, "z"); }), "UnknownVariable");
    EXPECT_EQ(thrown_code([] { MContext(4, {"x"}); }), "NotPrime");
    auto other = context(3, {"x"});
    EXPECT_EQ(thrown_code([&] { (void)(MPoly::variable(ctx, "x") + MPoly::variable(other, "x")); }),
              "ContextMismatch");
}

TEST(TriangularRing, CubeRootOfUnity) {
    auto ctx = context(2, {"alpha", "x"});
    const MPoly alpha = MPoly::variable(ctx, "alpha");
    const MPoly one = MPoly::constant(ctx, 1);
    const TriangularRing ring(ctx, {{"alpha", alpha.pow(2) + alpha + one}});
    EXPECT_EQ(ring.reduce(alpha.pow(3)), one);
    EXPECT_EQ(ring.reduce(alpha * (alpha + one)), one);
    EXPECT_EQ(ring.pow(alpha, 1000), ring.reduce(alpha.pow(1000)));
    EXPECT_EQ(ring.pow(alpha, 1000), alpha); // 1000 = 1 mod 3
}

TEST(TriangularRing, TowerReduction) {
    // GF(2)[a][b] with a^2 = a + 1 and b^2 = a b + 1.
    auto ctx = context(2, {"a", "b"});
    const MPoly a = MPoly::variable(ctx, "a");
    const MPoly b = MPoly::variable(ctx, "b");
    const MPoly one = MPoly::constant(ctx, 1);
    const TriangularRing ring(ctx, {{"a", a.pow(2) + a + one}, {"b", b.pow(2) + a * b + one}});
    const MPoly r = ring.reduce(b.pow(5) * a.pow(4));
    EXPECT_LT(r.degree_in(0), 2);
    EXPECT_LT(r.degree_in(1), 2);
    // Product of the two roots of b^2 + a b + 1 is 1: b * (b + a) = 1.
    EXPECT_EQ(ring.reduce(b * (b + a)), one);
}

TEST(TriangularRing, RejectsNonMonicAndNonTriangular) {
    auto ctx = context(3, {"a", "b"});
    const MPoly a = MPoly::variable(ctx, "a");
    const MPoly b = MPoly::variable(ctx, "b");
    const MPoly one = MPoly::constant(ctx, 1);
    const MPoly two = MPoly::constant(ctx, 2);
    EXPECT_EQ(thrown_code([&] { TriangularRing(ctx, {{"a", two * a.pow(2) + one}}); }), "NonMonicRelation");
    EXPECT_EQ(thrown_code([&] { TriangularRing(ctx, {{"a", a.pow(2) * b + one}}); }), "NonMonicRelation");
    EXPECT_EQ(thrown_code([&] { TriangularRing(ctx, {{"b", b.pow(2) + a}, {"a", a.pow(2) + b}}); }),
              "NonMonicRelation");
    EXPECT_EQ(thrown_code([&] { TriangularRing(ctx, {{"a", one}}); }), "NonMonicRelation");
}

} // namespace
} // namespace trigal

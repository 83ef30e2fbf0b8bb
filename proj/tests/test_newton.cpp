#include "trigal/newton.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

namespace trigal {
namespace {

using testing::thrown_code;

std::vector<ValuedPoint> pts(std::initializer_list<std::pair<std::int64_t, std::int64_t>> list) {
    std::vector<ValuedPoint> out;
    for (auto [x, v] : list) {
        out.push_back({x, Rational(v)});
    }
    return out;
}

TEST(LowerHull, SingleSegment) {
    const auto poly = lower_hull(pts({{0, 1}, {4, 0}}));
    ASSERT_EQ(poly.segments.size(), 1u);
    EXPECT_EQ(poly.segments[0], (Segment{Rational(-1, 4), 4}));
}

TEST(LowerHull, TwoSegmentsThroughInteriorPoint) {
    const auto poly = lower_hull(pts({{0, 0}, {3, -1}, {11, 0}}));
    ASSERT_EQ(poly.segments.size(), 2u);
    EXPECT_EQ(poly.segments[0], (Segment{Rational(-1, 3), 3}));
    EXPECT_EQ(poly.segments[1], (Segment{Rational(1, 8), 8}));
    EXPECT_EQ(poly.width(), 11);
    EXPECT_EQ(poly.value_at(3), Rational(-1));
}

TEST(LowerHull, FlatAndCollinear) {
    const auto flat = lower_hull(pts({{0, 0}, {5, 0}}));
    ASSERT_EQ(flat.segments.size(), 1u);
    EXPECT_EQ(flat.segments[0], (Segment{Rational(0), 5}));
    const auto merged = lower_hull(pts({{0, 2}, {1, 1}, {2, 0}}));
    ASSERT_EQ(merged.segments.size(), 1u);
    EXPECT_EQ(merged.segments[0].run, 2);
}

TEST(LowerHull, PointsAboveAreIgnoredAndInfinitySkipped) {
    std::vector<ValuedPoint> p = pts({{0, 0}, {1, 5}, {2, 0}});
    p.insert(p.begin() + 2, ValuedPoint{1, std::nullopt});
    p.erase(p.begin() + 1);
    const auto poly = lower_hull(p);
    ASSERT_EQ(poly.segments.size(), 1u);
    EXPECT_EQ(poly.segments[0], (Segment{Rational(0), 2}));
}

TEST(LowerHull, Errors) {
    EXPECT_EQ(thrown_code([] { lower_hull(pts({{0, 1}})); }), "TooFewPoints");
    EXPECT_EQ(thrown_code([] { lower_hull({{0, Rational(1)}, {3, std::nullopt}}); }), "TooFewPoints");
    EXPECT_EQ(thrown_code([] { lower_hull(pts({{2, 1}, {1, 0}})); }), "InvalidShape");
}

TEST(TameCycles, Examples) {
    const auto t = tame_cycle_pattern(lower_hull(pts({{0, 0}, {3, -1}, {11, 0}})), 7);
    ASSERT_TRUE(t.cycles);
    EXPECT_EQ(*t.cycles, (std::vector<std::int64_t>{3, 8}));
    const auto c5 = tame_cycle_pattern(lower_hull(pts({{0, 1}, {5, 0}})), 3);
    ASSERT_TRUE(c5.cycles);
    EXPECT_EQ(*c5.cycles, (std::vector<std::int64_t>{5}));
    // Slope 1/p is wild.
    EXPECT_FALSE(tame_cycle_pattern(lower_hull(pts({{0, 0}, {3, 1}})), 3).cycles);
    const auto flat = tame_cycle_pattern(lower_hull(pts({{0, 0}, {4, 0}, {6, 1}})), 5);
    ASSERT_TRUE(flat.cycles);
    EXPECT_EQ(flat.unconstrained_run, 4);
    EXPECT_EQ(*flat.cycles, (std::vector<std::int64_t>{2}));
}

TEST(TameCycles, CharacteristicZeroIsNeverWild) {
    const auto t = tame_cycle_pattern(lower_hull(pts({{0, 1}, {6, 0}})), 0);
    ASSERT_TRUE(t.cycles);
    EXPECT_EQ(*t.cycles, (std::vector<std::int64_t>{6}));
}

TEST(TameCycles, NonIntegralRunThrows) {
    const auto poly = lower_hull({{0, Rational(1, 2)}, {1, Rational(0)}});
    EXPECT_EQ(thrown_code([&] { tame_cycle_pattern(poly, 5); }), "InvalidShape");
}

} // namespace
} // namespace trigal

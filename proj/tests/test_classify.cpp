#include "trigal/classify.hpp"

#include "support.hpp"
#include "trigal/sampler.hpp"

#include <gtest/gtest.h>

namespace trigal {
namespace {

using testing::thrown_code;
using K = GroupName::Kind;

Verdict classify(int n, int m, std::uint32_t p) {
    return classify_trinomial({n, m, p});
}

TEST(Validate, Errors) {
    EXPECT_EQ(thrown_code([] { validate({1, 0, 2}); }), "BadExponent");
    EXPECT_EQ(thrown_code([] { validate({5, 5, 2}); }), "BadExponent");
    EXPECT_EQ(thrown_code([] { validate({6, 2, 5}); }), "NotCoprime");
    EXPECT_EQ(thrown_code([] { validate({6, 1, 4}); }), "BadCharacteristic");
    EXPECT_NO_THROW(validate({6, 1, 0}));
}

TEST(GaussDegrees, Cases) {
    const auto a = gauss_degrees({11, 2, 3});
    EXPECT_EQ(a.sep, 1);
    EXPECT_EQ(a.insep, 9);
    EXPECT_TRUE(a.strange);
    const auto b = gauss_degrees({12, 1, 3});
    EXPECT_EQ(b.sep, 4);
    EXPECT_EQ(b.insep, 3);
    EXPECT_TRUE(b.strange);
    const auto c = gauss_degrees({7, 3, 5});
    EXPECT_EQ(c.sep, 1);
    EXPECT_EQ(c.insep, 1);
    EXPECT_FALSE(c.strange);
    const auto d = gauss_degrees({13, 3, 5});
    EXPECT_EQ(d.sep, 2);
    EXPECT_EQ(d.insep, 5);
}

TEST(PglParams, Hits) {
    EXPECT_EQ(pgl_params({13, 4, 3}), (std::vector<PglParams>{{3, 3, 2}}));
    EXPECT_EQ(pgl_params({13, 9, 3}), (std::vector<PglParams>{{3, 3, 2}}));
    EXPECT_EQ(pgl_params({7, 3, 2}), (std::vector<PglParams>{{2, 3, 2}}));
    EXPECT_EQ(pgl_params({5, 1, 2}), (std::vector<PglParams>{{4, 2, 1}}));
    EXPECT_TRUE(pgl_params({11, 2, 3}).empty());
    EXPECT_TRUE(pgl_params({7, 3, 5}).empty());
}

TEST(Classify, ExceptionalShapes) {
    struct Case {
        int n, m;
        std::uint32_t p;
        GroupName group;
        int clause;
    };
    const std::vector<Case> cases{
        {8, 1, 2, GroupName::matrix(K::AGL, 1, 8), 1},
        {9, 8, 3, GroupName::matrix(K::AGL, 1, 9), 1},
        {6, 1, 2, GroupName::matrix(K::PSL, 2, 5), 2},
        {12, 1, 3, GroupName::of(K::M11At12), 3},
        {12, 11, 3, GroupName::of(K::M11At12), 3},
        {24, 1, 2, GroupName::of(K::M24), 4},
        {11, 2, 3, GroupName::of(K::M11At11), 5},
        {11, 9, 3, GroupName::of(K::M11At11), 5},
        {23, 3, 2, GroupName::of(K::M23), 6},
        {23, 20, 2, GroupName::of(K::M23), 6},
        {7, 3, 2, GroupName::matrix(K::PGL, 3, 2), 7},
        {13, 4, 3, GroupName::matrix(K::PGL, 3, 3), 7},
        {6, 1, 5, GroupName::matrix(K::PGL, 2, 5), 7},
    };
    for (const auto& c : cases) {
        const Verdict v = classify(c.n, c.m, c.p);
        EXPECT_EQ(v.group, c.group) << c.n << "," << c.m << "," << c.p << " -> " << v.group.label();
        EXPECT_EQ(v.clause_number, c.clause) << c.n << "," << c.m << "," << c.p;
        EXPECT_EQ(v.clause, std::to_string(c.clause));
    }
}

TEST(Classify, Shortcuts) {
    const Verdict zero = classify(6, 1, 0);
    EXPECT_EQ(zero.group, GroupName::symmetric(6));
    EXPECT_EQ(zero.clause, "char-0");
    EXPECT_EQ(zero.clause_number, 0);
    const Verdict two = classify(2, 1, 5);
    EXPECT_EQ(two.group, GroupName::symmetric(2));
    EXPECT_EQ(two.clause, "trivial");
}

TEST(Classify, AlternatingSymmetricRefinement) {
    EXPECT_EQ(classify(7, 3, 5).group, GroupName::symmetric(7));
    EXPECT_EQ(classify(11, 1, 2).group, GroupName::symmetric(11));
    EXPECT_EQ(classify(13, 3, 5).group, GroupName::alternating(13));
    EXPECT_EQ(classify(9, 2, 2).group, GroupName::alternating(9));
    EXPECT_EQ(classify(9, 7, 2).group, GroupName::alternating(9));
    EXPECT_EQ(classify(10, 3, 2).group, GroupName::alternating(10));
    EXPECT_EQ(classify(13, 3, 5).clause_number, 8);
}

TEST(Classify, AlternatingVerdictAgreesWithSampledParity) {
    // Independent oracle: Frobenius patterns over GF(25) of the A13 shape are all even.
    const auto stats = sample_trinomial(13, 3, Field::make(5, 2), 600, 4);
    ASSERT_GT(stats.accepted, 300u);
    for (const auto& t : stats.types()) {
        EXPECT_TRUE(t.is_even()) << t.label();
    }
    // And the S7 shape shows an odd one.
    const auto odd = sample_trinomial(7, 3, Field::make(5), 600, 4);
    bool any_odd = false;
    for (const auto& t : odd.types()) {
        any_odd = any_odd || !t.is_even();
    }
    EXPECT_TRUE(any_odd);
}

TEST(Classify, NotesRecordClauseAndGauss) {
    const Verdict v = classify(12, 1, 3);
    ASSERT_FALSE(v.notes.empty());
    EXPECT_EQ(v.gauss.sep, 4);
    EXPECT_EQ(v.gauss.insep, 3);
}

TEST(NewtonWitnesses, CyclesForElevenThree) {
    const auto ws = newton_witnesses({11, 3, 7});
    ASSERT_EQ(ws.size(), 3u);
    ASSERT_TRUE(ws[0].cycles.cycles);
    EXPECT_EQ(*ws[0].cycles.cycles, (std::vector<std::int64_t>{3, 8}));
    ASSERT_TRUE(ws[1].cycles.cycles);
    EXPECT_EQ(*ws[1].cycles.cycles, (std::vector<std::int64_t>{11}));
    // p | n makes x^n + t wild.
    EXPECT_FALSE(newton_witnesses({24, 1, 2})[1].cycles.cycles);
}

} // namespace
} // namespace trigal

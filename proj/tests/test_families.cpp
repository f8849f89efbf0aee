#include <gtest/gtest.h>

#include "hsdec/families.hpp"
#include "sweeps.hpp"

using namespace hsdec;

TEST(Star, StripRule) {
    EXPECT_EQ(star_decoration(Rational(1, 3)), Word());
    EXPECT_EQ(star_decoration(Rational(1, 4)), Word("0"));
    EXPECT_EQ(star_decoration(Rational(3, 10)), Word("0110110"));
    EXPECT_THROW(star_decoration(kHalf), std::invalid_argument);
}

TEST(Star, KappaFormulaAgrees) {
    for (const auto& q : sweeps::rationals(20, Rational(0, 1), kHalf))
        EXPECT_EQ(star_decoration(q), star_decoration_from_kappas(q)) << q;
}

TEST(Star, ScopeIsTheHeight) {
    for (const auto& q : sweeps::rationals(12, Rational(0, 1), kHalf)) EXPECT_EQ(scope(star_decoration(q)), q) << q;
}

TEST(Star, ClosedForm) {
    EXPECT_EQ(starforce_expected({1, 3}, {2, 5}, {1, 4}), Rational(1, 4));
    EXPECT_EQ(starforce_expected({2, 5}, {1, 3}, {1, 4}), Rational(2, 5));
    EXPECT_EQ(starforce_expected({1, 3}, {2, 5}, {1, 3}), Rational(1, 3));
    EXPECT_THROW(starforce_expected({1, 3}, {1, 4}, {1, 3}), std::invalid_argument);
}

TEST(Star, ClosedFormAgreement) {
    const auto r = sweeps::star_forcing(8, 9);
    EXPECT_TRUE(r.ok()) << r.first;
}

TEST(Ones, Decorations) {
    EXPECT_EQ(ones_decoration(0), Word("1"));
    EXPECT_EQ(ones_decoration(1), Word("111"));
    EXPECT_EQ(ones_decoration(2), Word("11111"));
    for (int i = 0; i <= 5; ++i) EXPECT_EQ(scope(ones_decoration(i)), kHalf);
}

TEST(Ones, ClosedForm) {
    EXPECT_EQ(interwi_expected(1, 3, {1, 5}), Rational(1, 5));
    EXPECT_EQ(interwi_expected(1, 0, {1, 5}), kHalf);
    EXPECT_EQ(interwi_expected(2, 2, {1, 3}), Rational(1, 3));
    const auto r = sweeps::odd_ones_forcing(3, 8);
    EXPECT_TRUE(r.ok()) << r.first;
}

TEST(RSequence, Examples) {
    const auto s = r_sequence(OrbitCode("10000011100"), 4);
    ASSERT_EQ(s.size(), 5u);
    EXPECT_EQ(s[0], Rational(1, 3));
    for (std::size_t i = 3; i < s.size(); ++i) EXPECT_EQ(s[i], s[2]);
    for (const auto& r : r_sequence(OrbitCode("10"), 4)) EXPECT_EQ(r, kHalf);
    EXPECT_EQ(r_sequence_stable_index(9), 1);
    EXPECT_EQ(r_sequence_stable_index(11), 2);
    EXPECT_EQ(r_sequence_stable_index(5), 0);
}

TEST(RSequence, ShapeOnShortCodes) {
    const auto r = sweeps::r_sequence_shape(12);
    EXPECT_TRUE(r.ok()) << r.first;
}

TEST(RSequence, OddBlockWitness) {
    const auto r = sweeps::odd_block_witness(12, 4);
    EXPECT_TRUE(r.ok()) << r.first;
}

TEST(PaTest, Examples) {
    EXPECT_EQ(pa_test(OrbitCode("100111111")), PaVerdict::Certified);
    EXPECT_EQ(pa_test(OrbitCode("10")), PaVerdict::Unknown);
    EXPECT_EQ(pa_test(OrbitCode("1000001")), PaVerdict::Unknown);
    EXPECT_EQ(largest_proper_divisor(9), 3);
    EXPECT_EQ(largest_proper_divisor(7), 1);
}

TEST(Lone, Catalog) {
    EXPECT_EQ(lone_catalog(1), (std::vector<Word>{Word(), Word("0"), Word("1")}));
    EXPECT_EQ(lone_catalog(2).size(), 5u);
    EXPECT_EQ(lone_catalog(3).size(), 8u);
    EXPECT_EQ(lone_catalog(5).size(), 21u);
    EXPECT_THROW(lone_catalog(6), std::invalid_argument);
    EXPECT_TRUE(is_known_lone(Word("0110110")));
    EXPECT_TRUE(is_known_lone(Word("1111111")));
    EXPECT_FALSE(is_known_lone(Word("10")));
}

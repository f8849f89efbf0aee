#include <gtest/gtest.h>

#include "hsdec/invariants.hpp"
#include "sweeps.hpp"

using namespace hsdec;

namespace {
const OrbitCode kWorked("100010111001010");
const OrbitCode kFig8("10000011100");
}  // namespace

TEST(Rdir, Examples) {
    EXPECT_EQ(r_dir(OrbitCode("10"), {Word("0"), Word("1")}, Direction::Both), kHalf);
    EXPECT_EQ(r_dir(kWorked, {Word("010"), Word("011")}, Direction::Forward), Rational(1, 4));
    // The seam of 1000001 reads 11, and a sequence starting with 11 has height 1/2.
    EXPECT_EQ(r_dir(OrbitCode("1000001"), {Word("0"), Word("1")}, Direction::Both), kHalf);
    EXPECT_THROW(r_dir(kWorked, {}, Direction::Both), std::invalid_argument);
}

TEST(Rdir, PatternsAcrossTheSeam) {
    // 0110 occupies positions 3, 0, 1, 2 of 1100.
    const OrbitHeights h{OrbitCode("1100")};
    EXPECT_TRUE(h.ends_at(Word("0110"), 3));
    EXPECT_FALSE(h.ends_at(Word("0110"), 0));
    EXPECT_FALSE(h.ends_at(Word("0110"), 1));
    EXPECT_FALSE(h.ends_at(Word("0110"), 2));
    // Longer than the period: 11001 wraps fully once.
    EXPECT_TRUE(h.ends_at(Word("11001"), 1));
}

TEST(Patterns, WorkedExample) {
    EXPECT_EQ(mu_patterns(Word("1")), (std::vector<Word>{Word("010"), Word("011")}));
    EXPECT_EQ(nu_patterns(Word("1")), (std::vector<Word>{Word("010"), Word("110")}));
    EXPECT_EQ(lambda_patterns(Word("1")).size(), 4u);
}

TEST(Invariants, WorkedExample) {
    const auto inv = decoration_invariants(Word("1"), kWorked);
    EXPECT_EQ(inv.mu, Rational(1, 4));
    EXPECT_EQ(inv.nu, Rational(1, 3));
    EXPECT_EQ(inv.lambda, Rational(1, 3));
    EXPECT_EQ(inv.r, Rational(1, 3));
    EXPECT_EQ(mu(Word("1"), kWorked), Rational(1, 4));
    EXPECT_EQ(nu(Word("1"), kWorked), Rational(1, 3));
    EXPECT_EQ(lambda(Word("1"), kWorked), Rational(1, 3));
}

TEST(Invariants, Examples) {
    EXPECT_EQ(mu(Word("1"), OrbitCode("10110")), kHalf);
    EXPECT_EQ(nu(Word("1"), OrbitCode("1")), kHalf);
    EXPECT_EQ(lambda(Word("111"), OrbitCode("10111010")), kHalf);
    EXPECT_EQ(r_w(Word("111"), OrbitCode("10001011")), Rational(1, 4));
    EXPECT_EQ(r_w(Word("11"), OrbitCode("10010110")), Rational(1, 3));
    // mu is capped by the scope here; r^{11} = 1/3 comes from lambda.
    EXPECT_EQ(mu(Word("11"), OrbitCode("10010110")), Rational(2, 5));
    EXPECT_EQ(lambda(Word("11"), OrbitCode("10010110")), Rational(1, 3));
}

TEST(Invariants, Code10000011100) {
    EXPECT_EQ(r_star(kFig8), Rational(1, 3));
    const std::vector<std::pair<const char*, Rational>> want{
        {"", {1, 3}},   {"0", {1, 6}},    {"1", {1, 3}},   {"00", {1, 6}}, {"11", {1, 3}},
        {"000", {1, 6}}, {"101", {1, 3}}, {"111", {1, 3}},
    };
    for (const auto& [w, r] : want) EXPECT_EQ(r_w(Word(w), kFig8), r) << w;
}

TEST(Invariants, ReversalMuNu) {
    const Word rev = reverse_orbit(kWorked.word());
    EXPECT_EQ(nu(Word("1"), kWorked), mu(Word("1"), OrbitCode(rev)));
    EXPECT_EQ(lambda(Word("1"), kWorked), lambda(Word("1"), OrbitCode(rev)));
}

TEST(Invariants, RangeOnShortCodes) {
    for (const auto& c : sweeps::codes_up_to(9)) {
        const OrbitHeights h{OrbitCode(c)};
        const Rational rs = r_star(h);
        EXPECT_GT(rs, Rational(0, 1));
        EXPECT_LE(rs, kHalf);
        for (const auto& w : sweeps::all_words(3)) {
            const Rational qw = scope(w);
            const Rational r = r_w(w, h, qw);
            EXPECT_GT(r, Rational(0, 1)) << c << " " << w;
            EXPECT_LE(r, qw) << c << " " << w;
        }
    }
}

TEST(RStar, Examples) {
    EXPECT_EQ(r_star(OrbitCode("1000001")), kHalf);
    EXPECT_EQ(r_star(OrbitCode("10000010")), Rational(1, 6));
    EXPECT_EQ(r_star(OrbitCode("10111010")), kHalf);
}

TEST(Forces, Examples) {
    const OrbitCode R("10001011");
    EXPECT_EQ(forces(R, Word("111"), Rational(1, 3)), ForcingVerdict::Forced);
    EXPECT_EQ(forces(R, Word("111"), Rational(1, 5)), ForcingVerdict::NotForced);
    EXPECT_EQ(forces(R, Word("111"), Rational(1, 4)), ForcingVerdict::AtThreshold);
    EXPECT_THROW(forces(R, Word("11"), Rational(2, 5)), std::invalid_argument);
    EXPECT_EQ(to_string(ForcingVerdict::NotForced), "NOT-FORCED");
}

TEST(Rhe, Examples) {
    EXPECT_TRUE(rhe_is_half(OrbitCode("1001010")));
    // (10)^∞ reads ...0101010... and so contains 01010.
    EXPECT_TRUE(rhe_is_half(OrbitCode("10")));
    EXPECT_TRUE(rhe_is_half(OrbitCode("1001110")));
    // 10011 wraps to the block 01110.
    EXPECT_TRUE(rhe_is_half(OrbitCode("10011")));
    EXPECT_FALSE(rhe_is_half(OrbitCode("100110")));
    EXPECT_FALSE(rhe_is_half(OrbitCode("1000")));
    // The star decoration w_{1/3} is empty: codes c_q x y carry no such block.
    for (const auto& q : sweeps::rationals(9, Rational(0, 1), Rational(1, 3)))
        for (const char* xy : {"00", "01", "10", "11"}) {
            const Word c = cq_word(q) + xy;
            if (!is_primitive(c) || orbit_height(canonical_code(OrbitCode(c))) != q) continue;
            if (q < Rational(1, 3)) EXPECT_FALSE(rhe_is_half(OrbitCode(c))) << c;
        }
}

TEST(Invariants, SelfValue) {
    const auto r = sweeps::self_value(9);
    EXPECT_TRUE(r.ok()) << r.first;
}

TEST(Invariants, LoneLowerBound) {
    const auto r = sweeps::lone_lower_bound(12);
    EXPECT_TRUE(r.ok()) << r.first;
}

TEST(Invariants, UniversalityWitness) {
    const auto r = sweeps::universality_witness();
    EXPECT_TRUE(r.ok()) << r.first;
}

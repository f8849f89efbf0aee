#include <gtest/gtest.h>

#include "hsdec/survey.hpp"
#include "sweeps.hpp"

using namespace hsdec;

namespace {

// Primitive binary necklaces of length n: (1/n) sum_{d|n} mobius(n/d) 2^d.
std::int64_t moreau(std::int64_t n) {
    auto mobius = [](std::int64_t k) {
        int sign = 1;
        for (std::int64_t p = 2; p * p <= k; ++p)
            if (k % p == 0) {
                k /= p;
                if (k % p == 0) return 0;
                sign = -sign;
            }
        return k > 1 ? -sign : sign;
    };
    std::int64_t total = 0;
    for (std::int64_t d = 1; d <= n; ++d)
        if (n % d == 0) total += mobius(n / d) * (std::int64_t{1} << d);
    return total / n;
}

}  // namespace

TEST(Necklaces, Small) {
    EXPECT_EQ(necklaces(1), (std::vector<Word>{Word("0"), Word("1")}));
    EXPECT_EQ(necklaces(2), (std::vector<Word>{Word("10")}));
    EXPECT_EQ(necklaces(8).size(), 30u);
}

TEST(Necklaces, MoreauCounts) {
    for (std::int64_t n = 1; n <= 20; ++n) EXPECT_EQ(static_cast<std::int64_t>(necklaces(n).size()), moreau(n)) << n;
}

TEST(Necklaces, CanonicalAndDistinct) {
    for (std::size_t n = 1; n <= 12; ++n) {
        const auto codes = necklaces(n);
        for (std::size_t i = 0; i < codes.size(); ++i) {
            EXPECT_EQ(canonical_code(OrbitCode(codes[i])), codes[i]);
            if (i) EXPECT_LT(codes[i - 1], codes[i]);
        }
    }
}

TEST(Table, PeriodEight) {
    const auto t = decinv_table(8);
    const std::vector<std::pair<std::string, std::vector<std::string>>> want{
        {"10111010", {"1/2", "1/3", "1/4", "1/2", "1/5", "2/5", "1/6", "1/2", "1/2"}},
        {"1011111.", {"1/2", "1/3", "1/4", "1/2", "1/5", "2/5", "1/6", "1/2", "1/2"}},
        {"1011011.", {"1/2", "1/3", "1/4", "1/2", "1/5", "2/5", "1/6", "1/2", "1/2"}},
        {"1001.11.", {"1/2", "1/3", "1/4", "1/2", "1/5", "1/3", "1/6", "1/2", "1/2"}},
        {"1001.10.", {"1/3", "1/3", "1/4", "1/3", "1/5", "1/3", "1/6", "1/3", "1/3"}},
        {"1001101.", {"1/3", "1/3", "1/4", "1/3", "1/5", "1/3", "1/6", "1/3", "1/3"}},
        {"10001.0.", {"1/2", "1/3", "1/4", "1/2", "1/5", "2/5", "1/6", "1/2", "1/2"}},
        {"10001.1.", {"1/2", "1/4", "1/4", "1/4", "1/5", "1/4", "1/6", "1/2", "1/4"}},
        {"100001..", {"1/2", "1/5", "1/5", "1/2", "1/5", "2/5", "1/6", "1/2", "1/2"}},
        {"1000001.", {"1/6", "1/6", "1/6", "1/6", "1/6", "1/6", "1/6", "1/6", "1/6"}},
        {"1000000.", {"1/2", "1/3", "1/4", "1/2", "1/5", "2/5", "1/6", "1/2", "1/2"}},
    };
    ASSERT_EQ(t.rows.size(), want.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
        EXPECT_EQ(t.rows[i].label, want[i].first);
        std::vector<std::string> got;
        for (const auto& v : t.rows[i].values) got.push_back(v.str());
        EXPECT_EQ(got, want[i].second) << want[i].first;
    }
    std::vector<std::string> scopes;
    for (const auto& q : t.scopes) scopes.push_back(q.str());
    EXPECT_EQ(scopes, (std::vector<std::string>{"1/2", "1/3", "1/4", "1/2", "1/5", "2/5", "1/6", "1/2", "1/2"}));
    std::size_t members = 0;
    for (const auto& row : t.rows) members += row.codes.size();
    EXPECT_EQ(members, 30u);
    // Three orbits of height 1/4 and decoration 0.
    EXPECT_EQ(t.rows[6].codes, (std::vector<Word>{Word("10001001"), Word("10001100"), Word("10001101")}));
}

TEST(Table, PeriodThree) {
    const auto t = decinv_table(3);
    // 100 and 101 are both finite-order orbits of height 1/3.
    ASSERT_EQ(t.rows.size(), 1u);
    EXPECT_EQ(t.rows[0].label, "10.");
    EXPECT_THROW(decinv_table(2), std::invalid_argument);
}

TEST(Table, GroupsAgreeUpToPeriodTen) {
    const auto r = sweeps::group_equality(10);
    EXPECT_TRUE(r.ok()) << r.first;
}

TEST(Table, ColumnParsing) {
    EXPECT_TRUE(TableColumn::parse("*").star);
    EXPECT_TRUE(TableColumn::parse(".").w.empty());
    EXPECT_EQ(TableColumn::parse("101").label(), "101");
}

TEST(Scan, WorkerCountDoesNotMatter) {
    const Rational one = universality_scan(Word("1"), Rational(1, 3), 12, {0, 1, 1});
    const Rational four = universality_scan(Word("1"), Rational(1, 3), 12, {0, 1, 4});
    EXPECT_EQ(one, four);
    EXPECT_EQ(universality_scan(Word("1"), Rational(1, 3), 14, {200, 5, 1}),
              universality_scan(Word("1"), Rational(1, 3), 14, {200, 5, 3}));
}

TEST(Scan, Precondition) {
    EXPECT_THROW(universality_scan(Word("1"), kHalf, 10), std::invalid_argument);
    EXPECT_THROW(universality_scan(Word("00"), Rational(1, 4), 10), std::invalid_argument);
}

TEST(Scan, WitnessCodesCount) {
    // Every code carrying 0^4 1 0 w 0 1 0^4 has r^w below 1/4.
    const Word w("1");
    for (const auto& c : necklaces(16)) {
        const Word twice = c + c;
        if (twice.str().find("0000101010000") == std::string::npos) continue;
        EXPECT_LT(r_w(w, OrbitCode(c)), Rational(1, 4)) << c;
    }
}

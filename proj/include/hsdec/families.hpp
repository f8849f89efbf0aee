#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "height.hpp"
#include "invariants.hpp"
#include "orbit.hpp"
#include "rational.hpp"
#include "word.hpp"

namespace hsdec {

// Star decorations w_{m/n} ---------------------------------------------------

/// w_{m/n}: c_{m/n} without its leading "10" and trailing "01".
inline Word star_decoration(Rational q) {
    if (!(Rational(0, 1) < q && q < kHalf)) throw std::invalid_argument("star_decoration: q must lie in (0, 1/2)");
    const Word c = cq_word(q);
    return c.substr(2, c.size() - 4);
}

/// 0^{k1-1} 11 0^{k2} 11 ... 11 0^{km-1} from the kappas of c_{m/n}; for m = 1
/// the two end exponents refer to the same run and combine to 0^{k1-2}.
inline Word star_decoration_from_kappas(Rational q) {
    const auto kappas = cq_kappas(q);
    const std::size_t m = kappas.size();
    if (m == 1) return Word::repeat(0, static_cast<std::size_t>(kappas[0] - 2));
    Word w = Word::repeat(0, static_cast<std::size_t>(kappas[0] - 1));
    for (std::size_t i = 1; i + 1 < m; ++i) w = w + "11" + Word::repeat(0, static_cast<std::size_t>(kappas[i]));
    return w + "11" + Word::repeat(0, static_cast<std::size_t>(kappas[m - 1] - 1));
}

/// Closed form of r^{m/n}(P^{m'/n'}_{q'}).
inline Rational starforce_expected(Rational mn, Rational mpnp, Rational qp) {
    const Rational zero(0, 1);
    if (!(zero < mn && mn < kHalf && zero < mpnp && mpnp < kHalf && zero < qp && qp < mpnp))
        throw std::invalid_argument("starforce_expected: need 0 < m/n, m'/n' < 1/2 and 0 < q' < m'/n'");
    if (qp < mn && mn <= mpnp) return qp;
    return mn;
}

// The family w_i = 1^{2i+1} -----------------------------------------------

inline Word ones_decoration(std::int64_t i) {
    if (i < 0) throw std::invalid_argument("ones_decoration: i must be >= 0");
    return Word::repeat(1, static_cast<std::size_t>(2 * i + 1));
}

/// Closed form of r^j(P^i_q).
inline Rational interwi_expected(std::int64_t i, std::int64_t j, Rational q) {
    if (i < 0 || j < 0) throw std::invalid_argument("interwi_expected: i, j must be >= 0");
    if (!(Rational(0, 1) < q && q < kHalf)) throw std::invalid_argument("interwi_expected: q must lie in (0, 1/2)");
    return j >= i ? q : kHalf;
}

/// [r^{1^{2i+1}}(R) for i = 0..i_max].
inline std::vector<Rational> r_sequence(const OrbitCode& R, std::int64_t i_max) {
    if (i_max < 0) throw std::invalid_argument("r_sequence: i_max must be >= 0");
    const OrbitHeights h(R);
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(i_max + 1));
    for (std::int64_t i = 0; i <= i_max; ++i) out.push_back(r_w(ones_decoration(i), h, kHalf));
    return out;
}

/// Index from which r^i(R) is constant: floor((N-7)/2), clamped at 0.
inline std::int64_t r_sequence_stable_index(std::size_t period) {
    const auto n = static_cast<std::int64_t>(period);
    if (n < 7) return 0;
    return (n - 7) / 2;
}

enum class PaVerdict { Certified, Unknown };

inline std::string to_string(PaVerdict v) { return v == PaVerdict::Certified ? "CERTIFIED" : "UNKNOWN"; }

inline std::int64_t largest_proper_divisor(std::int64_t n) {
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return n / d;
    return n > 1 ? 1 : 0;
}

/// Pseudo-Anosov certificate: some i >= 1 has r^i(R) = m/n < r^{i-1}(R) and
/// the largest proper divisor of the period is below n + 2i + 4. Unknown means
/// only that the test does not apply.
inline PaVerdict pa_test(const OrbitCode& R) {
    const auto N = static_cast<std::int64_t>(R.period());
    const std::int64_t i_max = r_sequence_stable_index(R.period()) + 1;
    const auto seq = r_sequence(R, i_max);
    const std::int64_t d = largest_proper_divisor(N);
    for (std::int64_t i = 1; i <= i_max; ++i) {
        const Rational& ri = seq[static_cast<std::size_t>(i)];
        if (ri < seq[static_cast<std::size_t>(i - 1)] && d < ri.den() + 2 * i + 4) return PaVerdict::Certified;
    }
    return PaVerdict::Unknown;
}

// Lone decorations -----------------------------------------------------------

/// Decorations of length <= 5 known to be lone (21 of the 63).
inline constexpr std::array<std::string_view, 21> kLoneCatalog = {
    "",      "0",     "1",     "00",    "11",    "000",   "111",   "101",   "0000",  "0110",  "1111",
    "1001",  "00000", "01001", "11001", "10010", "10011", "11011", "11111", "10101", "10001",
};

inline std::vector<Word> lone_catalog(std::size_t max_len) {
    if (max_len > 5) throw std::invalid_argument("lone_catalog: catalog only covers lengths <= 5");
    std::vector<Word> out;
    for (auto s : kLoneCatalog)
        if (s.size() <= max_len) out.emplace_back(s);
    std::stable_sort(out.begin(), out.end(), [](const Word& a, const Word& b) { return a.size() < b.size(); });
    return out;
}

/// Catalog membership, or membership in one of the two infinite lone
/// families (star decorations, which include 1^{2i}, and 1^{2i+1}).
inline bool is_known_lone(const Word& w) {
    if (w.size() <= 5) {
        for (auto s : kLoneCatalog)
            if (w.str() == s) return true;
    }
    if (!w.empty() && w.count_ones() == w.size() && w.size() % 2 == 1) return true;
    // A star decoration w_{m/n} has scope m/n and 10 w 01 = c_{m/n}.
    const Word c = Word("10") + w + "01";
    const auto n = static_cast<std::int64_t>(c.size()) - 1;
    const auto ones = static_cast<std::int64_t>(c.count_ones());
    if (ones % 2 != 0) return false;
    const Rational q(ones / 2, n);
    return q.den() == n && Rational(0, 1) < q && q < kHalf && cq_word(q) == c;
}

}  // namespace hsdec

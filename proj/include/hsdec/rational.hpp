#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hsdec {

/// Reduced non-negative fraction num/den with exact ordering.
///
/// Heights, scopes and decoration invariants all live in [0, 1/2], so the
/// components stay small; comparisons still go through 128-bit products.
class Rational {
public:
    constexpr Rational() = default;

    constexpr Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    constexpr std::int64_t num() const { return num_; }
    constexpr std::int64_t den() const { return den_; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    friend constexpr bool operator==(const Rational&, const Rational&) = default;

    friend constexpr std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
        const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// "m/n"; integers print without a denominator ("0", "1").
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    static Rational parse(std::string_view text) {
        auto to_int = [&](std::string_view part) -> std::int64_t {
            if (part.empty()) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
            std::int64_t v = 0;
            std::size_t i = 0;
            bool neg = false;
            if (part[0] == '-') {
                neg = true;
                i = 1;
                if (part.size() == 1) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
            }
            for (; i < part.size(); ++i) {
                const char c = part[i];
                if (c < '0' || c > '9')
                    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
                v = v * 10 + (c - '0');
                if (v > (std::int64_t{1} << 40))
                    throw std::invalid_argument("rational component too large: '" + std::string(text) + "'");
            }
            return neg ? -v : v;
        };
        const auto slash = text.find('/');
        if (slash == std::string_view::npos) return Rational(to_int(text), 1);
        const auto den = to_int(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("malformed rational: zero denominator");
        return Rational(to_int(text.substr(0, slash)), den);
    }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

inline constexpr Rational kHalf{1, 2};

/// All reduced fractions strictly inside (lo, hi) with denominator <= max_den,
/// sorted ascending.
inline std::vector<Rational> fractions_between(Rational lo, Rational hi, std::int64_t max_den) {
    std::vector<Rational> out;
    for (std::int64_t n = 1; n <= max_den; ++n) {
        for (std::int64_t m = 0; m <= n; ++m) {
            if (std::gcd(m, n) != 1) continue;
            const Rational q(m, n);
            if (lo < q && q < hi) out.push_back(q);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace hsdec

#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "invariants.hpp"
#include "families.hpp"
#include "rational.hpp"

namespace hsdec {

/// Dense integer polynomial, constant term first, trailing zeros trimmed.
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<std::int64_t> coeffs) : c_(coeffs) { trim(); }
    explicit IntPolynomial(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPolynomial monomial(std::int64_t coeff, std::size_t degree) {
        std::vector<std::int64_t> c(degree + 1, 0);
        c[degree] = coeff;
        return IntPolynomial(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
    const std::vector<std::int64_t>& coefficients() const { return c_; }
    std::int64_t operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

    /// Horner evaluation in long double.
    long double operator()(long double x) const {
        long double acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + static_cast<long double>(*it);
        return acc;
    }

    std::int64_t eval(std::int64_t x) const {
        std::int64_t acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// x^deg · p(1/x) with deg >= degree(p): the reversed coefficient list.
    IntPolynomial reciprocal(std::size_t deg) const {
        if (static_cast<std::int64_t>(deg) < degree()) throw std::invalid_argument("reciprocal: degree too small");
        std::vector<std::int64_t> r(deg + 1, 0);
        for (std::size_t i = 0; i < c_.size(); ++i) r[deg - i] = c_[i];
        return IntPolynomial(std::move(r));
    }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<std::int64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return IntPolynomial(std::move(r));
    }

    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
        return a + b * IntPolynomial{-1};
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<std::int64_t> r(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return IntPolynomial(std::move(r));
    }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    /// "[c0, c1, ...]"
    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ", ";
            s += std::to_string(c_[i]);
        }
        return s + "]";
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<std::int64_t> c_;
};

inline std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.str(); }

/// g_i(x) = x^{2i+3}(x^3 - x^2 - x - 1) - 2
inline IntPolynomial g_poly(std::int64_t i) {
    if (i < 0) throw std::invalid_argument("g_poly: i must be >= 0");
    const auto shift = static_cast<std::size_t>(2 * i + 3);
    return IntPolynomial::monomial(1, shift) * IntPolynomial{-1, -1, -1, 1} - IntPolynomial{2};
}

/// f_{m/n}(x) = sum_{j=1}^{m-1} x^{floor(jn/m)}
inline IntPolynomial f_poly(Rational q) {
    if (!(Rational(0, 1) < q && q < kHalf)) throw std::invalid_argument("f_poly: q must lie in (0, 1/2)");
    IntPolynomial f;
    for (std::int64_t j = 1; j < q.num(); ++j)
        f = f + IntPolynomial::monomial(1, static_cast<std::size_t>(j * q.den() / q.num()));
    return f;
}

/// H^i_{m/n}(x) = x^{n+1} g_i(x) + 2x(x^2-1)(x^{2i+4}+1) f_{m/n}(x) - x^{2i+6} g_i(1/x)
inline IntPolynomial H_poly(std::int64_t i, Rational q) {
    const IntPolynomial g = g_poly(i);
    const IntPolynomial x2m1{-1, 0, 1};
    const IntPolynomial bump = IntPolynomial::monomial(1, static_cast<std::size_t>(2 * i + 4)) + IntPolynomial{1};
    return IntPolynomial::monomial(1, static_cast<std::size_t>(q.den() + 1)) * g +
           IntPolynomial{0, 2} * x2m1 * bump * f_poly(q) - g.reciprocal(static_cast<std::size_t>(2 * i + 6));
}

/// Hbar^i_{m/n}(x) = (x^n - 1) g_i(x) + 2(x^2-1)(x^{2i+4}+1)(1 + f_{m/n}(x))
inline IntPolynomial Hbar_poly(std::int64_t i, Rational q) {
    const IntPolynomial g = g_poly(i);
    const IntPolynomial x2m1{-1, 0, 1};
    const IntPolynomial bump = IntPolynomial::monomial(1, static_cast<std::size_t>(2 * i + 4)) + IntPolynomial{1};
    const IntPolynomial xn1 = IntPolynomial::monomial(1, static_cast<std::size_t>(q.den())) - IntPolynomial{1};
    return xn1 * g + IntPolynomial{2} * x2m1 * bump * (IntPolynomial{1} + f_poly(q));
}

class no_root_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Largest real root of p in (lo, hi]: scan down from hi on a 1e-3 grid for the
/// first sign change, then bisect to `tol`.
inline double largest_root(const IntPolynomial& p, double lo, double hi, double tol) {
    if (!(lo < hi)) throw std::invalid_argument("largest_root: need lo < hi");
    if (!(tol > 0)) throw std::invalid_argument("largest_root: tol must be positive");
    constexpr long double kStep = 1e-3L;
    long double top = hi;
    long double ftop = p(top);
    if (ftop == 0.0L) {
        top = hi + 1e-6L;
        ftop = p(top);
        if (ftop == 0.0L) return hi;
    }
    // The open end lo is never sampled; the last probe sits just inside it.
    const long double floor_x = static_cast<long double>(lo) + 1e-9L * (static_cast<long double>(hi) - lo);
    long double a = top;
    long double fa = ftop;
    bool found = false;
    long double b = top;
    while (a > floor_x) {
        b = a;
        const long double fb = fa;
        a = std::max(floor_x, a - kStep);
        fa = p(a);
        if (fa == 0.0L) return static_cast<double>(a);
        if ((fa < 0) != (fb < 0)) {
            found = true;
            break;
        }
    }
    if (!found) throw no_root_error("largest_root: no sign change in (" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    // Invariant: sign(p(a)) != sign(p(b)).
    long double left = a;
    long double right = b;
    const bool left_negative = p(left) < 0;
    while (right - left > static_cast<long double>(tol) / 4) {
        const long double mid = (left + right) / 2;
        const long double fm = p(mid);
        if (fm == 0.0L) return static_cast<double>(mid);
        if ((fm < 0) == left_negative)
            left = mid;
        else
            right = mid;
    }
    return static_cast<double>((left + right) / 2);
}

/// Entropy bound log(largest root of Hbar^i at r^i(R)), maximized over the
/// i <= i_max with r^i(R) < 1/2; zero when no i qualifies.
inline double entropy_lower_bound(const OrbitCode& R, std::int64_t i_max) {
    const auto rs = r_sequence(R, i_max);
    double best = 0.0;
    for (std::int64_t i = 0; i <= i_max; ++i) {
        const Rational& r = rs[static_cast<std::size_t>(i)];
        if (!(r < kHalf)) continue;
        const double root = largest_root(Hbar_poly(i, r), 1.0, 2.0, 1e-9);
        best = std::max(best, std::log(root));
    }
    return best;
}

}  // namespace hsdec

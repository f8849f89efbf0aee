#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rational.hpp"
#include "word.hpp"

namespace hsdec {

/// The cutting word c_{m/n} of length n+1: symbol i is 1 iff the segment
/// from (0,0) to (n,m) meets a horizontal integer line at some x in (i-1, i+1).
inline Word cq_word(Rational q) {
    if (!(Rational(0, 1) < q && q <= kHalf)) throw std::invalid_argument("cq_word: q must lie in (0, 1/2], got " + q.str());
    const std::int64_t m = q.num();
    const std::int64_t n = q.den();
    Word out;
    for (std::int64_t i = 0; i <= n; ++i) {
        // Crossings happen at x = k n / m for k = 0..m; test (i-1) m < k n < (i+1) m.
        bool hit = false;
        for (std::int64_t k = 0; k <= m && !hit; ++k) hit = (i - 1) * m < k * n && k * n < (i + 1) * m;
        out.push_back(hit ? 1 : 0);
    }
    return out;
}

/// d_{m/n}: the first n-1 symbols of c_{m/n}; the finite-order codes are d_{m/n}x.
inline Word finite_order_word(Rational q) {
    if (!(Rational(0, 1) < q && q < kHalf))
        throw std::invalid_argument("finite_order_word: q must lie in (0, 1/2), got " + q.str());
    return cq_word(q).substr(0, static_cast<std::size_t>(q.den() - 1));
}

/// The exponents kappa_1..kappa_m of c_{m/n} = 1 0^k1 11 0^k2 11 ... 11 0^km 1.
inline std::vector<std::int64_t> cq_kappas(Rational q) {
    const Word c = cq_word(q);
    std::vector<std::int64_t> kappas;
    std::int64_t run = 0;
    std::size_t i = 1;
    const std::size_t last = c.size() - 1;
    while (i < last) {
        if (c[i] == 0) {
            ++run;
            ++i;
        } else {
            kappas.push_back(run);
            run = 0;
            i += 2;  // interior ones come in pairs
        }
    }
    kappas.push_back(run);
    return kappas;
}

/// Decomposition c = 1 0^{k1} 1^{m1} 0^{k2} 1^{m2} ... of a sequence starting
/// with 10, where each m_i is 1 or 2 and m_i = 1 only when k_{i+1} > 0.
struct RunDecomposition {
    std::vector<std::int64_t> kappas;
    std::vector<int> mus;
    /// The sequence continues as 0^∞ after the listed runs.
    bool zero_tail = false;
};

namespace detail {

/// Lazy reader of the (kappa, mu) runs of a sequence that starts with 10.
class RunCursor {
public:
    explicit RunCursor(const Seq& c) : seq_(c), pos_(1) {}

    struct Run {
        std::optional<std::int64_t> kappa;  // nullopt: infinite run of zeros
        int mu = 0;
        std::size_t start = 0;  // index where the zero run began
    };

    Run next() {
        Run r;
        r.start = pos_;
        if (seq_.constant_from(pos_, 0)) {
            r.kappa = std::nullopt;
            return r;
        }
        std::int64_t zeros = 0;
        while (seq_[pos_] == 0) {
            ++zeros;
            ++pos_;
        }
        r.kappa = zeros;
        if (seq_[pos_ + 1] == 1) {
            r.mu = 2;
            pos_ += 2;
        } else {
            r.mu = 1;
            pos_ += 1;
        }
        return r;
    }

    /// Phase key of a run start inside the periodic part, if it is there.
    std::optional<std::size_t> phase(std::size_t start) const {
        if (start < seq_.preperiod().size()) return std::nullopt;
        return (start - seq_.preperiod().size()) % seq_.period().size();
    }

private:
    const Seq& seq_;
    std::size_t pos_;
};

}  // namespace detail

/// First `max_runs` runs of a sequence beginning with 10.
inline RunDecomposition decompose(const Seq& c, std::size_t max_runs) {
    if (c[0] != 1 || c[1] != 0) throw std::invalid_argument("decompose: sequence must start with 10");
    RunDecomposition out;
    detail::RunCursor cursor(c);
    for (std::size_t i = 0; i < max_runs; ++i) {
        const auto run = cursor.next();
        if (!run.kappa) {
            out.zero_tail = true;
            break;
        }
        out.kappas.push_back(*run.kappa);
        out.mus.push_back(run.mu);
    }
    return out;
}

/// Height q(c) in [0, 1/2] by the interval-intersection algorithm on the run
/// decomposition.
///
/// Sequences not starting with 10 have height 1/2. A 0^∞ tail ends the
/// algorithm with the lower endpoint (height 0 when it follows the leading 1).
/// When the periodic tail never produces mu = 1 and every interval so far
/// contains the limit point p/(2p+k) of the tail's run cycle in its closure,
/// the intersection shrinks onto that point and it is the height.
inline Rational height(const Seq& c) {
    if (c[0] == 0 || c[1] == 1) return kHalf;

    detail::RunCursor cursor(c);
    std::int64_t r = 0;
    std::int64_t kappa_sum = 0;

    auto first = cursor.next();
    if (!first.kappa) return Rational(0, 1);

    auto lower_of = [](std::int64_t rr, std::int64_t ks) { return Rational(rr, 2 * rr + ks); };
    auto upper_of = [](std::int64_t rr, std::int64_t ks) { return Rational(rr, 2 * rr - 1 + ks); };

    r = 1;
    kappa_sum = *first.kappa;
    Rational x = lower_of(r, kappa_sum);
    Rational y = upper_of(r, kappa_sum);
    int mu = first.mu;

    // Cycle detection over run starts in the periodic part.
    std::map<std::size_t, std::pair<std::int64_t, std::int64_t>> seen;  // phase -> (r, kappa_sum before run)
    std::vector<std::pair<Rational, Rational>> intervals{{x, y}};
    if (auto ph = cursor.phase(first.start)) seen[*ph] = {1, 0};
    bool cycle_checked = false;

    constexpr std::int64_t kMaxRuns = 1'000'000;
    while (r < kMaxRuns) {
        if (mu == 1) return y;

        const auto run = cursor.next();
        if (!run.kappa) return x;

        const std::int64_t r_next = r + 1;
        const std::int64_t ks_next = kappa_sum + *run.kappa;
        const Rational a = lower_of(r_next, ks_next);
        const Rational b = upper_of(r_next, ks_next);
        const Rational nx = max(x, a);
        const Rational ny = min(y, b);
        if (nx >= ny) {
            if (b <= x) return x;
            return y;
        }

        if (!cycle_checked) {
            if (auto ph = cursor.phase(run.start)) {
                auto it = seen.find(*ph);
                if (it != seen.end()) {
                    cycle_checked = true;
                    const std::int64_t p = r_next - it->second.first;
                    const std::int64_t k = kappa_sum - it->second.second;
                    const Rational limit(p, 2 * p + k);
                    bool terminates = false;
                    for (const auto& [lo, hi] : intervals)
                        if (lo > limit || hi < limit) terminates = true;
                    if (!terminates) return limit;
                } else {
                    seen[*ph] = {r_next, kappa_sum};
                }
            }
            intervals.emplace_back(a, b);
        }

        r = r_next;
        kappa_sum = ks_next;
        x = nx;
        y = ny;
        mu = run.mu;
    }
    throw std::logic_error("height: run decomposition did not terminate for " + c.str());
}

/// Thrown by height_oracle when the descent cannot pin the height within the
/// requested denominator bound.
class denominator_bound_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reference height computed from the defining property alone: Stern-Brocot
/// descent on [0, 1/2] comparing c against (c_q 0)^∞ with unimodal_cmp.
/// Exact whenever den(q(c)) <= max_den.
inline Rational height_oracle(const Seq& c, std::int64_t max_den) {
    if (max_den < 2) throw std::invalid_argument("height_oracle: max_den must be >= 2");

    // +1: c lies below the comparison sequence (so q <= q(c)); -1: above; 0: equal.
    auto probe = [&](Rational q) {
        const Seq xq = Seq::periodic(cq_word(q) + "0");
        const auto ord = unimodal_cmp(c, xq);
        if (ord < 0) return 1;
        if (ord > 0) return -1;
        return 0;
    };

    Rational lo(0, 1);
    Rational hi = kHalf;
    switch (probe(hi)) {
        case 1:
        case 0:
            return hi;
        default:
            break;
    }
    while (lo.den() + hi.den() <= max_den) {
        const Rational mid(lo.num() + hi.num(), lo.den() + hi.den());
        const int s = probe(mid);
        if (s == 0) return mid;
        if (s > 0)
            lo = mid;
        else
            hi = mid;
    }
    // q(c) is lo or hi unless its denominator exceeds the bound. Continue the
    // descent: the answer is confirmed once a further bound's worth of steps all
    // move towards the same endpoint.
    const Rational lo0 = lo;
    const Rational hi0 = hi;
    const std::int64_t limit = 4 * max_den + 8;
    while (lo.den() + hi.den() <= limit) {
        const Rational mid(lo.num() + hi.num(), lo.den() + hi.den());
        const int s = probe(mid);
        if (s == 0) throw denominator_bound_error("height_oracle: height " + mid.str() + " exceeds denominator bound");
        if (s > 0)
            lo = mid;
        else
            hi = mid;
        if (lo != lo0 && hi != hi0)
            throw denominator_bound_error("height_oracle: height denominator exceeds " + std::to_string(max_den));
    }
    return lo == lo0 ? lo0 : hi0;
}

/// Scope q_w: least height over the shifts of (10w0)^∞.
inline Rational scope(const Word& w) {
    const Word block = Word("10") + w + "0";
    Rational best = kHalf;
    for (std::size_t i = 0; i <= w.size() + 2; ++i) best = min(best, height(Seq::periodic(rotate(block, i))));
    return best;
}

/// Checks q(1 0^{k_r+1} 11 0^{k_{r+1}} ... 11 0^{k_m} 1 · f) <= m/n for the
/// kappas of c_{m/n}; always true, so useful only as a property check.
inline bool starlem_check(Rational q, std::int64_t r, const Seq& f) {
    const auto kappas = cq_kappas(q);
    const auto m = static_cast<std::int64_t>(kappas.size());
    if (r < 1 || r > m) throw std::invalid_argument("starlem_check: r must lie in [1, m]");
    Word head("1");
    head = head + Word::repeat(0, static_cast<std::size_t>(kappas[static_cast<std::size_t>(r - 1)] + 1));
    for (std::int64_t i = r; i < m; ++i) head = head + "11" + Word::repeat(0, static_cast<std::size_t>(kappas[static_cast<std::size_t>(i)]));
    head = head + "1";
    return height(f.prepend(head)) <= q;
}

}  // namespace hsdec

#pragma once

#include <stdexcept>
#include <string>

#include "height.hpp"
#include "orbit.hpp"
#include "rational.hpp"
#include "word.hpp"

namespace hsdec {

enum class Disk { A, B, C, D };

inline char to_char(Disk d) { return "ABCD"[static_cast<int>(d)]; }

/// Disk bounded by stable/unstable segments through the four orbits P^w_q.
struct DiskSpec {
    Disk which = Disk::C;
    Rational q;
    Word w;
};

/// Raised when a tested point lies on one of the P^w_q orbits, i.e. on a disk
/// boundary.
class boundary_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

namespace detail {

/// Strict s ≻ t; equality means the point sits on a P^w_q orbit.
inline bool strictly_above(const Seq& s, const Seq& t) {
    const auto ord = unimodal_cmp(s, t);
    if (ord == 0) throw boundary_error("point lies on a P^w_q orbit: " + s.str());
    return ord > 0;
}

}  // namespace detail

/// Interior membership for A_q, B_q, C_q, D_q, with x = b·f:
///   C: f ≻ (c_q 0 w 0)^∞  and σ(b) ≻ (ŵ 0 c_q 1)^∞
///   D: f ≻ (c_q 1 w 1)^∞  and σ(b) ≻ (ŵ 1 c_q 0)^∞
///   A: b ≻ (c_q 0 ŵ 0)^∞  and σ(f) ≻ (w 0 c_q 1)^∞
///   B: b ≻ (c_q 1 ŵ 1)^∞  and σ(f) ≻ (w 1 c_q 0)^∞
inline bool in_disk(const DiskSpec& spec, const Seq& b, const Seq& f) {
    const Word cq = cq_word(spec.q);
    const Word& w = spec.w;
    const Word wr = reverse(w);
    auto P = [](const Word& u) { return Seq::periodic(u); };
    switch (spec.which) {
        case Disk::C:
            return detail::strictly_above(f, P(cq + "0" + w + "0")) &&
                   detail::strictly_above(b.drop(1), P(wr + "0" + cq + "1"));
        case Disk::D:
            return detail::strictly_above(f, P(cq + "1" + w + "1")) &&
                   detail::strictly_above(b.drop(1), P(wr + "1" + cq + "0"));
        case Disk::A:
            return detail::strictly_above(b, P(cq + "0" + wr + "0")) &&
                   detail::strictly_above(f.drop(1), P(w + "0" + cq + "1"));
        case Disk::B:
            return detail::strictly_above(b, P(cq + "1" + wr + "1")) &&
                   detail::strictly_above(f.drop(1), P(w + "1" + cq + "0"));
    }
    return false;
}

inline bool in_disk(const DiskSpec& spec, const OrbitPoint& p) {
    return in_disk(spec, p.backward_seq(), p.forward_seq());
}

struct DiskCounts {
    int a = 0;
    int b = 0;
    int c = 0;
    int d = 0;

    friend bool operator==(const DiskCounts&, const DiskCounts&) = default;
};

inline bool is_decorated_orbit(const OrbitCode& R, Rational q, const Word& w) {
    const Word canon = canonical_code(R);
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
            const Word c = decorated_code(q, w, x, y);
            if (c.size() == canon.size() && is_primitive(c) && canonical_code(OrbitCode(c)) == canon) return true;
        }
    return false;
}

/// Number of points of R in the interior of each disk.
inline DiskCounts intersection_counts(const OrbitCode& R, const Word& w, Rational q) {
    if (is_decorated_orbit(R, q, w))
        throw boundary_error("intersection_counts: R = " + R.word().str() + " is one of the P^w_q orbits");
    DiskCounts out;
    for (std::size_t i = 0; i < R.period(); ++i) {
        const OrbitPoint p(R, i);
        const Seq b = p.backward_seq();
        const Seq f = p.forward_seq();
        out.a += in_disk({Disk::A, q, w}, b, f);
        out.b += in_disk({Disk::B, q, w}, b, f);
        out.c += in_disk({Disk::C, q, w}, b, f);
        out.d += in_disk({Disk::D, q, w}, b, f);
    }
    return out;
}

/// Disk-intersection forcing criterion: R forces P^w_q iff R meets A_q and C_q
/// (w even) or B_q and D_q (w odd). Requires den(q) > 2|R|, and the caller
/// vouches that w is lone and q in Q^w.
inline bool forcing_oracle(const OrbitCode& R, const Word& w, Rational q) {
    if (q.den() <= 2 * static_cast<std::int64_t>(R.period()))
        throw std::invalid_argument("forcing_oracle: need den(q) > 2|R|, got " + q.str() + " with |R| = " +
                                    std::to_string(R.period()));
    const Rational qw = scope(w);
    if (!(Rational(0, 1) < q && q < qw)) throw std::invalid_argument("forcing_oracle: q must lie in (0, q_w)");
    const DiskCounts k = intersection_counts(R, w, q);
    if (is_even(w)) return k.a > 0 && k.c > 0;
    return k.b > 0 && k.d > 0;
}

}  // namespace hsdec

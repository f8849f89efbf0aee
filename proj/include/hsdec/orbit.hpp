#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "height.hpp"
#include "rational.hpp"
#include "word.hpp"

namespace hsdec {

/// Rotation of the cyclic word whose periodic sequence is unimodal-maximal,
/// i.e. the itinerary of the rightmost point of the orbit.
inline Word canonical_code(const OrbitCode& cyc) {
    const Word& w = cyc.word();
    Word best = w;
    Seq best_seq = Seq::periodic(w);
    for (std::size_t i = 1; i < w.size(); ++i) {
        Word rot = rotate(w, i);
        Seq s = Seq::periodic(rot);
        if (unimodal_cmp(s, best_seq) > 0) {
            best = std::move(rot);
            best_seq = std::move(s);
        }
    }
    return best;
}

inline bool is_paired(const Word& code) { return is_primitive(flip_last(code)); }

inline Rational orbit_height(const Word& code) {
    if (code.back() == 1 && is_paired(code)) return height(Seq::periodic(flip_last(code)));
    return height(Seq::periodic(code));
}

/// Canonical code of the orbit containing the point with itinerary reverse(code)^∞.
inline Word reverse_orbit(const Word& code) { return canonical_code(OrbitCode(reverse(code))); }

enum class OrbitKind { FixedPoint, PeriodTwo, FiniteOrder, NBT, ReducibleNBTHalf, Decorated };

inline std::string to_string(OrbitKind k) {
    switch (k) {
        case OrbitKind::FixedPoint: return "fixed-point";
        case OrbitKind::PeriodTwo: return "period-two";
        case OrbitKind::FiniteOrder: return "finite-order";
        case OrbitKind::NBT: return "nbt";
        case OrbitKind::ReducibleNBTHalf: return "reducible-nbt-half";
        case OrbitKind::Decorated: return "decorated";
    }
    return "unknown";
}

/// Height/decoration class of a horseshoe periodic orbit.  `height` is set for
/// every kind; `decoration` only for Decorated.
struct Classification {
    OrbitKind kind = OrbitKind::FixedPoint;
    Rational height;
    std::optional<Word> decoration;
    int fixed_symbol = 0;  // FixedPoint only

    friend bool operator==(const Classification&, const Classification&) = default;
};

class classification_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Decoration of a code of height q: the unimodal-maximal rotation beginning
/// with c_q is read as c_q x w y.
inline Word extract_decoration(const Word& code, Rational q) {
    const Word cq = cq_word(q);
    const std::size_t n = code.size();
    std::optional<Word> best;
    for (std::size_t i = 0; i < n; ++i) {
        Word rot = rotate(code, i);
        if (rot.substr(0, cq.size()) != cq) continue;
        if (!best || unimodal_cmp(Seq::periodic(rot), Seq::periodic(*best)) > 0) best = std::move(rot);
    }
    if (!best) throw classification_error("no rotation of " + code.str() + " begins with c_q = " + cq.str());
    return best->substr(cq.size() + 1, n - cq.size() - 2);
}

inline Classification classify(const Word& code) {
    if (!is_primitive(code)) throw std::invalid_argument("classify: code must be primitive: '" + code.str() + "'");
    const std::size_t period = code.size();
    Classification out;
    out.height = orbit_height(code);
    if (period == 1) {
        out.kind = OrbitKind::FixedPoint;
        out.fixed_symbol = code[0];
        return out;
    }
    if (period == 2) {
        out.kind = OrbitKind::PeriodTwo;
        return out;
    }
    const Rational q = out.height;
    if (q == Rational(0, 1)) throw classification_error("classify: zero height for " + code.str());
    const auto n = static_cast<std::size_t>(q.den());
    if (period == n) {
        out.kind = OrbitKind::FiniteOrder;
    } else if (period == n + 2) {
        out.kind = q < kHalf ? OrbitKind::NBT : OrbitKind::ReducibleNBTHalf;
    } else if (period >= n + 3) {
        out.kind = OrbitKind::Decorated;
        out.decoration = extract_decoration(code, q);
    } else {
        throw classification_error("classify: period " + std::to_string(period) + " incompatible with height " + q.str());
    }
    return out;
}

/// Number of the words c_q x w y (x, y in {0,1}) that are primitive and have
/// orbit height exactly q.
inline int orbit_exists(Rational q, const Word& w) {
    if (!(Rational(0, 1) < q && q <= kHalf)) throw std::invalid_argument("orbit_exists: q must lie in (0, 1/2]");
    const Word cq = cq_word(q);
    int count = 0;
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            Word c = cq;
            c.push_back(x);
            c = c + w;
            c.push_back(y);
            if (!is_primitive(c)) continue;
            if (orbit_height(canonical_code(OrbitCode(c))) == q) ++count;
        }
    }
    return count;
}

/// Sufficient test for P^w_q to be pseudo-Anosov: prime period den(q)+|w|+3.
inline bool q_in_Qw_sufficient(Rational q, const Word& w) {
    return is_prime(q.den() + static_cast<std::int64_t>(w.size()) + 3);
}

/// One code of P^w_q, namely c_q x w y.
inline Word decorated_code(Rational q, const Word& w, int x = 0, int y = 0) {
    Word c = cq_word(q);
    c.push_back(x);
    c = c + w;
    c.push_back(y);
    return c;
}

/// Canonical code of some orbit of height q and decoration w: the first
/// c_q x w y (x, y = 00, 01, 10, 11) that is primitive with height q.
inline std::optional<Word> family_member(Rational q, const Word& w) {
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
            const Word c = decorated_code(q, w, x, y);
            if (!is_primitive(c)) continue;
            Word canon = canonical_code(OrbitCode(c));
            if (orbit_height(canon) == q) return canon;
        }
    return std::nullopt;
}

}  // namespace hsdec

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "height.hpp"
#include "orbit.hpp"
#include "rational.hpp"
#include "word.hpp"

namespace hsdec {

enum class Direction { Forward, Backward, Both };

/// Heights of the forward and backward sequences at every point of an orbit.
///
/// forward[i] is q(f) for f read from symbol i; backward[i] is q(b) for b read
/// leftward from symbol i-1. Building this once lets all invariants of a code
/// share the height evaluations.
class OrbitHeights {
public:
    explicit OrbitHeights(OrbitCode code) : code_(std::move(code)) {
        const std::size_t n = code_.period();
        forward_.reserve(n);
        backward_.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            forward_.push_back(height(Seq::periodic(rotate(code_.word(), i))));
            backward_.push_back(height(Seq::periodic(OrbitPoint::backward_word(code_.word(), i))));
        }
    }

    const OrbitCode& code() const { return code_; }
    const Rational& forward(std::size_t i) const { return forward_[i % forward_.size()]; }
    const Rational& backward(std::size_t i) const { return backward_[i % backward_.size()]; }

    /// Does v occupy positions i-|v| .. i-1 (cyclically)?
    bool ends_at(const Word& v, std::size_t i) const {
        const std::size_t n = code_.period();
        const std::size_t len = v.size();
        for (std::size_t j = 0; j < len; ++j) {
            const std::size_t pos = (i + (len / n + 1) * n - len + j) % n;
            if (code_[pos] != v[j]) return false;
        }
        return true;
    }

private:
    OrbitCode code_;
    std::vector<Rational> forward_;
    std::vector<Rational> backward_;
};

/// Directional minimum over occurrences: for every v in V and every split
/// point i with the shifted itinerary of the form  b v · f, take q(f), q(b) or
/// max(q(b), q(f)); non-matching pairs contribute 1/2.
inline Rational r_dir(const OrbitHeights& h, const std::vector<Word>& V, Direction dir) {
    if (V.empty()) throw std::invalid_argument("r_dir: pattern set must be nonempty");
    const std::size_t n = h.code().period();
    Rational best = kHalf;
    for (const Word& v : V) {
        if (v.empty()) throw std::invalid_argument("r_dir: patterns must be nonempty");
        for (std::size_t i = 0; i < n; ++i) {
            if (!h.ends_at(v, i)) continue;
            const std::size_t b_at = (i + (v.size() / n + 1) * n - v.size()) % n;
            Rational val;
            switch (dir) {
                case Direction::Forward: val = h.forward(i); break;
                case Direction::Backward: val = h.backward(b_at); break;
                case Direction::Both: val = max(h.forward(i), h.backward(b_at)); break;
            }
            best = min(best, val);
        }
    }
    return best;
}

inline Rational r_dir(const OrbitCode& code, const std::vector<Word>& V, Direction dir) {
    return r_dir(OrbitHeights(code), V, dir);
}

/// { flip_first(v) x : v a nonempty even final subword of prepend_even(w) }.
inline std::vector<Word> mu_patterns(const Word& w) {
    std::vector<Word> V;
    for (const Word& v : even_final_subwords(prepend_even(w)))
        for (const char* x : {"0", "1"}) V.push_back(flip_first(v) + x);
    return V;
}

/// { x flip_last(v) : v a nonempty even initial subword of append_even(w) }.
inline std::vector<Word> nu_patterns(const Word& w) {
    std::vector<Word> V;
    for (const Word& v : even_initial_subwords(append_even(w)))
        for (const char* x : {"0", "1"}) V.push_back(x + flip_last(v));
    return V;
}

inline std::vector<Word> lambda_patterns(const Word& w) {
    return {"0" + w + "0", "0" + w + "1", "1" + w + "0", "1" + w + "1"};
}

/// mu, nu, lambda and the w-depth r = min(lambda, max(mu, nu)) of one orbit.
struct DecorationInvariants {
    Rational mu;
    Rational nu;
    Rational lambda;
    Rational r;
};

inline DecorationInvariants decoration_invariants(const Word& w, const OrbitHeights& h, Rational qw) {
    DecorationInvariants out;
    out.mu = min(qw, r_dir(h, mu_patterns(w), Direction::Forward));
    out.nu = min(qw, r_dir(h, nu_patterns(w), Direction::Backward));
    out.lambda = min(qw, r_dir(h, lambda_patterns(w), Direction::Both));
    out.r = min(out.lambda, max(out.mu, out.nu));
    return out;
}

inline DecorationInvariants decoration_invariants(const Word& w, const OrbitHeights& h) {
    return decoration_invariants(w, h, scope(w));
}

inline DecorationInvariants decoration_invariants(const Word& w, const OrbitCode& code) {
    return decoration_invariants(w, OrbitHeights(code));
}

inline Rational mu(const Word& w, const OrbitCode& code) {
    return min(scope(w), r_dir(code, mu_patterns(w), Direction::Forward));
}

inline Rational nu(const Word& w, const OrbitCode& code) {
    return min(scope(w), r_dir(code, nu_patterns(w), Direction::Backward));
}

inline Rational lambda(const Word& w, const OrbitCode& code) {
    return min(scope(w), r_dir(code, lambda_patterns(w), Direction::Both));
}

/// The w-depth r^w(R).
inline Rational r_w(const Word& w, const OrbitCode& code) { return decoration_invariants(w, code).r; }

inline Rational r_w(const Word& w, const OrbitHeights& h, Rational qw) { return decoration_invariants(w, h, qw).r; }

/// NBT invariant r^*.
inline Rational r_star(const OrbitHeights& h) { return min(kHalf, r_dir(h, {Word("0"), Word("1")}, Direction::Both)); }

inline Rational r_star(const OrbitCode& code) { return r_star(OrbitHeights(code)); }

enum class ForcingVerdict { Forced, NotForced, AtThreshold };

inline std::string to_string(ForcingVerdict v) {
    switch (v) {
        case ForcingVerdict::Forced: return "FORCED";
        case ForcingVerdict::NotForced: return "NOT-FORCED";
        case ForcingVerdict::AtThreshold: return "THRESHOLD";
    }
    return "?";
}

/// Does R force P^w_q?  Valid for lone w and q in Q^w; the caller vouches for
/// both.
inline ForcingVerdict forces(const OrbitCode& R, const Word& w, Rational q) {
    const Rational qw = scope(w);
    if (!(Rational(0, 1) < q && q < qw))
        throw std::invalid_argument("forces: q must lie in (0, q_w) = (0, " + qw.str() + ")");
    const Rational r = r_w(w, OrbitHeights(R), qw);
    if (q > r) return ForcingVerdict::Forced;
    if (q < r) return ForcingVerdict::NotForced;
    return ForcingVerdict::AtThreshold;
}

/// Cyclic occurrence of v anywhere in the bi-infinite periodic itinerary.
inline bool contains_cyclic(const OrbitCode& code, const Word& v) {
    const std::size_t n = code.period();
    for (std::size_t i = 0; i < n; ++i) {
        bool ok = true;
        for (std::size_t j = 0; j < v.size() && ok; ++j) ok = code[i + j] == v[j];
        if (ok) return true;
    }
    return false;
}

/// Right endpoint of the rotation interval equals 1/2: the itinerary contains
/// 01010 or 0 1^{2m+1} 0 for some m >= 1.
inline bool rhe_is_half(const OrbitCode& code) {
    if (contains_cyclic(code, Word("01010"))) return true;
    const std::size_t n = code.period();
    std::size_t zero = n;
    for (std::size_t i = 0; i < n; ++i)
        if (code[i] == 0) {
            zero = i;
            break;
        }
    if (zero == n) return false;
    // Walk once around from a zero, measuring maximal runs of ones.
    std::size_t run = 0;
    for (std::size_t j = 1; j <= n; ++j) {
        if (code[zero + j] == 1) {
            ++run;
        } else {
            if (run >= 3 && run % 2 == 1) return true;
            run = 0;
        }
    }
    return false;
}

}  // namespace hsdec

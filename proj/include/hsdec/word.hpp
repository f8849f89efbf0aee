#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hsdec {

enum class Parity { Even, Odd };

/// Finite word over {0,1}. Stored as the ASCII characters '0'/'1' so that
/// words print and concatenate cheaply; indexing yields the symbol as 0 or 1.
class Word {
public:
    Word() = default;

    explicit Word(std::string_view bits) : bits_(bits) {
        for (char c : bits_)
            if (c != '0' && c != '1')
                throw std::invalid_argument("malformed word: '" + std::string(bits) + "'");
    }

    static Word repeat(int symbol, std::size_t count) {
        Word w;
        w.bits_.assign(count, symbol ? '1' : '0');
        return w;
    }

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    int operator[](std::size_t i) const { return bits_[i] == '1'; }
    int back() const { return bits_.back() == '1'; }

    const std::string& str() const { return bits_; }

    Word substr(std::size_t pos, std::size_t len = std::string::npos) const {
        Word w;
        w.bits_ = bits_.substr(pos, len);
        return w;
    }

    void push_back(int symbol) { bits_.push_back(symbol ? '1' : '0'); }

    std::size_t count_ones() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), '1')); }

    friend Word operator+(const Word& a, const Word& b) {
        Word w;
        w.bits_ = a.bits_ + b.bits_;
        return w;
    }
    friend Word operator+(const Word& a, std::string_view b) { return a + Word(b); }
    friend Word operator+(std::string_view a, const Word& b) { return Word(a) + b; }

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::string bits_;
};

inline std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

inline Parity parity(const Word& w) { return w.count_ones() % 2 == 0 ? Parity::Even : Parity::Odd; }
inline bool is_even(const Word& w) { return parity(w) == Parity::Even; }

inline Word reverse(const Word& w) {
    std::string s = w.str();
    std::reverse(s.begin(), s.end());
    return Word(s);
}

inline Word flip_first(const Word& w) {
    if (w.empty()) throw std::invalid_argument("flip_first: empty word");
    std::string s = w.str();
    s.front() = s.front() == '1' ? '0' : '1';
    return Word(s);
}

inline Word flip_last(const Word& w) {
    if (w.empty()) throw std::invalid_argument("flip_last: empty word");
    std::string s = w.str();
    s.back() = s.back() == '1' ? '0' : '1';
    return Word(s);
}

/// w followed by the symbol that makes the result even.
inline Word append_even(const Word& w) {
    Word out = w;
    out.push_back(is_even(w) ? 0 : 1);
    return out;
}

/// w preceded by the symbol that makes the result even.
inline Word prepend_even(const Word& w) { return Word(is_even(w) ? "0" : "1") + w; }

/// Non-empty even suffixes of w, shortest first.
inline std::vector<Word> even_final_subwords(const Word& w) {
    std::vector<Word> out;
    for (std::size_t len = 1; len <= w.size(); ++len) {
        Word v = w.substr(w.size() - len);
        if (is_even(v)) out.push_back(std::move(v));
    }
    return out;
}

/// Non-empty even prefixes of w, shortest first.
inline std::vector<Word> even_initial_subwords(const Word& w) {
    std::vector<Word> out;
    for (std::size_t len = 1; len <= w.size(); ++len) {
        Word v = w.substr(0, len);
        if (is_even(v)) out.push_back(std::move(v));
    }
    return out;
}

/// Smallest p dividing |w| with w = u^{|w|/p}. Zero for the empty word.
inline std::size_t least_period(const Word& w) {
    const std::size_t n = w.size();
    for (std::size_t p = 1; p <= n; ++p) {
        if (n % p != 0) continue;
        bool ok = true;
        for (std::size_t i = p; i < n && ok; ++i) ok = w[i] == w[i - p];
        if (ok) return p;
    }
    return 0;
}

inline bool is_primitive(const Word& w) { return !w.empty() && least_period(w) == w.size(); }

/// Cyclic left rotation: result starts at symbol k of w.
inline Word rotate(const Word& w, std::size_t k) {
    if (w.empty()) return w;
    k %= w.size();
    return w.substr(k) + w.substr(0, k);
}

/// One-sided eventually periodic sequence  preperiod · period^∞.
///
/// Always normalized: the period is primitive and the preperiod is as short
/// as possible, so two Seq values denote the same sequence iff they compare
/// equal.
class Seq {
public:
    Seq(Word preperiod, Word period) : pre_(std::move(preperiod)), per_(std::move(period)) {
        if (per_.empty()) throw std::invalid_argument("Seq: empty period");
        normalize();
    }

    static Seq periodic(const Word& period) { return Seq(Word(), period); }

    /// Parses "PRE(PER)" or "(PER)".
    static Seq parse(std::string_view text) {
        const auto open = text.find('(');
        if (open == std::string_view::npos || text.empty() || text.back() != ')')
            throw std::invalid_argument("malformed sequence: '" + std::string(text) + "'");
        return Seq(Word(text.substr(0, open)), Word(text.substr(open + 1, text.size() - open - 2)));
    }

    const Word& preperiod() const { return pre_; }
    const Word& period() const { return per_; }

    int operator[](std::size_t i) const {
        if (i < pre_.size()) return pre_[i];
        return per_[(i - pre_.size()) % per_.size()];
    }

    /// True when every symbol from index i on equals `symbol`.
    bool constant_from(std::size_t i, int symbol) const {
        if (per_.size() != 1 || per_[0] != symbol) return false;
        return i >= pre_.size() || [&] {
            for (std::size_t j = i; j < pre_.size(); ++j)
                if (pre_[j] != symbol) return false;
            return true;
        }();
    }

    /// The sequence with its first k symbols removed.
    Seq drop(std::size_t k) const {
        if (k <= pre_.size()) return Seq(pre_.substr(k), per_);
        return Seq(Word(), rotate(per_, (k - pre_.size()) % per_.size()));
    }

    /// u·this.
    Seq prepend(const Word& u) const { return Seq(u + pre_, per_); }

    std::string str() const { return pre_.str() + "(" + per_.str() + ")"; }

    friend bool operator==(const Seq&, const Seq&) = default;

private:
    void normalize() {
        const std::size_t p = least_period(per_);
        if (p < per_.size()) per_ = per_.substr(0, p);
        while (!pre_.empty() && pre_.back() == per_.back()) {
            per_ = rotate(per_, per_.size() - 1);
            pre_ = pre_.substr(0, pre_.size() - 1);
        }
    }

    Word pre_;
    Word per_;
};

inline std::ostream& operator<<(std::ostream& os, const Seq& s) { return os << s.str(); }

/// Number of leading symbols that decides equality of s and t: sequences that
/// agree this far agree everywhere (Fine and Wilf on the periodic tails).
inline std::size_t comparison_bound(const Seq& s, const Seq& t) {
    return std::max(s.preperiod().size(), t.preperiod().size()) + s.period().size() + t.period().size();
}

/// Unimodal (parity-twisted lexicographic) order.  s precedes t iff at the
/// first disagreement the common prefix is even and s has the smaller symbol,
/// or the prefix is odd and s has the larger one.
inline std::strong_ordering unimodal_cmp(const Seq& s, const Seq& t) {
    const std::size_t bound = comparison_bound(s, t);
    bool odd = false;
    for (std::size_t i = 0; i < bound; ++i) {
        const int a = s[i];
        const int b = t[i];
        if (a != b) {
            const bool s_smaller_symbol = a < b;
            return (s_smaller_symbol != odd) ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        odd ^= (a == 1);
    }
    return std::strong_ordering::equal;
}

inline bool unimodal_less(const Seq& s, const Seq& t) { return unimodal_cmp(s, t) < 0; }

/// Primitive cyclic word: the code of a horseshoe periodic orbit up to rotation.
class OrbitCode {
public:
    explicit OrbitCode(Word cyclic) : word_(std::move(cyclic)) {
        if (!is_primitive(word_))
            throw std::invalid_argument("orbit code must be a nonempty primitive word: '" + word_.str() + "'");
    }
    explicit OrbitCode(std::string_view bits) : OrbitCode(Word(bits)) {}

    const Word& word() const { return word_; }
    std::size_t period() const { return word_.size(); }
    int operator[](std::size_t i) const { return word_[i % word_.size()]; }

    friend bool operator==(const OrbitCode&, const OrbitCode&) = default;

private:
    Word word_;
};

inline std::ostream& operator<<(std::ostream& os, const OrbitCode& c) { return os << c.word(); }

/// A point of a periodic orbit: its itinerary is the code read from `offset`,
/// split as b·f with f starting at `offset`.
class OrbitPoint {
public:
    OrbitPoint(OrbitCode code, std::size_t offset) : code_(std::move(code)), offset_(offset) {
        if (offset_ >= code_.period()) throw std::invalid_argument("OrbitPoint: offset out of range");
    }

    const OrbitCode& code() const { return code_; }
    std::size_t offset() const { return offset_; }

    OrbitPoint shift(std::int64_t k) const {
        const auto n = static_cast<std::int64_t>(code_.period());
        const auto off = ((static_cast<std::int64_t>(offset_) + k) % n + n) % n;
        return OrbitPoint(code_, static_cast<std::size_t>(off));
    }

    /// f: symbols offset, offset+1, ...
    Seq forward_seq() const { return Seq::periodic(rotate(code_.word(), offset_)); }

    /// b: symbols offset-1, offset-2, ... (read leftward).
    Seq backward_seq() const { return Seq::periodic(backward_word(code_.word(), offset_)); }

    /// One period of the leftward reading starting just before `offset`.
    static Word backward_word(const Word& cyclic, std::size_t offset) {
        const std::size_t n = cyclic.size();
        Word b;
        for (std::size_t j = 0; j < n; ++j) b.push_back(cyclic[(offset + n - 1 - j) % n]);
        return b;
    }

private:
    OrbitCode code_;
    std::size_t offset_;
};

}  // namespace hsdec

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "height.hpp"
#include "invariants.hpp"
#include "orbit.hpp"
#include "rational.hpp"
#include "word.hpp"

namespace hsdec {

/// Canonical codes of all primitive cyclic words of length n, each once,
/// sorted lexicographically. Lyndon words via the FKM algorithm.
inline std::vector<Word> necklaces(std::size_t n) {
    if (n == 0) throw std::invalid_argument("necklaces: n must be >= 1");
    std::vector<Word> out;
    std::vector<int> a(n + 1, 0);
    std::size_t p = 1;
    // a[1..n] runs over the prenecklaces; p is the length of the current Lyndon prefix.
    for (;;) {
        if (p == n) {
            Word w;
            for (std::size_t i = 1; i <= n; ++i) w.push_back(a[i]);
            out.push_back(canonical_code(OrbitCode(w)));
        }
        std::size_t i = n;
        while (i >= 1 && a[i] == 1) --i;
        if (i == 0) break;
        a[i] = 1;
        for (std::size_t j = i + 1; j <= n; ++j) a[j] = a[j - i];
        p = i;
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Column of a decoration table: a decoration word, or the NBT column.
struct TableColumn {
    bool star = false;
    Word w;

    std::string label() const { return star ? "*" : (w.empty() ? "." : w.str()); }

    /// "*" is the NBT column, "." the empty decoration.
    static TableColumn parse(const std::string& s) {
        if (s == "*") return {true, Word()};
        if (s == ".") return {false, Word()};
        return {false, Word(s)};
    }

    Rational column_scope() const { return star ? kHalf : scope(w); }
};

inline std::vector<TableColumn> default_table_columns() {
    std::vector<TableColumn> cols{{true, Word()}};
    for (const char* s : {"", "0", "1", "00", "11", "000", "101", "111"}) cols.push_back({false, Word(s)});
    return cols;
}

struct TableRow {
    std::string label;  // codes of the group, '.' where they differ
    std::vector<Word> codes;
    Classification cls;
    std::vector<Rational> values;
};

struct DecinvTable {
    std::vector<TableColumn> columns;
    std::vector<Rational> scopes;
    std::vector<TableRow> rows;
};

class group_mismatch_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline std::vector<Rational> column_values(const OrbitCode& code, const std::vector<TableColumn>& cols,
                                           const std::vector<Rational>& scopes) {
    const OrbitHeights h(code);
    std::vector<Rational> vals;
    vals.reserve(cols.size());
    for (std::size_t k = 0; k < cols.size(); ++k)
        vals.push_back(cols[k].star ? r_star(h) : r_w(cols[k].w, h, scopes[k]));
    return vals;
}

namespace detail {

inline std::string group_label(const std::vector<Word>& codes) {
    std::string label = codes.front().str();
    for (const Word& c : codes)
        for (std::size_t i = 0; i < label.size(); ++i)
            if (label[i] != c.str()[i]) label[i] = '.';
    return label;
}

}  // namespace detail

/// Orbits of one period grouped by (kind, height, decoration), with r^* and
/// r^w per column. Rows run by decreasing height, then by decreasing values,
/// then by label.
inline DecinvTable decinv_table(std::size_t period, const std::vector<TableColumn>& cols) {
    if (period < 3) throw std::invalid_argument("decinv_table: period must be >= 3");
    DecinvTable table;
    table.columns = cols;
    for (const auto& c : cols) table.scopes.push_back(c.column_scope());

    using Key = std::tuple<int, Rational, std::string>;
    std::map<Key, TableRow> groups;
    for (const Word& code : necklaces(period)) {
        const Classification cls = classify(code);
        const Key key{static_cast<int>(cls.kind), cls.height, cls.decoration ? cls.decoration->str() : "-"};
        auto vals = column_values(OrbitCode(code), cols, table.scopes);
        auto [it, fresh] = groups.try_emplace(key);
        TableRow& row = it->second;
        if (fresh) {
            row.cls = cls;
            row.values = std::move(vals);
        } else if (row.values != vals) {
            throw group_mismatch_error("decinv_table: " + code.str() + " disagrees with " + row.codes.front().str());
        }
        row.codes.push_back(code);
    }
    for (auto& [key, row] : groups) {
        std::sort(row.codes.begin(), row.codes.end());
        row.label = detail::group_label(row.codes);
        table.rows.push_back(std::move(row));
    }
    std::sort(table.rows.begin(), table.rows.end(), [](const TableRow& a, const TableRow& b) {
        if (a.cls.height != b.cls.height) return a.cls.height > b.cls.height;
        if (a.values != b.values) return a.values > b.values;
        return a.label < b.label;
    });
    return table;
}

inline DecinvTable decinv_table(std::size_t period) { return decinv_table(period, default_table_columns()); }

inline std::string to_tsv(const DecinvTable& t) {
    std::string s = "Decoration";
    for (const auto& c : t.columns) s += "\t" + c.label();
    s += "\nScope";
    for (const auto& q : t.scopes) s += "\t" + q.str();
    s += "\n";
    for (const auto& row : t.rows) {
        s += row.label;
        for (const auto& v : row.values) s += "\t" + v.str();
        s += "\n";
    }
    return s;
}

// Universality scan -----------------------------------------------------------

struct ScanOptions {
    std::size_t sample = 0;  // 0: exhaustive over necklaces
    std::uint64_t seed = 1;
    unsigned workers = 1;
};

/// Proportion of period-n orbits R with r^w(R) < q, as count/total.
inline Rational universality_scan(const Word& w, Rational q, std::size_t n, const ScanOptions& opt = {}) {
    const Rational qw = scope(w);
    if (!(Rational(0, 1) < q && q < qw))
        throw std::invalid_argument("universality_scan: q must lie in (0, q_w) = (0, " + qw.str() + ")");
    if (n == 0) throw std::invalid_argument("universality_scan: n must be >= 1");

    std::vector<Word> codes;
    if (opt.sample == 0) {
        codes = necklaces(n);
    } else {
        std::mt19937_64 rng(opt.seed);
        std::bernoulli_distribution bit(0.5);
        while (codes.size() < opt.sample) {
            Word c;
            for (std::size_t i = 0; i < n; ++i) c.push_back(bit(rng));
            if (is_primitive(c)) codes.push_back(std::move(c));
        }
    }
    const unsigned workers = std::max(1u, opt.workers);
    std::vector<std::int64_t> hits(workers, 0);
    auto work = [&](unsigned k) {
        for (std::size_t i = k; i < codes.size(); i += workers)
            if (r_w(w, OrbitHeights(OrbitCode(codes[i])), qw) < q) ++hits[k];
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < workers; ++k) pool.emplace_back(work, k);
        for (auto& th : pool) th.join();
    }
    std::int64_t count = 0;
    for (auto h : hits) count += h;
    return Rational(count, static_cast<std::int64_t>(codes.size()));
}

}  // namespace hsdec

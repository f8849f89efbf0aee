#include "hsdec_cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "hsdec/hsdec.hpp"

namespace hsdec::cli {

namespace {

using nlohmann::json;

/// Malformed command-line input; exit code 2.
class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Word parse_word(const std::string& s) {
    if (s == "." || s.empty()) return Word();
    try {
        return Word(s);
    } catch (const std::invalid_argument& e) {
        throw usage_error(e.what());
    }
}

std::string show(const Word& w) { return w.empty() ? "." : w.str(); }

Rational parse_rational(const std::string& s) {
    try {
        return Rational::parse(s);
    } catch (const std::invalid_argument& e) {
        throw usage_error(e.what());
    }
}

/// "PRE(PER)", "(PER)", or a bare word read as purely periodic.
Seq parse_seq(const std::string& s) {
    try {
        if (s.find('(') == std::string::npos) {
            if (s.empty()) throw std::invalid_argument("malformed sequence: ''");
            return Seq::periodic(Word(s));
        }
        return Seq::parse(s);
    } catch (const std::invalid_argument& e) {
        throw usage_error(e.what());
    }
}

OrbitCode parse_code(const std::string& s) {
    const Word w = parse_word(s);
    if (w.empty() || !is_primitive(w)) throw usage_error("orbit code must be a nonempty primitive word: '" + s + "'");
    return OrbitCode(w);
}

std::string fixed9(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", x);
    return buf;
}

json rationals_json(const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& q : v) a.push_back(q.str());
    return a;
}

struct Context {
    std::ostream& out;
    bool as_json = false;

    void emit(const std::string& text, const json& j) const {
        if (as_json)
            out << j.dump() << "\n";
        else
            out << text << "\n";
    }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Horseshoe decoration invariants, forcing and entropy bounds", "hsdec"};
    app.require_subcommand(1);

    std::string format = "text";
    std::function<void(Context&)> action;

    auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember(std::move(allowed)));
    };

    // height
    std::string seq_arg;
    auto* c_height = app.add_subcommand("height", "Height q(c) of a sequence PRE(PER)");
    c_height->add_option("seq", seq_arg, "Sequence, e.g. 10111100(11)")->required();
    add_format(c_height, {"text", "json"});
    c_height->callback([&] {
        action = [&](Context& ctx) {
            const Seq s = parse_seq(seq_arg);
            const Rational h = height(s);
            ctx.emit(h.str(), {{"seq", s.str()}, {"height", h.str()}});
        };
    });

    // cq
    std::string q_arg;
    auto* c_cq = app.add_subcommand("cq", "The word c_{m/n}");
    c_cq->add_option("q", q_arg, "m/n in (0, 1/2]")->required();
    add_format(c_cq, {"text", "json"});
    c_cq->callback([&] {
        action = [&](Context& ctx) {
            const Rational q = parse_rational(q_arg);
            const Word c = cq_word(q);
            ctx.emit(c.str(), {{"q", q.str()}, {"word", c.str()}});
        };
    });

    // scope
    std::string w_arg;
    auto* c_scope = app.add_subcommand("scope", "Scope q_w of a decoration ('.' is the empty word)");
    c_scope->add_option("w", w_arg, "Decoration")->required();
    add_format(c_scope, {"text", "json"});
    c_scope->callback([&] {
        action = [&](Context& ctx) {
            const Word w = parse_word(w_arg);
            const Rational s = scope(w);
            ctx.emit(s.str(), {{"w", show(w)}, {"scope", s.str()}});
        };
    });

    // classify
    std::string code_arg;
    auto* c_classify = app.add_subcommand("classify", "Height/decoration class of an orbit code");
    c_classify->add_option("code", code_arg, "Orbit code (any rotation)")->required();
    add_format(c_classify, {"text", "json"});
    c_classify->callback([&] {
        action = [&](Context& ctx) {
            const Word code = canonical_code(parse_code(code_arg));
            const Classification cls = classify(code);
            json j{{"code", code.str()},
                   {"period", code.size()},
                   {"height", cls.height.str()},
                   {"kind", to_string(cls.kind)}};
            if (cls.decoration) j["decoration"] = show(*cls.decoration);
            ctx.out << j.dump() << "\n";
        };
    });

    // rinv
    auto* c_rinv = app.add_subcommand("rinv", "mu, nu, lambda and r of a code for decoration w");
    c_rinv->add_option("code", code_arg, "Orbit code")->required();
    c_rinv->add_option("w", w_arg, "Decoration")->required();
    add_format(c_rinv, {"text", "json"});
    c_rinv->callback([&] {
        action = [&](Context& ctx) {
            const OrbitCode R = parse_code(code_arg);
            const Word w = parse_word(w_arg);
            const auto inv = decoration_invariants(w, R);
            ctx.emit("mu=" + inv.mu.str() + " nu=" + inv.nu.str() + " lambda=" + inv.lambda.str() + " r=" + inv.r.str(),
                     {{"code", R.word().str()},
                      {"w", show(w)},
                      {"mu", inv.mu.str()},
                      {"nu", inv.nu.str()},
                      {"lambda", inv.lambda.str()},
                      {"r", inv.r.str()}});
        };
    });

    // rstar
    auto* c_rstar = app.add_subcommand("rstar", "NBT invariant r^* of a code");
    c_rstar->add_option("code", code_arg, "Orbit code")->required();
    add_format(c_rstar, {"text", "json"});
    c_rstar->callback([&] {
        action = [&](Context& ctx) {
            const OrbitCode R = parse_code(code_arg);
            const Rational r = r_star(R);
            ctx.emit(r.str(), {{"code", R.word().str()}, {"r_star", r.str()}});
        };
    });

    // force
    auto* c_force = app.add_subcommand("force", "Does the code force P^w_q?");
    c_force->add_option("code", code_arg, "Orbit code")->required();
    c_force->add_option("w", w_arg, "Lone decoration")->required();
    c_force->add_option("q", q_arg, "m/n in (0, q_w)")->required();
    add_format(c_force, {"text", "json"});
    c_force->callback([&] {
        action = [&](Context& ctx) {
            const OrbitCode R = parse_code(code_arg);
            const Word w = parse_word(w_arg);
            const Rational q = parse_rational(q_arg);
            const auto v = to_string(forces(R, w, q));
            ctx.emit(v, {{"code", R.word().str()}, {"w", show(w)}, {"q", q.str()}, {"r", r_w(w, R).str()}, {"verdict", v}});
        };
    });

    // disks
    auto* c_disks = app.add_subcommand("disks", "Disk intersection counts and the disk forcing verdict");
    c_disks->add_option("code", code_arg, "Orbit code")->required();
    c_disks->add_option("w", w_arg, "Lone decoration")->required();
    c_disks->add_option("q", q_arg, "m/n with den > 2|code|")->required();
    add_format(c_disks, {"text", "json"});
    c_disks->callback([&] {
        action = [&](Context& ctx) {
            const OrbitCode R = parse_code(code_arg);
            const Word w = parse_word(w_arg);
            const Rational q = parse_rational(q_arg);
            const bool forced = forcing_oracle(R, w, q);
            const DiskCounts k = intersection_counts(R, w, q);
            const std::string v = forced ? "FORCED" : "NOT-FORCED";
            ctx.emit("A=" + std::to_string(k.a) + " B=" + std::to_string(k.b) + " C=" + std::to_string(k.c) +
                         " D=" + std::to_string(k.d) + "\n" + v,
                     {{"A", k.a}, {"B", k.b}, {"C", k.c}, {"D", k.d}, {"verdict", v}});
        };
    });

    // star
    std::string mn_arg;
    std::string mpnp_arg;
    std::string qp_arg;
    auto* c_star = app.add_subcommand("star", "r^{m/n}(P^{m'/n'}_{q'}) for star decorations");
    c_star->add_option("mn", mn_arg, "m/n")->required();
    c_star->add_option("mpnp", mpnp_arg, "m'/n'")->required();
    c_star->add_option("qp", qp_arg, "q' < m'/n'")->required();
    add_format(c_star, {"text", "json"});
    c_star->callback([&] {
        action = [&](Context& ctx) {
            const Rational mn = parse_rational(mn_arg);
            const Rational mpnp = parse_rational(mpnp_arg);
            const Rational qp = parse_rational(qp_arg);
            const Rational expected = starforce_expected(mn, mpnp, qp);
            const Word w = star_decoration(mn);
            const Word wp = star_decoration(mpnp);
            const auto member = family_member(qp, wp);
            if (!member) throw std::domain_error("star: no orbit of height " + qp.str() + " with decoration " + show(wp));
            const Word& code = *member;
            const Rational got = r_w(w, OrbitCode(code));
            ctx.emit("w=" + show(w) + " code=" + code.str() + " r=" + got.str() + " expected=" + expected.str(),
                     {{"w", show(w)}, {"code", code.str()}, {"r", got.str()}, {"expected", expected.str()}});
        };
    });

    // family
    auto* c_family = app.add_subcommand("family", "The decorations 1^{2i+1}");
    c_family->require_subcommand(1);
    std::int64_t imax = 0;
    auto* c_rseq = c_family->add_subcommand("r-seq", "r^i(R) for i = 0..imax");
    c_rseq->add_option("code", code_arg, "Orbit code")->required();
    c_rseq->add_option("imax", imax, "Largest i")->required()->check(CLI::NonNegativeNumber);
    add_format(c_rseq, {"text", "json"});
    c_rseq->callback([&] {
        action = [&](Context& ctx) {
            const OrbitCode R = parse_code(code_arg);
            const auto seq = r_sequence(R, imax);
            std::string text;
            for (std::size_t i = 0; i < seq.size(); ++i) text += (i ? " " : "") + seq[i].str();
            ctx.emit(text, {{"code", R.word().str()}, {"r", rationals_json(seq)}});
        };
    });
    auto* c_pa = c_family->add_subcommand("pa", "Pseudo-Anosov certificate from the r^i sequence");
    c_pa->add_option("code", code_arg, "Orbit code")->required();
    add_format(c_pa, {"text", "json"});
    c_pa->callback([&] {
        action = [&](Context& ctx) {
            const OrbitCode R = parse_code(code_arg);
            const auto v = to_string(pa_test(R));
            ctx.emit(v, {{"code", R.word().str()}, {"verdict", v}});
        };
    });

    // entropy
    std::int64_t ent_i = 1;
    bool bar = false;
    double tol = 1e-9;
    auto* c_entropy = app.add_subcommand("entropy", "Entropy polynomial H^i_q (or Hbar with --bar) and its root");
    c_entropy->add_option("--i", ent_i, "Index i >= 0")->required()->check(CLI::NonNegativeNumber);
    c_entropy->add_option("--q", q_arg, "m/n in (0, 1/2)")->required();
    c_entropy->add_flag("--bar", bar, "Use Hbar");
    c_entropy->add_option("--tol", tol, "Root tolerance")->check(CLI::PositiveNumber);
    add_format(c_entropy, {"text", "json"});
    c_entropy->callback([&] {
        action = [&](Context& ctx) {
            const Rational q = parse_rational(q_arg);
            const IntPolynomial p = bar ? Hbar_poly(ent_i, q) : H_poly(ent_i, q);
            const double root = largest_root(p, 1.0, 2.0, tol);
            ctx.emit(p.str() + "\nroot=" + fixed9(root) + " log=" + fixed9(std::log(root)),
                     {{"polynomial", p.coefficients()}, {"root", fixed9(root)}, {"log", fixed9(std::log(root))}});
        };
    });

    // table
    std::size_t period = 8;
    std::string decorations = "*,.,0,1,00,11,000,101,111";
    auto* c_table = app.add_subcommand("table", "Decoration invariants of all orbits of one period");
    c_table->add_option("--period", period, "Period >= 3")->required();
    c_table->add_option("--decorations", decorations, "Comma-separated; '*' is r^*, '.' the empty word");
    add_format(c_table, {"text", "tsv", "json"});
    c_table->callback([&] {
        action = [&](Context& ctx) {
            std::vector<TableColumn> cols;
            std::stringstream ss(decorations);
            for (std::string item; std::getline(ss, item, ',');) {
                if (item == "*")
                    cols.push_back({true, Word()});
                else
                    cols.push_back({false, parse_word(item)});
            }
            if (cols.empty()) throw usage_error("table: no decorations given");
            const DecinvTable t = decinv_table(period, cols);
            if (!ctx.as_json) {
                ctx.out << to_tsv(t);
                return;
            }
            json j;
            j["columns"] = json::array();
            for (const auto& c : t.columns) j["columns"].push_back(c.label());
            j["scope"] = rationals_json(t.scopes);
            j["rows"] = json::array();
            for (const auto& row : t.rows) {
                json codes = json::array();
                for (const auto& c : row.codes) codes.push_back(c.str());
                j["rows"].push_back({{"label", row.label}, {"codes", codes}, {"values", rationals_json(row.values)}});
            }
            ctx.out << j.dump() << "\n";
        };
    });

    // scan
    std::size_t scan_n = 0;
    ScanOptions scan_opt;
    auto* c_scan = app.add_subcommand("scan", "Proportion of period-n orbits with r^w < q");
    c_scan->add_option("--w", w_arg, "Decoration")->required();
    c_scan->add_option("--q", q_arg, "m/n in (0, q_w)")->required();
    c_scan->add_option("--n", scan_n, "Period")->required()->check(CLI::PositiveNumber);
    c_scan->add_option("--sample", scan_opt.sample, "Random primitive codes instead of all (0: exhaustive)");
    c_scan->add_option("--seed", scan_opt.seed, "Seed for --sample");
    c_scan->add_option("--workers", scan_opt.workers, "Threads")->check(CLI::PositiveNumber);
    add_format(c_scan, {"text", "json"});
    c_scan->callback([&] {
        action = [&](Context& ctx) {
            const Word w = parse_word(w_arg);
            const Rational q = parse_rational(q_arg);
            const Rational p = universality_scan(w, q, scan_n, scan_opt);
            ctx.emit("p=" + p.str() + " approx=" + fixed9(p.to_double()),
                     {{"w", show(w)}, {"q", q.str()}, {"n", scan_n}, {"p", p.str()}, {"approx", fixed9(p.to_double())}});
        };
    });

    // lone
    std::size_t max_len = 5;
    auto* c_lone = app.add_subcommand("lone", "Catalog of lone decorations");
    c_lone->add_option("--max-len", max_len, "Longest decoration (<= 5)");
    add_format(c_lone, {"text", "json"});
    c_lone->callback([&] {
        action = [&](Context& ctx) {
            const auto words = lone_catalog(max_len);
            std::string text;
            json j = json::array();
            for (const auto& w : words) {
                text += (text.empty() ? "" : "\n") + show(w);
                j.push_back(show(w));
            }
            ctx.emit(text, {{"words", j}});
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    Context ctx{out, format == "json"};
    try {
        if (action) action(ctx);
    } catch (const usage_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace hsdec::cli

#pragma once

// Command-line front end. run() takes the argument list (without the program
// name) and two streams so the whole interface can be driven from tests.
//
// Exit codes: 0 when every requested check passed, 1 when a check failed,
// 2 on a usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "hyperab/hyperab.hpp"

namespace hyperab::cli {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Format { Text, Csv, Json };

inline Format parse_format(const std::string& s) {
    if (s == "text") return Format::Text;
    if (s == "csv") return Format::Csv;
    if (s == "json") return Format::Json;
    throw UsageError("unknown format '" + s + "' (expected text, csv or json)");
}

inline ExactInt parse_int(const std::string& flag, const std::string& s) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size()) throw UsageError(flag + " expects an integer");
    for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') throw UsageError(flag + " expects an integer, got '" + s + "'");
    return ExactInt(s[0] == '+' ? s.substr(1) : s);
}

inline unsigned workers_from_env() {
    const char* v = std::getenv("HYPERAB_WORKERS");
    if (!v || !*v) return std::max(1u, std::thread::hardware_concurrency());
    const ExactInt w = parse_int("HYPERAB_WORKERS", v);
    if (w < 1 || w > 1024) throw UsageError("HYPERAB_WORKERS must be between 1 and 1024");
    return static_cast<unsigned>(w);
}

struct RunConfig {
    std::string format = "text";
    std::string output;

    long n = 0;
    std::string d = "1";
    std::string group;
    std::string c;
    std::string dim_x = "0";
    bool find_min_c = false;
    bool scan = false;
    long n_lo = 2;
    long n_hi = 50;
    long d_hi = 100;
    bool second_moment = false;

    long m_max = 12;
    long span_max = -1;
    std::string d_max = "0";

    long i_max = 0;
    std::string admissible;
    std::string diophantine;
    std::vector<std::string> descent;
};

namespace detail {

inline std::string csv_join(const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) s += ',';
        s += cells[i];
    }
    return s + "\n";
}

inline std::string weight_function_str(const WeightFunction& m_h) {
    std::string s;
    for (const auto& [i, v] : m_h) {
        if (!s.empty()) s += ' ';
        s += std::to_string(i) + ":" + std::to_string(v);
    }
    return s;
}

inline void require_n(long n) {
    if (n < 2) throw UsageError("--n must be at least 2");
}

inline ExactInt require_d(const std::string& s) {
    const ExactInt d = parse_int("--d", s);
    if (d < 1) throw UsageError("--d must be at least 1");
    return d;
}

}  // namespace detail

inline int cmd_hodge(const RunConfig& cfg, std::ostream& out) {
    detail::require_n(cfg.n);
    const HypersurfaceData h{cfg.n, detail::require_d(cfg.d)};
    const HodgeProfile p = hodge_tate_multiplicities(h);
    switch (parse_format(cfg.format)) {
        case Format::Csv:
            out << "n,d,q,multiplicity\n";
            for (std::size_t q = 0; q < p.weights.size(); ++q)
                out << detail::csv_join({std::to_string(h.n), h.d.str(), std::to_string(q), p.weights[q].str()});
            break;
        case Format::Json: {
            Json j = to_json(p);
            j["arithmetic_euler_characteristic"] = json_int(arithmetic_euler_char(h));
            j["topological_euler_characteristic"] = json_int(topological_euler_char(h));
            j["tannakian_dimension"] = json_int(tannakian_dimension(h));
            Json chi = Json::array();
            for (long i = 0; i < h.n; ++i) chi.push_back(json_int(chi_omega(h, i)));
            j["chi_omega"] = chi;
            out << j.dump(2) << "\n";
            break;
        }
        case Format::Text:
            out << "n = " << h.n << ", d = " << h.d << "\n";
            out << "arithmetic Euler characteristic: " << arithmetic_euler_char(h) << "\n";
            out << "topological Euler characteristic: " << topological_euler_char(h) << "\n";
            out << "tannakian dimension: " << tannakian_dimension(h) << "\n";
            out << "q  multiplicity  chi(Omega^q)\n";
            for (long q = 0; q < h.n; ++q) out << q << "  " << p.at(q) << "  " << chi_omega(h, q) << "\n";
            break;
    }
    return kOk;
}

inline int conditions_scan(const RunConfig& cfg, Format fmt, std::ostream& out) {
    if (cfg.n_lo < 2 || cfg.n_hi < cfg.n_lo) throw UsageError("scan needs 2 <= --n-lo <= --n-hi");
    if (cfg.d_hi < 1) throw UsageError("scan needs --d-hi >= 1");
    struct Row {
        GroupKind g;
        long n;
        bool occurs;
        long failures;
        std::optional<long> first_failing_d;
    };
    std::vector<Row> rows;
    long total_failures = 0;
    for (GroupKind g : all_groups()) {
        for (long n = cfg.n_lo; n <= cfg.n_hi; ++n) {
            Row r{g, n, structure_occurs(n, g), 0, std::nullopt};
            for (long d = 1; d <= cfg.d_hi; ++d) {
                if (!key_inequality_check(n, ExactInt(d), g)) {
                    ++r.failures;
                    if (!r.first_failing_d) r.first_failing_d = d;
                }
            }
            if (r.occurs) total_failures += r.failures;
            rows.push_back(r);
        }
    }
    const bool pass = total_failures == 0;
    switch (fmt) {
        case Format::Csv:
            out << "group,n,structure_occurs,d_checked,failures\n";
            for (const auto& r : rows)
                out << detail::csv_join({to_string(r.g), std::to_string(r.n), r.occurs ? "true" : "false",
                                         std::to_string(cfg.d_hi), std::to_string(r.failures)});
            break;
        case Format::Json: {
            Json j;
            j["d_range"] = Json::array({1, cfg.d_hi});
            j["n_range"] = Json::array({cfg.n_lo, cfg.n_hi});
            Json arr = Json::array();
            for (const auto& r : rows) {
                Json x;
                x["group"] = to_string(r.g);
                x["n"] = r.n;
                x["structure_occurs"] = r.occurs;
                x["failures"] = r.failures;
                if (r.first_failing_d) x["first_failing_d"] = *r.first_failing_d;
                arr.push_back(x);
            }
            j["rows"] = arr;
            j["pass"] = pass;
            out << j.dump(2) << "\n";
            break;
        }
        case Format::Text:
            out << "key inequality 2h0 < dim H + t for " << cfg.n_lo << " <= n <= " << cfg.n_hi << ", 1 <= d <= "
                << cfg.d_hi << "\n";
            for (GroupKind g : all_groups()) {
                long checked = 0, failed = 0, failed_occurring = 0;
                for (const auto& r : rows) {
                    if (r.g != g) continue;
                    checked += cfg.d_hi;
                    failed += r.failures;
                    if (r.occurs) failed_occurring += r.failures;
                }
                out << to_string(g) << ": " << checked << " checked, " << failed << " failed";
                if (failed != failed_occurring)
                    out << " (" << failed_occurring << " where the structure occurs)";
                out << "\n";
            }
            out << (pass ? "PASS" : "FAIL") << "\n";
            break;
    }
    return pass ? kOk : kCheckFailed;
}

inline int conditions_second_moment(const RunConfig& cfg, Format fmt, std::ostream& out) {
    detail::require_n(cfg.n);
    const ExactRational m2 = second_moment(cfg.n);
    const ExactRational expected = make_rational(cfg.n + 1, 6);
    const ExactRational a = a0(cfg.n);
    const bool equal = m2 == expected;
    const bool bounded = a0_bound_check(cfg.n);
    switch (fmt) {
        case Format::Csv:
            out << "n,second_moment,expected,equal,a0,a0_le_half\n";
            out << detail::csv_join({std::to_string(cfg.n), to_string(m2), to_string(expected), equal ? "true" : "false",
                                     to_string(a), bounded ? "true" : "false"});
            break;
        case Format::Json: {
            Json j;
            j["n"] = cfg.n;
            j["second_moment"] = json_rational(m2);
            j["expected"] = json_rational(expected);
            j["equal"] = equal;
            j["a0"] = json_rational(a);
            j["a0_le_half"] = bounded;
            out << j.dump(2) << "\n";
            break;
        }
        case Format::Text:
            out << "n = " << cfg.n << "\n";
            out << "second moment: " << to_string(m2) << " vs (n+1)/6 = " << to_string(expected) << ": "
                << (equal ? "equal" : "NOT equal") << "\n";
            out << "a0 = " << to_string(a) << (bounded ? " <= 1/2" : " > 1/2") << "\n";
            break;
    }
    return equal && bounded ? kOk : kCheckFailed;
}

inline int conditions_find_min_c(const RunConfig& cfg, Format fmt, std::ostream& out) {
    detail::require_n(cfg.n);
    const ExactInt d = detail::require_d(cfg.d);
    const ExactInt dim_x = parse_int("--dim-x", cfg.dim_x);
    if (dim_x < 0) throw UsageError("--dim-x must be nonnegative");
    std::vector<GroupKind> groups = cfg.group.empty() ? all_groups() : std::vector<GroupKind>{parse_group(cfg.group)};
    bool all_found = true;
    Json arr = Json::array();
    if (fmt == Format::Csv) out << "group,n,d,dim_x,min_c\n";
    for (GroupKind g : groups) {
        const auto c = find_min_c(cfg.n, d, g, dim_x);
        all_found = all_found && c.has_value();
        switch (fmt) {
            case Format::Csv:
                out << detail::csv_join({to_string(g), std::to_string(cfg.n), d.str(), dim_x.str(), c ? c->str() : ""});
                break;
            case Format::Json: {
                Json j;
                j["group"] = to_string(g);
                j["n"] = cfg.n;
                j["d"] = json_int(d);
                j["dim_x"] = json_int(dim_x);
                j["min_c"] = c ? json_int(*c) : Json(nullptr);
                arr.push_back(j);
                break;
            }
            case Format::Text:
                out << to_string(g) << ": minimal c = " << (c ? c->str() : std::string("none below the scan limit"))
                    << "\n";
                break;
        }
    }
    if (fmt == Format::Json) out << arr.dump(2) << "\n";
    return all_found ? kOk : kCheckFailed;
}

inline int cmd_conditions(const RunConfig& cfg, std::ostream& out) {
    const Format fmt = parse_format(cfg.format);
    const int modes = int(cfg.scan) + int(cfg.second_moment) + int(cfg.find_min_c);
    if (modes > 1) throw UsageError("--scan, --second-moment and --find-min-c are mutually exclusive");
    if (cfg.scan) return conditions_scan(cfg, fmt, out);
    if (cfg.second_moment) return conditions_second_moment(cfg, fmt, out);
    if (cfg.find_min_c) return conditions_find_min_c(cfg, fmt, out);

    detail::require_n(cfg.n);
    const ExactInt d = detail::require_d(cfg.d);
    const ExactInt dim_x = parse_int("--dim-x", cfg.dim_x);
    if (dim_x < 0) throw UsageError("--dim-x must be nonnegative");
    std::optional<ExactInt> c;
    if (!cfg.c.empty()) {
        c = parse_int("--c", cfg.c);
        if (*c < 1) throw UsageError("--c must be positive");
    }
    std::vector<GroupKind> groups = cfg.group.empty() ? all_groups() : std::vector<GroupKind>{parse_group(cfg.group)};

    bool pass = true;
    Json arr = Json::array();
    if (fmt == Format::Csv)
        out << "group,n,d,structure_occurs,h0,closed_form_h0,dim_H,torus_rank,key_inequality,first,second\n";
    for (GroupKind g : groups) {
        const auto data = adjoint_hodge(cfg.n, d, g);
        const ExactInt closed = closed_form_h0(cfg.n, d, g);
        const bool key = key_inequality_check(cfg.n, d, g);
        const bool occurs = structure_occurs(cfg.n, g);
        std::optional<LvVerdict> v;
        if (c) v = lv_conditions_check(cfg.n, d, g, *c, dim_x);
        pass = pass && (key || !occurs) && closed == data.h0();
        if (v) pass = pass && v->first && v->second.value_or(false);
        auto second_str = [&] {
            if (!v) return std::string();
            if (!v->second) return std::string("undefined");
            return std::string(*v->second ? "true" : "false");
        };
        switch (fmt) {
            case Format::Csv:
                out << detail::csv_join({to_string(g), std::to_string(cfg.n), d.str(), occurs ? "true" : "false",
                                         data.h0().str(), closed.str(),
                                         data.dim_h.str(), data.torus_rank.str(), key ? "true" : "false",
                                         v ? (v->first ? "true" : "false") : "", second_str()});
                break;
            case Format::Json: {
                Json j = to_json(data);
                j["n"] = cfg.n;
                j["d"] = json_int(d);
                j["h0"] = json_int(data.h0());
                j["closed_form_h0"] = json_int(closed);
                j["key_inequality"] = key;
                j["structure_occurs"] = occurs;
                if (v) {
                    Json lv;
                    lv["c"] = json_int(*c);
                    lv["dim_x"] = json_int(dim_x);
                    lv["e"] = json_rational(v->e);
                    lv["first"] = v->first;
                    lv["first_lhs"] = json_int(v->lhs_first);
                    lv["second"] = v->second ? Json(*v->second) : Json(nullptr);
                    lv["second_lhs"] = json_int(v->lhs_second);
                    lv["second_rhs"] = v->rhs_second ? json_rational(*v->rhs_second) : Json(nullptr);
                    j["conditions"] = lv;
                }
                arr.push_back(j);
                break;
            }
            case Format::Text:
                out << to_string(g) << ": h0 = " << data.h0() << " (closed form " << closed << "), dim H = " << data.dim_h
                    << ", t = " << data.torus_rank << ", key inequality " << (key ? "holds" : "FAILS")
                    << (occurs ? "" : " (structure does not occur for this n)") << "\n";
                if (v) {
                    out << "  c = " << *c << ", e = " << to_string(v->e) << ": first condition "
                        << (v->first ? "true" : "false") << ", second condition " << second_str() << "\n";
                }
                break;
        }
    }
    if (fmt == Format::Json) out << arr.dump(2) << "\n";
    return pass ? kOk : kCheckFailed;
}

inline int cmd_classify(const RunConfig& cfg, std::ostream& out, unsigned workers) {
    detail::require_n(cfg.n);
    if (cfg.m_max < 4 || cfg.m_max > 64) throw UsageError("--m-max must be between 4 and 64");
    WedgeBounds bounds;
    bounds.m_max = cfg.m_max;
    bounds.span_max = cfg.span_max;
    bounds.d_max = parse_int("--d-max", cfg.d_max);
    if (bounds.d_max < 0) throw UsageError("--d-max must be nonnegative");
    bounds.workers = workers;
    const auto sols = enumerate_solutions(cfg.n, bounds);
    long unclassified = 0;
    const Format fmt = parse_format(cfg.format);
    if (fmt == Format::Csv) out << "n,d,k,m,m_H,s,case\n";
    if (fmt == Format::Text) out << sols.size() << (sols.size() == 1 ? " solution" : " solutions") << "\n";
    for (const auto& s : sols) {
        const WedgeCase c = classify(cfg.n, s);
        if (c == WedgeCase::UNCLASSIFIED) ++unclassified;
        switch (fmt) {
            case Format::Csv:
                out << detail::csv_join({std::to_string(s.n), s.d.str(), std::to_string(s.k), std::to_string(s.m()),
                                         detail::weight_function_str(s.m_h), std::to_string(s.s), to_string(c)});
                break;
            case Format::Json:
                out << to_json(s, c).dump() << "\n";
                break;
            case Format::Text:
                out << "  d = " << s.d << ", k = " << s.k << ", m = " << s.m() << ", m_H = {"
                    << detail::weight_function_str(s.m_h) << "}, s = " << s.s << ", " << to_string(c) << "\n";
                break;
        }
    }
    if (unclassified > 0 && fmt == Format::Text) out << "WARNING: " << unclassified << " unclassified solution(s)\n";
    return unclassified == 0 ? kOk : kCheckFailed;
}

inline int cmd_sequences(const RunConfig& cfg, std::ostream& out) {
    const Format fmt = parse_format(cfg.format);
    const int modes = int(cfg.i_max > 0) + int(!cfg.admissible.empty()) + int(!cfg.diophantine.empty()) +
                      int(!cfg.descent.empty());
    if (modes != 1) throw UsageError("choose exactly one of --i-max, --admissible, --diophantine, --descent");

    if (cfg.i_max > 0) {
        if (cfg.i_max > 10) throw UsageError("--i-max must be at most 10");
        const auto table = sequence_table(cfg.i_max);
        switch (fmt) {
            case Format::Csv:
                out << "i,a,d\n";
                for (const auto& r : table) out << detail::csv_join({std::to_string(r.i), r.a.str(), r.d.str()});
                break;
            case Format::Json: {
                Json arr = Json::array();
                for (const auto& r : table) arr.push_back(Json{{"i", r.i}, {"a", json_int(r.a)}, {"d", json_int(r.d)}});
                out << arr.dump(2) << "\n";
                break;
            }
            case Format::Text:
                out << "i  a(i)  d(i)\n";
                for (const auto& r : table) out << r.i << "  " << r.a << "  " << r.d << "\n";
                break;
        }
        return kOk;
    }

    if (!cfg.admissible.empty()) {
        const ExactInt x = parse_int("--admissible", cfg.admissible);
        if (x < 1) throw UsageError("--admissible must be positive");
        const auto v = admissible_intersection(x);
        if (fmt == Format::Text) {
            out << x << ": " << (v.admissible ? "admissible" : "inadmissible");
            if (v.witness) out << ", witness i = " << *v.witness << " (d(i) = " << d_seq(*v.witness) << ")";
            out << "\n";
        } else {
            Json j;
            j["input"] = json_int(x);
            j["admissible"] = v.admissible;
            j["witness"] = v.witness ? Json(*v.witness) : Json(nullptr);
            j["terms_checked"] = v.terms_checked;
            out << j.dump(2) << "\n";
        }
        return v.admissible ? kOk : kCheckFailed;
    }

    if (!cfg.diophantine.empty()) {
        const ExactInt bound = parse_int("--diophantine", cfg.diophantine);
        if (bound > 10000000) throw UsageError("--diophantine bound must be at most 10^7");
        const auto sols = diophantine_solutions(bound);
        switch (fmt) {
            case Format::Csv:
                out << "a,b\n";
                for (const auto& [a, b] : sols) out << detail::csv_join({a.str(), b.str()});
                break;
            case Format::Json: {
                Json arr = Json::array();
                for (const auto& [a, b] : sols) arr.push_back(Json::array({json_int(a), json_int(b)}));
                out << arr.dump() << "\n";
                break;
            }
            case Format::Text:
                out << sols.size() << " solution(s) with b <= " << bound << "\n";
                for (const auto& [a, b] : sols) out << "  (" << a << ", " << b << ")\n";
                break;
        }
        return kOk;
    }

    if (cfg.descent.size() != 2) throw UsageError("--descent takes two integers A B");
    const ExactInt a = parse_int("--descent", cfg.descent[0]);
    const ExactInt b = parse_int("--descent", cfg.descent[1]);
    if (!is_diophantine_solution(a, b) || a < 1 || b < a) {
        out << "(" << a << ", " << b << ") is not a solution with 1 <= a <= b\n";
        return kCheckFailed;
    }
    const auto chain = descent_chain(a, b);
    if (fmt == Format::Json) {
        Json arr = Json::array();
        for (const auto& [x, y] : chain) arr.push_back(Json::array({json_int(x), json_int(y)}));
        out << Json{{"chain", arr}, {"steps", chain.size() - 1}}.dump() << "\n";
    } else {
        for (const auto& [x, y] : chain) out << "(" << x << ", " << y << ")\n";
        if (fmt == Format::Text) out << chain.size() - 1 << " step(s)\n";
    }
    return kOk;
}

inline int cmd_battery(const RunConfig& cfg, std::ostream& out, unsigned workers) {
    const Format fmt = parse_format(cfg.format);
    const BatteryReport report = run_battery(workers);
    switch (fmt) {
        case Format::Json:
            out << to_json(report).dump(2) << "\n";
            break;
        case Format::Csv:
            out << "name,claimed,finite_lo,finite_hi,asymptotic_threshold,status,counterexample\n";
            for (const auto& c : report.certificates) {
                out << detail::csv_join(
                    {c.name, c.claimed.str(), c.finite_checked ? std::to_string(c.finite_checked->first) : "",
                     c.finite_checked ? std::to_string(c.finite_checked->second) : "",
                     c.asymptotic_threshold ? std::to_string(*c.asymptotic_threshold) : "", to_string(c.status),
                     c.counterexample ? std::to_string(*c.counterexample) : ""});
            }
            break;
        case Format::Text:
            out << to_text(report);
            break;
    }
    return report.all_pass() ? kOk : kCheckFailed;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact invariants, classification and inequality certificates for hypersurfaces in abelian varieties",
                 "hyperab"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format: text, csv or json")->capture_default_str();
        sub->add_option("--output,-o", cfg.output, "Write output to this file instead of standard output");
    };

    auto* hodge = app.add_subcommand("hodge", "Euler characteristics and Hodge-Tate multiplicities");
    hodge->add_option("--n", cfg.n, "Dimension of the abelian variety")->required();
    hodge->add_option("--d", cfg.d, "Degree of the hypersurface")->capture_default_str();
    common(hodge);

    auto* cond = app.add_subcommand("conditions", "Adjoint Hodge data and the numerical conditions");
    cond->add_option("--n", cfg.n, "Dimension");
    cond->add_option("--d", cfg.d, "Degree")->capture_default_str();
    cond->add_option("--group", cfg.group, "Structure group: gl, gsp or go (default: all)");
    cond->add_option("--c", cfg.c, "Constant c for the two numerical conditions");
    cond->add_option("--dim-x", cfg.dim_x, "Dimension of the base")->capture_default_str();
    cond->add_flag("--find-min-c", cfg.find_min_c, "Smallest c satisfying both conditions");
    cond->add_flag("--scan", cfg.scan, "Check the key inequality over a rectangle of (n, d)");
    cond->add_option("--n-lo", cfg.n_lo, "Scan start for n")->capture_default_str();
    cond->add_option("--n-hi", cfg.n_hi, "Scan end for n")->capture_default_str();
    cond->add_option("--d-hi", cfg.d_hi, "Scan end for d")->capture_default_str();
    cond->add_flag("--second-moment", cfg.second_moment, "Second moment and a0 of the autocorrelation");
    common(cond);

    auto* cls = app.add_subcommand("classify", "Enumerate and classify wedge-power solutions");
    cls->add_option("--n", cfg.n, "Dimension")->required();
    cls->add_option("--m-max", cfg.m_max, "Largest total mass m")->capture_default_str();
    cls->add_option("--span-max", cfg.span_max, "Largest support span (negative: structural limit)")
        ->capture_default_str();
    cls->add_option("--d-max", cfg.d_max, "Largest degree d (0: unbounded)")->capture_default_str();
    common(cls);

    auto* seq = app.add_subcommand("sequences", "The a(i), d(i) sequences and the Diophantine equation");
    seq->add_option("--i-max", cfg.i_max, "Print a(i), d(i) for 1 <= i <= I");
    seq->add_option("--admissible", cfg.admissible, "Test an intersection number against d(i), i >= 2");
    seq->add_option("--diophantine", cfg.diophantine, "All solutions with a <= b <= BOUND");
    seq->add_option("--descent", cfg.descent, "Descent chain from a solution (A, B)")->expected(2);
    common(seq);

    auto* bat = app.add_subcommand("battery", "Certify every named Eulerian-number inequality");
    common(bat);

    std::vector<std::string> argv_store{"hyperab"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    std::ostringstream buffer;
    int code = kOk;
    try {
        parse_format(cfg.format);
        if (hodge->parsed()) {
            code = cmd_hodge(cfg, buffer);
        } else if (cond->parsed()) {
            code = cmd_conditions(cfg, buffer);
        } else if (cls->parsed()) {
            code = cmd_classify(cfg, buffer, workers_from_env());
        } else if (seq->parsed()) {
            code = cmd_sequences(cfg, buffer);
        } else {
            code = cmd_battery(cfg, buffer, workers_from_env());
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kCheckFailed;
    }

    if (cfg.output.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(cfg.output);
        if (!file) {
            err << "error: cannot open '" << cfg.output << "' for writing\n";
            return kUsage;
        }
        file << buffer.str();
    }
    return code;
}

}  // namespace hyperab::cli

#include "cbs/cli.hpp"

#include <charconv>
#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cbs/errors.hpp"
#include "cbs/eulerian.hpp"
#include "cbs/lehmer.hpp"
#include "cbs/polybernoulli.hpp"
#include "cbs/verify.hpp"

namespace cbs {

namespace {

using ordered_json = nlohmann::ordered_json;

/// Raised for semantically invalid arguments that CLI11 cannot catch by itself.
class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

// Shortest round-trip form, the same digits the JSON renderer uses.
std::string fmt_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string join(const std::vector<std::string>& items) {
    std::string out = "[";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ", ";
        out += items[i];
    }
    return out + "]";
}

std::vector<std::string> rat_strings(const Poly& p) {
    std::vector<std::string> out;
    for (const auto& c : p.coeffs()) out.push_back(c.to_string());
    return out;
}

// ---------------------------------------------------------------- seq

struct SeqArgs {
    std::string name;
    int max_n = 10;
    std::string format = "plain";
};

void emit_row(std::ostream& out, const std::string& format, const std::vector<std::string>& cells,
              const ordered_json& json) {
    if (format == "json") {
        out << json.dump() << '\n';
        return;
    }
    const char sep = format == "csv" ? ',' : ' ';
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? std::string(1, sep) : "") << cells[i];
    out << '\n';
}

int cmd_seq(const SeqArgs& a, std::ostream& out) {
    if (a.name == "zeta") {
        for (int k = 0; k <= a.max_n; ++k) {
            const ZetaValue z = zeta_cb_neg(k);
            ordered_json j{{"kind", "zeta"},
                           {"index", k},
                           {"rational_part", z.rational_part.to_string()},
                           {"pi_sqrt3_part", z.pi_sqrt3_part.to_string()}};
            emit_row(out, a.format, {std::to_string(k), z.rational_part.to_string(), z.pi_sqrt3_part.to_string()}, j);
        }
        return kExitOk;
    }
    if (a.name == "polybernoulli") {
        auto& table = shared_poly_bernoulli_table();
        for (int n = 0; n <= a.max_n; ++n)
            for (int k = 0; k <= a.max_n; ++k) {
                const std::string v = table.get(n, -k).to_string();
                ordered_json j{{"kind", "sequence"}, {"name", a.name}, {"index", n}, {"upper_index", -k}, {"value", v}};
                emit_row(out, a.format, {std::to_string(n), std::to_string(-k), v}, j);
            }
        return kExitOk;
    }
    std::vector<Rat> values;
    if (a.name == "b") {
        values.push_back(Rat(1));
        while (static_cast<int>(values.size()) <= a.max_n) values.push_back(antidiagonal_recursion_step(values));
    } else {
        for (int n = 0; n <= a.max_n; ++n) values.push_back(a_seq(n));
    }
    for (int n = 0; n <= a.max_n; ++n) {
        const std::string v = values[static_cast<std::size_t>(n)].to_string();
        ordered_json j{{"kind", "sequence"}, {"name", a.name}, {"index", n}, {"value", v}};
        emit_row(out, a.format, {std::to_string(n), v}, j);
    }
    return kExitOk;
}

// ---------------------------------------------------------------- poly

struct PolyArgs {
    std::string family;
    std::optional<int> n;
    std::optional<std::string> y;
    std::optional<std::string> bounds;
    std::string format = "plain";
};

std::vector<int> parse_bounds(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw UsageError("--bounds: '" + item + "' is not an integer");
        }
        if (used != item.size()) throw UsageError("--bounds: '" + item + "' is not an integer");
        if (v < 1) throw UsageError("--bounds: entries must be positive");
        out.push_back(v);
    }
    return out;
}

void emit_poly(std::ostream& out, const std::string& format, const std::string& family, int index, const Poly& p) {
    const auto coeffs = rat_strings(p);
    if (format == "json") {
        out << ordered_json{{"kind", "polynomial"}, {"family", family}, {"index", index}, {"coeffs", coeffs}}.dump()
            << '\n';
    } else if (format == "csv") {
        for (std::size_t i = 0; i < coeffs.size(); ++i) out << i << ',' << coeffs[i] << '\n';
    } else {
        out << join(coeffs) << '\n';
    }
}

void emit_bipoly(std::ostream& out, const std::string& format, int index, const BiPoly& f) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : f.rows()) rows.push_back(rat_strings(r));
    if (format == "json") {
        out << ordered_json{{"kind", "polynomial"}, {"family", "F"}, {"index", index}, {"coeffs", rows}}.dump() << '\n';
    } else if (format == "csv") {
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < rows[i].size(); ++j)
                if (rows[i][j] != "0") out << i << ',' << j << ',' << rows[i][j] << '\n';
    } else {
        std::vector<std::string> parts;
        for (const auto& r : rows) parts.push_back(join(r));
        out << join(parts) << '\n';
    }
}

int cmd_poly(const PolyArgs& a, std::ostream& out) {
    if (a.family == "sEulerian") {
        if (!a.bounds) throw UsageError("sEulerian needs --bounds");
        const auto bounds = parse_bounds(*a.bounds);
        if (a.n && *a.n != static_cast<int>(bounds.size()))
            throw UsageError("n = " + std::to_string(*a.n) + " does not match the " + std::to_string(bounds.size()) +
                             " entries of --bounds");
        emit_poly(out, a.format, a.family, static_cast<int>(bounds.size()), s_eulerian(bounds));
        return kExitOk;
    }
    if (!a.n) throw UsageError(a.family + " needs an index n");
    const int n = *a.n;
    if (a.family == "p" || a.family == "q") {
        if (n < -1) throw UsageError(a.family + ": requires n >= -1");
        const PQPair pq = pq_polys(n);
        emit_poly(out, a.format, a.family, n, a.family == "p" ? pq.p : pq.q);
        return kExitOk;
    }
    if (n < 0) throw UsageError("F: requires n >= 0");
    if (a.y) {
        Rat y;
        try {
            y = Rat::parse(*a.y);
        } catch (const std::exception& e) {
            throw UsageError(std::string("--y: ") + e.what());
        }
        emit_poly(out, a.format, a.family, n, f_at_y(n, y));
    } else {
        emit_bipoly(out, a.format, n, f_bipoly(n));
    }
    return kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    std::string suite;
    std::optional<int> max_n;
    std::uint64_t seed = kDefaultSeed;
    double tolerance = kDefaultTolerance;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    if (!is_suite_name(a.suite)) {
        err << "unknown suite '" << a.suite << "'; expected one of:";
        for (const auto& s : suite_names()) err << ' ' << s;
        err << '\n';
        return kExitUsage;
    }
    SuiteOptions options;
    options.max_n = a.max_n.value_or(default_max_n(a.suite));
    options.seed = a.seed;
    options.tolerance = a.tolerance;
    if (options.max_n < 1) throw UsageError("--max-n must be positive");
    if (!(options.tolerance > 0.0)) throw UsageError("--tolerance must be positive");
    const auto results = run_suite(a.suite, options);
    out << serialize_report(results);
    return all_passed(results) ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------- eval

struct EvalArgs {
    std::string target;
    std::optional<int> k;
    std::optional<double> x;
    std::optional<double> t;
    std::optional<int> terms;
    std::string format = "plain";
};

template <class T>
T need(const std::optional<T>& v, const char* flag, const std::string& target) {
    if (!v) throw UsageError(target + " needs " + flag);
    return *v;
}

int cmd_eval(const EvalArgs& a, std::ostream& out) {
    if (a.terms && *a.terms < 1) throw std::domain_error("--terms must be positive");
    double closed = 0.0, series = 0.0;
    const std::string& tg = a.target;
    ordered_json j{{"kind", "numeric"}, {"target", tg}};
    if (tg == "lehmer") {
        const int k = need(a.k, "--k", tg);
        const double x = need(a.x, "--x", tg);
        const int terms = a.terms.value_or(80);
        closed = closed_form_rhs(k, x);
        series = series_partial_sum(k, x, terms);
        j["k"] = k;
        j["x"] = x;
        j["terms"] = terms;
    } else if (tg == "dirichlet") {
        const int k = need(a.k, "--k", tg);
        if (k < 0) throw std::domain_error("dirichlet: requires k >= 0");
        const int terms = a.terms.value_or(60);
        closed = zeta_cb_neg(k).approx();
        series = dirichlet_partial_sum(k, terms);
        j["k"] = k;
        j["terms"] = terms;
    } else if (tg == "aegf") {
        const double t = need(a.t, "--t", tg);
        const int terms = a.terms.value_or(25);
        closed = a_egf_closed(t);
        series = a_egf_truncated(t, terms);
        j["t"] = t;
        j["terms"] = terms;
    } else {
        const double x = need(a.x, "--x", tg);
        const double t = need(a.t, "--t", tg);
        const int terms = a.terms.value_or(25);
        closed = tg == "P" ? p_egf_closed(x, t) : q_egf_closed(x, t);
        series = tg == "P" ? p_egf_truncated(x, t, terms) : q_egf_truncated(x, t, terms);
        j["x"] = x;
        j["t"] = t;
        j["terms"] = terms;
    }
    const double diff = std::abs(closed - series);
    if (a.format == "json") {
        j["closed_form"] = closed;
        j["series"] = series;
        j["abs_diff"] = diff;
        out << j.dump() << '\n';
    } else if (a.format == "csv") {
        out << fmt_double(closed) << ',' << fmt_double(series) << ',' << fmt_double(diff) << '\n';
    } else {
        out << "closed_form " << fmt_double(closed) << '\n'
            << "series " << fmt_double(series) << '\n'
            << "abs_diff " << fmt_double(diff) << '\n';
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact central binomial series, Eulerian and poly-Bernoulli computations", "cbs"};
    app.require_subcommand(1);
    const std::vector<std::string> formats{"plain", "csv", "json"};

    SeqArgs seq;
    auto* seq_cmd = app.add_subcommand("seq", "Stream an exact sequence");
    seq_cmd->add_option("name", seq.name, "b | a | polybernoulli | zeta")
        ->required()
        ->check(CLI::IsMember({"b", "a", "polybernoulli", "zeta"}));
    seq_cmd->add_option("--max-n", seq.max_n, "Last index")->check(CLI::NonNegativeNumber);
    seq_cmd->add_option("--format", seq.format)->check(CLI::IsMember(formats));

    PolyArgs poly;
    auto* poly_cmd = app.add_subcommand("poly", "Print a polynomial, constant term first");
    poly_cmd->add_option("family", poly.family, "p | q | F | sEulerian")
        ->required()
        ->check(CLI::IsMember({"p", "q", "F", "sEulerian"}));
    poly_cmd->add_option("n", poly.n, "Index");
    poly_cmd->add_option("--k", poly.n, "Index (alternative to the positional)");
    poly_cmd->add_option("--y", poly.y, "Rational value substituted for y in F, e.g. 1/2");
    poly_cmd->add_option("--bounds", poly.bounds, "Comma-separated bounds for sEulerian");
    poly_cmd->add_option("--format", poly.format)->check(CLI::IsMember(formats));

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Run verification suites, JSON lines out");
    verify_cmd->add_option("--suite", verify.suite)->required();
    verify_cmd->add_option("--max-n", verify.max_n);
    verify_cmd->add_option("--seed", verify.seed);
    verify_cmd->add_option("--tolerance", verify.tolerance);

    EvalArgs eval;
    auto* eval_cmd = app.add_subcommand("eval", "Compare a closed form with its series");
    eval_cmd->add_option("target", eval.target, "lehmer | P | Q | aegf | dirichlet")
        ->required()
        ->check(CLI::IsMember({"lehmer", "P", "Q", "aegf", "dirichlet"}));
    eval_cmd->add_option("--k", eval.k);
    eval_cmd->add_option("--x", eval.x);
    eval_cmd->add_option("--t", eval.t);
    eval_cmd->add_option("--terms", eval.terms);
    eval_cmd->add_option("--format", eval.format)->check(CLI::IsMember(formats));

    std::vector<std::string> argv_store{"cbs"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_store) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (*seq_cmd) return cmd_seq(seq, out);
        if (*poly_cmd) return cmd_poly(poly, out);
        if (*verify_cmd) return cmd_verify(verify, out, err);
        return cmd_eval(eval, out);
    } catch (const SizeError& e) {
        err << "error: " << e.what() << '\n';
        return kExitGuard;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace cbs

#include "harmonic/cli.hpp"

#include "harmonic/beta_engine.hpp"
#include "harmonic/float_oracle.hpp"
#include "harmonic/harmonic_core.hpp"
#include "harmonic/identity_suite.hpp"
#include "harmonic/json_writer.hpp"
#include "harmonic/series_lab.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace harmonic::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { text, json, csv };

// Raw flag values shared by all subcommands; which ones a target accepts is
// checked after parsing.
struct Flags {
    std::string target;
    std::uint64_t n = 0;
    std::uint64_t n_max = 0;
    std::uint64_t N = 0;
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 42;
    unsigned alpha = 1;
    unsigned r = 0;
    unsigned r_max = 0;
    unsigned m = 0;
    int s = 2;
    std::string x;
    std::string format;
    std::string output;
    bool use_float = false;
    bool timing = false;
};

Format parse_format(const std::string& f, Format fallback)
{
    if (f.empty())
        return fallback;
    if (f == "text")
        return Format::text;
    if (f == "json")
        return Format::json;
    if (f == "csv")
        return Format::csv;
    throw UsageError("unknown format '" + f + "' (expected text, json or csv)");
}

Rational parse_x(const std::string& text)
{
    try {
        return Rational::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::vector<Rational> parse_x_list(const std::string& text)
{
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const Rational x = parse_x(item);
        if (std::find(out.begin(), out.end(), x) == out.end())
            out.push_back(x);
    }
    if (out.empty())
        throw UsageError("--x list is empty");
    return out;
}

// Rejects flags the selected target does not use, and requires the ones it needs.
void check_flags(const CLI::App& sub, const std::string& target, const std::set<std::string>& allowed,
                 const std::set<std::string>& required = {})
{
    for (const CLI::Option* opt : sub.get_options()) {
        const auto names = opt->get_lnames();
        if (names.empty())
            continue;
        const std::string& name = names.front();
        if (name == "help" || name == "format" || name == "output")
            continue;
        if (opt->count() > 0 && !allowed.count(name))
            throw UsageError("--" + name + " does not apply to '" + sub.get_name() + " " + target + "'");
        if (opt->count() == 0 && required.count(name))
            throw UsageError("'" + sub.get_name() + " " + target + "' requires --" + name);
    }
}

bool given(const CLI::App& sub, const std::string& name)
{
    return sub.get_option("--" + name)->count() > 0;
}

std::string compute(const CLI::App& sub, const Flags& f, Format format, int& exit_code)
{
    exit_code = kExitOk;
    struct Row {
        std::string quantity;
        std::string value;
    };
    std::vector<Row> rows;
    JsonWriter w;
    w.begin_object();
    w.key("quantity").value(f.target);
    w.key("params").begin_object();

    if (f.target == "H") {
        check_flags(sub, f.target, {"n", "alpha", "x"}, {"n"});
        Rational v;
        w.key("n").value(f.n).key("alpha").value(f.alpha);
        if (given(sub, "x")) {
            const Rational x = parse_x(f.x);
            w.key("x").value(x.str());
            v = harmonic_function(f.n, x, f.alpha);
        } else {
            v = harmonic_number(f.n, f.alpha);
        }
        rows.push_back({"H", v.str()});
    } else if (f.target == "F" || f.target == "dF") {
        const bool derivative = f.target == "dF";
        check_flags(sub, f.target, derivative ? std::set<std::string>{"n", "x", "r"} : std::set<std::string>{"n", "x"},
                    derivative ? std::set<std::string>{"n", "x", "r"} : std::set<std::string>{"n", "x"});
        const Rational x = parse_x(f.x);
        w.key("n").value(f.n).key("x").value(x.str());
        if (derivative)
            w.key("r").value(f.r);
        const Rational v = derivative ? derivative_F(f.n, x, f.r) : beta_F(f.n, x);
        rows.push_back({f.target, v.str()});
    } else if (f.target == "bell") {
        check_flags(sub, f.target, {"r"}, {"r"});
        w.key("r").value(f.r);
        rows.push_back({"bell", bell_expansion(f.r).str()});
    } else if (f.target == "bernoulli") {
        check_flags(sub, f.target, {"n", "N"});
        if (given(sub, "n") == given(sub, "N"))
            throw UsageError("'compute bernoulli' takes exactly one of --n (single value) or --N (table)");
        if (given(sub, "n")) {
            w.key("n").value(f.n);
            rows.push_back({"B_" + std::to_string(f.n), bernoulli_table(static_cast<unsigned>(f.n))[f.n].str()});
        } else {
            w.key("N").value(f.N);
            const BernoulliTable table = bernoulli_table(static_cast<unsigned>(f.N));
            for (std::size_t k = 0; k < table.size(); ++k)
                rows.push_back({"B_" + std::to_string(k), table[k].str()});
        }
    } else if (f.target == "zeta-even") {
        check_flags(sub, f.target, {"n"}, {"n"});
        w.key("n").value(f.n);
        const Rational c = zeta_even_coefficient(static_cast<unsigned>(f.n));
        rows.push_back({"zeta-even", c.str() + " * pi^" + std::to_string(2 * f.n)});
        w.end_object();
        w.key("coeff").value(c.str()).key("pi_power").value(2 * f.n);
        w.end_object();
        if (format == Format::json)
            return w.str() + "\n";
    }

    if (format == Format::csv) {
        std::string out = "quantity,value\n";
        for (const Row& row : rows)
            out += row.quantity + "," + row.value + "\n";
        return out;
    }
    if (format == Format::text) {
        std::string out;
        for (const Row& row : rows)
            out += (rows.size() > 1 ? row.quantity + " " : std::string()) + row.value + "\n";
        return out;
    }
    w.end_object();
    if (rows.size() == 1) {
        w.key("value").value(rows.front().value);
    } else {
        w.key("values").begin_array();
        for (const Row& row : rows)
            w.value(row.value);
        w.end_array();
    }
    w.end_object();
    return w.str() + "\n";
}

std::string render_reports(const std::vector<IdentityReport>& reports, Format format)
{
    std::string out;
    if (format == Format::csv) {
        out = csv_header() + "\n";
        for (const auto& r : reports)
            out += to_csv(r) + "\n";
        return out;
    }
    if (format == Format::json) {
        for (const auto& r : reports)
            out += to_json(r) + "\n";
        return out;
    }
    std::map<Status, std::size_t> counts;
    for (const auto& r : reports) {
        ++counts[r.status];
        out += std::string(to_string(r.status)) + " " + r.identity_id + " n=" + std::to_string(r.params.n);
        if (r.params.x)
            out += " x=" + r.params.x->str();
        if (r.params.r)
            out += " r=" + std::to_string(*r.params.r);
        if (r.witness)
            out += " lhs=" + r.witness->lhs.str() + " rhs=" + r.witness->rhs.str();
        if (r.reason)
            out += " (" + *r.reason + ")";
        out += "\n";
    }
    out += "summary: " + std::to_string(counts[Status::pass]) + " pass, " + std::to_string(counts[Status::fail])
        + " fail, " + std::to_string(counts[Status::skipped]) + " skipped\n";
    return out;
}

std::string verify(const CLI::App& sub, const Flags& f, Format format, int& exit_code)
{
    check_flags(sub, f.target, {"n-max", "r-max", "x", "timing"});
    SweepConfig config = SweepConfig::defaults();
    if (given(sub, "n-max"))
        config.n_max = f.n_max;
    if (given(sub, "r-max"))
        config.r_max = f.r_max;
    if (given(sub, "x"))
        config.xs = parse_x_list(f.x);

    std::vector<IdentityReport> reports;
    const std::string& t = f.target;
    if (t == "thm2.2")
        reports = check_theorem_2_2(config.n_max, config.xs);
    else if (t == "thm2.3")
        reports = check_theorem_2_3(config.n_max, config.xs);
    else if (t == "thm2.5")
        reports = check_theorem_2_5(config.n_max, config.xs);
    else if (t == "thm2.6")
        reports = check_theorem_2_6_finite(config.r_max, config.n_max, config.xs);
    else if (t == "lemma-a")
        reports = check_lemma_a(config.n_max, config.r_max, config.xs);
    else if (t == "beta-eq")
        reports = check_beta_equality(config.n_max, config.xs);
    else if (t == "inversion")
        reports = check_inversion(config.n_max, config.xs);
    else
        reports = check_all(config);

    if (!f.timing)
        for (auto& r : reports)
            r.elapsed_ms = 0;
    exit_code = any_failed(reports) ? kExitCheckFailed : kExitOk;
    return render_reports(reports, format);
}

std::string render_estimate(const SeriesEstimate& e, Format format)
{
    const bool contained = e.brackets_claim();
    std::string claim = "none";
    if (e.claimed_limit) {
        if (const auto* q = std::get_if<Rational>(&*e.claimed_limit))
            claim = q->str();
        else
            claim = std::get<PiPower>(*e.claimed_limit).coeff.str() + " * pi^"
                + std::to_string(std::get<PiPower>(*e.claimed_limit).pi_power);
    }
    if (format == Format::json)
        return to_json(e) + "\n";
    if (format == Format::csv) {
        const std::string partial = e.exact ? e.exact_partial().str() : format_double(std::get<double>(e.partial));
        return "target_id,N,exact,partial,tail_low,tail_high,claimed_limit,contains\n" + e.target_id + ","
            + std::to_string(e.N) + "," + (e.exact ? "true" : "false") + "," + partial + "," + e.tail_low.str()
            + "," + e.tail_high.str() + "," + claim + "," + (contained ? "true" : "false") + "\n";
    }
    std::string out = e.target_id + " N=" + std::to_string(e.N) + (e.exact ? " (exact)" : " (floating)") + "\n";
    out += "partial   ~ " + format_double(e.partial_value()) + "\n";
    out += "bracket   ~ [" + format_double(e.partial_value() + e.tail_low.to_double()) + ", "
        + format_double(e.partial_value() + e.tail_high.to_double()) + "]\n";
    out += "claimed   = " + claim + "\n";
    out += std::string("contained = ") + (contained ? "yes" : "no") + "\n";
    return out;
}

std::string series(const CLI::App& sub, const Flags& f, Format format, int& exit_code)
{
    const std::string& t = f.target;
    if (t == "zeta")
        check_flags(sub, t, {"N", "x", "s", "float"}, {"N"});
    else if (t == "lemma-c" || t == "eq32")
        check_flags(sub, t, {"N", "r", "float"}, {"N", "r"});
    else
        check_flags(sub, t, {"N", "float"}, {"N"});

    if (f.N == 0)
        throw UsageError("--N must be positive");
    SeriesMode mode = SeriesMode::exact;
    if (f.N > kExactTermLimit) {
        if (!f.use_float)
            throw UsageError("exact mode is limited to N <= " + std::to_string(kExactTermLimit)
                             + "; pass --float for compensated floating accumulation");
        mode = SeriesMode::floating;
    }

    SeriesEstimate e;
    if (t == "zeta")
        e = hurwitz_partial(given(sub, "x") ? parse_x(f.x) : Rational(0), f.s, f.N, mode);
    else if (t == "lemma-c")
        e = lemma_c_partial(f.r, f.N, mode);
    else if (t == "cor2.4-r3")
        e = corollary_2_4_partial(CorollaryVariant::r3, f.N, mode);
    else if (t == "cor2.4-r4")
        e = corollary_2_4_partial(CorollaryVariant::r4, f.N, mode);
    else if (t == "cor2.4-r5")
        e = corollary_2_4_partial(CorollaryVariant::r5, f.N, mode);
    else
        e = eq32_partial(f.r, f.N, mode);

    exit_code = e.brackets_claim() ? kExitOk : kExitCheckFailed;
    return render_estimate(e, format);
}

std::string oracle(const CLI::App& sub, const Flags& f, Format format, int& exit_code)
{
    IdentityReport report;
    if (f.target == "quad") {
        check_flags(sub, f.target, {"n", "m", "x"}, {"n", "m"});
        report = quadrature_report(f.n, f.m, given(sub, "x") ? parse_x(f.x) : Rational(0));
    } else {
        check_flags(sub, f.target, {"n", "r", "samples", "seed"}, {"n", "r"});
        if (f.samples < 2)
            throw UsageError("--samples must be at least 2");
        if (f.r == 0)
            throw UsageError("--r must be positive");
        report = monte_carlo_report(f.n, f.r, f.samples, f.seed);
    }
    report.elapsed_ms = 0;
    exit_code = report.status == Status::fail ? kExitCheckFailed : kExitOk;
    if (format == Format::text) {
        std::string out = render_reports({report}, Format::text);
        if (const auto* q = report.oracle ? std::get_if<QuadratureOracle>(&*report.oracle) : nullptr)
            out += "value=" + format_double(q->value) + " err=" + format_double(q->err)
                + " evals=" + std::to_string(q->evals) + "\n";
        if (const auto* mc = report.oracle ? std::get_if<MonteCarloOracle>(&*report.oracle) : nullptr)
            out += "estimate=" + format_double(mc->estimate) + " stderr=" + format_double(mc->std_error)
                + " samples=" + std::to_string(mc->samples) + " seed=" + std::to_string(mc->seed) + "\n";
        return out;
    }
    return render_reports({report}, format);
}

void add_common(CLI::App* sub, Flags& f)
{
    sub->add_option("--format", f.format, "Output format: text, json or csv");
    sub->add_option("--output", f.output, "Write output to this file instead of stdout");
}

} // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact generalized harmonic numbers, beta-function derivatives and identity verification",
                 "harmid"};
    app.require_subcommand(1);
    Flags f;

    CLI::App* compute_cmd = app.add_subcommand("compute", "Evaluate one quantity exactly");
    compute_cmd->add_option("target", f.target, "H, F, dF, bell, bernoulli or zeta-even")
        ->required()
        ->check(CLI::IsMember({"H", "F", "dF", "bell", "bernoulli", "zeta-even"}));
    compute_cmd->add_option("--n", f.n, "Index n");
    compute_cmd->add_option("--x", f.x, "Shift x as p/q (x > -1)");
    compute_cmd->add_option("--alpha", f.alpha, "Order alpha >= 1");
    compute_cmd->add_option("--r", f.r, "Derivative / expansion order");
    compute_cmd->add_option("--N", f.N, "Table size");
    add_common(compute_cmd, f);

    CLI::App* verify_cmd = app.add_subcommand("verify", "Exact identity sweeps");
    verify_cmd->add_option("target", f.target, "Identity family")
        ->required()
        ->check(CLI::IsMember({"thm2.2", "thm2.3", "thm2.5", "thm2.6", "lemma-a", "beta-eq", "inversion", "all"}));
    verify_cmd->add_option("--n-max", f.n_max, "Largest n in the sweep (default 50)");
    verify_cmd->add_option("--r-max", f.r_max, "Largest r in the sweep (default 6)");
    verify_cmd->add_option("--x", f.x, "Comma-separated list of p/q shifts");
    verify_cmd->add_flag("--timing", f.timing, "Report measured elapsed_ms instead of 0");
    add_common(verify_cmd, f);

    CLI::App* series_cmd = app.add_subcommand("series", "Partial sums with tail brackets");
    series_cmd->add_option("target", f.target, "Series")
        ->required()
        ->check(CLI::IsMember({"zeta", "lemma-c", "cor2.4-r3", "cor2.4-r4", "cor2.4-r5", "eq32"}));
    series_cmd->add_option("--N", f.N, "Number of terms");
    series_cmd->add_option("--x", f.x, "Shift x as p/q (zeta only)");
    series_cmd->add_option("--s", f.s, "Exponent s >= 2 (zeta only)");
    series_cmd->add_option("--r", f.r, "Order r (lemma-c, eq32)");
    series_cmd->add_flag("--float", f.use_float, "Allow compensated floating accumulation beyond the exact limit");
    add_common(series_cmd, f);

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "Floating-point cross-checks");
    oracle_cmd->add_option("target", f.target, "quad or mc")->required()->check(CLI::IsMember({"quad", "mc"}));
    oracle_cmd->add_option("--n", f.n, "Index n");
    oracle_cmd->add_option("--m", f.m, "Power of log t (quad)");
    oracle_cmd->add_option("--x", f.x, "Shift x as p/q (quad)");
    oracle_cmd->add_option("--r", f.r, "Cube dimension (mc)");
    oracle_cmd->add_option("--samples", f.samples, "Monte Carlo samples (default 1000000)");
    oracle_cmd->add_option("--seed", f.seed, "Monte Carlo seed (default 42)");
    add_common(oracle_cmd, f);

    std::vector<const char*> argv{"harmid"};
    for (const std::string& a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    int exit_code = kExitOk;
    std::string text;
    try {
        if (compute_cmd->parsed())
            text = compute(*compute_cmd, f, parse_format(f.format, Format::text), exit_code);
        else if (verify_cmd->parsed())
            text = verify(*verify_cmd, f, parse_format(f.format, Format::json), exit_code);
        else if (series_cmd->parsed())
            text = series(*series_cmd, f, parse_format(f.format, Format::json), exit_code);
        else
            text = oracle(*oracle_cmd, f, parse_format(f.format, Format::json), exit_code);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        err << "check failed: " << e.what() << "\n";
        return kExitCheckFailed;
    }

    if (!f.output.empty()) {
        std::ofstream file(f.output, std::ios::binary);
        if (!file) {
            err << "error: cannot open " << f.output << " for writing\n";
            return kExitUsage;
        }
        file << text;
    } else {
        out << text;
    }
    return exit_code;
}

} // namespace harmonic::cli

#include "commands.hpp"

#include "arguments.hpp"
#include "report.hpp"
#include "suites.hpp"

#include <traintrack/appell.hpp>
#include <traintrack/error.hpp>
#include <traintrack/factorization.hpp>
#include <traintrack/modular.hpp>
#include <traintrack/pfaffian.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace traintrack::cli
{

namespace
{

std::string show(cplx z)
{
    std::ostringstream os;
    os << std::setprecision(16) << z.real() << (z.imag() < 0.0 || std::signbit(z.imag()) ? " - " : " + ")
       << std::abs(z.imag()) << "i";
    return os.str();
}

std::string show(double v)
{
    return format_number(v);
}

struct OutputOptions
{
    std::string path;
    std::string format;
};

void add_output_options(CLI::App *cmd, OutputOptions &o, const std::string &default_format,
                        const std::vector<std::string> &formats)
{
    o.format = default_format;
    cmd->add_option("--output,-o", o.path, "Write the result to this file instead of standard output");
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();
}

// ---- f2-eval -------------------------------------------------------------

struct F2EvalOptions
{
    std::string alpha = "0.5", beta1 = "0.5", beta2 = "0.5", gamma1 = "1", gamma2 = "1";
    std::string x, y;
    std::string method = "series";
    int level_max = QuadratureControl{}.level_max;
    OutputOptions output;
};

int cmd_f2_eval(const F2EvalOptions &o, std::ostream &out)
{
    const F2Params p{parse_complex(o.alpha), parse_complex(o.beta1), parse_complex(o.beta2),
                     parse_complex(o.gamma1), parse_complex(o.gamma2)};
    const ModuliPoint pt{parse_complex(o.x), parse_complex(o.y)};
    QuadratureControl q;
    q.level_max = o.level_max;
    std::vector<std::pair<std::string, Evaluation>> results;
    if (o.method == "series" || o.method == "both") {
        results.emplace_back("series", f2_series_eval(p, pt));
    }
    if (o.method == "integral" || o.method == "both") {
        results.emplace_back("integral", f2_euler_integral_eval(p, pt, q));
    }
    std::ostringstream text;
    if (o.output.format == "json") {
        json rs = json::array();
        for (const auto &[m, e] : results) {
            rs.push_back(json{{"method", m}, {"value", to_json(e.value)}, {"error", e.error}});
        }
        json j{{"schema_version", schema_version},
               {"command", "f2-eval"},
               {"params",
                {{"alpha", to_json(p.alpha)}, {"beta1", to_json(p.beta1)}, {"beta2", to_json(p.beta2)},
                 {"gamma1", to_json(p.gamma1)}, {"gamma2", to_json(p.gamma2)}}},
               {"point", {{"x", to_json(pt.x)}, {"y", to_json(pt.y)}}},
               {"results", rs}};
        if (results.size() == 2) {
            j["difference"] = std::abs(results[0].second.value - results[1].second.value);
        }
        text << j.dump(2) << '\n';
    } else if (o.output.format == "csv") {
        text << "method,value_re,value_im,error\n";
        for (const auto &[m, e] : results) {
            text << m << ',' << format_number(e.value.real()) << ',' << format_number(e.value.imag()) << ','
                 << format_number(e.error) << '\n';
        }
    } else {
        for (const auto &[m, e] : results) {
            text << std::left << std::setw(9) << m << show(e.value) << "   (error estimate " << show(e.error)
                 << ")\n";
        }
        if (results.size() == 2) {
            text << "difference " << show(std::abs(results[0].second.value - results[1].second.value)) << '\n';
        }
    }
    emit(text.str(), o.output.path, out);
    return exit_pass;
}

// ---- traintrack ------------------------------------------------------------

struct TraintrackOptions
{
    std::string z1, z2;
    double scale = 1.0;
    OutputOptions output;
};

int cmd_traintrack(const TraintrackOptions &o, std::ostream &out, std::ostream &err)
{
    const cplx z1 = parse_complex(o.z1);
    const cplx z2 = parse_complex(o.z2);
    TraintrackEvaluation ev;
    try {
        ev = traintrack_evaluate(z1, z2, o.scale);
    } catch (const Error &e) {
        if (e.kind() == ErrorKind::domain_violation) {
            const LambdaPair lp = invert_T({z1, 1.0 - z2});
            if (lp.is_limit_point()) {
                err << "warning: (z1, z2) maps to the limit point (Lambda1, Lambda2) = (" << show(lp.lambda1)
                    << ", " << show(lp.lambda2)
                    << ") where the logarithmic periods diverge; the pairing is not evaluated\n";
                return exit_usage;
            }
        }
        throw;
    }
    const TauPair tp = mirror_map(ev.preimage);
    std::ostringstream text;
    if (o.output.format == "json") {
        json periods = json::array();
        for (const cplx &p : ev.periods.pi) {
            periods.push_back(to_json(p));
        }
        const json j{{"schema_version", schema_version},
                     {"command", "traintrack"},
                     {"z1", to_json(z1)},
                     {"z2", to_json(z2)},
                     {"x", to_json(ev.point.x)},
                     {"y", to_json(ev.point.y)},
                     {"lambda1", to_json(ev.preimage.lambda1)},
                     {"lambda2", to_json(ev.preimage.lambda2)},
                     {"tau1", to_json(tp.tau1.value())},
                     {"tau2", to_json(tp.tau2.value())},
                     {"periods", periods},
                     {"scale", o.scale},
                     {"value", ev.value},
                     {"imaginary_residue", ev.imaginary_residue},
                     {"branch", ev.branch_note}};
        text << j.dump(2) << '\n';
    } else {
        text << "(x, y)              = (" << show(ev.point.x) << ", " << show(ev.point.y) << ")\n"
             << "(Lambda1, Lambda2)  = (" << show(ev.preimage.lambda1) << ", " << show(ev.preimage.lambda2) << ")\n"
             << "(tau1, tau2)        = (" << show(tp.tau1.value()) << ", " << show(tp.tau2.value()) << ")\n";
        for (std::size_t i = 0; i < 4; ++i) {
            text << "Pi" << i << "                 = " << show(ev.periods[i]) << '\n';
        }
        text << "pairing             = " << show(ev.value) << (o.scale != 1.0 ? "  (scaled)" : "") << '\n'
             << "imaginary residue   = " << show(ev.imaginary_residue) << '\n'
             << "branch              : " << ev.branch_note << '\n';
    }
    emit(text.str(), o.output.path, out);
    return exit_pass;
}

// ---- scan ------------------------------------------------------------------

struct ScanOptions
{
    std::string l1 = "0.05:0.15";
    std::string l2 = "0.85:0.95";
    int grid = 3;
    std::optional<int> grid1, grid2;
    std::string quantity = "pi0";
    OutputOptions output;
};

std::vector<double> grid_values(Interval iv, int n)
{
    std::vector<double> v;
    if (n <= 0 || iv.lo > iv.hi) {
        return v;
    }
    for (int i = 0; i < n; ++i) {
        v.push_back(n == 1 ? iv.lo : iv.lo + (iv.hi - iv.lo) * i / (n - 1));
    }
    return v;
}

int cmd_scan(const ScanOptions &o, std::ostream &out)
{
    const int n1 = o.grid1.value_or(o.grid);
    const int n2 = o.grid2.value_or(o.grid);
    if (n1 < 0 || n2 < 0) {
        throw std::invalid_argument("grid density must be non-negative");
    }
    const auto l1s = grid_values(parse_interval(o.l1), n1);
    const auto l2s = grid_values(parse_interval(o.l2), n2);

    std::vector<std::string> complex_cols{"lambda1", "lambda2", "x", "y", "tau1", "tau2"};
    std::vector<std::string> quantity_cols;
    std::vector<std::string> real_quantity_cols;
    if (o.quantity == "pi0") {
        quantity_cols = {"pi0"};
    } else if (o.quantity == "pairing") {
        real_quantity_cols = {"pairing"};
    } else {
        quantity_cols = {"lambda_tau1", "one_minus_lambda_tau2"};
    }

    json rows = json::array();
    for (double a : l1s) {
        for (double b : l2s) {
            const LambdaPair lp{a, b};
            json row = json::object();
            row["lambda1"] = to_json(lp.lambda1);
            row["lambda2"] = to_json(lp.lambda2);
            std::string status = "ok";
            if (std::abs(lp.sum()) < 1e-12) {
                status = "degenerate";
            } else {
                const ModuliPoint pt = map_T(lp);
                row["x"] = to_json(pt.x);
                row["y"] = to_json(pt.y);
                if (!lp.in_theorem_domain()) {
                    status = "out_of_domain";
                } else if (lp.is_limit_point()) {
                    status = "limit";
                }
            }
            if (status == "ok") {
                const TauPair tp = mirror_map(lp);
                row["tau1"] = to_json(tp.tau1.value());
                row["tau2"] = to_json(tp.tau2.value());
                if (o.quantity == "pi0") {
                    row["pi0"] = to_json(holomorphic_period(lp));
                } else if (o.quantity == "pairing") {
                    row["pairing"] = positivity_pairing(period_basis(lp));
                } else {
                    row["lambda_tau1"] = to_json(lambda_hauptmodul(tp.tau1));
                    row["one_minus_lambda_tau2"] = to_json(1.0 - lambda_hauptmodul(tp.tau2));
                }
            }
            row["status"] = status;
            rows.push_back(row);
        }
    }

    std::ostringstream text;
    if (o.output.format == "json") {
        text << json{{"schema_version", schema_version}, {"command", "scan"}, {"quantity", o.quantity}, {"rows", rows}}
                    .dump(2)
             << '\n';
    } else {
        std::vector<std::string> header;
        for (const auto &c : complex_cols) {
            header.push_back(c + "_re");
            header.push_back(c + "_im");
        }
        for (const auto &c : quantity_cols) {
            header.push_back(c + "_re");
            header.push_back(c + "_im");
        }
        for (const auto &c : real_quantity_cols) {
            header.push_back(c);
        }
        header.push_back("status");
        for (std::size_t i = 0; i < header.size(); ++i) {
            text << (i ? "," : "") << header[i];
        }
        text << '\n';
        for (const auto &row : rows) {
            std::vector<std::string> cells;
            const auto complex_cell = [&](const std::string &name) {
                if (row.contains(name)) {
                    cells.push_back(row[name]["re"].dump());
                    cells.push_back(row[name]["im"].dump());
                } else {
                    cells.emplace_back();
                    cells.emplace_back();
                }
            };
            std::for_each(complex_cols.begin(), complex_cols.end(), complex_cell);
            std::for_each(quantity_cols.begin(), quantity_cols.end(), complex_cell);
            for (const auto &c : real_quantity_cols) {
                cells.push_back(row.contains(c) ? row[c].dump() : "");
            }
            cells.push_back(row["status"].get<std::string>());
            for (std::size_t i = 0; i < cells.size(); ++i) {
                text << (i ? "," : "") << cells[i];
            }
            text << '\n';
        }
    }
    emit(text.str(), o.output.path, out);
    return exit_pass;
}

// ---- monodromy -------------------------------------------------------------

struct MonodromyOptions
{
    std::string around = "both";
    std::string basepoint = "0.35+0.01i";
    OutputOptions output;
};

int cmd_monodromy(const MonodromyOptions &o, std::ostream &out)
{
    const cplx base = parse_complex(o.basepoint);
    std::vector<cplx> points;
    if (o.around == "0" || o.around == "both") {
        points.emplace_back(0.0);
    }
    if (o.around == "1" || o.around == "both") {
        points.emplace_back(1.0);
    }
    const PfaffianSystem1D s = system_2f1({0.5, 0.5, 1.0});
    bool ok = true;
    json results = json::array();
    std::ostringstream text;
    for (const cplx &p : points) {
        const MonodromyResult r = monodromy_2f1(s, p, base);
        bool member = false;
        std::optional<IntMatrix2> rounded;
        try {
            rounded = round_integral(r.matrix);
            member = gamma2_membership(*rounded);
        } catch (const Error &) {
        }
        ok = ok && member;
        json m = json::array();
        for (int i = 0; i < 2; ++i) {
            m.push_back(json::array({to_json(r.matrix(i, 0)), to_json(r.matrix(i, 1))}));
        }
        json entry{{"around", to_json(p)},
                   {"matrix", m},
                   {"integrality_error", r.integrality_error},
                   {"transport_error", r.transport_error},
                   {"gamma2_member", member}};
        if (rounded) {
            const IntMatrix2 &k = *rounded;
            entry["rounded"] = json::array({json::array({k(0, 0), k(0, 1)}), json::array({k(1, 0), k(1, 1)})});
        }
        results.push_back(entry);
        if (o.output.format == "text") {
            text << "loop around z = " << p.real() << " from basepoint " << show(base) << '\n';
            if (rounded) {
                const IntMatrix2 &k = *rounded;
                text << "  [[" << k(0, 0) << ", " << k(0, 1) << "], [" << k(1, 0) << ", " << k(1, 1) << "]]\n";
            } else {
                text << "  not integral:\n";
                for (int i = 0; i < 2; ++i) {
                    text << "    " << show(r.matrix(i, 0)) << "   " << show(r.matrix(i, 1)) << '\n';
                }
            }
            text << "  integrality error " << show(r.integrality_error) << ", Gamma(2) member "
                 << (member ? "yes" : "no") << '\n';
        }
    }
    if (o.output.format == "json") {
        text << json{{"schema_version", schema_version}, {"command", "monodromy"}, {"basepoint", to_json(base)},
                     {"results", results}, {"passed", ok}}
                    .dump(2)
             << '\n';
    }
    emit(text.str(), o.output.path, out);
    return ok ? exit_pass : exit_failure;
}

// ---- verify ----------------------------------------------------------------

struct VerifyOptions
{
    std::string suite;
    RunConfig config;
    std::optional<std::size_t> samples;
    std::map<std::string, double> tolerances;
    std::string format = "json";
};

int cmd_verify(VerifyOptions &o, std::ostream &out)
{
    RunConfig &cfg = o.config;
    cfg.sample_count = o.samples;
    cfg.tolerances = o.tolerances;
    cfg.output_format = o.format == "csv" ? OutputFormat::csv : OutputFormat::json;
    cfg.validate();
    bool passed = false;
    std::string text;
    std::ostringstream summary;
    if (o.suite == "all") {
        const CombinedReport r = run_all(cfg);
        passed = r.passed;
        text = cfg.output_format == OutputFormat::csv ? report_csv(r) : report_json(r).dump(2) + "\n";
        for (const auto &s : r.suites) {
            summary << std::left << std::setw(14) << s.suite << (s.passed ? "pass" : "FAIL") << "  max residual "
                    << show(s.max_residual) << " (tolerance " << show(s.tolerance) << ")\n";
        }
    } else {
        const VerificationReport r = run_suite(o.suite, cfg);
        passed = r.passed;
        text = cfg.output_format == OutputFormat::csv ? report_csv(r) : report_json(r).dump(2) + "\n";
        summary << std::left << std::setw(14) << r.suite << (r.passed ? "pass" : "FAIL") << "  max residual "
                << show(r.max_residual) << " (tolerance " << show(r.tolerance) << ")\n";
    }
    emit(text, cfg.output_path, out);
    if (!cfg.output_path.empty()) {
        out << summary.str();
    }
    return passed ? exit_pass : exit_failure;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Hypergeometric, elliptic and modular numerics of the conformal traintrack integral"};
    app.name("traintrack");
    app.require_subcommand(1);

    F2EvalOptions f2;
    auto *f2_cmd = app.add_subcommand("f2-eval", "Evaluate Appell F2 by double series or Euler integral");
    f2_cmd->add_option("--alpha", f2.alpha)->capture_default_str();
    f2_cmd->add_option("--beta1", f2.beta1)->capture_default_str();
    f2_cmd->add_option("--beta2", f2.beta2)->capture_default_str();
    f2_cmd->add_option("--gamma1", f2.gamma1)->capture_default_str();
    f2_cmd->add_option("--gamma2", f2.gamma2)->capture_default_str();
    f2_cmd->add_option("--x", f2.x, "First variable (complex, e.g. 0.3+0.1i)")->required();
    f2_cmd->add_option("--y", f2.y, "Second variable")->required();
    f2_cmd->add_option("--method", f2.method)
        ->check(CLI::IsMember({"series", "integral", "both"}))
        ->capture_default_str();
    f2_cmd->add_option("--level-max", f2.level_max, "Quadrature doubling levels (3..14)")->capture_default_str();
    add_output_options(f2_cmd, f2.output, "text", {"text", "json", "csv"});

    TraintrackOptions tt;
    auto *tt_cmd = app.add_subcommand("traintrack", "Evaluate the traintrack pairing at (z1, z2)");
    tt_cmd->add_option("--z1", tt.z1)->required();
    tt_cmd->add_option("--z2", tt.z2)->required();
    tt_cmd->add_option("--scale", tt.scale, "Overall normalization applied to the raw pairing")
        ->capture_default_str();
    add_output_options(tt_cmd, tt.output, "text", {"text", "json"});

    ScanOptions sc;
    auto *sc_cmd = app.add_subcommand("scan", "Tabulate a quantity on a real (Lambda1, Lambda2) grid");
    sc_cmd->add_option("--lambda1,--l1", sc.l1, "Interval lo:hi")->capture_default_str();
    sc_cmd->add_option("--lambda2,--l2", sc.l2, "Interval lo:hi")->capture_default_str();
    sc_cmd->add_option("--grid", sc.grid, "Points per axis")->capture_default_str();
    sc_cmd->add_option("--grid1", sc.grid1, "Points along Lambda1 (overrides --grid)");
    sc_cmd->add_option("--grid2", sc.grid2, "Points along Lambda2 (overrides --grid)");
    sc_cmd->add_option("--quantity", sc.quantity)
        ->check(CLI::IsMember({"pi0", "pairing", "lambda_map"}))
        ->capture_default_str();
    add_output_options(sc_cmd, sc.output, "csv", {"csv", "json"});

    MonodromyOptions mo;
    auto *mo_cmd = app.add_subcommand("monodromy", "Monodromy of the Legendre system around z = 0 and z = 1");
    mo_cmd->add_option("--around", mo.around)->check(CLI::IsMember({"0", "1", "both"}))->capture_default_str();
    mo_cmd->add_option("--basepoint", mo.basepoint)->capture_default_str();
    add_output_options(mo_cmd, mo.output, "text", {"text", "json"});

    VerifyOptions vo;
    auto *vo_cmd = app.add_subcommand("verify", "Run a verification suite and write its report");
    std::vector<std::string> suite_names;
    for (const auto &s : suite_catalog()) {
        suite_names.push_back(s.name);
    }
    suite_names.emplace_back("all");
    vo_cmd->add_option("suite", vo.suite, "Suite name")->required()->check(CLI::IsMember(suite_names));
    vo_cmd->add_option("--seed", vo.config.rng_seed)->capture_default_str();
    vo_cmd->add_option("--samples", vo.samples, "Sample count for every sampled suite");
    for (const auto &s : suite_catalog()) {
        vo_cmd->add_option_function<double>(
            "--tol-" + s.name, [&vo, name = s.name](double v) { vo.tolerances[name] = v; },
            "Tolerance of the " + s.name + " suite (default " + show(s.default_tolerance) + ")");
    }
    vo_cmd->add_option("--output,-o", vo.config.output_path, "Write the report to this file");
    vo_cmd->add_option("--format", vo.format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    vo_cmd->add_flag("--timing", vo.config.timing, "Record wall-clock durations (reports are then not reproducible)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_pass : exit_usage;
    }

    try {
        if (f2_cmd->parsed()) {
            return cmd_f2_eval(f2, out);
        }
        if (tt_cmd->parsed()) {
            return cmd_traintrack(tt, out, err);
        }
        if (sc_cmd->parsed()) {
            return cmd_scan(sc, out);
        }
        if (mo_cmd->parsed()) {
            return cmd_monodromy(mo, out);
        }
        return cmd_verify(vo, out);
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
    }
    return exit_usage;
}

} // namespace traintrack::cli

#include "turan/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "turan/analytics.hpp"
#include "turan/certificate.hpp"
#include "turan/format.hpp"
#include "turan/gegenbauer.hpp"
#include "turan/suite.hpp"
#include "turan/zeros.hpp"

namespace turan {

namespace {

using json = nlohmann::ordered_json;
using Fields = std::vector<std::pair<std::string, std::optional<double>>>;

// Text: key=value lines. JSON: one object. CSV: header + one row.
void print_record(std::ostream& out, OutputFormat fmt, const Fields& fields)
{
    switch (fmt) {
    case OutputFormat::Text:
        for (const auto& [k, v] : fields) {
            out << k << '=' << (v ? format_real(*v) : std::string()) << '\n';
        }
        break;
    case OutputFormat::Json: {
        json j = json::object();
        for (const auto& [k, v] : fields) {
            j[k] = v ? json(*v) : json(nullptr);
        }
        out << j.dump(2) << '\n';
        break;
    }
    case OutputFormat::Csv:
        for (std::size_t i = 0; i < fields.size(); ++i) {
            out << (i ? "," : "") << fields[i].first;
        }
        out << '\n';
        for (std::size_t i = 0; i < fields.size(); ++i) {
            out << (i ? "," : "") << (fields[i].second ? format_real(*fields[i].second) : std::string());
        }
        out << '\n';
        break;
    }
}

std::string csv_quote(const std::string& s)
{
    std::string q = "\"";
    for (char c : s) {
        q += c;
        if (c == '"') {
            q += '"';
        }
    }
    return q + '"';
}

const std::map<std::string, OutputFormat> kFormats{
    {"text", OutputFormat::Text}, {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}};

struct Options {
    double lambda = 0.0;
    std::vector<double> lambdas;
    int n = 0;
    int n_min = 1;
    double x = 0.0;
    double x_min = -1.0;
    double x_max = 1.0;
    int grid = 1001;
    std::string family = "corollary12";
    std::string out_path;
    OutputFormat format = OutputFormat::Text;
    int depth = 30;
    std::string vary = "x";
    std::string target = "all";
    std::string lambda_cap;
    std::string check_path;
    std::vector<std::string> tolerances;
};

int cmd_eval(const Options& o, std::ostream& out)
{
    const UltraParams p(o.lambda, o.n);
    const PolyEval e = eval(p, o.x);
    const OdeResiduals r = ode_residuals(p, e);
    print_record(out, o.format,
                 {{"x", e.x}, {"p_prev", e.p_prev}, {"p", e.p}, {"p_next", e.p_next}, {"dp", e.dp}, {"d2p", e.d2p},
                  {"ode_r2", r.r2}, {"ode_r3", r.r3}});
    return 0;
}

int cmd_turan(const Options& o, std::ostream& out)
{
    const UltraParams p(o.lambda, o.n);
    const TuranEval t = turan_eval(p, o.x);
    const Discriminants d = discriminants(p, o.x);
    print_record(out, o.format,
                 {{"x", t.x}, {"delta", t.delta}, {"phi", t.phi}, {"dphi", t.dphi}, {"d2phi", t.d2phi},
                  {"psi", t.psi}, {"dpsi", t.dpsi}, {"D", d.D}, {"D1", d.D1}});
    return 0;
}

int cmd_zeros(const Options& o, std::ostream& out)
{
    const UltraParams p(o.lambda, o.n);
    const ZeroSet zs = zeros(p);
    std::optional<double> bound;
    if (p.n() >= 2) {
        bound = largest_zero_bound(p);
    }
    const double threshold = proof_threshold(p);
    switch (o.format) {
    case OutputFormat::Csv:
        out << "k,zero,residual\n";
        for (std::size_t k = 0; k < zs.zeros.size(); ++k) {
            out << k + 1 << ',' << format_real(zs.zeros[k]) << ',' << format_real(zs.residuals[k]) << '\n';
        }
        break;
    case OutputFormat::Json: {
        json j = json::object();
        j["lambda"] = p.lambda();
        j["n"] = p.n();
        j["zeros"] = zs.zeros;
        j["residuals"] = zs.residuals;
        j["largest_zero_squared"] = zs.largest() * zs.largest();
        j["largest_zero_bound"] = bound ? json(*bound) : json(nullptr);
        j["proof_threshold"] = threshold;
        out << j.dump(2) << '\n';
        break;
    }
    case OutputFormat::Text:
        for (std::size_t k = 0; k < zs.zeros.size(); ++k) {
            out << "x_" << k + 1 << '=' << format_real(zs.zeros[k]) << " residual=" << format_real(zs.residuals[k])
                << '\n';
        }
        out << "largest_zero_squared=" << format_real(zs.largest() * zs.largest()) << '\n';
        out << "largest_zero_bound=" << (bound ? format_real(*bound) : std::string("undefined (n=1)")) << '\n';
        out << "proof_threshold=" << format_real(threshold) << '\n';
        break;
    }
    return 0;
}

int cmd_bounds(const Options& o, std::ostream& out)
{
    const UltraParams p(o.lambda, o.n);
    const BoundReport r = bound_report(p, o.x, parse_bound_family(o.family));
    if (o.format == OutputFormat::Text) {
        out << "family=" << to_string(r.family) << '\n';
    }
    print_record(out, o.format,
                 {{"x", r.x}, {"value", r.value}, {"lower", r.lower}, {"upper", r.upper}, {"margin_low", r.margin_low},
                  {"margin_high", r.margin_high}});
    return 0;
}

int cmd_scan(const Options& o, std::ostream& out)
{
    if (o.format != OutputFormat::Csv && o.format != OutputFormat::Text) {
        throw DomainError("scan writes CSV only");
    }
    std::ostringstream buf;
    if (o.vary == "n") {
        if (o.n < 1) {
            throw DomainError("scan --vary n needs --n >= 1 (largest degree)");
        }
        buf << "n,delta\n";
        for (int n = 1; n <= o.n; ++n) {
            buf << n << ',' << format_real(turan_eval(UltraParams(o.lambda, n), o.x).delta) << '\n';
        }
    } else if (o.vary == "x") {
        if (o.grid < 3) {
            throw DomainError("grid size must be at least 3");
        }
        if (!(o.x_min < o.x_max)) {
            throw DomainError("scan needs --xmin < --xmax");
        }
        const UltraParams p(o.lambda, o.n);
        const BoundFamily family = parse_bound_family(o.family);
        buf << "x,delta,phi,dphi,d2phi,lower,upper\n";
        for (double x : grid_points(o.x_min, o.x_max, o.grid)) {
            const TuranEval t = turan_eval(p, x);
            std::string lower;
            std::string upper;
            try {
                const BoundReport r = bound_report(p, x, family);
                lower = format_real(r.lower);
                upper = r.upper ? format_real(*r.upper) : std::string();
            } catch (const DomainError&) {
                // Family not applicable at this (lambda, x): leave the columns empty.
            }
            buf << format_real(x) << ',' << format_real(t.delta) << ',' << format_real(t.phi) << ','
                << format_real(t.dphi) << ',' << format_real(t.d2phi) << ',' << lower << ',' << upper << '\n';
        }
    } else {
        throw DomainError("--vary must be x or n");
    }

    if (o.out_path.empty()) {
        out << buf.str();
    } else {
        std::ofstream f(o.out_path);
        if (!f) {
            throw DomainError("cannot open " + o.out_path + " for writing");
        }
        f << buf.str();
    }
    return 0;
}

int cmd_certify(const Options& o, std::ostream& out)
{
    if (!o.check_path.empty()) {
        std::ifstream f(o.check_path);
        if (!f) {
            throw DomainError("cannot open " + o.check_path);
        }
        Certificate c;
        try {
            c = read_certificate(f);
        } catch (const std::runtime_error& e) {
            throw DomainError(e.what());
        }
        const CheckResult r = check_certificate(c);
        out << c.target << ": verdict " << to_string(c.verdict) << ", check " << (r.ok ? "ok" : "FAILED: " + r.reason)
            << '\n';
        return r.ok ? 0 : 1;
    }

    CertifyOptions opts;
    opts.max_depth = o.depth;
    if (opts.max_depth < 1) {
        throw DomainError("--depth must be at least 1");
    }
    std::optional<Rational> cap;
    if (!o.lambda_cap.empty()) {
        try {
            cap = parse_rational(o.lambda_cap);
        } catch (const std::invalid_argument& e) {
            throw DomainError(e.what());
        }
    }

    std::vector<Certificate> certs;
    if (o.target == "ratio" || o.target == "all") {
        certs.push_back(certify_ratio_inequality(opts));
    }
    if (o.target == "bound" || o.target == "all") {
        certs.push_back(certify_bound_comparison(opts, cap));
    }
    if (certs.empty()) {
        throw DomainError("--target must be ratio, bound or all");
    }

    bool all_good = true;
    for (const auto& c : certs) {
        const CheckResult r = check_certificate(c);
        all_good = all_good && r.ok && c.verdict == Verdict::Proved;
        out << c.target << ": " << to_string(c.verdict) << " (independent check " << (r.ok ? "ok" : r.reason) << ")";
        if (!o.out_path.empty()) {
            std::filesystem::create_directories(o.out_path);
            const auto path = std::filesystem::path(o.out_path) / (c.target + ".cert");
            std::ofstream f(path);
            if (!f) {
                throw DomainError("cannot write " + path.string());
            }
            write_certificate(f, c);
            out << " -> " << path.string();
        }
        out << '\n';
        for (const auto& box : c.uncovered) {
            out << "  uncovered:";
            for (const auto& a : box) {
                out << ' ' << to_string(a);
            }
            out << '\n';
        }
    }
    return all_good ? 0 : 1;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    SuiteConfig cfg;
    if (!o.lambdas.empty()) {
        cfg.lambdas = o.lambdas;
    }
    if (o.n > 0) {
        cfg.n_max = o.n;
    }
    cfg.n_min = o.n_min;
    cfg.grid = o.grid;
    cfg.format = o.format;
    for (const auto& t : o.tolerances) {
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            throw DomainError("--tol expects name=value, got '" + t + "'");
        }
        try {
            cfg.tolerance_overrides[t.substr(0, eq)] = std::stod(t.substr(eq + 1));
        } catch (const std::logic_error&) {
            throw DomainError("--tol value is not a number in '" + t + "'");
        }
    }

    const auto results = run_suite(cfg);
    const bool all = std::all_of(results.begin(), results.end(), [](const SuiteCheck& c) { return c.passed; });
    const auto passed = std::count_if(results.begin(), results.end(), [](const SuiteCheck& c) { return c.passed; });

    switch (cfg.format) {
    case OutputFormat::Text:
        for (const auto& c : results) {
            out << (c.passed ? "PASS " : "FAIL ") << c.module << '/' << c.name << " worst=" << format_real(c.worst)
                << " tol=" << format_real(c.tolerance) << "  " << c.detail << '\n';
        }
        out << passed << '/' << results.size() << " checks passed\n";
        break;
    case OutputFormat::Json: {
        json j = json::object();
        j["passed"] = all;
        j["checks"] = json::array();
        for (const auto& c : results) {
            j["checks"].push_back({{"module", c.module},
                                   {"name", c.name},
                                   {"passed", c.passed},
                                   {"worst", c.worst},
                                   {"tolerance", c.tolerance},
                                   {"detail", c.detail}});
        }
        out << j.dump(2) << '\n';
        break;
    }
    case OutputFormat::Csv:
        out << "module,name,passed,worst,tolerance,detail\n";
        for (const auto& c : results) {
            out << c.module << ',' << c.name << ',' << (c.passed ? "true" : "false") << ',' << format_real(c.worst)
                << ',' << format_real(c.tolerance) << ',' << csv_quote(c.detail) << '\n';
        }
        break;
    }
    return all ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Turan determinant and normalized Turan function for ultraspherical polynomials", "turan"};
    app.require_subcommand(1);
    Options o;

    auto add_params = [&](CLI::App* sub) {
        sub->add_option("--lambda", o.lambda, "ultraspherical parameter, > -1/2")->required();
        sub->add_option("--n", o.n, "degree, >= 1")->required();
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option_function<std::string>(
               "--format", [&](const std::string& v) { o.format = kFormats.at(v); }, "text, json or csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
    };

    auto* eval_cmd = app.add_subcommand("eval", "p_{n-1}, p_n, p_{n+1}, p_n', p_n'' and ODE residuals at x");
    add_params(eval_cmd);
    eval_cmd->add_option("--x", o.x, "evaluation point")->required();
    add_format(eval_cmd);

    auto* turan_cmd = app.add_subcommand("turan", "delta, phi, phi', phi'', psi, psi', D, D1 at x");
    add_params(turan_cmd);
    turan_cmd->add_option("--x", o.x, "evaluation point")->required();
    add_format(turan_cmd);

    auto* zeros_cmd = app.add_subcommand("zeros", "zeros of p_n, largest-zero bound and proof threshold");
    add_params(zeros_cmd);
    add_format(zeros_cmd);

    auto* bounds_cmd = app.add_subcommand("bounds", "value and bounds of one bound family at x");
    add_params(bounds_cmd);
    bounds_cmd->add_option("--x", o.x, "evaluation point")->required();
    bounds_cmd->add_option("--family", o.family, "basic15, corollary12, szasz or refinement");
    add_format(bounds_cmd);

    auto* scan_cmd = app.add_subcommand("scan", "CSV scan over x (or over n at fixed x)");
    scan_cmd->add_option("--lambda", o.lambda, "ultraspherical parameter, > -1/2")->required();
    scan_cmd->add_option("--n", o.n, "degree (largest degree with --vary n)")->required();
    scan_cmd->add_option("--vary", o.vary, "x or n")->check(CLI::IsMember({"x", "n"}));
    scan_cmd->add_option("--x", o.x, "fixed point for --vary n");
    scan_cmd->add_option("--xmin", o.x_min, "scan start (default -1)");
    scan_cmd->add_option("--xmax", o.x_max, "scan end (default 1)");
    scan_cmd->add_option("--grid", o.grid, "number of points");
    scan_cmd->add_option("--family", o.family, "bound family for the lower/upper columns");
    scan_cmd->add_option("--out", o.out_path, "output file (default stdout)");
    add_format(scan_cmd);

    auto* certify_cmd = app.add_subcommand("certify", "exact positivity certificates");
    certify_cmd->add_option("--target", o.target, "ratio, bound or all")->check(CLI::IsMember({"ratio", "bound", "all"}));
    certify_cmd->add_option("--depth", o.depth, "subdivisions per axis");
    certify_cmd->add_option("--lambda-cap", o.lambda_cap, "restrict the bound comparison to lambda <= cap");
    certify_cmd->add_option("--out", o.out_path, "directory for <target>.cert files");
    certify_cmd->add_option("--check", o.check_path, "re-check a certificate file instead of searching");

    auto* verify_cmd = app.add_subcommand("verify", "run every invariant check; exit 0 iff all pass");
    verify_cmd->add_option("--lambda", o.lambdas, "comma-separated lambda list")->delimiter(',');
    verify_cmd->add_option("--n", o.n, "largest degree (default 60)");
    verify_cmd->add_option("--nmin", o.n_min, "smallest degree (default 1)");
    verify_cmd->add_option("--grid", o.grid, "grid size (default 1001)");
    verify_cmd->add_option("--tol", o.tolerances, "tolerance override name=value (repeatable)");
    add_format(verify_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        if (eval_cmd->parsed()) {
            return cmd_eval(o, out);
        }
        if (turan_cmd->parsed()) {
            return cmd_turan(o, out);
        }
        if (zeros_cmd->parsed()) {
            return cmd_zeros(o, out);
        }
        if (bounds_cmd->parsed()) {
            return cmd_bounds(o, out);
        }
        if (scan_cmd->parsed()) {
            return cmd_scan(o, out);
        }
        if (certify_cmd->parsed()) {
            return cmd_certify(o, out);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(o, out);
        }
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const ConsistencyError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << app.help();
    return 2;
}

} // namespace turan

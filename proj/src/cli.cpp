#include "esw/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "esw/reports.hpp"

namespace esw {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNotEinstein = 3;

std::string fmt(double v) {
    char b[64];
    std::snprintf(b, sizeof b, "%.10g", v);
    return b;
}

double default_tolerance() {
    if (const char* env = std::getenv("ESW_TOL")) {
        try {
            double v = std::stod(env);
            if (v > 0) return v;
        } catch (const std::exception&) {
        }
    }
    return 1e-7;
}

bool looks_rational(const std::string& t) {
    if (t.empty()) return false;
    for (size_t i = 0; i < t.size(); ++i) {
        char c = t[i];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '/') continue;
        if ((c == '+' || c == '-') && i == 0) continue;
        return false;
    }
    return true;
}

DiagonalMetric parse_metric(const std::string& s) {
    std::vector<Scalar> coeffs;
    std::string cur;
    auto flush = [&]() {
        if (cur.empty()) throw std::invalid_argument("empty metric coefficient in \"" + s + "\"");
        if (looks_rational(cur)) {
            coeffs.emplace_back(Rational::from_string(cur));
        } else {
            try {
                coeffs.push_back(Scalar::approx(std::stod(cur)));
            } catch (const std::exception&) {
                throw std::invalid_argument("cannot parse metric coefficient \"" + cur + "\"");
            }
        }
        cur.clear();
    };
    for (char ch : s) {
        if (ch == ',')
            flush();
        else if (!std::isspace(static_cast<unsigned char>(ch)))
            cur.push_back(ch);
    }
    flush();
    return DiagonalMetric(std::move(coeffs));
}

nlohmann::json verdict_json(const std::string& space, const DiagonalMetric& g, double residual,
                            const StabilityVerdict& v) {
    nlohmann::json j;
    j["space"] = space;
    nlohmann::json metric = nlohmann::json::array();
    for (const auto& x : g.x) metric.push_back(x.to_double());
    j["metric"] = metric;
    j["einstein_residual"] = residual;
    j["two_rho"] = v.two_rho;
    j["lambda_p"] = v.tt.empty() ? 0.0 : v.tt.front();
    j["lambda_max"] = v.tt.empty() ? 0.0 : v.tt.back();
    j["tt_spectrum"] = v.tt;
    j["kernel_dim_tt"] = v.kernel_dim_tt;
    j["ricci_locally_invertible"] = v.ricci_locally_invertible;
    j["verdict"] = to_string(v.kind);
    j["coindex"] = v.coindex;
    j["margin"] = v.margin;
    j["tolerance"] = v.tolerance;
    return j;
}

void print_verdict_table(std::ostream& out, const std::string& space, const DiagonalMetric& g,
                         double residual, const StabilityVerdict& v) {
    out << "space: " << space << "\n";
    out << "metric:";
    for (const auto& x : g.x) out << " " << x.to_string();
    out << "\n";
    out << "einstein residual: " << fmt(residual) << "\n";
    out << "2rho: " << fmt(v.two_rho) << "\n";
    out << "lambda_p: " << (v.tt.empty() ? "n/a" : fmt(v.tt.front())) << "\n";
    out << "lambda_max: " << (v.tt.empty() ? "n/a" : fmt(v.tt.back())) << "\n";
    out << "tt spectrum:";
    for (double t : v.tt) out << " " << fmt(t);
    out << "\n";
    out << "kernel_dim_tt: " << v.kernel_dim_tt << "\n";
    out << "ricci locally invertible: " << (v.ricci_locally_invertible ? "yes" : "no") << "\n";
    out << "verdict: " << to_string(v.kind) << "\n";
    out << "coindex: " << v.coindex << "\n";
    out << "margin: " << fmt(v.margin) << "\n";
    out << "tolerance: " << fmt(v.tolerance) << "\n";
}

int cmd_spaces(const std::string& action, const std::string& name, std::ostream& out,
               std::ostream& err) {
    if (action == "list") {
        for (const auto& e : catalog_entries()) {
            out << e.name;
            if (!e.params.empty()) out << ":" << e.params;
            out << "  -  " << e.summary << "\n";
        }
        return kExitOk;
    }
    // show
    SpaceDescriptor d;
    try {
        d = resolve_space(name);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    out << "name: " << d.name << "\n";
    out << "r: " << d.r << "\n";
    out << "dims:";
    for (long long v : d.dims) out << " " << v;
    out << "\n";
    out << "killing:";
    for (const auto& b : d.killing) out << " " << b.to_string();
    out << "\n";
    out << "constants:\n";
    for (const auto& [t, v] : d.constants.entries())
        out << "  [" << t[0] << t[1] << t[2] << "] = " << v.to_string() << "\n";
    if (d.trivial_dim != 0) out << "trivial_dim: " << d.trivial_dim << "\n";
    if (!d.notes.empty()) out << "notes: " << d.notes << "\n";
    return kExitOk;
}

int cmd_classify(const std::string& space_spec, const std::string& metric_spec, double tol,
                 const std::string& format, std::ostream& out, std::ostream& err) {
    SpaceDescriptor d = resolve_space(space_spec);
    DiagonalMetric g = parse_metric(metric_spec);
    double residual = einstein_residual(d, g);
    StabilityVerdict v;
    try {
        v = classify(d, g, tol);
    } catch (const NotEinsteinError& e) {
        err << "error: metric is not Einstein (residual " << fmt(e.residual) << " > 1e-8)\n";
        return kExitNotEinstein;
    }
    if (format == "json")
        out << verdict_json(space_spec, g, residual, v).dump(2) << "\n";
    else
        print_verdict_table(out, space_spec, g, residual, v);
    return kExitOk;
}

int cmd_einstein(const std::string& space_spec, const std::string& method,
                 const std::string& format, std::ostream& out, std::ostream&) {
    SpaceDescriptor d = resolve_space(space_spec);
    std::vector<EinsteinSolution> sols = solve_space(space_spec, method);
    nlohmann::json jall = nlohmann::json::array();
    for (const auto& s : sols) {
        if (!s.exists) {
            if (format == "json") {
                nlohmann::json j;
                j["label"] = s.label;
                j["source"] = to_string(s.source);
                j["exists"] = false;
                j["reason"] = s.reason;
                jall.push_back(j);
            } else {
                out << s.label << " [" << to_string(s.source) << "] does not exist: " << s.reason
                    << "\n";
            }
            continue;
        }
        StabilityVerdict v = classify(d, s.metric);
        if (format == "json") {
            nlohmann::json j = verdict_json(space_spec, s.metric, s.residual, v);
            j["label"] = s.label;
            j["source"] = to_string(s.source);
            j["exists"] = true;
            jall.push_back(j);
        } else {
            out << s.label << " [" << to_string(s.source) << "] metric =";
            for (const auto& x : s.metric.x) out << " " << x.to_string();
            out << "\n    2rho = " << s.two_rho_value.to_string() << "  residual = " << fmt(s.residual)
                << "\n    verdict = " << to_string(v.kind) << " coindex " << v.coindex
                << "  lambda_p = " << fmt(v.tt.empty() ? 0.0 : v.tt.front())
                << "  lambda_max = " << fmt(v.tt.empty() ? 0.0 : v.tt.back()) << "\n";
        }
    }
    if (format == "json") out << jall.dump(2) << "\n";
    if (sols.empty() && format != "json") out << "no Einstein metrics found\n";
    return kExitOk;
}

int cmd_reproduce(const std::string& table, const std::string& descriptor_dir, std::ostream& out,
                  std::ostream& err) {
    if (table == "FS3" || table == "FS4" || table == "FS5" || table == "FS6") {
        if (descriptor_dir.empty()) {
            err << "table " << table
                << " needs the structural constants of flag manifolds with b2(M)=1, which are "
                   "not bundled with this tool; supply descriptor files via --descriptor-dir "
                   "(one JSON descriptor per space, see README for the schema)\n";
            return kExitUsage;
        }
        namespace fs = std::filesystem;
        std::vector<std::string> files;
        for (const auto& entry : fs::directory_iterator(descriptor_dir))
            if (entry.path().extension() == ".json") files.push_back(entry.path().string());
        std::sort(files.begin(), files.end());
        if (files.empty()) {
            err << "no .json descriptor files found in " << descriptor_dir << "\n";
            return kExitUsage;
        }
        for (const auto& f : files) {
            SpaceDescriptor d = load_descriptor(f);
            out << "== " << d.name << " (" << f << ")\n";
            std::vector<EinsteinSolution> sols = solve_numeric(d);
            for (const auto& s : sols) {
                StabilityVerdict v = classify(d, s.metric);
                out << s.label << " metric =";
                for (const auto& x : s.metric.x) out << " " << fmt(x.to_double());
                out << "\n    2rho = " << fmt(v.two_rho) << "  lambda_p = " << fmt(v.tt.front())
                    << "  lambda_max = " << fmt(v.tt.back()) << "  verdict = " << to_string(v.kind)
                    << " coindex " << v.coindex << "\n";
            }
        }
        return kExitOk;
    }
    TableReport rep = reproduce_table(parse_table_id(table));
    out << render_table_report(rep);
    return rep.all_pass() ? kExitOk : kExitMismatch;
}

int cmd_flow(const std::string& space_spec, const std::string& x0_spec, double t_max, double dt,
             const std::string& out_path, std::ostream& out, std::ostream&) {
    SpaceDescriptor d = resolve_space(space_spec);
    DiagonalMetric x0 = parse_metric(x0_spec);
    FlowTrajectory traj = flow(d, x0, t_max, dt);
    if (!out_path.empty()) write_trajectory_csv(traj, out_path);
    out << "terminal: " << to_string(traj.terminal) << " at t = " << fmt(traj.times.back())
        << "\n";
    out << "final state:";
    for (double v : traj.states.back()) out << " " << fmt(v);
    out << "\n";
    out << "final scalar curvature: " << fmt(traj.scalars.back()) << "\n";
    out << "final einstein residual: " << fmt(traj.terminal_residual) << "\n";
    if (!out_path.empty()) out << "trajectory written to " << out_path << "\n";
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Curvature, Lichnerowicz spectra, and stability of diagonal invariant metrics "
                 "on compact homogeneous spaces"};
    app.require_subcommand(1);

    auto* sp_spaces = app.add_subcommand("spaces", "list the catalog or show one space");
    std::string spaces_action, spaces_name;
    sp_spaces->add_option("action", spaces_action, "list | show")->required();
    sp_spaces->add_option("name", spaces_name, "space to show, e.g. W11 or W2:1,1,1");

    auto* sp_classify = app.add_subcommand("classify", "classify an Einstein metric against 2rho");
    std::string cl_space, cl_metric, cl_format = "table";
    double cl_tol = default_tolerance();
    sp_classify->add_option("--space", cl_space, "space spec, e.g. W13 or W2:1,1,1 or @file.json")
        ->required();
    sp_classify->add_option("--metric", cl_metric, "comma-separated coefficients, e.g. 1,1,1")
        ->required();
    sp_classify->add_option("--tol", cl_tol, "classification tolerance (default 1e-7 or ESW_TOL)");
    sp_classify->add_option("--format", cl_format, "table | json")
        ->check(CLI::IsMember({"table", "json"}));

    auto* sp_einstein = app.add_subcommand("einstein", "find Einstein metrics on a space");
    std::string ei_space, ei_method = "auto", ei_format = "table";
    sp_einstein->add_option("--space", ei_space, "space spec")->required();
    sp_einstein->add_option("--method", ei_method, "auto | numeric")
        ->check(CLI::IsMember({"auto", "numeric"}));
    sp_einstein->add_option("--format", ei_format, "table | json")
        ->check(CLI::IsMember({"table", "json"}));

    auto* sp_reproduce = app.add_subcommand("reproduce", "recompute a reference table and diff it");
    std::string rp_table, rp_dir;
    sp_reproduce->add_option("--table", rp_table, "W2, W2Sc, W3, W3Sc, W4, W4_2, W5, or FS3..FS6")
        ->required();
    sp_reproduce->add_option("--descriptor-dir", rp_dir,
                             "directory of descriptor files (required for FS tables)");

    auto* sp_flow = app.add_subcommand("flow", "integrate the normalized Ricci flow");
    std::string fl_space, fl_x0, fl_out;
    double fl_tmax = 100.0, fl_dt = 1e-3;
    sp_flow->add_option("--space", fl_space, "space spec")->required();
    sp_flow->add_option("--x0", fl_x0, "initial metric, e.g. 1,1.01,0.99")->required();
    sp_flow->add_option("--t-max", fl_tmax, "integration time (default 100)");
    sp_flow->add_option("--dt", fl_dt, "step size (default 1e-3)");
    sp_flow->add_option("--out", fl_out, "CSV output path");

    // CLI11 consumes the argument vector back to front
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (sp_spaces->parsed()) {
            if (spaces_action == "list") return cmd_spaces("list", "", out, err);
            if (spaces_action == "show") {
                if (spaces_name.empty()) {
                    err << "error: `spaces show` needs a space name\n";
                    return kExitUsage;
                }
                return cmd_spaces("show", spaces_name, out, err);
            }
            err << "error: unknown spaces action \"" << spaces_action << "\" (use list or show)\n";
            return kExitUsage;
        }
        if (sp_classify->parsed())
            return cmd_classify(cl_space, cl_metric, cl_tol, cl_format, out, err);
        if (sp_einstein->parsed()) return cmd_einstein(ei_space, ei_method, ei_format, out, err);
        if (sp_reproduce->parsed()) return cmd_reproduce(rp_table, rp_dir, out, err);
        if (sp_flow->parsed()) return cmd_flow(fl_space, fl_x0, fl_tmax, fl_dt, fl_out, out, err);
    } catch (const NotEinsteinError& e) {
        err << "error: " << e.what() << "\n";
        return kExitNotEinstein;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitMismatch;
    }
    err << "error: no subcommand\n";
    return kExitUsage;
}

}  // namespace esw

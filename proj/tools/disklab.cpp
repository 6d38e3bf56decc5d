// disklab: computational function theory on the unit disk.
//
// Subcommands: eval, factor, matrix, analyze, verify, scan-frostman.
// Structured I/O is JSON; traces are CSV. Exit codes: 0 success/certified,
// 2 refuted/failed verification, 1 usage or input error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "disklab/descriptor.hpp"
#include "disklab/disklab.hpp"
#include "disklab/suites.hpp"

namespace {

using namespace disklab;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return json::parse(in); // parse errors carry byte positions
}

void write_output(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << payload << "\n";
}

std::string csv_join(const std::vector<std::string>& row) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) line += ",";
        line += row[i];
    }
    return line;
}

cplx parse_point(const std::string& s) {
    std::istringstream in(s);
    double re = 0.0, im = 0.0;
    char comma = 0;
    if (!(in >> re)) throw std::runtime_error("bad point '" + s + "', expected re,im");
    if (in >> comma) {
        if (comma != ',' || !(in >> im))
            throw std::runtime_error("bad point '" + s + "', expected re,im");
    }
    return {re, im};
}

// ladder spec: "1-2^-k:A..B" for dyadic rungs, or a comma list of radii
RadialLadder parse_ladder(const std::string& spec) {
    if (spec.rfind("1-2^-k:", 0) == 0) {
        const std::string range = spec.substr(7);
        const auto dots = range.find("..");
        if (dots == std::string::npos)
            throw std::runtime_error("bad ladder spec '" + spec + "', expected 1-2^-k:A..B");
        const int a = std::stoi(range.substr(0, dots));
        const int b = std::stoi(range.substr(dots + 2));
        if (a < 1 || b < a) throw std::runtime_error("bad ladder range in '" + spec + "'");
        std::vector<double> radii;
        for (int k = a; k <= b; ++k) radii.push_back(1.0 - std::ldexp(1.0, -k));
        return RadialLadder(std::move(radii));
    }
    std::vector<double> radii;
    std::istringstream in(spec);
    std::string tok;
    while (std::getline(in, tok, ',')) radii.push_back(std::stod(tok));
    return RadialLadder(std::move(radii));
}

struct CommonOptions {
    int grid_n = 4096;
    std::string ladder_spec = "1-2^-k:1..20";
    int trunc = 200;
    std::vector<std::string> tol_overrides;
    std::uint64_t seed = 0;
    std::string out_path;
    std::string format = "json";
};

void attach_common(CLI::App* cmd, CommonOptions& opt, bool seed_required = false) {
    cmd->add_option("--grid", opt.grid_n, "boundary grid size n");
    cmd->add_option("--ladder", opt.ladder_spec, "radial ladder spec, e.g. 1-2^-k:1..20");
    cmd->add_option("--trunc", opt.trunc, "series truncation order K");
    cmd->add_option("--tol", opt.tol_overrides, "tolerance override name=value (repeatable)");
    auto* seed = cmd->add_option("--seed", opt.seed, "seed for randomized suites");
    if (seed_required) seed->required();
    cmd->add_option("--out", opt.out_path, "write the report to a file instead of stdout");
    cmd->add_option("--format", opt.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
}

RunConfig make_config(const CommonOptions& opt) {
    RunConfig cfg;
    cfg.grid_n = opt.grid_n;
    cfg.trunc = opt.trunc;
    cfg.seed = opt.seed;
    cfg.threads = 1;
    if (const char* env = std::getenv("DISKLAB_THREADS")) {
        const int t = std::atoi(env);
        if (t >= 1) cfg.threads = t;
    }
    for (const auto& kv : opt.tol_overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("bad --tol '" + kv + "', expected name=value");
        cfg.tol.set(kv.substr(0, eq), std::stod(kv.substr(eq + 1)));
    }
    return cfg;
}

int cmd_eval(const std::string& fn_path, const std::vector<std::string>& at,
             const std::string& points_path, const CommonOptions& opt) {
    const json desc = load_json(fn_path);
    Handle f = handle_from_json(desc);
    std::vector<cplx> points;
    for (const auto& s : at) points.push_back(parse_point(s));
    if (!points_path.empty()) {
        const json pts = load_json(points_path);
        const json& arr = pts.is_array() ? pts : pts.at("points");
        for (const auto& p : arr)
            points.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
    }
    if (points.empty()) throw std::runtime_error("no evaluation points; use --at or --points");
    json out;
    out["values"] = json::array();
    for (const cplx& z : points) {
        json row;
        row["z"] = json::array({z.real(), z.imag()});
        try {
            const cplx v = f(z);
            row["value"] = json::array({v.real(), v.imag()});
            row["status"] = "ok";
        } catch (const std::exception& e) {
            row["value"] = nullptr;
            row["status"] = std::string("error: ") + e.what();
        }
        out["values"].push_back(std::move(row));
    }
    write_output(opt.out_path, out.dump(2));
    return 0;
}

int cmd_factor(const std::string& fn_path, const CommonOptions& opt) {
    Handle f = handle_from_json(load_json(fn_path));
    FactorizeOptions fo;
    fo.grid_n = opt.grid_n;
    const Factorization fac = factorize(f, fo);
    json out;
    out["outer"] = to_json(fac.outer);
    out["inner_residual"] = fac.inner_residual;
    write_output(opt.out_path, out.dump());
    return 0;
}

int cmd_matrix(const std::string& wco_path, int K, int M, const CommonOptions& opt) {
    const WeightedCompositionOperator T = wco_from_json(load_json(wco_path));
    const OperatorMatrix m = monomial_matrix(T, K, M);
    // rows = coefficient index, columns = k, complex cells as re,im pairs
    std::ostringstream csv;
    csv << "row";
    for (int k = 0; k <= K; ++k) csv << ",re_" << k << ",im_" << k;
    csv << "\n";
    for (int row = 0; row <= M; ++row) {
        csv << row;
        for (int k = 0; k <= K; ++k) {
            const cplx c = m.columns[k].coeff(row);
            csv << "," << format_double(c.real()) << "," << format_double(c.imag());
        }
        csv << "\n";
    }
    write_output(opt.out_path, csv.str());
    return 0;
}

int cmd_analyze(const std::string& action_path, const CommonOptions& opt) {
    const RunConfig cfg = make_config(opt);
    const MonomialAction action = action_from_json(load_json(action_path));
    if (action.order() < 2)
        throw std::runtime_error("analyze: need at least three entries (K >= 2)");
    const PreserverReport rep = reconstruct(action, cfg);
    write_output(opt.out_path, to_json(rep).dump(2));
    return rep.classification == Classification::NotPreserver ? 2 : 0;
}

int cmd_verify(const std::string& suite, const std::string& axiom_norm, int axiom_nmax,
               const CommonOptions& opt) {
    const RunConfig cfg = make_config(opt);
    const suites::SuiteReport rep = suites::run_suite(suite, cfg, axiom_norm, axiom_nmax);
    for (const auto& c : rep.cases)
        std::printf("%s  %-45s %s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                    c.detail.c_str());
    if (!opt.out_path.empty()) {
        if (opt.format == "csv") {
            std::ostringstream csv;
            for (const auto& row : rep.trace) csv << csv_join(row) << "\n";
            if (rep.trace.empty())
                for (const auto& c : rep.cases)
                    csv << (c.pass ? "PASS," : "FAIL,") << c.name << "," << c.detail << "\n";
            std::ofstream out(opt.out_path);
            out << csv.str();
        } else {
            json out;
            out["suite"] = rep.suite;
            out["cases"] = json::array();
            for (const auto& c : rep.cases)
                out["cases"].push_back(
                    json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
            out["all_pass"] = rep.all_pass();
            std::ofstream outf(opt.out_path);
            outf << out.dump(2) << "\n";
        }
    }
    return rep.all_pass() ? 0 : 2;
}

int cmd_scan_frostman(const std::string& inner_path, const std::vector<std::string>& at,
                      const CommonOptions& opt) {
    const RunConfig cfg = make_config(opt);
    const auto canonical = canonical_from_json(load_json(inner_path));
    if (!canonical)
        throw std::runtime_error("scan-frostman: descriptor must be of type blaschke or inner");
    std::vector<cplx> a_grid;
    for (const auto& s : at) a_grid.push_back(parse_point(s));
    if (a_grid.empty()) a_grid = {cplx(0.0), cplx(0.3), cplx(0.5), cplx(0.0, 0.7), cplx(-0.4)};
    FrostmanOptions fo;
    fo.threshold = cfg.tol.frostman;
    fo.threads = cfg.threads;
    fo.estimator.alias_cutoff = cfg.tol.alias_cutoff;
    const auto scan = frostman_scan(*canonical, a_grid, parse_ladder(opt.ladder_spec),
                                    BoundaryGrid(cfg.grid_n), fo);
    if (opt.format == "csv") {
        std::ostringstream csv;
        csv << "a_re,a_im,mass_estimate,exceeds,reliable\n";
        for (const auto& pt : scan)
            csv << format_double(pt.a.real()) << "," << format_double(pt.a.imag()) << ","
                << format_double(pt.mass.estimate) << "," << (pt.exceeds ? 1 : 0) << ","
                << (pt.mass.reliable ? 1 : 0) << "\n";
        write_output(opt.out_path, csv.str());
    } else {
        json out = json::array();
        for (const auto& pt : scan)
            out.push_back(json{{"a", json::array({pt.a.real(), pt.a.imag()})},
                               {"estimate", pt.mass.estimate},
                               {"exceeds", pt.exceeds},
                               {"reliable", pt.mass.reliable}});
        write_output(opt.out_path, out.dump(2));
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"computational function theory on the unit disk"};
    app.require_subcommand(1);

    CommonOptions opt;

    std::string fn_path, points_path;
    std::vector<std::string> at;
    auto* eval = app.add_subcommand("eval", "evaluate a function descriptor at points");
    eval->add_option("descriptor", fn_path, "function descriptor JSON file")->required();
    eval->add_option("--at", at, "evaluation point re,im (repeatable)");
    eval->add_option("--points", points_path, "JSON file with [[re,im],...]");
    attach_common(eval, opt);

    std::string factor_path;
    auto* factor = app.add_subcommand("factor", "inner-outer factorization of a function");
    factor->add_option("descriptor", factor_path, "function descriptor JSON file")->required();
    attach_common(factor, opt);

    std::string wco_path;
    int mat_K = 8, mat_M = 32;
    auto* matrix = app.add_subcommand("matrix", "monomial-basis matrix of a weighted composition");
    matrix->add_option("wco", wco_path, "wco descriptor JSON file")->required();
    matrix->add_option("-K,--columns", mat_K, "highest monomial power");
    matrix->add_option("-M,--rows", mat_M, "highest coefficient index");
    attach_common(matrix, opt);

    std::string action_path;
    auto* analyze = app.add_subcommand("analyze", "classify a monomial action");
    analyze->add_option("action", action_path, "action descriptor JSON file")->required();
    attach_common(analyze, opt);

    std::string suite_name, axiom_norm;
    int axiom_nmax = 200;
    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    verify
        ->add_option("suite", suite_name,
                     "one of: lindelof, frostman, littlewood, dirichlet-mult, axioms, "
                     "distance, smirnov")
        ->required();
    verify->add_option("--norm", axiom_norm, "axioms suite: hardy, dirichlet or bergman-a2");
    verify->add_option("--nmax", axiom_nmax, "axioms suite: highest monomial power");
    attach_common(verify, opt, /*seed_required=*/true);

    std::string scan_path;
    std::vector<std::string> scan_at;
    auto* scan = app.add_subcommand("scan-frostman", "singular-mass scan of phi_a o h");
    scan->add_option("inner", scan_path, "inner/blaschke descriptor JSON file")->required();
    scan->add_option("--a", scan_at, "shift point re,im (repeatable)");
    attach_common(scan, opt);

    CLI11_PARSE(app, argc, argv);

    try {
        if (eval->parsed()) return cmd_eval(fn_path, at, points_path, opt);
        if (factor->parsed()) return cmd_factor(factor_path, opt);
        if (matrix->parsed()) return cmd_matrix(wco_path, mat_K, mat_M, opt);
        if (analyze->parsed()) return cmd_analyze(action_path, opt);
        if (verify->parsed()) return cmd_verify(suite_name, axiom_norm, axiom_nmax, opt);
        if (scan->parsed()) return cmd_scan_frostman(scan_path, scan_at, opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

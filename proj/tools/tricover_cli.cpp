// tricover command line: every pipeline stage behind one binary with
// machine-readable (JSON) reports.
//
// exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage error

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tricover/ball.hpp"
#include "tricover/characteristics.hpp"
#include "tricover/configspace.hpp"
#include "tricover/curve.hpp"
#include "tricover/inverse.hpp"
#include "tricover/report.hpp"
#include "tricover/suites.hpp"
#include "tricover/theta.hpp"

using namespace tricover;

namespace {

Vec4 parse_x(const std::string& s) {
    Vec4 x{};
    std::istringstream in(s);
    std::string part;
    int idx = 0;
    while (std::getline(in, part, ';')) {
        if (idx >= 4) throw input_error("--x: expected four components");
        double re = 0, im = 0;
        if (std::sscanf(part.c_str(), "%lf,%lf", &re, &im) != 2)
            throw input_error("--x: components are re,im pairs separated by ';'");
        x[static_cast<std::size_t>(idx++)] = cdouble(re, im);
    }
    if (idx != 4) throw input_error("--x: expected four components");
    return x;
}

std::array<double, 6> parse_lambda(const std::string& s) {
    std::array<double, 6> l{};
    std::istringstream in(s);
    std::string part;
    int idx = 0;
    while (std::getline(in, part, ',')) {
        if (idx >= 6) throw input_error("--lambda: expected six values");
        l[static_cast<std::size_t>(idx++)] = std::stod(part);
    }
    if (idx != 6) throw input_error("--lambda: expected six values");
    return l;
}

std::vector<std::array<double, 6>> parse_lambda_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open lambda file " + path);
    std::vector<std::array<double, 6>> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        out.push_back(parse_lambda(line));
    }
    if (out.empty()) throw input_error("lambda file has no rows");
    return out;
}

void emit(const Report& rep, const std::string& output) {
    std::string text = rep.to_string();
    if (output.empty() || output == "-") {
        std::fputs(text.c_str(), stdout);
    } else {
        std::ofstream out(output, std::ios::binary);
        if (!out) throw input_error("cannot open output file " + output);
        out << text;
    }
}

Report ball_point_report(const BallPoint& x) {
    Report r = Report::object();
    Report coords = Report::array();
    for (const auto& z : x.x) coords.push(Report::complex_number(z));
    r.set("x", std::move(coords));
    r.set("margin", x.margin);
    r.set("near_boundary", x.near_boundary);
    return r;
}

CycleTable table_from_flag(const std::string& path) {
    return path.empty() ? CycleTable::builtin() : CycleTable::load_file(path);
}

int run_embed(const std::string& xs, double eps, const std::string& output) {
    BallPoint x = BallPoint::from(parse_x(xs));
    SiegelPoint tau = embed_j(x);
    Report rep = Report::object();
    rep.set("command", "embed");
    rep.set("eps", eps);
    rep.set("point", ball_point_report(x));
    rep.set("omega", Report::complex_matrix(tau.tau));
    rep.set("lambda_min", tau.lambda_min);
    emit(rep, output);
    return 0;
}

int run_theta(const std::string& xs, double eps, const std::string& output) {
    BallPoint x = BallPoint::from(parse_x(xs));
    SiegelPoint tau = embed_j(x);
    Report rep = Report::object();
    rep.set("command", "theta");
    rep.set("eps", eps);
    rep.set("point", ball_point_report(x));
    rep.set("lambda_min", tau.lambda_min);
    Report vals = Report::array();
    for (const auto& lab : all_labels()) {
        SixthChar c = characteristic_for_label(lab);
        ThetaValue t = theta_constant(c, tau, eps);
        Report row = Report::object();
        row.set("label", lab.text());
        Report sixa = Report::array();
        for (int v : c.six_a) sixa.push(Report::integer(v));
        row.set("six_a", std::move(sixa));
        row.set("value", t.value);
        row.set("tail_bound", t.tail_bound);
        row.set("radius", t.radius_used);
        vals.push(std::move(row));
        if (lab.cls == LabelClass::TriplePairing) {
            // the +- partner shares the value by evenness; emit it for completeness
            Report row2 = Report::object();
            row2.set("label", lab.text() + "-");
            Report sixa2 = Report::array();
            for (int v : c.negated().six_a) sixa2.push(Report::integer(v));
            row2.set("six_a", std::move(sixa2));
            row2.set("value", t.value);
            row2.set("tail_bound", t.tail_bound);
            row2.set("radius", t.radius_used);
            vals.push(std::move(row2));
        }
    }
    rep.set("characteristics", std::move(vals));
    emit(rep, output);
    return 0;
}

int run_invert(const std::string& xs, double eps, const std::string& output) {
    BallPoint x = BallPoint::from(parse_x(xs));
    ThetaMapResult tm = theta_map(x, eps);
    Report rep = Report::object();
    rep.set("command", "invert");
    rep.set("eps", eps);
    rep.set("point", ball_point_report(x));
    Report ys = Report::array();
    const auto& ms = canonical_matchings();
    for (int i = 0; i < 15; ++i) {
        Report row = Report::object();
        row.set("label", ms[static_cast<std::size_t>(i)].text());
        row.set("cube", tm.y.y[static_cast<std::size_t>(i)]);
        ys.push(std::move(row));
    }
    rep.set("theta_cubes", std::move(ys));
    rep.set("linear_residual", tm.residuals.linear);
    rep.set("cubic_residual", tm.residuals.cubic);
    rep.set("min_abs_normalized", tm.min_abs);
    rep.set("theta_error_bound", tm.error_bound);
    try {
        EllResult er = ell_from_theta(x, eps);
        Report ell = Report::array();
        for (const auto& v : er.ell) ell.push(Report::complex_number(v));
        rep.set("ell", std::move(ell));
        rep.set("ell_cross_check_dev", er.cross_check_dev);
    } catch (const mirror_error& e) {
        rep.set("ell", Report::null());
        rep.set("ell_status", std::string("mirror-proximity: ") + e.what());
    }
    emit(rep, output);
    return 0;
}

Report forward_report(const BranchData& bd, double tol, bool full, const CycleTable& table) {
    Report rep = Report::object();
    Report lam = Report::array();
    for (double v : bd.lambda) lam.push(Report::number(v));
    rep.set("lambda", std::move(lam));
    if (full) {
        FullPeriods fp = full_periods(bd, tol, table);
        Report xa = Report::array(), xb = Report::array();
        for (const auto& z : fp.periods.xA) xa.push(Report::complex_number(z));
        for (const auto& z : fp.periods.xB) xb.push(Report::complex_number(z));
        rep.set("xA", std::move(xa));
        rep.set("xB", std::move(xb));
        rep.set("twist_residual", fp.periods.twist_residual);
        rep.set("ball_margin", fp.periods.ball_margin);
        rep.set("omega_A", Report::complex_matrix(fp.omega_A));
        rep.set("omega_B", Report::complex_matrix(fp.omega_B));
        rep.set("omega", Report::complex_matrix(fp.omega));
        rep.set("omega_symmetry_residual", fp.symmetry_residual);
        rep.set("omega_vs_embedding", fp.embed_match_residual);
    } else {
        CyclePeriods p = psi_forward(bd, tol, table);
        Report xa = Report::array(), xb = Report::array();
        for (const auto& z : p.xA) xa.push(Report::complex_number(z));
        for (const auto& z : p.xB) xb.push(Report::complex_number(z));
        rep.set("xA", std::move(xa));
        rep.set("xB", std::move(xb));
        rep.set("twist_residual", p.twist_residual);
        rep.set("ball_margin", p.ball_margin);
    }
    return rep;
}

int run_forward(const std::vector<std::array<double, 6>>& rows, double tol, bool full,
                const std::string& table_path, const std::string& output) {
    CycleTable table = table_from_flag(table_path);
    Report rep = Report::object();
    rep.set("command", "forward");
    rep.set("tol", tol);
    rep.set("full_periods", full);
    Report runs = Report::array();
    for (const auto& l : rows) runs.push(forward_report(BranchData::from(l), tol, full, table));
    rep.set("runs", std::move(runs));
    emit(rep, output);
    return 0;
}

int run_roundtrip(const std::vector<std::array<double, 6>>& rows, double tol, double eps,
                  const std::string& table_path, const std::string& output) {
    CycleTable table = table_from_flag(table_path);
    Report rep = Report::object();
    rep.set("command", "roundtrip");
    rep.set("tol", tol);
    rep.set("eps", eps);
    bool all_ok = true;
    Report runs = Report::array();
    for (const auto& l : rows) {
        RoundtripReport rr = roundtrip(BranchData::from(l), tol, eps, table);
        Report row = Report::object();
        Report lam = Report::array();
        for (double v : l) lam.push(Report::number(v));
        row.set("lambda", std::move(lam));
        Report xs = Report::array();
        for (const auto& z : rr.x) xs.push(Report::complex_number(z));
        row.set("x", std::move(xs));
        row.set("projective_deviation", rr.projective_deviation);
        row.set("lsq_deviation", rr.lsq_deviation);
        Report perm = Report::array();
        for (int v : rr.relabeling) perm.push(Report::integer(v));
        row.set("relabeling", std::move(perm));
        row.set("identity_relabeling", rr.identity_relabeling);
        Report et = Report::array(), ec = Report::array();
        for (const auto& v : rr.ell_theta) et.push(Report::complex_number(v));
        for (const auto& v : rr.ell_config) ec.push(Report::complex_number(v));
        row.set("ell_theta", std::move(et));
        row.set("ell_config", std::move(ec));
        row.set("ell_deviation", rr.ell_deviation);
        row.set("twist_residual", rr.twist_residual);
        row.set("theta_linear_residual", rr.theta_linear_residual);
        row.set("theta_cubic_residual", rr.theta_cubic_residual);
        bool ok = rr.projective_deviation < 1e-6 && rr.ell_deviation < 1e-6;
        row.set("pass", ok);
        all_ok = all_ok && ok;
        runs.push(std::move(row));
    }
    rep.set("runs", std::move(runs));
    rep.set("pass", all_ok);
    emit(rep, output);
    return all_ok ? 0 : 1;
}

int run_verify(const std::string& suite, int samples, std::uint64_t seed, double eps, double tol,
               const std::string& output) {
    SuiteResult res;
    if (suite == "group") res = suite_group();
    else if (suite == "characteristics") res = suite_characteristics();
    else if (suite == "relations") res = suite_relations(samples, seed, eps);
    else if (suite == "invariance") res = suite_invariance(samples, seed, eps);
    else if (suite == "vanishing") res = suite_vanishing(samples, seed, eps);
    else if (suite == "equivariance") res = suite_equivariance(samples, seed, eps);
    else if (suite == "quadrature") res = suite_quadrature(samples, seed);
    else if (suite == "forward") res = suite_forward(samples, seed, tol);
    else if (suite == "roundtrip") res = suite_roundtrip(samples, seed, tol, eps);
    else throw input_error("unknown suite '" + suite + "'");
    Report rep = Report::object();
    rep.set("command", "verify");
    rep.set("suite", res.name);
    rep.set("samples", samples);
    rep.set("seed", static_cast<long long>(seed));
    rep.set("pass", res.pass);
    rep.set("details", std::move(res.details));
    emit(rep, output);
    return res.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tricover: period geometry of cyclic triple covers of P^1 branched at six points"};
    app.require_subcommand(1);

    std::string xs, lambda_str, lambda_file, output, table_path, suite;
    double eps = 1e-12, tol = 1e-8;
    bool full = false;
    int samples = 20;
    std::uint64_t seed = 20240601;

    auto add_output = [&](CLI::App* cmd) { cmd->add_option("--output", output, "report file (default stdout)"); };

    auto* embed = app.add_subcommand("embed", "ball point -> Siegel period matrix");
    embed->add_option("--x", xs, "ball point: re,im;re,im;re,im;re,im")->required();
    embed->add_option("--eps", eps, "theta tolerance");
    add_output(embed);

    auto* theta = app.add_subcommand("theta", "all 81 theta constants at j(x)");
    theta->add_option("--x", xs)->required();
    theta->add_option("--eps", eps);
    add_output(theta);

    auto* invert = app.add_subcommand("invert", "theta cubes, Y residuals and ell recovery at x");
    invert->add_option("--x", xs)->required();
    invert->add_option("--eps", eps);
    add_output(invert);

    auto* forward = app.add_subcommand("forward", "branch points -> A/B periods of dz/w");
    forward->add_option("--lambda", lambda_str, "six increasing reals: l1,l2,...,l6");
    forward->add_option("--lambda-file", lambda_file, "file with one comma-separated sextuple per line");
    forward->add_flag("--full-periods", full, "integrate all four forms and assemble omega");
    forward->add_option("--tol", tol, "quadrature tolerance");
    forward->add_option("--cycle-table", table_path, "cycle table file (default: built-in table)");
    add_output(forward);

    auto* rt = app.add_subcommand("roundtrip", "Theta(psi(lambda)) against iota(lambda)");
    rt->add_option("--lambda", lambda_str);
    rt->add_option("--lambda-file", lambda_file);
    rt->add_option("--tol", tol, "quadrature tolerance");
    rt->add_option("--eps", eps, "theta tolerance");
    rt->add_option("--cycle-table", table_path);
    add_output(rt);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite,
                       "group|characteristics|relations|invariance|vanishing|equivariance|quadrature|forward|roundtrip")
        ->required();
    verify->add_option("--samples", samples, "sample count for randomized suites");
    verify->add_option("--seed", seed, "RNG seed (fully determines all sampling)");
    verify->add_option("--eps", eps, "theta tolerance");
    verify->add_option("--tol", tol, "quadrature tolerance");
    add_output(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (embed->parsed()) return run_embed(xs, eps, output);
        if (theta->parsed()) return run_theta(xs, eps, output);
        if (invert->parsed()) return run_invert(xs, eps, output);
        if (forward->parsed() || rt->parsed()) {
            std::vector<std::array<double, 6>> rows;
            if (!lambda_file.empty()) rows = parse_lambda_file(lambda_file);
            else if (!lambda_str.empty()) rows.push_back(parse_lambda(lambda_str));
            else throw input_error("need --lambda or --lambda-file");
            if (forward->parsed()) return run_forward(rows, tol, full, table_path, output);
            return run_roundtrip(rows, tol, eps, table_path, output);
        }
        if (verify->parsed()) return run_verify(suite, samples, seed, eps, tol, output);
    } catch (const input_error& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return 2;
    } catch (const error& e) {
        std::fprintf(stderr, "check failed: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}

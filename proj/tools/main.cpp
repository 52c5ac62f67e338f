// cswigner: two-particle Calogero-Sutherland Wigner functions.
//
// Subcommands:
//   eval    evaluate one Wigner value with diagnostics
//   grid    emit a sampled surface as CSV or JSON (figure presets included)
//   verify  run the cross-checking suites, CI-friendly exit codes
//   zeros   asymptotic zero-ellipse geometry
//
// Exit codes: 0 success, 1 flag misuse / IO failure, 2 numeric failure
// (residue above tolerance, quadrature non-convergence) or failed verify.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cswigner/csm.hpp"
#include "cswigner/errors.hpp"
#include "cswigner/output.hpp"
#include "cswigner/verify.hpp"
#include "cswigner/wigner.hpp"

namespace {

using namespace cswigner;

int env_threads() {
    const char* v = std::getenv("CSWIGNER_THREADS");
    if (!v) return 0;
    return std::atoi(v);
}

wigner::Method parse_method(const std::string& s) {
    if (s == "operator") return wigner::Method::operator_calculus;
    if (s == "series") return wigner::Method::series;
    if (s == "quadrature") return wigner::Method::quadrature;
    if (s == "closed-g0") return wigner::Method::closed_g0;
    if (s == "asymptotic") return wigner::Method::asymptotic;
    throw CLI::ValidationError("--method", "unknown method " + s);
}

double resolve_omega_bar(double omega_bar, double omega0_bar) {
    // --omega0-bar computes the hybrid frequency from the pair frequency.
    if (omega0_bar >= 0) return std::sqrt(1.0 + 2.0 * omega0_bar * omega0_bar);
    return omega_bar;
}

void print_eval(const wigner::EvalResult& r, double alpha) {
    std::printf("%.17g\n", r.value);
    std::printf("method=%s imag_residue=%.3e quad_error=%.3e",
                wigner::method_name(r.method), r.imag_residue, r.quad_error);
    if (std::floor(alpha) != alpha)
        std::printf(" note=convention-dependent(|q|^alpha even extension)");
    std::printf("\n");
}

int cmd_eval(const std::string& kind, int n, int ell, double alpha, double omega_bar,
             double q, double p, double Q, double P, const std::string& method_s) {
    const auto method = parse_method(method_s);
    wigner::EvalResult r;
    if (kind == "cm") {
        r = wigner::cm_wigner(ell, Q, P);
    } else if (kind == "rel") {
        wigner::WignerSpec spec{wigner::Kind::relative, ell, n, alpha, omega_bar, method};
        wigner::validate(spec);
        switch (method) {
            case wigner::Method::operator_calculus:
                r = wigner::rel_wigner_operator(n, static_cast<int>(alpha), omega_bar, {q, p});
                break;
            case wigner::Method::series:
                r = wigner::rel_wigner_series(n, static_cast<int>(alpha), omega_bar, {q, p});
                break;
            case wigner::Method::quadrature:
                r = wigner::rel_wigner_quad(n, alpha, omega_bar, {q, p});
                break;
            case wigner::Method::closed_g0:
                r = wigner::rel_wigner_g0(2 * n + static_cast<int>(alpha), omega_bar, {q, p});
                break;
            case wigner::Method::asymptotic:
                r = {wigner::rel_wigner_asymptotic(2 * n + static_cast<int>(alpha), omega_bar,
                                                   {q, p}),
                     wigner::Method::asymptotic, 0.0, 0.0};
                break;
        }
    } else { // total
        wigner::WignerSpec spec{wigner::Kind::total, ell, n, alpha, omega_bar, method};
        wigner::validate(spec);
        r = wigner::total_wigner(ell, n, alpha, omega_bar, Q, P, q, p, method);
    }
    print_eval(r, kind == "cm" ? 0.0 : alpha);
    return 0;
}

int cmd_grid(const std::string& preset, const std::string& kind, int n, int ell, double alpha,
             double omega_bar, const std::string& method_s, wigner::GridSpec grid,
             const std::string& out_path, const std::string& format) {
    wigner::WignerSpec spec;
    if (!preset.empty()) {
        auto ps = output::preset_spec(preset);
        if (!ps) throw CLI::ValidationError("--preset", "unknown preset " + preset);
        spec = *ps;
        grid = output::preset_grid();
    } else {
        spec.kind = kind == "cm" ? wigner::Kind::center_of_mass : wigner::Kind::relative;
        spec.n = n;
        spec.ell = ell;
        spec.alpha = alpha;
        spec.omega_bar = omega_bar;
        spec.method = parse_method(method_s);
    }

    const auto result = wigner::grid_eval(spec, grid, env_threads());
    const auto doc = output::make_output_doc(spec, result);

    std::ofstream os(out_path, std::ios::binary);
    if (!os) {
        std::fprintf(stderr, "error: cannot open %s for writing\n", out_path.c_str());
        return 1;
    }
    if (format == "json") os << output::to_json(doc).dump();
    else output::write_csv(os, doc);
    os.flush();
    if (!os) {
        std::fprintf(stderr, "error: write to %s failed\n", out_path.c_str());
        return 1;
    }
    std::printf("wrote %s (%dx%d, method=%s, max_imag_residue=%.3e, max_quad_error=%.3e)\n",
                out_path.c_str(), doc.grid.n_q, doc.grid.n_p,
                wigner::method_name(spec.method), doc.max_imag_residue, doc.max_quad_error);
    return 0;
}

int cmd_verify(const std::string& suite, int n_max, double tol) {
    using namespace cswigner::verify;
    std::vector<CheckResult> checks;
    auto append = [&](std::vector<CheckResult> more) {
        for (auto& c : more) checks.push_back(std::move(c));
    };

    const bool all = suite == "all";
    if (all || suite == "identities")
        append(identities_suite(n_max > 0 ? n_max : 10, tol > 0 ? tol : 1e-9,
                                std::min(n_max > 0 ? n_max : 6, 6), tol > 0 ? tol : 1e-10));
    if (all || suite == "oracles") {
        const int nm = n_max > 0 ? n_max : 3;
        append(three_path_suite(nm, nm, {}, tol > 0 ? tol : 1e-8, tol > 0 ? tol : 1e-8));
        append(g0_collapse_suite(nm, 1e-10));
    }
    if (all || suite == "normalization") {
        const int nm = n_max > 0 ? n_max : 3;
        append(normalization_suite(nm, nm, nm, tol > 0 ? tol : 1e-6));
    }
    if (all || suite == "marginals") {
        const int nm = n_max > 0 ? n_max : 3;
        append(marginals_suite(nm, nm, tol > 0 ? tol : 1e-6));
    }
    if (all || suite == "zeros")
        append(zeros_suite(20, 4, tol > 0 ? tol : 0.02, 0.05));
    if (all) {
        append(origin_values_suite());
        append(eigenfunction_suite());
        append(figure_suite());
        append(f_integral_suite());
    }

    nlohmann::json summary;
    summary["suite"] = suite;
    auto arr = nlohmann::json::array();
    for (const auto& c : checks) {
        std::printf("%s  %-44s deviation=%.3e tol=%.3e  %s\n", c.pass ? "PASS" : "FAIL",
                    c.name.c_str(), c.deviation, c.tolerance, c.detail.c_str());
        arr.push_back({{"name", c.name},
                       {"deviation", c.deviation},
                       {"tolerance", c.tolerance},
                       {"pass", c.pass}});
    }
    const bool ok = all_pass(checks);
    summary["checks"] = std::move(arr);
    summary["all_pass"] = ok;
    std::printf("%s\n", summary.dump().c_str());
    return ok ? 0 : 2;
}

int cmd_zeros(int j, double omega_bar, int k_max) {
    const auto rows = wigner::zero_ellipses(j, omega_bar, k_max);
    std::printf("%4s %14s %14s %14s %16s %8s\n", "k", "r_k", "semi_axis_q", "semi_axis_p",
                "symplectic_area", "gromov");
    for (const auto& e : rows)
        std::printf("%4d %14.8f %14.8f %14.8f %16.8f %8s\n", e.k, e.r, e.semi_axis_q,
                    e.semi_axis_p, e.symplectic_area, e.gromov_ok ? "yes" : "no");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-particle Calogero-Sutherland Wigner functions"};
    app.require_subcommand(1);

    // eval
    auto* eval = app.add_subcommand("eval", "Evaluate a Wigner function at one phase-space point");
    std::string e_kind = "rel", e_method = "operator";
    int e_n = 0, e_l = 0;
    double e_alpha = 0, e_w = 1, e_w0 = -1, e_q = 0, e_p = 0, e_Q = 0, e_P = 0;
    eval->add_option("--kind", e_kind)->check(CLI::IsMember({"cm", "rel", "total"}));
    eval->add_option("--n", e_n, "relative quantum number");
    eval->add_option("--l", e_l, "center-of-mass quantum number");
    eval->add_option("--alpha", e_alpha, "sector exponent");
    eval->add_option("--omega-bar", e_w, "hybrid frequency ratio omega/omega_trap");
    eval->add_option("--omega0-bar", e_w0, "pair frequency ratio; sets omega-bar = sqrt(1+2w0^2)");
    eval->add_option("--q", e_q);
    eval->add_option("--p", e_p);
    eval->add_option("--Q", e_Q);
    eval->add_option("--P", e_P);
    eval->add_option("--method", e_method)
        ->check(CLI::IsMember({"operator", "series", "quadrature", "closed-g0", "asymptotic"}));

    // grid
    auto* grid_cmd = app.add_subcommand("grid", "Evaluate a Wigner surface and write CSV/JSON");
    std::string g_preset, g_kind = "rel", g_method = "operator", g_out, g_format = "csv";
    int g_n = 0, g_l = 0;
    double g_alpha = 0, g_w = 1, g_w0 = -1;
    wigner::GridSpec g_grid;
    grid_cmd->add_option("--preset", g_preset, "fig1a | fig1b | fig2a | fig2b");
    grid_cmd->add_option("--kind", g_kind)->check(CLI::IsMember({"cm", "rel"}));
    grid_cmd->add_option("--n", g_n);
    grid_cmd->add_option("--l", g_l);
    grid_cmd->add_option("--alpha", g_alpha);
    grid_cmd->add_option("--omega-bar", g_w);
    grid_cmd->add_option("--omega0-bar", g_w0);
    grid_cmd->add_option("--method", g_method)
        ->check(CLI::IsMember({"operator", "series", "quadrature", "closed-g0", "asymptotic"}));
    grid_cmd->add_option("--q-min", g_grid.q_min);
    grid_cmd->add_option("--q-max", g_grid.q_max);
    grid_cmd->add_option("--p-min", g_grid.p_min);
    grid_cmd->add_option("--p-max", g_grid.p_max);
    grid_cmd->add_option("--nq", g_grid.n_q)->check(CLI::Range(2, 100000));
    grid_cmd->add_option("--np", g_grid.n_p)->check(CLI::Range(2, 100000));
    grid_cmd->add_option("--out", g_out, "output path")->required();
    grid_cmd->add_option("--format", g_format)->check(CLI::IsMember({"csv", "json"}));

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Run cross-checking suites");
    std::string v_suite = "all";
    int v_nmax = 0;
    double v_tol = 0;
    verify_cmd->add_option("--suite", v_suite)
        ->check(CLI::IsMember({"identities", "oracles", "marginals", "normalization", "zeros",
                               "all"}));
    verify_cmd->add_option("--n-max", v_nmax, "cap on quantum numbers (0 = suite default)");
    verify_cmd->add_option("--tol", v_tol, "tolerance override (0 = suite default)");

    // zeros
    auto* zeros_cmd = app.add_subcommand("zeros", "Asymptotic zero-ellipse table");
    int z_n = 0, z_kmax = 1;
    double z_w = 1;
    zeros_cmd->add_option("--n", z_n, "combined oscillator index");
    zeros_cmd->add_option("--omega-bar", z_w);
    zeros_cmd->add_option("--k-max", z_kmax)->check(CLI::Range(1, 1000000));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (eval->parsed())
            return cmd_eval(e_kind, e_n, e_l, e_alpha, resolve_omega_bar(e_w, e_w0), e_q, e_p,
                            e_Q, e_P, e_method);
        if (grid_cmd->parsed())
            return cmd_grid(g_preset, g_kind, g_n, g_l, g_alpha, resolve_omega_bar(g_w, g_w0),
                            g_method, g_grid, g_out, g_format);
        if (verify_cmd->parsed()) return cmd_verify(v_suite, v_nmax, v_tol);
        if (zeros_cmd->parsed()) return cmd_zeros(z_n, z_w, z_kmax);
    } catch (const NumericResidueError& e) {
        std::fprintf(stderr, "numeric residue failure: %s\n", e.what());
        return 2;
    } catch (const NoConvergenceError& e) {
        std::fprintf(stderr, "quadrature failure: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 1;
}

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ht/fueter.hpp"
#include "ht/hardy.hpp"
#include "ht/json_io.hpp"
#include "ht/sampling.hpp"
#include "ht/verify.hpp"

namespace {

using namespace ht;

std::string fmt(const HElem& q) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%+.6g %+.6g i %+.6g j %+.6g k", q.x0(), q.x1(), q.x2(),
                  q.x3());
    return buf;
}

void print_reports(const std::vector<verify::Report>& reports) {
    for (const auto& r : reports) {
        std::printf("suite %-20s t=%-5g %s  (%.3fs)\n", r.suite.c_str(), r.t,
                    r.pass() ? "PASS" : "FAIL", r.wall_time_sec);
        for (const auto& e : r.entries)
            if (!e.pass)
                std::printf("  FAIL %-36s observed=%.3e tolerance=%.3e\n", e.test.c_str(),
                            e.observed, e.tolerance);
    }
}

int run_verify(double t, bool has_t, const verify::Params& params, const std::string& json_path) {
    const std::vector<double> scales =
        has_t ? std::vector<double>{t} : verify::default_sweep();
    const std::vector<verify::Report> reports = verify::run_all(scales, params);
    print_reports(reports);
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        out << verify::report_json(reports, params) << "\n";
    }
    bool all = true;
    for (const auto& r : reports) all = all && r.pass();
    std::printf("verify: %s\n", all ? "PASS" : "FAIL");
    return all ? 0 : 1;
}

int run_table(double t) {
    const Scale s(t);
    const char* names[4] = {"1  ", "i  ", "j_t", "k_t"};
    const HElem basis[4] = {HElem::one(s), HElem::unit_i(s), HElem::unit_j(s),
                            HElem::unit_k(s)};
    std::printf("Cayley table for t = %g\n", t);
    std::printf("%8s", "x");
    for (int v = 0; v < 4; ++v) std::printf(" | %-22s", names[v]);
    std::printf("\n");
    bool ok = true;
    for (int u = 0; u < 4; ++u) {
        std::printf("%8s", names[u]);
        for (int v = 0; v < 4; ++v) {
            const HElem prod = basis[u] * basis[v];
            std::printf(" | %-22s", fmt(prod).c_str());
        }
        std::printf("\n");
    }
    const verify::Params p;
    const verify::Report ring = verify::ring_axioms(s, p);
    for (const auto& e : ring.entries)
        if (e.test == "cayley_table_16_products") ok = e.pass;
    std::printf("\nadjoint table\n%8s | %-22s | %-22s\n", "q", "circled", "bracket");
    for (int u = 0; u < 4; ++u)
        std::printf("%8s | %-22s | %-22s\n", names[u],
                    fmt(adjoint(basis[u], AdjointKind::Circled)).c_str(),
                    fmt(adjoint(basis[u], AdjointKind::Bracket)).c_str());
    std::printf("table check: %s\n", ok ? "PASS" : "FAIL");
    return ok ? 0 : 1;
}

int run_norm(const std::string& elem_json) {
    const HElem q = helem_from_json(elem_json);
    std::printf("op     = %s\n", format_double(norm(q, NormKind::Op)).c_str());
    std::printf("hs     = %s\n", format_double(norm(q, NormKind::HS)).c_str());
    std::printf("euclid = %s\n", format_double(norm(q, NormKind::Euclid)).c_str());
    return 0;
}

int run_blaschke(const std::string& adjoint_name, const std::string& alpha_json, int trunc) {
    const HElem alpha = helem_from_json(alpha_json);
    const Scale s = alpha.scale();
    bool ok = true;
    if (adjoint_name == "circled") {
        const PowerSeries bl = blaschke_circled(alpha, trunc);
        const PowerSeries lin = PowerSeries::monomial(s, 1, trunc) -
                                PowerSeries::constant(alpha, trunc);
        const PowerSeries res =
            PowerSeries::constant(HElem::one(s), trunc) -
            PowerSeries::monomial(s, 1, trunc) * adjoint(alpha, AdjointKind::Circled);
        double dist = 0.0;
        const PowerSeries direct = star_mul(lin, star_inverse(res));
        for (int n = 0; n <= trunc; ++n)
            dist = std::max(dist, norm(bl.coeff(n) - direct.coeff(n), NormKind::Op));
        const double dev = isometry_gram(bl, AdjointKind::Circled, 6, trunc);
        std::printf("expansion_vs_division = %.3e (tol 1e-11)\n", dist);
        std::printf("isometry_gram         = %.3e (tol 1e-9)\n", dev);
        ok = dist <= 1e-11 && dev <= 1e-9;
    } else {
        const BracketBlaschke bb = bracket_blaschke(alpha, trunc);
        const double stein =
            norm(bb.data.gamma - alpha * bb.data.gamma * adjoint(alpha, AdjointKind::Bracket) -
                     HElem::one(s),
                 NormKind::Op);
        const double ksq = norm(bb.data.k * bb.data.k - bb.data.l, NormKind::Op);
        const double dev = isometry_gram(bb.series, AdjointKind::Bracket, 6, trunc);
        std::printf("gamma_stein_residual = %.3e (tol 1e-12)\n", stein);
        std::printf("k_squared_minus_l    = %.3e (tol 1e-11)\n", ksq);
        std::printf("isometry_gram        = %.3e (tol 1e-9)\n", dev);
        ok = stein <= 1e-12 && ksq <= 1e-11 && dev <= 1e-9;
    }
    std::printf("blaschke: %s\n", ok ? "PASS" : "FAIL");
    return ok ? 0 : 1;
}

int run_interp(const std::string& points_json, int trunc) {
    const std::vector<HElem> pts = helem_list_from_json(points_json);
    const ThetaInterpolation th = theta_interpolate(pts, trunc);
    const ThetaCertificates cert = certify_theta(th, pts);
    std::printf("point_residuals   = %.3e (tol 1e-9)\n", cert.max_point_residual);
    std::printf("stein_t9          = %.3e (tol 1e-10)\n", cert.stein_residual);
    std::printf("stein_t890        = %.3e (tol 1e-10)\n", cert.mix_residual);
    std::printf("stein_t900        = %.3e (tol 1e-10)\n", cert.unit_residual);
    std::printf("orthonormality    = %.3e (tol 1e-10)\n", cert.orthonormality);
    const bool ok = cert.max_point_residual <= 1e-9 && cert.stein_residual <= 1e-10 &&
                    cert.mix_residual <= 1e-10 && cert.unit_residual <= 1e-10 &&
                    cert.orthonormality <= 1e-10;
    std::printf("interp: %s\n", ok ? "PASS" : "FAIL");
    return ok ? 0 : 1;
}

int run_fueter(const std::string& alpha_csv, double t, int samples, std::uint64_t seed) {
    MIdx3 alpha{0, 0, 0};
    if (std::sscanf(alpha_csv.c_str(), "%d,%d,%d", &alpha[0], &alpha[1], &alpha[2]) != 3) {
        std::fprintf(stderr, "fueter: --alpha expects a1,a2,a3\n");
        return 2;
    }
    const Scale s(t);
    Rng rng(seed);
    const std::vector<Point4> pts = admissible_points(rng, s, samples);
    const double res = kernel_check_mu(alpha, pts, s);
    std::printf("V_t mu^(%d,%d,%d) at t=%g: max residual %.3e over %d points (tol 1e-8)\n",
                alpha[0], alpha[1], alpha[2], t, res, samples);
    const bool ok = res <= 1e-8;
    std::printf("fueter: %s\n", ok ? "PASS" : "FAIL");
    return ok ? 0 : 1;
}

int run_realize(double t, std::uint64_t seed) {
    verify::Params p;
    p.seed = seed;
    const verify::Report r = verify::rational_suite(Scale(t), p);
    for (const auto& e : r.entries)
        std::printf("%-34s observed=%.3e tolerance=%.3e %s\n", e.test.c_str(), e.observed,
                    e.tolerance, e.pass ? "PASS" : "FAIL");
    std::printf("realize: %s\n", r.pass() ? "PASS" : "FAIL");
    return r.pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification harness for the scaled hypercomplex toolkit"};
    app.require_subcommand(1);

    double t = -1.0;
    std::uint64_t seed = 7;
    int trunc = 256;
    int samples = 1000;
    double tol_scale = 1.0;
    std::string json_path, elem_json, alpha_json, points_json, alpha_csv;
    std::string adjoint_name = "circled";

    auto* verify_cmd = app.add_subcommand("verify", "run all certification suites");
    auto* verify_t = verify_cmd->add_option("--t", t, "restrict to one scale");
    verify_cmd->add_option("--seed", seed, "rng seed");
    verify_cmd->add_option("--trunc", trunc, "series truncation order");
    verify_cmd->add_option("--samples", samples, "sample count");
    verify_cmd->add_option("--tol-scale", tol_scale, "tolerance multiplier");
    verify_cmd->add_option("--json", json_path, "write the machine-readable report here");

    auto* table_cmd = app.add_subcommand("table", "print and check the Cayley tables");
    table_cmd->add_option("--t", t, "scale")->required();

    auto* norm_cmd = app.add_subcommand("norm", "norms of a JSON element");
    norm_cmd->add_option("--elem", elem_json, "HElem JSON")->required();

    auto* blaschke_cmd = app.add_subcommand("blaschke", "Blaschke factor certificates");
    blaschke_cmd->add_option("--adjoint", adjoint_name, "circled|bracket")
        ->check(CLI::IsMember({"circled", "bracket"}));
    blaschke_cmd->add_option("--alpha", alpha_json, "HElem JSON")->required();
    blaschke_cmd->add_option("--trunc", trunc, "series truncation order");

    auto* interp_cmd = app.add_subcommand("interp", "Theta interpolation certificates");
    interp_cmd->add_option("--points", points_json, "JSON array of HElem")->required();
    interp_cmd->add_option("--trunc", trunc, "series truncation order");

    auto* fueter_cmd = app.add_subcommand("fueter", "V_t kernel residual sweep");
    fueter_cmd->add_option("--alpha", alpha_csv, "multi-index a1,a2,a3")->required();
    fueter_cmd->add_option("--t", t, "scale")->required();
    fueter_cmd->add_option("--samples", samples, "sample count");
    fueter_cmd->add_option("--seed", seed, "rng seed");

    auto* realize_cmd = app.add_subcommand("realize", "rational round-trip certificates");
    realize_cmd->add_option("--t", t, "scale");
    realize_cmd->add_option("--seed", seed, "rng seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        verify::Params params;
        params.seed = seed;
        params.samples = samples;
        params.trunc = trunc;
        params.tol_scale = tol_scale;
        if (verify_cmd->parsed())
            return run_verify(t, verify_t->count() > 0, params, json_path);
        if (table_cmd->parsed()) return run_table(t);
        if (norm_cmd->parsed()) return run_norm(elem_json);
        if (blaschke_cmd->parsed()) return run_blaschke(adjoint_name, alpha_json, trunc);
        if (interp_cmd->parsed()) return run_interp(points_json, trunc);
        if (fueter_cmd->parsed()) return run_fueter(alpha_csv, t, std::min(samples, 500), seed);
        if (realize_cmd->parsed()) return run_realize(t, seed);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}

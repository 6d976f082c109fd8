#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "elast/material_io.hpp"

namespace {

elast::SolverConfig default_config() {
    elast::SolverConfig cfg;
    if (const char* env = std::getenv("ELAST_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') cfg.seed = v;
    }
    return cfg;
}

void emit(const elast::Report& report, bool as_json) {
    if (as_json)
        std::cout << elast::canonical_dump(elast::report_to_json(report));
    else
        std::cout << elast::report_to_text(report);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"elasticity tensor eigenvalue and strong-ellipticity toolkit"};
    app.require_subcommand(1);

    std::string path;
    bool as_json = false;
    double detect_tol = 1e-8;
    std::optional<double> density_override;
    int starts = 0;
    std::optional<std::uint64_t> seed_flag;
    int grid = 0;

    CLI::App* analyze = app.add_subcommand("analyze", "closed forms, checks, definiteness");
    analyze->add_option("file", path, "material JSON file")->required();
    analyze->add_flag("--json", as_json, "machine-readable report");
    analyze->add_option("--tol", detect_tol, "class detection tolerance (relative)");
    double density_val = 0.0;
    CLI::Option* density_opt =
        analyze->add_option("--density", density_val, "override the file's density");

    CLI::App* spectrum = app.add_subcommand("spectrum", "numeric eigenpair extraction");
    spectrum->add_option("file", path, "material JSON file")->required();
    spectrum->add_flag("--json", as_json, "machine-readable report");
    spectrum->add_option("--starts", starts, "multistart count");
    std::uint64_t seed_val = 0;
    CLI::Option* seed_opt = spectrum->add_option("--seed", seed_val, "solver seed");

    CLI::App* oracle = app.add_subcommand("oracle", "brute-force sphere-grid minimum of f");
    oracle->add_option("file", path, "material JSON file")->required();
    oracle->add_flag("--json", as_json, "machine-readable report");
    oracle->add_option("--grid", grid, "grid resolution per angle");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 3;
    }

    elast::SolverConfig cfg = default_config();
    if (*density_opt) density_override = density_val;
    if (*seed_opt) cfg.seed = seed_val;
    if (starts > 0) cfg.n_starts = starts;
    if (grid > 0) cfg.grid_n = grid;

    try {
        elast::Report report;
        if (analyze->parsed())
            report = elast::analyze(elast::load_material(path), detect_tol, density_override, cfg);
        else if (spectrum->parsed())
            report = elast::analyze_spectrum(elast::load_material(path), detect_tol, cfg);
        else
            report = elast::analyze_oracle(elast::load_material(path), detect_tol, cfg);
        emit(report, as_json);
        return elast::exit_code(report.verdict.status);
    } catch (const elast::MaterialError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    }
}

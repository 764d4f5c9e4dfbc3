// pilotwave command-line front end: eigensolve, run, export.

#include "pilotwave/experiment.hpp"
#include "pilotwave/parallel.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace pilotwave;

namespace {

struct Overrides {
    std::string config;
    std::string out;
    int workers = 0;
    int lattice = 0;
    double precision = 0.0;
};

/// Worker count: the flag wins, then PILOTWAVE_WORKERS, then the config file.
void apply_overrides(ExperimentConfig& cfg, const Overrides& o) {
    if (o.workers > 0)
        cfg.workers = o.workers;
    else if (std::getenv("PILOTWAVE_WORKERS"))
        cfg.workers = default_workers();
    if (o.lattice > 0) cfg.lattice.nx = cfg.lattice.ny = o.lattice;
    if (o.precision > 0.0) cfg.integrator.backtrack_precision = o.precision;
    validate_config(cfg);
}

void print_errors(const ConfigError& e) {
    std::cerr << "pilotwave: invalid configuration\n";
    for (const auto& line : e.errors()) std::cerr << "  " << line << "\n";
}

void add_common(CLI::App* cmd, Overrides& o) {
    cmd->add_option("--workers", o.workers, "Worker threads (default: PILOTWAVE_WORKERS or config)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--out", o.out, "Output directory (default: config 'output')");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pilot-wave Dirac fermion relaxation simulator"};
    app.require_subcommand(1);

    Overrides eig, run;
    std::string export_run, export_out;

    auto* eigensolve = app.add_subcommand("eigensolve", "Box eigenvalues and exterior coefficients");
    eigensolve->add_option("--config", eig.config, "Config file (default: m=1, V0=1, R'=5, the six catalog k)")
        ->check(CLI::ExistingFile);
    add_common(eigensolve, eig);

    auto* runcmd = app.add_subcommand("run", "Run the experiment described by a config file");
    runcmd->add_option("--config", run.config, "Config file")->required()->check(CLI::ExistingFile);
    add_common(runcmd, run);
    runcmd->add_option("--lattice", run.lattice, "Lattice points per axis (overrides [lattice])")
        ->check(CLI::PositiveNumber);
    runcmd->add_option("--precision", run.precision, "Backtracking round-trip precision (overrides [integrator])")
        ->check(CLI::PositiveNumber);

    auto* exportcmd = app.add_subcommand("export", "Write figure data from a finished run");
    exportcmd->add_option("--run", export_run, "Run directory containing manifest.txt")->required();
    exportcmd->add_option("--out", export_out, "Destination (default: <run>/export)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*eigensolve) {
            ExperimentConfig cfg;
            if (!eig.config.empty()) cfg = load_config(eig.config);
            cfg.experiment = ExperimentKind::Eigensolve;
            apply_overrides(cfg, eig);
            const std::string out = !eig.out.empty() ? eig.out : !cfg.output.empty() ? cfg.output : "eigensolve_out";
            const RunSummary s = run_experiment(cfg, {out, &std::cerr});
            std::ifstream table(s.out_dir / "eigenvalues.txt");
            std::cout << table.rdbuf();
        } else if (*runcmd) {
            ExperimentConfig cfg = load_config(run.config);
            apply_overrides(cfg, run);
            const RunSummary s = run_experiment(cfg, {run.out, &std::cerr});
            std::cout << "wrote " << s.files.size() << " files to " << s.out_dir.string() << "\n";
            if (std::ifstream metrics(s.out_dir / "metrics.txt"); metrics) std::cout << metrics.rdbuf();
        } else if (*exportcmd) {
            const std::filesystem::path out =
                export_out.empty() ? std::filesystem::path(export_run) / "export" : std::filesystem::path(export_out);
            for (const auto& name : export_figures_data(export_run, out)) std::cout << (out / name).string() << "\n";
        }
    } catch (const ConfigError& e) {
        print_errors(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "pilotwave: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

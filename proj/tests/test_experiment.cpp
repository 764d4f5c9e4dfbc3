#include "pilotwave/catalog.hpp"
#include "pilotwave/experiment.hpp"

#include <doctest.h>

#include <cmath>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

using namespace pilotwave;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        std::random_device rd;
        path = fs::temp_directory_path() / ("pilotwave_test_" + std::to_string(rd()) + std::to_string(rd()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string without_timings(const std::string& manifest) {
    return manifest.substr(0, manifest.find("%% timings"));
}

/// Every regular file below root except the manifest, keyed by relative path.
std::map<std::string, std::string> tree(const fs::path& root) {
    std::map<std::string, std::string> out;
    for (const auto& e : fs::recursive_directory_iterator(root))
        if (e.is_regular_file() && e.path().filename() != "manifest.txt")
            out[fs::relative(e.path(), root).generic_string()] = slurp(e.path());
    return out;
}

const char* kSmallRelax = R"(experiment = relax_oscillator
[modes]
preset = oscillator8
[lattice]
n = 24
[time]
checkpoints = 0, 2, 4
[densities]
list = rho0, rho2
)";

}  // namespace

TEST_CASE("eigensolve writes the catalog eigenvalues and beta'") {
    TempDir dir;
    ExperimentConfig cfg = parse_config("experiment = eigensolve\n");
    run_experiment(cfg, {dir.path});
    std::istringstream in(slurp(dir.path / "eigenvalues.txt"));
    std::string line;
    std::vector<std::tuple<std::string, double, double>> rows;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("k ", 0) == 0) continue;
        std::istringstream row(line);
        std::string k;
        int idx;
        double e, b;
        row >> k >> idx >> e >> b;
        rows.emplace_back(k, e, b);
    }
    for (const auto& entry : catalog::kBoxModes) {
        bool found = false;
        for (const auto& [k, e, b] : rows)
            if (k == entry.k.str() && std::abs(e - entry.energy) < 1e-9) {
                found = true;
                CHECK(std::abs(b / entry.beta_prime - 1.0) < 1e-6);
            }
        CAPTURE(entry.k.str());
        CHECK(found);
    }
}

TEST_CASE("manifest lists every output with its checksum") {
    TempDir dir;
    const ExperimentConfig cfg =
        parse_config("experiment = trajectories3d\n[modes]\npreset = free\n[trajectories]\nt_end = 20\n");
    const RunSummary s = run_experiment(cfg, {dir.path});
    CHECK(s.files.size() == 4);
    const Manifest m = read_manifest(dir.path);
    CHECK(m.files.size() == s.files.size());
    for (const auto& f : m.files) {
        const std::string content = slurp(dir.path / f.path);
        CHECK(crc32_of(content) == f.crc);
        CHECK(content.size() == f.size);
    }
    for (const auto& e : fs::recursive_directory_iterator(dir.path)) {
        if (!e.is_regular_file() || e.path().filename() == "manifest.txt") continue;
        const std::string rel = fs::relative(e.path(), dir.path).generic_string();
        bool listed = false;
        for (const auto& f : m.files) listed = listed || f.path == rel;
        CAPTURE(rel);
        CHECK(listed);
    }
    CHECK(config_echo(m.config) == config_echo(cfg));
    CHECK(slurp(dir.path / "trajectory_m6.txt").find("# mass = 6") == 0);
}

TEST_CASE("crc32 matches the zlib polynomial") {
    CHECK(crc32_of("123456789") == 0xCBF43926u);
    CHECK(crc32_of("") == 0u);
}

TEST_CASE("relaxation reruns are byte identical and worker independent") {
    TempDir a, b, c;
    ExperimentConfig cfg = parse_config(kSmallRelax);
    run_experiment(cfg, {a.path});
    run_experiment(cfg, {b.path});
    cfg.workers = 3;
    run_experiment(cfg, {c.path});

    const auto ta = tree(a.path), tb = tree(b.path), tc = tree(c.path);
    CHECK(ta.size() == 3 * (2 + 1 + 4 + 2) + 1);  // per checkpoint: eq x2, goodfrac, rho x4, metrics, done
    CHECK(ta == tb);
    CHECK(ta == tc);
    CHECK(without_timings(slurp(a.path / "manifest.txt")) == without_timings(slurp(b.path / "manifest.txt")));
    CHECK(without_timings(slurp(a.path / "manifest.txt")) == without_timings(slurp(c.path / "manifest.txt")));

    // one row per checkpoint, density and coarse-graining
    std::istringstream in(ta.at("metrics.txt"));
    std::string line;
    int rows = -1;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 3 * 2 * 2);
}

TEST_CASE("completed checkpoints are skipped on rerun") {
    TempDir dir;
    const ExperimentConfig cfg = parse_config(kSmallRelax);
    run_experiment(cfg, {dir.path});
    const std::string manifest = without_timings(slurp(dir.path / "manifest.txt"));

    std::map<std::string, fs::file_time_type> stamps;
    for (const auto& e : fs::recursive_directory_iterator(dir.path))
        if (e.is_regular_file()) stamps[fs::relative(e.path(), dir.path).generic_string()] = e.last_write_time();
    const auto before = tree(dir.path);

    // as if interrupted while the last checkpoint was being written
    fs::remove(dir.path / "t4" / "done");
    fs::remove(dir.path / "t4" / "rho2_smooth.txt");

    const RunSummary s = run_experiment(cfg, {dir.path});
    CHECK(s.skipped_checkpoints == std::vector<double>{0, 2});
    CHECK(tree(dir.path) == before);
    CHECK(without_timings(slurp(dir.path / "manifest.txt")) == manifest);
    for (const auto& e : fs::recursive_directory_iterator(dir.path)) {
        const std::string rel = fs::relative(e.path(), dir.path).generic_string();
        if (!e.is_regular_file() || rel.rfind("t4/", 0) == 0 || rel.find('/') == std::string::npos) continue;
        CAPTURE(rel);
        CHECK(e.last_write_time() == stamps.at(rel));
    }

    // a damaged file invalidates its checkpoint
    std::ofstream(dir.path / "t2" / "eq_smooth.txt", std::ios::app) << "garbage\n";
    const RunSummary again = run_experiment(cfg, {dir.path});
    CHECK(again.skipped_checkpoints == std::vector<double>{0, 4});
    CHECK(tree(dir.path) == before);

    // a different configuration does not reuse anything
    ExperimentConfig other = cfg;
    other.integrator.backtrack_precision = 2e-3;
    CHECK(run_experiment(other, {dir.path}).skipped_checkpoints.empty());
}

TEST_CASE("export writes smooth matrices consistent with the grid files") {
    TempDir run, out;
    const ExperimentConfig cfg = parse_config(kSmallRelax);
    run_experiment(cfg, {run.path});
    const auto names = export_figures_data(run.path, out.path);
    CHECK(names.size() == 3 * 3);
    CHECK(std::find(names.begin(), names.end(), "fig4a_eq_t2.mat.txt") != names.end());

    std::istringstream grid_in(slurp(run.path / "t2" / "eq_smooth.txt"));
    const GridFile grid = read_grid_file(grid_in);
    std::istringstream mat(slurp(out.path / "fig4a_eq_t2.mat.txt"));
    std::string line;
    int row = 0;
    while (std::getline(mat, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream cells(line);
        double v, sum = 0.0, expected = 0.0;
        int cols = 0;
        while (cells >> v) {
            sum += v;
            expected += grid.value[static_cast<std::size_t>(cols) * 121 + row];
            ++cols;
        }
        CHECK(cols == 121);
        CHECK(sum == expected);
        ++row;
    }
    CHECK(row == 121);
}

TEST_CASE("export of trajectories and probe runs") {
    TempDir run, out;
    run_experiment(parse_config("experiment = trajectories2d\n[modes]\npreset = free\n[trajectories]\nmasses = 3\nt_end = 5\n"),
                   {run.path});
    const auto names = export_figures_data(run.path, out.path);
    REQUIRE(names.size() == 1);
    CHECK(names[0] == "fig1b_m3.polyline.txt");
    CHECK(slurp(out.path / names[0]).rfind("0 0 0\n", 0) == 0);

    TempDir probe, probe_out;
    run_experiment(parse_config("experiment = confinement_probe\n[modes]\npreset = box3\n[probe]\ncount = 4\nt_final = 5\n"),
                   {probe.path});
    const std::string summary = slurp(probe.path / "probe_summary.txt");
    CHECK(summary.find("count = 4\n") != std::string::npos);
    CHECK(summary.find("good = 4\n") != std::string::npos);
    CHECK(export_figures_data(probe.path, probe_out.path) == std::vector<std::string>{"fig7_endpoints.txt"});
}

TEST_CASE("probe sampling is seeded") {
    TempDir a, b, c;
    const std::string text = "experiment = confinement_probe\n[modes]\npreset = box3\n[probe]\ncount = 3\nt_final = 1\n";
    run_experiment(parse_config(text), {a.path});
    run_experiment(parse_config(text), {b.path});
    run_experiment(parse_config("seed = 7\n" + text), {c.path});
    CHECK(slurp(a.path / "probe.txt") == slurp(b.path / "probe.txt"));
    CHECK(slurp(a.path / "probe.txt") != slurp(c.path / "probe.txt"));
}

TEST_CASE("export and run errors") {
    TempDir dir;
    CHECK_THROWS_WITH_AS(export_figures_data(dir.path / "missing", dir.path / "out"),
                         doctest::Contains("run directory not found"), std::runtime_error);
    CHECK_THROWS_WITH_AS(export_figures_data(dir.path, dir.path / "out"), doctest::Contains("no manifest.txt"),
                         std::runtime_error);

    ExperimentConfig cfg = parse_config("experiment = eigensolve\n");
    CHECK_THROWS_AS(run_experiment(cfg, {}), std::invalid_argument);
    cfg.workers = 0;
    CHECK_THROWS_AS(run_experiment(cfg, {dir.path}), ConfigError);
}

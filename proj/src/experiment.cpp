#include "pilotwave/experiment.hpp"

#include "pilotwave/box_solver.hpp"
#include "pilotwave/catalog.hpp"
#include "pilotwave/parallel.hpp"

#include <boost/crc.hpp>

#include <Eigen/Core>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#ifndef PILOTWAVE_VERSION
#define PILOTWAVE_VERSION "unknown"
#endif

namespace pilotwave {

namespace fs = std::filesystem;

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string hex(std::uint32_t v) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%08x", v);
    return buf;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

class Log {
public:
    explicit Log(std::ostream* out) : out_(out) {}
    void operator()(const std::string& line) const {
        if (out_) *out_ << line << std::endl;
    }

private:
    std::ostream* out_;
};

/// Collects the files of one run and writes them with their checksums.
class RunWriter {
public:
    explicit RunWriter(fs::path root) : root_(std::move(root)) {}

    const fs::path& root() const { return root_; }

    FileRecord write(const std::string& rel, const std::string& content) {
        const fs::path path = root_ / rel;
        fs::create_directories(path.parent_path());
        {
            std::ofstream out(path, std::ios::binary | std::ios::trunc);
            if (!out) throw std::runtime_error("cannot write " + path.string());
            out << content;
            if (!out) throw std::runtime_error("write failed: " + path.string());
        }
        FileRecord rec{rel, crc32_of(content), content.size()};
        files_.push_back(rec);
        return rec;
    }

    void adopt(const FileRecord& rec) { files_.push_back(rec); }
    const std::vector<FileRecord>& files() const { return files_; }

private:
    fs::path root_;
    std::vector<FileRecord> files_;
};

std::string default_prefix(const ExperimentConfig& cfg) {
    if (!cfg.figure_prefix.empty()) return cfg.figure_prefix;
    switch (cfg.experiment) {
        case ExperimentKind::RelaxOscillator: return "fig4a";
        case ExperimentKind::RelaxBox: return "fig5a";
        case ExperimentKind::Trajectories3D: return "fig1";
        case ExperimentKind::Trajectories2D: return "fig1b";
        case ExperimentKind::ConfinementProbe: return "fig7";
        case ExperimentKind::Eigensolve: return "eigen";
    }
    return "fig";
}

std::string mass_tag(double mass) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", mass);
    return buf;
}

// ------------------------------------------------------------------ relaxation

struct CheckpointResult {
    std::vector<FileRecord> files;
    std::string metrics_rows;
};

const char* kMetricsColumns = "t density cg l1 h good_mean_cell good_worst_cell good_overall\n";

std::string coarse_to_string(const CoarseGrid& grid, double t, const std::string& kind) {
    std::ostringstream out;
    write_coarse_grid(out, grid, t, kind);
    return out.str();
}

/// Rows of a metrics.txt without its header lines.
std::string metrics_rows_of(const std::string& text) {
    std::istringstream in(text);
    std::string line, rows;
    while (std::getline(in, line))
        if (!line.empty() && line[0] != '#' && line + "\n" != kMetricsColumns) rows += line + "\n";
    return rows;
}

/// Files recorded in a checkpoint's done marker, if it matches the fingerprint
/// and every file still has the recorded checksum.
std::optional<std::vector<FileRecord>> completed_checkpoint(const fs::path& root, const std::string& name,
                                                            const std::string& fingerprint) {
    const fs::path marker = root / name / "done";
    if (!fs::exists(marker)) return std::nullopt;
    std::istringstream in(read_file(marker));
    std::string line;
    if (!std::getline(in, line) || line != "fingerprint = " + fingerprint) return std::nullopt;
    std::vector<FileRecord> files;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string crc, rel;
        std::uintmax_t size = 0;
        if (!(row >> crc >> size >> rel)) return std::nullopt;
        const fs::path path = root / rel;
        if (!fs::exists(path) || fs::file_size(path) != size) return std::nullopt;
        const std::string content = read_file(path);
        if (hex(crc32_of(content)) != crc) return std::nullopt;
        files.push_back({rel, crc32_of(content), size});
    }
    return files;
}

CheckpointResult run_checkpoint(const ExperimentConfig& cfg, const WaveFunction2D& wf, double t, RunWriter& writer,
                                const std::string& fingerprint) {
    const std::string name = checkpoint_name(t);
    const fs::path marker = writer.root() / name / "done";
    fs::remove(marker);

    const BacktrackGrid bt = backtrack_lattice(wf, cfg.lattice, cfg.t0, t, cfg.integrator, cfg.workers);
    const DensityGrid eq{bt.spec, t, bt.final_density, bt.good};
    const GoodPointStats stats = good_point_stats(eq, cfg.standard.cells_per_side);

    CheckpointResult result;
    auto put = [&](const std::string& file, const std::string& content) {
        result.files.push_back(writer.write(name + "/" + file, content));
    };

    std::vector<std::pair<std::string, CoarseGrainSpec>> kinds;
    if (cfg.use_standard) kinds.emplace_back("standard", cfg.standard);
    if (cfg.use_smooth) kinds.emplace_back("smooth", cfg.smooth);

    auto grain = [](const DensityGrid& g, const CoarseGrainSpec& spec) {
        return spec.kind == CoarseGrainSpec::Kind::Smooth ? smooth_coarse_grain(g, spec) : coarse_grain(g, spec);
    };

    std::vector<CoarseGrid> eq_cg;
    for (const auto& [label, spec] : kinds) {
        eq_cg.push_back(grain(eq, spec));
        put("eq_" + label + ".txt", coarse_to_string(eq_cg.back(), t, "eq_" + label));
    }

    CoarseGrid goodfrac = coarse_grain(eq, cfg.standard);
    goodfrac.values = goodfrac.good_fraction;
    std::fill(goodfrac.has_value.begin(), goodfrac.has_value.end(), std::uint8_t{1});
    put("goodfrac.txt", coarse_to_string(goodfrac, t, "good_fraction"));

    if (cfg.write_lattice) {
        std::ostringstream out;
        write_grid(out, eq, "eq_lattice");
        put("eq_lattice.txt", out.str());
    }

    std::string rows;
    for (const auto& dname : cfg.densities) {
        const InitialDensity rho0 = InitialDensity::named(dname);
        const DensityGrid rho = reconstruct_from(bt, [&](const Vec2& x) { return rho0(x); });
        if (cfg.write_lattice) {
            std::ostringstream out;
            write_grid(out, rho, dname + "_lattice");
            put(dname + "_lattice.txt", out.str());
        }
        for (std::size_t c = 0; c < kinds.size(); ++c) {
            const CoarseGrid cg = grain(rho, kinds[c].second);
            put(dname + "_" + kinds[c].first + ".txt", coarse_to_string(cg, t, dname + "_" + kinds[c].first));
            const RelaxationMetrics m = relaxation_metrics(cg, eq_cg[c]);
            rows += fmt(t) + " " + dname + " " + kinds[c].first + " " + fmt(m.l1) + " " + fmt(m.h) + " " +
                    fmt(stats.mean_cell_fraction) + " " + fmt(stats.worst_cell_fraction) + " " +
                    fmt(stats.overall_fraction) + "\n";
        }
    }
    put("metrics.txt", "# t = " + fmt(t) + "\n" + kMetricsColumns + rows);
    result.metrics_rows = rows;

    std::string done = "fingerprint = " + fingerprint + "\n";
    for (const auto& f : result.files) done += hex(f.crc) + " " + std::to_string(f.size) + " " + f.path + "\n";
    std::ofstream(marker, std::ios::binary | std::ios::trunc) << done;
    return result;
}

void run_relaxation(const ExperimentConfig& cfg, RunWriter& writer, RunSummary& summary, std::string& timings,
                    const Log& log) {
    const WaveFunction2D wf = build_wavefunction_2d(cfg, cfg.m);
    const std::string fingerprint = hex(crc32_of(config_echo(cfg)));
    std::string rows;
    for (double t : cfg.checkpoints) {
        const std::string name = checkpoint_name(t);
        if (auto files = completed_checkpoint(writer.root(), name, fingerprint)) {
            log("checkpoint " + name + ": complete, reusing");
            for (const auto& f : *files) writer.adopt(f);
            rows += metrics_rows_of(read_file(writer.root() / name / "metrics.txt"));
            summary.skipped_checkpoints.push_back(t);
            timings += name + " = skipped\n";
            continue;
        }
        log("checkpoint " + name + ": backtracking " + std::to_string(cfg.lattice.size()) + " points");
        const auto start = std::chrono::steady_clock::now();
        const CheckpointResult r = run_checkpoint(cfg, wf, t, writer, fingerprint);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        timings += name + " = " + fmt(secs) + "\n";
        rows += r.metrics_rows;
        log("checkpoint " + name + ": done in " + mass_tag(secs) + " s");
    }
    writer.write("metrics.txt", std::string(kMetricsColumns) + rows);
}

// ---------------------------------------------------------------- trajectories

template <int Dim>
void run_trajectories(const ExperimentConfig& cfg, RunWriter& writer, const Log& log) {
    Vec<Dim> start;
    for (int d = 0; d < Dim; ++d) start[d] = cfg.start[d];
    std::string summary = "mass good failure steps t_end";
    summary += Dim == 3 ? " x y z\n" : " x y\n";
    for (double mass : trajectory_masses(cfg)) {
        TrajectoryOutcome<Dim> out;
        if constexpr (Dim == 3)
            out = integrate<3>(build_wavefunction_3d(cfg, mass), cfg.t0, start, cfg.t_end, cfg.integrator, true);
        else
            out = integrate<2>(build_wavefunction_2d(cfg, mass), cfg.t0, start, cfg.t_end, cfg.integrator, true);
        std::ostringstream file;
        write_trajectory<Dim>(file, out.path_sample,
                              {"mass = " + fmt(mass), "good = " + std::to_string(out.good ? 1 : 0),
                               "failure = " + std::string(to_string(out.failure_reason)),
                               "steps = " + std::to_string(out.steps_taken)});
        writer.write("trajectory_m" + mass_tag(mass) + ".txt", file.str());
        summary += fmt(mass) + " " + (out.good ? "1" : "0") + " " + std::string(to_string(out.failure_reason)) + " " +
                   std::to_string(out.steps_taken) + " " + fmt(cfg.t_end);
        for (int d = 0; d < Dim; ++d) summary += " " + fmt(out.end_position[d]);
        summary += "\n";
        log("trajectory m=" + mass_tag(mass) + ": " + std::to_string(out.steps_taken) + " steps");
    }
    writer.write("trajectories_summary.txt", summary);
}

// ------------------------------------------------------------------- eigensolve

void run_eigensolve(const ExperimentConfig& cfg, RunWriter& writer, const Log& log) {
    std::vector<HalfInteger> ks = cfg.eigen_k;
    if (ks.empty())
        for (const auto& e : catalog::kBoxModes) ks.push_back(e.k);
    BoxParams params = cfg.box;
    params.m = cfg.m;
    std::string out = "# m = " + fmt(params.m) + "\n# V0 = " + fmt(params.V0) + "\n# R_prime = " +
                      fmt(params.R_prime) + "\nk index energy beta_prime\n";
    for (HalfInteger k : ks) {
        const auto roots = solve_box_eigenvalues(k, params, cfg.scan_resolution);
        for (std::size_t i = 0; i < roots.size(); ++i)
            out += k.str() + " " + std::to_string(i) + " " + fmt(roots[i]) + " " +
                   fmt(solve_box_beta_prime(roots[i], k, params)) + "\n";
        log("k=" + k.str() + ": " + std::to_string(roots.size()) + " eigenvalues");
    }
    writer.write("eigenvalues.txt", out);
}

// -------------------------------------------------------------- confinement probe

/// Uniform double in [0, 1) from the top 53 bits; identical on every platform.
double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

void run_probe(const ExperimentConfig& cfg, RunWriter& writer, const Log& log) {
    const WaveFunction2D wf = build_wavefunction_2d(cfg, cfg.m);
    std::mt19937_64 rng(cfg.seed);
    std::vector<Vec2> finals(static_cast<std::size_t>(cfg.probe_count));
    for (auto& x : finals) {
        const double r = cfg.probe_radius * std::sqrt(unit_draw(rng));
        const double a = 2.0 * M_PI * unit_draw(rng);
        x = Vec2(r * std::cos(a), r * std::sin(a));
    }
    std::vector<TrajectoryOutcome<2>> outs(finals.size());
    log("probe: backtracking " + std::to_string(finals.size()) + " points from t=" + fmt(cfg.probe_t_final));
    parallel_for(finals.size(), cfg.workers,
                 [&](std::size_t i) { outs[i] = backtrack<2>(wf, cfg.probe_t_final, finals[i], cfg.t0, cfg.integrator); });

    std::string table = "x y x0 y0 r0 good failure steps roundtrip_error\n";
    int good = 0, outside_good = 0, outside_any = 0;
    double max_good = 0.0, max_any = 0.0;
    for (std::size_t i = 0; i < outs.size(); ++i) {
        const auto& o = outs[i];
        const double r0 = o.end_position.norm();
        table += fmt(finals[i][0]) + " " + fmt(finals[i][1]) + " " + fmt(o.end_position[0]) + " " +
                 fmt(o.end_position[1]) + " " + fmt(r0) + " " + (o.good ? "1" : "0") + " " +
                 std::string(to_string(o.failure_reason)) + " " + std::to_string(o.steps_taken) + " " +
                 fmt(o.roundtrip_error) + "\n";
        max_any = std::max(max_any, r0);
        if (r0 > cfg.inner_radius) ++outside_any;
        if (o.good) {
            ++good;
            max_good = std::max(max_good, r0);
            if (r0 > cfg.inner_radius) ++outside_good;
        }
    }
    writer.write("probe.txt", table);
    writer.write("probe_summary.txt", "count = " + std::to_string(outs.size()) + "\ngood = " + std::to_string(good) +
                                          "\ninner_radius = " + fmt(cfg.inner_radius) +
                                          "\nmax_radius_good = " + fmt(max_good) +
                                          "\nmax_radius_any = " + fmt(max_any) +
                                          "\noutside_good = " + std::to_string(outside_good) +
                                          "\noutside_any = " + std::to_string(outside_any) + "\n");
    log("probe: " + std::to_string(good) + " good, max radius " + fmt(max_good));
}

// --------------------------------------------------------------------- manifest

const char* kConfigMarker = "%% config";
const char* kFilesMarker = "%% files";
const char* kTimingsMarker = "%% timings";

std::string manifest_text(const ExperimentConfig& cfg, const std::vector<FileRecord>& files,
                          const std::string& timings) {
    std::string out = "# pilotwave run manifest\n";
    out += "version = " PILOTWAVE_VERSION "\n";
    out += "eigen = " + std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
           std::to_string(EIGEN_MINOR_VERSION) + "\n";
    out += "compiler = " __VERSION__ "\n";
    out += "config_fingerprint = " + hex(crc32_of(config_echo(cfg))) + "\n";
    out += std::string(kConfigMarker) + "\n" + config_echo(cfg);
    out += std::string(kFilesMarker) + "\n";
    for (const auto& f : files) out += hex(f.crc) + " " + std::to_string(f.size) + " " + f.path + "\n";
    out += std::string(kTimingsMarker) + "\n" + timings;
    return out;
}

}  // namespace

std::uint32_t crc32_of(std::string_view bytes) {
    boost::crc_32_type crc;
    crc.process_bytes(bytes.data(), bytes.size());
    return crc.checksum();
}

std::string checkpoint_name(double t) { return "t" + mass_tag(t); }

std::vector<double> trajectory_masses(const ExperimentConfig& cfg) {
    if (!cfg.masses.empty()) return cfg.masses;
    if (cfg.modes.preset == "free") return {catalog::kFreeMasses.begin(), catalog::kFreeMasses.end()};
    return {cfg.m};
}

WaveFunction2D build_wavefunction_2d(const ExperimentConfig& cfg, double mass) {
    const ModeList& md = cfg.modes;
    BoxParams box = cfg.box;
    box.m = cfg.m;
    if (md.preset == "oscillator8") return catalog::oscillator_spinor(cfg.m, cfg.omega);
    if (md.preset == "box3") return catalog::box_spinor(3, box);
    if (md.preset == "box4") return catalog::box_spinor(4, box);
    if (md.preset == "box6") return catalog::box_spinor(6, box);
    if (md.preset == "free") return catalog::free_spinor_2d(mass);
    if (!md.preset.empty()) throw std::invalid_argument("unknown preset '" + md.preset + "'");

    std::vector<FieldTraits<2>::Mode> modes;
    if (md.family == "oscillator") {
        for (std::size_t i = 0; i < md.n.size(); ++i) modes.emplace_back(OscillatorMode(md.n[i], md.k[i], cfg.m, cfg.omega));
    } else if (md.family == "box") {
        for (std::size_t i = 0; i < md.k.size(); ++i)
            modes.emplace_back(make_box_mode(md.k[i], md.energies[i], box, cfg.scan_resolution));
    } else if (md.family == "plane2d") {
        for (std::size_t i = 0; i < md.px.size(); ++i)
            modes.emplace_back(PlaneWave2D{Vec2(md.px[i], md.py[i]), mass,
                                           md.signs.empty() ? EnergySign::Positive : md.signs[i]});
    } else {
        throw std::invalid_argument("modes family '" + md.family + "' is not a 2+1D family");
    }
    const std::vector<double> weights = md.weights.empty() ? std::vector<double>(modes.size(), 1.0) : md.weights;
    return superpose<2>(std::move(modes), md.phases, weights);
}

WaveFunction3D build_wavefunction_3d(const ExperimentConfig& cfg, double mass) {
    const ModeList& md = cfg.modes;
    if (md.preset == "free") return catalog::free_spinor_3d(mass);
    if (md.family != "plane3d") throw std::invalid_argument("trajectories3d needs plane3d modes or the free preset");
    std::vector<FieldTraits<3>::Mode> modes;
    for (std::size_t i = 0; i < md.px.size(); ++i)
        modes.emplace_back(PlaneWave3D{Vec3(md.px[i], md.py[i], md.pz[i]), mass,
                                       md.helicities.empty() ? Helicity::Right : md.helicities[i],
                                       md.signs.empty() ? EnergySign::Positive : md.signs[i]});
    const std::vector<double> weights = md.weights.empty() ? std::vector<double>(modes.size(), 1.0) : md.weights;
    return superpose<3>(std::move(modes), md.phases, weights);
}

RunSummary run_experiment(const ExperimentConfig& cfg, const RunOptions& options) {
    validate_config(cfg);
    const fs::path root = !options.out_dir.empty() ? options.out_dir : fs::path(cfg.output);
    if (root.empty()) throw std::invalid_argument("no output directory (set output or pass --out)");
    fs::create_directories(root);
    const Log log(options.log);
    log("experiment " + std::string(to_string(cfg.experiment)) + " -> " + root.string());

    RunWriter writer(root);
    RunSummary summary;
    summary.out_dir = root;
    std::string timings = "workers = " + std::to_string(cfg.workers) + "\n";
    const auto start = std::chrono::steady_clock::now();

    switch (cfg.experiment) {
        case ExperimentKind::RelaxOscillator:
        case ExperimentKind::RelaxBox: run_relaxation(cfg, writer, summary, timings, log); break;
        case ExperimentKind::Trajectories3D: run_trajectories<3>(cfg, writer, log); break;
        case ExperimentKind::Trajectories2D: run_trajectories<2>(cfg, writer, log); break;
        case ExperimentKind::Eigensolve: run_eigensolve(cfg, writer, log); break;
        case ExperimentKind::ConfinementProbe: run_probe(cfg, writer, log); break;
    }

    timings += "total = " + fmt(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()) + "\n";
    summary.files = writer.files();
    const std::string manifest = manifest_text(cfg, summary.files, timings);
    std::ofstream(root / "manifest.txt", std::ios::binary | std::ios::trunc) << manifest;
    return summary;
}

Manifest read_manifest(const fs::path& run_dir) {
    const fs::path path = run_dir / "manifest.txt";
    if (!fs::is_directory(run_dir)) throw std::runtime_error("run directory not found: " + run_dir.string());
    if (!fs::exists(path)) throw std::runtime_error("no manifest.txt in " + run_dir.string());
    std::istringstream in(read_file(path));
    std::string line, echo;
    enum { Head, Config, Files, Timings } part = Head;
    Manifest m;
    while (std::getline(in, line)) {
        if (line == kConfigMarker) part = Config;
        else if (line == kFilesMarker) part = Files;
        else if (line == kTimingsMarker) part = Timings;
        else if (part == Config) echo += line + "\n";
        else if (part == Files && !line.empty()) {
            std::istringstream row(line);
            std::string crc;
            FileRecord rec;
            if (!(row >> crc >> rec.size >> rec.path)) throw std::runtime_error("malformed manifest line: " + line);
            rec.crc = static_cast<std::uint32_t>(std::stoul(crc, nullptr, 16));
            m.files.push_back(rec);
        }
    }
    if (part == Head) throw std::runtime_error("manifest.txt has no configuration section");
    m.config = parse_config(echo);
    return m;
}

std::vector<std::string> export_figures_data(const fs::path& run_dir, const fs::path& out_dir) {
    const Manifest manifest = read_manifest(run_dir);
    const ExperimentConfig& cfg = manifest.config;
    auto listed = [&](const std::string& rel) {
        for (const auto& f : manifest.files)
            if (f.path == rel) {
                const std::string content = read_file(run_dir / rel);
                if (crc32_of(content) != f.crc) throw std::runtime_error("checksum mismatch: " + rel);
                return content;
            }
        throw std::runtime_error("file not in manifest: " + rel);
    };

    fs::create_directories(out_dir);
    std::vector<std::string> written;
    auto emit = [&](const std::string& name, const std::string& content) {
        std::ofstream out(out_dir / name, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + (out_dir / name).string());
        out << content;
        written.push_back(name);
    };
    const std::string prefix = default_prefix(cfg);

    switch (cfg.experiment) {
        case ExperimentKind::RelaxOscillator:
        case ExperimentKind::RelaxBox: {
            if (!cfg.use_smooth) break;
            std::vector<std::string> names{"eq"};
            names.insert(names.end(), cfg.densities.begin(), cfg.densities.end());
            for (double t : cfg.checkpoints) {
                const std::string cname = checkpoint_name(t);
                for (const auto& name : names) {
                    std::istringstream in(listed(cname + "/" + name + "_smooth.txt"));
                    const GridFile grid = read_grid_file(in);
                    const int nx = std::stoi(grid.header.at("nx")), ny = std::stoi(grid.header.at("ny"));
                    std::string out = "# " + name + " smooth coarse-grained density at t = " + fmt(t) +
                                      "\n# rows: y ascending, columns: x ascending\n";
                    for (int b = 0; b < ny; ++b) {
                        for (int a = 0; a < nx; ++a) {
                            const std::size_t c = static_cast<std::size_t>(a) * ny + b;
                            out += (a ? " " : "") + (grid.good[c] ? fmt(grid.value[c]) : std::string("nan"));
                        }
                        out += "\n";
                    }
                    emit(prefix + "_" + name + "_" + cname + ".mat.txt", out);
                }
            }
            break;
        }
        case ExperimentKind::Trajectories3D:
        case ExperimentKind::Trajectories2D:
            for (double mass : trajectory_masses(cfg)) {
                std::istringstream in(listed("trajectory_m" + mass_tag(mass) + ".txt"));
                std::string line, out;
                while (std::getline(in, line))
                    if (!line.empty() && line[0] != '#') out += line + "\n";
                emit(prefix + "_m" + mass_tag(mass) + ".polyline.txt", out);
            }
            break;
        case ExperimentKind::ConfinementProbe: {
            std::istringstream in(listed("probe.txt"));
            std::string line, out = "x0 y0 good\n";
            std::getline(in, line);
            while (std::getline(in, line)) {
                std::istringstream row(line);
                std::string x, y, x0, y0, r0, good;
                row >> x >> y >> x0 >> y0 >> r0 >> good;
                out += x0 + " " + y0 + " " + good + "\n";
            }
            emit(prefix + "_endpoints.txt", out);
            break;
        }
        case ExperimentKind::Eigensolve: emit(prefix + "_eigenvalues.txt", listed("eigenvalues.txt")); break;
    }
    return written;
}

}  // namespace pilotwave

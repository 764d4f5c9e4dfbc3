// experiment.hpp
// Running configured experiments into an output directory, and re-exporting
// their results as plain matrices and polylines.

#ifndef PILOTWAVE_EXPERIMENT_HPP
#define PILOTWAVE_EXPERIMENT_HPP

#include "pilotwave/config.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace pilotwave {

struct RunOptions {
    std::filesystem::path out_dir;  // empty: use cfg.output
    std::ostream* log = nullptr;    // progress lines
};

struct FileRecord {
    std::string path;  // relative to the run directory, '/' separated
    std::uint32_t crc = 0;
    std::uintmax_t size = 0;
};

struct RunSummary {
    std::filesystem::path out_dir;
    std::vector<FileRecord> files;
    std::vector<double> skipped_checkpoints;  // reused from an earlier run
};

/// Superposition described by the [modes] section (2+1D families).
WaveFunction2D build_wavefunction_2d(const ExperimentConfig& cfg, double mass);
/// Plane-wave superposition for trajectories3d.
WaveFunction3D build_wavefunction_3d(const ExperimentConfig& cfg, double mass);

/// Masses the trajectory experiments iterate over.
std::vector<double> trajectory_masses(const ExperimentConfig& cfg);

/// Directory name of a checkpoint, e.g. "t50".
std::string checkpoint_name(double t);

/// Runs the experiment and writes its files plus manifest.txt. Relaxation
/// checkpoints whose "done" marker matches the configuration and whose files
/// still carry the recorded checksums are not recomputed.
/// Throws on any module or I/O error.
RunSummary run_experiment(const ExperimentConfig& cfg, const RunOptions& options = {});

/// CRC-32 of a byte string (same polynomial as zlib).
std::uint32_t crc32_of(std::string_view bytes);

/// Parsed manifest.txt: the configuration it echoes and its file table.
struct Manifest {
    ExperimentConfig config;
    std::vector<FileRecord> files;
};

Manifest read_manifest(const std::filesystem::path& run_dir);

/// Writes figure-ready data for a finished run into out_dir:
/// <prefix>_<density>_t<t>.mat.txt smooth-CG matrices (rows y, columns x),
/// <prefix>_m<mass>.polyline.txt trajectories and <prefix>_endpoints.txt probe
/// origins. Returns the written file names. Throws when the manifest is missing.
std::vector<std::string> export_figures_data(const std::filesystem::path& run_dir,
                                             const std::filesystem::path& out_dir);

}  // namespace pilotwave

#endif  // PILOTWAVE_EXPERIMENT_HPP

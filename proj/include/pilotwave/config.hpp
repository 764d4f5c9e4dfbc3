// config.hpp
// Line-oriented experiment configuration: "key = value" with [section] headers.

#ifndef PILOTWAVE_CONFIG_HPP
#define PILOTWAVE_CONFIG_HPP

#include "pilotwave/box_solver.hpp"
#include "pilotwave/density.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pilotwave {

enum class ExperimentKind { Trajectories3D, Trajectories2D, Eigensolve, RelaxOscillator, RelaxBox, ConfinementProbe };

std::string_view to_string(ExperimentKind kind);

/// Mode list as written in the [modes] section. Either a catalog preset
/// (oscillator8, box3, box4, box6, free) or explicit per-mode lists.
struct ModeList {
    std::string preset;
    std::string family;  // oscillator, box, plane2d, plane3d
    std::vector<int> n;
    std::vector<HalfInteger> k;
    std::vector<double> energies;
    std::vector<double> phases;
    std::vector<double> weights;
    std::vector<double> px, py, pz;
    std::vector<EnergySign> signs;
    std::vector<Helicity> helicities;
};

struct ExperimentConfig {
    ExperimentKind experiment = ExperimentKind::RelaxOscillator;
    std::uint64_t seed = 1;
    int workers = 1;
    std::string output;

    // [physics]
    double m = 1.0;
    double omega = 1.0;
    BoxParams box;

    ModeList modes;

    // [lattice]
    LatticeSpec lattice;
    bool write_lattice = false;

    // [coarse_grain]
    bool use_standard = true;
    bool use_smooth = true;
    CoarseGrainSpec standard = CoarseGrainSpec::standard(32);
    CoarseGrainSpec smooth = CoarseGrainSpec::smooth();

    // [time]
    double t0 = 0.0;
    std::vector<double> checkpoints{0.0, 25.0, 50.0, 75.0, 100.0};

    IntegratorConfig integrator;

    // [densities]
    std::vector<std::string> densities{"rho0"};

    // [trajectories]
    std::vector<double> masses;
    std::vector<double> start{0.0, 0.0, 0.0};
    double t_end = 200.0;

    // [probe]
    int probe_count = 100;
    double probe_radius = 0.5;
    double probe_t_final = 1000.0;
    double inner_radius = 2.0;

    // [eigensolve]
    std::vector<HalfInteger> eigen_k;
    int scan_resolution = 20000;

    // [export]
    std::string figure_prefix;
};

/// All problems found while parsing, one "line N: message" entry each.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(std::vector<std::string> errors);
    const std::vector<std::string>& errors() const { return errors_; }

private:
    std::vector<std::string> errors_;
};

/// Parses and validates a configuration. Throws ConfigError.
ExperimentConfig parse_config(std::string_view text);

/// Reads a file and parses it; throws ConfigError (also for unreadable files).
ExperimentConfig load_config(const std::string& path);

/// Checks cross-field constraints (after command-line overrides). Throws ConfigError.
void validate_config(const ExperimentConfig& cfg);

/// Canonical, deterministic dump of the resolved configuration in the input format.
std::string config_echo(const ExperimentConfig& cfg);

}  // namespace pilotwave

#endif  // PILOTWAVE_CONFIG_HPP

// dynamics.hpp
// Guidance velocity, adaptive RKF45 trajectories and backtracking.

#ifndef PILOTWAVE_DYNAMICS_HPP
#define PILOTWAVE_DYNAMICS_HPP

#include "pilotwave/wavefunction.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pilotwave {

struct IntegratorConfig {
    double abs_tolerance = 1e-8;        // per-step local error bound (position units)
    double min_step = 1e-8;
    double max_step = 0.1;
    long max_iterations = 100000;       // attempted steps per integration, rejected ones included
    double backtrack_precision = 1e-3;  // allowed round-trip error
    bool roundtrip_check = true;

    /// Throws std::invalid_argument when the invariants do not hold.
    void validate() const;
};

enum class FailureReason { None, Precision, IterationCap, DegenerateDensity };

std::string_view to_string(FailureReason reason);

template <int Dim>
struct TrajectoryOutcome {
    Vec<Dim> end_position = Vec<Dim>::Zero();
    bool good = true;
    FailureReason failure_reason = FailureReason::None;
    long steps_taken = 0;
    double roundtrip_error = 0.0;
    std::vector<std::pair<double, Vec<Dim>>> path_sample;  // filled only when requested
};

/// Densities below threshold_factor * peak density count as nodes.
inline constexpr double kDegenerateFactor = 1e-300;

class DegenerateDensity : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// v = psi^dagger alpha psi / psi^dagger psi, or nullopt where the density is degenerate.
template <int Dim>
std::optional<Vec<Dim>> try_velocity(const WaveFunction<Dim>& wf, double t, const Vec<Dim>& x);

/// Same; throws DegenerateDensity at a node.
template <int Dim>
Vec<Dim> velocity(const WaveFunction<Dim>& wf, double t, const Vec<Dim>& x);

/// Adaptive Fehlberg 4(5) integration of dx/dt = v from t_start to t_end (either
/// direction). Steps with error above tolerance are retried unless already at
/// min_step, in which case they are accepted.
template <int Dim>
TrajectoryOutcome<Dim> integrate(const WaveFunction<Dim>& wf, double t_start, const Vec<Dim>& x_start, double t_end,
                                 const IntegratorConfig& cfg, bool record_path = false);

/// Integrates t_final -> t0 (t0 < t_final) and, if cfg.roundtrip_check, back
/// again, certifying |x_roundtrip - x_final| <= backtrack_precision.
template <int Dim>
TrajectoryOutcome<Dim> backtrack(const WaveFunction<Dim>& wf, double t_final, const Vec<Dim>& x_final, double t0,
                                 const IntegratorConfig& cfg);

/// Trapezoidal line integral of v.dl around a circle, counter-clockwise unless
/// clockwise is set. Throws DegenerateDensity if the loop crosses a node.
double circulation(const WaveFunction2D& wf, double t, const Vec2& center, double radius, int n_samples,
                   bool clockwise = false);

/// Writes "t x y [z]" lines preceded by '#' comment lines.
template <int Dim>
void write_trajectory(std::ostream& out, const std::vector<std::pair<double, Vec<Dim>>>& path,
                      const std::vector<std::string>& comments = {});

}  // namespace pilotwave

#endif  // PILOTWAVE_DYNAMICS_HPP

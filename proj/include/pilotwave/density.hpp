// density.hpp
// Non-equilibrium densities transported by backtracking, coarse-graining and
// relaxation metrics.

#ifndef PILOTWAVE_DENSITY_HPP
#define PILOTWAVE_DENSITY_HPP

#include "pilotwave/dynamics.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace pilotwave {

/// Raised-cosine bump 2 pi cos^2(pi d / 2R) / (R^2 (pi^2 - 4)) for d <= R, else 0.
struct InitialDensity {
    enum class Kind { Rho0, Offset };
    Kind kind = Kind::Rho0;
    Vec2 center = Vec2::Zero();
    double radius = 4.0;

    double operator()(const Vec2& x) const;

    /// Centered bump, default R0 = 4.
    static InitialDensity rho0(double radius = 4.0);
    /// Bump j = 1..4 centered at (2,0), (0,2), (-2,0), (0,-2), default R = 2.
    static InitialDensity offset(int j, double radius = 2.0);
    /// "rho0" .. "rho4".
    static InitialDensity named(const std::string& name);
};

double initial_density_eval(const InitialDensity& d, const Vec2& x);

/// nx x ny points at box.min + (i + 1/2) * spacing; index = i * ny + j (y fastest).
struct LatticeSpec {
    int nx = 256, ny = 256;
    Box2D box = Box2D::square(5.0);

    void validate() const;
    double dx() const { return box.width() / nx; }
    double dy() const { return box.height() / ny; }
    std::size_t size() const { return static_cast<std::size_t>(nx) * ny; }
    Vec2 point(int i, int j) const { return {box.xmin + (i + 0.5) * dx(), box.ymin + (j + 0.5) * dy()}; }
};

std::vector<Vec2> build_lattice(const LatticeSpec& spec);

/// Backtracked origins of every lattice point, shared by all initial densities.
struct BacktrackGrid {
    LatticeSpec spec;
    double t0 = 0.0, t_final = 0.0;
    std::vector<Vec2> origins;
    std::vector<std::uint8_t> good;
    std::vector<FailureReason> reasons;
    std::vector<double> final_density;    // psi^dagger psi (t_final, x)
    std::vector<double> initial_density;  // psi^dagger psi (t0, x0), good points only
};

/// Backtracks every lattice point from t_final to t0 (t_final == t0 is the identity).
/// Points whose origin density is degenerate are marked bad.
BacktrackGrid backtrack_lattice(const WaveFunction2D& wf, const LatticeSpec& lattice, double t0, double t_final,
                                const IntegratorConfig& cfg, int workers = 1);

struct DensityGrid {
    LatticeSpec spec;
    double t = 0.0;
    std::vector<double> values;  // meaningful at good points only
    std::vector<std::uint8_t> good;
};

/// rho(t, x) = psi^dagger psi(t, x) rho(t0, x0) / psi^dagger psi(t0, x0).
DensityGrid reconstruct_from(const BacktrackGrid& bt, const std::function<double(const Vec2&)>& rho_initial);

DensityGrid reconstruct_density(const WaveFunction2D& wf, const InitialDensity& d, double t0, double t_final,
                                const LatticeSpec& lattice, const IntegratorConfig& cfg, int workers = 1);

/// psi^dagger psi evaluated directly on the lattice, all points good.
DensityGrid equilibrium_grid(const WaveFunction2D& wf, double t, const LatticeSpec& lattice, int workers = 1);

struct CoarseGrainSpec {
    enum class Kind { Standard, Smooth };
    Kind kind = Kind::Standard;
    int cells_per_side = 32;       // standard
    double cell_side = 10.0 / 16;  // smooth
    double shift = 10.0 / 128;
    int steps = 121;               // positions per axis

    static CoarseGrainSpec standard(int cells_per_side = 32);
    static CoarseGrainSpec smooth(double cell_side = 10.0 / 16, double shift = 10.0 / 128, int steps = 121);
};

struct CoarseGrid {
    int nx = 0, ny = 0;  // cells per axis, index = a * ny + b
    double side_x = 0.0, side_y = 0.0;
    double cell_weight = 0.0;  // box area / cell count
    std::vector<Vec2> centers;
    std::vector<double> values;         // mean over good points
    std::vector<double> good_fraction;  // good points / points in cell
    std::vector<std::uint8_t> has_value;
};

CoarseGrid coarse_grain(const DensityGrid& grid, const CoarseGrainSpec& cg);
CoarseGrid smooth_coarse_grain(const DensityGrid& grid, const CoarseGrainSpec& cg);

struct RelaxationMetrics {
    double l1 = 0.0;
    double h = 0.0;
};

/// l1 = sum |a - b| w over cells valued in both, h = sum a ln(a/b) w over cells
/// positive in both. Throws std::invalid_argument on mismatched layouts.
RelaxationMetrics relaxation_metrics(const CoarseGrid& rho, const CoarseGrid& eq);

struct GoodPointStats {
    double mean_cell_fraction = 0.0;
    double worst_cell_fraction = 0.0;
    double overall_fraction = 0.0;
};

/// Good-point fractions over a standard coarse-graining.
GoodPointStats good_point_stats(const DensityGrid& grid, int cells_per_side = 32);

using Header = std::vector<std::pair<std::string, std::string>>;

/// "# key = value" header then "x y value good_flag" per point; bad points carry "nan".
void write_grid(std::ostream& out, const DensityGrid& grid, const std::string& kind, const Header& extra = {});
void write_coarse_grid(std::ostream& out, const CoarseGrid& grid, double t, const std::string& kind,
                       const Header& extra = {});

struct GridFile {
    std::map<std::string, std::string> header;
    std::vector<double> x, y, value;
    std::vector<std::uint8_t> good;
};

/// Reads either file kind; throws std::runtime_error with a line number on malformed input.
GridFile read_grid_file(std::istream& in);

}  // namespace pilotwave

#endif  // PILOTWAVE_DENSITY_HPP

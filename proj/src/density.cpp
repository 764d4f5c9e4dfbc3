#include "pilotwave/density.hpp"
#include "pilotwave/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

namespace pilotwave {

namespace {
constexpr double kPi = std::numbers::pi;
}

double InitialDensity::operator()(const Vec2& x) const {
    const double d = (x - center).norm();
    if (d >= radius) return 0.0;
    const double c = std::cos(kPi * d / (2.0 * radius));
    return 2.0 * kPi * c * c / (radius * radius * (kPi * kPi - 4.0));
}

InitialDensity InitialDensity::rho0(double radius) {
    if (!(radius > 0.0)) throw std::invalid_argument("initial density: radius must be > 0");
    return {Kind::Rho0, Vec2::Zero(), radius};
}

InitialDensity InitialDensity::offset(int j, double radius) {
    static const Vec2 centers[4] = {Vec2(2, 0), Vec2(0, 2), Vec2(-2, 0), Vec2(0, -2)};
    if (j < 1 || j > 4) throw std::invalid_argument("initial density: offset index must be 1..4");
    if (!(radius > 0.0)) throw std::invalid_argument("initial density: radius must be > 0");
    return {Kind::Offset, centers[j - 1], radius};
}

InitialDensity InitialDensity::named(const std::string& name) {
    if (name == "rho0") return rho0();
    if (name.size() == 4 && name.compare(0, 3, "rho") == 0 && name[3] >= '1' && name[3] <= '4')
        return offset(name[3] - '0');
    throw std::invalid_argument("unknown initial density '" + name + "'");
}

double initial_density_eval(const InitialDensity& d, const Vec2& x) { return d(x); }

void LatticeSpec::validate() const {
    if (nx < 1 || ny < 1) throw std::invalid_argument("lattice: nx and ny must be >= 1");
    if (!(box.width() > 0.0) || !(box.height() > 0.0)) throw std::invalid_argument("lattice: empty box");
}

std::vector<Vec2> build_lattice(const LatticeSpec& spec) {
    spec.validate();
    std::vector<Vec2> out;
    out.reserve(spec.size());
    for (int i = 0; i < spec.nx; ++i)
        for (int j = 0; j < spec.ny; ++j) out.push_back(spec.point(i, j));
    return out;
}

BacktrackGrid backtrack_lattice(const WaveFunction2D& wf, const LatticeSpec& lattice, double t0, double t_final,
                                const IntegratorConfig& cfg, int workers) {
    if (t_final < t0) throw std::invalid_argument("backtrack_lattice: need t0 <= t_final");
    cfg.validate();
    BacktrackGrid bt;
    bt.spec = lattice;
    bt.t0 = t0;
    bt.t_final = t_final;
    const std::vector<Vec2> points = build_lattice(lattice);
    const std::size_t n = points.size();
    bt.origins.assign(n, Vec2::Zero());
    bt.good.assign(n, 0);
    bt.reasons.assign(n, FailureReason::None);
    bt.final_density.assign(n, 0.0);
    bt.initial_density.assign(n, 0.0);
    const double floor = kDegenerateFactor * wf.peak_density();

    parallel_for(n, workers, [&](std::size_t i) {
        const Vec2& x = points[i];
        bt.final_density[i] = wf.density(t_final, x);
        TrajectoryOutcome<2> out;
        if (t_final > t0) {
            out = backtrack(wf, t_final, x, t0, cfg);
        } else {
            out.end_position = x;
        }
        bt.origins[i] = out.end_position;
        if (out.good) {
            const double rho = wf.density(t0, out.end_position);
            if (!(rho >= floor) || rho == 0.0) {
                out.good = false;
                out.failure_reason = FailureReason::DegenerateDensity;
            } else {
                bt.initial_density[i] = rho;
            }
        }
        bt.good[i] = out.good ? 1 : 0;
        bt.reasons[i] = out.failure_reason;
    });
    return bt;
}

DensityGrid reconstruct_from(const BacktrackGrid& bt, const std::function<double(const Vec2&)>& rho_initial) {
    DensityGrid grid;
    grid.spec = bt.spec;
    grid.t = bt.t_final;
    grid.good = bt.good;
    grid.values.assign(bt.origins.size(), std::numeric_limits<double>::quiet_NaN());
    for (std::size_t i = 0; i < bt.origins.size(); ++i)
        if (bt.good[i]) grid.values[i] = bt.final_density[i] * rho_initial(bt.origins[i]) / bt.initial_density[i];
    return grid;
}

DensityGrid reconstruct_density(const WaveFunction2D& wf, const InitialDensity& d, double t0, double t_final,
                                const LatticeSpec& lattice, const IntegratorConfig& cfg, int workers) {
    if (!(t0 < t_final)) throw std::invalid_argument("reconstruct_density: need t0 < t_final");
    return reconstruct_from(backtrack_lattice(wf, lattice, t0, t_final, cfg, workers), d);
}

DensityGrid equilibrium_grid(const WaveFunction2D& wf, double t, const LatticeSpec& lattice, int workers) {
    const std::vector<Vec2> points = build_lattice(lattice);
    DensityGrid grid;
    grid.spec = lattice;
    grid.t = t;
    grid.values.assign(points.size(), 0.0);
    grid.good.assign(points.size(), 1);
    parallel_for(points.size(), workers, [&](std::size_t i) { grid.values[i] = wf.density(t, points[i]); });
    return grid;
}

CoarseGrainSpec CoarseGrainSpec::standard(int cells_per_side) {
    CoarseGrainSpec cg;
    cg.kind = Kind::Standard;
    cg.cells_per_side = cells_per_side;
    return cg;
}

CoarseGrainSpec CoarseGrainSpec::smooth(double cell_side, double shift, int steps) {
    CoarseGrainSpec cg;
    cg.kind = Kind::Smooth;
    cg.cell_side = cell_side;
    cg.shift = shift;
    cg.steps = steps;
    return cg;
}

namespace {

// Lattice indices along one axis with lo <= coordinate < hi.
std::pair<int, int> index_range(double origin, double spacing, int count, double lo, double hi) {
    int first = count, last = count;
    for (int i = 0; i < count; ++i) {
        const double c = origin + (i + 0.5) * spacing;
        if (first == count && c >= lo) first = i;
        if (c >= hi) {
            last = i;
            break;
        }
    }
    return {first, std::max(first, last)};
}

// Square cells of side (sx, sy) with lower-left corners box.min + (a, b) * shift.
CoarseGrid average_cells(const DensityGrid& grid, int cells_x, int cells_y, double sx, double sy, double shift_x,
                         double shift_y) {
    const LatticeSpec& spec = grid.spec;
    CoarseGrid cg;
    cg.nx = cells_x;
    cg.ny = cells_y;
    cg.side_x = sx;
    cg.side_y = sy;
    cg.cell_weight = spec.box.area() / (static_cast<double>(cells_x) * cells_y);
    std::vector<std::pair<int, int>> rx(cells_x), ry(cells_y);
    for (int a = 0; a < cells_x; ++a) {
        const double lo = spec.box.xmin + a * shift_x;
        rx[a] = index_range(spec.box.xmin, spec.dx(), spec.nx, lo, lo + sx);
    }
    for (int b = 0; b < cells_y; ++b) {
        const double lo = spec.box.ymin + b * shift_y;
        ry[b] = index_range(spec.box.ymin, spec.dy(), spec.ny, lo, lo + sy);
    }
    const std::size_t n = static_cast<std::size_t>(cells_x) * cells_y;
    cg.centers.resize(n);
    cg.values.assign(n, 0.0);
    cg.good_fraction.assign(n, 0.0);
    cg.has_value.assign(n, 0);
    for (int a = 0; a < cells_x; ++a)
        for (int b = 0; b < cells_y; ++b) {
            const std::size_t c = static_cast<std::size_t>(a) * cells_y + b;
            cg.centers[c] = Vec2(spec.box.xmin + a * shift_x + 0.5 * sx, spec.box.ymin + b * shift_y + 0.5 * sy);
            double sum = 0.0;
            long good = 0, total = 0;
            for (int i = rx[a].first; i < rx[a].second; ++i)
                for (int j = ry[b].first; j < ry[b].second; ++j) {
                    const std::size_t k = static_cast<std::size_t>(i) * spec.ny + j;
                    ++total;
                    if (grid.good[k]) {
                        ++good;
                        sum += grid.values[k];
                    }
                }
            if (total > 0) cg.good_fraction[c] = static_cast<double>(good) / total;
            if (good > 0) {
                cg.values[c] = sum / good;
                cg.has_value[c] = 1;
            }
        }
    return cg;
}

}  // namespace

CoarseGrid coarse_grain(const DensityGrid& grid, const CoarseGrainSpec& cg) {
    if (cg.kind == CoarseGrainSpec::Kind::Smooth) return smooth_coarse_grain(grid, cg);
    if (cg.cells_per_side < 1) throw std::invalid_argument("coarse_grain: cells_per_side must be >= 1");
    const double sx = grid.spec.box.width() / cg.cells_per_side;
    const double sy = grid.spec.box.height() / cg.cells_per_side;
    return average_cells(grid, cg.cells_per_side, cg.cells_per_side, sx, sy, sx, sy);
}

CoarseGrid smooth_coarse_grain(const DensityGrid& grid, const CoarseGrainSpec& cg) {
    if (cg.steps < 1 || !(cg.cell_side > 0.0) || !(cg.shift >= 0.0))
        throw std::invalid_argument("smooth_coarse_grain: invalid cell layout");
    const double reach = cg.cell_side + (cg.steps - 1) * cg.shift;
    const double slack = 1e-12 * std::max(grid.spec.box.width(), grid.spec.box.height());
    if (reach > grid.spec.box.width() + slack || reach > grid.spec.box.height() + slack)
        throw std::invalid_argument("smooth_coarse_grain: cells leave the lattice box");
    return average_cells(grid, cg.steps, cg.steps, cg.cell_side, cg.cell_side, cg.shift, cg.shift);
}

RelaxationMetrics relaxation_metrics(const CoarseGrid& rho, const CoarseGrid& eq) {
    if (rho.nx != eq.nx || rho.ny != eq.ny || rho.cell_weight != eq.cell_weight)
        throw std::invalid_argument("relaxation_metrics: coarse grids have different layouts");
    RelaxationMetrics m;
    for (std::size_t c = 0; c < rho.values.size(); ++c) {
        if (!rho.has_value[c] || !eq.has_value[c]) continue;
        const double a = rho.values[c], b = eq.values[c];
        m.l1 += std::abs(a - b);
        if (a > 0.0 && b > 0.0) m.h += a * std::log(a / b);
    }
    m.l1 *= rho.cell_weight;
    m.h *= rho.cell_weight;
    return m;
}

GoodPointStats good_point_stats(const DensityGrid& grid, int cells_per_side) {
    const CoarseGrid cg = coarse_grain(grid, CoarseGrainSpec::standard(cells_per_side));
    GoodPointStats s;
    s.worst_cell_fraction = 1.0;
    for (double f : cg.good_fraction) {
        s.mean_cell_fraction += f;
        s.worst_cell_fraction = std::min(s.worst_cell_fraction, f);
    }
    s.mean_cell_fraction /= static_cast<double>(cg.good_fraction.size());
    s.overall_fraction =
        static_cast<double>(std::count(grid.good.begin(), grid.good.end(), 1)) / static_cast<double>(grid.good.size());
    return s;
}

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_header(std::ostream& out, const Header& header) {
    for (const auto& [k, v] : header) out << "# " << k << " = " << v << '\n';
}

std::string box_text(const Box2D& b) { return fmt(b.xmin) + " " + fmt(b.xmax) + " " + fmt(b.ymin) + " " + fmt(b.ymax); }

}  // namespace

void write_grid(std::ostream& out, const DensityGrid& grid, const std::string& kind, const Header& extra) {
    Header header{{"kind", kind},
                  {"t", fmt(grid.t)},
                  {"box", box_text(grid.spec.box)},
                  {"nx", std::to_string(grid.spec.nx)},
                  {"ny", std::to_string(grid.spec.ny)}};
    header.insert(header.end(), extra.begin(), extra.end());
    write_header(out, header);
    char buf[128];
    for (int i = 0; i < grid.spec.nx; ++i)
        for (int j = 0; j < grid.spec.ny; ++j) {
            const std::size_t k = static_cast<std::size_t>(i) * grid.spec.ny + j;
            const Vec2 p = grid.spec.point(i, j);
            if (grid.good[k])
                std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g 1\n", p[0], p[1], grid.values[k]);
            else
                std::snprintf(buf, sizeof buf, "%.17g %.17g nan 0\n", p[0], p[1]);
            out << buf;
        }
}

void write_coarse_grid(std::ostream& out, const CoarseGrid& grid, double t, const std::string& kind, const Header& extra) {
    Header header{{"kind", kind},
                  {"t", fmt(t)},
                  {"nx", std::to_string(grid.nx)},
                  {"ny", std::to_string(grid.ny)},
                  {"cell_side", fmt(grid.side_x) + " " + fmt(grid.side_y)},
                  {"cell_weight", fmt(grid.cell_weight)}};
    header.insert(header.end(), extra.begin(), extra.end());
    write_header(out, header);
    char buf[128];
    for (std::size_t c = 0; c < grid.values.size(); ++c) {
        if (grid.has_value[c])
            std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g 1\n", grid.centers[c][0], grid.centers[c][1], grid.values[c]);
        else
            std::snprintf(buf, sizeof buf, "%.17g %.17g nan 0\n", grid.centers[c][0], grid.centers[c][1]);
        out << buf;
    }
}

GridFile read_grid_file(std::istream& in) {
    GridFile file;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto eq = line.find('=');
            if (eq == std::string::npos) continue;
            auto trim = [](std::string s) {
                const auto a = s.find_first_not_of(" \t"), b = s.find_last_not_of(" \t\r");
                return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
            };
            file.header[trim(line.substr(1, eq - 1))] = trim(line.substr(eq + 1));
            continue;
        }
        std::istringstream row(line);
        std::string sx, sy, sv;
        int flag = -1;
        if (!(row >> sx >> sy >> sv >> flag) || (flag != 0 && flag != 1))
            throw std::runtime_error("grid file line " + std::to_string(lineno) + ": expected 'x y value good_flag'");
        try {
            file.x.push_back(std::stod(sx));
            file.y.push_back(std::stod(sy));
            file.value.push_back(std::stod(sv));
        } catch (const std::exception&) {
            throw std::runtime_error("grid file line " + std::to_string(lineno) + ": malformed number");
        }
        file.good.push_back(static_cast<std::uint8_t>(flag));
    }
    return file;
}

}  // namespace pilotwave

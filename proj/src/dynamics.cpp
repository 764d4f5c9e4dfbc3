#include "pilotwave/dynamics.hpp"
#include "pilotwave/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <ostream>

namespace pilotwave {

void IntegratorConfig::validate() const {
    if (!(min_step > 0.0) || !(min_step <= max_step))
        throw std::invalid_argument("integrator: need 0 < min_step <= max_step");
    if (!(abs_tolerance > 0.0)) throw std::invalid_argument("integrator: abs_tolerance must be > 0");
    if (!(backtrack_precision > 0.0)) throw std::invalid_argument("integrator: backtrack_precision must be > 0");
    if (max_iterations < 1) throw std::invalid_argument("integrator: max_iterations must be >= 1");
}

std::string_view to_string(FailureReason reason) {
    switch (reason) {
        case FailureReason::None: return "none";
        case FailureReason::Precision: return "precision";
        case FailureReason::IterationCap: return "iteration_cap";
        case FailureReason::DegenerateDensity: return "degenerate_density";
    }
    return "unknown";
}

int default_workers() {
    if (const char* env = std::getenv("PILOTWAVE_WORKERS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    return 1;
}

template <int Dim>
std::optional<Vec<Dim>> try_velocity(const WaveFunction<Dim>& wf, double t, const Vec<Dim>& x) {
    const auto psi = wf.spinor(t, x);
    const double rho = psi.squaredNorm();
    if (!(rho >= kDegenerateFactor * wf.peak_density()) || rho == 0.0) return std::nullopt;
    if constexpr (Dim == 2) {
        return Vec2(current_2d(psi) / rho);
    } else {
        static const auto rep = weyl_rep_3d<double>();
        return Vec3(current(psi, rep) / rho);
    }
}

template <int Dim>
Vec<Dim> velocity(const WaveFunction<Dim>& wf, double t, const Vec<Dim>& x) {
    if (auto v = try_velocity(wf, t, x)) return *v;
    throw DegenerateDensity("velocity: density vanishes at the requested point");
}

namespace {

// Fehlberg 4(5) tableau.
constexpr double c2 = 1.0 / 4, c3 = 3.0 / 8, c4 = 12.0 / 13, c5 = 1.0, c6 = 1.0 / 2;
constexpr double a21 = 1.0 / 4;
constexpr double a31 = 3.0 / 32, a32 = 9.0 / 32;
constexpr double a41 = 1932.0 / 2197, a42 = -7200.0 / 2197, a43 = 7296.0 / 2197;
constexpr double a51 = 439.0 / 216, a52 = -8.0, a53 = 3680.0 / 513, a54 = -845.0 / 4104;
constexpr double a61 = -8.0 / 27, a62 = 2.0, a63 = -3544.0 / 2565, a64 = 1859.0 / 4104, a65 = -11.0 / 40;
constexpr double b1 = 16.0 / 135, b3 = 6656.0 / 12825, b4 = 28561.0 / 56430, b5 = -9.0 / 50, b6 = 2.0 / 55;
constexpr double e1 = 1.0 / 360, e3 = -128.0 / 4275, e4 = -2197.0 / 75240, e5 = 1.0 / 50, e6 = 2.0 / 55;

constexpr double kSafety = 0.9, kMinFactor = 0.2, kMaxFactor = 5.0;

}  // namespace

template <int Dim>
TrajectoryOutcome<Dim> integrate(const WaveFunction<Dim>& wf, double t_start, const Vec<Dim>& x_start, double t_end,
                                 const IntegratorConfig& cfg, bool record_path) {
    using V = Vec<Dim>;
    TrajectoryOutcome<Dim> out;
    out.end_position = x_start;
    if (record_path) out.path_sample.emplace_back(t_start, x_start);
    const double span = std::abs(t_end - t_start);
    if (span == 0.0) return out;
    const double dir = t_end > t_start ? 1.0 : -1.0;

    // dx/dtau = dir * v(t_start + dir * tau, x)
    V k[6];
    auto field = [&](double tau, const V& x, V& result) {
        auto v = try_velocity(wf, t_start + dir * tau, x);
        if (!v) return false;
        result = dir * *v;
        return true;
    };
    auto fail = [&](FailureReason reason) {
        out.good = false;
        out.failure_reason = reason;
        return out;
    };

    V x = x_start;
    double tau = 0.0;
    double h = std::min(cfg.max_step, span);
    long attempts = 0;
    bool have_k1 = false;
    while (tau < span) {
        if (attempts++ >= cfg.max_iterations) return fail(FailureReason::IterationCap);
        bool last = false;
        if (h >= span - tau) {
            h = span - tau;
            last = true;
        }
        if (!have_k1 && !field(tau, x, k[0])) return fail(FailureReason::DegenerateDensity);
        have_k1 = true;
        if (!field(tau + c2 * h, x + h * (a21 * k[0]), k[1]) ||
            !field(tau + c3 * h, x + h * (a31 * k[0] + a32 * k[1]), k[2]) ||
            !field(tau + c4 * h, x + h * (a41 * k[0] + a42 * k[1] + a43 * k[2]), k[3]) ||
            !field(tau + c5 * h, x + h * (a51 * k[0] + a52 * k[1] + a53 * k[2] + a54 * k[3]), k[4]) ||
            !field(tau + c6 * h, x + h * (a61 * k[0] + a62 * k[1] + a63 * k[2] + a64 * k[3] + a65 * k[4]), k[5]))
            return fail(FailureReason::DegenerateDensity);

        const double err = (h * (e1 * k[0] + e3 * k[2] + e4 * k[3] + e5 * k[4] + e6 * k[5])).norm();
        const bool at_floor = h <= cfg.min_step;
        if (err <= cfg.abs_tolerance || at_floor) {
            x += h * (b1 * k[0] + b3 * k[2] + b4 * k[3] + b5 * k[4] + b6 * k[5]);
            tau = last ? span : tau + h;
            ++out.steps_taken;
            have_k1 = false;
            if (record_path) out.path_sample.emplace_back(t_start + dir * tau, x);
        }
        const double factor =
            err == 0.0 ? kMaxFactor : std::clamp(kSafety * std::pow(cfg.abs_tolerance / err, 0.2), kMinFactor, kMaxFactor);
        // a shortened final step says nothing about the next step size
        if (!(last && err <= cfg.abs_tolerance)) h = std::clamp(h * factor, cfg.min_step, cfg.max_step);
    }
    out.end_position = x;
    return out;
}

template <int Dim>
TrajectoryOutcome<Dim> backtrack(const WaveFunction<Dim>& wf, double t_final, const Vec<Dim>& x_final, double t0,
                                 const IntegratorConfig& cfg) {
    if (!(t0 < t_final)) throw std::invalid_argument("backtrack: need t0 < t_final");
    TrajectoryOutcome<Dim> back = integrate(wf, t_final, x_final, t0, cfg);
    if (!back.good || !cfg.roundtrip_check) return back;
    const TrajectoryOutcome<Dim> fwd = integrate(wf, t0, back.end_position, t_final, cfg);
    back.steps_taken += fwd.steps_taken;
    if (!fwd.good) {
        back.good = false;
        back.failure_reason = fwd.failure_reason;
        return back;
    }
    back.roundtrip_error = (fwd.end_position - x_final).norm();
    if (!(back.roundtrip_error <= cfg.backtrack_precision)) {
        back.good = false;
        back.failure_reason = FailureReason::Precision;
    }
    return back;
}

double circulation(const WaveFunction2D& wf, double t, const Vec2& center, double radius, int n_samples, bool clockwise) {
    if (n_samples < 3) throw std::invalid_argument("circulation: need at least 3 samples");
    if (!(radius > 0.0)) throw std::invalid_argument("circulation: radius must be > 0");
    const double dtheta = 2.0 * std::numbers::pi / n_samples;
    double sum = 0.0;
    for (int i = 0; i < n_samples; ++i) {
        const double th = i * dtheta;
        const Vec2 tangent(-std::sin(th), std::cos(th));
        sum += velocity(wf, t, Vec2(center + radius * Vec2(std::cos(th), std::sin(th)))).dot(tangent);
    }
    const double value = sum * radius * dtheta;
    return clockwise ? -value : value;
}

template <int Dim>
void write_trajectory(std::ostream& out, const std::vector<std::pair<double, Vec<Dim>>>& path,
                      const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "# " << c << '\n';
    char buf[128];
    for (const auto& [t, x] : path) {
        int len = std::snprintf(buf, sizeof buf, "%.17g", t);
        for (int d = 0; d < Dim; ++d) len += std::snprintf(buf + len, sizeof buf - len, " %.17g", x[d]);
        out << buf << '\n';
    }
}

template std::optional<Vec2> try_velocity<2>(const WaveFunction2D&, double, const Vec2&);
template std::optional<Vec3> try_velocity<3>(const WaveFunction3D&, double, const Vec3&);
template Vec2 velocity<2>(const WaveFunction2D&, double, const Vec2&);
template Vec3 velocity<3>(const WaveFunction3D&, double, const Vec3&);
template TrajectoryOutcome<2> integrate<2>(const WaveFunction2D&, double, const Vec2&, double, const IntegratorConfig&, bool);
template TrajectoryOutcome<3> integrate<3>(const WaveFunction3D&, double, const Vec3&, double, const IntegratorConfig&, bool);
template TrajectoryOutcome<2> backtrack<2>(const WaveFunction2D&, double, const Vec2&, double, const IntegratorConfig&);
template TrajectoryOutcome<3> backtrack<3>(const WaveFunction3D&, double, const Vec3&, double, const IntegratorConfig&);
template void write_trajectory<2>(std::ostream&, const std::vector<std::pair<double, Vec2>>&, const std::vector<std::string>&);
template void write_trajectory<3>(std::ostream&, const std::vector<std::pair<double, Vec3>>&, const std::vector<std::string>&);

}  // namespace pilotwave

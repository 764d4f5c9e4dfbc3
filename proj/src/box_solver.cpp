#include "pilotwave/box_solver.hpp"

#include "pilotwave/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pilotwave {

namespace {

struct Kappas {
    double in, out;
};

Kappas kappas(double energy, const BoxParams& params) {
    if (!(energy > params.energy_floor() && energy < params.energy_ceiling()))
        throw std::domain_error("box energy outside the bound-state window");
    const double shifted = energy + params.V0;
    return {std::sqrt(shifted * shifted - params.m * params.m), std::sqrt(params.m * params.m - energy * energy)};
}

}  // namespace

double box_match_residual(double energy, HalfInteger k, const BoxParams& params) {
    const Kappas kap = kappas(energy, params);
    const int nu = k.lower_winding();
    std::array<double, 2> j{};
    std::array<double, 2> kv{};
    bessel_window(BesselKind::J, nu, kap.in * params.R_prime, j);
    bessel_window(BesselKind::K, nu, kap.out * params.R_prime, kv);
    const double inner = (energy + params.V0 + params.m) * j[0] / (kap.in * j[1]);
    const double outer = (energy + params.m) * kv[0] / (kap.out * kv[1]);
    return inner - outer;
}

std::vector<double> solve_box_eigenvalues(HalfInteger k, const BoxParams& params, int scan_resolution) {
    if (scan_resolution < 1000) throw std::invalid_argument("solve_box_eigenvalues: scan_resolution must be >= 1000");
    const double lo = params.energy_floor();
    const double hi = params.energy_ceiling();
    const double step = (hi - lo) / scan_resolution;

    std::vector<double> roots;
    double e_prev = lo + step;
    double f_prev = box_match_residual(e_prev, k, params);
    for (int i = 2; i < scan_resolution; ++i) {
        const double e_cur = lo + i * step;
        const double f_cur = box_match_residual(e_cur, k, params);
        if (std::isfinite(f_prev) && std::isfinite(f_cur) && (f_prev == 0.0 || std::signbit(f_prev) != std::signbit(f_cur))) {
            double a = e_prev, b = e_cur, fa = f_prev;
            const double initial = std::max(std::abs(f_prev), std::abs(f_cur));
            while (b - a > 1e-12) {
                const double mid = 0.5 * (a + b);
                const double fm = box_match_residual(mid, k, params);
                if (fm == 0.0) {
                    a = b = mid;
                    break;
                }
                if (std::signbit(fm) == std::signbit(fa)) {
                    a = mid;
                    fa = fm;
                } else {
                    b = mid;
                }
            }
            const double root = 0.5 * (a + b);
            const double fa_end = std::abs(box_match_residual(a, k, params));
            const double fb_end = std::abs(box_match_residual(b, k, params));
            if (std::max(fa_end, fb_end) <= initial) roots.push_back(root);
        }
        e_prev = e_cur;
        f_prev = f_cur;
    }
    return roots;
}

double solve_box_beta_prime(double energy, HalfInteger k, const BoxParams& params) {
    const Kappas kap = kappas(energy, params);
    const int nu = k.lower_winding();
    const double j = bessel_j(nu, kap.in * params.R_prime);
    const double kv = bessel_k(nu, kap.out * params.R_prime);
    if (kv == 0.0 || !std::isfinite(kv)) throw std::runtime_error("solve_box_beta_prime: exterior psi1 vanishes at R'");
    return std::sqrt(kap.in / kap.out) * j / kv;
}

BoxMode make_box_mode(HalfInteger k, double energy_guess, const BoxParams& params, int scan_resolution) {
    const std::vector<double> roots = solve_box_eigenvalues(k, params, scan_resolution);
    if (roots.empty()) throw std::runtime_error("no box eigenvalue for k = " + k.str());
    double best = roots.front();
    for (double r : roots)
        if (std::abs(r - energy_guess) < std::abs(best - energy_guess)) best = r;
    return BoxMode(k, best, solve_box_beta_prime(best, k, params), params);
}

}  // namespace pilotwave

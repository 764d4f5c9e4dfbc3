#include "doctest.h"

#include "pilotwave/box_solver.hpp"
#include "pilotwave/catalog.hpp"
#include "pilotwave/modes.hpp"
#include "pilotwave/quadrature.hpp"
#include "pilotwave/special_functions.hpp"

#include "oracles.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <random>

using namespace pilotwave;
using namespace oracles;

TEST_CASE("half-integer parsing") {
    CHECK(HalfInteger::parse("1/2").twice == 1);
    CHECK(HalfInteger::parse("-5/2").twice == -5);
    CHECK(HalfInteger::parse(" 1.5 ").twice == 3);
    CHECK_THROWS(HalfInteger::parse("1"));
    CHECK_THROWS(HalfInteger::parse("2/2"));
    CHECK_THROWS(HalfInteger::parse("1/3"));
    CHECK(HalfInteger{-5}.lower_winding() == -3);
    CHECK(HalfInteger{5}.lower_winding() == 2);
}

TEST_CASE("3+1D plane waves") {
    SUBCASE("massless right-handed limit puts everything in the lower pair") {
        PlaneWave3D w{Vec3(0.3, -0.4, 1.2), 0.0, Helicity::Right, EnergySign::Positive};
        const Spinor4 a = w.amplitude();
        CHECK(a.head<2>().norm() < 1e-15);
        CHECK((a.tail<2>() - w.chi()).norm() < 1e-15);
    }
    SUBCASE("chi_R along z is (1, 0)") {
        PlaneWave3D w{Vec3(0, 0, 1), 0.0, Helicity::Right, EnergySign::Positive};
        CHECK((w.chi() - Eigen::Vector2cd(1, 0)).norm() < 1e-15);
    }
    SUBCASE("helicity eigenstates, unit density and the Dirac equation") {
        std::mt19937_64 rng(5);
        std::normal_distribution<double> g;
        const auto rep = weyl_rep_3d();
        for (int trial = 0; trial < 50; ++trial) {
            const Vec3 p(g(rng), g(rng), g(rng));
            const double m = std::abs(g(rng));
            for (auto hel : {Helicity::Right, Helicity::Left}) {
                for (auto sgn : {EnergySign::Positive, EnergySign::Negative}) {
                    PlaneWave3D w{p, m, hel, sgn};
                    Eigen::Matrix2cd sp = (p[0] * pauli<double>(1) + p[1] * pauli<double>(2) + p[2] * pauli<double>(3)) / p.norm();
                    const double eig = hel == Helicity::Right ? 1.0 : -1.0;
                    CHECK((sp * w.chi() - eig * w.chi()).norm() < 1e-12);

                    const Vec3 x(g(rng), g(rng), g(rng));
                    const double t = 10 * g(rng);
                    CHECK(density(plane_wave_3d_eval(w, t, x)) == doctest::Approx(1.0).epsilon(1e-14));
                    // H amplitude = frequency * amplitude with H = alpha.p + beta m
                    Eigen::Matrix4cd hmat = m * rep.beta;
                    for (int d = 0; d < 3; ++d) hmat += p[d] * rep.alpha[d];
                    CHECK((hmat * w.amplitude() - w.frequency() * w.amplitude()).norm() < 1e-12);
                    const Vec3 v = current(w.amplitude(), rep);
                    CHECK((v - (sgn == EnergySign::Positive ? 1.0 : -1.0) * p / w.energy()).norm() < 1e-12);
                }
            }
        }
    }
}

TEST_CASE("2+1D plane waves") {
    const Spinor2 up = plane_wave_2d_eval(PlaneWave2D{Vec2(0, 0), 1.0, EnergySign::Positive}, 0.7, Vec2(0.3, 2));
    CHECK((up - Spinor2(std::exp(-0.7 * I), 0)).norm() < 1e-15);
    const Spinor2 dn = plane_wave_2d_eval(PlaneWave2D{Vec2(0, 0), 1.0, EnergySign::Negative}, 0.7, Vec2(0.3, 2));
    CHECK((dn - Spinor2(0, std::exp(0.7 * I))).norm() < 1e-15);

    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-20, 20);
    PlaneWave2D w{Vec2(1, 0), 1.0, EnergySign::Positive};
    for (int i = 0; i < 1000; ++i)
        CHECK(density(plane_wave_2d_eval(w, u(rng), Vec2(u(rng), u(rng)))) == doctest::Approx(1.0).epsilon(1e-14));

    for (auto sgn : {EnergySign::Positive, EnergySign::Negative}) {
        PlaneWave2D pw{Vec2(0.8, -1.3), 2.0, sgn};
        const double t = 0.4;
        auto psi = [&](const Vec2& x) { return plane_wave_2d_eval(pw, t, x); };
        const double res = hamiltonian_residual(psi, pw.frequency(), pw.m, [](const Vec2&) { return Eigen::Matrix2cd::Zero().eval(); },
                                                annulus_points(50, 0.1, 3.0, 1));
        CHECK(res < 1e-6);
    }
}

TEST_CASE("oscillator spectrum") {
    CHECK(oscillator_energy(1, HalfInteger{1}, 1, 1) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));
    CHECK(oscillator_energy(1, HalfInteger{-1}, 1, 1) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(oscillator_energy(2, HalfInteger{-3}, 1, 1) == doctest::Approx(std::sqrt(17.0)).epsilon(1e-15));
    // three states at E = 3
    CHECK(oscillator_energy(1, HalfInteger{-1}, 1, 1) == 3.0);
    CHECK(oscillator_energy(2, HalfInteger{1}, 1, 1) == 3.0);
    CHECK(oscillator_energy(2, HalfInteger{3}, 1, 1) == 3.0);

    const OscillatorMode mode(2, HalfInteger{-3}, 1.0, 1.0);
    CHECK(mode.delta2() == doctest::Approx(16.0));
    CHECK(mode.alpha() == doctest::Approx(1.25));
    CHECK(mode.mu() == 2);
    CHECK_THROWS(oscillator_energy(0, HalfInteger{1}, 1, 1));
}

TEST_CASE("general oscillator modes reproduce the closed-form table") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> ur(0.0, 4.0), ut(0.0, 2 * kPi), utime(0.0, 50.0);
    for (const auto& entry : catalog::kOscillatorModes) {
        const OscillatorMode mode(entry.n, entry.k, 1.0, 1.0);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const double r = ur(rng), th = ut(rng), t = utime(rng);
            const Spinor2 got = oscillator_mode_eval(mode, t, r, th);
            const Spinor2 want = table_state(entry.n, entry.k.twice, t, r, th);
            worst = std::max(worst, (got - want).cwiseAbs().maxCoeff());
        }
        INFO("n=" << entry.n << " k=" << entry.k.str());
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("oscillator nodal examples") {
    const OscillatorMode m11(1, HalfInteger{-1}, 1, 1);
    CHECK(std::abs(oscillator_mode_eval(m11, 0, 1.0, 0.37)[1]) < 1e-15);
    const OscillatorMode m1(1, HalfInteger{1}, 1, 1);
    CHECK(std::abs(oscillator_mode_eval(m1, 0, 1.0, 1.1)[0]) < 1e-15);
    const OscillatorMode m23(2, HalfInteger{3}, 1, 1);
    CHECK(std::abs(oscillator_mode_eval(m23, 0, std::sqrt(3.0), 2.0)[1]) < 1e-14);
    CHECK_THROWS_AS(oscillator_mode_eval(m23, 0, -0.1, 0.0), std::domain_error);
}

TEST_CASE("oscillator modes are normalized (polar quadrature oracle)") {
    for (double omega : {1.0, 0.5}) {
        for (const auto& e : catalog::kOscillatorModes) {
            const OscillatorMode mode(e.n, e.k, 1.0, omega);
            // |psi| is independent of theta
            const double integral = 2 * kPi * integrate([&](double r) {
                return r * density(oscillator_mode_eval(mode, 0.0, r, 0.0));
            }, 0.0, 14.0, 256, 16);
            CHECK(integral == doctest::Approx(1.0).epsilon(1e-10));
        }
    }
}

TEST_CASE("bound modes satisfy H psi = E psi") {
    const auto pts = annulus_points(200, 0.2, 4.0, 77);
    for (double omega : {1.0, 0.7}) {
        for (const auto& e : catalog::kOscillatorModes) {
            const double m = 1.0;
            const OscillatorMode mode(e.n, e.k, m, omega);
            auto psi = [&](const Vec2& x) { return mode.spatial(PlanePoint(x)); };
            auto coupling = [&](const Vec2& x) {
                Eigen::Matrix2cd c = Eigen::Matrix2cd::Zero();
                c(0, 1) = I * m * omega * C(x[0], -x[1]);
                c(1, 0) = I * m * omega * C(-x[0], -x[1]);
                return c;
            };
            INFO("n=" << e.n << " k=" << e.k.str() << " omega=" << omega);
            CHECK(hamiltonian_residual(psi, mode.energy(), m, coupling, pts) < 1e-5);
        }
    }
    const BoxParams params;
    for (const auto& mode : catalog::box_modes()) {
        auto psi = [&](const Vec2& x) { return mode.spatial(PlanePoint(x)); };
        auto potential = [&](const Vec2& x) {
            const double v = x.norm() <= params.R_prime ? -params.V0 : 0.0;
            return (v * Eigen::Matrix2cd::Identity()).eval();
        };
        INFO("box k=" << mode.k().str());
        CHECK(hamiltonian_residual(psi, mode.energy(), params.m, potential, pts) < 1e-5);
        CHECK(hamiltonian_residual(psi, mode.energy(), params.m, potential, annulus_points(200, 5.2, 9.0, 78)) < 1e-5);
    }
}

TEST_CASE("box modes agree with the literal interior/exterior formulas") {
    const BoxParams params;
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> ur(0.05, 12.0), ut(0.0, 2 * kPi);
    for (const auto& mode : catalog::box_modes()) {
        const double k = mode.k().value();
        const int nu = mode.k().lower_winding();
        for (int i = 0; i < 50; ++i) {
            const double r = ur(rng), th = ut(rng);
            Spinor2 want;
            if (r <= params.R_prime) {
                const double kap = mode.kappa_in(), s = kap * r;
                want[0] = std::sqrt(kap) * std::exp(I * (k - 0.5) * th) * bessel_j(nu, s);
                want[1] = -I * std::pow(kap, 1.5) * std::exp(I * (k + 0.5) * th) / (mode.energy() + params.V0 + params.m) *
                          ((1 - 2 * k) / s * bessel_j(nu, s) + bessel_j(nu - 1, s));
            } else {
                const double kap = mode.kappa_out(), s = kap * r, b = mode.beta_prime();
                want[0] = std::sqrt(kap) * std::exp(I * (k - 0.5) * th) * b * bessel_k(nu, s);
                want[1] = -I * std::pow(kap, 1.5) * std::exp(I * (k + 0.5) * th) / (mode.energy() + params.m) *
                          ((1 - 2 * k) / s * b * bessel_k(nu, s) - b * bessel_k(nu - 1, s));
            }
            const Spinor2 got = box_mode_eval(mode, 0.0, r, th);
            CHECK((got - want).cwiseAbs().maxCoeff() <= 1e-12 * std::max(1.0, want.cwiseAbs().maxCoeff()));
        }
    }
}

TEST_CASE("box modes: matching, regularity and decay") {
    const BoxParams params;
    for (const auto& mode : catalog::box_modes()) {
        const PlanePoint edge = PlanePoint::polar(params.R_prime, 0.9);
        const Spinor2 in = mode.interior(edge), out = mode.exterior(edge);
        CHECK(std::abs(in[0] - out[0]) <= 1e-9 * std::abs(in[0]));
        CHECK(std::abs(in[0] / in[1] - out[0] / out[1]) <= 1e-9 * std::abs(in[0] / in[1]));
        CHECK(density(box_mode_eval(mode, 0, 2 * params.R_prime, 0.3)) < density(box_mode_eval(mode, 0, params.R_prime, 0.3)));
        CHECK_THROWS_AS(box_mode_eval(mode, 0, -1.0, 0.0), std::domain_error);
    }
    const BoxMode half = make_box_mode(HalfInteger{1}, 0.41, params);
    const Spinor2 origin = box_mode_eval(half, 0.0, 0.0, 0.0);
    CHECK(std::isfinite(std::abs(origin[0])));
    CHECK(std::abs(origin[0]) > 0.1);
    CHECK(std::abs(origin[1]) == 0.0);
    CHECK(std::abs(box_mode_eval(half, 0.0, 1e-8, 0.0)[1]) < 1e-8);
}

TEST_CASE("box eigenvalues and beta' reproduce the appendix tables") {
    const BoxParams params;
    CHECK(std::abs(box_match_residual(0.410077354998218, HalfInteger{1}, params)) < 1e-9);
    CHECK(std::abs(box_match_residual(0.356509811273382, HalfInteger{-3}, params)) < 1e-9);
    CHECK(std::abs(box_match_residual(0.5, HalfInteger{1}, params)) > 1e-3);
    CHECK_THROWS_AS(box_match_residual(1.2, HalfInteger{1}, params), std::domain_error);
    CHECK_THROWS_AS(box_match_residual(-0.1, HalfInteger{1}, params), std::domain_error);
    CHECK_THROWS_AS(solve_box_eigenvalues(HalfInteger{1}, params, 999), std::invalid_argument);

    for (const auto& entry : catalog::kBoxModes) {
        const auto roots = solve_box_eigenvalues(entry.k, params, 20000);
        CHECK(std::is_sorted(roots.begin(), roots.end()));
        double nearest = 1e9;
        for (double r : roots) nearest = std::min(nearest, std::abs(r - entry.energy));
        INFO("k=" << entry.k.str());
        CHECK(nearest <= 1e-9);
        const double bp = solve_box_beta_prime(entry.energy, entry.k, params);
        CHECK(std::abs(bp - entry.beta_prime) <= 1e-6 * std::abs(entry.beta_prime));
        for (double r : roots) CHECK(std::abs(box_match_residual(r, entry.k, params)) < 1e-6);
    }
}

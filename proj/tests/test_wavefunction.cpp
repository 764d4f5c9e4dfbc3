#include "doctest.h"

#include "pilotwave/catalog.hpp"
#include "pilotwave/quadrature.hpp"
#include "pilotwave/wavefunction.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace pilotwave;
using C = std::complex<double>;
constexpr double kPi = std::numbers::pi;

namespace {

// Polar Gauss-Legendre integral of psi^dagger psi; the radial range is split at the
// given breakpoints so kinks (box edge) fall on panel boundaries.
double polar_norm(const WaveFunction2D& wf, double t, std::vector<double> breaks) {
    const GaussRule th = gauss_legendre(96, 0.0, 2 * kPi);
    double total = 0.0;
    for (std::size_t b = 0; b + 1 < breaks.size(); ++b) {
        total += integrate([&](double r) {
            double ring = 0.0;
            for (Eigen::Index j = 0; j < th.nodes.size(); ++j)
                ring += th.weights[j] * wf.density(t, Vec2(r * std::cos(th.nodes[j]), r * std::sin(th.nodes[j])));
            return r * ring;
        }, breaks[b], breaks[b + 1], 32, 16);
    }
    return total;
}

C overlap(const BoxMode& a, const BoxMode& b, double rmax) {
    const GaussRule th = gauss_legendre(64, 0.0, 2 * kPi);
    auto part = [&](double lo, double hi) {
        C sum = 0.0;
        const GaussRule rr = gauss_legendre(400, lo, hi);
        for (Eigen::Index i = 0; i < rr.nodes.size(); ++i)
            for (Eigen::Index j = 0; j < th.nodes.size(); ++j) {
                const PlanePoint p = PlanePoint::polar(rr.nodes[i], th.nodes[j]);
                sum += rr.weights[i] * th.weights[j] * rr.nodes[i] * a.spatial(p).dot(b.spatial(p));
            }
        return sum;
    };
    return part(0.0, a.params().R_prime) + part(a.params().R_prime, rmax);
}

}  // namespace

TEST_CASE("single oscillator mode normalizes to one") {
    std::vector<FieldTraits<2>::Mode> modes{OscillatorMode(1, HalfInteger{1}, 1, 1)};
    const std::vector<double> phases{0.3};
    const auto wf = superpose<2>(modes, phases);
    CHECK(wf.norm_constant() == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(wf.normalizable());
}

TEST_CASE("eight oscillator modes give N = 1/sqrt(8)") {
    const auto wf = catalog::oscillator_spinor();
    CHECK(std::abs(wf.norm_constant() - 1.0 / std::sqrt(8.0)) < 1e-4);
    for (double t : {0.0, 3.7, 50.0}) CHECK(polar_norm(wf, t, {0.0, 3.0, 6.0, 10.0}) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(wf.peak_density() > 0.0);
}

TEST_CASE("box spinor normalizes to one") {
    const auto wf = catalog::box_spinor();
    const double rp = BoxParams{}.R_prime;
    for (double t : {0.0, 25.0}) CHECK(std::abs(polar_norm(wf, t, {0.0, rp, 2 * rp, 4 * rp, 8 * rp}) - 1.0) < 1e-6);
    const auto three = catalog::box_spinor(3);
    CHECK(three.modes().size() == 3);
    CHECK(std::abs(polar_norm(three, 1.0, {0.0, rp, 2 * rp, 4 * rp, 8 * rp}) - 1.0) < 1e-6);
}

TEST_CASE("box modes of different k are orthogonal") {
    const auto modes = catalog::box_modes();
    std::vector<double> norms;
    for (const auto& m : modes) norms.push_back(overlap(m, m, 40.0).real());
    for (std::size_t a = 0; a < modes.size(); ++a)
        for (std::size_t b = a + 1; b < modes.size(); ++b)
            CHECK(std::abs(overlap(modes[a], modes[b], 40.0)) / std::sqrt(norms[a] * norms[b]) < 1e-4);
}

TEST_CASE("free spinors") {
    for (double mass : catalog::kFreeMasses) {
        const auto wf3 = catalog::free_spinor_3d(mass);
        CHECK(wf3.norm_constant() == doctest::Approx(1.0 / std::sqrt(3.0)));
        CHECK_FALSE(wf3.normalizable());
        const auto wf2 = catalog::free_spinor_2d(mass);
        CHECK(wf2.norm_constant() == doctest::Approx(1.0 / std::sqrt(3.0)));
        // density stays below the reported upper bound
        std::mt19937_64 rng(3);
        std::uniform_real_distribution<double> u(-5, 5);
        for (int i = 0; i < 200; ++i) {
            CHECK(wf3.density(u(rng), Vec3(u(rng), u(rng), u(rng))) <= wf3.peak_density() + 1e-12);
            CHECK(wf2.density(u(rng), Vec2(u(rng), u(rng))) <= wf2.peak_density() + 1e-12);
        }
    }
}

TEST_CASE("superposition is linear in the modes") {
    const auto modes = catalog::oscillator_modes();
    const auto wf = catalog::oscillator_spinor();
    const double t = 1.3;
    const Vec2 x(0.4, -1.1);
    const PlanePoint pt(x);
    Spinor2 sum = Spinor2::Zero();
    for (std::size_t j = 0; j < modes.size(); ++j)
        sum += std::polar(1.0, catalog::kOscillatorModes[j].phase) * oscillator_mode_eval(modes[j], t, pt.r, std::arg(pt.unit));
    CHECK((wf.spinor(t, x) - wf.norm_constant() * sum).norm() < 1e-13);
}

TEST_CASE("superpose rejects bad input") {
    std::vector<FieldTraits<2>::Mode> two{OscillatorMode(1, HalfInteger{1}, 1, 1), OscillatorMode(1, HalfInteger{-1}, 1, 1)};
    const std::vector<double> phases{0.0, 1.0};
    const std::vector<double> zero{0.0, 0.0};
    const std::vector<double> one_phase{0.0};
    CHECK_THROWS_AS(superpose<2>(two, phases, zero), std::invalid_argument);
    CHECK_THROWS_AS(superpose<2>(two, one_phase), std::invalid_argument);
    CHECK_THROWS_AS(superpose<2>({}, std::span<const double>{}), std::invalid_argument);
    std::vector<FieldTraits<2>::Mode> mixed{OscillatorMode(1, HalfInteger{1}, 1, 1),
                                            PlaneWave2D{Vec2(1, 0), 1.0, EnergySign::Positive}};
    CHECK_THROWS_AS(superpose<2>(mixed, phases), std::invalid_argument);
}

TEST_CASE("integrate_density matches the polar oracle") {
    const auto wf = catalog::oscillator_spinor();
    CHECK(integrate_density(wf, 2.0, Box2D::square(10.0), 600) == doctest::Approx(polar_norm(wf, 2.0, {0, 3, 6, 10})).epsilon(1e-8));
}

// catalog.hpp
// The guiding spinors used in the relaxation and trajectory experiments.

#ifndef PILOTWAVE_CATALOG_HPP
#define PILOTWAVE_CATALOG_HPP

#include "pilotwave/box_solver.hpp"
#include "pilotwave/wavefunction.hpp"

#include <array>
#include <vector>

namespace pilotwave::catalog {

struct OscillatorEntry {
    int n;
    HalfInteger k;
    double phase;
};

/// Eight lowest oscillator modes (m = omega = 1) with their phases.
inline constexpr std::array<OscillatorEntry, 8> kOscillatorModes{{
    {1, {1}, 4.869},
    {1, {-1}, 1.049},
    {2, {1}, 4.291},
    {2, {-1}, 3.066},
    {1, {3}, 0.188},
    {1, {-3}, 1.288},
    {2, {3}, 0.219},
    {2, {-3}, 4.706},
}};

struct BoxEntry {
    HalfInteger k;
    double energy;
    double beta_prime;
    double phase;
};

/// Box modes for m = 1, V0 = 1, R' = 5. The 3- and 4-mode spinors take the first 3 or 4.
inline constexpr std::array<BoxEntry, 6> kBoxModes{{
    {{1}, 0.410077354998218, -32.6316901377613, 0.797881698340871},
    {{3}, 0.610542082182398, -19.79344405979468, 5.73890975922526},
    {{5}, 0.812057491976715, -5.13915809445641, 3.97323032474265},
    {{-1}, 0.598385922365134, 22.59183163168054, 1.74985591686112},
    {{-3}, 0.356509811273382, 24.1846971959765, 5.11905989575681},
    {{-5}, 0.510184308650916, -12.1855792791713, 0.61286443954863},
}};

/// Momenta and phases of the three-plane-wave free spinors (weights 1/sqrt(3)).
inline constexpr std::array<std::array<double, 3>, 3> kFreeMomenta3D{{{1, 0, 1}, {-1, -2, -1}, {1, -1, 1}}};
inline constexpr std::array<std::array<double, 2>, 3> kFreeMomenta2D{{{1, 0}, {-1, -2}, {1, -1}}};
inline constexpr std::array<double, 3> kFreePhases{0.0, 4.0, 9.0};
inline constexpr std::array<double, 3> kFreeMasses{3.0, 6.0, 9.0};

std::vector<OscillatorMode> oscillator_modes(double m = 1.0, double omega = 1.0);
WaveFunction2D oscillator_spinor(double m = 1.0, double omega = 1.0, const SuperposeOptions& options = {});

/// Box modes with eigenvalues and beta' recomputed by the solver (nearest root to the table energy).
std::vector<BoxMode> box_modes(std::size_t count = kBoxModes.size(), const BoxParams& params = {});
WaveFunction2D box_spinor(std::size_t count = kBoxModes.size(), const BoxParams& params = {},
                          const SuperposeOptions& options = {});

WaveFunction3D free_spinor_3d(double mass);
WaveFunction2D free_spinor_2d(double mass);

}  // namespace pilotwave::catalog

#endif  // PILOTWAVE_CATALOG_HPP

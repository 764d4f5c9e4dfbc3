#include "pilotwave/catalog.hpp"

namespace pilotwave::catalog {

std::vector<OscillatorMode> oscillator_modes(double m, double omega) {
    std::vector<OscillatorMode> out;
    for (const auto& e : kOscillatorModes) out.emplace_back(e.n, e.k, m, omega);
    return out;
}

WaveFunction2D oscillator_spinor(double m, double omega, const SuperposeOptions& options) {
    std::vector<FieldTraits<2>::Mode> modes;
    std::vector<double> phases;
    for (const auto& e : kOscillatorModes) {
        modes.emplace_back(OscillatorMode(e.n, e.k, m, omega));
        phases.push_back(e.phase);
    }
    return superpose<2>(std::move(modes), phases, options);
}

std::vector<BoxMode> box_modes(std::size_t count, const BoxParams& params) {
    std::vector<BoxMode> out;
    for (std::size_t i = 0; i < count && i < kBoxModes.size(); ++i)
        out.push_back(make_box_mode(kBoxModes[i].k, kBoxModes[i].energy, params));
    return out;
}

WaveFunction2D box_spinor(std::size_t count, const BoxParams& params, const SuperposeOptions& options) {
    std::vector<FieldTraits<2>::Mode> modes;
    std::vector<double> phases;
    std::size_t i = 0;
    for (const auto& mode : box_modes(count, params)) {
        modes.emplace_back(mode);
        phases.push_back(kBoxModes[i++].phase);
    }
    return superpose<2>(std::move(modes), phases, options);
}

WaveFunction3D free_spinor_3d(double mass) {
    std::vector<FieldTraits<3>::Mode> modes;
    for (const auto& p : kFreeMomenta3D)
        modes.emplace_back(PlaneWave3D{Vec3(p[0], p[1], p[2]), mass, Helicity::Right, EnergySign::Positive});
    return superpose<3>(std::move(modes), kFreePhases);
}

WaveFunction2D free_spinor_2d(double mass) {
    std::vector<FieldTraits<2>::Mode> modes;
    for (const auto& p : kFreeMomenta2D) modes.emplace_back(PlaneWave2D{Vec2(p[0], p[1]), mass, EnergySign::Positive});
    return superpose<2>(std::move(modes), kFreePhases);
}

}  // namespace pilotwave::catalog

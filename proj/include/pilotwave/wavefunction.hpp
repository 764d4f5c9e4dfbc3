// wavefunction.hpp
// Phased superpositions of eigenmodes with numerical normalization.

#ifndef PILOTWAVE_WAVEFUNCTION_HPP
#define PILOTWAVE_WAVEFUNCTION_HPP

#include "pilotwave/modes.hpp"

#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace pilotwave {

/// Axis-aligned rectangle [xmin, xmax] x [ymin, ymax].
struct Box2D {
    double xmin = -10.0, xmax = 10.0, ymin = -10.0, ymax = 10.0;

    double width() const { return xmax - xmin; }
    double height() const { return ymax - ymin; }
    double area() const { return width() * height(); }
    static Box2D square(double half) { return {-half, half, -half, half}; }
};

template <int Dim>
struct FieldTraits;

template <>
struct FieldTraits<2> {
    using Spinor = Spinor2;
    using Mode = std::variant<PlaneWave2D, OscillatorMode, BoxMode>;
};

template <>
struct FieldTraits<3> {
    using Spinor = Spinor4;
    using Mode = std::variant<PlaneWave3D>;
};

/// psi(t, x) = N sum_j c_j psi_j(t, x) with c_j = w_j e^{i phi_j}.
template <int Dim>
class WaveFunction {
public:
    static constexpr int kDim = Dim;
    using Spinor = typename FieldTraits<Dim>::Spinor;
    using Mode = typename FieldTraits<Dim>::Mode;
    using Position = Vec<Dim>;

    WaveFunction(std::vector<Mode> modes, std::vector<Complex<double>> coefficients, double norm_constant,
                 Box2D domain_hint, double peak_density);

    Spinor spinor(double t, const Position& x) const;
    double density(double t, const Position& x) const { return spinor(t, x).squaredNorm(); }

    const std::vector<Mode>& modes() const { return modes_; }
    const std::vector<Complex<double>>& coefficients() const { return coefficients_; }
    double norm_constant() const { return norm_; }
    const Box2D& domain_hint() const { return domain_; }
    /// Largest density seen on the normalization grid (plane waves: an upper bound).
    double peak_density() const { return peak_; }
    /// True for the bound-state families (oscillator, box).
    bool normalizable() const;

private:
    std::vector<Mode> modes_;
    std::vector<Complex<double>> coefficients_;
    double norm_;
    Box2D domain_;
    double peak_;

    std::vector<Complex<double>> scaled_;  // N c_j
    std::vector<double> frequencies_;      // distinct signed frequencies
    std::vector<int> frequency_index_;     // mode -> frequencies_ slot
    std::optional<double> gaussian_rate_;  // shared m omega of oscillator modes

    // all-oscillator superpositions: per-mode polynomials in xi = c r^2
    struct PolyTerm {
        Complex<double> scale;
        int slot, w1, w2;
        int upper, upper_len, lower, lower_len;  // ranges in poly_coeffs_
    };
    std::vector<PolyTerm> poly_terms_;
    std::vector<double> poly_coeffs_;
    int max_winding_ = 0;

    Spinor oscillator_spinor(double t, const Position& x) const;
};

using WaveFunction2D = WaveFunction<2>;
using WaveFunction3D = WaveFunction<3>;

struct SuperposeOptions {
    std::optional<Box2D> domain_hint;  // default [-10,10]^2 oscillator, [-15,15]^2 box
    int quadrature_points = 2048;      // per axis, midpoint rule
};

/// Builds a normalized superposition. Bound-state families are normalized by a
/// tensor-product midpoint rule over the domain hint; plane-wave families, which
/// are not square integrable, get N = 1 / sqrt(sum w_j^2).
/// Throws std::invalid_argument on empty or mismatched lists, all-zero weights,
/// or a mix of families.
template <int Dim>
WaveFunction<Dim> superpose(std::vector<typename FieldTraits<Dim>::Mode> modes, std::span<const double> phases,
                            std::span<const double> weights, const SuperposeOptions& options = {});

/// Same, with equal unit weights.
template <int Dim>
WaveFunction<Dim> superpose(std::vector<typename FieldTraits<Dim>::Mode> modes, std::span<const double> phases,
                            const SuperposeOptions& options = {}) {
    const std::vector<double> weights(modes.size(), 1.0);
    return superpose<Dim>(std::move(modes), phases, weights, options);
}

/// Midpoint-rule integral of psi^dagger psi at time t over a box.
double integrate_density(const WaveFunction2D& wf, double t, const Box2D& box, int points_per_axis);

extern template class WaveFunction<2>;
extern template class WaveFunction<3>;

}  // namespace pilotwave

#endif  // PILOTWAVE_WAVEFUNCTION_HPP

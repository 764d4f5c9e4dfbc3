// modes.hpp
// Energy eigenmodes of the free and confined Dirac equation.

#ifndef PILOTWAVE_MODES_HPP
#define PILOTWAVE_MODES_HPP

#include "pilotwave/spinor.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace pilotwave {

/// Half-integer quantum number stored as twice its value (k = twice / 2).
struct HalfInteger {
    int twice = 1;

    constexpr double value() const { return 0.5 * twice; }
    constexpr bool positive() const { return twice > 0; }
    /// k - 1/2, the angular winding of the upper component.
    constexpr int lower_winding() const { return (twice - 1) / 2; }

    /// Accepts "3/2", "-1/2" or a decimal such as "0.5".
    static HalfInteger parse(std::string_view text);
    static HalfInteger from_value(double k);
    std::string str() const;

    friend constexpr bool operator==(HalfInteger, HalfInteger) = default;
};

enum class Helicity { Right, Left };
enum class EnergySign { Positive, Negative };

/// Geometry shared by every mode evaluated at one point of the plane.
struct PlanePoint {
    Vec2 x;
    double r2 = 0.0;
    double r = 0.0;
    Complex<double> unit{1.0, 0.0};  // e^{i theta}; 1 at the origin

    explicit PlanePoint(const Vec2& p);
    static PlanePoint polar(double r, double theta);

    /// e^{i n theta} for any integer n.
    Complex<double> winding(int n) const;
};

// ---------------------------------------------------------------- plane waves

/// u_R, u_L, v_L, v_R plane waves in the Weyl representation.
struct PlaneWave3D {
    Vec3 p = Vec3::Zero();
    double m = 0.0;
    Helicity helicity = Helicity::Right;
    EnergySign sign = EnergySign::Positive;

    double energy() const { return std::sqrt(p.squaredNorm() + m * m); }
    /// Signed frequency: the mode carries e^{-i frequency t}.
    double frequency() const { return sign == EnergySign::Positive ? energy() : -energy(); }
    /// Helicity eigenstate chi with (sigma . p_hat) chi = +chi (Right) or -chi (Left).
    Eigen::Vector2cd chi() const;
    /// Spinor amplitude without the e^{-i frequency t + i p.x} factor.
    Spinor4 amplitude() const;
    Spinor4 spatial(const Vec3& x) const;
};

Spinor4 plane_wave_3d_eval(const PlaneWave3D& mode, double t, const Vec3& x);

/// u(p) and v(p) of the 2+1D equation with alpha = (sigma_1, sigma_2), beta = sigma_3.
struct PlaneWave2D {
    Vec2 p = Vec2::Zero();
    double m = 0.0;
    EnergySign sign = EnergySign::Positive;

    double energy() const { return std::sqrt(p.squaredNorm() + m * m); }
    double frequency() const { return sign == EnergySign::Positive ? energy() : -energy(); }
    Spinor2 amplitude() const;
    Spinor2 spatial(const PlanePoint& pt) const;
};

Spinor2 plane_wave_2d_eval(const PlaneWave2D& mode, double t, const Vec2& x);

// ---------------------------------------------------------- Dirac oscillator

/// E = sqrt(m^2 + m omega Delta^2), Delta^2 = 4n for k > 0 and 4n - 4k + 2 for k < 0.
double oscillator_energy(int n, HalfInteger k, double m, double omega);

/// Bound state (n, k) of H = alpha.(p - i m omega beta r) + m beta, normalized to one.
///
/// With xi = m omega r^2 the radial factor of the upper component is
/// e^{-xi/2} xi^a L_n^mu(xi) / sqrt(r); regularity at the origin picks
/// a = k/2, mu = k - 1/2 for k > 0 and a = 1/2 - k/2, mu = 1/2 - k for k < 0.
/// The lower component follows from i(E+m) psi2' = (d_r - k/r + m omega r) psi1'
/// with d/dx L_n^mu = -L_{n-1}^{mu+1}, so everything reduces to
/// psi1 = N e^{-xi/2} w1 L_n^mu(xi),  psi2 = -i N e^{-xi/2} w2 B(xi) / (E+m)
/// where w1 = r^{|k-1/2|} e^{i(k-1/2)theta}, w2 = r^{|k+1/2|} e^{i(k+1/2)theta}
/// are polynomials in x +- iy and B = -2 m omega L_{n-1}^{mu+1} (k > 0) or
/// (1-2k) L_n^mu - 2 xi L_{n-1}^{mu+1} (k < 0).
class OscillatorMode {
public:
    OscillatorMode(int n, HalfInteger k, double m, double omega);

    int n() const { return n_; }
    HalfInteger k() const { return k_; }
    double m() const { return m_; }
    double omega() const { return omega_; }
    double energy() const { return energy_; }
    double frequency() const { return energy_; }
    double delta2() const { return delta2_; }
    double alpha() const { return alpha_; }
    int mu() const { return mu_; }
    double normalization() const { return norm_; }

    Spinor2 spatial(const PlanePoint& pt) const;
    Spinor2 spatial(const PlanePoint& pt, double gaussian) const;  // gaussian = e^{-xi/2}

    /// Coefficients (ascending powers of xi) with psi1 = e^{-xi/2} w1 upper(xi)
    /// and psi2 = i e^{-xi/2} w2 lower(xi); the normalization is included.
    struct RadialPolynomials {
        std::vector<double> upper, lower;
    };
    RadialPolynomials radial_polynomials() const;

private:
    double radial_lower(double xi) const;

    int n_;
    HalfInteger k_;
    double m_, omega_;
    double delta2_, energy_, alpha_;
    int mu_;
    double norm_ = 1.0;
};

/// Throws std::domain_error for r < 0.
Spinor2 oscillator_mode_eval(const OscillatorMode& mode, double t, double r, double theta);

// ------------------------------------------------------------ spherical box

/// Attractive well V = -V0 for r <= R', 0 outside.
struct BoxParams {
    double m = 1.0;
    double V0 = 1.0;
    double R_prime = 5.0;

    double energy_floor() const { return std::max(m - V0, -m); }
    double energy_ceiling() const { return m; }
};

/// Bound state of the box with interior J_{k-1/2} (coefficient 1) and exterior
/// beta' K_{k-1/2}. The lower components use J_{nu-1} + (1-2k)/s J_nu = -J_{nu+1}
/// and K_{nu-1} - (1-2k)/s K_nu = K_{nu+1} with nu = k - 1/2:
///   interior: psi1 = sqrt(kin) J_nu(kin r) e^{i nu theta},
///             psi2 = i kin^{3/2} J_{nu+1}(kin r) e^{i(nu+1)theta} / (E + V0 + m)
///   exterior: psi1 = sqrt(kout) beta' K_nu(kout r) e^{i nu theta},
///             psi2 = i kout^{3/2} beta' K_{nu+1}(kout r) e^{i(nu+1)theta} / (E + m)
class BoxMode {
public:
    BoxMode(HalfInteger k, double energy, double beta_prime, const BoxParams& params);

    HalfInteger k() const { return k_; }
    double energy() const { return energy_; }
    double frequency() const { return energy_; }
    double beta_prime() const { return beta_prime_; }
    const BoxParams& params() const { return params_; }
    double kappa_in() const { return kappa_in_; }
    double kappa_out() const { return kappa_out_; }

    Spinor2 spatial(const PlanePoint& pt) const;
    Spinor2 interior(const PlanePoint& pt) const;
    Spinor2 exterior(const PlanePoint& pt) const;

private:
    HalfInteger k_;
    double energy_, beta_prime_;
    BoxParams params_;
    double kappa_in_, kappa_out_;
};

/// Throws std::domain_error for r < 0.
Spinor2 box_mode_eval(const BoxMode& mode, double t, double r, double theta);

}  // namespace pilotwave

#endif  // PILOTWAVE_MODES_HPP

#include "pilotwave/modes.hpp"

#include "pilotwave/quadrature.hpp"
#include "pilotwave/special_functions.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pilotwave {

using C = Complex<double>;

// ---------------------------------------------------------------- HalfInteger

HalfInteger HalfInteger::from_value(double k) {
    const double twice = 2.0 * k;
    const long rounded = std::lround(twice);
    if (std::abs(twice - rounded) > 1e-12 || rounded % 2 == 0)
        throw std::invalid_argument("not a half-integer: " + std::to_string(k));
    return HalfInteger{static_cast<int>(rounded)};
}

HalfInteger HalfInteger::parse(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        double v = 0.0;
        const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
        if (res.ec != std::errc() || res.ptr != text.data() + text.size())
            throw std::invalid_argument("not a half-integer: " + std::string(text));
        return from_value(v);
    }
    int num = 0;
    const auto num_text = text.substr(0, slash);
    const auto den_text = text.substr(slash + 1);
    const auto r1 = std::from_chars(num_text.data(), num_text.data() + num_text.size(), num);
    if (r1.ec != std::errc() || r1.ptr != num_text.data() + num_text.size() || den_text != "2" || num % 2 == 0)
        throw std::invalid_argument("not a half-integer: " + std::string(text));
    return HalfInteger{num};
}

std::string HalfInteger::str() const { return std::to_string(twice) + "/2"; }

// ----------------------------------------------------------------- PlanePoint

PlanePoint::PlanePoint(const Vec2& p) : x(p), r2(p.squaredNorm()), r(std::sqrt(r2)) {
    if (r > 0.0) unit = C(p[0] / r, p[1] / r);
}

PlanePoint PlanePoint::polar(double r, double theta) {
    if (r < 0.0) throw std::domain_error("polar point with negative radius");
    PlanePoint pt(Vec2(r * std::cos(theta), r * std::sin(theta)));
    pt.r = r;
    pt.r2 = r * r;
    if (r > 0.0) pt.unit = C(std::cos(theta), std::sin(theta));
    return pt;
}

C PlanePoint::winding(int n) const {
    const C base = n >= 0 ? unit : std::conj(unit);
    C out(1.0, 0.0);
    for (int i = 0; i < std::abs(n); ++i) out *= base;
    return out;
}

namespace {

C time_phase(double frequency, double t) { return std::polar(1.0, -frequency * t); }

// (x + iy)^n for n >= 0, (x - iy)^{|n|} for n < 0: r^{|n|} e^{i n theta} as a polynomial.
C radial_winding(const PlanePoint& pt, int n) {
    const C z = n >= 0 ? C(pt.x[0], pt.x[1]) : C(pt.x[0], -pt.x[1]);
    C out(1.0, 0.0);
    for (int i = 0; i < std::abs(n); ++i) out *= z;
    return out;
}

}  // namespace

// ---------------------------------------------------------------- plane waves

Eigen::Vector2cd PlaneWave3D::chi() const {
    const double pn = p.norm();
    const Vec3 n = pn > 0.0 ? Vec3(p / pn) : Vec3(0.0, 0.0, 1.0);
    const double c = std::sqrt(std::max(0.0, 0.5 * (1.0 + n[2])));
    const double s = std::sqrt(std::max(0.0, 0.5 * (1.0 - n[2])));
    const double rho = std::hypot(n[0], n[1]);
    const C phase = rho > 0.0 ? C(n[0] / rho, n[1] / rho) : C(1.0, 0.0);
    if (helicity == Helicity::Right) return Eigen::Vector2cd(C(c), phase * s);
    return Eigen::Vector2cd(-std::conj(phase) * s, C(c));
}

Spinor4 PlaneWave3D::amplitude() const {
    const double e = energy();
    const double pn = p.norm();
    const double small = std::sqrt((e - pn) / (2.0 * e));
    const double large = std::sqrt((e + pn) / (2.0 * e));
    const Eigen::Vector2cd x = chi();
    // (upper, lower) weights: u_R (small, large), u_L (large, small),
    // v_L (small, -large), v_R (large, -small).
    double upper = 0.0, lower = 0.0;
    if (sign == EnergySign::Positive) {
        upper = helicity == Helicity::Right ? small : large;
        lower = helicity == Helicity::Right ? large : small;
    } else {
        upper = helicity == Helicity::Left ? small : large;
        lower = helicity == Helicity::Left ? -large : -small;
    }
    Spinor4 out;
    out << upper * x, lower * x;
    return out;
}

Spinor4 PlaneWave3D::spatial(const Vec3& x) const { return amplitude() * std::polar(1.0, p.dot(x)); }

Spinor4 plane_wave_3d_eval(const PlaneWave3D& mode, double t, const Vec3& x) {
    return mode.spatial(x) * time_phase(mode.frequency(), t);
}

Spinor2 PlaneWave2D::amplitude() const {
    const double e = energy();
    const double scale = std::sqrt((e + m) / (2.0 * e));
    if (sign == EnergySign::Positive) return Spinor2(C(scale), scale * C(p[0], p[1]) / (e + m));
    return Spinor2(scale * C(-p[0], p[1]) / (e + m), C(scale));
}

Spinor2 PlaneWave2D::spatial(const PlanePoint& pt) const { return amplitude() * std::polar(1.0, p.dot(pt.x)); }

Spinor2 plane_wave_2d_eval(const PlaneWave2D& mode, double t, const Vec2& x) {
    return mode.spatial(PlanePoint(x)) * time_phase(mode.frequency(), t);
}

// ---------------------------------------------------------- Dirac oscillator

double oscillator_energy(int n, HalfInteger k, double m, double omega) {
    if (n < 1) throw std::invalid_argument("oscillator_energy: n must be >= 1");
    if (!(omega > 0.0)) throw std::invalid_argument("oscillator_energy: omega must be > 0");
    const double delta2 = k.positive() ? 4.0 * n : 4.0 * n - 4.0 * k.value() + 2.0;
    return std::sqrt(m * m + m * omega * delta2);
}

OscillatorMode::OscillatorMode(int n, HalfInteger k, double m, double omega)
    : n_(n), k_(k), m_(m), omega_(omega) {
    if (!(m > 0.0)) throw std::invalid_argument("OscillatorMode: mass must be > 0");
    energy_ = oscillator_energy(n, k, m, omega);
    delta2_ = (energy_ * energy_ - m * m) / (m * omega);
    if (k.positive()) {
        alpha_ = 0.5 * k.value();
        mu_ = k.lower_winding();
    } else {
        alpha_ = 0.5 - 0.5 * k.value();
        mu_ = -k.lower_winding();
    }

    // int |psi|^2 dA = (pi / c) int_0^inf e^{-u} [ (u/c)^{|w1|} L^2 + (u/c)^{|w2|} B^2 / (E+m)^2 ] du
    const double c = m_ * omega_;
    const int w1 = std::abs(k_.lower_winding());
    const int w2 = std::abs(k_.lower_winding() + 1);
    const GaussRule rule = gauss_laguerre(32);
    double integral = 0.0;
    for (int i = 0; i < rule.nodes.size(); ++i) {
        const double u = rule.nodes[i];
        const double upper = laguerre(n_, mu_, u);
        const double lower = radial_lower(u) / (energy_ + m_);
        integral += rule.weights[i] * (std::pow(u / c, w1) * upper * upper + std::pow(u / c, w2) * lower * lower);
    }
    integral *= std::numbers::pi / c;
    norm_ = 1.0 / std::sqrt(integral);
}

double OscillatorMode::radial_lower(double xi) const {
    const double c = m_ * omega_;
    const double derivative = laguerre(n_ - 1, mu_ + 1, xi);
    if (k_.positive()) return -2.0 * c * derivative;
    return (1.0 - 2.0 * k_.value()) * laguerre(n_, mu_, xi) - 2.0 * xi * derivative;
}

Spinor2 OscillatorMode::spatial(const PlanePoint& pt, double gaussian) const {
    const double xi = m_ * omega_ * pt.r2;
    const int j = k_.lower_winding();
    const double amp = norm_ * gaussian;
    const C upper = amp * laguerre(n_, mu_, xi) * radial_winding(pt, j);
    const C lower = C(0.0, -amp * radial_lower(xi) / (energy_ + m_)) * radial_winding(pt, j + 1);
    return Spinor2(upper, lower);
}

OscillatorMode::RadialPolynomials OscillatorMode::radial_polynomials() const {
    // L_n^mu(x) = sum_i (-1)^i binom(n + mu, n - i) x^i / i!
    auto laguerre_coefficients = [](int n, int mu) {
        std::vector<double> a(n + 1, 0.0);
        for (int i = 0; i <= n; ++i) {
            double binom = 1.0;
            for (int j = 1; j <= n - i; ++j) binom = binom * (mu + i + j) / j;
            double fact = 1.0;
            for (int j = 2; j <= i; ++j) fact *= j;
            a[i] = (i % 2 ? -1.0 : 1.0) * binom / fact;
        }
        return a;
    };
    RadialPolynomials out;
    out.upper = laguerre_coefficients(n_, mu_);
    const std::vector<double> d = laguerre_coefficients(n_ - 1, mu_ + 1);
    std::vector<double> b(n_ + 1, 0.0);
    if (k_.positive()) {
        for (int i = 0; i < n_; ++i) b[i] = -2.0 * m_ * omega_ * d[i];
    } else {
        for (int i = 0; i <= n_; ++i) b[i] = (1.0 - 2.0 * k_.value()) * out.upper[i];
        for (int i = 0; i < n_; ++i) b[i + 1] -= 2.0 * d[i];
    }
    for (double& a : out.upper) a *= norm_;
    for (double& v : b) v *= -norm_ / (energy_ + m_);
    out.lower = std::move(b);
    return out;
}

Spinor2 OscillatorMode::spatial(const PlanePoint& pt) const {
    return spatial(pt, std::exp(-0.5 * m_ * omega_ * pt.r2));
}

Spinor2 oscillator_mode_eval(const OscillatorMode& mode, double t, double r, double theta) {
    if (r < 0.0) throw std::domain_error("oscillator_mode_eval: r must be >= 0");
    return mode.spatial(PlanePoint::polar(r, theta)) * time_phase(mode.frequency(), t);
}

// ------------------------------------------------------------ spherical box

BoxMode::BoxMode(HalfInteger k, double energy, double beta_prime, const BoxParams& params)
    : k_(k), energy_(energy), beta_prime_(beta_prime), params_(params) {
    if (!(energy > params.energy_floor() && energy < params.energy_ceiling()))
        throw std::domain_error("BoxMode: energy outside the bound-state window");
    const double shifted = energy + params.V0;
    kappa_in_ = std::sqrt(shifted * shifted - params.m * params.m);
    kappa_out_ = std::sqrt(params.m * params.m - energy * energy);
}

Spinor2 BoxMode::interior(const PlanePoint& pt) const {
    const int nu = k_.lower_winding();
    std::array<double, 2> j{};
    bessel_window(BesselKind::J, nu, kappa_in_ * pt.r, j);
    const double sk = std::sqrt(kappa_in_);
    const C upper = sk * j[0] * pt.winding(nu);
    const C lower = C(0.0, sk * kappa_in_ * j[1] / (energy_ + params_.V0 + params_.m)) * pt.winding(nu + 1);
    return Spinor2(upper, lower);
}

Spinor2 BoxMode::exterior(const PlanePoint& pt) const {
    const int nu = k_.lower_winding();
    std::array<double, 2> kv{};
    bessel_window(BesselKind::K, nu, kappa_out_ * pt.r, kv);
    const double sk = std::sqrt(kappa_out_);
    const C upper = sk * beta_prime_ * kv[0] * pt.winding(nu);
    const C lower = C(0.0, sk * kappa_out_ * beta_prime_ * kv[1] / (energy_ + params_.m)) * pt.winding(nu + 1);
    return Spinor2(upper, lower);
}

Spinor2 BoxMode::spatial(const PlanePoint& pt) const {
    return pt.r <= params_.R_prime ? interior(pt) : exterior(pt);
}

Spinor2 box_mode_eval(const BoxMode& mode, double t, double r, double theta) {
    if (r < 0.0) throw std::domain_error("box_mode_eval: r must be >= 0");
    return mode.spatial(PlanePoint::polar(r, theta)) * time_phase(mode.frequency(), t);
}

}  // namespace pilotwave

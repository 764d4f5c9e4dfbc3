#include "pilotwave/wavefunction.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace pilotwave {

using C = Complex<double>;

namespace {

template <typename Mode>
double frequency_of(const Mode& mode) {
    return std::visit([](const auto& m) { return m.frequency(); }, mode);
}

constexpr std::size_t kPhaseBuffer = 32;

}  // namespace

template <int Dim>
WaveFunction<Dim>::WaveFunction(std::vector<Mode> modes, std::vector<C> coefficients, double norm_constant,
                                Box2D domain_hint, double peak_density)
    : modes_(std::move(modes)),
      coefficients_(std::move(coefficients)),
      norm_(norm_constant),
      domain_(domain_hint),
      peak_(peak_density) {
    if (modes_.empty()) throw std::invalid_argument("WaveFunction: no modes");
    if (modes_.size() != coefficients_.size()) throw std::invalid_argument("WaveFunction: coefficient count mismatch");
    for (std::size_t i = 0; i < modes_.size(); ++i) {
        scaled_.push_back(norm_ * coefficients_[i]);
        const double f = frequency_of(modes_[i]);
        auto it = std::find(frequencies_.begin(), frequencies_.end(), f);
        if (it == frequencies_.end()) {
            frequencies_.push_back(f);
            it = frequencies_.end() - 1;
        }
        frequency_index_.push_back(static_cast<int>(it - frequencies_.begin()));
    }
    if constexpr (Dim == 2) {
        std::optional<double> rate;
        bool shared = true;
        for (const auto& mode : modes_) {
            if (const auto* osc = std::get_if<OscillatorMode>(&mode)) {
                const double c = osc->m() * osc->omega();
                if (rate && *rate != c) shared = false;
                rate = c;
            }
        }
        if (shared) gaussian_rate_ = rate;
        const bool all_oscillator = std::all_of(modes_.begin(), modes_.end(),
                                                [](const Mode& m) { return std::holds_alternative<OscillatorMode>(m); });
        if (shared && all_oscillator && frequencies_.size() <= kPhaseBuffer) {
            for (std::size_t i = 0; i < modes_.size(); ++i) {
                const auto& osc = std::get<OscillatorMode>(modes_[i]);
                const auto poly = osc.radial_polynomials();
                PolyTerm term{scaled_[i], frequency_index_[i], osc.k().lower_winding(), osc.k().lower_winding() + 1,
                              static_cast<int>(poly_coeffs_.size()), static_cast<int>(poly.upper.size()), 0,
                              static_cast<int>(poly.lower.size())};
                poly_coeffs_.insert(poly_coeffs_.end(), poly.upper.begin(), poly.upper.end());
                term.lower = static_cast<int>(poly_coeffs_.size());
                poly_coeffs_.insert(poly_coeffs_.end(), poly.lower.begin(), poly.lower.end());
                max_winding_ = std::max({max_winding_, std::abs(term.w1), std::abs(term.w2)});
                poly_terms_.push_back(term);
            }
        }
    }
}

template <int Dim>
typename WaveFunction<Dim>::Spinor WaveFunction<Dim>::oscillator_spinor(double t, const Position& x) const {
    if constexpr (Dim != 2) {
        throw std::logic_error("oscillator modes live in the plane");
    } else {
        // hot path of every trajectory: plain real arithmetic, no zero-filled buffers
        constexpr int kMaxWinding = 16;
        double phase_re[kPhaseBuffer], phase_im[kPhaseBuffer];
        for (std::size_t i = 0; i < frequencies_.size(); ++i) {
            const double a = -frequencies_[i] * t;
            phase_re[i] = std::cos(a);
            phase_im[i] = std::sin(a);
        }
        const double xi = *gaussian_rate_ * (x[0] * x[0] + x[1] * x[1]);
        // pow_*[n] = (x + iy)^n; negative windings use the conjugate
        double pow_re[kMaxWinding + 1], pow_im[kMaxWinding + 1];
        const int mw = std::min(max_winding_, kMaxWinding);
        pow_re[0] = 1.0;
        pow_im[0] = 0.0;
        for (int n = 1; n <= mw; ++n) {
            pow_re[n] = pow_re[n - 1] * x[0] - pow_im[n - 1] * x[1];
            pow_im[n] = pow_re[n - 1] * x[1] + pow_im[n - 1] * x[0];
        }
        auto winding = [&](int n, double& re, double& im) {
            const int a = std::abs(n);
            if (a <= mw) {
                re = pow_re[a];
                im = n >= 0 ? pow_im[a] : -pow_im[a];
                return;
            }
            C w = 1.0;
            const C base(x[0], n >= 0 ? x[1] : -x[1]);
            for (int i = 0; i < a; ++i) w *= base;
            re = w.real();
            im = w.imag();
        };
        const double* coeffs = poly_coeffs_.data();
        auto horner = [&](int offset, int len) {
            double acc = 0.0;
            for (int i = len - 1; i >= 0; --i) acc = acc * xi + coeffs[offset + i];
            return acc;
        };
        double up_re = 0.0, up_im = 0.0, lo_re = 0.0, lo_im = 0.0;
        for (const PolyTerm& term : poly_terms_) {
            const double sr = term.scale.real(), si = term.scale.imag();
            const double cr = sr * phase_re[term.slot] - si * phase_im[term.slot];
            const double ci = sr * phase_im[term.slot] + si * phase_re[term.slot];
            double wr, wi;
            winding(term.w1, wr, wi);
            const double p = horner(term.upper, term.upper_len);
            up_re += p * (cr * wr - ci * wi);
            up_im += p * (cr * wi + ci * wr);
            winding(term.w2, wr, wi);
            const double q = horner(term.lower, term.lower_len);
            lo_re += q * (cr * wr - ci * wi);
            lo_im += q * (cr * wi + ci * wr);
        }
        const double g = std::exp(-0.5 * xi);
        // psi2 carries an extra factor i
        return Spinor(C(g * up_re, g * up_im), C(-g * lo_im, g * lo_re));
    }
}

template <int Dim>
bool WaveFunction<Dim>::normalizable() const {
    if constexpr (Dim == 2) return !std::holds_alternative<PlaneWave2D>(modes_.front());
    return false;
}

template <int Dim>
typename WaveFunction<Dim>::Spinor WaveFunction<Dim>::spinor(double t, const Position& x) const {
    if constexpr (Dim == 2)
        if (!poly_terms_.empty()) return oscillator_spinor(t, x);
    std::array<C, kPhaseBuffer> buffer;
    const bool buffered = frequencies_.size() <= kPhaseBuffer;
    if (buffered)
        for (std::size_t i = 0; i < frequencies_.size(); ++i) buffer[i] = std::polar(1.0, -frequencies_[i] * t);
    auto phase = [&](std::size_t mode) {
        const int slot = frequency_index_[mode];
        return buffered ? buffer[slot] : std::polar(1.0, -frequencies_[slot] * t);
    };

    Spinor out = Spinor::Zero();
    if constexpr (Dim == 2) {
        const PlanePoint pt(x);
        const double gaussian = gaussian_rate_ ? std::exp(-0.5 * *gaussian_rate_ * pt.r2) : 0.0;
        for (std::size_t i = 0; i < modes_.size(); ++i) {
            const C c = scaled_[i] * phase(i);
            const Mode& mode = modes_[i];
            if (const auto* osc = std::get_if<OscillatorMode>(&mode)) {
                out += c * (gaussian_rate_ ? osc->spatial(pt, gaussian) : osc->spatial(pt));
            } else if (const auto* box = std::get_if<BoxMode>(&mode)) {
                out += c * box->spatial(pt);
            } else {
                out += c * std::get<PlaneWave2D>(mode).spatial(pt);
            }
        }
    } else {
        for (std::size_t i = 0; i < modes_.size(); ++i)
            out += scaled_[i] * phase(i) * std::get<PlaneWave3D>(modes_[i]).spatial(x);
    }
    return out;
}

double integrate_density(const WaveFunction2D& wf, double t, const Box2D& box, int points_per_axis) {
    const double hx = box.width() / points_per_axis;
    const double hy = box.height() / points_per_axis;
    double total = 0.0;
    for (int i = 0; i < points_per_axis; ++i) {
        double row = 0.0;
        const double x = box.xmin + (i + 0.5) * hx;
        for (int j = 0; j < points_per_axis; ++j) row += wf.density(t, Vec2(x, box.ymin + (j + 0.5) * hy));
        total += row;
    }
    return total * hx * hy;
}

template <int Dim>
WaveFunction<Dim> superpose(std::vector<typename FieldTraits<Dim>::Mode> modes, std::span<const double> phases,
                            std::span<const double> weights, const SuperposeOptions& options) {
    if (modes.empty()) throw std::invalid_argument("superpose: at least one mode is required");
    if (phases.size() != modes.size() || weights.size() != modes.size())
        throw std::invalid_argument("superpose: modes, phases and weights must have equal length");
    if (std::all_of(weights.begin(), weights.end(), [](double w) { return w == 0.0; }))
        throw std::invalid_argument("superpose: all weights are zero");
    const std::size_t family = modes.front().index();
    for (const auto& m : modes)
        if (m.index() != family) throw std::invalid_argument("superpose: modes must belong to one family");

    std::vector<C> coefficients;
    double weight_norm2 = 0.0;
    double weight_sum = 0.0;
    for (std::size_t i = 0; i < modes.size(); ++i) {
        coefficients.push_back(weights[i] * std::polar(1.0, phases[i]));
        weight_norm2 += weights[i] * weights[i];
        weight_sum += std::abs(weights[i]);
    }

    bool bound = false;
    Box2D domain = Box2D::square(10.0);
    if constexpr (Dim == 2) {
        bound = !std::holds_alternative<PlaneWave2D>(modes.front());
        if (std::holds_alternative<BoxMode>(modes.front())) domain = Box2D::square(15.0);
    }
    if (options.domain_hint) domain = *options.domain_hint;

    if (!bound) {
        const double norm = 1.0 / std::sqrt(weight_norm2);
        const double peak = norm * norm * weight_sum * weight_sum;
        return WaveFunction<Dim>(std::move(modes), std::move(coefficients), norm, domain, peak);
    }

    if constexpr (Dim == 2) {
        const WaveFunction2D raw(std::move(modes), std::move(coefficients), 1.0, domain, 1.0);
        const int q = options.quadrature_points;
        const double hx = domain.width() / q;
        const double hy = domain.height() / q;
        double total = 0.0;
        double peak = 0.0;
        for (int i = 0; i < q; ++i) {
            double row = 0.0;
            const double x = domain.xmin + (i + 0.5) * hx;
            for (int j = 0; j < q; ++j) {
                const double d = raw.density(0.0, Vec2(x, domain.ymin + (j + 0.5) * hy));
                row += d;
                peak = std::max(peak, d);
            }
            total += row;
        }
        total *= hx * hy;
        if (!(total > 0.0)) throw std::invalid_argument("superpose: superposition vanishes on the domain");
        const double norm = 1.0 / std::sqrt(total);
        return WaveFunction2D(raw.modes(), raw.coefficients(), norm, domain, peak * norm * norm);
    }
    throw std::logic_error("unreachable");
}

template class WaveFunction<2>;
template class WaveFunction<3>;
template WaveFunction<2> superpose<2>(std::vector<FieldTraits<2>::Mode>, std::span<const double>,
                                      std::span<const double>, const SuperposeOptions&);
template WaveFunction<3> superpose<3>(std::vector<FieldTraits<3>::Mode>, std::span<const double>,
                                      std::span<const double>, const SuperposeOptions&);

}  // namespace pilotwave

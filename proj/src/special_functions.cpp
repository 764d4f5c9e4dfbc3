#include "pilotwave/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace pilotwave {

namespace {

constexpr double kEuler = std::numbers::egamma;
constexpr double kPi = std::numbers::pi;
constexpr double kEps = 1e-17;

int parity_sign(int n) { return (n % 2 == 0) ? 1 : -1; }

void require_positive(const char* name, double x) {
    if (!(x > 0.0)) throw std::domain_error(std::string(name) + ": argument must be > 0");
}

// J_0..J_nmax for x >= 0.
void j_sequence(int nmax, double x, std::vector<double>& out) {
    out.assign(static_cast<std::size_t>(nmax) + 1, 0.0);
    if (x == 0.0) {
        out[0] = 1.0;
        return;
    }
    const double scale = std::max(static_cast<double>(nmax), x);
    int start = static_cast<int>(scale + 30.0 + 10.0 * std::cbrt(scale));
    start += start % 2;

    double jp1 = 0.0;
    double j = 1e-30;
    double norm = 0.0;
    const double two_over_x = 2.0 / x;
    for (int k = start; k >= 1; --k) {
        const double jm1 = k * two_over_x * j - jp1;
        jp1 = j;
        j = jm1;
        // j now holds order k - 1
        if (k - 1 <= nmax) out[k - 1] = j;
        if ((k - 1) % 2 == 0 && k - 1 > 0) norm += 2.0 * j;
        if (std::abs(j) > 1e250) {
            j *= 1e-250;
            jp1 *= 1e-250;
            norm *= 1e-250;
            for (int i = k - 1; i <= nmax; ++i) out[i] *= 1e-250;
        }
    }
    norm += j;
    for (double& v : out) v /= norm;
}

// J_0..J_m where m is large enough for the Neumann sums.
void j_sequence_for_neumann(double x, std::vector<double>& js) {
    const int m = static_cast<int>(x + 40.0 + 10.0 * std::cbrt(x));
    j_sequence(m, x, js);
}

// Y_0 and Y_1 from Neumann series in J.
void y01(double x, double& y0, double& y1) {
    std::vector<double> js;
    j_sequence_for_neumann(x, js);
    const int m = static_cast<int>(js.size()) - 1;
    const double lg = std::log(0.5 * x) + kEuler;

    double s0 = 0.0;
    for (int k = 1; 2 * k <= m; ++k) s0 += parity_sign(k) * js[2 * k] / k;
    y0 = (2.0 / kPi) * lg * js[0] - (4.0 / kPi) * s0;

    double s1 = 0.0;
    for (int k = 1; 2 * k + 1 <= m; ++k)
        s1 += parity_sign(k) * (2.0 * k + 1.0) * js[2 * k + 1] / (static_cast<double>(k) * (k + 1));
    y1 = -(2.0 / kPi) * js[0] / x + (2.0 / kPi) * (lg - 1.0) * js[1] - (2.0 / kPi) * s1;
}

double i_series(int n, double x) {
    const double t = 0.25 * x * x;
    double term = 1.0;
    for (int k = 1; k <= n; ++k) term *= 0.5 * x / k;
    double sum = term;
    for (int k = 1; k < 10000; ++k) {
        term *= t / (static_cast<double>(k) * (n + k));
        sum += term;
        if (term < kEps * sum) break;
    }
    return sum;
}

// K_0 and K_1 for x > 0.
void k01(double x, double& k0, double& k1) {
    if (x <= 2.0) {
        const double t = 0.25 * x * x;
        const double lg = std::log(0.5 * x);
        // K_0
        double term = 1.0;
        double harmonic = 0.0;
        double s = 0.0;
        for (int k = 1; k < 200; ++k) {
            term *= t / (static_cast<double>(k) * k);
            harmonic += 1.0 / k;
            s += harmonic * term;
            if (term * harmonic < kEps * std::abs(s)) break;
        }
        k0 = -(lg + kEuler) * i_series(0, x) + s;
        // K_1: psi(k+1) + psi(k+2) = 2 H_k + 1/(k+1) - 2 gamma
        term = 1.0;
        harmonic = 0.0;
        double s1 = 1.0 - 2.0 * kEuler;
        for (int k = 1; k < 200; ++k) {
            term *= t / (static_cast<double>(k) * (k + 1));
            harmonic += 1.0 / k;
            const double c = 2.0 * harmonic + 1.0 / (k + 1) - 2.0 * kEuler;
            s1 += c * term;
            if (std::abs(c * term) < kEps * std::abs(s1)) break;
        }
        k1 = 1.0 / x + lg * i_series(1, x) - 0.25 * x * s1;
        return;
    }
    // Steed's continued fraction for order zero.
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d;
    double delh = d;
    double q1 = 0.0;
    double q2 = 1.0;
    const double a1 = 0.25;
    double q = a1;
    double c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    for (int i = 1; i < 100000; ++i) {
        a -= 2 * i;
        c = -a * c / (i + 1.0);
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < kEps) break;
    }
    h *= a1;
    k0 = std::sqrt(kPi / (2.0 * x)) * std::exp(-x) / s;
    k1 = k0 * (x + 0.5 - h) / x;
}

// Nonnegative-order window [0, nmax] for each kind.
void nonneg_window(BesselKind kind, int nmax, double x, std::vector<double>& out) {
    out.assign(static_cast<std::size_t>(nmax) + 1, 0.0);
    switch (kind) {
        case BesselKind::J: {
            if (x < 0.0) {
                j_sequence(nmax, -x, out);
                for (int n = 1; n <= nmax; n += 2) out[n] = -out[n];
            } else {
                j_sequence(nmax, x, out);
            }
            return;
        }
        case BesselKind::Y: {
            require_positive("bessel_y", x);
            double y0 = 0.0;
            double y1 = 0.0;
            y01(x, y0, y1);
            out[0] = y0;
            if (nmax >= 1) out[1] = y1;
            for (int n = 1; n < nmax; ++n) out[n + 1] = (2.0 * n / x) * out[n] - out[n - 1];
            return;
        }
        case BesselKind::I: {
            const double ax = std::abs(x);
            for (int n = 0; n <= nmax; ++n) {
                out[n] = i_series(n, ax);
                if (x < 0.0 && n % 2 == 1) out[n] = -out[n];
            }
            return;
        }
        case BesselKind::K: {
            require_positive("bessel_k", x);
            double k0 = 0.0;
            double k1 = 0.0;
            k01(x, k0, k1);
            out[0] = k0;
            if (nmax >= 1) out[1] = k1;
            for (int n = 1; n < nmax; ++n) out[n + 1] = out[n - 1] + (2.0 * n / x) * out[n];
            return;
        }
    }
}

int reflection_sign(BesselKind kind, int n) {
    if (kind == BesselKind::J || kind == BesselKind::Y) return parity_sign(n);
    return 1;
}

}  // namespace

void bessel_window(BesselKind kind, int lowest, double x, std::span<double> out) {
    if (out.empty()) return;
    const int highest = lowest + static_cast<int>(out.size()) - 1;
    const int nmax = std::max(std::abs(lowest), std::abs(highest));
    std::vector<double> values;
    nonneg_window(kind, nmax, x, values);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const int n = lowest + static_cast<int>(i);
        out[i] = n >= 0 ? values[n] : reflection_sign(kind, -n) * values[-n];
    }
}

double bessel(BesselKind kind, int order, double x) {
    double v = 0.0;
    bessel_window(kind, order, x, std::span<double>(&v, 1));
    return v;
}

double bessel_j(int n, double x) { return bessel(BesselKind::J, n, x); }
double bessel_y(int n, double x) { return bessel(BesselKind::Y, n, x); }
double bessel_i(int n, double x) { return bessel(BesselKind::I, n, x); }
double bessel_k(int n, double x) { return bessel(BesselKind::K, n, x); }

double laguerre(int n, int mu, double x) {
    if (n < 0) throw std::invalid_argument("laguerre: degree must be >= 0");
    double prev = 1.0;
    if (n == 0) return prev;
    double cur = 1.0 + mu - x;
    for (int k = 1; k < n; ++k) {
        const double next = ((2.0 * k + 1.0 + mu - x) * cur - (k + mu) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace pilotwave

#include "doctest.h"

#include "pilotwave/quadrature.hpp"
#include "pilotwave/special_functions.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/binomial.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <numbers>
#include <random>

using namespace pilotwave;
using Big = boost::multiprecision::cpp_bin_float_50;

namespace {

// 50-digit reference values.
double ref(BesselKind kind, int n, double x) {
    const Big bx(x);
    switch (kind) {
        case BesselKind::J: return static_cast<double>(boost::math::cyl_bessel_j(n, bx));
        case BesselKind::Y: return static_cast<double>(boost::math::cyl_neumann(n, bx));
        case BesselKind::I: return static_cast<double>(boost::math::cyl_bessel_i(n, bx));
        case BesselKind::K: return static_cast<double>(boost::math::cyl_bessel_k(n, bx));
    }
    return 0.0;
}

// Power series of J_n in 50-digit arithmetic.
Big j_series(int n, const Big& x) {
    Big term = 1;
    for (int k = 1; k <= n; ++k) term *= x / 2 / k;
    Big sum = term;
    const Big t = -x * x / 4;
    for (int k = 1; k < 400; ++k) {
        term *= t / (k * (n + k));
        sum += term;
    }
    return sum;
}

// K_n(x) = int_0^inf exp(-x cosh u) cosh(n u) du, by the trapezoid rule on a
// doubly-decaying integrand (error ~ exp(-pi^2 / h)).
double k_integral(int n, double x) {
    const long double h = 1.0L / 64;
    long double sum = 0.5L * std::exp(-static_cast<long double>(x));
    for (int i = 1;; ++i) {
        const long double u = i * h;
        const long double term = std::exp(-x * std::cosh(u)) * std::cosh(n * u);
        sum += term;
        if (term < 1e-30L * sum) break;
    }
    return static_cast<double>(sum * h);
}

// J and Y oscillate; their accuracy is judged against the envelope near zeros.
double tolerance(BesselKind kind, double value, double x) {
    double scale = std::abs(value);
    if (kind == BesselKind::J || kind == BesselKind::Y) scale = std::max(scale, std::sqrt(2.0 / (std::numbers::pi * x)));
    return 1e-10 * scale;
}

}  // namespace

TEST_CASE("Bessel special values") {
    CHECK(bessel(BesselKind::J, 0, 0.0) == 1.0);
    CHECK(bessel(BesselKind::J, 1, 0.0) == 0.0);
    CHECK(std::abs(bessel_j(0, 2.404825557695773)) < 1e-9);
    CHECK(bessel_k(0, 1.0) == doctest::Approx(k_integral(0, 1.0)).epsilon(1e-10));
}

TEST_CASE("first zero of J0 located by bisection on the series oracle") {
    Big lo = 2.0, hi = 3.0;
    for (int i = 0; i < 80; ++i) {
        const Big mid = (lo + hi) / 2;
        if (j_series(0, lo) * j_series(0, mid) <= 0) hi = mid;
        else lo = mid;
    }
    const double zero = static_cast<double>(lo);
    CHECK(zero == doctest::Approx(2.404825557695773).epsilon(1e-15));
    CHECK(std::abs(bessel_j(0, zero)) < 1e-15);
}

TEST_CASE("Bessel functions match the 50-digit reference") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> logx(std::log(0.05), std::log(60.0));
    for (auto kind : {BesselKind::J, BesselKind::Y, BesselKind::I, BesselKind::K}) {
        for (int n = 0; n <= 8; ++n) {
            for (int i = 0; i < 200; ++i) {
                const double x = std::exp(logx(rng));
                const double expected = ref(kind, n, x);
                const double got = bessel(kind, n, x);
                INFO("kind=" << static_cast<int>(kind) << " n=" << n << " x=" << x);
                CHECK(std::abs(got - expected) <= tolerance(kind, expected, x));
            }
        }
    }
}

TEST_CASE("K agrees with its integral representation") {
    for (int n = 0; n <= 4; ++n)
        for (double x : {0.1, 0.5, 1.0, 1.99, 2.01, 4.56, 10.0, 30.0})
            CHECK(bessel_k(n, x) == doctest::Approx(k_integral(n, x)).epsilon(1e-10));
}

TEST_CASE("J series oracle agrees for small arguments") {
    for (int n = 0; n <= 4; ++n)
        for (double x : {1e-6, 0.3, 1.0, 4.0, 8.7})
            CHECK(std::abs(bessel_j(n, x) - static_cast<double>(j_series(n, Big(x)))) <= 1e-15);
}

TEST_CASE("negative orders follow the reflection identities") {
    for (int n = 1; n <= 4; ++n) {
        const double x = 3.7;
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        CHECK(bessel_j(-n, x) == doctest::Approx(sign * bessel_j(n, x)).epsilon(1e-15));
        CHECK(bessel_y(-n, x) == doctest::Approx(sign * bessel_y(n, x)).epsilon(1e-15));
        CHECK(bessel_i(-n, x) == doctest::Approx(bessel_i(n, x)).epsilon(1e-15));
        CHECK(bessel_k(-n, x) == doctest::Approx(bessel_k(n, x)).epsilon(1e-15));
    }
    std::vector<double> window(3);
    bessel_window(BesselKind::J, -4, 2.5, window);
    CHECK(window[0] == doctest::Approx(bessel_j(4, 2.5)).epsilon(1e-15));
    CHECK(window[1] == doctest::Approx(-bessel_j(3, 2.5)).epsilon(1e-15));
    CHECK(window[2] == doctest::Approx(bessel_j(2, 2.5)).epsilon(1e-15));
}

TEST_CASE("Bessel domain errors") {
    CHECK_THROWS_AS(bessel_y(0, 0.0), std::domain_error);
    CHECK_THROWS_AS(bessel_k(1, -1.0), std::domain_error);
    CHECK_NOTHROW(bessel_j(2, 0.0));
    CHECK_NOTHROW(bessel_i(2, 0.0));
}

TEST_CASE("J/Y Wronskian equals 2/(pi x)") {
    for (int n = 0; n <= 3; ++n) {
        for (int i = 0; i <= 500; ++i) {
            const double x = 0.1 + (50.0 - 0.1) * i / 500.0;
            // derivatives from Z_n' = Z_{n-1} - (n/x) Z_n
            const double jn = bessel_j(n, x), yn = bessel_y(n, x);
            const double djn = bessel_j(n - 1, x) - n / x * jn;
            const double dyn = bessel_y(n - 1, x) - n / x * yn;
            const double w = jn * dyn - djn * yn;
            const double expected = 2.0 / (std::numbers::pi * x);
            CHECK(std::abs(w - expected) <= 1e-9 * expected);
        }
    }
}

TEST_CASE("Laguerre polynomials") {
    for (int mu : {-1, 0, 2}) CHECK(laguerre(0, mu, 3.3) == 1.0);
    for (double x : {0.0, 0.7, 5.0}) CHECK(laguerre(1, 0, x) == doctest::Approx(1.0 - x));
    CHECK(laguerre(2, 1, 0.0) == doctest::Approx(3.0).epsilon(1e-15));

    // explicit expansion L_n^mu(x) = sum_i (-1)^i C(n+mu, n-i) x^i / i!
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ux(0.0, 12.0);
    for (int n = 0; n <= 8; ++n) {
        for (int mu = -2; mu <= 3; ++mu) {
            if (mu < -n) continue;
            for (int s = 0; s < 20; ++s) {
                const double x = ux(rng);
                double expansion = 0.0, scale = 0.0, xi_over_fact = 1.0;
                for (int i = 0; i <= n; ++i) {
                    if (i > 0) xi_over_fact *= x / i;
                    // generalized binomial C(n+mu, n-i) with integer top >= 0 here
                    double binom = 1.0;
                    for (int j = 1; j <= n - i; ++j) binom *= static_cast<double>(n + mu - (n - i) + j) / j;
                    const double term = ((i % 2) ? -1.0 : 1.0) * binom * xi_over_fact;
                    expansion += term;
                    scale += std::abs(term);
                }
                CHECK(std::abs(laguerre(n, mu, x) - expansion) <= 1e-12 * std::max(1.0, scale));
                if (n >= 1 && n + 1 <= 8) {
                    const double lhs = (n + 1) * laguerre(n + 1, mu, x);
                    const double rhs = (2 * n + 1 + mu - x) * laguerre(n, mu, x) - (n + mu) * laguerre(n - 1, mu, x);
                    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max({1.0, std::abs(lhs), scale}));
                }
            }
        }
        CHECK(laguerre(n, 1, 0.0) == doctest::Approx(boost::math::binomial_coefficient<double>(n + 1, n)));
    }
}

TEST_CASE("Gauss rules integrate exactly") {
    const auto gl = gauss_laguerre(20);
    // int u^5 e^-u = 120
    CHECK((gl.weights.array() * gl.nodes.array().pow(5)).sum() == doctest::Approx(120.0).epsilon(1e-12));
    CHECK(integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi) == doctest::Approx(2.0).epsilon(1e-14));
}

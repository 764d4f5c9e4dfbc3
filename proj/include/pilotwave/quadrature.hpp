// quadrature.hpp
// Gauss rules from the Golub-Welsch eigenproblem.

#ifndef PILOTWAVE_QUADRATURE_HPP
#define PILOTWAVE_QUADRATURE_HPP

#include <Eigen/Dense>

#include <cmath>

namespace pilotwave {

struct GaussRule {
    Eigen::VectorXd nodes;
    Eigen::VectorXd weights;
};

/// Nodes/weights for int_0^inf f(u) e^{-u} du; exact for polynomials of degree < 2n.
inline GaussRule gauss_laguerre(int n) {
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        jacobi(i, i) = 2.0 * i + 1.0;
        if (i + 1 < n) jacobi(i, i + 1) = jacobi(i + 1, i) = i + 1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
    return {es.eigenvalues(), es.eigenvectors().row(0).transpose().array().square().matrix()};
}

/// Nodes/weights for int_a^b f(x) dx.
inline GaussRule gauss_legendre(int n, double a, double b) {
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) {
        const double beta = i / std::sqrt(4.0 * i * i - 1.0);
        jacobi(i - 1, i) = jacobi(i, i - 1) = beta;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
    const double half = 0.5 * (b - a);
    GaussRule rule;
    rule.nodes = (es.eigenvalues().array() * half + 0.5 * (a + b)).matrix();
    rule.weights = (es.eigenvectors().row(0).transpose().array().square() * 2.0 * half).matrix();
    return rule;
}

/// Composite Gauss-Legendre over [a, b] split into `panels` equal pieces.
template <typename F>
double integrate(F&& f, double a, double b, int panels = 64, int order = 16) {
    const double width = (b - a) / panels;
    const GaussRule ref = gauss_legendre(order, 0.0, width);
    double sum = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * width;
        for (int i = 0; i < order; ++i) sum += ref.weights[i] * f(lo + ref.nodes[i]);
    }
    return sum;
}

}  // namespace pilotwave

#endif  // PILOTWAVE_QUADRATURE_HPP

// spinor.hpp
// Spinor types, Dirac matrix representations, density and current.

#ifndef PILOTWAVE_SPINOR_HPP
#define PILOTWAVE_SPINOR_HPP

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <stdexcept>

namespace pilotwave {

template <typename Scalar>
using Complex = std::complex<Scalar>;

/// Two-component amplitude (psi_1, psi_2) of the 2+1D Dirac equation.
template <typename Scalar>
using Spinor2T = Eigen::Matrix<Complex<Scalar>, 2, 1>;

/// Four-component Dirac spinor in the Weyl representation, ordered (psi_L, psi_R).
template <typename Scalar>
using Spinor4T = Eigen::Matrix<Complex<Scalar>, 4, 1>;

using Spinor2 = Spinor2T<double>;
using Spinor4 = Spinor4T<double>;

template <int Dim>
using Vec = Eigen::Matrix<double, Dim, 1>;
using Vec2 = Vec<2>;
using Vec3 = Vec<3>;

/// Spatial dimension of the spacetime a representation belongs to.
enum class Spacetime { D2plus1, D3plus1 };

/// Hermitian alpha_j and beta matrices of the Dirac Hamiltonian
/// H = alpha . p + m beta.
template <typename Scalar, int N, int Dim>
struct MatrixRep {
    using Matrix = Eigen::Matrix<Complex<Scalar>, N, N>;
    static constexpr int kSpinorSize = N;
    static constexpr int kDim = Dim;

    std::array<Matrix, Dim> alpha;
    Matrix beta;

    static constexpr Spacetime spacetime() { return Dim == 2 ? Spacetime::D2plus1 : Spacetime::D3plus1; }
};

template <typename Scalar>
using Rep2T = MatrixRep<Scalar, 2, 2>;
template <typename Scalar>
using Rep4T = MatrixRep<Scalar, 4, 3>;

/// Pauli matrix sigma_j, j in {1, 2, 3}.
template <typename Scalar>
Eigen::Matrix<Complex<Scalar>, 2, 2> pauli(int j) {
    using C = Complex<Scalar>;
    Eigen::Matrix<C, 2, 2> s;
    switch (j) {
        case 1: s << C(0), C(1), C(1), C(0); break;
        case 2: s << C(0), C(0, -1), C(0, 1), C(0); break;
        case 3: s << C(1), C(0), C(0), C(-1); break;
        default: throw std::invalid_argument("pauli: index must be 1, 2 or 3");
    }
    return s;
}

/// alpha_1 = sigma_1, alpha_2 = sigma_2, beta = sigma_3.
template <typename Scalar = double>
Rep2T<Scalar> dirac_rep_2d() {
    return Rep2T<Scalar>{{pauli<Scalar>(1), pauli<Scalar>(2)}, pauli<Scalar>(3)};
}

/// Weyl (chiral) representation: gamma^0 = [[0,1],[1,0]], gamma^i = [[0,sigma_i],[-sigma_i,0]],
/// hence alpha_i = gamma^0 gamma^i = diag(-sigma_i, sigma_i) and beta = gamma^0.
template <typename Scalar = double>
Rep4T<Scalar> weyl_rep_3d() {
    using M4 = typename Rep4T<Scalar>::Matrix;
    Rep4T<Scalar> rep;
    for (int i = 0; i < 3; ++i) {
        M4 a = M4::Zero();
        a.template block<2, 2>(0, 0) = -pauli<Scalar>(i + 1);
        a.template block<2, 2>(2, 2) = pauli<Scalar>(i + 1);
        rep.alpha[i] = a;
    }
    rep.beta = M4::Zero();
    rep.beta.template block<2, 2>(0, 2).setIdentity();
    rep.beta.template block<2, 2>(2, 0).setIdentity();
    return rep;
}

/// Largest absolute entry over all Clifford-algebra defects of a representation:
/// {alpha_j, alpha_k} - 2 delta_jk, beta^2 - 1, {alpha_j, beta}.
template <typename Scalar, int N, int Dim>
Scalar clifford_defect(const MatrixRep<Scalar, N, Dim>& rep) {
    using M = typename MatrixRep<Scalar, N, Dim>::Matrix;
    const M id = M::Identity();
    Scalar worst = 0;
    auto track = [&](const M& m) { worst = std::max(worst, m.cwiseAbs().maxCoeff()); };
    for (int j = 0; j < Dim; ++j) {
        for (int k = 0; k < Dim; ++k) {
            M anti = rep.alpha[j] * rep.alpha[k] + rep.alpha[k] * rep.alpha[j];
            if (j == k) anti -= Scalar(2) * id;
            track(anti);
        }
        track(rep.alpha[j] * rep.beta + rep.beta * rep.alpha[j]);
        track((rep.alpha[j] - rep.alpha[j].adjoint()).eval());
    }
    track((rep.beta * rep.beta - id).eval());
    track((rep.beta - rep.beta.adjoint()).eval());
    return worst;
}

/// psi^dagger psi.
template <typename Derived>
typename Derived::RealScalar density(const Eigen::MatrixBase<Derived>& s) {
    return s.squaredNorm();
}

/// (psi^dagger alpha_1 psi, ..., psi^dagger alpha_Dim psi).
template <typename Scalar, int N, int Dim>
Eigen::Matrix<Scalar, Dim, 1> current(const Eigen::Matrix<Complex<Scalar>, N, 1>& s,
                                      const MatrixRep<Scalar, N, Dim>& rep) {
    Eigen::Matrix<Scalar, Dim, 1> j;
    for (int d = 0; d < Dim; ++d) j[d] = (s.adjoint() * rep.alpha[d] * s).value().real();
    return j;
}

/// Runtime-sized overload: rejects a representation whose size does not match the spinor.
template <typename Scalar, int N, int Dim>
Eigen::Matrix<Scalar, Dim, 1> current(const Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, 1>& s,
                                      const MatrixRep<Scalar, N, Dim>& rep) {
    if (s.size() != N) throw std::invalid_argument("current: spinor size does not match representation");
    return current<Scalar, N, Dim>(Eigen::Matrix<Complex<Scalar>, N, 1>(s), rep);
}

/// Closed form of the 2+1D current, (2 Re(psi1* psi2), 2 Im(psi1* psi2)).
template <typename Scalar>
Eigen::Matrix<Scalar, 2, 1> current_2d(const Spinor2T<Scalar>& s) {
    const Complex<Scalar> z = std::conj(s[0]) * s[1];
    return {Scalar(2) * z.real(), Scalar(2) * z.imag()};
}

}  // namespace pilotwave

#endif  // PILOTWAVE_SPINOR_HPP

// box_solver.hpp
// Eigenvalues and exterior coefficients of the spherical-box Dirac problem.

#ifndef PILOTWAVE_BOX_SOLVER_HPP
#define PILOTWAVE_BOX_SOLVER_HPP

#include "pilotwave/modes.hpp"

#include <vector>

namespace pilotwave {

/// i * (psi1/psi2 interior - psi1/psi2 exterior) at r = R'; real, zero at eigenvalues,
/// with poles where the interior psi2 vanishes. Throws std::domain_error outside
/// the open window (max(m - V0, -m), m).
double box_match_residual(double energy, HalfInteger k, const BoxParams& params);

/// All eigenvalues in the bound-state window, ascending. The window is scanned on
/// `scan_resolution` uniform subintervals, sign changes are bisected to a bracket
/// of 1e-12 and brackets whose residual grew during refinement (poles) are dropped.
std::vector<double> solve_box_eigenvalues(HalfInteger k, const BoxParams& params, int scan_resolution = 20000);

/// beta' from continuity of psi1 at R' with unit interior coefficient.
double solve_box_beta_prime(double energy, HalfInteger k, const BoxParams& params);

/// Eigenvalue closest to `energy_guess` with its matched beta'.
BoxMode make_box_mode(HalfInteger k, double energy_guess, const BoxParams& params, int scan_resolution = 20000);

}  // namespace pilotwave

#endif  // PILOTWAVE_BOX_SOLVER_HPP

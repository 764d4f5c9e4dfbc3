// special_functions.hpp
// Integer-order Bessel functions and generalized Laguerre polynomials.
//
// J_n is computed by Miller's downward recurrence normalized with
// J_0 + 2 sum J_2k = 1; Y_0 and Y_1 follow from their Neumann series in the
// same J values and Y_n from upward recurrence. I_n is summed from its power
// series (all terms positive). K_0 and K_1 use the logarithmic series for
// x <= 2 and Steed's continued fraction beyond; K_n follows by upward
// recurrence. Negative orders use J_{-n} = (-1)^n J_n, Y_{-n} = (-1)^n Y_n,
// I_{-n} = I_n, K_{-n} = K_n.

#ifndef PILOTWAVE_SPECIAL_FUNCTIONS_HPP
#define PILOTWAVE_SPECIAL_FUNCTIONS_HPP

#include <span>
#include <vector>

namespace pilotwave {

enum class BesselKind { J, Y, I, K };

double bessel(BesselKind kind, int order, double x);

double bessel_j(int n, double x);
double bessel_y(int n, double x);  // x > 0
double bessel_i(int n, double x);
double bessel_k(int n, double x);  // x > 0

/// Fills out[i] with the function of order (lowest + i). Orders may be negative.
/// One recurrence pass serves the whole window, which is what the mode
/// evaluators need (orders nu and nu - 1 at the same argument).
void bessel_window(BesselKind kind, int lowest, double x, std::span<double> out);

/// Generalized Laguerre polynomial L_n^mu(x) by three-term recurrence.
double laguerre(int n, int mu, double x);

}  // namespace pilotwave

#endif  // PILOTWAVE_SPECIAL_FUNCTIONS_HPP

#pragma once

#include <span>

#include "frakgeo/chart.hpp"

namespace frakgeo {

/// Gamma(p+1)/Gamma(p+1-alpha), the power-rule factor of the left Caputo
/// derivative acting on (x - x0)^p. The integer limit alpha = 1 returns
/// exactly p. Arguments driving Gamma into a pole or the negative axis are
/// rejected with DomainError.
double caputo_gamma_factor(double p, FractionalOrder alpha);

/// Left Caputo derivative of (x - x0)^p evaluated at x_rel = x - x0 >= 0,
/// in closed form: Gamma(p+1)/Gamma(p+1-alpha) * x_rel^(p-alpha) for p > 0,
/// and 0 for p = 0 (constants are annihilated).
double caputo_power(double p, FractionalOrder alpha, double x_rel);

/// L1 approximation of the left Caputo derivative of sampled data.
/// `f` holds the samples on `grid` (which starts at the terminal); `at`
/// must lie on the grid. For alpha = 1 this degrades to a one-sided
/// backward difference at `at`.
double caputo_quadrature(const AxisGrid& grid, std::span<const double> f,
                         FractionalOrder alpha, double at);

/// Left Riemann-Liouville derivative, quadrature form. Reference only:
/// it differs from the Caputo derivative by the terminal-value term
/// f(x0) * (x - x0)^(-alpha) / Gamma(1-alpha), so it does NOT annihilate
/// constants. No geometric construction uses it.
double rl_left_reference(const AxisGrid& grid, std::span<const double> f,
                         FractionalOrder alpha, double at);

/// Derivative of a sampled line at every node. Fractional orders use the
/// L1 memory sum node by node (value 0 at the terminal itself). The
/// integer limit alpha = 1 is local and uses centered stencils (4th order
/// where the line is wide enough, one-sided at the ends).
///
/// A NaN sample at the line start (a terminal-singular value) is replaced
/// by quadratic extrapolation from the next three nodes before the L1 sum;
/// NaN anywhere else poisons the outputs that depend on it.
void caputo_line_derivative(const AxisGrid& grid, std::span<const double> f,
                            FractionalOrder alpha, std::span<double> out);

} // namespace frakgeo

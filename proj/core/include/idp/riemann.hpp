#ifndef IDP_RIEMANN_HPP_
#define IDP_RIEMANN_HPP_

#include "idp/state.hpp"

namespace idp {

/// Exact self-similar solution of the 1D Euler Riemann problem sampled at
/// xi = x/t. Conserved-variable input/output. Vacuum-generating data returns
/// the vacuum-adjacent rarefaction profile (zero state inside the vacuum).
/// The star-region pressure is found by Newton iteration with a bisection
/// safeguard to 1e-12 relative.
State exact_riemann_euler(const State& uL, const State& uR, double gamma,
                          double xi);

/// Star-region pressure of the Riemann problem (diagnostic/testing).
double riemann_star_pressure(const State& uL, const State& uR, double gamma);

}  // namespace idp

#endif  // IDP_RIEMANN_HPP_

#ifndef IDP_NUMFLUX_HPP_
#define IDP_NUMFLUX_HPP_

#include "idp/physics.hpp"
#include "idp/state.hpp"

namespace idp {

enum class FluxKind {
  GlobalLaxFriedrichs,
  LocalLaxFriedrichs,
  GodunovScalar,
  EngquistOsherScalar,
};

/// Consistent, conservative numerical flux with a declared IDP CFL number c0:
/// the three-point first order scheme u - lambda (fhat(u,uR) - fhat(uL,u))
/// stays in G whenever lambda * alpha <= c0.
struct NumericalFlux {
  FluxKind kind = FluxKind::LocalLaxFriedrichs;
  double alpha_global = 0.0;  // required for GlobalLaxFriedrichs

  static NumericalFlux global_lf(double alpha) {
    return {FluxKind::GlobalLaxFriedrichs, alpha};
  }
  static NumericalFlux local_lf() { return {FluxKind::LocalLaxFriedrichs, 0.0}; }
  static NumericalFlux godunov() { return {FluxKind::GodunovScalar, 0.0}; }
  static NumericalFlux engquist_osher() {
    return {FluxKind::EngquistOsherScalar, 0.0};
  }

  /// IDP CFL number of the corresponding first order scheme: 1 for
  /// Lax-Friedrichs with the Euler positivity domain and for monotone scalar
  /// fluxes under lambda max|f'| <= 1.
  double c0() const { return 1.0; }
};

/// Local-LF viscosity: max of the two directional max wave speeds.
/// Symmetric in (uL, uR).
double interface_alpha(const SystemModel& sys, const State& uL, const State& uR,
                       Direction n);

/// Evaluate the numerical flux across (uL | uR) in direction n.
/// Godunov and Engquist-Osher are scalar-only (advection, Burgers).
State numerical_flux(const NumericalFlux& nf, const SystemModel& sys,
                     const State& uL, const State& uR, Direction n);

}  // namespace idp

#endif  // IDP_NUMFLUX_HPP_

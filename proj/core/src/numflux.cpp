#include "idp/numflux.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace idp {

namespace {

double scalar_flux(const SystemModel& sys, double u) {
  return sys.kind == SystemKind::Burgers ? 0.5 * u * u : sys.speed * u;
}

/// min/max of f over [lo, hi], checking interior critical points.
double scalar_extremum(const SystemModel& sys, double lo, double hi, bool want_min) {
  double best = want_min ? std::min(scalar_flux(sys, lo), scalar_flux(sys, hi))
                         : std::max(scalar_flux(sys, lo), scalar_flux(sys, hi));
  if (sys.kind == SystemKind::Burgers && lo < 0.0 && 0.0 < hi) {
    best = want_min ? std::min(best, 0.0) : std::max(best, 0.0);
  }
  return best;
}

}  // namespace

double interface_alpha(const SystemModel& sys, const State& uL, const State& uR,
                       Direction n) {
  return std::max(max_wavespeed(sys, uL, n), max_wavespeed(sys, uR, n));
}

State numerical_flux(const NumericalFlux& nf, const SystemModel& sys,
                     const State& uL, const State& uR, Direction n) {
  switch (nf.kind) {
    case FluxKind::GlobalLaxFriedrichs:
    case FluxKind::LocalLaxFriedrichs: {
      double alpha = nf.kind == FluxKind::GlobalLaxFriedrichs
                         ? nf.alpha_global
                         : interface_alpha(sys, uL, uR, n);
      if (alpha <= 0.0) {
        if (nf.kind == FluxKind::GlobalLaxFriedrichs)
          throw std::invalid_argument("nonpositive Lax-Friedrichs viscosity");
        alpha = 0.0;  // both states at rest for a scalar law
      }
      State f = flux(sys, uL, n) + flux(sys, uR, n);
      State jump = uR - uL;
      return 0.5 * (f - alpha * jump);
    }
    case FluxKind::GodunovScalar: {
      if (!sys.is_scalar())
        throw std::invalid_argument("Godunov flux is scalar-only");
      if (n.nx < 0.0)  // mirror identity fhat_-(a,b) = -fhat_+(b,a)
        return -1.0 * numerical_flux(nf, sys, uR, uL, Direction::xplus());
      const double a = uL[0], b = uR[0];
      const double f = a <= b ? scalar_extremum(sys, a, b, true)
                              : scalar_extremum(sys, b, a, false);
      return State::scalar(f);
    }
    case FluxKind::EngquistOsherScalar: {
      if (!sys.is_scalar())
        throw std::invalid_argument("Engquist-Osher flux is scalar-only");
      if (n.nx < 0.0)
        return -1.0 * numerical_flux(nf, sys, uR, uL, Direction::xplus());
      const double a = uL[0], b = uR[0];
      double f;
      if (sys.kind == SystemKind::LinearAdvection) {
        // int |f'| = |a|(b - a); reduces to the upwind flux.
        f = 0.5 * (scalar_flux(sys, a) + scalar_flux(sys, b) -
                   std::abs(sys.speed) * (b - a));
      } else {
        // f^+(u^-) + f^-(u^+) with f'(u) = u.
        const double fp = a > 0.0 ? 0.5 * a * a : 0.0;
        const double fm = b < 0.0 ? 0.5 * b * b : 0.0;
        f = fp + fm;
      }
      return State::scalar(f);
    }
  }
  return {};
}

}  // namespace idp

#ifndef IDP_PHYSICS_HPP_
#define IDP_PHYSICS_HPP_

#include <stdexcept>
#include <string>

#include "idp/state.hpp"

namespace idp {

enum class SystemKind { LinearAdvection, Burgers, Euler1D, Euler2D };

/// PDE system: flux, wave speed estimate, and metadata. gamma > 1 for Euler
/// kinds; `speed` is the advection velocity for LinearAdvection.
struct SystemModel {
  SystemKind kind = SystemKind::LinearAdvection;
  double gamma = 1.4;
  double speed = 1.0;

  static SystemModel advection(double a) {
    SystemModel s;
    s.kind = SystemKind::LinearAdvection;
    s.speed = a;
    return s;
  }
  static SystemModel burgers() {
    SystemModel s;
    s.kind = SystemKind::Burgers;
    return s;
  }
  static SystemModel euler1d(double g) {
    if (g <= 1.0) throw std::invalid_argument("gamma must exceed 1");
    SystemModel s;
    s.kind = SystemKind::Euler1D;
    s.gamma = g;
    return s;
  }
  static SystemModel euler2d(double g) {
    if (g <= 1.0) throw std::invalid_argument("gamma must exceed 1");
    SystemModel s;
    s.kind = SystemKind::Euler2D;
    s.gamma = g;
    return s;
  }

  int components() const {
    switch (kind) {
      case SystemKind::Euler1D: return 3;
      case SystemKind::Euler2D: return 4;
      default: return 1;
    }
  }
  int dim() const { return kind == SystemKind::Euler2D ? 2 : 1; }
  bool is_euler() const {
    return kind == SystemKind::Euler1D || kind == SystemKind::Euler2D;
  }
  bool is_scalar() const { return !is_euler(); }
};

/// p = (gamma-1)(E - |m|^2 / (2 rho)); throws on rho <= 0.
double pressure(const State& u, double gamma);

/// Directional flux f(u).n. For scalar kinds n is +-1 along x.
State flux(const SystemModel& sys, const State& u, Direction n);

/// Spectral radius of the directional flux Jacobian: |v.n| + sqrt(gamma p/rho)
/// for Euler, |a| for advection, |u| for Burgers.
double max_wavespeed(const SystemModel& sys, const State& u, Direction n);

/// Sharp splitting bound of the positivity domain: for every alpha strictly
/// above the returned value, u +- f(u).n/alpha keeps rho > 0 and p > 0.
/// Equals |v.n| + sqrt(p^2/(2 rho^2 e)), i.e. |v.n| + sqrt((gamma-1)p/(2rho))
/// for ideal gas. Throws if u is outside the positivity domain.
double idp_split_alpha(const State& u, Direction n, double gamma);

}  // namespace idp

#endif  // IDP_PHYSICS_HPP_

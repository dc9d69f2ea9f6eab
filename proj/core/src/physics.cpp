#include "idp/physics.hpp"

#include <cmath>

namespace idp {

double pressure(const State& u, double gamma) {
  if (u.rho() <= 0.0) throw std::domain_error("nonpositive density");
  return (gamma - 1.0) * (u.energy() - u.momentum_sq() / (2.0 * u.rho()));
}

State flux(const SystemModel& sys, const State& u, Direction n) {
  switch (sys.kind) {
    case SystemKind::LinearAdvection:
      return State::scalar(sys.speed * u[0] * n.nx);
    case SystemKind::Burgers:
      return State::scalar(0.5 * u[0] * u[0] * n.nx);
    case SystemKind::Euler1D: {
      const double p = pressure(u, sys.gamma);
      const double v = u[1] / u[0];
      return n.nx * State::euler1(u[1], u[1] * v + p, v * (u[2] + p));
    }
    case SystemKind::Euler2D: {
      const double p = pressure(u, sys.gamma);
      const double v1 = u[1] / u[0], v2 = u[2] / u[0];
      const double vn = v1 * n.nx + v2 * n.ny;
      return State::euler2(u[0] * vn, u[1] * vn + p * n.nx, u[2] * vn + p * n.ny,
                           vn * (u[3] + p));
    }
  }
  return {};
}

double max_wavespeed(const SystemModel& sys, const State& u, Direction n) {
  switch (sys.kind) {
    case SystemKind::LinearAdvection:
      return std::abs(sys.speed);
    case SystemKind::Burgers:
      return std::abs(u[0]);
    default: {
      const double p = pressure(u, sys.gamma);
      if (p <= 0.0) throw std::domain_error("nonpositive pressure");
      double vn;
      if (sys.kind == SystemKind::Euler1D) {
        vn = (u[1] / u[0]) * n.nx;
      } else {
        vn = (u[1] * n.nx + u[2] * n.ny) / u[0];
      }
      return std::abs(vn) + std::sqrt(sys.gamma * p / u.rho());
    }
  }
}

double idp_split_alpha(const State& u, Direction n, double gamma) {
  const double rho = u.rho();
  if (rho <= 0.0) throw std::domain_error("nonpositive density");
  const double e = u.energy() / rho - u.momentum_sq() / (2.0 * rho * rho);
  if (e <= 0.0) throw std::domain_error("nonpositive internal energy");
  const double p = (gamma - 1.0) * rho * e;
  double vn;
  if (u.size() == 3) {
    vn = (u[1] / rho) * n.nx;
  } else {
    vn = (u[1] * n.nx + u[2] * n.ny) / rho;
  }
  return std::abs(vn) + std::sqrt(p * p / (2.0 * rho * rho * e));
}

}  // namespace idp

#include "idp/domain.hpp"

#include <cmath>

namespace idp {

namespace {

double safe_pressure(const State& u, double gamma) {
  if (u.rho() <= 0.0 || !u.finite()) return kUndefinedConstraint;
  return (gamma - 1.0) * (u.energy() - u.momentum_sq() / (2.0 * u.rho()));
}

}  // namespace

InvariantDomain InvariantDomain::euler(double gamma) {
  InvariantDomain dom;
  dom.euler_positivity = true;
  dom.gamma = gamma;
  dom.constraints.push_back(
      {"rho", ConstraintKind::Concave,
       [](const State& u) {
         return u.finite() ? u.rho() : kUndefinedConstraint;
       },
       0.0});
  dom.constraints.push_back(
      {"pressure", ConstraintKind::Concave,
       [gamma](const State& u) { return safe_pressure(u, gamma); }, 0.0});
  return dom;
}

InvariantDomain InvariantDomain::euler_entropy(double gamma, double s_min) {
  InvariantDomain dom = euler(gamma);
  dom.euler_positivity = false;
  dom.constraints.push_back(
      {"entropy", ConstraintKind::QuasiConcave,
       [gamma, s_min](const State& u) {
         const double p = safe_pressure(u, gamma);
         if (p == kUndefinedConstraint || p <= 0.0) return kUndefinedConstraint;
         return std::log(p / std::pow(u.rho(), gamma)) - s_min;
       },
       0.0});
  return dom;
}

InvariantDomain InvariantDomain::scalar_bounds(double m, double M) {
  InvariantDomain dom;
  dom.constraints.push_back(
      {"lower", ConstraintKind::Linear,
       [m](const State& u) {
         return u.finite() ? u[0] - m : kUndefinedConstraint;
       },
       0.0});
  dom.constraints.push_back(
      {"upper", ConstraintKind::Linear,
       [M](const State& u) {
         return u.finite() ? M - u[0] : kUndefinedConstraint;
       },
       0.0});
  return dom;
}

std::vector<double> InvariantDomain::values(const State& u) const {
  std::vector<double> g;
  g.reserve(constraints.size());
  for (const auto& con : constraints) g.push_back(con.eval(u));
  return g;
}

bool InvariantDomain::contains(const State& u, double slack) const {
  for (const auto& con : constraints) {
    const double g = con.eval(u);
    if (!(g >= con.floor - slack)) return false;
  }
  return true;
}

InvariantDomain InvariantDomain::with_floors(
    const std::vector<double>& floors) const {
  InvariantDomain dom = *this;
  for (std::size_t i = 0; i < dom.constraints.size() && i < floors.size(); ++i)
    dom.constraints[i].floor = floors[i];
  return dom;
}

InvariantDomain InvariantDomain::with_zero_floors() const {
  InvariantDomain dom = *this;
  for (auto& con : dom.constraints) con.floor = 0.0;
  return dom;
}

}  // namespace idp

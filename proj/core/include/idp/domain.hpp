#ifndef IDP_DOMAIN_HPP_
#define IDP_DOMAIN_HPP_

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "idp/physics.hpp"
#include "idp/state.hpp"

namespace idp {

enum class ConstraintKind { Linear, Concave, QuasiConcave };

/// Sentinel for constraint values whose formula is undefined at the given
/// state (e.g. entropy when rho <= 0). Limiters treat it as "violated".
inline constexpr double kUndefinedConstraint =
    -std::numeric_limits<double>::infinity();

struct Constraint {
  std::string name;
  ConstraintKind kind = ConstraintKind::Concave;
  std::function<double(const State&)> eval;
  double floor = 0.0;
};

/// Convex invariant domain G = { u : g_i(u) >= floor_i for all i }.
/// Membership is monotone in the floors: smaller floors admit more states.
struct InvariantDomain {
  std::vector<Constraint> constraints;

  // Structure tag let hot paths specialize: true only for the plain Euler
  // positivity domain built by euler() (constraints exactly {rho, pressure}).
  bool euler_positivity = false;
  double gamma = 0.0;

  /// Euler positivity domain: g = (rho, p), both concave (rho is linear).
  static InvariantDomain euler(double gamma);
  /// Euler domain with the minimum entropy principle:
  /// g = (rho, p, S - S_min) with S = ln(p / rho^gamma) quasi-concave.
  static InvariantDomain euler_entropy(double gamma, double s_min);
  /// Scalar bounds [m, M]: g = (u - m, M - u), both linear.
  static InvariantDomain scalar_bounds(double m, double M);

  /// All g_i(u) in declaration order; never throws. Undefined constraints
  /// return kUndefinedConstraint.
  std::vector<double> values(const State& u) const;

  /// u in G with floors shifted by `slack` (g_i >= floor_i - slack).
  bool contains(const State& u, double slack = 0.0) const;

  InvariantDomain with_floors(const std::vector<double>& floors) const;
  InvariantDomain with_zero_floors() const;
};

/// Convenience alias for the spec name.
inline std::vector<double> constraint_values(const InvariantDomain& dom,
                                             const State& u) {
  return dom.values(u);
}

}  // namespace idp

#endif  // IDP_DOMAIN_HPP_

#ifndef IDP_LIMITERS_HPP_
#define IDP_LIMITERS_HPP_

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "idp/domain.hpp"
#include "idp/physics.hpp"
#include "idp/state.hpp"

namespace idp {

// ---------------------------------------------------------------------------
// Scaling limiters (cell-local affine contraction toward the cell average)
// ---------------------------------------------------------------------------

struct LimiterOutputScalar {
  double theta = 1.0;
  bool activated = false;
  std::vector<double> values;
};

struct LimiterOutputSystem {
  double theta = 1.0;
  bool activated = false;
  std::vector<State> values;
};

/// theta = min{ |M-avg|/|Mj-avg|, |m-avg|/|mj-avg|, 1 } with Mj, mj the node
/// extrema; limited values are avg + theta (v - avg). Preserves any convex
/// node mean equal to avg. Requires m <= avg <= M.
LimiterOutputScalar scaling_limiter_scalar(std::span<const double> values,
                                           double avg, double m, double M);

/// Sequential per-constraint scaling: closed-form theta for Linear/Concave
/// constraints, bisection for QuasiConcave (and for undefined node values).
/// Requires avg in G with the domain's floors.
LimiterOutputSystem scaling_limiter_system(std::span<const State> values,
                                           const State& avg,
                                           const InvariantDomain& dom);

struct FaceLimiterOutputScalar {
  double theta = 1.0;
  bool activated = false;
  double face_left, face_right, interior;
};

struct FaceLimiterOutputSystem {
  double theta = 1.0;
  bool activated = false;
  State face_left, face_right, interior;
};

/// Simplified face limiter: forms the synthetic interior value
/// (avg - w1 uL - w1 uR) / (1 - 2 w1) and limits the triple {uL, uR, x*}.
/// Requires 0 < w1 < 1/2 and a feasible avg.
FaceLimiterOutputScalar simplified_face_limiter(double face_left,
                                                double face_right, double avg,
                                                double omega1, double m,
                                                double M);
FaceLimiterOutputSystem simplified_face_limiter(const State& face_left,
                                                const State& face_right,
                                                const State& avg, double omega1,
                                                const InvariantDomain& dom);

// ---------------------------------------------------------------------------
// Flux-correction limiters (per-interface theta on a 1D line)
//
// Line convention: cells u[0..n-1]; interfaces 0..n where interface i
// separates cells i-1 and i; flux arrays have size n+1. The update of cell j
// reads u_j - lambda (f[j+1] - f[j]). Outermost interfaces take the single
// adjacent cell's bound into account.
// ---------------------------------------------------------------------------

/// Low/high-order interface fluxes. delta() = high - low per interface.
struct FluxPair {
  std::vector<State> low;
  std::vector<State> high;
  std::vector<State> delta() const;
};

struct InterfaceTheta {
  std::vector<double> theta;  // size n+1
  bool feasible = true;       // low-order precondition held
  std::string message;
};

/// Classical Zalesak FCT: P/Q/R bookkeeping with R = 1 when P = 0.
/// Requires the low-order update within [m, M] per cell.
InterfaceTheta zalesak_theta(std::span<const double> u_low_next,
                             std::span<const double> delta, double lambda,
                             double m, double M);

/// Locally defined parameters Lambda decoupling the FCT inequalities; any
/// theta <= Lambda preserves both bounds. eps_den guards denominators
/// (default just above machine zero; pass 0 for exact Zalesak equivalence).
InterfaceTheta parametrized_theta_scalar(std::span<const double> u_n,
                                         std::span<const double> f_low,
                                         std::span<const double> delta,
                                         double lambda, double m, double M,
                                         double eps_den = 1e-30);

/// Two-stage Euler box construction: density bounds by the scalar lower-bound
/// machinery, then each box vertex rescaled toward the origin until the
/// induced update has pressure >= eps_p (bisection; the feasible set is an
/// interval by concavity).
InterfaceTheta parametrized_theta_euler(std::span<const State> u_n,
                                        const FluxPair& pair, double lambda,
                                        double gamma, double eps_rho,
                                        double eps_p, double eps_den = 1e-30);

/// Largest theta in [0,1] with g((1-t) base + t candidate) >= eps for all
/// t <= theta. Closed form for Linear/Concave with finite endpoint values,
/// bisection otherwise (undefined candidate values count as violated).
/// Requires g(base) >= eps.
double segment_theta(const std::function<double(const State&)>& g,
                     const State& base, const State& candidate, double eps,
                     ConstraintKind kind = ConstraintKind::Concave);

/// Hu-Adams-Shu: splits the update into u^{L,+-} = u -+ 2 lambda fhat^{L} and
/// limits the high-order counterparts per constraint. Requires the low flux
/// to be first order Lax-Friedrichs under lambda alpha <= 1/2.
InterfaceTheta hu_adams_shu_interface_theta(std::span<const State> u_n,
                                            const FluxPair& pair, double lambda,
                                            const InvariantDomain& dom);

/// Monolithic convex limiting: same structure with the f(u_j^n)-shifted
/// states u -+ 2 lambda (fhat^{L} - f(u)); valid for any consistent IDP low
/// flux under the halved CFL.
InterfaceTheta monolithic_convex_interface_theta(std::span<const State> u_n,
                                                 const FluxPair& pair,
                                                 double lambda,
                                                 const SystemModel& sys,
                                                 const InvariantDomain& dom,
                                                 Direction n = Direction::xplus());

/// FCT-type convex limiting: corrects around the feasible low-order update,
/// g[u^{n+1,L} -+ 2 lambda theta delta] >= eps per adjacent cell.
InterfaceTheta guermond_convex_interface_theta(std::span<const State> u_low_next,
                                               std::span<const State> delta,
                                               double lambda,
                                               const InvariantDomain& dom);

}  // namespace idp

#endif  // IDP_LIMITERS_HPP_

#include "idp/limiters.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace idp {

namespace {

constexpr double kBisectTol = 1e-12;
constexpr double kBisectSafety = 1.0 - 1e-10;

/// Largest t in [0,1] with pred(t) true, assuming the true set is an interval
/// containing 0. Bisection to kBisectTol, shrunk by the safety factor.
double bisect_largest(const std::function<bool(double)>& pred) {
  if (pred(1.0)) return 1.0;
  double lo = 0.0, hi = 1.0;
  while (hi - lo > kBisectTol) {
    const double mid = 0.5 * (lo + hi);
    (pred(mid) ? lo : hi) = mid;
  }
  return lo * kBisectSafety;
}

}  // namespace

LimiterOutputScalar scaling_limiter_scalar(std::span<const double> values,
                                           double avg, double m, double M) {
  if (!(m <= avg && avg <= M))
    throw std::domain_error("cell average outside [m, M]");
  LimiterOutputScalar out;
  out.values.assign(values.begin(), values.end());
  double vmax = avg, vmin = avg;
  for (double v : values) {
    vmax = std::max(vmax, v);
    vmin = std::min(vmin, v);
  }
  double theta = 1.0;
  if (vmax > M) theta = std::min(theta, std::abs((M - avg) / (vmax - avg)));
  if (vmin < m) theta = std::min(theta, std::abs((m - avg) / (vmin - avg)));
  out.theta = theta;
  if (theta >= 1.0) return out;
  out.activated = true;
  for (int attempt = 0; attempt < 10; ++attempt) {
    for (std::size_t i = 0; i < out.values.size(); ++i)
      out.values[i] = avg + theta * (values[i] - avg);
    bool ok = true;
    for (double v : out.values)
      if (v < m || v > M) ok = false;
    if (ok) break;
    theta *= 1.0 - 1e-12;  // absorb the last rounding ulp
    out.theta = theta;
  }
  return out;
}

LimiterOutputSystem scaling_limiter_system(std::span<const State> values,
                                           const State& avg,
                                           const InvariantDomain& dom) {
  LimiterOutputSystem out;
  out.values.assign(values.begin(), values.end());
  double theta_total = 1.0;
  for (const auto& con : dom.constraints) {
    const double eps = con.floor;
    const double g_avg = con.eval(avg);
    if (!(g_avg >= eps)) throw std::domain_error("cell average outside G");
    double theta = 1.0;
    const bool closed_form = con.kind != ConstraintKind::QuasiConcave;
    double g_min = g_avg;
    bool any_undefined = false;
    for (const auto& v : out.values) {
      const double g = con.eval(v);
      if (g == kUndefinedConstraint) any_undefined = true;
      g_min = std::min(g_min, g);
    }
    if (g_min >= eps) continue;
    if (closed_form && !any_undefined) {
      theta = (g_avg - eps) / (g_avg - g_min);
    } else {
      for (const auto& v : out.values) {
        const double g = con.eval(v);
        if (g >= eps) continue;
        theta = std::min(theta, bisect_largest([&](double t) {
                           const double gq =
                               con.eval(avg + t * (v - avg));
                           return gq != kUndefinedConstraint && gq >= eps;
                         }));
      }
    }
    for (int attempt = 0; attempt < 10 && theta < 1.0; ++attempt) {
      bool ok = true;
      for (auto& v : out.values) {
        const State w = avg + theta * (v - avg);
        const double g = con.eval(w);
        if (!(g != kUndefinedConstraint && g >= eps)) ok = false;
      }
      if (ok) break;
      theta *= 1.0 - 1e-12;
    }
    if (theta < 1.0) {
      out.activated = true;
      for (auto& v : out.values) v = avg + theta * (v - avg);
      theta_total *= theta;
    }
  }
  out.theta = theta_total;
  return out;
}

FaceLimiterOutputScalar simplified_face_limiter(double face_left,
                                                double face_right, double avg,
                                                double omega1, double m,
                                                double M) {
  if (!(omega1 > 0.0 && omega1 < 0.5))
    throw std::invalid_argument("face weight must lie in (0, 1/2)");
  const double interior =
      (avg - omega1 * face_left - omega1 * face_right) / (1.0 - 2.0 * omega1);
  const double triple[3] = {face_left, face_right, interior};
  auto lim = scaling_limiter_scalar(std::span<const double>(triple, 3), avg, m, M);
  return {lim.theta, lim.activated, lim.values[0], lim.values[1],
          lim.values[2]};
}

FaceLimiterOutputSystem simplified_face_limiter(const State& face_left,
                                                const State& face_right,
                                                const State& avg, double omega1,
                                                const InvariantDomain& dom) {
  if (!(omega1 > 0.0 && omega1 < 0.5))
    throw std::invalid_argument("face weight must lie in (0, 1/2)");
  State interior = (1.0 / (1.0 - 2.0 * omega1)) *
                   (avg - omega1 * face_left - omega1 * face_right);
  const State triple[3] = {face_left, face_right, interior};
  auto lim = scaling_limiter_system(std::span<const State>(triple, 3), avg, dom);
  return {lim.theta, lim.activated, lim.values[0], lim.values[1],
          lim.values[2]};
}

std::vector<State> FluxPair::delta() const {
  std::vector<State> d(low.size());
  for (std::size_t i = 0; i < low.size(); ++i) d[i] = high[i] - low[i];
  return d;
}

InterfaceTheta zalesak_theta(std::span<const double> u_low_next,
                             std::span<const double> delta, double lambda,
                             double m, double M) {
  const std::size_t n = u_low_next.size();
  InterfaceTheta out;
  out.theta.assign(n + 1, 1.0);
  std::vector<double> Rp(n, 1.0), Rm(n, 1.0);
  for (std::size_t j = 0; j < n; ++j) {
    if (!(u_low_next[j] >= m && u_low_next[j] <= M)) {
      out.feasible = false;
      out.message = "low-order update escapes [m, M]";
      return out;
    }
    const double Pp = std::max(0.0, -delta[j + 1]) + std::max(0.0, delta[j]);
    const double Pm = std::min(0.0, -delta[j + 1]) + std::min(0.0, delta[j]);
    const double Qp = (M - u_low_next[j]) / lambda;
    const double Qm = (m - u_low_next[j]) / lambda;
    Rp[j] = Pp > 0.0 ? std::min(1.0, Qp / Pp) : 1.0;
    Rm[j] = Pm < 0.0 ? std::min(1.0, Qm / Pm) : 1.0;
  }
  for (std::size_t i = 0; i <= n; ++i) {
    const double left_Rp = i > 0 ? Rp[i - 1] : 1.0;
    const double left_Rm = i > 0 ? Rm[i - 1] : 1.0;
    const double right_Rp = i < n ? Rp[i] : 1.0;
    const double right_Rm = i < n ? Rm[i] : 1.0;
    out.theta[i] = delta[i] >= 0.0 ? std::min(right_Rp, left_Rm)
                                   : std::min(right_Rm, left_Rp);
  }
  return out;
}

InterfaceTheta parametrized_theta_scalar(std::span<const double> u_n,
                                         std::span<const double> f_low,
                                         std::span<const double> delta,
                                         double lambda, double m, double M,
                                         double eps_den) {
  const std::size_t n = u_n.size();
  InterfaceTheta out;
  out.theta.assign(n + 1, 1.0);
  std::vector<double> lam_plus(n, 1.0), lam_minus(n, 1.0);
  for (std::size_t j = 0; j < n; ++j) {
    const double dfl = lambda * (f_low[j + 1] - f_low[j]);
    const double gamma_M = M - u_n[j] + dfl;
    const double gamma_m = m - u_n[j] + dfl;
    if (gamma_M < 0.0 || gamma_m > 0.0) {
      out.feasible = false;
      out.message = "low-order update escapes [m, M]";
      return out;
    }
    const double dm = delta[j], dp = delta[j + 1];
    // upper bound
    double up_plus = 1.0, up_minus = 1.0;
    if (dp < 0.0) {
      const double den = lambda * std::max(0.0, dm) - lambda * dp + eps_den;
      up_plus = den > 0.0 ? std::min(1.0, gamma_M / den) : 1.0;
    }
    if (dm > 0.0) {
      const double den = lambda * dm - lambda * std::min(0.0, dp) + eps_den;
      up_minus = den > 0.0 ? std::min(1.0, gamma_M / den) : 1.0;
    }
    // lower bound
    double lo_plus = 1.0, lo_minus = 1.0;
    if (dp > 0.0) {
      const double den = lambda * std::min(0.0, dm) - lambda * dp - eps_den;
      lo_plus = den < 0.0 ? std::min(1.0, gamma_m / den) : 1.0;
    }
    if (dm < 0.0) {
      const double den = lambda * dm - lambda * std::max(0.0, dp) - eps_den;
      lo_minus = den < 0.0 ? std::min(1.0, gamma_m / den) : 1.0;
    }
    lam_plus[j] = std::min(up_plus, lo_plus);
    lam_minus[j] = std::min(up_minus, lo_minus);
  }
  for (std::size_t i = 0; i <= n; ++i) {
    const double a = i > 0 ? lam_plus[i - 1] : 1.0;
    const double b = i < n ? lam_minus[i] : 1.0;
    out.theta[i] = std::min(a, b);
  }
  return out;
}

InterfaceTheta parametrized_theta_euler(std::span<const State> u_n,
                                        const FluxPair& pair, double lambda,
                                        double gamma, double eps_rho,
                                        double eps_p, double eps_den) {
  const std::size_t n = u_n.size();
  InterfaceTheta out;
  out.theta.assign(n + 1, 1.0);
  std::vector<double> lam_plus(n, 1.0), lam_minus(n, 1.0);

  auto pressure_ok = [&](const State& u) {
    if (!(u.rho() > 0.0) || !u.finite()) return false;
    return (gamma - 1.0) * (u.energy() - u.momentum_sq() / (2.0 * u.rho())) >=
           eps_p;
  };

  for (std::size_t j = 0; j < n; ++j) {
    const State dm_s = pair.high[j] - pair.low[j];
    const State dp_s = pair.high[j + 1] - pair.low[j + 1];
    State low_next = u_n[j];
    low_next -= lambda * (pair.low[j + 1] - pair.low[j]);
    // Stage 1: density box via the scalar lower-bound parameters.
    const double gamma_rho = eps_rho - low_next[0];
    if (gamma_rho > 0.0 || !pressure_ok(low_next)) {
      out.feasible = false;
      out.message = "low-order update violates the positivity floors";
      return out;
    }
    const double dm = dm_s[0], dp = dp_s[0];
    double rho_plus = 1.0, rho_minus = 1.0;
    if (dp > 0.0) {
      const double den = lambda * std::min(0.0, dm) - lambda * dp - eps_den;
      rho_plus = den < 0.0 ? std::min(1.0, gamma_rho / den) : 1.0;
    }
    if (dm < 0.0) {
      const double den = lambda * dm - lambda * std::max(0.0, dp) - eps_den;
      rho_minus = den < 0.0 ? std::min(1.0, gamma_rho / den) : 1.0;
    }
    // Stage 2: rescale the box vertices until pressure holds.
    auto corrected = [&](double tm, double tp) {
      State u = low_next;
      u -= (lambda * tp) * dp_s;
      u += (lambda * tm) * dm_s;
      return u;
    };
    auto vertex_scale = [&](double am, double ap) {
      if (pressure_ok(corrected(am, ap))) return 1.0;
      return bisect_largest(
          [&](double r) { return pressure_ok(corrected(r * am, r * ap)); });
    };
    const double r1 = vertex_scale(0.0, rho_plus);
    const double r2 = vertex_scale(rho_minus, 0.0);
    const double r3 = vertex_scale(rho_minus, rho_plus);
    lam_minus[j] = std::min(r2, r3) * rho_minus;
    lam_plus[j] = std::min(r1, r3) * rho_plus;
  }
  for (std::size_t i = 0; i <= n; ++i) {
    const double a = i > 0 ? lam_plus[i - 1] : 1.0;
    const double b = i < n ? lam_minus[i] : 1.0;
    out.theta[i] = std::min(a, b);
  }
  return out;
}

double segment_theta(const std::function<double(const State&)>& g,
                     const State& base, const State& candidate, double eps,
                     ConstraintKind kind) {
  const double gb = g(base);
  if (!(gb >= eps)) throw std::domain_error("base state violates constraint");
  const double gc = g(candidate);
  if (gc != kUndefinedConstraint && gc >= eps) return 1.0;
  if (gc != kUndefinedConstraint && kind != ConstraintKind::QuasiConcave) {
    if (gb == gc) return 1.0;
    return std::clamp((gb - eps) / (gb - gc), 0.0, 1.0);
  }
  return bisect_largest([&](double t) {
    const double gt = g((1.0 - t) * base + t * candidate);
    return gt != kUndefinedConstraint && gt >= eps;
  });
}

namespace {

/// Pressure without exceptions: -inf marks an undefined value.
inline double euler_p(const State& u, double gamma) {
  if (!(u.rho() > 0.0) || !u.finite()) return kUndefinedConstraint;
  return (gamma - 1.0) * (u.energy() - u.momentum_sq() / (2.0 * u.rho()));
}

/// Tight segment theta for the plain Euler positivity domain; pb is the
/// precomputed base pressure. Semantics match the generic path: closed forms
/// for the two concave constraints, bisection when the candidate pressure is
/// undefined.
inline double euler_segment_theta(const State& base, double pb,
                                  const State& cand, double gamma,
                                  double eps_rho, double eps_p) {
  double theta = 1.0;
  if (cand.rho() < eps_rho)
    theta = (base.rho() - eps_rho) / (base.rho() - cand.rho());
  const double pc = euler_p(cand, gamma);
  if (pc == kUndefinedConstraint) {
    theta = std::min(theta, bisect_largest([&](double t) {
                       const State u = (1.0 - t) * base + t * cand;
                       return euler_p(u, gamma) >= eps_p;
                     }));
  } else if (pc < eps_p) {
    theta = std::min(theta, std::clamp((pb - eps_p) / (pb - pc), 0.0, 1.0));
  }
  return theta;
}

/// Shared driver for the segment-based limiters: per cell, candidate pairs
/// (low, high) attached to its two interfaces; theta per interface is the min
/// over constraints and the two adjacent cells.
template <typename LowState, typename HighState>
InterfaceTheta segment_limiter(std::size_t n, const InvariantDomain& dom,
                               const LowState& low_state,
                               const HighState& high_state) {
  InterfaceTheta out;
  out.theta.assign(n + 1, 1.0);
  std::vector<double> th_plus(n, 1.0), th_minus(n, 1.0);
  const bool fast = dom.euler_positivity && dom.constraints.size() == 2;
  const double eps_rho = fast ? dom.constraints[0].floor : 0.0;
  const double eps_p = fast ? dom.constraints[1].floor : 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const State lp = low_state(j, true), lm = low_state(j, false);
    if (fast) {
      const double plp = euler_p(lp, dom.gamma), plm = euler_p(lm, dom.gamma);
      if (!(lp.rho() >= eps_rho && plp >= eps_p && lm.rho() >= eps_rho &&
            plm >= eps_p)) {
        out.feasible = false;
        out.message = "low-order split states escape G (CFL too large)";
        return out;
      }
      const State hp = high_state(j, true), hm = high_state(j, false);
      th_plus[j] = euler_segment_theta(lp, plp, hp, dom.gamma, eps_rho, eps_p);
      th_minus[j] = euler_segment_theta(lm, plm, hm, dom.gamma, eps_rho, eps_p);
      continue;
    }
    if (!dom.contains(lp) || !dom.contains(lm)) {
      out.feasible = false;
      out.message = "low-order split states escape G (CFL too large)";
      return out;
    }
    const State hp = high_state(j, true), hm = high_state(j, false);
    for (const auto& con : dom.constraints) {
      th_plus[j] = std::min(
          th_plus[j], segment_theta(con.eval, lp, hp, con.floor, con.kind));
      th_minus[j] = std::min(
          th_minus[j], segment_theta(con.eval, lm, hm, con.floor, con.kind));
    }
  }
  for (std::size_t i = 0; i <= n; ++i) {
    const double a = i > 0 ? th_plus[i - 1] : 1.0;
    const double b = i < n ? th_minus[i] : 1.0;
    out.theta[i] = std::min(a, b);
  }
  return out;
}

}  // namespace

InterfaceTheta hu_adams_shu_interface_theta(std::span<const State> u_n,
                                            const FluxPair& pair, double lambda,
                                            const InvariantDomain& dom) {
  return segment_limiter(
      u_n.size(), dom,
      [&](std::size_t j, bool plus) {
        return plus ? u_n[j] - 2.0 * lambda * pair.low[j + 1]
                    : u_n[j] + 2.0 * lambda * pair.low[j];
      },
      [&](std::size_t j, bool plus) {
        return plus ? u_n[j] - 2.0 * lambda * pair.high[j + 1]
                    : u_n[j] + 2.0 * lambda * pair.high[j];
      });
}

InterfaceTheta monolithic_convex_interface_theta(std::span<const State> u_n,
                                                 const FluxPair& pair,
                                                 double lambda,
                                                 const SystemModel& sys,
                                                 const InvariantDomain& dom,
                                                 Direction n) {
  std::vector<State> f_cell(u_n.size());
  for (std::size_t j = 0; j < u_n.size(); ++j)
    f_cell[j] = flux(sys, u_n[j], n);
  return segment_limiter(
      u_n.size(), dom,
      [&](std::size_t j, bool plus) {
        return plus ? u_n[j] - 2.0 * lambda * (pair.low[j + 1] - f_cell[j])
                    : u_n[j] + 2.0 * lambda * (pair.low[j] - f_cell[j]);
      },
      [&](std::size_t j, bool plus) {
        return plus ? u_n[j] - 2.0 * lambda * (pair.high[j + 1] - f_cell[j])
                    : u_n[j] + 2.0 * lambda * (pair.high[j] - f_cell[j]);
      });
}

InterfaceTheta guermond_convex_interface_theta(std::span<const State> u_low_next,
                                               std::span<const State> delta,
                                               double lambda,
                                               const InvariantDomain& dom) {
  return segment_limiter(
      u_low_next.size(), dom,
      [&](std::size_t j, bool) { return u_low_next[j]; },
      [&](std::size_t j, bool plus) {
        return plus ? u_low_next[j] - 2.0 * lambda * delta[j + 1]
                    : u_low_next[j] + 2.0 * lambda * delta[j];
      });
}

}  // namespace idp

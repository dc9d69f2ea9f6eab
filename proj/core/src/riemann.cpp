#include "idp/riemann.hpp"

#include <cmath>
#include <stdexcept>

#include "idp/physics.hpp"

namespace idp {

namespace {

struct Prim {
  double rho, v, p, c;
};

Prim to_prim(const State& u, double gamma) {
  Prim w;
  w.rho = u.rho();
  w.v = u[1] / u[0];
  w.p = pressure(u, gamma);
  if (w.p <= 0.0) throw std::domain_error("nonpositive pressure");
  w.c = std::sqrt(gamma * w.p / w.rho);
  return w;
}

State to_cons(double rho, double v, double p, double gamma) {
  return State::euler1(rho, rho * v, p / (gamma - 1.0) + 0.5 * rho * v * v);
}

/// Toro's pressure function for one side and its derivative.
void side_function(double p, const Prim& w, double gamma, double& f,
                   double& df) {
  if (p > w.p) {  // shock
    const double A = 2.0 / ((gamma + 1.0) * w.rho);
    const double B = (gamma - 1.0) / (gamma + 1.0) * w.p;
    const double root = std::sqrt(A / (p + B));
    f = (p - w.p) * root;
    df = root * (1.0 - 0.5 * (p - w.p) / (p + B));
  } else {  // rarefaction
    const double pr = p / w.p;
    f = 2.0 * w.c / (gamma - 1.0) * (std::pow(pr, (gamma - 1.0) / (2.0 * gamma)) - 1.0);
    df = 1.0 / (w.rho * w.c) * std::pow(pr, -(gamma + 1.0) / (2.0 * gamma));
  }
}

double solve_star_pressure(const Prim& wl, const Prim& wr, double gamma) {
  const double dv = wr.v - wl.v;
  // Two-rarefaction initial guess, positively clamped.
  const double z = (gamma - 1.0) / (2.0 * gamma);
  double p =
      std::pow((wl.c + wr.c - 0.5 * (gamma - 1.0) * dv) /
                   (wl.c / std::pow(wl.p, z) + wr.c / std::pow(wr.p, z)),
               1.0 / z);
  if (!(p > 0.0) || !std::isfinite(p)) p = 0.5 * (wl.p + wr.p);
  double lo = 1e-300, hi = std::max({wl.p, wr.p, p}) * 1e8;
  for (int it = 0; it < 200; ++it) {
    double fl, dfl, fr, dfr;
    side_function(p, wl, gamma, fl, dfl);
    side_function(p, wr, gamma, fr, dfr);
    const double g = fl + fr + dv;
    if (g > 0.0)
      hi = p;
    else
      lo = p;
    const double step = g / (dfl + dfr);
    double pn = p - step;
    if (!(pn > lo && pn < hi)) pn = 0.5 * (lo + hi);  // bisection safeguard
    if (std::abs(pn - p) <= 1e-12 * p) return pn;
    p = pn;
  }
  throw std::runtime_error("Riemann star-pressure iteration did not converge");
}

bool generates_vacuum(const Prim& wl, const Prim& wr, double gamma) {
  return 2.0 * wl.c / (gamma - 1.0) + 2.0 * wr.c / (gamma - 1.0) <=
         wr.v - wl.v;
}

State sample_vacuum(const Prim& wl, const Prim& wr, double gamma, double xi) {
  const double gm1 = gamma - 1.0;
  const double s_starL = wl.v + 2.0 * wl.c / gm1;  // vacuum front (left fan)
  const double s_starR = wr.v - 2.0 * wr.c / gm1;
  if (xi <= wl.v - wl.c) return to_cons(wl.rho, wl.v, wl.p, gamma);
  if (xi < s_starL) {
    const double v = (gm1 * wl.v + 2.0 * (xi + wl.c)) / (gamma + 1.0);
    const double c = wl.c - 0.5 * gm1 * (v - wl.v);
    const double rho = wl.rho * std::pow(c / wl.c, 2.0 / gm1);
    const double p = wl.p * std::pow(c / wl.c, 2.0 * gamma / gm1);
    return to_cons(rho, v, p, gamma);
  }
  if (xi <= s_starR) return State::euler1(0.0, 0.0, 0.0);  // vacuum region
  if (xi < wr.v + wr.c) {
    const double v = (gm1 * wr.v + 2.0 * (xi - wr.c)) / (gamma + 1.0);
    const double c = wr.c + 0.5 * gm1 * (v - wr.v);
    const double rho = wr.rho * std::pow(c / wr.c, 2.0 / gm1);
    const double p = wr.p * std::pow(c / wr.c, 2.0 * gamma / gm1);
    return to_cons(rho, v, p, gamma);
  }
  return to_cons(wr.rho, wr.v, wr.p, gamma);
}

}  // namespace

double riemann_star_pressure(const State& uL, const State& uR, double gamma) {
  const Prim wl = to_prim(uL, gamma), wr = to_prim(uR, gamma);
  if (generates_vacuum(wl, wr, gamma)) return 0.0;
  return solve_star_pressure(wl, wr, gamma);
}

State exact_riemann_euler(const State& uL, const State& uR, double gamma,
                          double xi) {
  const Prim wl = to_prim(uL, gamma), wr = to_prim(uR, gamma);
  const double gm1 = gamma - 1.0, gp1 = gamma + 1.0;
  if (generates_vacuum(wl, wr, gamma)) return sample_vacuum(wl, wr, gamma, xi);

  const double ps = solve_star_pressure(wl, wr, gamma);
  double fl, dfl, fr, dfr;
  side_function(ps, wl, gamma, fl, dfl);
  side_function(ps, wr, gamma, fr, dfr);
  const double vs = 0.5 * (wl.v + wr.v) + 0.5 * (fr - fl);

  if (xi <= vs) {  // left of the contact
    if (ps > wl.p) {  // left shock
      const double sl =
          wl.v - wl.c * std::sqrt(gp1 / (2.0 * gamma) * ps / wl.p +
                                  gm1 / (2.0 * gamma));
      if (xi <= sl) return to_cons(wl.rho, wl.v, wl.p, gamma);
      const double rho = wl.rho * (ps / wl.p + gm1 / gp1) /
                         (gm1 / gp1 * ps / wl.p + 1.0);
      return to_cons(rho, vs, ps, gamma);
    }
    // left rarefaction
    const double c_star = wl.c * std::pow(ps / wl.p, gm1 / (2.0 * gamma));
    if (xi <= wl.v - wl.c) return to_cons(wl.rho, wl.v, wl.p, gamma);
    if (xi >= vs - c_star) {
      const double rho = wl.rho * std::pow(ps / wl.p, 1.0 / gamma);
      return to_cons(rho, vs, ps, gamma);
    }
    const double v = (gm1 * wl.v + 2.0 * (xi + wl.c)) / gp1;
    const double c = wl.c - 0.5 * gm1 * (v - wl.v);
    const double rho = wl.rho * std::pow(c / wl.c, 2.0 / gm1);
    const double p = wl.p * std::pow(c / wl.c, 2.0 * gamma / gm1);
    return to_cons(rho, v, p, gamma);
  }
  // right of the contact
  if (ps > wr.p) {  // right shock
    const double sr = wr.v + wr.c * std::sqrt(gp1 / (2.0 * gamma) * ps / wr.p +
                                              gm1 / (2.0 * gamma));
    if (xi >= sr) return to_cons(wr.rho, wr.v, wr.p, gamma);
    const double rho =
        wr.rho * (ps / wr.p + gm1 / gp1) / (gm1 / gp1 * ps / wr.p + 1.0);
    return to_cons(rho, vs, ps, gamma);
  }
  // right rarefaction
  const double c_star = wr.c * std::pow(ps / wr.p, gm1 / (2.0 * gamma));
  if (xi >= wr.v + wr.c) return to_cons(wr.rho, wr.v, wr.p, gamma);
  if (xi <= vs + c_star) {
    const double rho = wr.rho * std::pow(ps / wr.p, 1.0 / gamma);
    return to_cons(rho, vs, ps, gamma);
  }
  const double v = (gm1 * wr.v + 2.0 * (xi - wr.c)) / gp1;
  const double c = wr.c + 0.5 * gm1 * (v - wr.v);
  const double rho = wr.rho * std::pow(c / wr.c, 2.0 / gm1);
  const double p = wr.p * std::pow(c / wr.c, 2.0 * gamma / gm1);
  return to_cons(rho, v, p, gamma);
}

}  // namespace idp

#include "idp/problems.hpp"

#include <cmath>
#include <stdexcept>

#include "idp/quadrature.hpp"
#include "idp/riemann.hpp"

namespace idp {

namespace {

constexpr double kGamma = 1.4;  // all Euler benchmarks

State euler_prim(double rho, double v, double p) {
  return State::euler1(rho, rho * v, p / (kGamma - 1.0) + 0.5 * rho * v * v);
}

State euler_prim2(double rho, double v1, double v2, double p) {
  return State::euler2(rho, rho * v1, rho * v2,
                       p / (kGamma - 1.0) + 0.5 * rho * (v1 * v1 + v2 * v2));
}

std::function<State(int, int, double, double)> pointwise(
    std::function<State(double)> f) {
  return [f = std::move(f)](int, int, double x, double) { return f(x); };
}

ProblemSetup riemann_1d(const std::string& name, double x0, State left,
                        State right, double xa, double xb, double t_final) {
  ProblemSetup p;
  p.name = name;
  p.sys = SystemModel::euler1d(kGamma);
  p.grid.dim = 1;
  p.grid.x0 = xa;
  p.grid.x1 = xb;
  p.grid.bc[0].kind = BcKind::Outflow;
  p.grid.bc[1].kind = BcKind::Outflow;
  p.t_final = t_final;
  p.domain = InvariantDomain::euler(kGamma);
  p.ic_factory = [x0, left, right](const Grid&) {
    return pointwise([x0, left, right](double x) {
      return x < x0 ? left : right;
    });
  };
  p.exact = [x0, left, right](double x, double t) {
    if (t <= 0.0) return x < x0 ? left : right;
    return exact_riemann_euler(left, right, kGamma, (x - x0) / t);
  };
  return p;
}

}  // namespace

ProblemSetup make_problem(const std::string& name,
                          const std::map<std::string, double>& overrides) {
  auto param = [&overrides](const std::string& key, double dflt) {
    auto it = overrides.find(key);
    return it == overrides.end() ? dflt : it->second;
  };

  if (name == "sod") {
    auto p = riemann_1d("sod", 0.5, euler_prim(1.0, 0.0, 1.0),
                        euler_prim(0.125, 0.0, 0.1), 0.0, 1.0, 0.2);
    p.grid.nx = 200;
    return p;
  }
  if (name == "leblanc") {
    auto p = riemann_1d("leblanc", 0.0, euler_prim(2.0, 0.0, 1e9),
                        euler_prim(0.001, 0.0, 1e-12), -10.0, 10.0, 0.001);
    p.grid.nx = 4000;
    return p;
  }
  if (name == "double_rarefaction") {
    auto p = riemann_1d("double_rarefaction", 0.5, euler_prim(7.0, -100.0, 0.01),
                        euler_prim(7.0, 100.0, 0.01), 0.0, 1.0, 0.003);
    p.grid.nx = 100;
    return p;
  }
  if (name == "advection_sine") {
    ProblemSetup p;
    p.name = name;
    p.sys = SystemModel::advection(1.0);
    p.grid.dim = 1;
    p.grid.x0 = 0.0;
    p.grid.x1 = 1.0;
    p.grid.nx = 100;
    p.grid.bc[0].kind = p.grid.bc[1].kind = BcKind::Periodic;
    p.t_final = 1.0;
    p.smooth = true;
    p.bound_lo = 0.1;
    p.bound_hi = 0.9;
    p.domain = InvariantDomain::scalar_bounds(0.1, 0.9);
    auto u0 = [](double x) {
      return State::scalar(0.5 + 0.4 * std::sin(2.0 * M_PI * x));
    };
    p.ic_factory = [u0](const Grid&) { return pointwise(u0); };
    p.exact = [u0](double x, double t) { return u0(x - t); };
    return p;
  }
  if (name == "density_wave") {
    ProblemSetup p;
    p.name = name;
    p.sys = SystemModel::euler1d(kGamma);
    p.grid.dim = 1;
    p.grid.x0 = 0.0;
    p.grid.x1 = 1.0;
    p.grid.nx = 80;
    p.grid.bc[0].kind = p.grid.bc[1].kind = BcKind::Periodic;
    p.t_final = 0.1;
    p.smooth = true;
    p.domain = InvariantDomain::euler(kGamma);
    auto prof = [](double x) {
      return euler_prim(2.0 + std::sin(2.0 * M_PI * x), 1.0, 1.0);
    };
    p.ic_factory = [prof](const Grid&) { return pointwise(prof); };
    p.exact = [prof](double x, double t) { return prof(x - t); };
    return p;
  }
  if (name == "burgers_riemann") {
    ProblemSetup p;
    p.name = name;
    p.sys = SystemModel::burgers();
    p.grid.dim = 1;
    p.grid.x0 = -1.0;
    p.grid.x1 = 1.0;
    p.grid.nx = 400;
    p.grid.bc[0].kind = p.grid.bc[1].kind = BcKind::Outflow;
    p.t_final = 0.3;
    p.bound_lo = -1.0;
    p.bound_hi = 1.0;
    p.domain = InvariantDomain::scalar_bounds(-1.0, 1.0);
    p.ic_factory = [](const Grid&) {
      return pointwise([](double x) { return State::scalar(x < 0.0 ? -1.0 : 1.0); });
    };
    // entropy solution: the rarefaction fan x/t
    p.exact = [](double x, double t) {
      if (t <= 0.0) return State::scalar(x < 0.0 ? -1.0 : 1.0);
      if (x <= -t) return State::scalar(-1.0);
      if (x >= t) return State::scalar(1.0);
      return State::scalar(x / t);
    };
    return p;
  }
  if (name == "sedov2d") {
    // Quadrant variant of the point blast: reflective symmetry planes at
    // x=0 and y=0; the corner cell carries a quarter of the total energy
    // 0.979264 chosen so the shock front is a circle of radius 1 at t=1.
    // External-reference setup, not a golden value.
    ProblemSetup p;
    p.name = name;
    p.sys = SystemModel::euler2d(kGamma);
    p.grid.dim = 2;
    p.grid.x0 = p.grid.y0 = 0.0;
    p.grid.x1 = p.grid.y1 = 1.1;
    p.grid.nx = p.grid.ny = 80;
    p.grid.bc[0].kind = BcKind::Reflective;
    p.grid.bc[2].kind = BcKind::Reflective;
    p.grid.bc[1].kind = BcKind::Outflow;
    p.grid.bc[3].kind = BcKind::Outflow;
    p.t_final = 1.0;
    p.domain = InvariantDomain::euler(kGamma);
    const double e_total = param("blast_energy", 0.979264);
    const double e_ambient = param("ambient_energy", 1e-12);
    p.external_params = {{"blast_energy", e_total},
                         {"ambient_energy", e_ambient}};
    p.ic_factory = [e_total, e_ambient](const Grid& g) {
      const double e_corner = 0.25 * e_total / (g.dx() * g.dy());
      return [e_corner, e_ambient](int ci, int cj, double, double) {
        return State::euler2(1.0, 0.0, 0.0,
                             ci == 0 && cj == 0 ? e_corner : e_ambient);
      };
    };
    return p;
  }
  if (name == "jet_mach2000" || name == "jet_mach2000_lowp") {
    // High speed astrophysical jet; inflow strip on the lower-left boundary
    // with reflective symmetry at y=0. External-reference setup.
    ProblemSetup p;
    p.name = name;
    p.sys = SystemModel::euler2d(kGamma);
    p.grid.dim = 2;
    p.grid.x0 = p.grid.y0 = 0.0;
    p.grid.x1 = 1.0;
    p.grid.y1 = 0.25;
    p.grid.nx = 200;
    p.grid.ny = 50;
    p.t_final = 0.001;
    p.domain = InvariantDomain::euler(kGamma);
    const double p_inf =
        param("background_pressure", name == "jet_mach2000" ? 0.4127 : 1e-6);
    const double rho_jet = param("jet_density", 5.0);
    const double v_jet = param("jet_speed", 800.0);
    const double rho_amb = param("ambient_density", 0.5);
    const double strip = param("jet_halfwidth", 0.05);
    p.external_params = {{"background_pressure", p_inf},
                         {"jet_density", rho_jet},
                         {"jet_speed", v_jet},
                         {"ambient_density", rho_amb},
                         {"jet_halfwidth", strip}};
    const State ambient = euler_prim2(rho_amb, 0.0, 0.0, p_inf);
    const State jet = euler_prim2(rho_jet, v_jet, 0.0, p_inf);
    p.grid.bc[0].kind = BcKind::InflowDirichlet;
    p.grid.bc[0].inflow_profile = [ambient, jet, strip](double y) {
      return y <= strip ? jet : ambient;
    };
    p.grid.bc[1].kind = BcKind::Outflow;
    p.grid.bc[2].kind = BcKind::Reflective;
    p.grid.bc[3].kind = BcKind::Outflow;
    p.ic_factory = [ambient](const Grid&) {
      return [ambient](int, int, double, double) { return ambient; };
    };
    return p;
  }
  if (name == "shock_vortex") {
    // Mach 1.1 shock at x=0.5 with an isentropic vortex centered upstream;
    // vortex parameters adopted from the cited reference and overridable —
    // the reproduction is qualitative only.
    ProblemSetup p;
    p.name = name;
    p.sys = SystemModel::euler2d(kGamma);
    p.grid.dim = 2;
    p.grid.x0 = p.grid.y0 = 0.0;
    p.grid.x1 = 2.0;
    p.grid.y1 = 1.0;
    p.grid.nx = 450;
    p.grid.ny = 225;
    p.t_final = 0.6;
    p.domain = InvariantDomain::euler(kGamma);
    const double mach = param("shock_mach", 1.1);
    const double eps = param("vortex_strength", 10.0828);
    const double rc = param("vortex_radius", 0.05);
    const double decay = param("vortex_decay", 0.204);
    const double xc = param("vortex_x", 0.25);
    const double yc = param("vortex_y", 0.5);
    p.external_params = {{"shock_mach", mach},      {"vortex_strength", eps},
                         {"vortex_radius", rc},     {"vortex_decay", decay},
                         {"vortex_x", xc},          {"vortex_y", yc}};
    const double rho_l = 1.0, p_l = 1.0;
    const double v_l = mach * std::sqrt(kGamma);
    const double m2 = mach * mach;
    const double rho_r = rho_l * (kGamma + 1.0) * m2 / (2.0 + (kGamma - 1.0) * m2);
    const double p_r = p_l * (1.0 + 2.0 * kGamma / (kGamma + 1.0) * (m2 - 1.0));
    const double v_r = v_l * (2.0 + (kGamma - 1.0) * m2) / ((kGamma + 1.0) * m2);
    p.ic_factory = [=](const Grid&) {
      return [=](int, int, double x, double y) {
        if (x >= 0.5) return euler_prim2(rho_r, v_r, 0.0, p_r);
        const double xb = x - xc, yb = y - yc;
        const double tau = std::sqrt(xb * xb + yb * yb) / rc;
        const double ex = std::exp(decay * (1.0 - tau * tau));
        const double dv1 = eps / rc * ex * yb;
        const double dv2 = -eps / rc * ex * xb;
        const double T0 = p_l / rho_l;
        const double dT = -(kGamma - 1.0) * eps * eps / (4.0 * decay * kGamma) *
                          ex * ex;
        const double T = T0 + dT;
        const double rho = rho_l * std::pow(T / T0, 1.0 / (kGamma - 1.0));
        const double pr = p_l * std::pow(T / T0, kGamma / (kGamma - 1.0));
        return euler_prim2(rho, v_l + dv1, dv2, pr);
      };
    };
    p.grid.bc[0].kind = BcKind::InflowDirichlet;
    p.grid.bc[0].inflow_state = euler_prim2(rho_l, v_l, 0.0, p_l);
    p.grid.bc[1].kind = BcKind::Outflow;
    p.grid.bc[2].kind = BcKind::Reflective;
    p.grid.bc[3].kind = BcKind::Reflective;
    return p;
  }
  throw std::invalid_argument("unknown problem: " + name);
}

std::vector<std::string> problem_names() {
  return {"sod",          "leblanc",        "double_rarefaction",
          "advection_sine", "density_wave", "burgers_riemann",
          "sedov2d",      "jet_mach2000",   "jet_mach2000_lowp",
          "shock_vortex"};
}

double error_norm(const std::vector<double>& cell_values, const Grid& grid,
                  const std::function<double(double)>& reference,
                  NormKind norm) {
  if (static_cast<int>(cell_values.size()) != grid.nx)
    throw std::invalid_argument("field/grid size mismatch");
  static const QuadratureRule1D gauss5 = gauss_legendre(5);
  double acc = 0.0;
  for (int i = 0; i < grid.nx; ++i) {
    double ref = 0.0;
    for (std::size_t q = 0; q < gauss5.nodes.size(); ++q)
      ref += gauss5.weights[q] *
             reference(grid.xc(i) + gauss5.nodes[q] * grid.dx());
    const double e = std::abs(cell_values[i] - ref);
    switch (norm) {
      case NormKind::L1: acc += e * grid.dx(); break;
      case NormKind::L2: acc += e * e * grid.dx(); break;
      case NormKind::Linf: acc = std::max(acc, e); break;
    }
  }
  return norm == NormKind::L2 ? std::sqrt(acc) : acc;
}

double error_norm_pointwise(const std::vector<double>& values, const Grid& grid,
                            const std::function<double(double)>& reference,
                            NormKind norm) {
  if (static_cast<int>(values.size()) != grid.nx)
    throw std::invalid_argument("field/grid size mismatch");
  double acc = 0.0;
  for (int i = 0; i < grid.nx; ++i) {
    const double e = std::abs(values[i] - reference(grid.xc(i)));
    switch (norm) {
      case NormKind::L1: acc += e * grid.dx(); break;
      case NormKind::L2: acc += e * e * grid.dx(); break;
      case NormKind::Linf: acc = std::max(acc, e); break;
    }
  }
  return norm == NormKind::L2 ? std::sqrt(acc) : acc;
}

}  // namespace idp

#include "idp/fd_solver.hpp"

#include <algorithm>
#include <cmath>

#include "idp/parallel.hpp"
#include "idp/weno.hpp"

namespace idp {

FDSolver::FDSolver(const SystemModel& sys, const Grid& grid, SchemeKind scheme,
                   NumericalFlux low_flux, LimiterKind limiter,
                   InvariantDomain dom, double bound_lo, double bound_hi,
                   int threads)
    : sys_(sys),
      grid_(grid),
      scheme_(scheme),
      low_flux_(low_flux),
      limiter_(limiter),
      dom_(std::move(dom)),
      m_(bound_lo),
      M_(bound_hi),
      threads_(std::max(1, threads)) {
  if (scheme_ == SchemeKind::DG)
    throw std::invalid_argument("FDSolver handles first_order and weno5 only");
  if (scheme_ == SchemeKind::FirstOrder && limiter_ != LimiterKind::None)
    throw std::invalid_argument("first order scheme takes no limiter");
  if (is_scaling_limiter(limiter_))
    throw std::invalid_argument("scaling limiters require the DG scheme");
  grid_.validate(scheme_ == SchemeKind::Weno5 ? 5 : 1);
}

FDField FDSolver::init(
    const std::function<State(int, int, double, double)>& ic) const {
  FDField f;
  f.resize(grid_.nx, grid_.dim == 2 ? grid_.ny : 1, sys_.components());
  for (int j = 0; j < f.ny; ++j)
    for (int i = 0; i < f.nx; ++i)
      f.set(i, j, ic(i, j, grid_.xc(i), grid_.yc(j)));
  return f;
}

void FDSolver::extract_line(const FDField& f, int axis, int index,
                            std::vector<State>& line) const {
  const int ng = ghosts();
  const int n = axis == 0 ? f.nx : f.ny;
  line.resize(n + 2 * ng);
  auto cell = [&](int k) { return axis == 0 ? f.get(k, index) : f.get(index, k); };
  for (int k = 0; k < n; ++k) line[ng + k] = cell(k);

  const int side_lo = axis == 0 ? 0 : 2;
  const int side_hi = axis == 0 ? 1 : 3;
  const int mom = axis == 0 ? 1 : 2;
  const double tangential =
      axis == 0 ? grid_.yc(index) : grid_.xc(index);
  auto fill = [&](int side, bool low) {
    const auto& bc = grid_.bc[side];
    for (int g = 0; g < ng; ++g) {
      const int dst = low ? ng - 1 - g : n + ng + g;
      State u;
      switch (bc.kind) {
        case BcKind::Periodic:
          u = cell(low ? (n - 1 - g % n + n) % n : (g % n));
          break;
        case BcKind::Outflow:
          u = cell(low ? 0 : n - 1);
          break;
        case BcKind::Reflective:
          u = cell(low ? std::min(g, n - 1) : n - 1 - std::min(g, n - 1));
          u.c[mom] = -u.c[mom];
          break;
        case BcKind::InflowDirichlet:
          u = bc.inflow(tangential);
          break;
      }
      line[dst] = u;
    }
  };
  fill(side_lo, true);
  fill(side_hi, false);
}

FDSolver::LineResult FDSolver::sweep_line(std::vector<State>& line, int n,
                                          double lambda_eff,
                                          double alpha_global, Direction dir,
                                          bool apply_correction) const {
  LineResult res;
  const int ng = ghosts();
  const int m = static_cast<int>(line.size());
  const int nc = sys_.components();

  if (scheme_ == SchemeKind::FirstOrder) {
    res.flux.resize(n + 1);
    for (int i = 0; i <= n; ++i)
      res.flux[i] =
          numerical_flux(low_flux_, sys_, line[ng + i - 1], line[ng + i], dir);
    return res;
  }

  // WENO5 path: extended cell range [lo, lo + next) with one extra cell per
  // side so every update interface sees both adjacent cells' parameters.
  const int lo = ng - 1;
  const int next = n + 2;
  std::vector<State> f_low(next + 1), f_high(next + 1);
  {
    // cached physical flux and wave speed per padded cell
    std::vector<State> pf(m);
    std::vector<double> pa(m);
    const bool global_lf = low_flux_.kind == FluxKind::GlobalLaxFriedrichs;
    for (int j = 0; j < m; ++j) {
      pf[j] = flux(sys_, line[j], dir);
      pa[j] = global_lf ? low_flux_.alpha_global
                        : max_wavespeed(sys_, line[j], dir);
    }
    const auto fh = weno5_interface_fluxes(line, sys_, alpha_global);
    for (int r = 0; r <= next; ++r) {
      const int i = lo + r;  // absolute interface between cells i-1, i
      const double a = std::max(pa[i - 1], pa[i]);
      State f = pf[i - 1] + pf[i];
      f -= a * (line[i] - line[i - 1]);
      f_low[r] = 0.5 * f;
      f_high[r] = fh[i];
    }
  }
  std::span<const State> cells(&line[lo], next);

  InterfaceTheta th;
  switch (apply_correction ? limiter_ : LimiterKind::None) {
    case LimiterKind::None: {
      th.theta.assign(next + 1, 1.0);
      break;
    }
    case LimiterKind::Zalesak:
    case LimiterKind::Parametrized: {
      if (sys_.is_scalar()) {
        std::vector<double> u(next), fl(next + 1), dl(next + 1);
        for (int r = 0; r < next; ++r) u[r] = cells[r][0];
        for (int r = 0; r <= next; ++r) {
          fl[r] = f_low[r][0];
          dl[r] = f_high[r][0] - f_low[r][0];
        }
        if (limiter_ == LimiterKind::Zalesak) {
          std::vector<double> u_low(next);
          for (int r = 0; r < next; ++r)
            u_low[r] = u[r] - lambda_eff * (fl[r + 1] - fl[r]);
          th = zalesak_theta(u_low, dl, lambda_eff, m_, M_);
        } else {
          th = parametrized_theta_scalar(u, fl, dl, lambda_eff, m_, M_);
        }
      } else {
        if (limiter_ == LimiterKind::Zalesak) {
          res.ok = false;
          res.message = "Zalesak limiter is scalar-only";
          return res;
        }
        FluxPair pair{f_low, f_high};
        // Positivity thresholds per the min(., 1e-13) convention, from the
        // low-order update on this line.
        double eps_rho = 1e-13, eps_p = 1e-13;
        for (int r = 0; r < next; ++r) {
          State ul = cells[r] - lambda_eff * (f_low[r + 1] - f_low[r]);
          eps_rho = std::min(eps_rho, ul.rho());
          if (ul.rho() > 0.0)
            eps_p = std::min(eps_p, pressure(ul, sys_.gamma));
        }
        th = parametrized_theta_euler(cells, pair, lambda_eff, sys_.gamma,
                                      eps_rho, eps_p);
      }
      break;
    }
    case LimiterKind::HuAdamsShu: {
      FluxPair pair{f_low, f_high};
      th = hu_adams_shu_interface_theta(cells, pair, lambda_eff, dom_);
      break;
    }
    case LimiterKind::Monolithic: {
      FluxPair pair{f_low, f_high};
      th = monolithic_convex_interface_theta(cells, pair, lambda_eff, sys_,
                                             dom_, dir);
      break;
    }
    case LimiterKind::Guermond: {
      std::vector<State> u_low(next), delta(next + 1);
      for (int r = 0; r <= next; ++r) delta[r] = f_high[r] - f_low[r];
      for (int r = 0; r < next; ++r)
        u_low[r] = cells[r] - lambda_eff * (f_low[r + 1] - f_low[r]);
      th = guermond_convex_interface_theta(u_low, delta, lambda_eff, dom_);
      break;
    }
    default: {
      res.ok = false;
      res.message = "limiter incompatible with the WENO5 scheme";
      return res;
    }
  }
  if (!th.feasible) {
    res.ok = false;
    res.message = th.message;
    return res;
  }

  res.flux.resize(n + 1);
  for (int i = 0; i <= n; ++i) {
    const int r = i + 1;  // absolute interface ng+i == relative r in [1, next]
    const double theta = th.theta[r];
    res.theta_min = std::min(res.theta_min, theta);
    res.theta_sum += theta;
    res.theta_count += 1;
    if (theta < 1.0) res.limited += 1;
    State f = f_low[r];
    f += theta * (f_high[r] - f_low[r]);
    res.flux[i] = f;
  }
  (void)nc;
  (void)m;
  return res;
}

FDStageInfo FDSolver::euler_stage(const FDField& in, FDField& out, double dt,
                                  bool apply_limiter) const {
  FDStageInfo info;
  info.boundary_flux_integral.n = in.ncomp;
  const int nx = in.nx, ny = in.ny;
  const double dx = grid_.dx(), dy = grid_.dy();
  const bool two_d = grid_.dim == 2;
  const double lam_x = dt / dx;
  const double lam_y = two_d ? dt / dy : 0.0;

  double a1 = 0.0, a2 = 0.0;
  wavespeeds(in, a1, a2);
  if (scheme_ == SchemeKind::FirstOrder) {
    // a-priori CFL refusal for the provably IDP first order scheme
    const double lam_sum = lam_x * a1 + lam_y * a2;
    if (lam_sum > low_flux_.c0() * (1.0 + 1e-12)) {
      info.ok = false;
      info.message = "CFL violation: required dt <= " +
                     std::to_string(dt * low_flux_.c0() / lam_sum);
      return info;
    }
  }

  // In 2D the update splits as 1/2 (x half-step) + 1/2 (y half-step), so the
  // per-direction limiter math sees a doubled lambda.
  const double lam_eff_x = two_d ? 2.0 * lam_x : lam_x;
  const double lam_eff_y = 2.0 * lam_y;

  std::vector<LineResult> xlines(ny), ylines(two_d ? nx : 0);
  {
    std::vector<char> fail(std::max(nx, ny), 0);
    parallel_for(ny, threads_, [&](int j) {
      try {
        std::vector<State> line;
        extract_line(in, 0, j, line);
        xlines[j] =
            sweep_line(line, nx, lam_eff_x, a1, Direction::xplus(), apply_limiter);
      } catch (const std::exception& e) {
        xlines[j].ok = false;
        xlines[j].message = e.what();
      }
    });
    if (two_d) {
      parallel_for(nx, threads_, [&](int i) {
        try {
          std::vector<State> line;
          extract_line(in, 1, i, line);
          ylines[i] = sweep_line(line, ny, lam_eff_y, a2, Direction::yplus(),
                                 apply_limiter);
        } catch (const std::exception& e) {
          ylines[i].ok = false;
          ylines[i].message = e.what();
        }
      });
    }
    (void)fail;
  }
  for (const auto& lr : xlines)
    if (!lr.ok) {
      info.ok = false;
      info.message = lr.message;
      return info;
    }
  for (const auto& lr : ylines)
    if (!lr.ok) {
      info.ok = false;
      info.message = lr.message;
      return info;
    }

  out.resize(nx, ny, in.ncomp);
  bool feasible = true;
  std::string fail_msg;
  const bool fast_euler = dom_.euler_positivity && dom_.constraints.size() == 2;
  const double floor_rho = fast_euler ? dom_.constraints[0].floor : 0.0;
  const double floor_p = fast_euler ? dom_.constraints[1].floor : 0.0;
  const double gm1 = sys_.gamma - 1.0;
  double min_rho = std::numeric_limits<double>::infinity(), min_p = min_rho;
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      State u = in.get(i, j);
      u -= lam_x * (xlines[j].flux[i + 1] - xlines[j].flux[i]);
      if (two_d) u -= lam_y * (ylines[i].flux[j + 1] - ylines[i].flux[j]);
      out.set(i, j, u);
      if (fast_euler) {
        const double rho = u.rho();
        const double p =
            rho > 0.0 ? gm1 * (u.energy() - u.momentum_sq() / (2.0 * rho))
                      : -std::numeric_limits<double>::infinity();
        min_rho = std::min(min_rho, rho);
        min_p = std::min(min_p, p);
        if (apply_limiter && feasible &&
            (!u.finite() || rho < floor_rho || p < floor_p)) {
          feasible = false;
          fail_msg = "updated state escaped G at cell (" + std::to_string(i) +
                     "," + std::to_string(j) + ")";
        }
      } else if (apply_limiter && feasible &&
                 (!u.finite() || !dom_.contains(u))) {
        feasible = false;
        fail_msg = "updated state escaped G at cell (" + std::to_string(i) +
                   "," + std::to_string(j) + ")";
      }
    }
  }
  if (fast_euler) {
    info.stage_min = {min_rho, min_p};
  } else {
    info.stage_min.assign(dom_.constraints.size(),
                          std::numeric_limits<double>::infinity());
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i) {
        const State u = out.get(i, j);
        for (std::size_t k = 0; k < dom_.constraints.size(); ++k)
          info.stage_min[k] =
              std::min(info.stage_min[k], dom_.constraints[k].eval(u));
      }
  }
  if (!feasible) {
    info.ok = false;
    info.message = fail_msg;
    return info;
  }

  for (const auto& lr : xlines) {
    info.boundary_flux_integral += dy * (lr.flux.back() - lr.flux.front());
    info.theta_min = std::min(info.theta_min, lr.theta_min);
    info.theta_sum += lr.theta_sum;
    info.theta_count += lr.theta_count;
    info.limited_interfaces += lr.limited;
  }
  for (const auto& lr : ylines) {
    info.boundary_flux_integral += dx * (lr.flux.back() - lr.flux.front());
    info.theta_min = std::min(info.theta_min, lr.theta_min);
    info.theta_sum += lr.theta_sum;
    info.theta_count += lr.theta_count;
    info.limited_interfaces += lr.limited;
  }
  return info;
}

void FDSolver::wavespeeds(const FDField& f, double& a1, double& a2) const {
  a1 = a2 = 0.0;
  for (int j = 0; j < f.ny; ++j)
    for (int i = 0; i < f.nx; ++i) {
      const State u = f.get(i, j);
      if (sys_.is_euler()) {
        if (u.rho() <= 0.0 || !u.finite()) continue;
        if (pressure(u, sys_.gamma) <= 0.0) continue;
      }
      a1 = std::max(a1, max_wavespeed(sys_, u, Direction::xplus()));
      if (grid_.dim == 2)
        a2 = std::max(a2, max_wavespeed(sys_, u, Direction::yplus()));
    }
}

double FDSolver::certified_lambda_sum() const {
  double bound = low_flux_.c0();
  if (scheme_ == SchemeKind::Weno5) {
    switch (limiter_) {
      case LimiterKind::HuAdamsShu:
      case LimiterKind::Monolithic:
        bound = 0.5 * low_flux_.c0();
        break;
      default:
        bound = low_flux_.c0();
        break;
    }
    if (grid_.dim == 2) bound *= 0.5;  // the 1/2 + 1/2 directional split
  }
  return bound;
}

}  // namespace idp

#include "idp/stepper.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace idp {

namespace {

double pairwise_sum(const std::vector<double>& v, std::size_t lo,
                    std::size_t hi) {
  if (hi - lo <= 8) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += v[i];
    return s;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

}  // namespace

std::vector<double> default_floors(
    const InvariantDomain& dom, const std::vector<State>& initial_values,
    const std::map<std::string, double>& overrides) {
  std::vector<double> floors(dom.constraints.size(), 0.0);
  for (std::size_t i = 0; i < dom.constraints.size(); ++i) {
    const auto& con = dom.constraints[i];
    auto it = overrides.find(con.name);
    if (it != overrides.end()) {
      floors[i] = it->second;
      continue;
    }
    double scale = std::numeric_limits<double>::infinity();
    for (const auto& u : initial_values) scale = std::min(scale, con.eval(u));
    if (!std::isfinite(scale) || scale <= 0.0)
      floors[i] = 0.0;
    else
      floors[i] = 1e-13 * scale;
  }
  return floors;
}

Simulation::Simulation(const RunConfig& cfg, const ProblemSetup& prob)
    : cfg_(cfg), prob_(prob), grid_(prob.grid) {
  validate_config(cfg_);
  if (!cfg_.resolution.empty()) {
    grid_.nx = cfg_.resolution[0];
    if (grid_.dim == 2)
      grid_.ny = cfg_.resolution.size() > 1 ? cfg_.resolution[1]
                                            : cfg_.resolution[0];
  }
  if (cfg_.t_final >= 0.0) prob_.t_final = cfg_.t_final;

  dom_ = prob_.domain;
  if (cfg_.entropy_constraint && prob_.sys.is_euler()) {
    // S_min from the initial data, with a round-off guard.
    double smin = std::numeric_limits<double>::infinity();
    auto ic = prob_.ic_factory(grid_);
    for (int j = 0; j < (grid_.dim == 2 ? grid_.ny : 1); ++j)
      for (int i = 0; i < grid_.nx; ++i) {
        const State u = ic(i, j, grid_.xc(i), grid_.yc(j));
        const double p = pressure(u, prob_.sys.gamma);
        smin = std::min(smin, std::log(p / std::pow(u.rho(), prob_.sys.gamma)));
      }
    dom_ = InvariantDomain::euler_entropy(prob_.sys.gamma, smin - 1e-12);
  }

  const NumericalFlux nf = cfg_.flux == FluxKind::GlobalLaxFriedrichs
                               ? NumericalFlux::global_lf(cfg_.lf_alpha)
                               : NumericalFlux{cfg_.flux, 0.0};

  // Build the scheme and the initial data, then apply the floor convention.
  auto ic = prob_.ic_factory(grid_);
  std::vector<State> init_vals;
  if (cfg_.scheme == SchemeKind::DG && grid_.dim == 1) {
    dg1_ = std::make_unique<DGSolver1D>(prob_.sys, grid_, cfg_.dg_degree, nf,
                                        dom_, cfg_.limiter);
    d1v_[0] = dg1_->project([&](double x) { return ic(0, 0, x, 0.0); });
    for (int c = 0; c < grid_.nx; ++c)
      for (int nd = 0; nd < d1v_[0].np; ++nd)
        init_vals.push_back(d1v_[0].state_at(c, nd));
  } else if (cfg_.scheme == SchemeKind::DG) {
    dg2_ = std::make_unique<DGSolver2D>(prob_.sys, grid_, cfg_.dg_degree, nf,
                                        dom_, cfg_.decomposition, cfg_.threads,
                                        cfg_.limiter);
    d2v_[0] = dg2_->project(ic);
    for (int cj = 0; cj < grid_.ny; ++cj)
      for (int ci = 0; ci < grid_.nx; ++ci)
        for (int nd = 0; nd < d2v_[0].np * d2v_[0].np; ++nd)
          init_vals.push_back(d2v_[0].state_at(ci, cj, nd));
  } else {
    fd_ = std::make_unique<FDSolver>(prob_.sys, grid_, cfg_.scheme, nf,
                                     cfg_.limiter, dom_, prob_.bound_lo,
                                     prob_.bound_hi, cfg_.threads);
    fdv_[0] = fd_->init(ic);
    for (int j = 0; j < fdv_[0].ny; ++j)
      for (int i = 0; i < fdv_[0].nx; ++i) init_vals.push_back(fdv_[0].get(i, j));
  }
  const auto floors = default_floors(dom_, init_vals, cfg_.floors);
  dom_ = dom_.with_floors(floors);
  if (dg1_) dg1_->domain() = dom_;
  if (dg2_) dg2_->domain() = dom_;
  if (fd_) fd_->domain() = dom_;

  report_.problem = prob_.name;
  report_.scheme = to_string(cfg_.scheme);
  report_.limiter = to_string(cfg_.limiter);
  report_.dim = grid_.dim;
  report_.nx = grid_.nx;
  report_.ny = grid_.dim == 2 ? grid_.ny : 1;
  report_.t_final = prob_.t_final;
  for (const auto& con : dom_.constraints)
    report_.min_constraints[con.name] = std::numeric_limits<double>::infinity();
}

std::vector<State> Simulation::cell_means() const {
  std::vector<State> means;
  if (dg1_) {
    means.reserve(grid_.nx);
    for (int c = 0; c < grid_.nx; ++c) means.push_back(dg1_->cell_average(d1v_[0], c));
  } else if (dg2_) {
    means.reserve(static_cast<std::size_t>(grid_.nx) * grid_.ny);
    for (int cj = 0; cj < grid_.ny; ++cj)
      for (int ci = 0; ci < grid_.nx; ++ci)
        means.push_back(dg2_->cell_average(d2v_[0], ci, cj));
  } else {
    means.reserve(static_cast<std::size_t>(fdv_[0].nx) * fdv_[0].ny);
    for (int j = 0; j < fdv_[0].ny; ++j)
      for (int i = 0; i < fdv_[0].nx; ++i) means.push_back(fdv_[0].get(i, j));
  }
  return means;
}

std::map<std::string, double> Simulation::current_minima() const {
  std::map<std::string, double> out;
  const auto means = cell_means();
  for (const auto& con : dom_.constraints) {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& u : means) m = std::min(m, con.eval(u));
    out[con.name] = m;
  }
  return out;
}

bool Simulation::stage(int src, int dst, double dt, bool apply_limiter,
                       StageAgg& agg) {
  if (dg1_) {
    const auto info = dg1_->euler_stage(d1v_[src], d1v_[dst], dt, apply_limiter);
    agg.ok = info.ok;
    agg.message = info.message;
    agg.boundary_flux = info.boundary_flux_integral;
    agg.theta_min = info.theta_min;
    agg.theta_sum = info.theta_sum;
    agg.theta_count = info.theta_count;
    agg.limited = info.limited_cells;
    return info.ok;
  }
  if (dg2_) {
    double a1 = 0.0, a2 = 0.0;
    dg2_->directional_wavespeeds(d2v_[src], a1, a2);
    const auto info = dg2_->euler_stage(d2v_[src], d2v_[dst], dt, a1, a2);
    agg.ok = info.ok;
    agg.message = info.message;
    agg.boundary_flux = info.boundary_flux_integral;
    agg.theta_min = info.theta_min;
    agg.theta_sum = info.theta_sum;
    agg.theta_count = info.theta_count;
    agg.limited = info.limited_cells;
    return info.ok;
  }
  const FDStageInfo info = fd_->euler_stage(fdv_[src], fdv_[dst], dt, apply_limiter);
  agg.ok = info.ok;
  agg.message = info.message;
  agg.boundary_flux = info.boundary_flux_integral;
  agg.theta_min = info.theta_min;
  agg.theta_sum = info.theta_sum;
  agg.theta_count = info.theta_count;
  agg.limited = info.limited_interfaces;
  agg.stage_min = info.stage_min;
  return info.ok;
}

void Simulation::combine(int dst, double a, int xsrc, double b, int ysrc) {
  if (dg1_) {
    d1v_[dst].ncells = d1v_[xsrc].ncells;
    d1v_[dst].np = d1v_[xsrc].np;
    d1v_[dst].ncomp = d1v_[xsrc].ncomp;
    d1v_[dst].data.resize(d1v_[xsrc].data.size());
    for (std::size_t i = 0; i < d1v_[xsrc].data.size(); ++i)
      d1v_[dst].data[i] = a * d1v_[xsrc].data[i] + b * d1v_[ysrc].data[i];
  } else if (dg2_) {
    d2v_[dst].nx = d2v_[xsrc].nx;
    d2v_[dst].ny = d2v_[xsrc].ny;
    d2v_[dst].np = d2v_[xsrc].np;
    d2v_[dst].ncomp = d2v_[xsrc].ncomp;
    d2v_[dst].data.resize(d2v_[xsrc].data.size());
    for (std::size_t i = 0; i < d2v_[xsrc].data.size(); ++i)
      d2v_[dst].data[i] = a * d2v_[xsrc].data[i] + b * d2v_[ysrc].data[i];
  } else {
    fdv_[dst].nx = fdv_[xsrc].nx;
    fdv_[dst].ny = fdv_[xsrc].ny;
    fdv_[dst].ncomp = fdv_[xsrc].ncomp;
    fdv_[dst].d.resize(fdv_[xsrc].d.size());
    for (std::size_t i = 0; i < fdv_[xsrc].d.size(); ++i)
      fdv_[dst].d[i] = a * fdv_[xsrc].d[i] + b * fdv_[ysrc].d[i];
  }
}

void Simulation::track_minima(int which) {
  if (fd_ && prob_.sys.is_euler() && !cfg_.entropy_constraint) {
    double min_rho = std::numeric_limits<double>::infinity();
    double min_p = min_rho;
    const auto& f = fdv_[which];
    const double gm1 = prob_.sys.gamma - 1.0;
    for (int j = 0; j < f.ny; ++j)
      for (int i = 0; i < f.nx; ++i) {
        const State u = f.get(i, j);
        min_rho = std::min(min_rho, u.rho());
        const double p =
            u.rho() > 0.0
                ? gm1 * (u.energy() - u.momentum_sq() / (2.0 * u.rho()))
                : -std::numeric_limits<double>::infinity();
        min_p = std::min(min_p, p);
      }
    auto& r = report_.min_constraints["rho"];
    r = std::min(r, min_rho);
    auto& pp = report_.min_constraints["pressure"];
    pp = std::min(pp, min_p);
    return;
  }
  auto consider = [&](const State& u) {
    for (const auto& con : dom_.constraints) {
      auto& slot = report_.min_constraints[con.name];
      slot = std::min(slot, con.eval(u));
    }
  };
  if (dg1_) {
    for (int c = 0; c < grid_.nx; ++c) consider(dg1_->cell_average(d1v_[which], c));
  } else if (dg2_) {
    for (int cj = 0; cj < grid_.ny; ++cj)
      for (int ci = 0; ci < grid_.nx; ++ci)
        consider(dg2_->cell_average(d2v_[which], ci, cj));
  } else {
    for (int j = 0; j < fdv_[which].ny; ++j)
      for (int i = 0; i < fdv_[which].nx; ++i) consider(fdv_[which].get(i, j));
  }
}

double Simulation::rate_sum(int which, double& a1, double& a2) const {
  a1 = a2 = 0.0;
  if (dg1_) {
    a1 = dg1_->max_wavespeed_estimate(d1v_[which]);
    return a1 / grid_.dx();
  }
  if (dg2_) {
    dg2_->directional_wavespeeds(d2v_[which], a1, a2);
    return a1 / grid_.dx() + a2 / grid_.dy();
  }
  fd_->wavespeeds(fdv_[which], a1, a2);
  double r = a1 / grid_.dx();
  if (grid_.dim == 2) r += a2 / grid_.dy();
  return r;
}

double Simulation::default_cfl_target() const {
  const double c0 = NumericalFlux{cfg_.flux, 1.0}.c0();
  switch (cfg_.scheme) {
    case SchemeKind::FirstOrder:
      return 0.9 * c0;
    case SchemeKind::Weno5:
      return 0.9 * fd_->certified_lambda_sum();
    case SchemeKind::DG: {
      if (grid_.dim == 1) {
        const double omega1 = dg1_->ops().decomposition.weights.front();
        const double stability = 1.0 / (2.0 * cfg_.dg_degree + 1.0);
        return 0.9 * std::min(omega1 * c0, stability);
      }
      return 0.0;  // 2D DG: handled via the decomposition bound per step
    }
  }
  return 0.9;
}

State Simulation::total(int which) const {
  // Fixed-order pairwise summation of cell means, per component.
  std::vector<State> means;
  if (dg1_) {
    for (int c = 0; c < grid_.nx; ++c) means.push_back(dg1_->cell_average(d1v_[which], c));
  } else if (dg2_) {
    for (int cj = 0; cj < grid_.ny; ++cj)
      for (int ci = 0; ci < grid_.nx; ++ci)
        means.push_back(dg2_->cell_average(d2v_[which], ci, cj));
  } else {
    for (int j = 0; j < fdv_[which].ny; ++j)
      for (int i = 0; i < fdv_[which].nx; ++i) means.push_back(fdv_[which].get(i, j));
  }
  const double measure = grid_.dx() * (grid_.dim == 2 ? grid_.dy() : 1.0);
  State tot;
  tot.n = means.empty() ? 0 : means[0].n;
  std::vector<double> comp(means.size());
  for (int c = 0; c < tot.n; ++c) {
    for (std::size_t i = 0; i < means.size(); ++i) comp[i] = means[i][c];
    tot.c[c] = pairwise_sum(comp, 0, comp.size()) * measure;
  }
  return tot;
}

RunReport Simulation::run(
    const std::function<void(const Simulation&, int, double)>& on_snapshot) {
  const auto wall_start = std::chrono::steady_clock::now();

  // Initial feasibility: DG takes one limiter pass; FD must start feasible.
  if (dg1_) {
    dg1_->limit(d1v_[0]);
  } else if (dg2_) {
    double a1, a2;
    dg2_->directional_wavespeeds(d2v_[0], a1, a2);
    dg2_->limit(d2v_[0], a1, a2);
  } else {
    for (int j = 0; j < fdv_[0].ny; ++j)
      for (int i = 0; i < fdv_[0].nx; ++i)
        if (!dom_.contains(fdv_[0].get(i, j))) {
          report_.violation = true;
          report_.message = "initial data violates the invariant domain";
          return report_;
        }
  }
  track_minima(0);

  const State tot0 = total(0);
  report_.total_initial.assign(tot0.c.begin(), tot0.c.begin() + tot0.n);
  State bflux_accum;
  bflux_accum.n = tot0.n;

  double theta_min = 1.0, theta_sum = 0.0;
  long theta_count = 0, limited = 0;

  const double snap_dt = cfg_.output_cadence > 0
                             ? prob_.t_final / (cfg_.output_cadence + 1)
                             : 0.0;
  int next_snap = 1;

  long consecutive_halvings = 0;
  double forced_dt = -1.0;  // after a restart, retry with this dt
  t_ = 0.0;

  while (t_ < prob_.t_final * (1.0 - 1e-14)) {
    double a1, a2;
    const double rate = rate_sum(0, a1, a2);
    double target = cfg_.cfl > 0.0 ? cfg_.cfl : default_cfl_target();
    double dt;
    if (dg2_) {
      dt = cfg_.cfl > 0.0 ? cfg_.cfl / std::max(rate, 1e-300)
                          : 0.9 * dg2_->idp_dt_bound(a1, a2);
    } else {
      dt = target / std::max(rate, 1e-300);
    }
    if (forced_dt > 0.0) dt = forced_dt;
    dt = std::min(dt, prob_.t_final - t_);

    StageAgg s0, s1, s2;
    bool ok = stage(0, 1, dt, !cfg_.limit_final_stage_only, s0);
    if (ok) {
      // u** = 3/4 u + 1/4 (u* + dt L(u*))
      ok = stage(1, 2, dt, !cfg_.limit_final_stage_only, s1);
      if (ok) combine(2, 0.75, 0, 0.25, 2);
    }
    if (ok && dg1_ && !cfg_.limit_final_stage_only) dg1_->limit(d1v_[2]);
    if (ok && dg2_ && !cfg_.limit_final_stage_only) {
      double b1, b2;
      dg2_->directional_wavespeeds(d2v_[2], b1, b2);
      dg2_->limit(d2v_[2], b1, b2);
    }
    if (ok) {
      ok = stage(2, 3, dt, true, s2);
      if (ok) combine(3, 1.0 / 3.0, 0, 2.0 / 3.0, 3);
    }
    if (ok && dg1_) dg1_->limit(d1v_[3]);
    if (ok && dg2_) {
      double b1, b2;
      dg2_->directional_wavespeeds(d2v_[3], b1, b2);
      dg2_->limit(d2v_[3], b1, b2);
    }
    if (!ok) {
      ++report_.restarts;
      ++consecutive_halvings;
      if (consecutive_halvings > 20) {
        report_.violation = true;
        report_.message = "aborted after 20 consecutive time-step halvings: " +
                          (s2.message.empty()
                               ? (s1.message.empty() ? s0.message : s1.message)
                               : s2.message);
        break;
      }
      forced_dt = dt * 0.5;
      continue;
    }
    consecutive_halvings = 0;
    forced_dt = -1.0;

    // accepted: swap state, track stats and stage minima
    if (dg1_) std::swap(d1v_[0], d1v_[3]);
    if (dg2_) std::swap(d2v_[0], d2v_[3]);
    if (fd_) std::swap(fdv_[0], fdv_[3]);
    t_ += dt;
    ++report_.steps;
    if (fd_) {
      // stage outputs carry their own minima; convexity covers combinations
      for (const StageAgg* s : {&s0, &s1, &s2}) {
        std::size_t k = 0;
        for (const auto& con : dom_.constraints) {
          if (k >= s->stage_min.size()) break;
          auto& slot = report_.min_constraints[con.name];
          slot = std::min(slot, s->stage_min[k]);
          ++k;
        }
      }
    } else {
      track_minima(0);
      track_minima(1);
      track_minima(2);
    }

    bflux_accum += dt * ((1.0 / 6.0) * s0.boundary_flux +
                         (1.0 / 6.0) * s1.boundary_flux +
                         (2.0 / 3.0) * s2.boundary_flux);
    for (const StageAgg* s : {&s0, &s1, &s2}) {
      theta_min = std::min(theta_min, s->theta_min);
      theta_sum += s->theta_sum;
      theta_count += s->theta_count;
      limited += s->limited;
    }

    if (on_snapshot && snap_dt > 0.0) {
      while (next_snap <= cfg_.output_cadence &&
             t_ >= next_snap * snap_dt * (1.0 - 1e-12)) {
        on_snapshot(*this, next_snap, t_);
        ++next_snap;
      }
    }
  }

  report_.t_reached = t_;
  const State totf = total(0);
  report_.total_final.assign(totf.c.begin(), totf.c.begin() + totf.n);
  report_.boundary_flux_accum.assign(bflux_accum.c.begin(),
                                     bflux_accum.c.begin() + bflux_accum.n);
  report_.conservation_residual.resize(totf.n);
  report_.conservation_residual_rel.resize(totf.n);
  for (int c = 0; c < totf.n; ++c) {
    const double res = totf[c] - tot0[c] + bflux_accum[c];
    const double scale = std::max(
        {std::abs(tot0[c]), std::abs(totf[c]), std::abs(bflux_accum[c])});
    report_.conservation_residual[c] = std::abs(res);
    report_.conservation_residual_rel[c] =
        scale > 0.0 ? std::abs(res) / scale : 0.0;
  }
  report_.theta_min = theta_min;
  report_.theta_mean = theta_count > 0 ? theta_sum / theta_count : 1.0;
  report_.limited_fraction =
      theta_count > 0 ? static_cast<double>(limited) / theta_count : 0.0;
  report_.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                    wall_start)
          .count();
  if (on_snapshot && !report_.violation) on_snapshot(*this, 0, t_);
  return report_;
}

}  // namespace idp

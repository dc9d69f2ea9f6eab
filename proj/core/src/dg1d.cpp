#include "idp/dg1d.hpp"

#include "idp/limiters.hpp"

#include <algorithm>
#include <cmath>

#include "lagrange_detail.hpp"

namespace idp {

DGOperators1D::DGOperators1D(int degree) : k(degree), np(degree + 1) {
  if (degree < 1 || degree > 3)
    throw std::invalid_argument("1D DG supports degrees 1..3");
  nodal = gauss_lobatto(np);
  volume = gauss_legendre(np);
  decomposition = cad_1d(k);

  const int nq = static_cast<int>(volume.nodes.size());
  eval_vol.resize(nq * np);
  diff_vol.resize(nq * np);
  for (int q = 0; q < nq; ++q) {
    const auto e = detail::lagrange_at(nodal.nodes, volume.nodes[q]);
    const auto d = detail::lagrange_deriv_at(nodal.nodes, volume.nodes[q]);
    for (int i = 0; i < np; ++i) {
      eval_vol[q * np + i] = e[i];
      diff_vol[q * np + i] = d[i];
    }
  }
  const int ndec = static_cast<int>(decomposition.nodes.size());
  eval_dec.resize(ndec * np);
  for (int s = 0; s < ndec; ++s) {
    const auto e = detail::lagrange_at(nodal.nodes, decomposition.nodes[s]);
    for (int i = 0; i < np; ++i) eval_dec[s * np + i] = e[i];
  }
  // Mass matrix on the reference cell, exact via the volume Gauss rule.
  std::vector<double> mass(np * np, 0.0);
  for (int q = 0; q < nq; ++q)
    for (int i = 0; i < np; ++i)
      for (int j = 0; j < np; ++j)
        mass[i * np + j] +=
            volume.weights[q] * eval_vol[q * np + i] * eval_vol[q * np + j];
  minv = detail::invert_dense(mass, np);
}

std::vector<double> DGOperators1D::basis_at(double xi) const {
  return detail::lagrange_at(nodal.nodes, xi);
}

DGSolver1D::DGSolver1D(const SystemModel& sys, const Grid& grid, int degree,
                       NumericalFlux nf, InvariantDomain dom,
                       LimiterKind limiter)
    : sys_(sys),
      grid_(grid),
      ops_(degree),
      nf_(nf),
      dom_(std::move(dom)),
      limiter_(limiter) {
  grid_.validate(1);
  if (limiter_ != LimiterKind::None && !is_scaling_limiter(limiter_))
    throw std::invalid_argument("DG solvers take scaling limiters only");
}

DGField1D DGSolver1D::project(const std::function<State(double)>& ic) const {
  DGField1D f;
  f.resize(grid_.nx, ops_.np, sys_.components());
  for (int cell = 0; cell < grid_.nx; ++cell) {
    const double xc = grid_.xc(cell);
    for (int nd = 0; nd < ops_.np; ++nd) {
      f.set_state(cell, nd, ic(xc + ops_.nodal.nodes[nd] * grid_.dx()));
    }
  }
  return f;
}

State DGSolver1D::cell_average(const DGField1D& f, int cell) const {
  State avg;
  avg.n = f.ncomp;
  for (int nd = 0; nd < ops_.np; ++nd)
    avg += ops_.nodal.weights[nd] * f.state_at(cell, nd);
  return avg;
}

State DGSolver1D::exterior_trace(const DGField1D& f, int side) const {
  // side 0: ghost state left of cell 0; side 1: right of the last cell.
  const auto& bc = grid_.bc[side];
  const int n = f.ncells;
  switch (bc.kind) {
    case BcKind::Periodic:
      return side == 0 ? f.state_at(n - 1, ops_.np - 1) : f.state_at(0, 0);
    case BcKind::Outflow:
      return side == 0 ? f.state_at(0, 0) : f.state_at(n - 1, ops_.np - 1);
    case BcKind::Reflective: {
      State u = side == 0 ? f.state_at(0, 0) : f.state_at(n - 1, ops_.np - 1);
      u.c[1] = -u.c[1];
      return u;
    }
    case BcKind::InflowDirichlet:
      return bc.inflow(0.0);
  }
  return {};
}

void DGSolver1D::semidiscrete(const DGField1D& f, DGField1D& rhs,
                              std::vector<State>* fluxes) const {
  const int n = f.ncells, np = ops_.np, nc = f.ncomp;
  rhs.resize(n, np, nc);
  const Direction xp = Direction::xplus();

  std::vector<State> fhat(n + 1);
  for (int i = 0; i <= n; ++i) {
    const State uL =
        i == 0 ? exterior_trace(f, 0) : f.state_at(i - 1, np - 1);
    const State uR = i == n ? exterior_trace(f, 1) : f.state_at(i, 0);
    fhat[i] = numerical_flux(nf_, sys_, uL, uR, xp);
  }
  if (fluxes) *fluxes = fhat;

  const int nq = static_cast<int>(ops_.volume.nodes.size());
  std::vector<State> fq(nq);
  std::vector<State> r(np);
  for (int cell = 0; cell < n; ++cell) {
    for (int q = 0; q < nq; ++q) {
      State uq;
      uq.n = nc;
      for (int i = 0; i < np; ++i)
        uq += ops_.eval_vol[q * np + i] * f.state_at(cell, i);
      fq[q] = flux(sys_, uq, xp);
    }
    for (int i = 0; i < np; ++i) {
      State acc;
      acc.n = nc;
      for (int q = 0; q < nq; ++q)
        acc += (ops_.volume.weights[q] * ops_.diff_vol[q * np + i]) * fq[q];
      // face contributions: l_i(+1/2) = delta_{i,np-1}, l_i(-1/2) = delta_{i,0}
      if (i == np - 1) acc -= fhat[cell + 1];
      if (i == 0) acc += fhat[cell];
      r[i] = acc;
    }
    for (int i = 0; i < np; ++i) {
      State acc;
      acc.n = nc;
      for (int j = 0; j < np; ++j) acc += ops_.minv[i * np + j] * r[j];
      rhs.set_state(cell, i, (1.0 / grid_.dx()) * acc);
    }
  }
}

void DGSolver1D::limit(DGField1D& f, DGStageInfo* info) const {
  if (limiter_ == LimiterKind::None) return;
  const int ndec = static_cast<int>(ops_.decomposition.nodes.size());
  std::vector<State> dec_vals(ndec);
  for (int cell = 0; cell < f.ncells; ++cell) {
    const State avg = cell_average(f, cell);
    double theta = 1.0;
    bool activated = false;
    if (limiter_ == LimiterKind::Simplified) {
      const auto lim = simplified_face_limiter(
          f.state_at(cell, 0), f.state_at(cell, ops_.np - 1), avg,
          ops_.decomposition.weights.front(), dom_);
      theta = lim.theta;
      activated = lim.activated;
    } else {
      for (int s = 0; s < ndec; ++s) {
        State v;
        v.n = f.ncomp;
        for (int i = 0; i < ops_.np; ++i)
          v += ops_.eval_dec[s * ops_.np + i] * f.state_at(cell, i);
        dec_vals[s] = v;
      }
      const auto lim = scaling_limiter_system(dec_vals, avg, dom_);
      theta = lim.theta;
      activated = lim.activated;
    }
    if (info) {
      info->theta_min = std::min(info->theta_min, theta);
      info->theta_sum += theta;
      info->theta_count += 1;
      if (activated) info->limited_cells += 1;
    }
    if (activated) {
      for (int i = 0; i < ops_.np; ++i) {
        const State v = avg + theta * (f.state_at(cell, i) - avg);
        f.set_state(cell, i, v);
      }
    }
  }
}

DGStageInfo DGSolver1D::euler_stage(const DGField1D& f, DGField1D& out,
                                    double dt, bool apply_limiter) const {
  DGStageInfo info;
  info.boundary_flux_integral.n = f.ncomp;
  DGField1D rhs;
  std::vector<State> fhat;
  try {
    semidiscrete(f, rhs, &fhat);
  } catch (const std::exception& e) {
    info.ok = false;
    info.message = e.what();
    return info;
  }
  info.boundary_flux_integral = fhat.back() - fhat.front();

  out.resize(f.ncells, f.np, f.ncomp);
  for (std::size_t i = 0; i < f.data.size(); ++i)
    out.data[i] = f.data[i] + dt * rhs.data[i];

  for (int cell = 0; cell < f.ncells; ++cell) {
    const State avg = cell_average(out, cell);
    if (!avg.finite() || !dom_.contains(avg)) {
      info.ok = false;
      info.message = "updated cell average escaped G";
      return info;
    }
  }
  if (apply_limiter) limit(out, &info);
  return info;
}

double DGSolver1D::max_wavespeed_estimate(const DGField1D& f) const {
  double alpha = 0.0;
  for (int cell = 0; cell < f.ncells; ++cell)
    for (int nd = 0; nd < ops_.np; ++nd)
      alpha = std::max(
          alpha, max_wavespeed(sys_, f.state_at(cell, nd), Direction::xplus()));
  return alpha;
}

double DGSolver1D::idp_dt_bound(double alpha) const {
  const double omega1 = ops_.decomposition.weights.front();
  return omega1 * nf_.c0() * grid_.dx() / std::max(alpha, 1e-300);
}

}  // namespace idp

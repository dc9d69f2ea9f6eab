#include "idp/dg2d.hpp"

#include "idp/limiters.hpp"

#include <algorithm>
#include <cmath>

#include "idp/parallel.hpp"
#include "lagrange_detail.hpp"

namespace idp {

DGSolver2D::DGSolver2D(const SystemModel& sys, const Grid& grid, int degree,
                       NumericalFlux nf, InvariantDomain dom,
                       Decomposition2DKind dec_kind, int threads,
                       LimiterKind limiter)
    : sys_(sys),
      grid_(grid),
      k_(degree),
      np_(degree + 1),
      fq_(degree + 1),
      nf_(nf),
      dom_(std::move(dom)),
      dec_kind_(dec_kind),
      threads_(std::max(1, threads)),
      limiter_(limiter) {
  if (degree < 1 || degree > 2)
    throw std::invalid_argument("2D DG supports degrees 1..2");
  if (limiter_ == LimiterKind::Simplified)
    throw std::invalid_argument("the simplified face limiter is 1D-only");
  if (dec_kind_ == Decomposition2DKind::Optimal && degree < 2)
    throw std::invalid_argument("optimal decomposition requires degree 2");
  grid_.validate(1);
  nodal_ = gauss_lobatto(np_);
  volume_ = gauss_legendre(np_);
  face_ = gauss_legendre(fq_);

  const int nq = static_cast<int>(volume_.nodes.size());
  eval_vol_.resize(nq * np_);
  diff_vol_.resize(nq * np_);
  for (int q = 0; q < nq; ++q) {
    const auto e = detail::lagrange_at(nodal_.nodes, volume_.nodes[q]);
    const auto d = detail::lagrange_deriv_at(nodal_.nodes, volume_.nodes[q]);
    for (int i = 0; i < np_; ++i) {
      eval_vol_[q * np_ + i] = e[i];
      diff_vol_[q * np_ + i] = d[i];
    }
  }
  eval_face_.resize(fq_ * np_);
  for (int q = 0; q < fq_; ++q) {
    const auto e = detail::lagrange_at(nodal_.nodes, face_.nodes[q]);
    for (int i = 0; i < np_; ++i) eval_face_[q * np_ + i] = e[i];
  }
  std::vector<double> mass(np_ * np_, 0.0);
  for (int q = 0; q < nq; ++q)
    for (int i = 0; i < np_; ++i)
      for (int j = 0; j < np_; ++j)
        mass[i * np_ + j] +=
            volume_.weights[q] * eval_vol_[q * np_ + i] * eval_vol_[q * np_ + j];
  minv_ = detail::invert_dense(mass, np_);
}

DGField2D DGSolver2D::project(
    const std::function<State(int, int, double, double)>& ic) const {
  DGField2D f;
  f.resize(grid_.nx, grid_.ny, np_, sys_.components());
  for (int cj = 0; cj < grid_.ny; ++cj)
    for (int ci = 0; ci < grid_.nx; ++ci)
      for (int b = 0; b < np_; ++b)
        for (int a = 0; a < np_; ++a)
          f.set_state(ci, cj, b * np_ + a,
                      ic(ci, cj, grid_.xc(ci) + nodal_.nodes[a] * grid_.dx(),
                         grid_.yc(cj) + nodal_.nodes[b] * grid_.dy()));
  return f;
}

State DGSolver2D::cell_average(const DGField2D& f, int ci, int cj) const {
  State avg;
  avg.n = f.ncomp;
  for (int b = 0; b < np_; ++b)
    for (int a = 0; a < np_; ++a)
      avg += (nodal_.weights[a] * nodal_.weights[b]) *
             f.state_at(ci, cj, b * np_ + a);
  return avg;
}

ConvexDecomposition2D DGSolver2D::make_decomposition(double a1,
                                                     double a2) const {
  const double phi1 = std::max(a1, 1e-300) / grid_.dx();
  const double phi2 = std::max(a2, 1e-300) / grid_.dy();
  if (dec_kind_ == Decomposition2DKind::Optimal)
    return optimal_quadrature_2d(k_, phi1, phi2, fq_);
  return zs_quadrature_2d(k_, PolySpace::Qk, phi1, phi2, fq_);
}

void DGSolver2D::compute_fluxes(const DGField2D& f, std::vector<State>& fx,
                                std::vector<State>& fy) const {
  const int nx = grid_.nx, ny = grid_.ny;
  const Direction xp = Direction::xplus(), yp = Direction::yplus();
  fx.assign(static_cast<std::size_t>(ny) * (nx + 1) * fq_, State{});
  fy.assign(static_cast<std::size_t>(nx) * (ny + 1) * fq_, State{});

  // Trace of the face polynomial at the face Gauss points.
  auto x_trace = [&](int ci, int cj, bool right, int q) {
    State u;
    u.n = f.ncomp;
    const int a = right ? np_ - 1 : 0;
    for (int b = 0; b < np_; ++b)
      u += eval_face_[q * np_ + b] * f.state_at(ci, cj, b * np_ + a);
    return u;
  };
  auto y_trace = [&](int ci, int cj, bool top, int q) {
    State u;
    u.n = f.ncomp;
    const int b = top ? np_ - 1 : 0;
    for (int a = 0; a < np_; ++a)
      u += eval_face_[q * np_ + a] * f.state_at(ci, cj, b * np_ + a);
    return u;
  };
  auto ghost = [&](State u, int side, double tangential) {
    const auto& bc = grid_.bc[side];
    switch (bc.kind) {
      case BcKind::Outflow: return u;
      case BcKind::Reflective:
        u.c[side < 2 ? 1 : 2] = -u.c[side < 2 ? 1 : 2];
        return u;
      case BcKind::InflowDirichlet: return bc.inflow(tangential);
      default: return u;  // periodic handled by wrapping
    }
  };

  std::vector<char> bad_x(ny, 0), bad_y(nx, 0);
  parallel_for(ny, threads_, [&](int cj) {
    try {
      for (int i = 0; i <= nx; ++i) {
        for (int q = 0; q < fq_; ++q) {
          const double yq = grid_.yc(cj) + face_.nodes[q] * grid_.dy();
          State uL, uR;
          if (i > 0) uL = x_trace(i - 1, cj, true, q);
          if (i < nx) uR = x_trace(i, cj, false, q);
          if (i == 0)
            uL = grid_.bc[0].kind == BcKind::Periodic
                     ? x_trace(nx - 1, cj, true, q)
                     : ghost(uR, 0, yq);
          if (i == nx)
            uR = grid_.bc[1].kind == BcKind::Periodic
                     ? x_trace(0, cj, false, q)
                     : ghost(uL, 1, yq);
          fx[(static_cast<std::size_t>(cj) * (nx + 1) + i) * fq_ + q] =
              numerical_flux(nf_, sys_, uL, uR, xp);
        }
      }
    } catch (const std::exception&) {
      bad_x[cj] = 1;
    }
  });
  parallel_for(nx, threads_, [&](int ci) {
    try {
      for (int j = 0; j <= ny; ++j) {
        for (int q = 0; q < fq_; ++q) {
          const double xq = grid_.xc(ci) + face_.nodes[q] * grid_.dx();
          State uB, uT;
          if (j > 0) uB = y_trace(ci, j - 1, true, q);
          if (j < ny) uT = y_trace(ci, j, false, q);
          if (j == 0)
            uB = grid_.bc[2].kind == BcKind::Periodic
                     ? y_trace(ci, ny - 1, true, q)
                     : ghost(uT, 2, xq);
          if (j == ny)
            uT = grid_.bc[3].kind == BcKind::Periodic
                     ? y_trace(ci, 0, false, q)
                     : ghost(uB, 3, xq);
          fy[(static_cast<std::size_t>(ci) * (ny + 1) + j) * fq_ + q] =
              numerical_flux(nf_, sys_, uB, uT, yp);
        }
      }
    } catch (const std::exception&) {
      bad_y[ci] = 1;
    }
  });
  for (char b : bad_x)
    if (b) throw std::domain_error("inadmissible trace state in x fluxes");
  for (char b : bad_y)
    if (b) throw std::domain_error("inadmissible trace state in y fluxes");
}

DGStageInfo2D DGSolver2D::euler_stage(const DGField2D& f, DGField2D& out,
                                      double dt, double alpha1,
                                      double alpha2) const {
  DGStageInfo2D info;
  info.boundary_flux_integral.n = f.ncomp;
  const int nx = grid_.nx, ny = grid_.ny, np = np_, np2 = np_ * np_;
  const double dx = grid_.dx(), dy = grid_.dy();
  const Direction xp = Direction::xplus(), yp = Direction::yplus();

  std::vector<State> fx, fy;
  try {
    compute_fluxes(f, fx, fy);
  } catch (const std::exception& e) {
    info.ok = false;
    info.message = e.what();
    return info;
  }

  out.resize(nx, ny, np, f.ncomp);
  const int nq = static_cast<int>(volume_.nodes.size());

  std::vector<char> bad(static_cast<std::size_t>(nx) * ny, 0);
  parallel_for(ny, threads_, [&](int cj) {
    std::vector<State> f1(nq * nq), f2(nq * nq), resid(np2), tmp(np2);
    for (int ci = 0; ci < nx; ++ci) {
      for (int r = 0; r < nq; ++r) {
        for (int q = 0; q < nq; ++q) {
          State uq;
          uq.n = f.ncomp;
          for (int b = 0; b < np; ++b)
            for (int a = 0; a < np; ++a)
              uq += (eval_vol_[q * np + a] * eval_vol_[r * np + b]) *
                    f.state_at(ci, cj, b * np + a);
          if (uq.rho() <= 0.0 && sys_.is_euler()) {
            bad[static_cast<std::size_t>(cj) * nx + ci] = 1;
            return;
          }
          f1[r * nq + q] = flux(sys_, uq, xp);
          f2[r * nq + q] = flux(sys_, uq, yp);
        }
      }
      const State* fxl = &fx[(static_cast<std::size_t>(cj) * (nx + 1) + ci) * fq_];
      const State* fxr = fxl + fq_;
      const State* fyb = &fy[(static_cast<std::size_t>(ci) * (ny + 1) + cj) * fq_];
      const State* fyt = fyb + fq_;
      for (int b = 0; b < np; ++b) {
        for (int a = 0; a < np; ++a) {
          State acc;
          acc.n = f.ncomp;
          for (int r = 0; r < nq; ++r)
            for (int q = 0; q < nq; ++q) {
              const double w = volume_.weights[q] * volume_.weights[r];
              acc += (w * diff_vol_[q * np + a] * eval_vol_[r * np + b] / dx) *
                     f1[r * nq + q];
              acc += (w * eval_vol_[q * np + a] * diff_vol_[r * np + b] / dy) *
                     f2[r * nq + q];
            }
          for (int q = 0; q < fq_; ++q) {
            const double wq = face_.weights[q];
            if (a == np - 1)
              acc -= (wq * eval_face_[q * np + b] / dx) * fxr[q];
            if (a == 0) acc += (wq * eval_face_[q * np + b] / dx) * fxl[q];
            if (b == np - 1)
              acc -= (wq * eval_face_[q * np + a] / dy) * fyt[q];
            if (b == 0) acc += (wq * eval_face_[q * np + a] / dy) * fyb[q];
          }
          resid[b * np + a] = acc;
        }
      }
      // (Minv x Minv) resid, one dimension at a time.
      for (int b = 0; b < np; ++b)
        for (int a = 0; a < np; ++a) {
          State acc;
          acc.n = f.ncomp;
          for (int c = 0; c < np; ++c)
            acc += minv_[a * np + c] * resid[b * np + c];
          tmp[b * np + a] = acc;
        }
      for (int b = 0; b < np; ++b)
        for (int a = 0; a < np; ++a) {
          State acc;
          acc.n = f.ncomp;
          for (int d = 0; d < np; ++d)
            acc += minv_[b * np + d] * tmp[d * np + a];
          out.set_state(ci, cj, b * np + a,
                        f.state_at(ci, cj, b * np + a) + dt * acc);
        }
    }
  });
  for (std::size_t i = 0; i < bad.size(); ++i) {
    if (bad[i]) {
      info.ok = false;
      info.message = "negative density at a volume quadrature point";
      return info;
    }
  }

  // Boundary flux integral for the conservation audit (fixed order).
  for (int cj = 0; cj < ny; ++cj)
    for (int q = 0; q < fq_; ++q) {
      const std::size_t row = static_cast<std::size_t>(cj) * (nx + 1);
      info.boundary_flux_integral +=
          (face_.weights[q] * dy) * (fx[(row + nx) * fq_ + q] - fx[row * fq_ + q]);
    }
  for (int ci = 0; ci < nx; ++ci)
    for (int q = 0; q < fq_; ++q) {
      const std::size_t col = static_cast<std::size_t>(ci) * (ny + 1);
      info.boundary_flux_integral +=
          (face_.weights[q] * dx) * (fy[(col + ny) * fq_ + q] - fy[col * fq_ + q]);
    }

  for (int cj = 0; cj < ny && info.ok; ++cj)
    for (int ci = 0; ci < nx; ++ci) {
      const State avg = cell_average(out, ci, cj);
      if (!avg.finite() || !dom_.contains(avg)) {
        info.ok = false;
        info.message = "updated cell average escaped G";
        return info;
      }
    }
  limit(out, alpha1, alpha2, &info);
  return info;
}

void DGSolver2D::limit(DGField2D& f, double alpha1, double alpha2,
                       DGStageInfo2D* info) const {
  if (limiter_ == LimiterKind::None) return;
  const ConvexDecomposition2D dec = make_decomposition(alpha1, alpha2);
  const auto nodes = dec.all_nodes();
  const int nn = static_cast<int>(nodes.size());
  const int np = np_, np2 = np_ * np_;
  // Tensor basis values at every decomposition node (cell-independent).
  std::vector<double> eval(static_cast<std::size_t>(nn) * np2);
  for (int s = 0; s < nn; ++s) {
    const auto ex = detail::lagrange_at(nodal_.nodes, nodes[s].x);
    const auto ey = detail::lagrange_at(nodal_.nodes, nodes[s].y);
    for (int b = 0; b < np; ++b)
      for (int a = 0; a < np; ++a)
        eval[static_cast<std::size_t>(s) * np2 + b * np + a] = ex[a] * ey[b];
  }
  std::vector<double> theta_cells(static_cast<std::size_t>(grid_.nx) * grid_.ny,
                                  1.0);
  parallel_for(grid_.ny, threads_, [&](int cj) {
    std::vector<State> vals(nn);
    for (int ci = 0; ci < grid_.nx; ++ci) {
      const State avg = cell_average(f, ci, cj);
      for (int s = 0; s < nn; ++s) {
        State v;
        v.n = f.ncomp;
        for (int nd = 0; nd < np2; ++nd)
          v += eval[static_cast<std::size_t>(s) * np2 + nd] *
               f.state_at(ci, cj, nd);
        vals[s] = v;
      }
      const auto lim = scaling_limiter_system(vals, avg, dom_);
      theta_cells[static_cast<std::size_t>(cj) * grid_.nx + ci] = lim.theta;
      if (lim.activated) {
        for (int nd = 0; nd < np2; ++nd) {
          const State v = avg + lim.theta * (f.state_at(ci, cj, nd) - avg);
          f.set_state(ci, cj, nd, v);
        }
      }
    }
  });
  if (info) {
    for (double th : theta_cells) {
      info->theta_min = std::min(info->theta_min, th);
      info->theta_sum += th;
      info->theta_count += 1;
      if (th < 1.0) info->limited_cells += 1;
    }
  }
}

void DGSolver2D::directional_wavespeeds(const DGField2D& f, double& a1,
                                        double& a2) const {
  // Estimated at the states entering the numerical fluxes: face traces (kept
  // feasible by the limiter) and cell averages. Infeasible values are skipped
  // instead of throwing; the stage-level checks catch those separately.
  a1 = a2 = 0.0;
  auto consider = [&](const State& u) {
    if (sys_.is_euler()) {
      if (u.rho() <= 0.0 || !u.finite()) return;
      const double p = pressure(u, sys_.gamma);
      if (p <= 0.0) return;
    }
    a1 = std::max(a1, max_wavespeed(sys_, u, Direction::xplus()));
    a2 = std::max(a2, max_wavespeed(sys_, u, Direction::yplus()));
  };
  for (int cj = 0; cj < grid_.ny; ++cj)
    for (int ci = 0; ci < grid_.nx; ++ci) {
      consider(cell_average(f, ci, cj));
      for (int q = 0; q < fq_; ++q) {
        for (int right = 0; right < 2; ++right) {
          State u;
          u.n = f.ncomp;
          const int a = right ? np_ - 1 : 0;
          for (int b = 0; b < np_; ++b)
            u += eval_face_[q * np_ + b] * f.state_at(ci, cj, b * np_ + a);
          consider(u);
        }
        for (int top = 0; top < 2; ++top) {
          State u;
          u.n = f.ncomp;
          const int b = top ? np_ - 1 : 0;
          for (int a = 0; a < np_; ++a)
            u += eval_face_[q * np_ + a] * f.state_at(ci, cj, b * np_ + a);
          consider(u);
        }
      }
    }
}

double DGSolver2D::idp_dt_bound(double alpha1, double alpha2) const {
  return make_decomposition(alpha1, alpha2).cfl_coefficient * nf_.c0();
}

}  // namespace idp

#ifndef IDP_FD_SOLVER_HPP_
#define IDP_FD_SOLVER_HPP_

#include <functional>
#include <string>
#include <vector>

#include "idp/domain.hpp"
#include "idp/grid.hpp"
#include "idp/kinds.hpp"
#include "idp/limiters.hpp"
#include "idp/numflux.hpp"
#include "idp/physics.hpp"

namespace idp {

/// Cell-centered conserved states on a structured grid (finite-difference
/// collocation; also used by the first order finite volume scheme).
struct FDField {
  int nx = 0, ny = 1, ncomp = 1;
  std::vector<double> d;

  void resize(int nx_, int ny_, int nc_) {
    nx = nx_;
    ny = ny_;
    ncomp = nc_;
    d.assign(static_cast<std::size_t>(nx) * ny * nc_, 0.0);
  }
  State get(int i, int j = 0) const {
    State u;
    u.n = ncomp;
    const double* p = &d[(static_cast<std::size_t>(j) * nx + i) * ncomp];
    for (int c = 0; c < ncomp; ++c) u.c[c] = p[c];
    return u;
  }
  void set(int i, int j, const State& u) {
    double* p = &d[(static_cast<std::size_t>(j) * nx + i) * ncomp];
    for (int c = 0; c < ncomp; ++c) p[c] = u.c[c];
  }
};

struct FDStageInfo {
  bool ok = true;
  std::string message;
  State boundary_flux_integral;
  double theta_min = 1.0;
  double theta_sum = 0.0;
  long theta_count = 0;
  long limited_interfaces = 0;
  // per-constraint minima of the stage output (same order as the domain)
  std::vector<double> stage_min;
};

/// First order FV scheme and the WENO5 flux-corrected scheme on structured
/// grids, dimension-by-dimension in 2D within one forward-Euler stage.
class FDSolver {
 public:
  FDSolver(const SystemModel& sys, const Grid& grid, SchemeKind scheme,
           NumericalFlux low_flux, LimiterKind limiter, InvariantDomain dom,
           double bound_lo = 0.0, double bound_hi = 1.0, int threads = 1);

  FDField init(const std::function<State(int, int, double, double)>& ic) const;

  /// apply_limiter=false runs the raw high-order stage without correction or
  /// feasibility post-check (final-stage-only limiting mode).
  FDStageInfo euler_stage(const FDField& in, FDField& out, double dt,
                          bool apply_limiter = true) const;

  void wavespeeds(const FDField& f, double& a1, double& a2) const;

  /// Certified bound on dt * sum_d alpha_d/dx_d for this scheme + limiter
  /// (before any safety factor).
  double certified_lambda_sum() const;

  int ghosts() const { return scheme_ == SchemeKind::Weno5 ? 4 : 1; }

  const Grid& grid() const { return grid_; }
  const InvariantDomain& domain() const { return dom_; }
  InvariantDomain& domain() { return dom_; }

 private:
  struct LineResult {
    bool ok = true;
    std::string message;
    std::vector<State> flux;  // corrected fluxes at the n+1 update interfaces
    double theta_min = 1.0;
    double theta_sum = 0.0;
    long theta_count = 0;
    long limited = 0;
  };

  void extract_line(const FDField& f, int axis, int index,
                    std::vector<State>& line) const;
  LineResult sweep_line(std::vector<State>& line, int n, double lambda_eff,
                        double alpha_global, Direction dir,
                        bool apply_correction) const;

  SystemModel sys_;
  Grid grid_;
  SchemeKind scheme_;
  NumericalFlux low_flux_;
  LimiterKind limiter_;
  InvariantDomain dom_;
  double m_ = 0.0, M_ = 1.0;  // scalar bounds for the FCT limiters
  int threads_;
};

}  // namespace idp

#endif  // IDP_FD_SOLVER_HPP_

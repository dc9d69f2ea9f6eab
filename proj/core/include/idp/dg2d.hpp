#ifndef IDP_DG2D_HPP_
#define IDP_DG2D_HPP_

#include <functional>
#include <vector>

#include "idp/dg1d.hpp"
#include "idp/domain.hpp"
#include "idp/grid.hpp"
#include "idp/kinds.hpp"
#include "idp/numflux.hpp"
#include "idp/physics.hpp"
#include "idp/quadrature.hpp"

namespace idp {

enum class Decomposition2DKind { ZhangShu, Optimal };

/// Q^k tensor nodal field: node (a,b) carries l_a(xi) l_b(eta); flat node
/// index b*np + a; cell index cj*nx + ci.
struct DGField2D {
  int nx = 0, ny = 0, np = 0, ncomp = 0;
  std::vector<double> data;

  void resize(int nx_, int ny_, int np_, int nc_) {
    nx = nx_;
    ny = ny_;
    np = np_;
    ncomp = nc_;
    data.assign(static_cast<std::size_t>(nx) * ny * np * np * nc_, 0.0);
  }
  std::size_t off(int ci, int cj, int nd) const {
    return ((static_cast<std::size_t>(cj) * nx + ci) * np * np + nd) * ncomp;
  }
  State state_at(int ci, int cj, int nd) const {
    State u;
    u.n = ncomp;
    const double* p = &data[off(ci, cj, nd)];
    for (int c = 0; c < ncomp; ++c) u.c[c] = p[c];
    return u;
  }
  void set_state(int ci, int cj, int nd, const State& u) {
    double* p = &data[off(ci, cj, nd)];
    for (int c = 0; c < ncomp; ++c) p[c] = u.c[c];
  }
};

struct DGStageInfo2D {
  bool ok = true;
  std::string message;
  State boundary_flux_integral;
  double theta_min = 1.0;
  double theta_sum = 0.0;
  long theta_count = 0;
  long limited_cells = 0;
};

/// 2D DG on rectangles with the Zhang-Shu or the two-internal-node optimal
/// cell-average decomposition driving the limiter and the certified CFL.
class DGSolver2D {
 public:
  DGSolver2D(const SystemModel& sys, const Grid& grid, int degree,
             NumericalFlux nf, InvariantDomain dom,
             Decomposition2DKind dec_kind, int threads = 1,
             LimiterKind limiter = LimiterKind::ZhangShu);

  DGField2D project(
      const std::function<State(int, int, double, double)>& ic) const;

  State cell_average(const DGField2D& f, int ci, int cj) const;

  /// Forward Euler stage with the scaling limiter at the decomposition nodes
  /// (which include all face Gauss nodes). alpha1/alpha2 are the directional
  /// wave-speed bounds used to build the decomposition weights.
  DGStageInfo2D euler_stage(const DGField2D& f, DGField2D& out, double dt,
                            double alpha1, double alpha2) const;

  void limit(DGField2D& f, double alpha1, double alpha2,
             DGStageInfo2D* info = nullptr) const;

  void directional_wavespeeds(const DGField2D& f, double& a1, double& a2) const;
  /// Certified weak-IDP dt bound for the configured decomposition.
  double idp_dt_bound(double alpha1, double alpha2) const;

  const Grid& grid() const { return grid_; }
  int face_points() const { return fq_; }
  const InvariantDomain& domain() const { return dom_; }
  InvariantDomain& domain() { return dom_; }

 private:
  ConvexDecomposition2D make_decomposition(double a1, double a2) const;
  void compute_fluxes(const DGField2D& f, std::vector<State>& fx,
                      std::vector<State>& fy) const;

  SystemModel sys_;
  Grid grid_;
  int k_, np_, fq_;
  QuadratureRule1D nodal_, volume_, face_;
  std::vector<double> minv_;      // 1D inverse mass
  std::vector<double> eval_vol_;  // nq x np
  std::vector<double> diff_vol_;
  std::vector<double> eval_face_;  // fq x np: basis at face Gauss points
  NumericalFlux nf_;
  InvariantDomain dom_;
  Decomposition2DKind dec_kind_;
  int threads_;
  LimiterKind limiter_;
};

}  // namespace idp

#endif  // IDP_DG2D_HPP_

#ifndef IDP_DG1D_HPP_
#define IDP_DG1D_HPP_

#include <vector>

#include "idp/domain.hpp"
#include "idp/grid.hpp"
#include "idp/kinds.hpp"
#include "idp/numflux.hpp"
#include "idp/physics.hpp"
#include "idp/quadrature.hpp"
#include "idp/state.hpp"

namespace idp {

/// Reference-cell operators for nodal DG of degree k at Gauss-Lobatto points
/// (face traces are nodal values). Volume integrals use a (k+1)-point Gauss
/// rule, exact to degree 2k+1 on polynomial integrands.
struct DGOperators1D {
  int k = 1;
  int np = 2;  // k+1 nodal points
  QuadratureRule1D nodal;          // Lobatto(k+1): nodes/weights on [-1/2,1/2]
  QuadratureRule1D volume;         // Gauss(k+1)
  QuadratureRule1D decomposition;  // cad_1d(k): limiter/weak-IDP nodes
  std::vector<double> minv;        // np x np inverse mass (reference)
  std::vector<double> eval_vol;    // nq x np: l_i(xi_q)
  std::vector<double> diff_vol;    // nq x np: l_i'(xi_q)
  std::vector<double> eval_dec;    // ndec x np

  explicit DGOperators1D(int degree);

  /// Values of the Lagrange basis at an arbitrary reference point.
  std::vector<double> basis_at(double xi) const;
};

/// Per-cell nodal coefficients: data[(cell*np + node)*ncomp + comp].
struct DGField1D {
  int ncells = 0, np = 0, ncomp = 0;
  std::vector<double> data;

  void resize(int cells, int nodes, int comps) {
    ncells = cells;
    np = nodes;
    ncomp = comps;
    data.assign(static_cast<std::size_t>(cells) * nodes * comps, 0.0);
  }
  double* node(int cell, int nd) { return &data[(static_cast<std::size_t>(cell) * np + nd) * ncomp]; }
  const double* node(int cell, int nd) const {
    return &data[(static_cast<std::size_t>(cell) * np + nd) * ncomp];
  }
  State state_at(int cell, int nd) const {
    State u;
    u.n = ncomp;
    const double* p = node(cell, nd);
    for (int c = 0; c < ncomp; ++c) u.c[c] = p[c];
    return u;
  }
  void set_state(int cell, int nd, const State& u) {
    double* p = node(cell, nd);
    for (int c = 0; c < ncomp; ++c) p[c] = u.c[c];
  }
};

struct DGStageInfo {
  bool ok = true;
  std::string message;
  State boundary_flux_integral;  // fhat_right - fhat_left, per component
  double theta_min = 1.0;
  double theta_sum = 0.0;
  long theta_count = 0;
  long limited_cells = 0;
};

/// 1D DG solver: semidiscrete operator, forward-Euler stage with the scaling
/// limiter applied at the decomposition nodes, and field utilities.
class DGSolver1D {
 public:
  DGSolver1D(const SystemModel& sys, const Grid& grid, int degree,
             NumericalFlux nf, InvariantDomain dom,
             LimiterKind limiter = LimiterKind::ZhangShu);

  const DGOperators1D& ops() const { return ops_; }
  const Grid& grid() const { return grid_; }

  /// L2 projection of point data onto the nodal basis (collocation at nodes).
  DGField1D project(const std::function<State(double)>& ic) const;

  State cell_average(const DGField1D& f, int cell) const;

  /// Time derivative of the nodal coefficients. The cell-average component
  /// equals -(fhat_{j+1/2} - fhat_{j-1/2})/dx exactly.
  void semidiscrete(const DGField1D& f, DGField1D& rhs,
                    std::vector<State>* fluxes = nullptr) const;

  /// Forward-Euler stage with limiter: out = f + dt * L(f), cell averages
  /// checked against the domain, then the Zhang-Shu limiter is applied at
  /// the decomposition nodes. Fails (ok=false) if an average escapes G.
  DGStageInfo euler_stage(const DGField1D& f, DGField1D& out, double dt,
                          bool apply_limiter = true) const;

  /// Apply the scaling limiter in-place at the decomposition nodes.
  void limit(DGField1D& f, DGStageInfo* info = nullptr) const;

  double max_wavespeed_estimate(const DGField1D& f) const;
  /// Certified weak-IDP time-step bound (lambda alpha <= omega1 c0).
  double idp_dt_bound(double alpha) const;

  const InvariantDomain& domain() const { return dom_; }
  InvariantDomain& domain() { return dom_; }

 private:
  State exterior_trace(const DGField1D& f, int side) const;

  SystemModel sys_;
  Grid grid_;
  DGOperators1D ops_;
  NumericalFlux nf_;
  InvariantDomain dom_;
  LimiterKind limiter_;
};

}  // namespace idp

#endif  // IDP_DG1D_HPP_

#ifndef IDP_STEPPER_HPP_
#define IDP_STEPPER_HPP_

#include <functional>
#include <memory>

#include "idp/config.hpp"
#include "idp/dg1d.hpp"
#include "idp/dg2d.hpp"
#include "idp/fd_solver.hpp"
#include "idp/problems.hpp"

namespace idp {

/// Owns a scheme instance and advances it with SSP-RK3 under the adaptive
/// restart policy: any stage failure rolls the step back and retries with a
/// halved time step; more than 20 consecutive halvings abort the run.
class Simulation {
 public:
  Simulation(const RunConfig& cfg, const ProblemSetup& prob);

  /// Advance to t_final. on_snapshot (optional) fires for each output
  /// snapshot including the final state.
  RunReport run(const std::function<void(const Simulation&, int, double)>&
                    on_snapshot = {});

  const Grid& grid() const { return grid_; }
  const SystemModel& system() const { return prob_.sys; }
  const ProblemSetup& problem() const { return prob_; }
  const RunConfig& config() const { return cfg_; }
  double time() const { return t_; }

  /// Cell means of the current solution (row-major for 2D).
  std::vector<State> cell_means() const;

  /// Per-constraint minima over the current solution's tracked values.
  std::map<std::string, double> current_minima() const;

 private:
  struct StageAgg {
    bool ok = true;
    std::string message;
    State boundary_flux;
    double theta_min = 1.0;
    double theta_sum = 0.0;
    long theta_count = 0;
    long limited = 0;
    std::vector<double> stage_min;  // per-constraint minima (FD path)
  };

  std::vector<double>& active_data();
  const std::vector<double>& data_of(int which) const;  // 0=u,1..3 scratch
  bool stage(int src, int dst, double dt, bool apply_limiter, StageAgg& agg);
  void combine(int dst, double a, int xsrc, double b, int ysrc);
  void track_minima(int which);
  double rate_sum(int which, double& a1, double& a2) const;  // sum alpha/dx
  double default_cfl_target() const;
  State total(int which) const;  // sum of means * measure, pairwise

  RunConfig cfg_;
  ProblemSetup prob_;
  Grid grid_;
  InvariantDomain dom_;

  std::unique_ptr<FDSolver> fd_;
  std::unique_ptr<DGSolver1D> dg1_;
  std::unique_ptr<DGSolver2D> dg2_;
  // state + three scratch buffers (indices 0..3)
  FDField fdv_[4];
  DGField1D d1v_[4];
  DGField2D d2v_[4];

  double t_ = 0.0;
  RunReport report_;
};

/// Floors per the 1e-13 * initial-scale convention; explicit overrides win.
std::vector<double> default_floors(const InvariantDomain& dom,
                                   const std::vector<State>& initial_values,
                                   const std::map<std::string, double>& overrides);

}  // namespace idp

#endif  // IDP_STEPPER_HPP_

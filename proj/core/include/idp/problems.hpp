#ifndef IDP_PROBLEMS_HPP_
#define IDP_PROBLEMS_HPP_

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "idp/domain.hpp"
#include "idp/grid.hpp"
#include "idp/physics.hpp"

namespace idp {

/// A benchmark definition: system, default grid, initial condition, final
/// time, invariant domain, and an optional exact reference.
struct ProblemSetup {
  std::string name;
  SystemModel sys;
  Grid grid;  // default extents / resolution / boundary conditions
  double t_final = 1.0;
  bool smooth = false;  // smooth exact reference suitable for convergence
  double bound_lo = 0.0, bound_hi = 1.0;  // scalar invariant interval
  InvariantDomain domain;                 // zero floors; runner adds them

  /// Cell-aware pointwise initial data for the actual run grid (which may
  /// override the default resolution).
  std::function<std::function<State(int, int, double, double)>(const Grid&)>
      ic_factory;

  /// Exact solution u(x, t) where available (1D), else empty.
  std::function<State(double, double)> exact;

  /// Parameters adopted from external references (jet/vortex setups),
  /// overridable from the run configuration; never golden values.
  std::map<std::string, double> external_params;
};

/// Registry lookup; throws std::invalid_argument for unknown names.
/// `overrides` replaces entries of external_params before construction.
ProblemSetup make_problem(const std::string& name,
                          const std::map<std::string, double>& overrides = {});

std::vector<std::string> problem_names();

enum class NormKind { L1, L2, Linf };

/// Discrete norm of (field - reference) over cell means; the reference is
/// cell-averaged with a 5-point Gauss rule per cell.
double error_norm(const std::vector<double>& cell_values, const Grid& grid,
                  const std::function<double(double)>& reference,
                  NormKind norm);

/// Discrete norm against point samples of the reference at cell centers
/// (for finite-difference collocation data).
double error_norm_pointwise(const std::vector<double>& values, const Grid& grid,
                            const std::function<double(double)>& reference,
                            NormKind norm);

}  // namespace idp

#endif  // IDP_PROBLEMS_HPP_

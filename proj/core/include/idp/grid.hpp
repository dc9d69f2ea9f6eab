#ifndef IDP_GRID_HPP_
#define IDP_GRID_HPP_

#include <array>
#include <functional>
#include <stdexcept>

#include "idp/state.hpp"

namespace idp {

enum class BcKind { Periodic, Outflow, Reflective, InflowDirichlet };

struct BoundaryCondition {
  BcKind kind = BcKind::Periodic;
  State inflow_state;  // InflowDirichlet only
  // Optional spatially varying inflow (e.g. jet strips); when set it
  // overrides inflow_state based on the tangential coordinate.
  std::function<State(double)> inflow_profile;

  State inflow(double tangential) const {
    if (inflow_profile) return inflow_profile(tangential);
    return inflow_state;
  }
};

/// Uniform structured grid, 1D or 2D. Sides: 0 left, 1 right, 2 bottom,
/// 3 top (2D only).
struct Grid {
  int dim = 1;
  int nx = 0, ny = 1;
  double x0 = 0.0, x1 = 1.0;
  double y0 = 0.0, y1 = 1.0;
  std::array<BoundaryCondition, 4> bc;

  double dx() const { return (x1 - x0) / nx; }
  double dy() const { return dim == 2 ? (y1 - y0) / ny : 1.0; }
  double xc(int i) const { return x0 + (i + 0.5) * dx(); }
  double yc(int j) const { return y0 + (j + 0.5) * dy(); }

  void validate(int min_cells) const {
    if (nx < min_cells || (dim == 2 && ny < min_cells))
      throw std::invalid_argument("grid too coarse for the stencil");
    if (dx() <= 0.0 || (dim == 2 && dy() <= 0.0))
      throw std::invalid_argument("nonpositive grid spacing");
  }
};

}  // namespace idp

#endif  // IDP_GRID_HPP_

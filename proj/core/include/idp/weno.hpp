#ifndef IDP_WENO_HPP_
#define IDP_WENO_HPP_

#include <span>
#include <vector>

#include "idp/physics.hpp"
#include "idp/state.hpp"

namespace idp {

/// Fifth order finite-difference WENO interface fluxes with global
/// Lax-Friedrichs flux splitting, componentwise reconstruction.
///
/// Input is a ghost-padded line of states; the returned vector has
/// line.size()+1 entries indexed so that flux i sits between cells i-1 and i.
/// Entries are computed only where the full six-cell stencil exists
/// (3 <= i <= line.size()-3); the rest stay zero.
/// alpha_global must bound the max wave speed over the line.
std::vector<State> weno5_interface_fluxes(std::span<const State> line,
                                          const SystemModel& sys,
                                          double alpha_global);

/// First valid interface index for a padded line (needs 3 cells to the left).
inline constexpr int kWenoFirstInterface = 3;

}  // namespace idp

#endif  // IDP_WENO_HPP_

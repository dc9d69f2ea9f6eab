#ifndef IDP_OUTPUT_HPP_
#define IDP_OUTPUT_HPP_

#include <string>
#include <vector>

#include "idp/grid.hpp"
#include "idp/physics.hpp"
#include "idp/state.hpp"

namespace idp {

/// Shortest round-trip decimal representation of a double.
std::string format_double(double v);

/// 1D solution snapshot: header x,<components>[,p], one row per cell.
void write_csv_1d(const std::string& path, const Grid& grid,
                  const SystemModel& sys, const std::vector<State>& means);

/// 2D solution snapshot as CSV (x,y,<components>[,p]).
void write_csv_2d(const std::string& path, const Grid& grid,
                  const SystemModel& sys, const std::vector<State>& means);

/// 2D solution snapshot as VTK legacy structured-points ASCII.
void write_vtk_2d(const std::string& path, const Grid& grid,
                  const SystemModel& sys, const std::vector<State>& means);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace idp

#endif  // IDP_OUTPUT_HPP_

#ifndef IDP_DRIVERS_HPP_
#define IDP_DRIVERS_HPP_

#include <string>
#include <vector>

#include "idp/config.hpp"
#include "idp/stepper.hpp"

namespace idp {

/// Full run: advance, write snapshots (CSV, plus VTK in 2D) and report.json
/// into cfg.out_dir. Artifact paths are recorded in the returned report.
RunReport run_simulation(const RunConfig& cfg);

struct ConvergenceRow {
  int n = 0;
  double error_l1 = 0.0;
  double order = 0.0;  // NaN-free: 0 marks "not applicable"
};

/// Refinement study against the problem's exact reference; refuses
/// non-smooth problems. Time step scaled to keep the temporal error
/// subordinate to the spatial one.
std::vector<ConvergenceRow> run_convergence(const RunConfig& cfg,
                                            const std::vector<int>& grids);
std::string convergence_csv(const std::vector<ConvergenceRow>& rows);

struct CompareEntry {
  std::string limiter;
  RunReport report;
};

/// Same problem/config across a list of limiters; sub-run failures are
/// recorded and the comparison continues.
std::vector<CompareEntry> run_compare(const RunConfig& cfg,
                                      const std::vector<LimiterKind>& limiters);
std::string compare_csv(const std::vector<CompareEntry>& entries);

struct QuadTableRow {
  std::string table;   // "table1" or "table2"
  std::string space;   // "P1"/"P2"/"P2P3"
  std::string method;
  double value = 0.0;
  double paper = 0.0;
  bool equal = false;  // to 1e-12 relative
};

/// Reproduction of the 2D-rectangle dt factors (phi1 == phi2 column) and the
/// equilateral-triangle CFL coefficients, against the printed values.
std::vector<QuadTableRow> quad_table();
std::string quad_table_csv(const std::vector<QuadTableRow>& rows);

}  // namespace idp

#endif  // IDP_DRIVERS_HPP_

#include "idp/output.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

namespace idp {

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

std::vector<std::string> component_names(const SystemModel& sys) {
  switch (sys.kind) {
    case SystemKind::Euler1D: return {"rho", "m1", "E"};
    case SystemKind::Euler2D: return {"rho", "m1", "m2", "E"};
    default: return {"u"};
  }
}

void append_row(std::string& out, const SystemModel& sys, const State& u) {
  for (int c = 0; c < u.n; ++c) {
    out += ',';
    out += format_double(u[c]);
  }
  if (sys.is_euler()) {
    out += ',';
    out += format_double(u.rho() > 0.0 ? pressure(u, sys.gamma)
                                       : std::numeric_limits<double>::quiet_NaN());
  }
}

}  // namespace

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write file: " + path);
  f << content;
}

void write_csv_1d(const std::string& path, const Grid& grid,
                  const SystemModel& sys, const std::vector<State>& means) {
  std::string out = "x";
  for (const auto& n : component_names(sys)) out += "," + n;
  if (sys.is_euler()) out += ",p";
  out += '\n';
  for (int i = 0; i < grid.nx; ++i) {
    out += format_double(grid.xc(i));
    append_row(out, sys, means[i]);
    out += '\n';
  }
  write_text_file(path, out);
}

void write_csv_2d(const std::string& path, const Grid& grid,
                  const SystemModel& sys, const std::vector<State>& means) {
  std::string out = "x,y";
  for (const auto& n : component_names(sys)) out += "," + n;
  if (sys.is_euler()) out += ",p";
  out += '\n';
  for (int j = 0; j < grid.ny; ++j)
    for (int i = 0; i < grid.nx; ++i) {
      out += format_double(grid.xc(i));
      out += ',';
      out += format_double(grid.yc(j));
      append_row(out, sys, means[static_cast<std::size_t>(j) * grid.nx + i]);
      out += '\n';
    }
  write_text_file(path, out);
}

void write_vtk_2d(const std::string& path, const Grid& grid,
                  const SystemModel& sys, const std::vector<State>& means) {
  std::string out;
  out += "# vtk DataFile Version 3.0\n";
  out += "idplab cell-mean snapshot\n";
  out += "ASCII\n";
  out += "DATASET STRUCTURED_POINTS\n";
  out += "DIMENSIONS " + std::to_string(grid.nx) + " " +
         std::to_string(grid.ny) + " 1\n";
  out += "ORIGIN " + format_double(grid.xc(0)) + " " + format_double(grid.yc(0)) +
         " 0\n";
  out += "SPACING " + format_double(grid.dx()) + " " + format_double(grid.dy()) +
         " 1\n";
  out += "POINT_DATA " + std::to_string(static_cast<long>(grid.nx) * grid.ny) +
         "\n";
  const auto names = component_names(sys);
  const int nc = static_cast<int>(names.size());
  for (int c = 0; c <= nc; ++c) {
    const bool is_p = c == nc;
    if (is_p && !sys.is_euler()) break;
    out += "SCALARS " + (is_p ? std::string("p") : names[c]) + " double 1\n";
    out += "LOOKUP_TABLE default\n";
    for (int j = 0; j < grid.ny; ++j)
      for (int i = 0; i < grid.nx; ++i) {
        const State& u = means[static_cast<std::size_t>(j) * grid.nx + i];
        const double v =
            is_p ? (u.rho() > 0.0 ? pressure(u, sys.gamma)
                                  : std::numeric_limits<double>::quiet_NaN())
                 : u[c];
        out += format_double(v);
        out += '\n';
      }
  }
  write_text_file(path, out);
}

}  // namespace idp

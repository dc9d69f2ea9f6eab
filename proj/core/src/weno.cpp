#include "idp/weno.hpp"

#include <cmath>
#include <stdexcept>

namespace idp {

namespace {

constexpr double kWenoEps = 1e-6;

/// Left-biased fifth order WENO reconstruction at the right boundary of the
/// center cell, from the five values (g0..g4) with the center at g2.
/// Single division: the weight normalization is folded into one quotient.
inline double weno5_left(double g0, double g1, double g2, double g3,
                         double g4) {
  const double q0 = (2.0 * g0 - 7.0 * g1 + 11.0 * g2) * (1.0 / 6.0);
  const double q1 = (-g1 + 5.0 * g2 + 2.0 * g3) * (1.0 / 6.0);
  const double q2 = (2.0 * g2 + 5.0 * g3 - g4) * (1.0 / 6.0);
  const double d0 = g0 - 2.0 * g1 + g2, e0 = g0 - 4.0 * g1 + 3.0 * g2;
  const double d1 = g1 - 2.0 * g2 + g3, e1 = g1 - g3;
  const double d2 = g2 - 2.0 * g3 + g4, e2 = 3.0 * g2 - 4.0 * g3 + g4;
  const double b0 = kWenoEps + (13.0 / 12.0) * d0 * d0 + 0.25 * e0 * e0;
  const double b1 = kWenoEps + (13.0 / 12.0) * d1 * d1 + 0.25 * e1 * e1;
  const double b2 = kWenoEps + (13.0 / 12.0) * d2 * d2 + 0.25 * e2 * e2;
  // a_k = d_k / b_k^2 rescaled by (b0 b1 b2)^2 > 0
  const double b01 = b0 * b1, b12 = b1 * b2, b02 = b0 * b2;
  const double a0 = 0.1 * b12 * b12;
  const double a1 = 0.6 * b02 * b02;
  const double a2 = 0.3 * b01 * b01;
  return (a0 * q0 + a1 * q1 + a2 * q2) / (a0 + a1 + a2);
}

}  // namespace

std::vector<State> weno5_interface_fluxes(std::span<const State> line,
                                          const SystemModel& sys,
                                          double alpha_global) {
  const int m = static_cast<int>(line.size());
  if (m < 6) throw std::invalid_argument("insufficient stencil for WENO5");
  const int nc = sys.components();
  const Direction xp = Direction::xplus();

  // Componentwise split fluxes f +- alpha u (halved below).
  std::vector<double> fp(static_cast<std::size_t>(m) * nc),
      fm(static_cast<std::size_t>(m) * nc);
  for (int j = 0; j < m; ++j) {
    const State f = flux(sys, line[j], xp);
    for (int c = 0; c < nc; ++c) {
      fp[static_cast<std::size_t>(j) * nc + c] =
          0.5 * (f[c] + alpha_global * line[j][c]);
      fm[static_cast<std::size_t>(j) * nc + c] =
          0.5 * (f[c] - alpha_global * line[j][c]);
    }
  }

  std::vector<State> fhat(m + 1);
  for (int i = kWenoFirstInterface; i <= m - 3; ++i) {
    State f;
    f.n = nc;
    for (int c = 0; c < nc; ++c) {
      const auto P = [&](int j) { return fp[static_cast<std::size_t>(j) * nc + c]; };
      const auto M = [&](int j) { return fm[static_cast<std::size_t>(j) * nc + c]; };
      const double plus = weno5_left(P(i - 3), P(i - 2), P(i - 1), P(i), P(i + 1));
      const double minus = weno5_left(M(i + 2), M(i + 1), M(i), M(i - 1), M(i - 2));
      f.c[c] = plus + minus;
    }
    fhat[i] = f;
  }
  return fhat;
}

}  // namespace idp

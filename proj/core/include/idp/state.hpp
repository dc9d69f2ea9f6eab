#ifndef IDP_STATE_HPP_
#define IDP_STATE_HPP_

#include <array>
#include <cmath>
#include <cstdint>

namespace idp {

/// Conserved-variable vector: N=1 scalar, N=3 Euler-1D (rho, m, E),
/// N=4 Euler-2D (rho, m1, m2, E). Fixed capacity 4, value semantics.
struct State {
  std::array<double, 4> c{0.0, 0.0, 0.0, 0.0};
  int n = 0;

  State() = default;
  State(std::initializer_list<double> vals) {
    n = 0;
    for (double v : vals) c[n++] = v;
  }

  static State scalar(double u) { return State{u}; }
  static State euler1(double rho, double m, double E) { return State{rho, m, E}; }
  static State euler2(double rho, double m1, double m2, double E) {
    return State{rho, m1, m2, E};
  }

  double& operator[](int i) { return c[i]; }
  double operator[](int i) const { return c[i]; }
  int size() const { return n; }

  double rho() const { return c[0]; }
  double energy() const { return c[n - 1]; }
  double momentum_sq() const {
    double s = 0.0;
    for (int i = 1; i < n - 1; ++i) s += c[i] * c[i];
    return s;
  }

  State& operator+=(const State& o) {
    for (int i = 0; i < n; ++i) c[i] += o.c[i];
    return *this;
  }
  State& operator-=(const State& o) {
    for (int i = 0; i < n; ++i) c[i] -= o.c[i];
    return *this;
  }
  State& operator*=(double a) {
    for (int i = 0; i < n; ++i) c[i] *= a;
    return *this;
  }

  friend State operator+(State a, const State& b) { return a += b; }
  friend State operator-(State a, const State& b) { return a -= b; }
  friend State operator*(double a, State u) { return u *= a; }
  friend State operator*(State u, double a) { return u *= a; }

  bool finite() const {
    for (int i = 0; i < n; ++i)
      if (!std::isfinite(c[i])) return false;
    return true;
  }
};

/// Unit direction for directional fluxes. 1D uses (+-1, 0).
struct Direction {
  double nx = 1.0;
  double ny = 0.0;
  static Direction xplus() { return {1.0, 0.0}; }
  static Direction xminus() { return {-1.0, 0.0}; }
  static Direction yplus() { return {0.0, 1.0}; }
  static Direction yminus() { return {0.0, -1.0}; }
};

}  // namespace idp

#endif  // IDP_STATE_HPP_

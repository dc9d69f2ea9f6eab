#ifndef IDP_LAGRANGE_DETAIL_HPP_
#define IDP_LAGRANGE_DETAIL_HPP_

#include <cmath>
#include <vector>

namespace idp::detail {

/// Lagrange basis values at xi via the barycentric form.
inline std::vector<double> lagrange_at(const std::vector<double>& nodes,
                                       double xi) {
  const int n = static_cast<int>(nodes.size());
  std::vector<double> vals(n, 0.0);
  for (int i = 0; i < n; ++i) {
    if (std::abs(xi - nodes[i]) < 1e-15) {
      vals[i] = 1.0;
      return vals;
    }
  }
  std::vector<double> w(n, 1.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (j != i) w[i] /= nodes[i] - nodes[j];
  double denom = 0.0;
  for (int i = 0; i < n; ++i) denom += w[i] / (xi - nodes[i]);
  for (int i = 0; i < n; ++i) vals[i] = (w[i] / (xi - nodes[i])) / denom;
  return vals;
}

/// Derivatives of the Lagrange basis at xi.
inline std::vector<double> lagrange_deriv_at(const std::vector<double>& nodes,
                                             double xi) {
  const int n = static_cast<int>(nodes.size());
  std::vector<double> d(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double sum = 0.0;
    for (int m = 0; m < n; ++m) {
      if (m == i) continue;
      double prod = 1.0;
      for (int j = 0; j < n; ++j) {
        if (j == i || j == m) continue;
        prod *= (xi - nodes[j]) / (nodes[i] - nodes[j]);
      }
      sum += prod / (nodes[i] - nodes[m]);
    }
    d[i] = sum;
  }
  return d;
}

/// Dense inverse by Gauss-Jordan with partial pivoting (tiny matrices).
inline std::vector<double> invert_dense(std::vector<double> a, int n) {
  std::vector<double> inv(n * n, 0.0);
  for (int i = 0; i < n; ++i) inv[i * n + i] = 1.0;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) piv = r;
    for (int c = 0; c < n; ++c) {
      std::swap(a[piv * n + c], a[col * n + c]);
      std::swap(inv[piv * n + c], inv[col * n + c]);
    }
    const double d = a[col * n + col];
    for (int c = 0; c < n; ++c) {
      a[col * n + c] /= d;
      inv[col * n + c] /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const double m = a[r * n + col];
      if (m == 0.0) continue;
      for (int c = 0; c < n; ++c) {
        a[r * n + c] -= m * a[col * n + c];
        inv[r * n + c] -= m * inv[col * n + c];
      }
    }
  }
  return inv;
}

}  // namespace idp::detail

#endif  // IDP_LAGRANGE_DETAIL_HPP_

#include "idp/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace idp {

namespace {

constexpr double kNewtonTol = 1e-15;
constexpr int kNewtonMaxIter = 100;

/// Legendre P_n(x) and P_n'(x) on [-1,1] by the three-term recurrence.
void legendre(int n, double x, double& p, double& dp) {
  double p0 = 1.0, p1 = x;
  if (n == 0) {
    p = p0;
    dp = 0.0;
    return;
  }
  for (int j = 2; j <= n; ++j) {
    const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
    p0 = p1;
    p1 = p2;
  }
  p = p1;
  dp = n * (x * p1 - p0) / (x * x - 1.0);
}

}  // namespace

QuadratureRule1D gauss_legendre(int Q) {
  if (Q < 1 || Q > 10) throw std::invalid_argument("Gauss rule needs 1 <= Q <= 10");
  QuadratureRule1D rule;
  rule.nodes.resize(Q);
  rule.weights.resize(Q);
  rule.exact_degree = 2 * Q - 1;
  for (int i = 0; i < Q; ++i) {
    // Chebyshev initial guess, refined by Newton on P_Q.
    double x = std::cos(M_PI * (i + 0.75) / (Q + 0.5));
    double p, dp;
    for (int it = 0; it < kNewtonMaxIter; ++it) {
      legendre(Q, x, p, dp);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < kNewtonTol) break;
    }
    legendre(Q, x, p, dp);
    rule.nodes[i] = 0.5 * x;
    rule.weights[i] = 1.0 / ((1.0 - x * x) * dp * dp);  // 2/((1-x^2)P'^2) / 2
  }
  std::reverse(rule.nodes.begin(), rule.nodes.end());
  std::reverse(rule.weights.begin(), rule.weights.end());
  if (Q == 1) {
    rule.nodes[0] = 0.0;
    rule.weights[0] = 1.0;
  }
  return rule;
}

QuadratureRule1D gauss_lobatto(int L) {
  if (L < 2 || L > 10)
    throw std::invalid_argument("Gauss-Lobatto rule needs 2 <= L <= 10");
  QuadratureRule1D rule;
  rule.nodes.resize(L);
  rule.weights.resize(L);
  rule.exact_degree = 2 * L - 3;
  const int n = L - 1;
  std::vector<double> x(L);
  x.front() = -1.0;
  x.back() = 1.0;
  // Interior nodes are roots of P'_{L-1}; Newton with
  // (1-x^2) P'' = 2x P' - n(n+1) P.
  for (int i = 1; i < L - 1; ++i) {
    double xi = std::cos(M_PI * (n - i) / n);  // Chebyshev-Lobatto guess
    for (int it = 0; it < kNewtonMaxIter; ++it) {
      double p, dp;
      legendre(n, xi, p, dp);
      const double d2p = (2.0 * xi * dp - n * (n + 1.0) * p) / (1.0 - xi * xi);
      const double dx = dp / d2p;
      xi -= dx;
      if (std::abs(dx) < kNewtonTol) break;
    }
    x[i] = xi;
  }
  for (int i = 0; i < L; ++i) {
    double p, dp;
    legendre(n, x[i], p, dp);
    rule.nodes[i] = 0.5 * x[i];
    rule.weights[i] = 1.0 / (L * n * p * p);  // 2/(L(L-1)P^2) / 2
  }
  return rule;
}

QuadratureRule1D cad_1d(int k) {
  if (k < 1 || k > 7) throw std::invalid_argument("cad_1d needs 1 <= k <= 7");
  const int L = (k + 3 + 1) / 2;  // ceil((k+3)/2)
  return gauss_lobatto(L);
}

double exactness_residual(const QuadratureRule1D& rule, int degree) {
  double res = 0.0;
  for (int d = 0; d <= degree; ++d) {
    double q = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
      q += rule.weights[i] * std::pow(rule.nodes[i], d);
    const double exact = d % 2 == 1 ? 0.0 : std::pow(0.5, d) / (d + 1.0);
    res = std::max(res, std::abs(q - exact));
  }
  return res;
}

std::vector<Node2D> ConvexDecomposition2D::all_nodes() const {
  std::vector<Node2D> nodes;
  for (const auto& face : face_nodes)
    nodes.insert(nodes.end(), face.begin(), face.end());
  nodes.insert(nodes.end(), internal_nodes.begin(), internal_nodes.end());
  return nodes;
}

double ConvexDecomposition2D::total_weight() const {
  double s = 0.0;
  for (const auto& nd : all_nodes()) s += nd.w;
  return s;
}

namespace {

int min_face_gauss_points(int k) { return (k + 2) / 2; }  // 2Q-1 >= k

/// Merge coincident internal nodes (the tensor grids can share the center).
void merge_coincident(std::vector<Node2D>& nodes) {
  std::vector<Node2D> merged;
  for (const auto& nd : nodes) {
    bool found = false;
    for (auto& m : merged) {
      if (std::abs(m.x - nd.x) < 1e-14 && std::abs(m.y - nd.y) < 1e-14) {
        m.w += nd.w;
        found = true;
        break;
      }
    }
    if (!found) merged.push_back(nd);
  }
  nodes = std::move(merged);
}

}  // namespace

ConvexDecomposition2D zs_quadrature_2d(int k, PolySpace space, double phi1,
                                       double phi2, int Q) {
  if (phi1 <= 0.0 || phi2 <= 0.0)
    throw std::invalid_argument("directional speeds must be positive");
  if (Q < min_face_gauss_points(k))
    throw std::invalid_argument("face Gauss rule too weak for the trace degree");
  const int L = (k + 3 + 1) / 2;
  const QuadratureRule1D lob = gauss_lobatto(L);
  const QuadratureRule1D gau = gauss_legendre(Q);

  ConvexDecomposition2D dec;
  dec.degree = k;
  dec.space = space;
  dec.phi1 = phi1;
  dec.phi2 = phi2;
  dec.omega1 = lob.weights.front();
  dec.kappa1 = phi1 / (phi1 + phi2);
  dec.kappa2 = phi2 / (phi1 + phi2);
  dec.cfl_coefficient = dec.omega1 / (phi1 + phi2);

  for (int q = 0; q < Q; ++q) {
    const double wq = gau.weights[q];
    dec.face_nodes[0].push_back({-0.5, gau.nodes[q], dec.kappa1 * dec.omega1 * wq});
    dec.face_nodes[1].push_back({+0.5, gau.nodes[q], dec.kappa1 * dec.omega1 * wq});
    dec.face_nodes[2].push_back({gau.nodes[q], -0.5, dec.kappa2 * dec.omega1 * wq});
    dec.face_nodes[3].push_back({gau.nodes[q], +0.5, dec.kappa2 * dec.omega1 * wq});
  }
  for (int mu = 1; mu + 1 < L; ++mu) {
    for (int q = 0; q < Q; ++q) {
      const double w = lob.weights[mu] * gau.weights[q];
      dec.internal_nodes.push_back(
          {lob.nodes[mu], gau.nodes[q], dec.kappa1 * w});
      dec.internal_nodes.push_back(
          {gau.nodes[q], lob.nodes[mu], dec.kappa2 * w});
    }
  }
  merge_coincident(dec.internal_nodes);
  return dec;
}

ConvexDecomposition2D optimal_quadrature_2d(int k, double phi1, double phi2,
                                            int Q) {
  if (k != 2 && k != 3)
    throw std::invalid_argument("optimal 2D decomposition supports k in {2,3}");
  if (phi1 <= 0.0 || phi2 <= 0.0)
    throw std::invalid_argument("directional speeds must be positive");
  if (Q < min_face_gauss_points(k))
    throw std::invalid_argument("face Gauss rule too weak for the trace degree");
  const QuadratureRule1D gau = gauss_legendre(Q);

  ConvexDecomposition2D dec;
  dec.degree = k;
  dec.space = PolySpace::Pk;
  dec.phi1 = phi1;
  dec.phi2 = phi2;
  dec.phi_star = std::max(phi1, phi2);
  dec.psi = phi1 + phi2 + 2.0 * dec.phi_star;
  dec.mu1 = phi1 / dec.psi;
  dec.mu2 = phi2 / dec.psi;
  dec.cfl_coefficient = 1.0 / (2.0 * phi1 + 2.0 * phi2 + 4.0 * dec.phi_star);
  const double wstar = dec.phi_star / dec.psi;

  for (int q = 0; q < Q; ++q) {
    const double wq = gau.weights[q];
    dec.face_nodes[0].push_back({-0.5, gau.nodes[q], 0.5 * dec.mu1 * wq});
    dec.face_nodes[1].push_back({+0.5, gau.nodes[q], 0.5 * dec.mu1 * wq});
    dec.face_nodes[2].push_back({gau.nodes[q], -0.5, 0.5 * dec.mu2 * wq});
    dec.face_nodes[3].push_back({gau.nodes[q], +0.5, 0.5 * dec.mu2 * wq});
  }
  // Internal nodes sit on the midline orthogonal to the slower direction.
  if (phi1 >= phi2) {
    const double off =
        std::sqrt((dec.phi_star - phi2) / dec.phi_star) / (2.0 * std::sqrt(3.0));
    dec.internal_nodes.push_back({0.0, +off, wstar});
    dec.internal_nodes.push_back({0.0, -off, wstar});
  } else {
    const double off =
        std::sqrt((dec.phi_star - phi1) / dec.phi_star) / (2.0 * std::sqrt(3.0));
    dec.internal_nodes.push_back({+off, 0.0, wstar});
    dec.internal_nodes.push_back({-off, 0.0, wstar});
  }
  merge_coincident(dec.internal_nodes);
  return dec;
}

double exactness_residual(const ConvexDecomposition2D& dec, int degree) {
  const auto nodes = dec.all_nodes();
  auto moment1d = [](int d) {
    return d % 2 == 1 ? 0.0 : std::pow(0.5, d) / (d + 1.0);
  };
  double res = 0.0;
  for (int a = 0; a <= degree; ++a) {
    for (int b = 0; b <= degree; ++b) {
      if (dec.space == PolySpace::Pk && a + b > degree) continue;
      double q = 0.0;
      for (const auto& nd : nodes)
        q += nd.w * std::pow(nd.x, a) * std::pow(nd.y, b);
      res = std::max(res, std::abs(q - moment1d(a) * moment1d(b)));
    }
  }
  return res;
}

double Triangle::area() const {
  return 0.5 * std::abs((v[1][0] - v[0][0]) * (v[2][1] - v[0][1]) -
                        (v[2][0] - v[0][0]) * (v[1][1] - v[0][1]));
}

namespace {

/// Reorder vertices so that edge i (opposite vertex i) satisfies l1>=l2>=l3.
Triangle sort_triangle(const Triangle& tri, std::array<double, 3>& len) {
  std::array<double, 3> l;
  for (int i = 0; i < 3; ++i) {
    const auto& a = tri.v[(i + 1) % 3];
    const auto& b = tri.v[(i + 2) % 3];
    l[i] = std::hypot(b[0] - a[0], b[1] - a[1]);
  }
  std::array<int, 3> idx = {0, 1, 2};
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return l[a] > l[b]; });
  Triangle out;
  for (int i = 0; i < 3; ++i) {
    out.v[i] = tri.v[idx[i]];
    len[i] = l[idx[i]];
  }
  return out;
}

void check_nondegenerate(const Triangle& tri, double l1) {
  if (tri.area() < 1e-14 * l1 * l1)
    throw std::invalid_argument("degenerate triangle");
}

}  // namespace

std::vector<Node2D> TriangleRule::boundary_nodes() const {
  const QuadratureRule1D gau = gauss_legendre(edge_gauss_points);
  std::vector<Node2D> nodes;
  for (int i = 0; i < 3; ++i) {
    const auto& a = tri.v[(i + 1) % 3];  // endpoints of edge opposite vertex i
    const auto& b = tri.v[(i + 2) % 3];
    for (std::size_t q = 0; q < gau.nodes.size(); ++q) {
      const double t = 0.5 + gau.nodes[q];  // [0,1] along the edge
      nodes.push_back({a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]),
                       edge_weight[i] * gau.weights[q]});
    }
  }
  return nodes;
}

double TriangleRule::total_weight() const {
  double s = 0.0;
  for (const auto& nd : boundary_nodes()) s += nd.w;
  for (const auto& nd : internal_nodes) s += nd.w;
  return s;
}

TriangleRule dcw_tri_p1(const Triangle& tri_in) {
  TriangleRule rule;
  rule.tri = sort_triangle(tri_in, rule.edge_len);
  const double l1 = rule.edge_len[0], l2 = rule.edge_len[1],
               l3 = rule.edge_len[2];
  check_nondegenerate(rule.tri, l1);
  const double denom = 3.0 * (l1 + l2);
  for (int i = 0; i < 3; ++i) rule.edge_weight[i] = 2.0 * rule.edge_len[i] / denom;
  rule.edge_gauss_points = 2;
  rule.exact_degree = 1;
  rule.cfl_coefficient = 2.0 / denom;
  rule.lbar = (l1 + l2 + l3) / 3.0;
  rule.lhat = 0.0;
  const double wstar = (l1 + l2 - 2.0 * l3) / denom;
  if (wstar > 1e-14) {
    const double a = l1 - l3, b = l2 - l3, s = l1 + l2 - 2.0 * l3;
    rule.internal_nodes.push_back(
        {(a * rule.tri.v[0][0] + b * rule.tri.v[1][0]) / s,
         (a * rule.tri.v[0][1] + b * rule.tri.v[1][1]) / s, wstar});
  }
  return rule;
}

TriangleRule dcw_tri_p2(const Triangle& tri_in) {
  TriangleRule rule;
  rule.tri = sort_triangle(tri_in, rule.edge_len);
  const double l1 = rule.edge_len[0], l2 = rule.edge_len[1],
               l3 = rule.edge_len[2];
  check_nondegenerate(rule.tri, l1);
  rule.lbar = (l1 + l2 + l3) / 3.0;
  rule.lhat = std::sqrt(l1 * l1 + l2 * l2 + l3 * l3 -
                        (2.0 / 3.0) * (l1 * l2 + l2 * l3 + l3 * l1));
  const double denom = 9.0 * rule.lbar + 3.0 * rule.lhat;
  for (int i = 0; i < 3; ++i) rule.edge_weight[i] = 2.0 * rule.edge_len[i] / denom;
  rule.edge_gauss_points = 3;
  rule.exact_degree = 2;
  rule.cfl_coefficient = 2.0 / denom;

  const double r3 = std::sqrt(3.0);
  // Printed coefficient tables for the two internal nodes.
  const double c[2][3] = {
      {3 * l1 + 3 * l2 + r3 * l2 - r3 * l3, 6 * l2 + r3 * l3 - r3 * l1,
       3 * l2 + 3 * l3 + r3 * l1 - r3 * l2},
      {3 * l1 + 3 * l2 + r3 * l3 - r3 * l2, 6 * l2 + r3 * l1 - r3 * l3,
       3 * l2 + 3 * l3 + r3 * l2 - r3 * l1}};
  using Mat3 = std::array<std::array<double, 3>, 3>;
  const Mat3 M[2][3] = {
      {Mat3{{{6, 1, -2}, {1, 2 * r3 + 6, -r3 - 2}, {-2, -r3 - 2, 6}}},
       Mat3{{{6, -r3 - 2, -2}, {-r3 - 2, 12, r3 - 2}, {-2, r3 - 2, 6}}},
       Mat3{{{6, r3 - 2, -2}, {r3 - 2, 6 - 2 * r3, 1}, {-2, 1, 6}}}},
      {Mat3{{{6, 1, -2}, {1, 6 - 2 * r3, r3 - 2}, {-2, r3 - 2, 6}}},
       Mat3{{{6, r3 - 2, -2}, {r3 - 2, 12, -r3 - 2}, {-2, -r3 - 2, 6}}},
       Mat3{{{6, -r3 - 2, -2}, {-r3 - 2, 2 * r3 + 6, 1}, {-2, 1, 6}}}}};

  const std::array<double, 3> lv = {l1, l2, l3};
  const double wstar =
      (rule.lbar + rule.lhat) / (6.0 * rule.lbar + 2.0 * rule.lhat);
  const double bden = 18.0 * (rule.lbar + rule.lhat) * (l2 + rule.lhat);
  for (int s = 0; s < 2; ++s) {
    double px = 0.0, py = 0.0;
    for (int i = 0; i < 3; ++i) {
      double quad = 0.0;
      for (int r = 0; r < 3; ++r)
        for (int cidx = 0; cidx < 3; ++cidx)
          quad += lv[r] * M[s][i][r][cidx] * lv[cidx];
      const double beta = (quad + 2.0 * c[s][i] * rule.lhat) / bden;
      rule.beta[s][i] = beta;
      px += beta * rule.tri.v[i][0];
      py += beta * rule.tri.v[i][1];
    }
    rule.internal_nodes.push_back({px, py, wstar});
  }
  return rule;
}

double tri_cfl_coefficient(TriMethod method, const Triangle& tri_in, int m) {
  std::array<double, 3> len;
  const Triangle tri = sort_triangle(tri_in, len);
  check_nondegenerate(tri, len[0]);
  const double l1 = len[0], l2 = len[1], l3 = len[2];
  auto omega1 = [](int deg) {
    const int L = (deg + 3 + 1) / 2;
    return 1.0 / (L * (L - 1.0));
  };
  switch (method) {
    case TriMethod::ZXS_original:
      if (m < 1 || m > 7) throw std::invalid_argument("ZXS supports m <= 7");
      return (2.0 / 3.0) * omega1(m) / (l1 + l2 + l3);
    case TriMethod::ZXS_improved:
      if (m < 1 || m > 7) throw std::invalid_argument("ZXS supports m <= 7");
      return (2.0 / 3.0) * omega1(m) / l1;
    case TriMethod::ChenShu: {
      static const double w_cs[4] = {1.0 / 3.0, 3.0 / 20.0, 0.086812,
                                     0.05572449};
      if (m < 1 || m > 4) throw std::invalid_argument("Chen-Shu supports m <= 4");
      return w_cs[m - 1] / l1;
    }
    case TriMethod::DCW:
      if (m == 1) return 2.0 / (3.0 * (l1 + l2));
      if (m == 2) return dcw_tri_p2(tri).cfl_coefficient;
      throw std::invalid_argument("DCW rules exist for m <= 2");
  }
  return 0.0;
}

namespace {

/// Dense bivariate polynomial in the reference-simplex coordinates, used to
/// expand monomials of the physical coordinates for exact integration.
struct Poly2 {
  int deg;
  std::vector<double> c;  // (deg+1)^2, index i*(deg+1)+j for X^i Y^j
  explicit Poly2(int d) : deg(d), c((d + 1) * (d + 1), 0.0) {}
  double& at(int i, int j) { return c[i * (deg + 1) + j]; }
  double at(int i, int j) const { return c[i * (deg + 1) + j]; }
};

Poly2 poly_mul(const Poly2& a, const Poly2& b, int cap) {
  Poly2 out(cap);
  for (int i = 0; i <= a.deg; ++i)
    for (int j = 0; j + i <= a.deg; ++j) {
      if (a.at(i, j) == 0.0) continue;
      for (int k = 0; k <= b.deg; ++k)
        for (int l = 0; l + k <= b.deg; ++l) {
          if (b.at(k, l) == 0.0) continue;
          out.at(i + k, j + l) += a.at(i, j) * b.at(k, l);
        }
    }
  return out;
}

/// Exact average over the triangle of x^a y^b via the affine map to the unit
/// simplex and int X^i Y^j = i! j! / (i+j+2)!.
double tri_monomial_average(const Triangle& tri, int a, int b) {
  const int cap = a + b;
  auto linear = [&](int coord) {
    Poly2 p(cap == 0 ? 1 : cap);
    p.at(0, 0) = tri.v[0][coord];
    p.at(1, 0) = tri.v[1][coord] - tri.v[0][coord];
    p.at(0, 1) = tri.v[2][coord] - tri.v[0][coord];
    return p;
  };
  Poly2 acc(cap == 0 ? 1 : cap);
  acc.at(0, 0) = 1.0;
  const Poly2 px = linear(0), py = linear(1);
  for (int i = 0; i < a; ++i) acc = poly_mul(acc, px, cap == 0 ? 1 : cap);
  for (int i = 0; i < b; ++i) acc = poly_mul(acc, py, cap == 0 ? 1 : cap);
  auto factorial = [](int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  double integral = 0.0;
  for (int i = 0; i <= acc.deg; ++i)
    for (int j = 0; j + i <= acc.deg; ++j)
      if (acc.at(i, j) != 0.0)
        integral += acc.at(i, j) * factorial(i) * factorial(j) /
                    factorial(i + j + 2);
  return 2.0 * integral;  // average = (1/|K|) * 2|K| * simplex integral
}

}  // namespace

double exactness_residual(const TriangleRule& rule, int degree) {
  auto nodes = rule.boundary_nodes();
  nodes.insert(nodes.end(), rule.internal_nodes.begin(),
               rule.internal_nodes.end());
  double res = 0.0;
  for (int a = 0; a <= degree; ++a) {
    for (int b = 0; a + b <= degree; ++b) {
      double q = 0.0;
      for (const auto& nd : nodes)
        q += nd.w * std::pow(nd.x, a) * std::pow(nd.y, b);
      res = std::max(res, std::abs(q - tri_monomial_average(rule.tri, a, b)));
    }
  }
  return res;
}

}  // namespace idp

#ifndef IDP_QUADRATURE_HPP_
#define IDP_QUADRATURE_HPP_

#include <array>
#include <vector>

namespace idp {

/// 1D rule on the reference interval [-1/2, 1/2]; weights sum to 1, so the
/// rule computes interval averages directly.
struct QuadratureRule1D {
  std::vector<double> nodes;
  std::vector<double> weights;
  int exact_degree = 0;
};

/// Q-point Gauss rule, exact to degree 2Q-1. 1 <= Q <= 10.
QuadratureRule1D gauss_legendre(int Q);

/// L-point Gauss-Lobatto rule, endpoints included, exact to degree 2L-3;
/// endpoint weights equal 1/(L(L-1)). 2 <= L <= 10.
QuadratureRule1D gauss_lobatto(int L);

/// 1D convex cell-average decomposition for degree k: the L-point
/// Gauss-Lobatto rule with L = ceil((k+3)/2). Its endpoint weight is the
/// IDP CFL factor omega_1. 1 <= k <= 7.
QuadratureRule1D cad_1d(int k);

/// Max over monomials x^d, d <= degree, of |rule(x^d) - exact average|.
double exactness_residual(const QuadratureRule1D& rule, int degree);

enum class PolySpace { Pk, Qk };

/// Weighted node on the reference square [-1/2,1/2]^2.
struct Node2D {
  double x = 0.0;
  double y = 0.0;
  double w = 0.0;
};

/// Convex decomposition of a rectangle-cell average into boundary and
/// internal point values. Face order: 0 left (x=-1/2), 1 right, 2 bottom
/// (y=-1/2), 3 top. cfl_coefficient is the certified bound: the weak IDP
/// property holds whenever dt <= cfl_coefficient * c0 for the given
/// directional speeds phi1 = alpha1/dx, phi2 = alpha2/dy.
struct ConvexDecomposition2D {
  int degree = 0;
  PolySpace space = PolySpace::Pk;
  double phi1 = 0.0, phi2 = 0.0;
  std::array<std::vector<Node2D>, 4> face_nodes;
  std::vector<Node2D> internal_nodes;
  double cfl_coefficient = 0.0;
  // construction parameters, kept for reporting
  double kappa1 = 0.0, kappa2 = 0.0;
  double mu1 = 0.0, mu2 = 0.0, psi = 0.0, phi_star = 0.0;
  double omega1 = 0.0;

  std::vector<Node2D> all_nodes() const;
  double total_weight() const;
};

/// Tensor decomposition with boundary face weights kappa_i * omega_1 and an
/// interior Lobatto x Gauss grid; dt bound (phi1 + phi2) dt <= omega_1 c0.
ConvexDecomposition2D zs_quadrature_2d(int k, PolySpace space, double phi1,
                                       double phi2, int Q);

/// Two-internal-node decomposition for P^2/P^3 with the mildest certified
/// CFL: (2 phi1 + 2 phi2 + 4 max(phi1,phi2)) dt <= c0. The internal nodes
/// merge to the cell center when phi1 == phi2.
ConvexDecomposition2D optimal_quadrature_2d(int k, double phi1, double phi2,
                                            int Q);

/// Max over monomials (total degree <= degree for Pk, per-variable for Qk)
/// of |decomposition(p) - exact cell average| on the reference square.
double exactness_residual(const ConvexDecomposition2D& dec, int degree);

struct Triangle {
  std::array<std::array<double, 2>, 3> v;
  double area() const;
};

/// Cell-average decomposition on a triangle: per-edge Gauss rules weighted by
/// w_i plus internal nodes. Vertices/edges are stored reordered so that
/// l1 >= l2 >= l3 with edge i opposite vertex i.
/// cfl_coefficient = min_i w_i / l_i certifies alpha dt / |K| <= C_IDP.
struct TriangleRule {
  Triangle tri;                       // reordered copy
  std::array<double, 3> edge_len{};   // l1 >= l2 >= l3
  std::array<double, 3> edge_weight{};
  int edge_gauss_points = 0;
  std::vector<Node2D> internal_nodes;  // physical coordinates
  double lbar = 0.0, lhat = 0.0;
  std::array<std::array<double, 3>, 2> beta{};  // barycentric internal coords
  double cfl_coefficient = 0.0;
  int exact_degree = 0;

  /// Edge Gauss nodes with combined weights w_i * (Gauss weight).
  std::vector<Node2D> boundary_nodes() const;
  double total_weight() const;
};

/// Optimal P^1 decomposition: w_i = 2 l_i / (3 l1 + 3 l2), at most one
/// internal node (none on equilateral cells). C_IDP = 2/(3(l1+l2)).
TriangleRule dcw_tri_p1(const Triangle& tri);

/// Optimal P^2 decomposition: w_i = 2 l_i / (9 lbar + 3 lhat), two internal
/// nodes from the printed coefficient tables. C_IDP = 2/(9 lbar + 3 lhat).
TriangleRule dcw_tri_p2(const Triangle& tri);

enum class TriMethod { ZXS_original, ZXS_improved, ChenShu, DCW };

/// Certified IDP CFL coefficient C with alpha dt / |K| <= C for a P^m scheme
/// on the given triangle. ZXS supports m <= 7, Chen-Shu m <= 4, DCW m <= 2.
double tri_cfl_coefficient(TriMethod method, const Triangle& tri, int m);

/// Max over monomials x^a y^b, a+b <= degree, of
/// |rule(p) - exact cell average of p| with analytic exact averages.
double exactness_residual(const TriangleRule& rule, int degree);

}  // namespace idp

#endif  // IDP_QUADRATURE_HPP_

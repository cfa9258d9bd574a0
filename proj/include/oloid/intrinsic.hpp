#ifndef OLOID_INTRINSIC_HPP
#define OLOID_INTRINSIC_HPP

// Intrinsic volumes of the oloid, each by a closed form and by quadrature of the
// surface integrands. Quantities without an explicit radius refer to the unit
// oloid; V_j scales like r^j.

#include "oloid/quadrature.hpp"

#include <Eigen/Core>

namespace oloid {

/// (V0, V1, V2, V3) of a convex body in R^3.
template <typename Scalar = double>
struct IntrinsicVolumes
{
  Eigen::Matrix<Scalar, 4, 1> v = Eigen::Matrix<Scalar, 4, 1>::Zero();

  IntrinsicVolumes() = default;
  explicit IntrinsicVolumes(const Eigen::Matrix<Scalar, 4, 1>& values)
    : v(values)
  {}
  IntrinsicVolumes(Scalar v0, Scalar v1, Scalar v2, Scalar v3)
    : v(v0, v1, v2, v3)
  {}

  Scalar operator[](int j) const { return v(j); }

  Scalar mean_width() const { return v(1) / 2; }
  Scalar surface() const { return 2 * v(2); }
  Scalar mean_curvature_integral() const { return EIGEN_PI * v(1); }
  Scalar volume() const { return v(3); }

  /// V_j(lambda K) = lambda^j V_j(K)
  IntrinsicVolumes scaled(Scalar lambda) const
  {
    return IntrinsicVolumes(v(0), lambda * v(1), lambda * lambda * v(2), lambda * lambda * lambda * v(3));
  }
};

enum class Route { closed, quadrature };
enum class EdgeRoute { direct, reduced };

inline constexpr double default_smooth_tol = 1e-12;
inline constexpr double default_singular_tol = 1e-10;

/// K(sqrt(3)/2) and E(sqrt(3)/2).
double oloid_k();
double oloid_e();

// Integrands on (0, 2pi/3), written in terms of the exact offsets from the ends
// so that the factor 1 + 2cos t keeps full relative accuracy at t -> 2pi/3.
double surface_integrand(double t, EndpointOffsets off);
double volume_integrand(double t, EndpointOffsets off);
double curvature_integrand(double t, EndpointOffsets off);

/// Result carries the quadrature error estimate; closed routes report zero.
struct RouteValue
{
  double value;
  double err_est;
};

RouteValue surface_area(Route route, double tol = default_singular_tol);
RouteValue volume(Route route, double tol = default_singular_tol);

/// Integral of H dS over the smooth part of the boundary, 3 K(sqrt(3)/2).
RouteValue curvature_integral(Route route, double tol = default_singular_tol);

/// int_0^{pi/2} arccos(cos t / (1 + cos t)) dt, computed once at tol 1e-13 and cached.
double coxeter_like_I();

/// Quadrature of the same integral at a caller-chosen tolerance.
QuadResult coxeter_like_I(double tol);

/// Edge contribution (1/2) sum_j int_{e_j} alpha ds = int_{e_1} alpha dt.
RouteValue edge_integral(EdgeRoute route, double tol = default_smooth_tol);

/// M(Omega_r) = [3K + 3pi^2/2 - 4I] r
double mean_curvature_total(double r);

/// Mean width via M / (2 pi).
double mean_width(double r);

IntrinsicVolumes<double> oloid_intrinsic_volumes(double r);

struct EllipticIdentityCheck
{
  double J;
  double K;
  double delta;
};

/// J = int_0^{2pi/3} dt / sqrt(1 + 2cos t) by singular quadrature against the AGM
/// value of K(sqrt(3)/2). Throws std::runtime_error if delta exceeds tol.
EllipticIdentityCheck elliptic_identity_check(double tol);

/// Integrand after the substitution sin(t/2) = sin(pi/3) sin(phi).
double elliptic_identity_integrand(double phi);

} // namespace oloid

#endif // OLOID_INTRINSIC_HPP

#ifndef OLOID_KINEMATIC_HPP
#define OLOID_KINEMATIC_HPP

// Steiner parallel-body formulas and the principal kinematic formula in R^3.
//
// The motion integrals are bilinear in the intrinsic volumes of the two bodies,
//   I_j(K, M) = sum_{k=j}^{3} alpha_{3jk} V_k(K) V_{3+j-k}(M) = V(K)^T A_j V(M),
// with A_j the 4x4 coefficient matrix from kinematic_matrix(j).

#include "oloid/intrinsic.hpp"

#include <Eigen/Core>

#include <cstdint>

namespace oloid {

/// Volume of the k-dimensional unit ball, pi^{k/2} / Gamma(1 + k/2).
double kappa(int k);

/// Kinematic coefficient alpha_{njk}; requires 0 <= j <= k <= n.
double alpha_coeff(int n, int j, int k);

/// Coefficient matrix of I_j for n = 3; requires 0 <= j <= 3.
Eigen::Matrix4d kinematic_matrix(int j);

/// Volume of K + rho B^3 by the Steiner polynomial.
double steiner_volume(const IntrinsicVolumes<double>& body, double rho);

struct ParallelBodyQuantities
{
  double M; // integral of mean curvature
  double S; // surface area
  double V; // volume
  double rho;
};

/// Parallel body of the oloid of radius r at distance rho.
ParallelBodyQuantities parallel_body(double r, double rho);

/// (1, 4r, 2 pi r^2, 4 pi r^3 / 3)
IntrinsicVolumes<double> ball_intrinsic_volumes(double r);

/// V_k(B_r) = C(3, k) kappa_3 / kappa_{3-k} r^k
IntrinsicVolumes<double> ball_intrinsic_volumes_binomial(double r);

struct KinematicFunctionals
{
  Eigen::Vector4d I = Eigen::Vector4d::Zero(); // I_0 .. I_3

  double operator[](int j) const { return I(j); }
};

KinematicFunctionals kinematic_functionals(const IntrinsicVolumes<double>& fixed,
                                           const IntrinsicVolumes<double>& moving);

struct IntersectionExpectations
{
  double mean_width; // I_1 / (2 I_0)
  double surface;    // 2 I_2 / I_0
  double volume;     // I_3 / I_0
};

/// Throws std::domain_error when I_0 vanishes.
IntersectionExpectations intersection_expectations(const IntrinsicVolumes<double>& fixed,
                                                   const IntrinsicVolumes<double>& moving);

/// Intersection of two unit balls with centres d apart, 0 <= d <= 2.
double lens_volume(double d);
double lens_surface(double d);

struct BallBallMonteCarlo
{
  double volume;
  double surface;
  double volume_std_error;
  double surface_std_error;
};

/// E[V] and E[S] of B_1 cap (B_1 + x) over hitting translations, estimated by
/// sampling the centre offset uniformly in the radius-2 ball. Requires n >= 10^4.
BallBallMonteCarlo mc_ball_ball_expectations(std::uint64_t n, std::uint64_t seed);

} // namespace oloid

#endif // OLOID_KINEMATIC_HPP

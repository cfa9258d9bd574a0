#ifndef OLOID_SUPPORT_HPP
#define OLOID_SUPPORT_HPP

// Support function and widths of the unit oloid, and the mean width computed
// directly from them.
//
// The oloid is the convex hull of k_A and k_B, so its support function is the
// larger of the two circle supports:
//   h(u) = max(-u_y/2 + sqrt(u_x^2 + u_y^2),  u_y/2 + sqrt(u_y^2 + u_z^2)).
// In spherical coordinates u = (cos phi sin theta, sin phi sin theta, cos theta)
// the two terms are support_branch_A and support_branch_B.

#include "oloid/quadrature.hpp"
#include "oloid/random.hpp"
#include "oloid/surface.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>

namespace oloid {

template <typename Scalar>
Vec3<Scalar> direction(Scalar phi, Scalar theta)
{
  using std::cos;
  using std::sin;
  return {cos(phi) * sin(theta), sin(phi) * sin(theta), cos(theta)};
}

/// Support of the oloid in the unit direction u.
template <typename Derived>
typename Derived::Scalar support_dir(const Eigen::MatrixBase<Derived>& u)
{
  using Scalar = typename Derived::Scalar;
  using std::abs;
  using std::sqrt;
  static_assert(Derived::SizeAtCompileTime == 3, "support_dir expects a 3-vector");
  if (abs(u.norm() - Scalar(1)) > Scalar(1e-12))
    throw std::domain_error("support_dir: direction must be a unit vector");
  const Scalar via_a = -u.y() / 2 + sqrt(u.x() * u.x() + u.y() * u.y());
  const Scalar via_b = u.y() / 2 + sqrt(u.y() * u.y() + u.z() * u.z());
  return via_a > via_b ? via_a : via_b;
}

/// Support of k_A: (1 - sin(phi)/2) sin(theta) on the first octant.
template <typename Scalar>
Scalar support_branch_A(Scalar phi, Scalar theta)
{
  using std::abs;
  using std::sin;
  return abs(sin(theta)) - sin(phi) * sin(theta) / 2;
}

/// Support of k_B: sin(phi) sin(theta)/2 + sqrt(sin^2 phi sin^2 theta + cos^2 theta).
template <typename Scalar>
Scalar support_branch_B(Scalar phi, Scalar theta)
{
  using std::cos;
  using std::sin;
  using std::sqrt;
  const Scalar b = sin(phi) * sin(theta);
  const Scalar c = cos(theta);
  return b / 2 + sqrt(b * b + c * c);
}

template <typename Scalar>
Scalar support_spherical(Scalar phi, Scalar theta)
{
  const Scalar a = support_branch_A(phi, theta);
  const Scalar b = support_branch_B(phi, theta);
  return a > b ? a : b;
}

/// Distance between the two support planes orthogonal to u.
template <typename Derived>
typename Derived::Scalar width(const Eigen::MatrixBase<Derived>& u)
{
  return support_dir(u) + support_dir(-u);
}

template <typename Scalar>
Scalar width(Scalar phi, Scalar theta)
{
  return support_spherical(phi, theta) +
         support_spherical(std::numbers::pi_v<Scalar> + phi, std::numbers::pi_v<Scalar> - theta);
}

/// Polar angle at which the two branches swap, for phi in [0, pi/6]:
/// branch A dominates for theta >= xi(phi).
double xi(double phi);

/// (4/pi) int_0^{pi/2} int_0^{pi/2} p sin(theta) dtheta dphi, split along xi into
/// the three pieces on which p is a single branch.
template <class BranchA, class BranchB>
QuadResult octant_mean_width(const BranchA& branch_a, const BranchB& branch_b, double tol)
{
  constexpr double pi = std::numbers::pi;
  // the three parts share tol; scale by pi/4 since the sum is multiplied by 4/pi
  const double part_tol = tol * pi / 12;
  auto with_b = [&](double phi, double theta) { return branch_b(phi, theta) * std::sin(theta); };
  auto with_a = [&](double phi, double theta) { return branch_a(phi, theta) * std::sin(theta); };
  auto zero = [](double) { return 0.0; };
  auto quarter = [](double) { return pi / 2; };
  auto xi_of = [](double phi) { return xi(phi); };

  const auto below = integrate2d(with_b, 0.0, pi / 6, zero, xi_of, part_tol);
  const auto above = integrate2d(with_a, 0.0, pi / 6, xi_of, quarter, part_tol);
  const auto rest = integrate2d(with_b, pi / 6, pi / 2, zero, quarter, part_tol);
  const double scale = 4 / pi;
  return {scale * (below.value + above.value + rest.value),
          scale * (below.err_est + above.err_est + rest.err_est), below.evals + above.evals + rest.evals};
}

/// Mean width of the unit oloid by direct integration of the support function.
QuadResult mean_width_direct(double tol);

struct MonteCarloEstimate
{
  double estimate;
  double std_error;
};

/// Average of h(u) + h(-u) over n uniformly distributed directions.
template <class Support>
MonteCarloEstimate mean_width_montecarlo(const Support& support, std::uint64_t n, std::uint64_t seed)
{
  if (n < 1000)
    throw std::invalid_argument("mean_width_montecarlo: requires n >= 1000");
  const auto stats = sharded_stats<1>(n, seed, [&](CounterRng& rng) {
    std::normal_distribution<double> normal;
    Vector3 u;
    double norm = 0;
    do {
      const double x = normal(rng);
      const double y = normal(rng);
      u = Vector3(x, y, normal(rng));
      norm = u.norm();
    } while (norm == 0);
    u /= norm;
    return Eigen::Matrix<double, 1, 1>(support(u) + support(Vector3(-u)));
  });
  return {stats.mean(0), stats.standard_error()(0)};
}

MonteCarloEstimate mean_width_montecarlo(std::uint64_t n, std::uint64_t seed);

} // namespace oloid

#endif // OLOID_SUPPORT_HPP

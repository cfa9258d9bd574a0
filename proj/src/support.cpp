#include "oloid/support.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace oloid {

double xi(double phi)
{
  if (!(phi >= 0 && phi <= std::numbers::pi / 6))
    throw std::domain_error("xi: requires 0 <= phi <= pi/6");
  const double s = std::sin(phi);
  const double ratio = (1 - 2 * s) / (2 - 2 * s);
  return std::acos(std::sqrt(ratio > 0 ? ratio : 0.0));
}

QuadResult mean_width_direct(double tol)
{
  return octant_mean_width([](double phi, double theta) { return support_branch_A(phi, theta); },
                           [](double phi, double theta) { return support_branch_B(phi, theta); }, tol);
}

MonteCarloEstimate mean_width_montecarlo(std::uint64_t n, std::uint64_t seed)
{
  return mean_width_montecarlo([](const Vector3& u) { return support_dir(u); }, n, seed);
}

} // namespace oloid

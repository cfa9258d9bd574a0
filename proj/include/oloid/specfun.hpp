#ifndef OLOID_SPECFUN_HPP
#define OLOID_SPECFUN_HPP

// Complete elliptic integrals of the first and second kind.
//
// Both functions take the MODULUS k, not the parameter m = k^2:
//
//   K(k) = int_0^{pi/2} dx / sqrt(1 - k^2 sin^2 x)
//   E(k) = int_0^{pi/2} sqrt(1 - k^2 sin^2 x) dx
//
// so the oloid constants are written ellipk(sqrt(3)/2), ellipe(sqrt(3)/2).
// Evaluation uses the arithmetic-geometric mean; E comes from the same
// iteration through the sum of squared half-differences.

#include <cmath>
#include <concepts>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace oloid {

namespace detail {

template <std::floating_point Real>
struct AgmResult
{
  Real mean;
  // sum_{n>=0} 2^{n-1} c_n^2 with c_0 = k
  Real weighted_sum;
};

template <std::floating_point Real>
AgmResult<Real> agm_with_sum(Real k)
{
  using std::abs;
  using std::sqrt;
  constexpr int max_iterations = 64;
  const Real eps = std::numeric_limits<Real>::epsilon();

  Real a = 1;
  Real b = sqrt((1 - k) * (1 + k));
  Real c = k;
  Real power = Real(0.5);
  Real sum = power * c * c;
  for (int i = 0; i < max_iterations; ++i) {
    if (abs(a - b) <= 4 * eps * a)
      break;
    const Real a_next = (a + b) / 2;
    const Real b_next = sqrt(a * b);
    c = (a - b) / 2;
    power *= 2;
    sum += power * c * c;
    a = a_next;
    b = b_next;
  }
  return {(a + b) / 2, sum};
}

} // namespace detail

/// Complete elliptic integral of the first kind K(k), 0 <= k < 1.
template <std::floating_point Real>
Real ellipk(Real k)
{
  if (!(k >= 0 && k < 1))
    throw std::domain_error("ellipk: modulus must satisfy 0 <= k < 1");
  return std::numbers::pi_v<Real> / (2 * detail::agm_with_sum(k).mean);
}

/// Complete elliptic integral of the second kind E(k), 0 <= k <= 1.
template <std::floating_point Real>
Real ellipe(Real k)
{
  if (!(k >= 0 && k <= 1))
    throw std::domain_error("ellipe: modulus must satisfy 0 <= k <= 1");
  if (k == 1)
    return 1;
  const auto agm = detail::agm_with_sum(k);
  const Real big_k = std::numbers::pi_v<Real> / (2 * agm.mean);
  return big_k * (1 - agm.weighted_sum);
}

} // namespace oloid

#endif // OLOID_SPECFUN_HPP

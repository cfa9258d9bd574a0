#ifndef OLOID_SURFACE_HPP
#define OLOID_SURFACE_HPP

// Differential geometry of the unit oloid (r = 1): the convex hull of
//   k_A: x^2 + (y + 1/2)^2 = 1, z = 0
//   k_B: (y - 1/2)^2 + z^2 = 1, x = 0
//
// The boundary is covered by two sheets (z >= 0 and z <= 0) of the ruled surface
//   w(m, t) = ((1-m) sin t, w2(m, t), +-m sqrt(1 + 2cos t) / (1 + cos t)),
//   0 <= m <= 1, |t| <= 2pi/3,
// whose generators t = const run from k_A (m = 0) to k_B (m = 1).
//
// Everything here is templated on the scalar type so the finite-difference
// oracles in the tests can run in extended precision.

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <cmath>
#include <numbers>

namespace oloid {

template <typename Scalar>
using Vec3 = Eigen::Matrix<Scalar, 3, 1>;

using Vector3 = Vec3<double>;

enum class Sheet { upper, lower };

template <typename Scalar = double>
struct ParamPoint
{
  Scalar m;
  Scalar t;
  Sheet sheet = Sheet::upper;
};

template <typename Scalar = double>
struct MetricCoeffs
{
  Scalar g11, g12, g22, g;
};

template <typename Scalar>
constexpr Scalar parameter_t_max = 2 * std::numbers::pi_v<Scalar> / 3;

/// Unit-speed parametrization of k_A.
template <typename Scalar>
Vec3<Scalar> circle_point_A(Scalar t)
{
  using std::cos;
  using std::sin;
  return {sin(t), -cos(t) - Scalar(0.5), Scalar(0)};
}

/// Unit-speed parametrization of k_B.
template <typename Scalar>
Vec3<Scalar> circle_point_B(Scalar t)
{
  using std::cos;
  using std::sin;
  return {Scalar(0), cos(t) + Scalar(0.5), sin(t)};
}

namespace detail {

// 1 + 2cos t, clamped at zero where rounding near |t| = 2pi/3 would make it negative.
template <typename Scalar>
Scalar one_plus_two_cos(Scalar t)
{
  using std::cos;
  const Scalar v = 1 + 2 * cos(t);
  return v > 0 ? v : Scalar(0);
}

} // namespace detail

template <typename Scalar>
Vec3<Scalar> surface_point(Scalar m, Scalar t, Sheet sheet = Sheet::upper)
{
  using std::cos;
  using std::sin;
  using std::sqrt;
  const Scalar c = cos(t);
  const Scalar x = (1 - m) * sin(t);
  const Scalar y = (2 * (m - 1) * c * c + (2 * m - 3) * c + 2 * m - 1) / (2 * (1 + c));
  const Scalar z = m * sqrt(detail::one_plus_two_cos(t)) / (1 + c);
  return {x, y, sheet == Sheet::upper ? z : -z};
}

template <typename Scalar>
Vec3<Scalar> surface_point(const ParamPoint<Scalar>& p)
{
  return surface_point(p.m, p.t, p.sheet);
}

/// First fundamental form of the upper sheet. g11 is identically 3.
template <typename Scalar>
MetricCoeffs<Scalar> metric(Scalar m, Scalar t)
{
  using std::cos;
  using std::tan;
  const Scalar c = cos(t);
  const Scalar denom = (1 + c) * (1 + 2 * c);
  const Scalar lin = (3 * m - 2) * c - 1;
  return {Scalar(3), tan(t / 2),
          (2 * (3 * m * m - 4 * m + 1) * c * c - (4 * m - 3) * c + 1) / denom,
          2 * lin * lin / denom};
}

/// sqrt(g); equals sqrt(2)[(2 - 3m)cos t + 1] / sqrt((1 + cos t)(1 + 2cos t)).
template <typename Scalar>
Scalar area_element(Scalar m, Scalar t)
{
  using std::sqrt;
  const Scalar g = metric(m, t).g;
  return sqrt(g > 0 ? g : Scalar(0));
}

/// Outward unit normal of the upper sheet; constant along each generator. It
/// points along w_t x w_m.
template <typename Scalar>
Vec3<Scalar> unit_normal(Scalar t)
{
  using std::cos;
  using std::sin;
  using std::sqrt;
  const Scalar ch = cos(t / 2);
  return {sin(t / 2), -cos(t) / (2 * ch), sqrt(detail::one_plus_two_cos(t)) / (2 * ch)};
}

/// Density of H dS per unit dm dt. Diverges like (2pi/3 - |t|)^(-1/2).
template <typename Scalar>
Scalar mean_curvature_density(Scalar t)
{
  using std::sqrt;
  return 3 / (4 * sqrt(detail::one_plus_two_cos(t)));
}

// Second fundamental form against the outward normal. The surface is
// developable: b11 and b12 vanish identically.
template <typename Scalar = double>
constexpr Scalar second_form_b11 = Scalar(0);
template <typename Scalar = double>
constexpr Scalar second_form_b12 = Scalar(0);

template <typename Scalar>
Scalar second_form_b22(Scalar m, Scalar t)
{
  using std::cos;
  using std::sqrt;
  const Scalar c = cos(t);
  return ((3 * m - 2) * c - 1) / (sqrt(Scalar(2)) * (1 + 2 * c) * sqrt(1 + c));
}

/// Angle between the normals of the two sheets along the k_A edge, in [0, pi].
template <typename Scalar>
Scalar edge_angle(Scalar t)
{
  using std::acos;
  using std::cos;
  const Scalar c = cos(t);
  Scalar arg = -c / (1 + c);
  if (arg > 1)
    arg = 1;
  if (arg < -1)
    arg = -1;
  return acos(arg);
}

/// d(w1, w2)/d(m, t); negative on the parameter domain except at (m, t) = (1, 0).
template <typename Scalar>
Scalar jacobian_xy(Scalar m, Scalar t)
{
  using std::cos;
  const Scalar c = cos(t);
  return -(1 + (2 - 3 * m) * c) / (1 + c);
}

} // namespace oloid

#endif // OLOID_SURFACE_HPP

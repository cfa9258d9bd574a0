#include "oloid/intrinsic.hpp"

#include "oloid/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace oloid {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double t_end = 2 * pi / 3;

// With s = 2pi/3 - t:
//   1 + 2cos t = 2 sin^2(s/2) + sqrt(3) sin s
//   1 +  cos t = 1 - cos(s)/2 + (sqrt(3)/2) sin s
struct CosTerms
{
  double one_plus_cos;
  double one_plus_two_cos;
};

CosTerms cos_terms(EndpointOffsets off)
{
  const double s = off.from_b;
  const double half = std::sin(s / 2);
  const double sin_s = std::sin(s);
  return {1 - std::cos(s) / 2 + std::numbers::sqrt3 / 2 * sin_s,
          2 * half * half + std::numbers::sqrt3 * sin_s};
}

void require_positive(double r, const char* who)
{
  if (!(r > 0) || !std::isfinite(r))
    throw std::invalid_argument(std::string(who) + ": radius must be positive");
}

} // namespace

double oloid_k()
{
  static const double k = ellipk(std::numbers::sqrt3 / 2);
  return k;
}

double oloid_e()
{
  static const double e = ellipe(std::numbers::sqrt3 / 2);
  return e;
}

double surface_integrand(double t, EndpointOffsets off)
{
  const auto c = cos_terms(off);
  return (2 + std::cos(t)) / std::sqrt(c.one_plus_cos * c.one_plus_two_cos);
}

double volume_integrand(double, EndpointOffsets off)
{
  const auto c = cos_terms(off);
  return std::sqrt(c.one_plus_two_cos) / (c.one_plus_cos * c.one_plus_cos);
}

double curvature_integrand(double, EndpointOffsets off)
{
  return 1 / std::sqrt(cos_terms(off).one_plus_two_cos);
}

RouteValue surface_area(Route route, double tol)
{
  if (route == Route::closed)
    return {4 * pi, 0};
  const auto q = integrate_singular(surface_integrand, 0.0, t_end, tol);
  return {2 * std::numbers::sqrt2 * q.value, 2 * std::numbers::sqrt2 * q.err_est};
}

RouteValue volume(Route route, double tol)
{
  if (route == Route::closed)
    return {2.0 / 3.0 * (oloid_k() + 2 * oloid_e()), 0};
  const auto q = integrate_singular(volume_integrand, 0.0, t_end, tol);
  return {2 * q.value, 2 * q.err_est};
}

RouteValue curvature_integral(Route route, double tol)
{
  if (route == Route::closed)
    return {3 * oloid_k(), 0};
  const auto q = integrate_singular(curvature_integrand, 0.0, t_end, tol);
  return {3 * q.value, 3 * q.err_est};
}

QuadResult coxeter_like_I(double tol)
{
  return integrate(
    [](double t) {
      const double c = std::cos(t);
      return std::acos(c / (1 + c));
    },
    0.0, pi / 2, tol);
}

double coxeter_like_I()
{
  static const double value = coxeter_like_I(1e-13).value;
  return value;
}

RouteValue edge_integral(EdgeRoute route, double tol)
{
  if (route == EdgeRoute::reduced)
    return {3 * pi * pi / 2 - 4 * coxeter_like_I(), 0};
  // alpha = arccos(1 - 2x) = 2 asin(sqrt(x)) with x = (1 + 2cos t) / (2(1 + cos t))
  const auto q = integrate_singular(
    [](double, EndpointOffsets off) {
      const auto c = cos_terms(off);
      return 2 * std::asin(std::sqrt(c.one_plus_two_cos / (2 * c.one_plus_cos)));
    },
    0.0, t_end, tol);
  return {2 * q.value, 2 * q.err_est};
}

double mean_curvature_total(double r)
{
  require_positive(r, "mean_curvature_total");
  return (3 * oloid_k() + 3 * pi * pi / 2 - 4 * coxeter_like_I()) * r;
}

double mean_width(double r)
{
  require_positive(r, "mean_width");
  return mean_curvature_total(r) / (2 * pi);
}

IntrinsicVolumes<double> oloid_intrinsic_volumes(double r)
{
  require_positive(r, "oloid_intrinsic_volumes");
  return {1.0, mean_curvature_total(r) / pi, 2 * pi * r * r, volume(Route::closed).value * r * r * r};
}

EllipticIdentityCheck elliptic_identity_check(double tol)
{
  if (!(tol > 0))
    throw std::invalid_argument("elliptic_identity_check: tol must be positive");
  const double j = integrate_singular(curvature_integrand, 0.0, t_end, tol).value;
  const double k = oloid_k();
  const double delta = std::abs(j - k);
  if (delta > tol)
    throw std::runtime_error("elliptic_identity_check: |J - K| = " + std::to_string(delta) + " exceeds tol");
  return {j, k, delta};
}

double elliptic_identity_integrand(double phi)
{
  const double s = std::sin(phi);
  return 1 / std::sqrt(1 - 0.75 * s * s);
}

} // namespace oloid

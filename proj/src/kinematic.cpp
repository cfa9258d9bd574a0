#include "oloid/kinematic.hpp"

#include "oloid/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace oloid {

namespace {

constexpr double pi = std::numbers::pi;

double factorial(int n)
{
  double f = 1;
  for (int i = 2; i <= n; ++i)
    f *= i;
  return f;
}

// Gamma(1 + k/2) from Gamma(1) = 1, Gamma(1/2) = sqrt(pi), Gamma(x + 1) = x Gamma(x).
double gamma_one_plus_half(int k)
{
  double x = (k % 2 == 0) ? 1.0 : 0.5;
  double g = (k % 2 == 0) ? 1.0 : std::sqrt(pi);
  const double target = 1 + k / 2.0;
  while (x < target) {
    g *= x;
    x += 1;
  }
  return g;
}

void require_radius(double r)
{
  if (!(r > 0) || !std::isfinite(r))
    throw std::invalid_argument("radius must be positive");
}

} // namespace

double kappa(int k)
{
  if (k < 0)
    throw std::out_of_range("kappa: dimension must be non-negative");
  return std::pow(pi, k / 2.0) / gamma_one_plus_half(k);
}

double alpha_coeff(int n, int j, int k)
{
  if (!(0 <= j && j <= k && k <= n))
    throw std::out_of_range("alpha_coeff: requires 0 <= j <= k <= n, got (" + std::to_string(n) + ", " +
                            std::to_string(j) + ", " + std::to_string(k) + ")");
  const int l = n + j - k;
  return factorial(k) * kappa(k) * factorial(l) * kappa(l) / (factorial(j) * kappa(j) * factorial(n) * kappa(n));
}

Eigen::Matrix4d kinematic_matrix(int j)
{
  if (j < 0 || j > 3)
    throw std::out_of_range("kinematic_matrix: requires 0 <= j <= 3");
  Eigen::Matrix4d a = Eigen::Matrix4d::Zero();
  for (int k = j; k <= 3; ++k)
    a(k, 3 + j - k) = alpha_coeff(3, j, k);
  return a;
}

double steiner_volume(const IntrinsicVolumes<double>& body, double rho)
{
  if (!(rho >= 0))
    throw std::invalid_argument("steiner_volume: rho must be non-negative");
  double v = 0;
  for (int j = 0; j <= 3; ++j)
    v += std::pow(rho, 3 - j) * kappa(3 - j) * body[j];
  return v;
}

ParallelBodyQuantities parallel_body(double r, double rho)
{
  require_radius(r);
  if (!(rho >= 0) || !std::isfinite(rho))
    throw std::invalid_argument("parallel_body: rho must be non-negative");
  const double m1 = mean_curvature_total(1.0);
  const double v1 = volume(Route::closed).value;
  return {m1 * r + 4 * pi * rho, 4 * pi * r * r + 2 * m1 * r * rho + 4 * pi * rho * rho,
          v1 * r * r * r + 4 * pi * r * r * rho + m1 * r * rho * rho + 4 * pi / 3 * rho * rho * rho, rho};
}

IntrinsicVolumes<double> ball_intrinsic_volumes(double r)
{
  require_radius(r);
  return {1.0, 4 * r, 2 * pi * r * r, 4 * pi * r * r * r / 3};
}

IntrinsicVolumes<double> ball_intrinsic_volumes_binomial(double r)
{
  require_radius(r);
  Eigen::Vector4d v;
  for (int k = 0; k <= 3; ++k)
    v(k) = factorial(3) / (factorial(k) * factorial(3 - k)) * kappa(3) / kappa(3 - k) * std::pow(r, k);
  return IntrinsicVolumes<double>(v);
}

KinematicFunctionals kinematic_functionals(const IntrinsicVolumes<double>& fixed,
                                           const IntrinsicVolumes<double>& moving)
{
  KinematicFunctionals out;
  for (int j = 0; j <= 3; ++j)
    out.I(j) = fixed.v.dot(kinematic_matrix(j) * moving.v);
  return out;
}

IntersectionExpectations intersection_expectations(const IntrinsicVolumes<double>& fixed,
                                                   const IntrinsicVolumes<double>& moving)
{
  const auto f = kinematic_functionals(fixed, moving);
  if (!(f.I(0) > 0))
    throw std::domain_error("intersection_expectations: motion measure I_0 is zero");
  return {f.I(1) / (2 * f.I(0)), 2 * f.I(2) / f.I(0), f.I(3) / f.I(0)};
}

double lens_volume(double d)
{
  return pi / 12 * (4 + d) * (2 - d) * (2 - d);
}

double lens_surface(double d)
{
  return 4 * pi - 2 * pi * d;
}

BallBallMonteCarlo mc_ball_ball_expectations(std::uint64_t n, std::uint64_t seed)
{
  if (n < 10'000)
    throw std::invalid_argument("mc_ball_ball_expectations: requires n >= 10^4");
  // |x| of a uniform point in the radius-2 ball has density proportional to d^2
  const auto stats = sharded_stats<2>(n, seed, [](CounterRng& rng) {
    const double d = 2 * std::cbrt(rng.uniform());
    return Eigen::Vector2d(lens_volume(d), lens_surface(d));
  });
  const Eigen::Vector2d se = stats.standard_error();
  return {stats.mean(0), stats.mean(1), se(0), se(1)};
}

} // namespace oloid

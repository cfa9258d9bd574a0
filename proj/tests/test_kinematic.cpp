#include "oloid/kinematic.hpp"

#include "oloid/random.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

using namespace oloid;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double ref_volume = 3.05241846842437485669720053193;
constexpr double ref_M = 13.7644293270030696543343466299;

using IV = IntrinsicVolumes<double>;

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// the n = 3 formulas written out term by term
Eigen::Vector4d explicit_functionals(const IV& k, const IV& m)
{
  return {k[0] * m[3] + k[1] * m[2] / 2 + k[2] * m[1] / 2 + k[3] * m[0],
          k[1] * m[3] + pi / 4 * k[2] * m[2] + k[3] * m[1], k[2] * m[3] + k[3] * m[2], k[3] * m[3]};
}

double factorial(int n) { return n <= 1 ? 1.0 : n * factorial(n - 1); }

IV random_body(std::mt19937_64& gen)
{
  std::uniform_real_distribution<double> u(0.1, 5);
  return IV(1, u(gen), u(gen), u(gen));
}

} // namespace

TEST_CASE("kappa")
{
  CHECK(kappa(0) == 1);
  CHECK(kappa(1) == doctest::Approx(2).epsilon(1e-15));
  CHECK(kappa(2) == doctest::Approx(pi).epsilon(1e-15));
  CHECK(kappa(3) == doctest::Approx(4 * pi / 3).epsilon(1e-15));
  CHECK(kappa(4) == doctest::Approx(pi * pi / 2).epsilon(1e-15));
  CHECK(kappa(5) == doctest::Approx(8 * pi * pi / 15).epsilon(1e-15));
  for (int k = 0; k <= 8; ++k)
    CHECK(kappa(k) == doctest::Approx(std::pow(pi, k / 2.0) / std::tgamma(1 + k / 2.0)).epsilon(1e-14));
}

TEST_CASE("alpha coefficients")
{
  CHECK(alpha_coeff(3, 0, 1) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(alpha_coeff(3, 1, 2) == doctest::Approx(pi / 4).epsilon(1e-15));
  for (int n = 0; n <= 5; ++n) {
    for (int j = 0; j <= n; ++j) {
      CHECK(alpha_coeff(n, j, j) == doctest::Approx(1).epsilon(1e-15));
      CHECK(alpha_coeff(n, j, n) == doctest::Approx(1).epsilon(1e-15));
      for (int k = j; k <= n; ++k) {
        CHECK(alpha_coeff(n, j, k) == doctest::Approx(alpha_coeff(n, j, n + j - k)).epsilon(1e-14));
        const double direct = factorial(k) * kappa(k) * factorial(n + j - k) * kappa(n + j - k) /
                              (factorial(j) * kappa(j) * factorial(n) * kappa(n));
        CHECK(alpha_coeff(n, j, k) == doctest::Approx(direct).epsilon(1e-14));
      }
    }
  }
  CHECK_THROWS_AS(alpha_coeff(3, 2, 1), std::out_of_range);
  CHECK_THROWS_AS(alpha_coeff(3, 0, 4), std::out_of_range);
  CHECK_THROWS_AS(alpha_coeff(3, -1, 0), std::out_of_range);
}

TEST_CASE("Steiner volume")
{
  CHECK(rel(steiner_volume(ball_intrinsic_volumes(1), 1), 32 * pi / 3) < 1e-15);
  const auto oloid = oloid_intrinsic_volumes(1);
  CHECK(rel(steiner_volume(oloid, 0), ref_volume) < 1e-15);
  const double expected = ref_volume + 4 * pi + ref_M + 4 * pi / 3;
  CHECK(rel(steiner_volume(oloid, 1), expected) < 1e-14);
  CHECK(std::abs(steiner_volume(oloid, 1) - 33.5720086) < 1e-7);
  for (double rho : {0.0, 0.1, 1.0, 10.0})
    CHECK(rel(steiner_volume(oloid, rho), parallel_body(1, rho).V) < 1e-12);
}

TEST_CASE("parallel body")
{
  const auto zero = parallel_body(1, 0);
  CHECK(rel(zero.M, ref_M) < 1e-12);
  CHECK(rel(zero.S, 4 * pi) < 1e-15);
  CHECK(rel(zero.V, ref_volume) < 1e-15);
  CHECK(zero.rho == 0);

  const auto one = parallel_body(1, 1);
  CHECK(rel(one.M, ref_M + 4 * pi) < 1e-14);
  CHECK(rel(one.S, 4 * pi + 2 * ref_M + 4 * pi) < 1e-14);
  CHECK(std::abs(one.V - 33.5720086) < 1e-7);

  // tends to a ball as r -> 0
  const auto tiny = parallel_body(1e-9, 1);
  CHECK(rel(tiny.V, 4 * pi / 3) < 1e-7);
  CHECK(rel(tiny.S, 4 * pi) < 1e-7);
  CHECK(rel(tiny.M, 4 * pi) < 1e-7);
}

TEST_CASE("Steiner derivative identities")
{
  const double h = 1e-6;
  for (double r : {0.5, 1.0, 2.0}) {
    for (double rho : {0.1, 1.0, 3.0}) {
      const auto p = parallel_body(r, rho);
      const double dv = (parallel_body(r, rho + h).V - parallel_body(r, rho - h).V) / (2 * h);
      const double ds = (parallel_body(r, rho + h).S - parallel_body(r, rho - h).S) / (2 * h);
      CHECK(rel(dv, p.S) < 1e-6);
      CHECK(rel(ds, 2 * p.M) < 1e-6);
    }
  }
}

TEST_CASE("ball intrinsic volumes")
{
  const auto b = ball_intrinsic_volumes(1);
  CHECK(b[0] == 1);
  CHECK(b[1] == 4);
  CHECK(rel(b[2], 2 * pi) < 1e-15);
  CHECK(rel(b[3], 4 * pi / 3) < 1e-15);
  for (double r : {1.0, 2.0}) {
    const auto closed = ball_intrinsic_volumes(r);
    const auto binomial = ball_intrinsic_volumes_binomial(r);
    for (int k = 0; k <= 3; ++k)
      CHECK(rel(binomial[k], closed[k]) < 1e-14);
  }
}

TEST_CASE("kinematic functionals")
{
  const auto ball = ball_intrinsic_volumes(1);
  const auto oloid = oloid_intrinsic_volumes(1);
  const double k = oloid_k();
  const double e = oloid_e();
  CHECK(rel(kinematic_functionals(ball, ball)[0], 32 * pi / 3) < 1e-12);
  CHECK(rel(kinematic_functionals(oloid, ball)[3], 8 * pi / 9 * (2 * e + k)) < 1e-14);
  CHECK(rel(kinematic_functionals(oloid, oloid)[2], 8 * pi / 3 * (2 * e + k)) < 1e-14);

  std::mt19937_64 gen(4);
  for (int i = 0; i < 100; ++i) {
    const IV a = random_body(gen);
    const IV b = random_body(gen);
    const auto ab = kinematic_functionals(a, b);
    const auto ba = kinematic_functionals(b, a);
    const Eigen::Vector4d ref = explicit_functionals(a, b);
    for (int j = 0; j <= 3; ++j) {
      CHECK(rel(ab[j], ba[j]) < 1e-14);
      CHECK(rel(ab[j], ref(j)) < 1e-14);
    }
    CHECK(ab[3] == a[3] * b[3]);
  }
}

TEST_CASE("intersection expectations reproduce the published table")
{
  const auto ball = ball_intrinsic_volumes(1);
  const auto oloid = oloid_intrinsic_volumes(1);
  const auto bb = intersection_expectations(ball, ball);
  const auto ob = intersection_expectations(oloid, ball);
  const auto oo = intersection_expectations(oloid, oloid);
  CHECK(std::abs(bb.mean_width - 0.9626377063) < 1e-8);
  CHECK(std::abs(bb.surface - 3.141592654) < 1e-8);
  CHECK(std::abs(bb.volume - 0.5235987756) < 1e-8);
  CHECK(std::abs(ob.mean_width - 0.9169621588) < 1e-8);
  CHECK(std::abs(ob.surface - 2.710463736) < 1e-8);
  CHECK(std::abs(ob.volume - 0.3808512243) < 1e-8);
  CHECK(std::abs(oo.mean_width - 0.8585694641) < 1e-8);
  CHECK(std::abs(oo.surface - 2.280916270) < 1e-8);
  CHECK(std::abs(oo.volume - 0.2770215506) < 1e-8);

  CHECK(oo.mean_width < ob.mean_width);
  CHECK(ob.mean_width < bb.mean_width);
  CHECK(oo.surface < ob.surface);
  CHECK(ob.surface < bb.surface);
  CHECK(oo.volume < ob.volume);
  CHECK(ob.volume < bb.volume);

  CHECK_THROWS_AS(intersection_expectations(IV(), IV()), std::domain_error);
}

TEST_CASE("expectations scale as r, r^2, r^3")
{
  const auto unit = intersection_expectations(oloid_intrinsic_volumes(1), ball_intrinsic_volumes(1));
  for (double r : {0.5, 2.0, 10.0}) {
    const auto e = intersection_expectations(oloid_intrinsic_volumes(r), ball_intrinsic_volumes(r));
    CHECK(rel(e.mean_width, unit.mean_width * r) < 1e-14);
    CHECK(rel(e.surface, unit.surface * r * r) < 1e-14);
    CHECK(rel(e.volume, unit.volume * r * r * r) < 1e-14);
  }
}

TEST_CASE("lens formulas")
{
  CHECK(rel(lens_volume(0), 4 * pi / 3) < 1e-15);
  CHECK(lens_volume(2) == 0);
  CHECK(rel(lens_surface(0), 4 * pi) < 1e-15);
  CHECK(lens_surface(2) == 0);
}

TEST_CASE("lens volume at d = 1 against rejection sampling")
{
  // unit balls centred at the origin and at (1, 0, 0); sample the box [0,1] x [-1,1]^2
  oloid::CounterRng rng(2718, 0);
  const long n = 10'000'000;
  long hits = 0;
  for (long i = 0; i < n; ++i) {
    const double x = rng.uniform();
    const double y = 2 * rng.uniform() - 1;
    const double z = 2 * rng.uniform() - 1;
    const double yz = y * y + z * z;
    hits += (x * x + yz <= 1 && (x - 1) * (x - 1) + yz <= 1) ? 1 : 0;
  }
  const double p = static_cast<double>(hits) / n;
  const double estimate = 4 * p;
  const double se = 4 * std::sqrt(p * (1 - p) / n);
  CHECK(std::abs(estimate - lens_volume(1)) < 4 * se);
  CHECK(rel(lens_volume(1), 5 * pi / 12) < 1e-15);
}

TEST_CASE("ball-ball Monte Carlo oracle")
{
  const auto mc = mc_ball_ball_expectations(1'000'000, 7);
  CHECK(std::abs(mc.volume - pi / 6) < 3 * mc.volume_std_error);
  CHECK(std::abs(mc.surface - pi) < 3 * mc.surface_std_error);
  const auto again = mc_ball_ball_expectations(1'000'000, 7);
  CHECK(again.volume == mc.volume);
  CHECK(again.surface == mc.surface);
  CHECK_THROWS_AS(mc_ball_ball_expectations(9'999, 7), std::invalid_argument);
}

#include "oloid/intrinsic.hpp"

#include "oloid/mesh.hpp"
#include "oloid/specfun.hpp"
#include "oloid/surface.hpp"
#include "oloid/support.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace oloid;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double ref_volume = 3.05241846842437485669720053193;
constexpr double ref_I = 1.87738105428247449505835371657;
constexpr double ref_edge = 7.29488238450413994801832163353;
constexpr double ref_M = 13.7644293270030696543343466299;
constexpr double ref_width = 2.19067696623158876633263049436;
constexpr double ball_volume = 4 * pi / 3;

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

} // namespace

TEST_CASE("surface area by both routes")
{
  CHECK(surface_area(Route::closed).value == 12.566370614359172);
  const auto q = surface_area(Route::quadrature, 1e-10);
  CHECK(rel(q.value, 4 * pi) < 1e-10);
  CHECK(q.err_est >= 0);
  const auto mesh = build_mesh(256, 256);
  CHECK(rel(mesh_area(mesh), 4 * pi) < 1e-4);
}

TEST_CASE("volume by both routes")
{
  CHECK(rel(volume(Route::closed).value, ref_volume) < 1e-15);
  CHECK(rel(volume(Route::quadrature, 1e-10).value, ref_volume) < 1e-10);
  CHECK(rel(volume(Route::quadrature).value, ref_volume) < 1e-13);
  CHECK(rel(mesh_volume(build_mesh(256, 256)), ref_volume) < 1e-4);
}

TEST_CASE("curvature integral by both routes")
{
  const double closed = curvature_integral(Route::closed).value;
  CHECK(std::abs(closed - 6.469546942498930) < 1e-14);
  CHECK(std::abs(closed - 3 * ellipk(std::sqrt(3.0) / 2)) < 1e-15);
  CHECK(std::abs(curvature_integral(Route::quadrature).value - closed) < 1e-10);
}

TEST_CASE("Coxeter-like integral")
{
  CHECK(rel(coxeter_like_I(), ref_I) < 1e-13);
  CHECK(rel(coxeter_like_I(1e-12).value, ref_I) < 1e-12);
  const auto integrand = [](double t) { return std::acos(std::cos(t) / (1 + std::cos(t))); };
  CHECK(std::abs(integrand(0) - pi / 3) < 1e-15);
  CHECK(std::abs(integrand(pi / 2) - pi / 2) < 1e-15);
}

TEST_CASE("edge integral by both routes")
{
  const double reduced = edge_integral(EdgeRoute::reduced).value;
  CHECK(rel(reduced, ref_edge) < 1e-14);
  const double direct = edge_integral(EdgeRoute::direct).value;
  CHECK(std::abs(direct - reduced) < 1e-10);
  CHECK(direct > 0);
  CHECK(direct < 2 * pi * (2 * pi / 3));
}

TEST_CASE("edge symmetry: the angle on the mirrored edge")
{
  // the second edge is the image of the first under (t -> -t); spot-check alpha
  for (double t : {0.1, 0.5, 1.0, 1.5, 2.0})
    CHECK(edge_angle(t) == edge_angle(-t));
}

TEST_CASE("total mean curvature")
{
  CHECK(rel(mean_curvature_total(1), ref_M) < 1e-12);
  CHECK(mean_curvature_total(2) == 2 * mean_curvature_total(1));
  const double assembled = curvature_integral(Route::quadrature).value + edge_integral(EdgeRoute::direct).value;
  CHECK(std::abs(mean_curvature_total(1) - assembled) < 1e-10);
}

TEST_CASE("mean width")
{
  CHECK(rel(mean_width(1), ref_width) < 1e-12);
  CHECK(std::abs(mean_width(3) - 3 * mean_width(1)) < 1e-14);
  CHECK(mean_width(1) == doctest::Approx(mean_curvature_total(1) / (2 * pi)).epsilon(1e-15));
  CHECK(std::abs(mean_width(1) - mean_width_direct(1e-9).value) < 1e-8);
}

TEST_CASE("intrinsic volume vector")
{
  const auto v = oloid_intrinsic_volumes(1);
  CHECK(v[0] == 1);
  CHECK(std::abs(v[1] - 4.381353932463178) < 1e-14);
  CHECK(std::abs(v[1] - 2 * ref_width) < 1e-14);
  CHECK(std::abs(v[2] - 2 * pi) < 1e-15);
  CHECK(std::abs(v[3] - 3.052418468424375) < 1e-15);
  CHECK(v.mean_width() == doctest::Approx(mean_width(1)).epsilon(1e-15));
  CHECK(v.surface() == doctest::Approx(4 * pi).epsilon(1e-15));
  CHECK(v.mean_curvature_integral() == doctest::Approx(mean_curvature_total(1)).epsilon(1e-15));
  CHECK(v.volume() == v[3]);
}

TEST_CASE("homogeneity in r")
{
  const auto unit = oloid_intrinsic_volumes(1);
  for (double r : {0.5, 1.0, 2.0, 10.0}) {
    const auto v = oloid_intrinsic_volumes(r);
    CAPTURE(r);
    CHECK(v[0] == 1);
    CHECK(rel(v[1], unit[1] * r) < 1e-15);
    CHECK(rel(v[2], unit[2] * r * r) < 1e-15);
    CHECK(rel(v[3], unit[3] * r * r * r) < 1e-15);
    CHECK(rel(mean_curvature_total(r), mean_curvature_total(1) * r) < 1e-15);
    CHECK(rel(mean_width(r), mean_width(1) * r) < 1e-15);
    const auto scaled = unit.scaled(r);
    CHECK((scaled.v - v.v).norm() < 1e-13 * v.v.norm());
  }
}

TEST_CASE("comparison with the unit ball")
{
  CHECK(std::abs(surface_area(Route::closed).value - 4 * pi) < 1e-15);
  CHECK(volume(Route::closed).value < ball_volume);
  for (double r : {0.5, 1.0, 2.0, 10.0}) {
    CHECK(2 * r < mean_width(r));
    CHECK(mean_width(r) < 3 * r);
  }
  CHECK(width(Vector3(0, 1, 0)) == 3);
  CHECK(width(Vector3(1, 0, 0)) == 2);
}

TEST_CASE("route agreement to 1e-10 relative")
{
  CHECK(rel(surface_area(Route::quadrature).value, surface_area(Route::closed).value) < 1e-10);
  CHECK(rel(volume(Route::quadrature).value, volume(Route::closed).value) < 1e-10);
  CHECK(rel(curvature_integral(Route::quadrature).value, curvature_integral(Route::closed).value) < 1e-10);
  CHECK(rel(edge_integral(EdgeRoute::direct).value, edge_integral(EdgeRoute::reduced).value) < 1e-10);
}

TEST_CASE("elliptic integral identity")
{
  const auto check = elliptic_identity_check(1e-9);
  CHECK(check.delta < 1e-9);
  CHECK(std::abs(check.J - 2.156515647499643) < 1e-9);
  CHECK(check.K == ellipk(std::sqrt(3.0) / 2));
  CHECK(check.delta == std::abs(check.J - check.K));
  CHECK(elliptic_identity_integrand(0) == 1);
  CHECK_THROWS(elliptic_identity_check(1e-30));
}

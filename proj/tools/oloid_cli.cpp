// oloid: intrinsic volumes, parallel bodies, kinematic expectations and meshes of the oloid.
//
// Exit codes: 0 success, 1 computational failure, 2 route disagreement, 64 usage error.

#include "records.hpp"

#include "oloid/intrinsic.hpp"
#include "oloid/kinematic.hpp"
#include "oloid/mesh.hpp"
#include "oloid/support.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace {

using oloid::cli::OutputRecord;

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_disagreement = 2;
constexpr int exit_usage = 64;

constexpr double pi = std::numbers::pi;

struct ConstantsOptions
{
  double radius = 1;
  double tol = 1e-10;
  std::string format = "text";
};

struct ParallelOptions
{
  double radius = 1;
  double rho = 0;
  std::string format = "text";
};

struct KinematicOptions
{
  std::string pair;
  double radius = 1;
  std::optional<std::uint64_t> mc_samples;
  std::uint64_t seed = 0;
  std::string format = "text";
};

struct MeshOptions
{
  int resolution = 64;
  std::string out;
  std::string format = "text";
};

int cmd_constants(const ConstantsOptions& opt)
{
  using namespace oloid;
  const double r = opt.radius;
  const double r2 = r * r;
  const double r3 = r2 * r;
  const double tol = opt.tol;

  const auto s_closed = surface_area(Route::closed);
  const auto s_quad = surface_area(Route::quadrature, tol);
  const auto v_closed = volume(Route::closed);
  const auto v_quad = volume(Route::quadrature, tol);
  const auto smooth_part = curvature_integral(Route::quadrature, tol);
  const auto edge_direct = edge_integral(EdgeRoute::direct, tol);
  const auto edge_reduced = edge_integral(EdgeRoute::reduced);
  const double m_closed = mean_curvature_total(r);
  const double m_quad = (smooth_part.value + edge_direct.value) * r;
  const auto i_quad = coxeter_like_I(tol);
  const auto width_direct = mean_width_direct(tol);
  const auto iv = oloid_intrinsic_volumes(r);

  std::vector<OutputRecord> records{
    {"surface_area", "closed", s_closed.value * r2, std::nullopt, 2},
    {"surface_area", "quadrature", s_quad.value * r2, s_quad.err_est * r2, 2},
    {"volume", "closed", v_closed.value * r3, std::nullopt, 3},
    {"volume", "quadrature", v_quad.value * r3, v_quad.err_est * r3, 3},
    {"mean_curvature_integral", "closed", m_closed, std::nullopt, 1},
    {"mean_curvature_integral", "quadrature", m_quad, (smooth_part.err_est + edge_direct.err_est) * r, 1},
    {"mean_width", "curvature", mean_width(r), std::nullopt, 1},
    {"mean_width", "direct", width_direct.value * r, width_direct.err_est * r, 1},
    {"coxeter_I", "quadrature", i_quad.value, i_quad.err_est, 0},
    {"edge_integral", "reduced", edge_reduced.value * r, std::nullopt, 1},
    {"edge_integral", "direct", edge_direct.value * r, edge_direct.err_est * r, 1},
    {"V0", "closed", iv[0], std::nullopt, 0},
    {"V1", "closed", iv[1], std::nullopt, 1},
    {"V2", "closed", iv[2], std::nullopt, 2},
    {"V3", "closed", iv[3], std::nullopt, 3},
  };
  oloid::cli::write_records(records, oloid::cli::parse_format(opt.format), std::cout);

  // every quantity reported by two routes must agree to 10 tol (relative for |value| > 1)
  int status = exit_ok;
  for (std::size_t i = 0; i + 1 < records.size(); ++i) {
    const auto& a = records[i];
    const auto& b = records[i + 1];
    if (a.quantity != b.quantity)
      continue;
    const double gap = std::abs(a.value - b.value);
    if (gap > 10 * tol * std::max(1.0, std::abs(a.value))) {
      std::cerr << "route disagreement: " << a.quantity << " " << a.route << " vs " << b.route << " differ by "
                << gap << "\n";
      status = exit_disagreement;
    }
  }
  return status;
}

int cmd_parallel(const ParallelOptions& opt)
{
  const auto q = oloid::parallel_body(opt.radius, opt.rho);
  const std::vector<OutputRecord> records{
    {"parallel_M", "closed", q.M, std::nullopt, 1},
    {"parallel_S", "closed", q.S, std::nullopt, 2},
    {"parallel_V", "closed", q.V, std::nullopt, 3},
  };
  oloid::cli::write_records(records, oloid::cli::parse_format(opt.format), std::cout);
  return exit_ok;
}

int cmd_kinematic(const KinematicOptions& opt)
{
  using namespace oloid;
  const double r = opt.radius;
  const auto ball = ball_intrinsic_volumes(r);
  const auto body = oloid_intrinsic_volumes(r);
  IntrinsicVolumes<double> fixed = ball;
  IntrinsicVolumes<double> moving = ball;
  if (opt.pair == "oloid-ball") {
    fixed = body;
  } else if (opt.pair == "oloid-oloid") {
    fixed = body;
    moving = body;
  }
  if (opt.mc_samples && opt.pair != "ball-ball") {
    std::cerr << "kinematic: the Monte Carlo oracle is only available for --pair ball-ball\n";
    return exit_failure;
  }

  const auto functionals = kinematic_functionals(fixed, moving);
  const auto expect = intersection_expectations(fixed, moving);
  std::vector<OutputRecord> records;
  for (int j = 0; j <= 3; ++j)
    records.push_back({"I" + std::to_string(j), "closed", functionals[j], std::nullopt, 3 + j});
  records.push_back({"E_mean_width", "closed", expect.mean_width, std::nullopt, 1});
  records.push_back({"E_surface", "closed", expect.surface, std::nullopt, 2});
  records.push_back({"E_volume", "closed", expect.volume, std::nullopt, 3});

  if (opt.mc_samples) {
    const auto mc = mc_ball_ball_expectations(*opt.mc_samples, opt.seed);
    const double mc_s = mc.surface * r * r;
    const double mc_v = mc.volume * r * r * r;
    const double se_s = mc.surface_std_error * r * r;
    const double se_v = mc.volume_std_error * r * r * r;
    records.push_back({"E_surface", "montecarlo", mc_s, se_s, 2});
    records.push_back({"E_volume", "montecarlo", mc_v, se_v, 3});
    records.push_back({"E_surface", "montecarlo_z", (mc_s - expect.surface) / se_s, std::nullopt, 0});
    records.push_back({"E_volume", "montecarlo_z", (mc_v - expect.volume) / se_v, std::nullopt, 0});
  }
  oloid::cli::write_records(records, oloid::cli::parse_format(opt.format), std::cout);
  return exit_ok;
}

int cmd_mesh(const MeshOptions& opt)
{
  using namespace oloid;
  const auto mesh = build_mesh(opt.resolution, opt.resolution);
  {
    std::ofstream file(opt.out, std::ios::binary);
    if (!file) {
      std::cerr << "mesh: cannot open " << opt.out << " for writing\n";
      return exit_failure;
    }
    export_obj(mesh, file);
    file.flush();
    if (!file) {
      std::cerr << "mesh: write to " << opt.out << " failed\n";
      return exit_failure;
    }
  }
  const double v = mesh_volume(mesh);
  const double s = mesh_area(mesh);
  const double v_ref = volume(Route::closed).value;
  const double s_ref = 4 * pi;
  const std::vector<OutputRecord> records{
    {"volume", "mesh", v, std::abs(v - v_ref), 3},
    {"surface_area", "mesh", s, std::abs(s - s_ref), 2},
  };
  const auto format = cli::parse_format(opt.format);
  cli::write_records(records, format, std::cout);
  if (format == cli::Format::text) {
    std::cout << "relative deviation: volume " << std::abs(v - v_ref) / v_ref << ", surface_area "
              << std::abs(s - s_ref) / s_ref << "\n"
              << "vertices " << mesh.vertices.rows() << ", triangles " << mesh.triangles.rows()
              << ", closed " << (is_closed(mesh) ? "yes" : "no") << ", euler characteristic "
              << euler_characteristic(mesh) << "\n";
  }
  return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Intrinsic volumes, parallel bodies and kinematic expectations of the oloid"};
  app.require_subcommand(1);
  const auto formats = CLI::IsMember({"text", "json", "csv"});

  ConstantsOptions constants;
  auto* c = app.add_subcommand("constants", "volume, surface area, mean curvature and mean width by every route");
  c->add_option("--radius", constants.radius, "oloid radius r")->check(CLI::PositiveNumber);
  c->add_option("--tol", constants.tol, "quadrature tolerance")->check(CLI::PositiveNumber);
  c->add_option("--format", constants.format)->check(formats);

  ParallelOptions parallel;
  auto* p = app.add_subcommand("parallel", "M, S and V of the parallel body at distance rho");
  p->add_option("--radius", parallel.radius)->check(CLI::PositiveNumber);
  p->add_option("--rho", parallel.rho, "offset distance")->check(CLI::NonNegativeNumber);
  p->add_option("--format", parallel.format)->check(formats);

  KinematicOptions kinematic;
  auto* k = app.add_subcommand("kinematic", "principal kinematic formula: I0..I3 and intersection expectations");
  k->add_option("--pair", kinematic.pair)->required()->check(CLI::IsMember({"ball-ball", "oloid-ball", "oloid-oloid"}));
  k->add_option("--radius", kinematic.radius)->check(CLI::PositiveNumber);
  k->add_option("--mc-samples", kinematic.mc_samples, "Monte Carlo oracle samples (ball-ball only)")
    ->check(CLI::Range(std::uint64_t{10'000}, std::uint64_t{1'000'000'000'000}));
  k->add_option("--seed", kinematic.seed);
  k->add_option("--format", kinematic.format)->check(formats);

  MeshOptions mesh;
  auto* m = app.add_subcommand("mesh", "write a triangulated oloid as Wavefront OBJ");
  m->add_option("--resolution", mesh.resolution, "grid cells per parameter direction")->check(CLI::Range(2, 4096));
  m->add_option("--out", mesh.out, "output path")->required();
  m->add_option("--format", mesh.format)->check(formats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*c)
      return cmd_constants(constants);
    if (*p)
      return cmd_parallel(parallel);
    if (*k)
      return cmd_kinematic(kinematic);
    return cmd_mesh(mesh);
  } catch (const oloid::QuadratureError& e) {
    std::cerr << "quadrature failure: " << e.what() << " (best estimate " << e.best().value << ")\n";
    return exit_failure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_failure;
  }
}

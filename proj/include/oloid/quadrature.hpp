#ifndef OLOID_QUADRATURE_HPP
#define OLOID_QUADRATURE_HPP

// One-dimensional adaptive quadrature and iterated 2D integration.
//
//  integrate          globally adaptive Gauss-Kronrod (7/15) bisection
//  integrate_singular tanh-sinh (double exponential) rule for integrands with
//                     integrable power-type singularities at the endpoints
//  integrate2d        inner theta, outer phi, with phi-dependent theta limits
//
// Tolerances are mixed: a result is accepted when err_est <= max(tol, tol*|value|).
// Exceeding the work budget throws QuadratureError carrying the best estimate.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace oloid {

struct QuadResult
{
  double value = 0;
  double err_est = 0; // absolute
  std::size_t evals = 0;
};

class QuadratureError : public std::runtime_error
{
public:
  QuadratureError(const std::string& what, QuadResult best)
    : std::runtime_error(what)
    , best_(best)
  {}

  const QuadResult& best() const noexcept { return best_; }

private:
  QuadResult best_;
};

/// Exact distances of a tanh-sinh node from both ends of the interval. Integrands
/// that accept this as a second argument can be evaluated without the
/// cancellation that x - a or b - x would suffer next to an endpoint.
struct EndpointOffsets
{
  double from_a;
  double from_b;
};

inline constexpr std::size_t max_panels = std::size_t{1} << 15;
inline constexpr std::size_t max_evals = 10'000'000;

namespace detail {

inline bool accepted(double err, double value, double tol)
{
  return err <= std::max(tol, tol * std::abs(value));
}

inline void check_interval(double a, double b, double tol, const char* who)
{
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
    throw std::invalid_argument(std::string(who) + ": requires finite a < b");
  if (!(tol > 0))
    throw std::invalid_argument(std::string(who) + ": requires tol > 0");
}

struct Panel
{
  double a, b, value, err;
};

// 15-point Kronrod rule with embedded 7-point Gauss rule.
template <class F>
Panel gauss_kronrod_15(F& f, double a, double b)
{
  static constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
  static constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
  static constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = wgk[7] * fc;
  double gauss = wg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * xgk[i];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += wgk[i] * pair;
    if (i % 2 == 1)
      gauss += wg[i / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}

template <class F>
constexpr bool takes_offsets = std::is_invocable_v<F&, double, EndpointOffsets>;

} // namespace detail

/// Adaptive Gauss-Kronrod integration of f over [a, b].
template <class F>
QuadResult integrate(F&& f, double a, double b, double tol)
{
  detail::check_interval(a, b, tol, "integrate");
  constexpr std::size_t evals_per_panel = 15;
  auto by_error = [](const detail::Panel& x, const detail::Panel& y) { return x.err < y.err; };

  std::vector<detail::Panel> heap;
  heap.push_back(detail::gauss_kronrod_15(f, a, b));
  std::size_t evals = evals_per_panel;
  double total = heap.front().value;
  double total_err = heap.front().err;
  if (!std::isfinite(total))
    throw QuadratureError("integrate: non-finite integrand value", {total, 0, evals});

  auto resum = [&] {
    total = 0;
    total_err = 0;
    for (const auto& p : heap) {
      total += p.value;
      total_err += p.err;
    }
  };

  std::size_t iteration = 0;
  while (!detail::accepted(total_err, total, tol)) {
    if (heap.size() >= max_panels || evals + 2 * evals_per_panel > max_evals) {
      resum();
      throw QuadratureError("integrate: subdivision budget exhausted", {total, total_err, evals});
    }
    std::pop_heap(heap.begin(), heap.end(), by_error);
    const detail::Panel worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(worst.a < mid && mid < worst.b)) {
      heap.push_back(worst);
      resum();
      throw QuadratureError("integrate: panel width below resolution", {total, total_err, evals});
    }
    const auto left = detail::gauss_kronrod_15(f, worst.a, mid);
    const auto right = detail::gauss_kronrod_15(f, mid, worst.b);
    if (!std::isfinite(left.value) || !std::isfinite(right.value)) {
      heap.push_back(worst);
      resum();
      throw QuadratureError("integrate: non-finite integrand value", {total, total_err, evals});
    }
    evals += 2 * evals_per_panel;
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end(), by_error);
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end(), by_error);

    total += left.value + right.value - worst.value;
    total_err += left.err + right.err - worst.err;
    // running sums drift; refresh them now and then
    if (++iteration % 64 == 0)
      resum();
  }
  resum();
  return {total, total_err, evals};
}

/// Tanh-sinh integration over the open interval (a, b); f is never evaluated at a
/// or b. f may take (x) or (x, EndpointOffsets).
template <class F>
QuadResult integrate_singular(F&& f, double a, double b, double tol)
{
  detail::check_interval(a, b, tol, "integrate_singular");
  constexpr int max_level = 12;
  constexpr double tau_max = 6.5;
  constexpr double half_pi = std::numbers::pi / 2;
  const double hw = 0.5 * (b - a);

  std::size_t evals = 0;
  // sum of w(tau) f(x(tau)) over every node visited so far (unit step weights)
  auto node_sum = [&](double tau) -> double {
    const double u = half_pi * std::sinh(tau);
    const double e = std::exp(-2 * std::abs(u)); // in [0, 1]
    const double near = hw * 2 * e / (1 + e);     // distance to the nearer endpoint
    const double far = 2 * hw - near;
    if (!(near > 0))
      return 0;
    const EndpointOffsets off = u < 0 ? EndpointOffsets{near, far} : EndpointOffsets{far, near};
    const double x = u < 0 ? a + off.from_a : b - off.from_b;
    const double w = hw * half_pi * std::cosh(tau) * 4 * e / ((1 + e) * (1 + e));
    double fx;
    if constexpr (detail::takes_offsets<F>) {
      fx = f(x, off);
    } else {
      if (!(x > a && x < b))
        return 0;
      fx = f(x);
    }
    ++evals;
    if (!std::isfinite(fx))
      throw QuadratureError("integrate_singular: non-finite integrand value", {0, 0, evals});
    return w * fx;
  };

  double sum = node_sum(0.0);
  for (int j = 1; j <= static_cast<int>(tau_max); ++j)
    sum += node_sum(j) + node_sum(-j);
  double estimate = sum;
  double err = std::abs(estimate);

  for (int level = 1; level <= max_level; ++level) {
    const double h = std::ldexp(1.0, -level);
    const int count = static_cast<int>(tau_max / h);
    double added = 0;
    for (int j = 1; j <= count; j += 2)
      added += node_sum(j * h) + node_sum(-j * h);
    sum += added;
    const double next = h * sum;
    err = std::abs(next - estimate);
    estimate = next;
    if (level >= 3 && detail::accepted(err, estimate, tol))
      return {estimate, err, evals};
    if (evals > max_evals)
      break;
  }
  throw QuadratureError("integrate_singular: no convergence within level budget", {estimate, err, evals});
}

/// Iterated integral of f(phi, theta) for phi in [phi_a, phi_b] and theta in
/// [lower(phi), upper(phi)]. Half of tol goes to the outer integral; the other
/// half is spread over the inner integrals.
template <class F, class Lower, class Upper>
QuadResult integrate2d(F&& f, double phi_a, double phi_b, Lower&& lower, Upper&& upper, double tol)
{
  detail::check_interval(phi_a, phi_b, tol, "integrate2d");
  const double width = phi_b - phi_a;
  const double inner_tol = tol / (2 * std::max(1.0, width));
  std::size_t inner_evals = 0;
  double worst_inner_err = 0;

  auto inner = [&](double phi) {
    const double lo = lower(phi);
    const double hi = upper(phi);
    if (hi == lo)
      return 0.0;
    if (hi < lo)
      throw std::invalid_argument("integrate2d: lower limit above upper limit");
    const auto r = integrate([&](double theta) { return f(phi, theta); }, lo, hi, inner_tol);
    inner_evals += r.evals;
    worst_inner_err = std::max(worst_inner_err, r.err_est);
    return r.value;
  };
  const auto outer = integrate(inner, phi_a, phi_b, tol / 2);
  return {outer.value, outer.err_est + width * worst_inner_err, outer.evals + inner_evals};
}

} // namespace oloid

#endif // OLOID_QUADRATURE_HPP

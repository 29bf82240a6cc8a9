#include "resonance/shape.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "resonance/determinants.hpp"

namespace resonance {
namespace {

constexpr double kPi = std::numbers::pi;

// G(y) = log(y / |sin y|) - y cot y, strictly increasing from -inf (or -1 on
// the first interval) to +inf on each (n pi, (n+1) pi).
double scalar_equation(double y) {
  const double s = std::sin(y);
  return std::log(std::abs(y / s)) - y * (std::cos(y) / s);
}

}  // namespace

ShapeRoot shape_root(int n, const ModelSpec& spec) {
  if (spec.kind != ModelKind::free_well)
    throw std::invalid_argument("shape_root: free model required");
  if (n < 0) throw std::invalid_argument("shape_root: n must be nonnegative");
  const double s = 2.0 * spec.eta;
  const double t = 2.0 * spec.kappa;
  const double q = t / s;
  // zeta e^{-zeta} = +- q e^q with zeta = q(isw - 1); on each interval the
  // scalar form is log(y/|sin y|) - y cot y = q + log q
  const double rhs = q + std::log(q);

  // Endpoint insets dodge the nonremovable singularities at y = n pi.
  const double inset = 1e-12 * kPi;
  double lo = n * kPi + inset;
  double hi = (n + 1) * kPi - inset;
  if (scalar_equation(lo) - rhs > 0.0)
    throw std::runtime_error("shape_root: no root in the first interval (needs t > s)");
  for (int it = 0; it < 200 && (hi - lo) > 1e-17 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (scalar_equation(mid) - rhs <= 0.0)
      lo = mid;
    else
      hi = mid;
  }
  const double y = 0.5 * (lo + hi);
  // At the root x + q = log(y / (q |sin y|)), better conditioned than forming
  // x = y cot y and adding q when q is large.
  const double x_plus_q = std::log(std::abs(y / std::sin(y)) / q);

  ShapeRoot root;
  root.n = n;
  root.w = {y / t, -x_plus_q / t};
  root.interval_lo = n * kPi / t;
  root.interval_hi = (n + 1) * kPi / t;
  root.residual = std::abs(f_factor(n % 2 == 0 ? +1 : -1, s, t, root.w));
  return root;
}

std::complex<double> shape_perturbative(int n, const ModelSpec& spec, int order) {
  if (spec.kind != ModelKind::free_well)
    throw std::invalid_argument("shape_perturbative: free model required");
  if (n < 0) throw std::invalid_argument("shape_perturbative: n must be nonnegative");
  if (order != 1 && order != 2) throw std::invalid_argument("shape_perturbative: order 1 or 2");
  const double s = 2.0 * spec.eta;
  const double t = 2.0 * spec.kappa;
  const double w0 = (1.0 + n) * kPi / t;
  const double st = s / t;
  if (order == 1) return w0 * (1.0 - st);
  return w0 * std::complex<double>(1.0 - st + st * st, -s * s * w0 / (2.0 * t));
}

}  // namespace resonance

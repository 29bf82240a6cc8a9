#include "resonance/counting.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "resonance/quadrature.hpp"

namespace resonance {
namespace {

constexpr double kPi = std::numbers::pi;
const Complex kOmegaInv = std::polar(1.0, -2.0 * kPi / 3.0);

}  // namespace

NormalizedDeterminant NormalizedDeterminant::make(const ModelSpec& stark_spec, bool southwest) {
  if (stark_spec.kind != ModelKind::stark)
    throw std::invalid_argument("NormalizedDeterminant: stark model required");
  NormalizedDeterminant b;
  b.spec = stark_spec;
  b.rotation = southwest ? kOmegaInv : Complex(1.0, 0.0);
  b.normalization = det_stark(Complex(0.0, 0.0), stark_spec).value;
  return b;
}

ExtendedComplex NormalizedDeterminant::operator()(Complex z) const {
  return det_stark(rotation * z, spec).value / normalization;
}

ExtEvaluator NormalizedDeterminant::evaluator() const {
  return [copy = *this](Complex z) { return copy(z); };
}

double safe_radius(const ExtEvaluator& B, double R, double delta,
                   const std::vector<Complex>& known_zeros) {
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("safe_radius: bad delta");
  constexpr int kCandidates = 64;
  constexpr int kAngles = 512;
  for (int pass = 0; pass < 2; ++pass) {
    double best_r = -1.0;
    double best_min = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < kCandidates; ++i) {
      const double r = R * (1.0 - delta * (i + 0.5) / kCandidates);
      bool near_zero = false;
      for (const Complex& z : known_zeros)
        if (std::abs(r - std::abs(z)) < 1e-6) near_zero = true;
      if (near_zero) continue;
      double min_log = std::numeric_limits<double>::infinity();
      for (int j = 0; j < kAngles; ++j) {
        const ExtendedComplex v = B(std::polar(r, 2.0 * kPi * j / kAngles));
        if (v.is_zero()) {
          min_log = -std::numeric_limits<double>::infinity();
          break;
        }
        min_log = std::min(min_log, v.log_abs());
      }
      if (min_log > best_min) {
        best_min = min_log;
        best_r = r;
      }
    }
    if (best_r > 0.0) return best_r;
    delta = std::min(2.0 * delta, 0.99);  // widen once
  }
  throw std::runtime_error("safe_radius: all candidate circles pass near zeros");
}

double jensen_integral(const ExtEvaluator& B, double r) {
  double prev = std::numeric_limits<double>::quiet_NaN();
  for (int n = 1 << 10; n <= (1 << 18); n <<= 1) {
    double sum = 0.0;
    for (int j = 0; j < n; ++j) sum += B(std::polar(r, 2.0 * kPi * j / n)).log_abs();
    const double estimate = sum / n;
    if (!std::isnan(prev) && std::abs(estimate - prev) < std::max(1e-6, 1e-4 * std::abs(estimate)))
      return estimate;
    prev = estimate;
  }
  throw std::runtime_error("jensen_integral: circle average did not converge");
}

double jensen_count_bound(const ExtEvaluator& B, double r, double v) {
  if (!(v > 1.0)) throw std::invalid_argument("jensen_count_bound: v must exceed 1");
  return (jensen_integral(B, v * r) - jensen_integral(B, r)) / std::log(v);
}

CarlemanParts carleman_integral(const ExtEvaluator& B, double R_rho, double R_L) {
  if (!(R_rho > 0.0 && R_rho < R_L))
    throw std::invalid_argument("carleman_integral: need 0 < R_rho < R_L");
  CarlemanParts parts;

  auto axis_integrand = [&](double s) {
    const double la = B(Complex(0.0, s)).log_abs() + B(Complex(0.0, -s)).log_abs();
    return la * (1.0 / (s * s) - 1.0 / (R_L * R_L));
  };
  const QuadratureResult axis =
      integrate([&](double s) { return Complex(axis_integrand(s), 0.0); }, R_rho, R_L, 1e-8, 1e-8);
  if (!axis.converged) throw std::runtime_error("carleman_integral: axis quadrature failed");
  parts.axis = axis.value.real() / (2.0 * kPi);

  // Arc integral with the continuous branch of arg B along the inner arc,
  // unwrapped from theta = -pi/2; doubling trapezoid until stable.
  const double alpha = R_L / R_rho;
  double prev = std::numeric_limits<double>::quiet_NaN();
  for (int n = 1 << 9; n <= (1 << 17); n <<= 1) {
    double sum = 0.0;
    double inner_arg = 0.0;
    double prev_arg_principal = 0.0;
    bool step_ok = true;
    for (int j = 0; j <= n; ++j) {
      const double theta = -kPi / 2.0 + kPi * j / n;
      const ExtendedComplex outer = B(std::polar(R_L, theta));
      const ExtendedComplex inner = B(std::polar(R_rho, theta));
      const double ap = inner.arg();
      if (j == 0) {
        inner_arg = ap;
      } else {
        double d = ap - prev_arg_principal;
        while (d > kPi) d -= 2.0 * kPi;
        while (d < -kPi) d += 2.0 * kPi;
        if (std::abs(d) > kPi / 2.0) step_ok = false;
        inner_arg += d;
      }
      prev_arg_principal = ap;
      // the inner arc is traversed oppositely, so its arg term enters with a
      // minus, matching the log-modulus term already folded into the ratio
      const double term = (2.0 * outer.log_abs() - (alpha + 1.0 / alpha) * inner.log_abs()) *
                              std::cos(theta) -
                          inner_arg * (alpha - 1.0 / alpha) * std::sin(theta);
      const double weight = (j == 0 || j == n) ? 0.5 : 1.0;  // trapezoid
      sum += weight * term;
    }
    const double estimate = sum * (kPi / n) / (2.0 * kPi * R_L);
    if (step_ok && !std::isnan(prev) &&
        std::abs(estimate - prev) < std::max(1e-6, 1e-4 * std::abs(estimate))) {
      parts.arc = estimate;
      return parts;
    }
    prev = estimate;
  }
  throw std::runtime_error("carleman_integral: arc quadrature did not converge");
}

CountReport census_below_segment(const ModelSpec& spec, double a, double b, double M,
                                 int threads) {
  if (spec.kind != ModelKind::stark)
    throw std::invalid_argument("census_below_segment: stark model required");
  if (!(0.0 < a && a < 0.5 * b))
    throw std::invalid_argument("census_below_segment: need 0 < a < b/2");
  const double f = spec.field;
  const double depth = 2.0 * M * f * std::log(1.0 / f + b) / std::sqrt(a);
  const Box box{{a, -depth}, {b, -1e-8}, Plane::z_plane};

  IsolateOptions opts;
  opts.threads = threads;
  opts.resolution = std::min(0.05, kPi * f / (4.0 * std::sqrt(b)));
  const auto zeros =
      isolate_zeros([spec](Complex z) { return det_stark(z, spec).value; }, box, opts);

  CountReport report;
  report.region = "strip below [" + std::to_string(a) + ", " + std::to_string(b) + "]";
  report.field = f;
  report.zero_count = 0;
  for (const Resonance& r : zeros.zeros) report.zero_count += r.multiplicity;
  report.count_times_f = static_cast<double>(report.zero_count) * f;
  return report;
}

EnvelopeResult halfplane_count_envelope(const ModelSpec& spec, double R_l, double R_u, double eps,
                                        int threads) {
  if (spec.kind != ModelKind::stark)
    throw std::invalid_argument("halfplane_count_envelope: stark model required");
  const double f = spec.field;
  if (!(R_u > 2.0 * R_l && R_l > 0.0))
    throw std::invalid_argument("halfplane_count_envelope: need R_u > 2 R_l > 0");

  EnvelopeResult out;
  out.lower = (1.0 - eps) / (2.0 * kPi * f) * (std::pow(R_u, 1.5) - (5.0 / 3.0) * std::pow(R_l, 1.5));
  out.upper = (1.0 + eps) / (2.0 * kPi * f) * ((5.0 / 3.0) * std::pow(R_u, 1.5) - std::pow(R_l, 1.5));

  IsolateOptions opts;
  opts.threads = threads;
  opts.resolution = std::min(0.02, kPi * f / (4.0 * std::sqrt(R_u)));
  const Box box{{1e-6, -R_u}, {R_u, -1e-8}, Plane::z_plane};
  const auto zeros =
      isolate_zeros([spec](Complex z) { return det_stark(z, spec).value; }, box, opts);
  for (const Resonance& r : zeros.zeros) {
    const double rr = std::abs(r.location);
    if (rr > R_l && rr < R_u) out.measured += r.multiplicity;
  }
  return out;
}

}  // namespace resonance

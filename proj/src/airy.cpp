#include "resonance/airy.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "resonance/detail/dd.hpp"

namespace resonance {
namespace {

using detail::dd;
using detail::ddcomplex;

constexpr double kPi = std::numbers::pi;
constexpr double kSwitchRadius = 8.0;
constexpr int kMaxSeriesTerms = 120;
constexpr int kMaxAsymptoticTerms = 20;
// Direct-use sector for the asymptotic expansion, |arg z| <= 2pi/3 + pi/6.
constexpr double kDirectSector = 2.0 * kPi / 3.0 + kPi / 6.0;

const Complex kOmega = std::polar(1.0, 2.0 * kPi / 3.0);
const Complex kOmegaBar = std::conj(kOmega);

// Ai(0), Ai'(0) as double-double (hi + lo).
constexpr double kA0Hi = 0.35502805388781722;
constexpr double kA0Lo = 2.0523363243621199e-17;
constexpr double kA1Hi = -0.25881940379280682;
constexpr double kA1Lo = 2.5222431116108321e-17;

// c_k = Gamma(3k + 1/2) / (54^k k! Gamma(k + 1/2)); c_1 = 5/72.
const std::array<double, kMaxAsymptoticTerms + 2>& asymptotic_coefficients() {
  static const std::array<double, kMaxAsymptoticTerms + 2> table = [] {
    std::array<double, kMaxAsymptoticTerms + 2> c{};
    c[0] = 1.0;
    for (int k = 0; k <= kMaxAsymptoticTerms; ++k) {
      const double kk = k;
      c[k + 1] = c[k] * (3.0 * kk + 0.5) * (3.0 * kk + 1.5) * (3.0 * kk + 2.5) /
                 (54.0 * (kk + 1.0) * (kk + 0.5));
    }
    return c;
  }();
  return table;
}

// Maclaurin series for Ai and Ai' summed in double-double.  Ai = a0 g0 + a1 g1
// with g0 = sum_k b_k z^{3k}, g1 = sum_k c_k z^{3k+1}; both coefficient chains
// follow from a_{m+3} = a_m / ((m+3)(m+2)).
AirySample series_eval(Complex zeta) {
  const ddcomplex z(zeta.real(), zeta.imag());
  const ddcomplex z3 = z * z * z;

  ddcomplex t0(dd(kA0Hi, kA0Lo), dd(0.0));                  // a0 b_k z^{3k}
  ddcomplex t1 = ddcomplex(dd(kA1Hi, kA1Lo), dd(0.0)) * z;  // a1 c_k z^{3k+1}
  ddcomplex sum = t0 + t1;
  ddcomplex dsum_raw = t1;  // sum of exponent * block; final derivative is dsum_raw / z

  double max_partial2 = detail::abs2(sum);
  int used = 0;
  for (int k = 0; k < kMaxSeriesTerms; ++k) {
    const double m = 3.0 * k;
    t0 = t0 * z3 / ((m + 3.0) * (m + 2.0));
    t1 = t1 * z3 / ((m + 4.0) * (m + 3.0));
    const ddcomplex term = t0 + t1;
    sum = sum + term;
    dsum_raw = dsum_raw + t0 * dd(m + 3.0) + t1 * dd(m + 4.0);
    max_partial2 = std::max(max_partial2, detail::abs2(sum));
    used = k + 1;
    if (detail::abs2(term) < 1e-66 * detail::abs2(sum)) break;
  }

  const Complex value(sum.re.to_double(), sum.im.to_double());
  Complex deriv(dsum_raw.re.to_double(), dsum_raw.im.to_double());
  deriv = (zeta == Complex(0.0, 0.0)) ? Complex(kA1Hi, 0.0) : deriv / zeta;

  AirySample out;
  out.value = ExtendedComplex(value);
  out.derivative = ExtendedComplex(deriv);
  out.method = AiryMethod::series;
  const double cancel = std::sqrt(max_partial2 / std::max(std::norm(value), 1e-300));
  out.trunc_error = std::max(2e-16, 2.5e-32 * cancel);
  if (cancel > 1e15 || used >= kMaxSeriesTerms) out.trunc_error = 1.0;  // unreliable
  return out;
}

AirySample asymptotic_eval(Complex zeta) {
  if (zeta == Complex(0.0, 0.0)) throw std::domain_error("airy_asymptotic at 0");
  // principal branch; |arg zeta| < pi required
  const Complex z32 = std::pow(zeta, 1.5);
  const Complex u = 1.5 / z32;  // expansion parameter 3/(2 zeta^{3/2})
  const auto& c = asymptotic_coefficients();

  Complex sum(1.0, 0.0);
  Complex term(1.0, 0.0);
  double prev_mag = 1.0;
  double dropped = 0.0;
  for (int k = 1; k <= kMaxAsymptoticTerms; ++k) {
    term *= -u * (c[k] / c[k - 1]);
    const double mag = std::abs(term);
    if (mag >= prev_mag) {  // optimal truncation: stop before terms grow
      dropped = mag;
      break;
    }
    sum += term;
    prev_mag = mag;
    dropped = mag * std::abs(u) * (c[k + 1] / c[k]);  // next-term estimate
  }

  const Complex prefactor = 1.0 / (2.0 * std::sqrt(kPi) * std::pow(zeta, 0.25));
  AirySample out;
  out.value = ExtendedComplex::exp_of(-(2.0 / 3.0) * z32) * (prefactor * sum);
  out.method = AiryMethod::asymptotic;
  out.trunc_error = dropped / std::abs(sum);
  return out;
}

AirySample dispatch(Complex zeta, int depth) {
  if (std::abs(zeta) <= kSwitchRadius) {
    AirySample s = series_eval(zeta);
    if (s.trunc_error < 1.0) return s;
    // cancellation monitor tripped (out-of-contract input): fall through
  }
  if (std::abs(std::arg(zeta)) <= kDirectSector || depth >= 2) return asymptotic_eval(zeta);

  // Reconstruct through the rotation identity; both rotations land in the
  // good sector, so the recursion terminates after one level.
  const AirySample a = dispatch(kOmega * zeta, depth + 1);
  const AirySample b = dispatch(kOmegaBar * zeta, depth + 1);
  AirySample out;
  out.value = -(kOmega * a.value + kOmegaBar * b.value);
  out.method = AiryMethod::rotated_asymptotic;
  out.trunc_error = 2.0 * std::max(a.trunc_error, b.trunc_error) + 4e-16;
  return out;
}

ExtendedComplex central_difference(Complex zeta, double h) {
  const AirySample p = dispatch(zeta + h, 0);
  const AirySample m = dispatch(zeta - h, 0);
  return (p.value - m.value) * Complex(0.5 / h, 0.0);
}

}  // namespace

AirySample airy(Complex zeta) {
  AirySample out = dispatch(zeta, 0);
  if (!out.derivative) {
    const double h = 1e-6 * std::max(1.0, std::abs(zeta));
    out.derivative = central_difference(zeta, h);
  }
  return out;
}

AirySample airy_rotated(Complex zeta, AiryRotation rotation) {
  Complex rho(1.0, 0.0);
  if (rotation == AiryRotation::omega) rho = kOmega;
  if (rotation == AiryRotation::omega_bar) rho = kOmegaBar;
  return airy(rho * zeta);
}

double airy_ode_residual(Complex zeta, double h) {
  if (h <= 0.0) h = 1e-4 * std::max(1.0, std::abs(zeta));
  const ExtendedComplex ap = airy(zeta + h).value;
  const ExtendedComplex am = airy(zeta - h).value;
  const ExtendedComplex ac = airy(zeta).value;
  const ExtendedComplex second = ap - 2.0 * ac + am;
  const ExtendedComplex rhs = Complex(h * h, 0.0) * zeta * ac;
  const ExtendedComplex num = second - rhs;
  const double denom = h * h * std::abs(zeta) * std::exp(ac.log_abs()) + 1e-300;
  if (num.is_zero()) return 0.0;
  return std::exp(num.log_abs()) / denom;
}

AirySample airy_series(Complex zeta) { return series_eval(zeta); }
AirySample airy_asymptotic(Complex zeta) { return asymptotic_eval(zeta); }

}  // namespace resonance

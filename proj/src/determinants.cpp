#include "resonance/determinants.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "resonance/airy.hpp"

namespace resonance {
namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};
const Complex kOmega = std::polar(1.0, 2.0 * kPi / 3.0);

void require_kind(const ModelSpec& spec, ModelKind kind, const char* fn) {
  if (spec.kind != kind) throw std::invalid_argument(std::string(fn) + ": wrong model kind");
}

// sin and cos through extended exponentials; safe for |Im w| in the thousands.
ExtendedComplex sin_ext(Complex w) {
  const ExtendedComplex ep = ExtendedComplex::exp_of(kI * w);
  const ExtendedComplex em = ExtendedComplex::exp_of(-kI * w);
  return (ep - em) * Complex(0.0, -0.5);
}
ExtendedComplex cos_ext(Complex w) {
  const ExtendedComplex ep = ExtendedComplex::exp_of(kI * w);
  const ExtendedComplex em = ExtendedComplex::exp_of(-kI * w);
  return (ep + em) * 0.5;
}

double strip_half_width_ray0(double r, double M, double f) {
  return std::pow(r, -1.5) * M * f * std::log(1.0 / f + r);
}
double strip_half_width_sw(double r, double M, double f) {
  return (1.0 / r) * (1.0 + std::pow(r, -0.5)) * M * f * std::log(1.0 / f + r);
}

}  // namespace

ExtendedComplex free_numerator(Complex w, const ModelSpec& spec) {
  const Complex lin = 2.0 * spec.eta * w + kI;
  return ExtendedComplex(lin * lin) + ExtendedComplex::exp_of(kI * 4.0 * spec.kappa * w);
}

DeterminantValue det_free(Complex w, const ModelSpec& spec) {
  require_kind(spec, ModelKind::free_well, "det_free");
  if (w == Complex(0.0, 0.0)) throw std::domain_error("det_free: pole at w = 0");
  DeterminantValue out;
  out.value = free_numerator(w, spec) / ExtendedComplex(4.0 * spec.eta * spec.eta * w * w);
  out.plane = Plane::w_plane;
  out.trunc_error = 4e-16;
  return out;
}

Complex f_factor(int sign, double s, double t, Complex w) {
  if (s <= 0.0 || t <= 0.0) throw std::invalid_argument("f_factor: s, t must be positive");
  if (w == Complex(0.0, 0.0)) {
    if (sign < 0) return {1.0 + t / s, 0.0};  // removable limit
    throw std::domain_error("f_factor: F_+ has a pole at w = 0");
  }
  const Complex e = std::exp(kI * t * w);
  return 1.0 + kI * (1.0 + static_cast<double>(sign < 0 ? -1 : 1) * e) / (s * w);
}

Complex g_b(double b, Complex w) { return std::sin(w) + b * w * std::cos(w); }

ExtendedComplex g_b_ext(double b, Complex w) {
  if (std::abs(w.imag()) < 10.0) return ExtendedComplex(g_b(b, w));
  return sin_ext(w) + ExtendedComplex(b * w) * cos_ext(w);
}

AuxSymbols stark_symbols(Complex z, const ModelSpec& spec) {
  require_kind(spec, ModelKind::stark, "stark_symbols");
  const double f = spec.field;
  const double f23 = std::cbrt(f) * std::cbrt(f);
  AuxSymbols aux;
  aux.z_theta_plus = z - spec.kappa * f;   // z * theta_+
  aux.z_theta_minus = z + spec.kappa * f;  // z * theta_-
  const Complex u_plus = -aux.z_theta_plus / f23;
  const Complex u_minus = -aux.z_theta_minus / f23;

  const AirySample phi_p = airy(u_plus);            // phi(+kappa)
  const AirySample phi_m = airy(u_minus);           // phi(-kappa)
  const AirySample psi_p = airy(kOmega * u_plus);   // psi(+kappa)
  const AirySample psi_m = airy(kOmega * u_minus);  // psi(-kappa)

  aux.alpha_plus = psi_p.value * phi_p.value;
  aux.alpha_minus = psi_m.value * phi_m.value;
  aux.beta_plus = psi_m.value * phi_p.value;
  aux.beta_minus = psi_p.value * phi_m.value;
  aux.wronskian = std::cbrt(f) * std::polar(1.0, -kPi / 6.0) / (2.0 * kPi);
  aux.trunc_error = phi_p.trunc_error + phi_m.trunc_error + psi_p.trunc_error +
                    psi_m.trunc_error;
  return aux;
}

DeterminantValue det_stark(Complex z, const ModelSpec& spec) {
  require_kind(spec, ModelKind::stark, "det_stark");
  const double f = spec.field;
  const double f23 = std::cbrt(f) * std::cbrt(f);
  const Complex u_plus = -(z - spec.kappa * f) / f23;
  const Complex u_minus = -(z + spec.kappa * f) / f23;

  const AirySample phi_p = airy(u_plus);
  const AirySample phi_m = airy(u_minus);
  const AirySample psi_p = airy(kOmega * u_plus);
  const AirySample psi_m = airy(kOmega * u_minus);

  const ExtendedComplex alpha_sum = psi_p.value * phi_p.value + psi_m.value * phi_m.value;
  const ExtendedComplex beta_plus = psi_m.value * phi_p.value;

  // beta_- - beta_+ cancels its largest exponentials analytically; which
  // algebraic form keeps the cancellation harmless depends on the sector, so
  // evaluate the direct form and the rotation-identity form and keep the one
  // built from the smaller constituents.
  const ExtendedComplex direct_a = psi_p.value * phi_m.value;
  const ExtendedComplex direct_b = beta_plus;
  double direct_scale = std::max(direct_a.log_abs(), direct_b.log_abs());

  const AirySample bar_p = airy(std::conj(kOmega) * u_plus);
  const AirySample bar_m = airy(std::conj(kOmega) * u_minus);
  const ExtendedComplex rotated_a = psi_m.value * bar_p.value;
  const ExtendedComplex rotated_b = psi_p.value * bar_m.value;
  const double rotated_scale = std::max(rotated_a.log_abs(), rotated_b.log_abs());

  ExtendedComplex beta_diff;
  double diff_scale;
  double airy_err;
  if (direct_scale <= rotated_scale) {
    beta_diff = direct_a - direct_b;
    diff_scale = direct_scale;
    airy_err = phi_p.trunc_error + phi_m.trunc_error + psi_p.trunc_error + psi_m.trunc_error;
  } else {
    beta_diff = std::conj(kOmega) * (rotated_a - rotated_b);
    diff_scale = rotated_scale;
    airy_err = psi_p.trunc_error + psi_m.trunc_error + bar_p.trunc_error + bar_m.trunc_error;
  }
  const double amplification =
      beta_diff.is_zero() ? 1.0 : std::exp(std::min(700.0, diff_scale - beta_diff.log_abs()));

  const Complex wronskian = std::cbrt(f) * std::polar(1.0, -kPi / 6.0) / (2.0 * kPi);
  const ExtendedComplex eta_w(spec.eta * wronskian);
  DeterminantValue out;
  out.value = ExtendedComplex(1.0) + alpha_sum / eta_w + beta_plus * beta_diff / (eta_w * eta_w);
  out.plane = Plane::z_plane;
  out.trunc_error =
      phi_p.trunc_error + phi_m.trunc_error + psi_p.trunc_error + psi_m.trunc_error +
      (airy_err + 4.4e-16) * amplification + 1e-15;
  return out;
}

DeterminantValue det_stark_approx(Complex z, const ModelSpec& spec, StarkApprox which,
                                  std::optional<BranchedSqrt> window) {
  require_kind(spec, ModelKind::stark, "det_stark_approx");
  if (z == Complex(0.0, 0.0)) throw std::domain_error("det_stark_approx: z = 0");
  BranchedSqrt branch = kSecondSheet;  // default for south / F1
  if (!window) {
    switch (which) {
      case StarkApprox::east:
        branch = BranchedSqrt{-2.0 * kPi / 3.0, 2.0 * kPi / 3.0};
        break;
      case StarkApprox::north:
      case StarkApprox::f2:
        branch = BranchedSqrt{0.0, 4.0 * kPi / 3.0};
        break;
      case StarkApprox::south:
        branch = BranchedSqrt{-4.0 * kPi / 3.0, 0.0};
        break;
      case StarkApprox::f1:
        branch = kSecondSheet;
        break;
    }
  } else {
    branch = *window;
  }

  const double f = spec.field;
  const double kappa = spec.kappa;
  const double eta = spec.eta;
  const double b = eta / kappa;
  const Complex w = branch.sqrt(z);
  const Complex z32 = w * w * w;
  const ExtendedComplex quarter_inv(1.0 / (4.0 * z * eta * eta));
  const ExtendedComplex osc =
      ExtendedComplex::exp_of(kI * (4.0 * z32 / (3.0 * f) + f * kappa * kappa / (2.0 * w)));
  const ExtendedComplex g = g_b_ext(b, 2.0 * kappa * w);

  const Complex lin_p = 2.0 * eta * w + kI;
  const Complex lin_m = 2.0 * eta * w - kI;
  const ExtendedComplex h0 =
      ExtendedComplex(lin_p * lin_p) + ExtendedComplex::exp_of(kI * 4.0 * kappa * w);
  const ExtendedComplex h0_tilde =
      ExtendedComplex(lin_m * lin_m) + ExtendedComplex::exp_of(-kI * 4.0 * kappa * w);

  constexpr double kC1 = 5.0 / 72.0;
  const Complex first_order = 1.0 - kI * kC1 * 3.0 * f / z32;
  const ExtendedComplex sin_term = sin_ext(2.0 * kappa * w) * Complex(kI * kappa * eta * f / w);

  DeterminantValue out;
  out.plane = Plane::z_plane;
  out.trunc_error = 0.0;
  switch (which) {
    case StarkApprox::east:
      out.value = quarter_inv * (h0 + 2.0 * osc * (g * first_order - sin_term));
      break;
    case StarkApprox::south:
      out.value = quarter_inv * (h0_tilde + 2.0 * osc * (g * first_order - sin_term));
      break;
    case StarkApprox::north:
    case StarkApprox::f2:
      out.value = quarter_inv * h0;
      break;
    case StarkApprox::f1:
      out.value = g / ExtendedComplex(2.0 * z * eta * eta) * osc;
      break;
  }
  return out;
}

ExtendedComplex envelope_e1(Complex z, const ModelSpec& spec) {
  const double f = spec.field;
  const double r = std::abs(z);
  const Complex w = kSecondSheet.sqrt(z);
  const Complex z32 = w * w * w;
  const double log_osc =
      (-4.0 / (3.0 * f)) * std::imag(z32) - (f * spec.kappa * spec.kappa / 2.0) * std::imag(1.0 / w);
  const double amp = f * f / (r * r) * (1.0 + 1.0 / (r * r));
  return ExtendedComplex(amp) * ExtendedComplex::exp_of(Complex(log_osc, 0.0)) *
         ExtendedComplex::exp_of(Complex(2.0 * spec.kappa * std::abs(w.imag()), 0.0));
}

ExtendedComplex envelope_e2(Complex z, const ModelSpec& spec) {
  const double f = spec.field;
  const double r = std::abs(z);
  const Complex w = kSecondSheet.sqrt(z);
  const double amp = f * f / std::pow(r, 2.5) * (1.0 + std::pow(r, -1.5));
  return ExtendedComplex(amp) *
         (ExtendedComplex(1.0) + ExtendedComplex::exp_of(Complex(4.0 * spec.kappa * w.imag(), 0.0)));
}

ExtendedComplex envelope_e2_prime(Complex z, const ModelSpec& spec) {
  const double f = spec.field;
  const double r = std::abs(z);
  const Complex w = kSecondSheet.sqrt(z);
  const double amp = f * f / std::pow(r, 2.5) * (1.0 + std::pow(r, -1.5));
  return ExtendedComplex(amp) *
         (ExtendedComplex(1.0) +
          ExtendedComplex::exp_of(Complex(-4.0 * spec.kappa * w.imag(), 0.0)));
}

RegionTag region_classify(Complex z, const ModelSpec& spec, double M, double a) {
  require_kind(spec, ModelKind::stark, "region_classify");
  if (!(M > 20.0) || !(a > 0.0 && a < 0.5))
    throw std::invalid_argument("region_classify: need M > 20 and 0 < a < 1/2");
  const double f = spec.field;
  const double r = std::abs(z);
  if (r <= std::pow(f, a)) return RegionTag::origin_disk;
  const double theta = kSecondSheet.select_arg(z);  // (-2pi, 0]
  const double e0 = strip_half_width_ray0(r, M, f);
  const double esw = strip_half_width_sw(r, M, f);
  constexpr double two_pi_3 = 2.0 * kPi / 3.0;
  if (theta > -e0 || theta <= -2.0 * kPi + e0) return RegionTag::near_ray_zero;
  if (theta > -two_pi_3 + e0) return RegionTag::r1;
  if (theta >= -two_pi_3 - esw) return RegionTag::near_ray_southwest;
  return RegionTag::r2;
}

bool in_region_r2tilde(Complex z, const ModelSpec& spec, double M, double a) {
  require_kind(spec, ModelKind::stark, "in_region_r2tilde");
  const double f = spec.field;
  const double r = std::abs(z);
  if (r <= std::pow(f, a)) return false;
  const BranchedSqrt upper{0.0, 4.0 * kPi / 3.0};
  double theta;
  try {
    theta = upper.select_arg(z);
  } catch (const std::domain_error&) {
    return false;
  }
  return theta > strip_half_width_ray0(r, M, f) &&
         theta < 4.0 * kPi / 3.0 - strip_half_width_sw(r, M, f);
}

OriginCoefficients origin_coefficients(const ModelSpec& spec) {
  require_kind(spec, ModelKind::stark, "origin_coefficients");
  constexpr double a0 = 0.35502805388781722;  // Ai(0)
  const double eta = spec.eta;
  const double kappa = spec.kappa;
  OriginCoefficients out;
  out.c1 = 4.0 * kPi * a0 * a0 * std::polar(1.0, kPi / 6.0) * (eta + kappa) / (eta * eta);
  out.c2 = (2.0 * kI / std::sqrt(3.0)) * (kappa + eta) / (eta * eta);
  out.c3 = 1.0 - 2.0 * (kappa / eta) * (kappa / eta);
  return out;
}

Complex det_origin_expansion(Complex z, const ModelSpec& spec) {
  const OriginCoefficients c = origin_coefficients(spec);
  const double f = spec.field;
  const double f13 = std::cbrt(f);
  return (c.c1 + c.c2 * z / (f13 * f13) + c.c3 * f13) / f13;
}

DirichletParts det_dirichlet_parts(Complex w, const ModelSpec& spec) {
  require_kind(spec, ModelKind::dirichlet_wall, "det_dirichlet_parts");
  if (w == Complex(0.0, 0.0)) throw std::domain_error("det_dirichlet_parts: w = 0");
  const double eta = spec.eta;
  const double kappa = spec.kappa;
  const double l = spec.wall;
  DirichletParts parts;
  parts.part1 = ExtendedComplex(-kI / (2.0 * eta * eta * w * w)) *
                ExtendedComplex::exp_of(kI * 2.0 * l * w) * g_b_ext(eta / kappa, 2.0 * kappa * w);
  const Complex lin = 2.0 * eta * w + kI;
  parts.part2 = (ExtendedComplex(lin * lin) + ExtendedComplex::exp_of(kI * 4.0 * kappa * w)) /
                ExtendedComplex(4.0 * eta * eta * w * w);
  return parts;
}

DeterminantValue det_dirichlet(Complex w, const ModelSpec& spec) {
  require_kind(spec, ModelKind::dirichlet_wall, "det_dirichlet");
  DeterminantValue out;
  out.plane = Plane::w_plane;
  out.trunc_error = 1e-14;
  const double eta = spec.eta;
  const double kappa = spec.kappa;
  const double l = spec.wall;
  if (std::abs(w) < 1e-7) {
    // removable singularity: eta^2 D(0) = eta^2 + 2 l eta + 2 kappa (l - kappa)
    const Complex d0((eta * eta + 2.0 * l * eta + 2.0 * kappa * (l - kappa)) / (eta * eta), 0.0);
    const Complex d1 = kI * ((2.0 * l * l + 2.0 * kappa * kappa) / eta -
                             2.0 * kappa * (kappa - l) * (kappa + l) / (eta * eta));
    out.value = ExtendedComplex(d0 + d1 * w);
    return out;
  }
  const DirichletParts parts = det_dirichlet_parts(w, spec);
  out.value = parts.part1 + parts.part2;
  return out;
}

}  // namespace resonance

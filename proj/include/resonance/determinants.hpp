#pragma once

#include <complex>
#include <optional>

#include "resonance/branch.hpp"
#include "resonance/extended.hpp"
#include "resonance/model.hpp"

namespace resonance {

enum class Plane { z_plane, w_plane };

enum class RegionTag { r1, r2, r2_tilde, near_ray_zero, near_ray_southwest, origin_disk };

struct DeterminantValue {
  ExtendedComplex value;
  Plane plane = Plane::z_plane;
  std::optional<RegionTag> region;
  double trunc_error = 0.0;
};

// Airy wavefunction products entering the Stark determinant,
// alpha_pm = psi(pm kappa) phi(pm kappa), beta_pm = psi(mp kappa) phi(pm kappa).
struct AuxSymbols {
  ExtendedComplex alpha_plus, alpha_minus;
  ExtendedComplex beta_plus, beta_minus;
  Complex wronskian;
  Complex z_theta_plus, z_theta_minus;  // z -/+ kappa f
  double trunc_error = 0.0;
};

// --- free model (functions of w = sqrt z on the two-sheet plane) ---

// D0(w) = ((2 eta w + i)^2 + e^{4 i kappa w}) / (4 eta^2 w^2)
DeterminantValue det_free(Complex w, const ModelSpec& spec);

// numerator h0(w); its nonzero-w roots are the resonances in w
ExtendedComplex free_numerator(Complex w, const ModelSpec& spec);

// F_pm(s, t; w) = 1 + i (1 pm e^{itw}) / (sw); F_-(s,t;0) = 1 + t/s by limit
Complex f_factor(int sign, double s, double t, Complex w);

// g_b(w) = sin w + b w cos w
Complex g_b(double b, Complex w);
ExtendedComplex g_b_ext(double b, Complex w);

// --- Stark model (entire in z) ---

DeterminantValue det_stark(Complex z, const ModelSpec& spec);
AuxSymbols stark_symbols(Complex z, const ModelSpec& spec);

enum class StarkApprox { east, north, south, f1, f2 };

// Asymptotic approximants; the sqrt-branch window defaults to the sector each
// approximant is defined on (east: principal, north/f2: (0, 4pi/3],
// south: (-4pi/3, 0], f1: (-2pi, 0]).
DeterminantValue det_stark_approx(Complex z, const ModelSpec& spec, StarkApprox which,
                                  std::optional<BranchedSqrt> window = std::nullopt);

// Error envelopes (diagnostic only, no accuracy contract).
ExtendedComplex envelope_e1(Complex z, const ModelSpec& spec);
ExtendedComplex envelope_e2(Complex z, const ModelSpec& spec);
ExtendedComplex envelope_e2_prime(Complex z, const ModelSpec& spec);

// Region membership with arg z taken in (-2pi, 0].
RegionTag region_classify(Complex z, const ModelSpec& spec, double M = 20.0001,
                          double a = 0.4);
// R2-tilde uses the (0, 4pi/3] convention of the upper-plane approximant.
bool in_region_r2tilde(Complex z, const ModelSpec& spec, double M = 20.0001, double a = 0.4);

// Three-term origin expansion D_f(z) ~ f^{-1/3}(c1 + c2 z f^{-2/3} + c3 f^{1/3}).
Complex det_origin_expansion(Complex z, const ModelSpec& spec);
struct OriginCoefficients {
  Complex c1, c2;
  double c3;
};
OriginCoefficients origin_coefficients(const ModelSpec& spec);

// --- Dirichlet model (functions of w = sqrt z) ---

DeterminantValue det_dirichlet(Complex w, const ModelSpec& spec);
struct DirichletParts {
  ExtendedComplex part1;  // -i e^{2ilw} g_b(2 kappa w) / (2 eta^2 w^2)
  ExtendedComplex part2;  // free-model D0(w)
};
DirichletParts det_dirichlet_parts(Complex w, const ModelSpec& spec);

}  // namespace resonance

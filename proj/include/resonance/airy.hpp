#pragma once

#include <complex>
#include <optional>

#include "resonance/extended.hpp"

namespace resonance {

enum class AiryMethod { series, asymptotic, rotated_asymptotic };

struct AirySample {
  ExtendedComplex value;
  std::optional<ExtendedComplex> derivative;
  AiryMethod method = AiryMethod::series;
  double trunc_error = 0.0;  // estimated relative error
};

// Airy function Ai(zeta) over the whole complex plane in extended range.
// Maclaurin series (double-double) for |zeta| <= 8, the classical asymptotic
// expansion with optimal truncation in its good sector, and the rotation
// identity Ai(z) + w Ai(wz) + conj(w) Ai(conj(w) z) = 0, w = exp(2i pi/3),
// elsewhere.
AirySample airy(Complex zeta);

enum class AiryRotation { omega, omega_bar, none };

// Ai(rho * zeta) for rho in {omega, conj(omega), 1}, evaluated stably.
AirySample airy_rotated(Complex zeta, AiryRotation rotation);

// Relative second-difference residual of Ai'' = zeta * Ai.
double airy_ode_residual(Complex zeta, double h = 0.0);

// Exposed for overlap/agreement tests: each forced onto one method.
AirySample airy_series(Complex zeta);
AirySample airy_asymptotic(Complex zeta);

}  // namespace resonance

#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "resonance/extended.hpp"

namespace resonance {

// Square root with an explicit branch: the argument of z is taken as its
// representative in the half-open window (theta_min, theta_max], so the
// result satisfies w^2 = z and 2*arg(w) in that window.  The window for the
// second-sheet continuation below [0, inf) is (-2*pi, 0].
struct BranchedSqrt {
  double theta_min;
  double theta_max;

  // Representative of arg z in (theta_min, theta_max].
  double select_arg(Complex z) const {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const double a = std::arg(z);
    double theta = a + two_pi * std::ceil((theta_min - a) / two_pi);
    if (theta <= theta_min) theta += two_pi;  // half-open at the lower edge
    if (theta > theta_max + 1e-12)
      throw std::domain_error("BranchedSqrt: arg z has no representative in window");
    return std::min(theta, theta_max);
  }

  Complex sqrt(Complex z) const {
    if (z == Complex(0.0, 0.0)) return {0.0, 0.0};  // branch point
    const double theta = select_arg(z);
    return std::polar(std::sqrt(std::abs(z)), 0.5 * theta);
  }

  // z^{3/2} on the same branch.
  Complex pow32(Complex z) const {
    if (z == Complex(0.0, 0.0)) return {0.0, 0.0};
    const double theta = select_arg(z);
    return std::polar(std::pow(std::abs(z), 1.5), 1.5 * theta);
  }
};

inline constexpr BranchedSqrt kSecondSheet{-2.0 * std::numbers::pi, 0.0};
inline constexpr BranchedSqrt kPrincipalSheet{-std::numbers::pi, std::numbers::pi};

}  // namespace resonance

#pragma once

#include <complex>
#include <functional>

#include "resonance/extended.hpp"

namespace resonance {

struct QuadratureResult {
  Complex value{0.0, 0.0};
  double error_bound = 0.0;
  bool converged = false;
  long evaluations = 0;
};

// Adaptive Simpson over [a, b].  Stops when the local Richardson error
// estimate meets abs_tol (with rel_tol * |coarse estimate| as fallback for
// large integrals); gives up after max_intervals subdivisions, returning the
// best estimate with converged = false.
QuadratureResult integrate(const std::function<Complex(double)>& g, double a, double b,
                           double abs_tol = 1e-9, double rel_tol = 1e-9,
                           long max_intervals = 1L << 20);

double integrate_real(const std::function<double(double)>& g, double a, double b,
                      double abs_tol = 1e-9, double rel_tol = 1e-9);

}  // namespace resonance

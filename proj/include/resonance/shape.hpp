#pragma once

#include <complex>

#include "resonance/model.hpp"

namespace resonance {

// Free-model resonance in the w = sqrt(z) plane, located by the real
// reduction of F_pm = 0: with s = 2 eta, t = 2 kappa, q = t/s and
// zeta = q(isw - 1) = x + iy, the zero condition becomes
// zeta e^{-zeta} = +- e^q, i.e. x = y cot y and log(y/|sin y|) - y cot y = q
// on each interval y in (n pi, (n+1) pi).  Even n solves F_+, odd n F_-.
struct ShapeRoot {
  int n = 0;                       // interval index
  std::complex<double> w;          // root of F_+ (even n) or F_- (odd n)
  double interval_lo = 0.0;        // n pi / t
  double interval_hi = 0.0;        // (n+1) pi / t
  double residual = 0.0;           // |F_pm(s, t; w)|
};

ShapeRoot shape_root(int n, const ModelSpec& spec);

// Second-order expansion w_n[1 - s/t + (s/t)^2 - i s^2 w_n / (2t)],
// w_n = (1+n) pi / t; order 1 truncates after the linear term.
std::complex<double> shape_perturbative(int n, const ModelSpec& spec, int order = 2);

}  // namespace resonance

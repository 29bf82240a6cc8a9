#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "resonance/model.hpp"
#include "resonance/phase.hpp"
#include "resonance/rootfinder.hpp"

namespace resonance {

// B(z) = D_f(rho z) / D_f(0), rho = 1 for the right half plane, omega^{-1}
// for the southwest half plane.  B(0) = 1 by construction.
struct NormalizedDeterminant {
  ModelSpec spec;
  Complex rotation{1.0, 0.0};
  ExtendedComplex normalization;

  static NormalizedDeterminant make(const ModelSpec& stark_spec, bool southwest = false);
  ExtendedComplex operator()(Complex z) const;
  ExtEvaluator evaluator() const;
};

struct CountReport {
  std::string region;
  long zero_count = -1;
  double count_times_f = 0.0;
  double field = 0.0;
  std::optional<double> jensen_value;
  std::optional<double> carleman_value;
  std::optional<double> predicted_jensen;
  std::optional<double> predicted_carleman;
  std::optional<double> envelope_lower;
  std::optional<double> envelope_upper;
  std::optional<double> safe_radius;
};

// Radius r in ((1-delta) R, R) maximizing the minimum of log|B| over a
// 64-candidate grid sampled at 512 angles; candidates whose circle passes
// within 1e-6 of a known zero are rejected (widening delta once if all are).
double safe_radius(const ExtEvaluator& B, double R, double delta,
                   const std::vector<Complex>& known_zeros = {});

// (1/2pi) * integral of log|B| over the circle |z| = r, by doubling
// trapezoid sums from 2^10 nodes until successive estimates agree.
double jensen_integral(const ExtEvaluator& B, double r);

// Upper bound (I_J[vr] - I_J[r]) / log v on the zero count of the disk |z| <= r.
double jensen_count_bound(const ExtEvaluator& B, double r, double v);

struct CarlemanParts {
  double axis = 0.0;  // imaginary-axis integral I1
  double arc = 0.0;   // boundary-arc integral I2 (continuous arg on inner arc)
  double total() const { return axis + arc; }
};

// Right-half-plane Carleman boundary integrals for radii R_rho < R_L; equals
// sum over zeros of (1/r_n - r_n/R_L^2) cos(theta_n).
CarlemanParts carleman_integral(const ExtEvaluator& B, double R_rho, double R_L);

// Zero census below the real segment [a, b] for the Stark model, over the
// strip of depth 2 M f log(1/f + b) / sqrt(a).
CountReport census_below_segment(const ModelSpec& spec, double a, double b, double M = 20.0001,
                                 int threads = 1);

struct EnvelopeResult {
  double lower = 0.0;
  double upper = 0.0;
  long measured = 0;
};

// Measured right-half-plane zero count in the annulus R_l < |z| < R_u against
// the (1 +- eps)/(2 pi f) brackets.
EnvelopeResult halfplane_count_envelope(const ModelSpec& spec, double R_l, double R_u,
                                        double eps, int threads = 1);

}  // namespace resonance

#pragma once

#include <complex>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "resonance/extended.hpp"

namespace resonance {

using ExtEvaluator = std::function<ExtendedComplex(Complex)>;

struct PhaseSample {
  double t;         // path parameter
  double phase;     // unwrapped, radians
  double log_abs;   // natural log of |F|
};

// Unwrapped phase of a nonvanishing function along a parameterized path,
// refined until every consecutive increment is below the step bound.
struct PhaseTrace {
  std::vector<PhaseSample> samples;

  double total_change() const {
    return samples.empty() ? 0.0 : samples.back().phase - samples.front().phase;
  }
  double min_log_abs() const;
};

// Thrown when refinement cannot bring the phase step under the bound
// (a zero within sample spacing) or a sample lands exactly on a zero.
class PhaseStepError : public std::runtime_error {
 public:
  PhaseStepError(Complex where, const char* what) : std::runtime_error(what), point(where) {}
  Complex point;
};

PhaseTrace trace_phase(const std::function<Complex(double)>& path, const ExtEvaluator& f,
                       double t0, double t1, int initial_samples = 16,
                       double max_step = std::numbers::pi / 2.0, int max_doublings = 22);

}  // namespace resonance

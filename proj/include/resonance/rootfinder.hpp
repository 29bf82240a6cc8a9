#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

#include "resonance/determinants.hpp"
#include "resonance/phase.hpp"

namespace resonance {

struct Box {
  Complex lo;  // lower-left corner
  Complex hi;  // upper-right corner
  Plane plane = Plane::z_plane;

  double width() const { return hi.real() - lo.real(); }
  double height() const { return hi.imag() - lo.imag(); }
  double diameter() const { return std::hypot(width(), height()); }
  Complex center() const { return 0.5 * (lo + hi); }
  bool contains(Complex z) const {
    return z.real() >= lo.real() && z.real() <= hi.real() && z.imag() >= lo.imag() &&
           z.imag() <= hi.imag();
  }
  Box dilated(double factor) const {
    const Complex c = center();
    return {c + (lo - c) * factor, c + (hi - c) * factor, plane};
  }
};

struct WindingResult {
  int winding = 0;
  double min_log_abs = 0.0;  // min log|f| over contour samples
  long samples_used = 0;
};

class BoundaryZeroError : public std::runtime_error {
 public:
  BoundaryZeroError(Complex where)
      : std::runtime_error("evaluator vanishes on box boundary"), point(where) {}
  Complex point;
};

struct Resonance {
  Complex location;
  int multiplicity = 1;
  double residual_log = 0.0;  // log|f| at location
  double local_scale_log = 0.0;  // geometric-mean log|f| at enclosing box corners
  Box enclosing_box;
  int refine_iterations = 0;
};

// Zeros inside the box counted with multiplicity, by the argument principle.
// A boundary sample too close to a zero triggers a 1% dilation, retried up to
// five times before BoundaryZeroError.
WindingResult winding(const ExtEvaluator& f, const Box& box);

struct IsolateOptions {
  double resolution = 1e-3;
  int threads = 1;
  int max_depth = 40;
  int multiplicity_cap = 8;  // above this a cluster is reported as suspicious
};

struct IsolateResult {
  std::vector<Resonance> zeros;
  std::vector<Box> suspicious;   // winding > multiplicity_cap at resolution
  std::vector<Box> unresolved;   // left over when depth was exceeded
  bool complete = true;
};

// Adaptive quadtree isolation: subdivide until every sub-box has winding <= 1
// and diameter <= resolution, then polish each isolated zero with Muller
// iteration and re-certify by a fresh winding.
IsolateResult isolate_zeros(const ExtEvaluator& f, const Box& box, const IsolateOptions& opts);
inline IsolateResult isolate_zeros(const ExtEvaluator& f, const Box& box, double resolution) {
  IsolateOptions opts;
  opts.resolution = resolution;
  return isolate_zeros(f, box, opts);
}

enum class NamedRegion { r1, r2, custom };

struct ZeroFreeReport {
  std::vector<Box> checked;
  std::vector<Box> violations;  // nonzero winding
  long samples = 0;
};

// Covers region ∩ window with boxes fully inside the region (membership by
// the Stark region classifier for r1/r2, everything for custom) and asserts
// winding zero on each.
ZeroFreeReport verify_zero_free(const ExtEvaluator& f, NamedRegion region,
                                const ModelSpec& spec, const Box& window, int grid = 12,
                                int threads = 1, double M = 20.0001, double a = 0.4);

}  // namespace resonance

#include "resonance/phase.hpp"

#include <cmath>

namespace resonance {
namespace {

struct Node {
  double t;
  double arg;      // principal arg of F(path(t))
  double log_abs;
};

double principal_diff(double a, double b) {
  double d = b - a;
  constexpr double two_pi = 2.0 * std::numbers::pi;
  while (d > std::numbers::pi) d -= two_pi;
  while (d < -std::numbers::pi) d += two_pi;
  return d;
}

struct Refiner {
  const std::function<Complex(double)>* path;
  const ExtEvaluator* f;
  double max_step;
  int max_depth;

  Node probe(double t) const {
    const ExtendedComplex v = (*f)((*path)(t));
    if (v.is_zero()) throw PhaseStepError((*path)(t), "zero on contour");
    return {t, v.arg(), v.log_abs()};
  }

  // A near-linear phase can alias: a true step of 2 pi k + delta looks like
  // delta at every bisection level.  Guard by measuring the phase gradient
  // over a tiny unaliased sub-step and requiring the projected change across
  // the interval to be genuinely small.
  bool gradient_ok(const Node& a, const Node& b) const {
    constexpr double eps = 1.0 / 65536.0;
    const Node p = probe(a.t + (b.t - a.t) * eps);
    const double projected = std::abs(principal_diff(a.arg, p.arg)) / eps;
    return projected < 1.5 * max_step;
  }

  // Emits the refined samples of (a, b], assuming a already emitted.  An
  // interval is accepted only at depth <= 0, which a parent split grants
  // after checking both halves' steps and gradients, so every accepted
  // interval has been gradient-verified exactly once.  depth counts
  // consecutive failing splits; a zero inside keeps it growing until the cap.
  void refine(const Node& a, const Node& b, int depth, std::vector<Node>& out) const {
    if (std::abs(principal_diff(a.arg, b.arg)) < max_step && depth <= 0) {
      out.push_back(b);
      return;
    }
    if (depth >= max_depth)
      throw PhaseStepError((*path)(0.5 * (a.t + b.t)), "phase step not refinable");
    const Node m = probe(0.5 * (a.t + b.t));
    const bool still_bad = std::abs(principal_diff(a.arg, m.arg)) >= max_step ||
                           std::abs(principal_diff(m.arg, b.arg)) >= max_step ||
                           !gradient_ok(a, m) || !gradient_ok(m, b);
    refine(a, m, still_bad ? depth + 1 : 0, out);
    refine(m, b, still_bad ? depth + 1 : 0, out);
  }
};

}  // namespace

double PhaseTrace::min_log_abs() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& s : samples) m = std::min(m, s.log_abs);
  return m;
}

PhaseTrace trace_phase(const std::function<Complex(double)>& path, const ExtEvaluator& f,
                       double t0, double t1, int initial_samples, double max_step,
                       int max_doublings) {
  Refiner r{&path, &f, max_step, max_doublings};
  std::vector<Node> nodes;
  nodes.push_back(r.probe(t0));
  Node prev = nodes.front();
  for (int i = 1; i <= initial_samples; ++i) {
    const Node next = r.probe(t0 + (t1 - t0) * i / initial_samples);
    r.refine(prev, next, 1, nodes);  // depth 1 forces one verification split
    prev = next;
  }

  PhaseTrace trace;
  trace.samples.reserve(nodes.size());
  double phase = nodes.front().arg;
  trace.samples.push_back({nodes.front().t, phase, nodes.front().log_abs});
  for (size_t i = 1; i < nodes.size(); ++i) {
    phase += principal_diff(nodes[i - 1].arg, nodes[i].arg);
    trace.samples.push_back({nodes[i].t, phase, nodes[i].log_abs});
  }
  return trace;
}

}  // namespace resonance

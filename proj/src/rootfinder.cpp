#include "resonance/rootfinder.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "resonance/parallel.hpp"

namespace resonance {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

WindingResult winding_once(const ExtEvaluator& f, const Box& box) {
  WindingResult out;
  double total = 0.0;
  const Complex c00 = box.lo;
  const Complex c10{box.hi.real(), box.lo.imag()};
  const Complex c11 = box.hi;
  const Complex c01{box.lo.real(), box.hi.imag()};
  const Complex corners[5] = {c00, c10, c11, c01, c00};
  out.min_log_abs = std::numeric_limits<double>::infinity();
  for (int e = 0; e < 4; ++e) {
    const Complex a = corners[e], b = corners[e + 1];
    auto path = [a, b](double t) { return a + t * (b - a); };
    const PhaseTrace trace = trace_phase(path, f, 0.0, 1.0);
    total += trace.total_change();
    out.min_log_abs = std::min(out.min_log_abs, trace.min_log_abs());
    out.samples_used += static_cast<long>(trace.samples.size());
  }
  const double turns = total / kTwoPi;
  const double nearest = std::round(turns);
  if (std::abs(turns - nearest) > 1e-6)
    throw PhaseStepError(box.center(), "winding total not an integer multiple of 2 pi");
  out.winding = static_cast<int>(nearest);
  return out;
}

WindingResult winding_impl(const ExtEvaluator& f, const Box& box, bool allow_dilate) {
  Box b = box;
  for (int attempt = 0;; ++attempt) {
    try {
      return winding_once(f, b);
    } catch (const PhaseStepError& err) {
      if (!allow_dilate || attempt >= 5) throw BoundaryZeroError(err.point);
      b = b.dilated(1.01);
    }
  }
}

// Split into four children sharing edges; ratio is perturbed when a zero sits
// on a shared edge.
std::array<Box, 4> split4(const Box& box, double rx, double ry) {
  const double mx = box.lo.real() + rx * box.width();
  const double my = box.lo.imag() + ry * box.height();
  const Plane p = box.plane;
  return {Box{box.lo, {mx, my}, p},
          Box{{mx, box.lo.imag()}, {box.hi.real(), my}, p},
          Box{{box.lo.real(), my}, {mx, box.hi.imag()}, p},
          Box{{mx, my}, box.hi, p}};
}

struct MullerResult {
  Complex location;
  int iterations = 0;
  bool converged = false;
};

// Derivative-free refinement; the evaluator's analytic derivative is never
// needed and winding certification backstops any slow convergence.
MullerResult muller(const ExtEvaluator& f, Complex start, double spread, double scale,
                    const Box& bound) {
  Complex x0 = start + Complex(spread, 0.0);
  Complex x1 = start + Complex(0.0, spread);
  Complex x2 = start;
  ExtendedComplex f0 = f(x0), f1 = f(x1), f2 = f(x2);
  MullerResult out;
  out.location = x2;
  for (int it = 0; it < 60; ++it) {
    out.iterations = it + 1;
    if (f2.is_zero()) {
      out.converged = true;
      return out;
    }
    // classical Muller step in ratios, extended-safe
    const Complex q = (x2 != x1 && x1 != x0) ? (x2 - x1) / (x1 - x0) : Complex(1e-3, 0);
    const ExtendedComplex A = q * f2 - (q * (1.0 + q)) * f1 + (q * q) * f0;
    const ExtendedComplex B = (2.0 * q + 1.0) * f2 - ((1.0 + q) * (1.0 + q)) * f1 + (q * q) * f0;
    const ExtendedComplex C = (1.0 + q) * f2;
    ExtendedComplex disc2 = B * B - 4.0 * A * C;
    // sqrt in extended form
    const LogPolar lp = disc2.is_zero() ? LogPolar{-1e30, 0.0} : ext_log(disc2);
    const ExtendedComplex root =
        ExtendedComplex(std::polar(1.0, lp.phase / 2.0)) *
        ExtendedComplex::exp_of(Complex(lp.log_abs / 2.0, 0.0));
    ExtendedComplex den1 = B + root;
    ExtendedComplex den2 = B - root;
    const ExtendedComplex den = (den1.is_zero() || (!den2.is_zero() && den2.log_abs() > den1.log_abs()))
                                    ? den2
                                    : den1;
    if (den.is_zero()) break;
    Complex step = ((-2.0 * C) / den).value() * (x2 - x1);
    if (!std::isfinite(std::abs(step))) break;
    const double max_step = 4.0 * std::max(bound.width(), bound.height());
    if (std::abs(step) > max_step) step *= max_step / std::abs(step);
    const Complex x3 = x2 + step;
    x0 = x1;
    f0 = f1;
    x1 = x2;
    f1 = f2;
    x2 = x3;
    f2 = f(x2);
    out.location = x2;
    if (std::abs(step) < 1e-12 * std::max(scale, std::abs(x2))) {
      out.converged = true;
      return out;
    }
  }
  return out;
}

double corner_scale_log(const ExtEvaluator& f, const Box& box) {
  const Complex corners[4] = {box.lo, {box.hi.real(), box.lo.imag()}, box.hi,
                              {box.lo.real(), box.hi.imag()}};
  double sum = 0.0;
  for (const Complex& c : corners) sum += f(c).log_abs();
  return sum / 4.0;
}

}  // namespace

WindingResult winding(const ExtEvaluator& f, const Box& box) {
  return winding_impl(f, box, true);
}

IsolateResult isolate_zeros(const ExtEvaluator& f, const Box& box, const IsolateOptions& opts) {
  IsolateResult result;
  struct Item {
    Box box;
    int winding;
  };
  std::vector<Item> queue;
  {
    const WindingResult w0 = winding_impl(f, box, true);
    if (w0.winding == 0) return result;
    queue.push_back({box, w0.winding});
  }

  const double split_ratios[5] = {0.5, 0.52, 0.47, 0.55, 0.43};

  for (int depth = 0; depth <= opts.max_depth && !queue.empty(); ++depth) {
    std::vector<Item> ready;    // boxes at final resolution
    std::vector<Item> to_split;
    for (const Item& item : queue) {
      if (item.box.diameter() <= opts.resolution)
        ready.push_back(item);
      else
        to_split.push_back(item);
    }

    for (const Item& item : ready) {
      if (item.winding > opts.multiplicity_cap) {
        result.suspicious.push_back(item.box);
        continue;
      }
      const double scale = std::max(1.0, std::abs(item.box.center()));
      const MullerResult m =
          muller(f, item.box.center(), 0.125 * item.box.diameter(), scale, item.box);
      Resonance res;
      res.location = m.location;
      res.multiplicity = item.winding;
      res.refine_iterations = m.iterations;
      res.enclosing_box = item.box;
      const ExtendedComplex fv = f(m.location);
      res.residual_log = fv.is_zero() ? -std::numeric_limits<double>::infinity() : fv.log_abs();
      res.local_scale_log = corner_scale_log(f, item.box);
      if (!item.box.contains(res.location) ||
          res.residual_log > res.local_scale_log + std::log(1e-8)) {
        // refinement did not certify; keep subdividing instead
        to_split.push_back(item);
        continue;
      }
      result.zeros.push_back(res);
    }

    if (depth == opts.max_depth) {
      for (const Item& item : to_split) result.unresolved.push_back(item.box);
      result.complete = result.unresolved.empty();
      break;
    }

    // split all pending boxes in parallel, deterministically merged by index
    std::vector<std::array<Item, 4>> children(to_split.size());
    parallel_for(to_split.size(), opts.threads, [&](std::size_t i) {
      const Item& item = to_split[i];
      for (double rx : split_ratios) {
        try {
          const auto parts = split4(item.box, rx, rx);
          std::array<Item, 4> kids;
          int sum = 0;
          for (int k = 0; k < 4; ++k) {
            const WindingResult w = winding_impl(f, parts[k], false);
            kids[k] = {parts[k], w.winding};
            sum += w.winding;
          }
          if (sum != item.winding) continue;  // a zero slipped through an edge
          children[i] = kids;
          return;
        } catch (const BoundaryZeroError&) {
          continue;  // zero on a shared edge: retry with a shifted split point
        }
      }
      throw BoundaryZeroError(item.box.center());
    });

    queue.clear();
    for (const auto& kids : children)
      for (const Item& k : kids)
        if (k.winding != 0) queue.push_back(k);
  }

  std::sort(result.zeros.begin(), result.zeros.end(), [](const Resonance& a, const Resonance& b) {
    if (a.location.real() != b.location.real()) return a.location.real() < b.location.real();
    return a.location.imag() < b.location.imag();
  });
  return result;
}

ZeroFreeReport verify_zero_free(const ExtEvaluator& f, NamedRegion region, const ModelSpec& spec,
                                const Box& window, int grid, int threads, double M, double a) {
  ZeroFreeReport report;
  auto inside = [&](Complex z) {
    if (region == NamedRegion::custom) return true;
    const RegionTag tag = region_classify(z, spec, M, a);
    return region == NamedRegion::r1 ? tag == RegionTag::r1 : tag == RegionTag::r2;
  };

  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      const double x0 = window.lo.real() + window.width() * i / grid;
      const double x1 = window.lo.real() + window.width() * (i + 1) / grid;
      const double y0 = window.lo.imag() + window.height() * j / grid;
      const double y1 = window.lo.imag() + window.height() * (j + 1) / grid;
      const Box cell{{x0, y0}, {x1, y1}, window.plane};
      bool ok = true;
      for (int si = 0; si <= 2 && ok; ++si)
        for (int sj = 0; sj <= 2 && ok; ++sj)
          ok = inside(Complex(x0 + 0.5 * si * (x1 - x0), y0 + 0.5 * sj * (y1 - y0)));
      if (ok) report.checked.push_back(cell);
    }
  }

  std::vector<int> windings(report.checked.size(), 0);
  std::vector<long> samples(report.checked.size(), 0);
  parallel_for(report.checked.size(), threads, [&](std::size_t i) {
    const WindingResult w = winding_impl(f, report.checked[i], true);
    windings[i] = w.winding;
    samples[i] = w.samples_used;
  });
  for (std::size_t i = 0; i < report.checked.size(); ++i) {
    report.samples += samples[i];
    if (windings[i] != 0) report.violations.push_back(report.checked[i]);
  }
  return report;
}

}  // namespace resonance

#include "resonance/greens.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "resonance/airy.hpp"
#include "resonance/determinants.hpp"
#include "resonance/parallel.hpp"
#include "resonance/shape.hpp"

namespace resonance {
namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};
const Complex kOmega = std::polar(1.0, 2.0 * kPi / 3.0);

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration.
struct GaussLegendre {
  std::vector<double> x, w;
  explicit GaussLegendre(int n) : x(n), w(n) {
    for (int i = 0; i < n; ++i) {
      double t = std::cos(kPi * (i + 0.75) / (n + 0.5));
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = t;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        const double dp = n * (t * p1 - p0) / (t * t - 1.0);
        const double dt = p1 / dp;
        t -= dt;
        if (std::abs(dt) < 1e-15) {
          x[i] = t;
          w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
          break;
        }
      }
    }
  }
};

const GaussLegendre& gl16() {
  static const GaussLegendre g(16);
  return g;
}

// One model's solution pair and determinant data at fixed z.
struct KernelParts {
  std::function<ExtendedComplex(double)> psi;    // L^2 at -inf
  std::function<ExtendedComplex(double)> phi_r;  // L^2 (or boundary) at +inf
  ExtendedComplex wronskian;
  ExtendedComplex det;
  ExtendedComplex alpha_p, alpha_m, beta_p;
  double eta = 1.0, kappa = 1.0;

  ExtendedComplex g_infinity(double x, double y) const {
    return psi(std::min(x, y)) * phi_r(std::max(x, y)) / wronskian;
  }
  ExtendedComplex g_plus(double t) const { return g_infinity(kappa, t); }
  ExtendedComplex g_minus(double t) const { return g_infinity(-kappa, t); }
};

KernelParts make_parts(const ModelSpec& spec, Complex z) {
  KernelParts parts;
  parts.eta = spec.eta;
  parts.kappa = spec.kappa;
  switch (spec.kind) {
    case ModelKind::free_well: {
      const Complex w = std::sqrt(z);
      parts.psi = [w](double x) { return ExtendedComplex::exp_of(-kI * w * x); };
      parts.phi_r = [w](double x) { return ExtendedComplex::exp_of(kI * w * x); };
      parts.wronskian = ExtendedComplex(-2.0 * kI * w);
      parts.alpha_p = ExtendedComplex(1.0);
      parts.alpha_m = ExtendedComplex(1.0);
      parts.beta_p = ExtendedComplex::exp_of(2.0 * kI * w * spec.kappa);
      const ExtendedComplex beta_m = ExtendedComplex::exp_of(-2.0 * kI * w * spec.kappa);
      const ExtendedComplex eta_w = ExtendedComplex(spec.eta) * parts.wronskian;
      parts.det = ExtendedComplex(1.0) + (parts.alpha_p + parts.alpha_m) / eta_w +
                  parts.beta_p * (beta_m - parts.beta_p) / (eta_w * eta_w);
      break;
    }
    case ModelKind::stark: {
      const double f = spec.field;
      const double f23 = std::cbrt(f) * std::cbrt(f);
      parts.psi = [z, f, f23](double x) { return airy(kOmega * (-(z - x * f) / f23)).value; };
      parts.phi_r = [z, f, f23](double x) { return airy(-(z - x * f) / f23).value; };
      const AuxSymbols aux = stark_symbols(z, spec);
      parts.wronskian = ExtendedComplex(aux.wronskian);
      parts.alpha_p = aux.alpha_plus;
      parts.alpha_m = aux.alpha_minus;
      parts.beta_p = aux.beta_plus;
      parts.det = det_stark(z, spec).value;
      break;
    }
    case ModelKind::dirichlet_wall: {
      const Complex w = std::sqrt(z);
      const double l = spec.wall;
      parts.psi = [w](double x) { return ExtendedComplex::exp_of(-kI * w * x); };
      parts.phi_r = [w, l](double x) {
        const Complex arg = (x - l) * w;
        const ExtendedComplex ep = ExtendedComplex::exp_of(kI * arg);
        const ExtendedComplex em = ExtendedComplex::exp_of(-kI * arg);
        return (ep - em) * Complex(0.0, -0.5);
      };
      parts.wronskian = ExtendedComplex(-w) * ExtendedComplex::exp_of(-kI * l * w);
      // alpha/beta from the solution pair directly
      parts.alpha_p = parts.psi(spec.kappa) * parts.phi_r(spec.kappa);
      parts.alpha_m = parts.psi(-spec.kappa) * parts.phi_r(-spec.kappa);
      parts.beta_p = parts.psi(-spec.kappa) * parts.phi_r(spec.kappa);
      const ExtendedComplex beta_m = parts.psi(spec.kappa) * parts.phi_r(-spec.kappa);
      const ExtendedComplex eta_wr = ExtendedComplex(spec.eta) * parts.wronskian;
      parts.det = ExtendedComplex(1.0) + (parts.alpha_p + parts.alpha_m) / eta_wr +
                  parts.beta_p * (beta_m - parts.beta_p) / (eta_wr * eta_wr);
      break;
    }
  }
  return parts;
}

}  // namespace

double WellEigenpair::energy() const {
  const double k = n * kPi / (2.0 * kappa);
  return k * k;
}

double WellEigenpair::operator()(double x) const {
  if (std::abs(x) > kappa) return 0.0;
  return std::sin(n * kPi * (x + kappa) / (2.0 * kappa)) / std::sqrt(kappa);
}

double EnergyWindow::chi(double lambda) const {
  auto smooth = [](double u) {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    return u * u * u * (10.0 + u * (-15.0 + 6.0 * u));
  };
  if (delta <= 0.0) return (lambda >= a && lambda <= b) ? 1.0 : 0.0;
  if (lambda < a) return smooth((lambda - (a - delta)) / delta);
  if (lambda > b) return smooth(((b + delta) - lambda) / delta);
  return 1.0;
}

ExtendedComplex greens_kernel(const ModelSpec& spec, Complex z, double x, double y) {
  const KernelParts parts = make_parts(spec, z);
  const ExtendedComplex eta_w = ExtendedComplex(parts.eta) * parts.wronskian;
  const ExtendedComplex gx_p = parts.g_plus(x), gx_m = parts.g_minus(x);
  const ExtendedComplex gy_p = parts.g_plus(y), gy_m = parts.g_minus(y);
  const ExtendedComplex num = (eta_w + parts.alpha_m) * gx_p * gy_p -
                              parts.beta_p * (gx_p * gy_m + gx_m * gy_p) +
                              (eta_w + parts.alpha_p) * gx_m * gy_m;
  const ExtendedComplex denom =
      ExtendedComplex(parts.eta * parts.eta) * parts.wronskian * parts.det;
  return parts.g_infinity(x, y) - num / denom;
}

namespace {

// <phi_n, e^{icx} phi-side integral>: int_{-k}^{k} sin(k_n (x+k)) e^{icx} dx.
Complex sine_exp_integral(int n, double kappa, Complex c) {
  const double k = n * kPi / (2.0 * kappa);
  const Complex denom = k * k - c * c;
  return std::exp(-kI * c * kappa) * k *
         (1.0 - (n % 2 == 0 ? 1.0 : -1.0) * std::exp(2.0 * kI * c * kappa)) / denom;
}

Complex matrix_element_free(const ModelSpec& spec, const WellEigenpair& phi, Complex z) {
  const Complex w = std::sqrt(z);
  const double kappa = spec.kappa;
  const double eta = spec.eta;
  const double k = phi.n * kPi / (2.0 * kappa);
  const double parity = (phi.n % 2 == 0) ? 1.0 : -1.0;
  const Complex k2w2 = k * k - w * w;

  const Complex g_inf = 1.0 / k2w2 + kI * k * k * (1.0 - parity * std::exp(2.0 * kI * kappa * w)) /
                                          (w * kappa * k2w2 * k2w2);

  const Complex wronskian = -2.0 * kI * w;
  const Complex pref = std::exp(kI * w * kappa) / (wronskian * std::sqrt(kappa));
  const Complex p_plus = pref * sine_exp_integral(phi.n, kappa, -w);
  const Complex p_minus = pref * sine_exp_integral(phi.n, kappa, w);

  const Complex eta_w = eta * wronskian;
  const Complex alpha = 1.0;
  const Complex beta_p = std::exp(2.0 * kI * w * kappa);
  const Complex beta_m = std::exp(-2.0 * kI * w * kappa);
  const Complex det = 1.0 + 2.0 * alpha / eta_w + beta_p * (beta_m - beta_p) / (eta_w * eta_w);

  const Complex num = (eta_w + alpha) * (p_plus * p_plus + p_minus * p_minus) -
                      2.0 * beta_p * p_plus * p_minus;
  return g_inf - num / (eta * eta * wronskian * det);
}

Complex matrix_element_quadrature(const ModelSpec& spec, const WellEigenpair& phi, Complex z) {
  const KernelParts parts = make_parts(spec, z);
  const double kappa = spec.kappa;
  const Complex wronskian = parts.wronskian.value();
  const GaussLegendre& gl = gl16();
  const int panels = 12;
  const int per_panel = static_cast<int>(gl.x.size());

  // node tables for psi * phi_n and phi_r * phi_n
  const int n_nodes = panels * per_panel;
  std::vector<double> xs(n_nodes), ws(n_nodes);
  std::vector<Complex> psi_phi(n_nodes), phir_phi(n_nodes);
  for (int p = 0; p < panels; ++p) {
    const double lo = -kappa + 2.0 * kappa * p / panels;
    const double hi = -kappa + 2.0 * kappa * (p + 1) / panels;
    for (int i = 0; i < per_panel; ++i) {
      const int idx = p * per_panel + i;
      const double x = 0.5 * (lo + hi) + 0.5 * (hi - lo) * gl.x[i];
      xs[idx] = x;
      ws[idx] = 0.5 * (hi - lo) * gl.w[i];
      psi_phi[idx] = parts.psi(x).value() * phi(x);
      phir_phi[idx] = parts.phi_r(x).value() * phi(x);
    }
  }

  Complex p_plus{0, 0}, p_minus{0, 0};
  const Complex phir_k = parts.phi_r(kappa).value();
  const Complex psi_mk = parts.psi(-kappa).value();
  for (int i = 0; i < n_nodes; ++i) {
    p_plus += ws[i] * psi_phi[i];
    p_minus += ws[i] * phir_phi[i];
  }
  p_plus *= phir_k / wronskian;
  p_minus *= psi_mk / wronskian;

  // double integral (2/W) int_{x<y} psi phi_n (x) phi_r phi_n (y)
  std::vector<Complex> panel_cumulative(panels + 1, Complex(0, 0));
  for (int p = 0; p < panels; ++p) {
    Complex acc{0, 0};
    for (int i = 0; i < per_panel; ++i) acc += ws[p * per_panel + i] * psi_phi[p * per_panel + i];
    panel_cumulative[p + 1] = panel_cumulative[p] + acc;
  }
  Complex inner{0, 0};
  for (int p = 0; p < panels; ++p) {
    const double lo = -kappa + 2.0 * kappa * p / panels;
    for (int i = 0; i < per_panel; ++i) {
      const int idx = p * per_panel + i;
      const double y = xs[idx];
      Complex j_partial{0, 0};
      for (int k = 0; k < per_panel; ++k) {
        const double xk = 0.5 * (lo + y) + 0.5 * (y - lo) * gl.x[k];
        j_partial += 0.5 * (y - lo) * gl.w[k] * parts.psi(xk).value() * phi(xk);
      }
      inner += ws[idx] * phir_phi[idx] * (panel_cumulative[p] + j_partial);
    }
  }
  const Complex g_inf = 2.0 * inner / wronskian;

  const Complex eta_w = parts.eta * wronskian;
  const Complex num = (eta_w + parts.alpha_m.value()) * p_plus * p_plus -
                      2.0 * parts.beta_p.value() * p_plus * p_minus +
                      (eta_w + parts.alpha_p.value()) * p_minus * p_minus;
  return g_inf - num / (parts.eta * parts.eta * wronskian * parts.det.value());
}

}  // namespace

Complex greens_matrix_element(const ModelSpec& spec, const WellEigenpair& phi, Complex z) {
  if (spec.kind == ModelKind::free_well) return matrix_element_free(spec, phi, z);
  return matrix_element_quadrature(spec, phi, z);
}

double spectral_density(const ModelSpec& spec, const WellEigenpair& phi, double lambda) {
  const double scale = std::max(1.0, std::abs(lambda));
  const double mus[3] = {1e-4 * scale, 1e-5 * scale, 1e-6 * scale};
  double rho[3];
  for (int i = 0; i < 3; ++i)
    rho[i] = std::imag(greens_matrix_element(spec, phi, Complex(lambda, mus[i]))) / kPi;
  // Neville extrapolation of the quadratic through (mu_i, rho_i) to mu = 0
  double p01 = (mus[0] * rho[1] - mus[1] * rho[0]) / (mus[0] - mus[1]);
  double p12 = (mus[1] * rho[2] - mus[2] * rho[1]) / (mus[1] - mus[2]);
  return (mus[0] * p12 - mus[2] * p01) / (mus[0] - mus[2]);
}

namespace {

struct Segment {
  double lo, hi;
  int steps;  // even
};

std::vector<Segment> build_grid(const ModelSpec& spec, const EnergyWindow& window, double t_max) {
  const double lo = window.a - window.delta;
  const double hi = window.b + window.delta;
  const double nyquist = kPi / (10.0 * std::max(t_max, 1e-9));
  double base = std::min((hi - lo) / 256.0, nyquist);
  // the Stark density oscillates on the scale pi f / sqrt(lambda)
  if (spec.kind == ModelKind::stark)
    base = std::min(base, kPi * spec.field / (16.0 * std::sqrt(std::max(hi, 1.0))));

  // refine near the free-model resonance peaks inside the window
  struct Peak {
    double center, width;
  };
  std::vector<Peak> peaks;
  const ModelSpec free_spec = ModelSpec::free_well(spec.kappa, spec.eta);
  for (int n = 1;; ++n) {
    const WellEigenpair pair{n, spec.kappa};
    if (pair.energy() > hi) break;
    if (pair.energy() < lo) continue;
    const Complex w = shape_root(n - 1, free_spec).w;
    const Complex zr = w * w;
    peaks.push_back({zr.real(), std::max(std::abs(zr.imag()), 1e-9)});
  }

  std::vector<double> cuts{lo, hi};
  for (const Peak& p : peaks) {
    cuts.push_back(std::clamp(p.center - 40.0 * p.width, lo, hi));
    cuts.push_back(std::clamp(p.center + 40.0 * p.width, lo, hi));
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end(),
                         [](double a, double b) { return std::abs(a - b) < 1e-12; }),
             cuts.end());

  std::vector<Segment> segments;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i], b = cuts[i + 1];
    if (b - a < 1e-12) continue;
    double spacing = base;
    for (const Peak& p : peaks)
      if (a >= p.center - 40.0 * p.width - 1e-12 && b <= p.center + 40.0 * p.width + 1e-12)
        spacing = std::min(spacing, p.width / 6.0);
    int steps = std::max(2, static_cast<int>(std::ceil((b - a) / spacing)));
    if (steps % 2) ++steps;
    segments.push_back({a, b, steps});
  }
  return segments;
}

}  // namespace

std::vector<Complex> survival_exact(const ModelSpec& spec, const WellEigenpair& phi,
                                    const EnergyWindow& window, const std::vector<double>& times,
                                    int threads) {
  double t_max = 0.0;
  for (double t : times) t_max = std::max(t_max, std::abs(t));
  const std::vector<Segment> segments = build_grid(spec, window, t_max);

  // all grid nodes, densities computed once and reused across times
  std::vector<double> lambdas;
  std::vector<size_t> seg_start;
  for (const Segment& s : segments) {
    seg_start.push_back(lambdas.size());
    for (int i = 0; i <= s.steps; ++i) lambdas.push_back(s.lo + (s.hi - s.lo) * i / s.steps);
  }
  std::vector<double> density(lambdas.size());
  parallel_for(lambdas.size(), threads,
               [&](size_t i) { density[i] = spectral_density(spec, phi, lambdas[i]); });

  std::vector<Complex> amplitudes(times.size());
  for (size_t ti = 0; ti < times.size(); ++ti) {
    const double t = times[ti];
    Complex total{0, 0};
    for (size_t si = 0; si < segments.size(); ++si) {
      const Segment& s = segments[si];
      const double h = (s.hi - s.lo) / s.steps;
      Complex acc{0, 0};
      for (int i = 0; i <= s.steps; ++i) {
        const size_t idx = seg_start[si] + i;
        const double lam = lambdas[idx];
        const double weight = (i == 0 || i == s.steps) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        acc += weight * window.chi(lam) * std::exp(-kI * lam * t) * density[idx];
      }
      total += acc * (h / 3.0);
    }
    amplitudes[ti] = total;
  }
  return amplitudes;
}

std::vector<Complex> survival_resonance_sum(const ModelSpec& free_spec, const WellEigenpair& phi,
                                            const EnergyWindow& window,
                                            const std::vector<double>& times) {
  if (free_spec.kind != ModelKind::free_well)
    throw std::invalid_argument("survival_resonance_sum: free model required");
  const double lo = window.a - window.delta;
  const double hi = window.b + window.delta;
  std::vector<Complex> amplitudes(times.size(), Complex(0, 0));
  for (int n = 1;; ++n) {
    const WellEigenpair pair{n, free_spec.kappa};
    if (pair.energy() > hi) break;
    if (pair.energy() < lo) continue;
    const double overlap = (n == phi.n && free_spec.kappa == phi.kappa) ? 1.0 : 0.0;
    if (overlap == 0.0) continue;
    const Complex w = shape_root(n - 1, free_spec).w;
    const Complex z = w * w;
    for (size_t ti = 0; ti < times.size(); ++ti)
      amplitudes[ti] += overlap * overlap * std::exp(-kI * z * times[ti]);
  }
  return amplitudes;
}

StabilityReport small_field_stability(const ModelSpec& free_spec, double f,
                                      const WellEigenpair& phi, const EnergyWindow& window,
                                      const std::vector<double>& times, int threads) {
  if (free_spec.kind != ModelKind::free_well)
    throw std::invalid_argument("small_field_stability: free model required");
  StabilityReport report;
  report.differences.assign(times.size(), 0.0);
  if (f == 0.0) return report;  // degenerate input: identical series

  const std::vector<Complex> free_amp = survival_exact(free_spec, phi, window, times, threads);
  const ModelSpec stark_spec = ModelSpec::stark(free_spec.kappa, free_spec.eta, f);
  const std::vector<Complex> stark_amp = survival_exact(stark_spec, phi, window, times, threads);
  for (size_t i = 0; i < times.size(); ++i) {
    report.differences[i] = std::abs(free_amp[i] - stark_amp[i]);
    report.sup_difference = std::max(report.sup_difference, report.differences[i]);
  }
  return report;
}

}  // namespace resonance
